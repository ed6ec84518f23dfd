"""The ``jacklr`` command line: exact computations and verification reports.

Subcommands
-----------
``jack``      monomial expansion of a Jack polynomial
``lr``        a Littlewood-Richardson coefficient in the Jack basis
``stanley``   the integer-normalized form of the same coefficient
``verify``    run a verification suite; write a JSON report, a CSV copy of
              the check table, and PNG status/timing figures next to it

Reports are deterministic for a fixed (seed, degree cap, weight bound,
sample count): re-runs differ only in the ``elapsed_ms`` fields.  Random
draws come from a seeded 64-bit linear congruential generator, never from
the global ``random`` module.  Each timed computation attributes its
elapsed time to the first row it produces; further rows derived from the
same computation carry 0 ms.

``verify`` exits 0 exactly when no check fails; the report is written
either way.  A Jack-expansion cache can be kept across runs with
``--cache-dir`` or the ``JACKLR_CACHE_DIR`` environment variable.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
import traceback
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import __version__, hookspace, petjohn, pivots, stanley
from .exact import ZERO
from .partitions import Partition, format_partition, parse_partition
from .symfunc import DEFAULT_DEGREE_CAP, JackEngine
from .stanley import FULL_MASK, X_MASK


class CliError(Exception):
    """A user-facing error: printed to stderr, exit status 2."""


# -- deterministic sampling ----------------------------------------------------------

class Lcg:
    """Seeded 64-bit linear congruential sampler.

    State update x -> (6364136223846793005*x + 1442695040888963407) mod 2^64
    (Knuth's MMIX constants); draws use the top 31 bits of the state.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & self.MASK
        return self.state >> 33

    def randint(self, n: int) -> int:
        """A draw from {0, ..., n-1}."""
        if n <= 0:
            raise ValueError("randint needs a positive range")
        return self.next() % n


# -- argument parsing ----------------------------------------------------------------

def parse_partition_arg(text: str) -> Partition:
    """Parse a comma-separated partition, reporting the position of bad input."""
    if not text.strip():
        return ()
    offset = 0
    for chunk in text.split(","):
        token = chunk.strip()
        if not token or not token.isdigit():
            pos = offset + (len(chunk) - len(chunk.lstrip()))
            raise CliError(
                f"parse error at position {pos}: expected a non-negative "
                f"integer part in {text!r}")
        offset += len(chunk) + 1
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _cache_file(cache_dir: str | None) -> Path | None:
    root = cache_dir or os.environ.get("JACKLR_CACHE_DIR")
    return Path(root) / "jack_cache.txt" if root else None


def make_engine(degree_cap: int, cache_dir: str | None) -> JackEngine:
    engine = JackEngine(degree_cap)
    path = _cache_file(cache_dir)
    if path is not None and path.exists():
        _, warnings = engine.load_cache(path)
        for message in warnings:
            print(f"warning: {message}", file=sys.stderr)
    return engine


def save_engine_cache(engine: JackEngine, cache_dir: str | None) -> None:
    path = _cache_file(cache_dir)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    engine.dump_cache(path)


# -- the computation subcommands -----------------------------------------------------

def format_symfunc(f) -> str:
    parts = []
    for lam, c in f.coeffs:
        cs = c.canonical_str()
        if not lam:
            parts.append(cs)
        elif cs == "1":
            parts.append(f"m[{format_partition(lam)}]")
        elif " " in cs or "/" in cs:
            parts.append(f"({cs})*m[{format_partition(lam)}]")
        else:
            parts.append(f"{cs}*m[{format_partition(lam)}]")
    return " + ".join(parts) if parts else "0"


def cmd_jack(args) -> int:
    engine = make_engine(args.degree_cap, args.cache_dir)
    lam = parse_partition_arg(args.lam)
    try:
        f = engine.jack(lam)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    save_engine_cache(engine, args.cache_dir)
    if args.json:
        payload = {
            "lam": format_partition(lam),
            "coefficients": {
                format_partition(mu): c.canonical_str() for mu, c in f.coeffs},
        }
        print(json.dumps(payload, indent=2))
    else:
        print(format_symfunc(f))
    return 0


def _coefficient_command(args, kind: str) -> int:
    engine = make_engine(args.degree_cap, args.cache_dir)
    mu = parse_partition_arg(args.mu)
    nu = parse_partition_arg(args.nu)
    lam = parse_partition_arg(args.lam)
    try:
        if kind == "lr":
            value = engine.lr_coefficient(mu, nu, lam)
        else:
            value = engine.stanley_coefficient(mu, nu, lam)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    save_engine_cache(engine, args.cache_dir)
    if args.json:
        payload = {
            "mu": format_partition(mu),
            "nu": format_partition(nu),
            "lam": format_partition(lam),
            "value": value.canonical_str(),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(value.canonical_str())
    return 0


def cmd_lr(args) -> int:
    return _coefficient_command(args, "lr")


def cmd_stanley(args) -> int:
    return _coefficient_command(args, "stanley")


# -- verification rows ---------------------------------------------------------------

def _row(name: str, status: str, details: str = "",
         witnesses=(), elapsed_ms: int = 0) -> dict:
    witnesses = [w for w in witnesses if w]
    if status == "fail" and not witnesses:
        witnesses = [details or name]
    return {"name": name, "status": status, "details": details,
            "witnesses": witnesses, "elapsed_ms": int(elapsed_ms)}


def _rows_from_report(suite: str, report: dict, elapsed_ms: int) -> list[dict]:
    """Flatten a module report ({name, passed, checks}) into CLI rows."""
    rows = []
    for i, check in enumerate(report["checks"]):
        rows.append(_row(
            f"{suite}/{check['name']}",
            "pass" if check["passed"] else "fail",
            report["name"],
            [check.get("witness")],
            elapsed_ms if i == 0 else 0))
    return rows


def _ms(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def suite_pivots(args, engine, rng) -> list[dict]:
    rows = []
    t0 = time.perf_counter()
    corpus = pivots.run_congruence_corpus(args.max_weight, engine,
                                          jobs=args.jobs)
    elapsed = _ms(t0)
    counterexamples = "0" if corpus["passed"] else "at least one"
    rows.append(_row(
        "pivots/adjacent congruence corpus",
        "pass" if corpus["passed"] else "fail",
        f"{corpus['pairs']} adjacent pairs with weight <= {args.max_weight}; "
        f"{corpus['checked']} checked, {len(corpus['skipped'])} skipped, "
        f"{counterexamples} counterexamples",
        [c.get("witness") for c in corpus["checks"]],
        elapsed))
    if corpus["skipped"]:
        sample = corpus["skipped"][0]["reason"]
        rows.append(_row(
            "pivots/pairs beyond the degree cap",
            "skip",
            f"{len(corpus['skipped'])} pairs not checked ({sample})",
            [entry["pair"] for entry in corpus["skipped"][:5]]))

    t0 = time.perf_counter()
    rep = pivots.verify_all_correspondences(6)
    rows += _rows_from_report("pivots", rep, _ms(t0))

    t0 = time.perf_counter()
    rep = pivots.verify_random_correspondences(args.samples, rng.randint)
    rows += _rows_from_report("pivots", rep, _ms(t0))
    return rows


def suite_stanley(args, engine, rng) -> list[dict]:
    rows = []
    g = stanley.build_gstar()

    t0 = time.perf_counter()
    by_coeff: dict[Fraction, int] = {}
    for c in g.terms.values():
        by_coeff[c] = by_coeff.get(c, 0) + 1
    shape_ok = (len(g.terms) == 26
                and by_coeff == {Fraction(7): 1, Fraction(-2): 10,
                                 Fraction(1): 15}
                and g.terms.get(X_MASK) == 7)
    rows.append(_row(
        "stanley/26-term rule shape", "pass" if shape_ok else "fail",
        "one diagram with coefficient 7, ten with -2, fifteen with +1",
        [] if shape_ok else [repr(sorted(g.terms.items()))],
        _ms(t0)))

    t0 = time.perf_counter()
    lhs = stanley.evaluate(g, stanley.root_context())
    rhs = engine.lr_coefficient((2, 1), (2, 1), (3, 2, 1))
    rows.append(_row(
        "stanley/root evaluation equals the Jack coefficient",
        "pass" if lhs == rhs else "fail",
        "26-term hook-ratio sum at the root triple (2,1),(2,1),(3,2,1)",
        [lhs.canonical_str(), rhs.canonical_str()],
        _ms(t0)))

    t0 = time.perf_counter()
    xbar = ~X_MASK & FULL_MASK
    k_xbar = stanley.k_transform(g, xbar)
    k_x = stanley.k_transform(g, X_MASK)
    k_conj = stanley.k_transform(g.conjugate(), xbar)

    def size(mask: int) -> int:
        return bin(mask).count("1")

    def case_formula(mask: int) -> Fraction:
        n = size(mask)
        if n == 0:
            return Fraction(2)
        if n == 1:
            return Fraction(1)
        return Fraction(1 if n == 2 and stanley.induced_edges(mask) else 0)

    ok_case = all(k_xbar[I] == case_formula(I) for I in range(FULL_MASK + 1))
    elapsed = _ms(t0)
    rows.append(_row(
        "stanley/K-values match the sparse case formula",
        "pass" if ok_case else "fail",
        "relative to the flipped reference: 2, 1, 1 on edges, else 0 "
        "(1024 subsets)", [], elapsed))

    ok_conj = all(
        k_x[I] == 2 - size(I) + stanley.induced_edges(I)
        and k_conj[I] == k_x[I]
        for I in range(FULL_MASK + 1))
    rows.append(_row(
        "stanley/conjugate K-values equal 2 - |I| + e_I",
        "pass" if ok_conj else "fail",
        "the same subsets through the conjugated sum (1024 subsets)"))

    low = all(k_xbar[I] == k_conj[I]
              for I in range(FULL_MASK + 1) if size(I) < 3)
    high = any(k_xbar[I] != k_conj[I]
               for I in range(FULL_MASK + 1) if size(I) >= 3)
    rows.append(_row(
        "stanley/sum and conjugate agree exactly up to pairs",
        "pass" if (low and high) else "fail",
        "equal K-values for |I| < 3, differing somewhere beyond"))

    t0 = time.perf_counter()
    ok_mobius = (stanley.k_inverse(k_xbar, xbar).terms == g.terms
                 and stanley.k_inverse(k_x, X_MASK).terms == g.terms)
    rows.append(_row(
        "stanley/K-transform inverts by Mobius summation",
        "pass" if ok_mobius else "fail",
        "round trip through both references", [], _ms(t0)))

    t0 = time.perf_counter()
    w_xbar = stanley.ell_weights(g, xbar)
    w_ref = stanley.ell_weights(g, stanley.ELL_REFERENCE)
    moved = xbar ^ stanley.ELL_REFERENCE
    ok_cov = all(
        w_ref[J] == (-1) ** size(J & moved) * w_xbar[J]
        for J in range(FULL_MASK + 1))
    rows.append(_row(
        "stanley/ell weights flip sign per moved reference box",
        "pass" if ok_cov else "fail",
        "weight covariance between the two references (1024 subsets)",
        [], _ms(t0)))

    t0 = time.perf_counter()
    bad_kernel = []
    for box in stanley.FREE_BOXES:
        left, right = stanley.kernel_identity_sides(
            *hookspace.claw_kernel_data(box))
        if left != right:
            bad_kernel.append(f"{box}: {left.canonical_str()} != "
                              f"{right.canonical_str()}")
    rows.append(_row(
        "stanley/kernel identity holds for all ten claws",
        "pass" if not bad_kernel else "fail",
        "frame polynomial of the kernel sum equals the factored form",
        bad_kernel[:3], _ms(t0)))

    t0 = time.perf_counter()
    bad_gen = [gen for gen in stanley.GENERATOR_POINT_MAPS
               if stanley.apply_generator(g, gen).terms != g.terms]
    rows.append(_row(
        "stanley/signed generator actions fix the 26-term rule",
        "pass" if not bad_gen else "fail",
        "the four signed box actions map the sum to itself",
        bad_gen, _ms(t0)))
    return rows


def suite_hookspace(args, engine, rng) -> list[dict]:
    rows = []

    t0 = time.perf_counter()
    bad_claws = []
    for index in range(args.samples):
        window = hookspace.sample_window_params(rng.randint)
        for box, value in hookspace.hook_table(window).claw_values().items():
            if not value.is_zero():
                bad_claws.append(
                    f"window {index} ({window}), claw {box}: "
                    f"{value.canonical_str()}")
    rows.append(_row(
        "hookspace/ten claw relations vanish on random windows",
        "pass" if not bad_claws else "fail",
        f"{args.samples} windows drawn from {{0..4}}^8 with r2*n4 = 0",
        bad_claws[:3], _ms(t0)))

    t0 = time.perf_counter()
    claw_rows = []
    for box in stanley.FREE_BOXES:
        row = [Fraction(0)] * len(stanley.FREE_BOXES)
        row[stanley.BOX_BIT[box]] = Fraction(1)
        for nbr in stanley.NEIGHBORS[box]:
            row[stanley.BOX_BIT[nbr]] = Fraction(-1)
        claw_rows.append(row)
    rank = petjohn.rational_rank(claw_rows)
    rows.append(_row(
        "hookspace/claw span leaves exactly five free hooks",
        "pass" if rank == 5 else "fail",
        f"rank of the ten claw forms is {rank}; 10 - {rank} hooks remain free",
        [] if rank == 5 else [str(rank)], _ms(t0)))

    t0 = time.perf_counter()
    table = hookspace.symbolic_hook_table()
    substitution = {f"h_{b}": table[(b, "U")] for b in hookspace.FREE_HOOKS}
    substitution["b"] = hookspace.BETA_SHIFT
    bad_res = []
    for box, expr in hookspace.RESOLUTIONS.items():
        expected = hookspace._reduce_r2n4(expr.substitute(substitution))
        if table[(box, "U")] != expected:
            bad_res.append(f"{box}: {table[(box, 'U')].canonical_str()}")
    rows.append(_row(
        "hookspace/dependent hooks resolve through the free five",
        "pass" if not bad_res else "fail",
        "formal window parameters, reduced modulo r2*n4",
        bad_res[:3], _ms(t0)))

    t0 = time.perf_counter()
    for name, (func, preimage) in hookspace.KERNEL_FUNCTIONS.items():
        image = hookspace.one_minus_adjacency(preimage)
        target = {b: Fraction(v) for b, v in func.items() if v}
        form = ZERO
        for box, value in func.items():
            form = form + stanley.ell_var(box) * Fraction(value)
        ok = (image == target
              and hookspace.in_claw_span(target)
              and hookspace.pullback(form).is_zero())
        rows.append(_row(
            f"hookspace/kernel function {name} dies in the quotient",
            "pass" if ok else "fail",
            "a (1 - adjacency) image inside the claw span",
            [] if ok else [repr(image)],
            _ms(t0) if name == "f1" else 0))

    t0 = time.perf_counter()
    rep = hookspace.verify_all_hyperplanes()
    rows += _rows_from_report("hookspace", rep, _ms(t0))

    t0 = time.perf_counter()
    rep = hookspace.verify_e_expansion()
    rows += _rows_from_report("hookspace", rep, _ms(t0))

    t0 = time.perf_counter()
    rep = hookspace.verify_nonnegativity(engine)
    rows += _rows_from_report("hookspace", rep, _ms(t0))
    return rows


def suite_symmetry(args, engine, rng) -> list[dict]:
    rows = []
    t0 = time.perf_counter()
    rep = hookspace.verify_odd_vanishing()
    rows += _rows_from_report("symmetry", rep, _ms(t0))

    t0 = time.perf_counter()
    rep = hookspace.verify_sigma56_invariance()
    rows += _rows_from_report("symmetry", rep, _ms(t0))
    return rows


def suite_graphs(args, engine, rng) -> list[dict]:
    rows = []
    t0 = time.perf_counter()
    order4 = petjohn.rho(petjohn.CANONICAL_PENTAGON)

    def as_mask(triple):
        return petjohn.mask_from(p - 1 for p in triple)

    bad_cycles = []
    for cycle in petjohn.RHO_FOUR_CYCLES:
        masks = [as_mask(t) for t in cycle]
        for i in range(4):
            if order4[masks[i]] != masks[(i + 1) % 4]:
                bad_cycles.append(f"{cycle} breaks at position {i}")
    rows.append(_row(
        "graphs/rho four-cycles match the pinned table",
        "pass" if not bad_cycles else "fail",
        "five orbits (T, rho T, T^c, rho(T)^c) of the canonical pentagon",
        bad_cycles[:3], _ms(t0)))

    ok_square = all(order4[order4[T]] == petjohn.complement6(T)
                    for T in petjohn.JOHNSON_VERTICES)
    rows.append(_row(
        "graphs/rho squared is complementation",
        "pass" if ok_square else "fail",
        "checked on all twenty 3-subsets"))

    t0 = time.perf_counter()
    embeddings = petjohn.all_embeddings()
    faithful = all(
        len(set(emb.values())) == 10
        and all(petjohn.petersen_adjacent(a, b)
                == petjohn.johnson_adjacent(emb[a], emb[b])
                for i, a in enumerate(petjohn.PETERSEN_VERTICES)
                for b in petjohn.PETERSEN_VERTICES[i + 1:])
        for emb in embeddings)
    ok_emb = len(embeddings) == 12 and faithful
    rows.append(_row(
        "graphs/twelve adjacency-faithful embeddings",
        "pass" if ok_emb else "fail",
        f"{len(embeddings)} distinct duad-to-triple maps, each injective "
        "with Petersen adjacency matching Johnson adjacency",
        [] if ok_emb else [str(len(embeddings))], _ms(t0)))

    t0 = time.perf_counter()
    gamma = petjohn.gamma_embedding(petjohn.CANONICAL_PENTAGON)
    generators = petjohn.intertwiner_generators()
    bad_twine = []
    for k, sigma in enumerate(petjohn.DUAD_TRANSPOSITIONS):
        S = generators[k]
        for d in petjohn.PETERSEN_VERTICES:
            if S.apply(gamma[d]) != gamma[petjohn.apply_point_perm(sigma, d)]:
                bad_twine.append(f"generator {k + 1} at duad {d}")
    rows.append(_row(
        "graphs/generators intertwine the embedding",
        "pass" if not bad_twine else "fail",
        "first four signed generators against the duad transpositions, "
        "all ten duads each", bad_twine[:3], _ms(t0)))

    identity = petjohn.SignedPermutation(1, petjohn.POINTS)
    S = list(generators)
    involutions = all(s.compose(s) == identity for s in S)
    braids = all(
        S[i].compose(S[i + 1]).compose(S[i]) == S[i + 1].compose(S[i]).compose(S[i + 1])
        for i in range(4))
    commuting = all(S[i].compose(S[j]) == S[j].compose(S[i])
                    for i in range(5) for j in range(i + 2, 5))
    ok_coxeter = involutions and braids and commuting
    rows.append(_row(
        "graphs/five generators satisfy the Coxeter relations",
        "pass" if ok_coxeter else "fail",
        "involutions, adjacent braids, distant commutation"))

    t0 = time.perf_counter()
    try:
        lift = petjohn.sigma56_on_ell()
        flips = sorted(b for b, (_, s) in lift.items() if s < 0)
        ok_lift = (len(lift) == 10
                   and all(lift[lift[b][0]][0] == b
                           and lift[b][1] == lift[lift[b][0]][1]
                           for b in lift)
                   and len(flips) % 2 == 0)
        witness = ["flips: " + ",".join(flips)]
    except KeyError as exc:
        ok_lift, witness = False, [f"image not in the embedded set: {exc}"]
    rows.append(_row(
        "graphs/sixth generator lifts to a signed involution",
        "pass" if ok_lift else "fail",
        "its action through the canonical embedding, triples modulo "
        "complement", witness, _ms(t0)))

    t0 = time.perf_counter()
    matches = petjohn.appendix_matching_pentagons()
    ok_match = (len(matches) == 2
                and matches[0][0] == matches[1][0]
                and matches[1][1].white == matches[0][1].black)
    rows.append(_row(
        "graphs/triple table comes from one pentagon pair",
        "pass" if ok_match else "fail",
        "a unique point relabeling with the two color-swapped pentagons",
        [] if ok_match else [str(len(matches))], _ms(t0)))

    t0 = time.perf_counter()
    pet = petjohn.petersen_spectrum()
    ok_pet = pet == {3: 1, 1: 5, -2: 4}
    rows.append(_row(
        "graphs/Petersen spectrum is 3, 1^5, (-2)^4",
        "pass" if ok_pet else "fail",
        "exact eigenspace dimensions by rational rank",
        [] if ok_pet else [repr(pet)], _ms(t0)))

    t0 = time.perf_counter()
    joh = petjohn.johnson_spectrum()
    ok_joh = joh == {9: 1, 3: 5, -1: 9, -3: 5}
    rows.append(_row(
        "graphs/Johnson spectrum is 9, 3^5, (-1)^9, (-3)^5",
        "pass" if ok_joh else "fail",
        "exact eigenspace dimensions by rational rank",
        [] if ok_joh else [repr(joh)], _ms(t0)))
    return rows


def suite_fixtures(args, engine, rng) -> list[dict]:
    rows = []
    t0 = time.perf_counter()
    rep = pivots.verify_fixture_congruences()
    rows += _rows_from_report("fixtures", rep, _ms(t0))
    rows.append(_row(
        "fixtures/three printed families verified",
        "pass" if rep["passed"] else "fail",
        "straight, shifted, and two-parameter coefficient fixtures"))
    return rows


SUITE_ORDER = ("pivots", "stanley", "hookspace", "symmetry", "graphs",
               "fixtures")
SUITES = {
    "pivots": suite_pivots,
    "stanley": suite_stanley,
    "hookspace": suite_hookspace,
    "symmetry": suite_symmetry,
    "graphs": suite_graphs,
    "fixtures": suite_fixtures,
}


# -- report assembly -----------------------------------------------------------------

def report_schema() -> dict:
    text = (resources.files("jacklr") / "report_schema.json").read_text()
    return json.loads(text)


def build_report(args, rows: list[dict]) -> dict:
    return {
        "meta": {
            "version": __version__,
            "seed": args.seed,
            "degree_cap": args.degree_cap,
            "corpus_bound": args.max_weight,
        },
        "checks": rows,
    }


def _validate_report(report: dict) -> None:
    try:
        import jsonschema
    except ModuleNotFoundError:
        return
    jsonschema.validate(report, report_schema())


def render_figures(report: dict, out_path: Path) -> list[Path]:
    """Status and timing figures next to the report, deterministic pixels."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    colors = {"pass": "#3a7d44", "fail": "#c0392b", "skip": "#e0a106"}
    checks = report["checks"]

    suites: dict[str, dict[str, int]] = {}
    for check in checks:
        suite = check["name"].split("/", 1)[0]
        counts = suites.setdefault(suite, {"pass": 0, "fail": 0, "skip": 0})
        counts[check["status"]] += 1

    status_path = out_path.with_name(out_path.stem + "_status.png")
    fig, ax = plt.subplots(figsize=(7, 1 + 0.5 * len(suites)))
    names = list(suites)
    base = [0] * len(names)
    for status in ("pass", "fail", "skip"):
        values = [suites[s][status] for s in names]
        ax.barh(names, values, left=base, color=colors[status], label=status)
        base = [b + v for b, v in zip(base, values)]
    ax.invert_yaxis()
    ax.set_xlabel("checks")
    ax.set_title("verification status by suite")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(status_path, dpi=120, metadata={"Software": None})
    plt.close(fig)

    timing_path = out_path.with_name(out_path.stem + "_timing.png")
    slowest = sorted(checks, key=lambda c: (-c["elapsed_ms"], c["name"]))[:15]
    fig, ax = plt.subplots(figsize=(8, 1 + 0.4 * len(slowest)))
    labels = [c["name"][:56] for c in slowest]
    values = [c["elapsed_ms"] for c in slowest]
    bars = [colors[c["status"]] for c in slowest]
    ax.barh(labels, values, color=bars)
    ax.invert_yaxis()
    ax.set_xlabel("elapsed (ms)")
    ax.set_title("slowest checks")
    fig.tight_layout()
    fig.savefig(timing_path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return [status_path, timing_path]


def write_report(report: dict, out_path: Path) -> list[Path]:
    _validate_report(report)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(json.dumps(report, indent=2) + "\n")

    csv_path = out_path.with_suffix(".csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "status", "details", "witnesses",
                         "elapsed_ms"])
        for check in report["checks"]:
            writer.writerow([
                check["name"], check["status"], check["details"],
                " | ".join(check["witnesses"]), check["elapsed_ms"]])

    return [out_path, csv_path, *render_figures(report, out_path)]


def cmd_verify(args) -> int:
    engine = make_engine(args.degree_cap, args.cache_dir)
    rng = Lcg(args.seed)
    if args.jobs is None:
        args.jobs = os.cpu_count() or 1

    rows: list[dict] = []
    names = SUITE_ORDER if args.suite == "all" else (args.suite,)
    for name in names:
        try:
            rows.extend(SUITES[name](args, engine, rng))
        except Exception:  # noqa: BLE001 - a crash is a failing check
            rows.append(_row(
                f"{name}/suite raised an exception", "fail",
                "unexpected error while composing the suite",
                [traceback.format_exc(limit=8)]))
    save_engine_cache(engine, args.cache_dir)

    report = build_report(args, rows)
    paths = write_report(report, Path(args.out))

    for row in rows:
        details = f" -- {row['details']}" if row["details"] else ""
        print(f"{row['status'].upper():<5} {row['name']}{details} "
              f"({row['elapsed_ms']} ms)")
    failures = sum(r["status"] == "fail" for r in rows)
    skips = sum(r["status"] == "skip" for r in rows)
    print(f"{'FAIL' if failures else 'PASS'}: {len(rows)} checks, "
          f"{failures} failed, {skips} skipped")
    print("written: " + ", ".join(str(p) for p in paths))
    return 1 if failures else 0


# -- argument wiring -----------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP,
                        help="largest symmetric-function degree the engine "
                             "will expand (default %(default)s)")
    parser.add_argument("--cache-dir", default=None,
                        help="directory holding the Jack expansion cache "
                             "(default: $JACKLR_CACHE_DIR when set)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacklr",
        description="Exact Jack coefficient computations and the "
                    "verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_jack = sub.add_parser("jack", help="monomial expansion of a Jack "
                                         "polynomial")
    p_jack.add_argument("--lam", required=True, help="partition, e.g. 3,2,1")
    p_jack.add_argument("--json", action="store_true")
    _add_common(p_jack)
    p_jack.set_defaults(func=cmd_jack)

    for name, func, description in (
            ("lr", cmd_lr, "Littlewood-Richardson coefficient in the Jack "
                           "basis"),
            ("stanley", cmd_stanley, "integer-normalized coefficient")):
        p = sub.add_parser(name, help=description)
        p.add_argument("--mu", required=True)
        p.add_argument("--nu", required=True)
        p.add_argument("--lam", required=True)
        p.add_argument("--json", action="store_true")
        _add_common(p)
        p.set_defaults(func=func)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_ORDER + ("all",))
    p_verify.add_argument("--max-weight", type=int, default=7,
                          help="largest |mu| + |nu| in the congruence corpus "
                               "(default %(default)s)")
    p_verify.add_argument("--samples", type=int, default=200,
                          help="random draws per sampled check "
                               "(default %(default)s)")
    p_verify.add_argument("--seed", type=int, default=42,
                          help="seed of the deterministic sampler "
                               "(default %(default)s)")
    p_verify.add_argument("--jobs", type=int, default=None,
                          help="worker processes for the congruence corpus "
                               "(default: available parallelism)")
    p_verify.add_argument("--out", default="report.json",
                          help="report path (default %(default)s); the CSV "
                               "and PNG outputs are written next to it")
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Window hook tables and the five-variable hook-space quotient.

The eight-parameter window family attaches to every box of the fixed
(2,1),(2,1) -> (3,2,1) frame a pair of hook polynomials in alpha.  All ten
free hooks turn out to be integer-affine combinations of five of them
(a1, a3, b1, bt3, c3) and the shift beta = alpha - 1; the claw relations of
the Petersen box graph express the other five.  This module builds the
tables, performs the pullback of ell-polynomials into the resulting
five-plus-one variable quotient, and machine-checks the quotient-level
structure of the 26-term sum: vanishing of the odd orbit-graded slices,
conjugation and sigma_56 invariance, collapse to a single diagram on each
of the twenty hook hyperplanes, the elementary-symmetric form after
untwisting to six balanced coordinates, and the non-negativity statements.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exact import (ALPHA, BETA, MultiPoly, ONE, ZERO, XVARS,
                    elementary_to_x, exact_div, expand_in_elementary,
                    expand_in_monomial_symmetric)
from . import petjohn
from . import stanley

# Numeric value of the shift between the two hooks of one box.
BETA_SHIFT = ALPHA - 1

PARAM_NAMES = ("m1", "m2", "m3", "n1", "n2", "n4", "r1", "r2")

# The five free hooks generating the quotient, in the order used throughout.
FREE_HOOKS = ("a1", "a3", "b1", "bt3", "c3")
DEPENDENT_HOOKS = ("a2", "b2", "c2", "c4", "c5")

ALL_BOXES = ("a1", "a2", "a3", "b1", "b2", "b3", "bt3",
             "c1", "c2", "c3", "c4", "c5", "c6")


# -- window parameters and hook tables ----------------------------------------------

@dataclass(frozen=True)
class WindowParams:
    """Window coordinates of the family over the root triple."""

    m1: int = 0
    m2: int = 0
    m3: int = 0
    n1: int = 0
    n2: int = 0
    n4: int = 0
    r1: int = 0
    r2: int = 0

    def __post_init__(self):
        for name in PARAM_NAMES:
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError("window parameters must be non-negative")
        if self.r2 * self.n4 != 0:
            raise ValueError("r2*n4 must be 0")


def _reduce_r2n4(p: MultiPoly) -> MultiPoly:
    """Drop every monomial divisible by r2*n4 (zero under the constraint)."""
    if "r2" not in p.vars or "n4" not in p.vars:
        return p
    i, j = p.vars.index("r2"), p.vars.index("n4")
    kept = {e: c for e, c in p.terms.items() if not (e[i] and e[j])}
    return MultiPoly(p.vars, kept, _sorted=True)


def _div_alpha(p: MultiPoly) -> MultiPoly:
    """Exact quotient by alpha of a (possibly multivariate) polynomial."""
    if "a" not in p.vars:
        if p.is_zero():
            return p
        raise AssertionError("not divisible by alpha")
    i = p.vars.index("a")
    if any(e[i] == 0 for e in p.terms):
        raise AssertionError("not divisible by alpha")
    terms = {tuple(x - (j == i) for j, x in enumerate(e)): c
             for e, c in p.terms.items()}
    return MultiPoly(p.vars, terms, _sorted=True)


def _upper_rows(v: dict[str, MultiPoly]) -> dict[str, MultiPoly]:
    a = ALPHA
    return {
        "a1": v["m1"] + a * (v["n1"] + 1),
        "a2": v["m1"] + v["m2"] + v["r1"] + 1 + a * (v["n1"] + v["n2"] + 2),
        "a3": v["m2"] + a * (v["n2"] + 1),
        "b1": v["m3"] + a,
        "b2": v["m3"] + v["r1"] + v["r2"] + 1 + a * (v["n4"] + 2),
        "b3": a * (v["n4"] + 1),
        "c1": a,
        "c2": v["m1"] + v["m3"] + v["r1"] + 1 + a * (v["n1"] + 2),
        "c3": v["r1"] + a,
        "c4": (v["m1"] + v["m2"] + v["m3"] + v["r1"] + v["r2"] + 2
               + a * (v["n1"] + v["n2"] + v["n4"] + 3)),
        "c5": v["m2"] + v["r1"] + v["r2"] + 1 + a * (v["n2"] + v["n4"] + 2),
        "c6": v["r2"] + a,
    }


class HookTable:
    """Both hooks of all thirteen boxes, as exact polynomials in alpha.

    Rows are keyed by (box, "U"/"L"); the virtual rows ("bt3", *) are the
    bound-bundle products divided exactly by alpha.  The table is usable
    directly as a hook context for stanley.evaluate and friends.
    """

    def __init__(self, rows: dict[tuple[str, str], MultiPoly],
                 reducer=None):
        self.rows = dict(rows)
        self.reducer = reducer
        for box in ALL_BOXES:
            diff = self.rows[(box, "U")] - self.rows[(box, "L")]
            if diff != BETA_SHIFT:
                raise AssertionError(f"hook shift broken at {box}")

    def __getitem__(self, key: tuple[str, str]) -> MultiPoly:
        return self.rows[key]

    def ell(self, box: str) -> MultiPoly:
        """The signed coordinate x_b*(h_b^U + h_b^L) of a free box."""
        sign = X_SIGN[box]
        return (self.rows[(box, "U")] * 2 - BETA_SHIFT) * sign

    def claw_values(self) -> dict[str, MultiPoly]:
        """ell_b - sum of neighbour ells for the ten free boxes."""
        out = {}
        for box in stanley.FREE_BOXES:
            total = self.ell(box)
            for nbr in stanley.NEIGHBORS[box]:
                total = total - self.ell(nbr)
            out[box] = self.reducer(total) if self.reducer else total
        return out

    def product(self, mask: int) -> MultiPoly:
        """Product of the chosen hooks of the ten free boxes of a diagram."""
        prod = ONE
        for box in stanley.FREE_BOXES:
            prod = prod * self.rows[(box, stanley.choice(mask, box))]
        return prod

    def evaluate_sum(self, s: stanley.StanleySum) -> MultiPoly:
        """Sum of chosen-hook products over a Stanley sum's diagrams."""
        total = ZERO
        for mask, c in s.terms.items():
            total = total + self.product(mask) * c
        return total


def _build_table(values: dict[str, MultiPoly], reducer=None) -> HookTable:
    upper = _upper_rows(values)
    rows: dict[tuple[str, str], MultiPoly] = {}
    for box, up in upper.items():
        rows[(box, "U")] = up
        rows[(box, "L")] = up - BETA_SHIFT
    for up in ("U", "L"):
        dn = "L" if up == "U" else "U"
        bundle = rows[("b3", up)] * rows[("c1", dn)] * rows[("c6", up)]
        virtual = _div_alpha(bundle)
        rows[("bt3", up)] = reducer(virtual) if reducer else virtual
    return HookTable(rows, reducer)


def hook_table(p: WindowParams) -> HookTable:
    """The thirteen-row hook table of one window."""
    values = {name: MultiPoly.constant(getattr(p, name))
              for name in PARAM_NAMES}
    return _build_table(values)


@lru_cache(maxsize=1)
def symbolic_hook_table() -> HookTable:
    """The table over formal parameters, reduced modulo r2*n4."""
    values = {name: MultiPoly.var(name) for name in PARAM_NAMES}
    return _build_table(values, _reduce_r2n4)


def sample_window_params(randint) -> WindowParams:
    """Draw a window from {0..4}^8, zeroing r2 or n4 by a parity draw."""
    values = dict(zip(PARAM_NAMES, (randint(5) for _ in PARAM_NAMES)))
    values["r2" if randint(2) else "n4"] = 0
    return WindowParams(**values)


# -- the five-variable quotient ------------------------------------------------------

X_SIGN = stanley.sign_vector(stanley.ELL_REFERENCE)

_H = {box: MultiPoly.var(f"h_{box}") for box in FREE_HOOKS}

# The five dependent upper hooks expressed through the free ones and beta.
RESOLUTIONS = {
    "a2": _H["a1"] + _H["a3"] + _H["c3"] - BETA,
    "b2": _H["b1"] + _H["c3"] + _H["bt3"] - BETA,
    "c5": _H["a3"] + _H["c3"] + _H["bt3"] - BETA,
    "c4": _H["a1"] + _H["a3"] + _H["b1"] + _H["c3"] + _H["bt3"] - BETA * 2,
    "c2": _H["a1"] + _H["b1"] + _H["c3"] - BETA,
}

QUOTIENT_VARS = frozenset(f"h_{box}" for box in FREE_HOOKS) | {"b"}

ELL_VARS = frozenset(f"l_{box}" for box in stanley.FREE_BOXES) | {"b"}


def hook_symbol(box: str) -> MultiPoly:
    """The upper hook of a free box as a canonical quotient polynomial."""
    if box in _H:
        return _H[box]
    return RESOLUTIONS[box]


@dataclass(frozen=True)
class QuotientPoly:
    """Canonical representative in the five free hooks and beta."""

    poly: MultiPoly

    def __post_init__(self):
        stray = set(self.poly.vars) - QUOTIENT_VARS
        if stray:
            raise ValueError(f"not a quotient polynomial: {sorted(stray)}")

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def canonical_str(self) -> str:
        return self.poly.canonical_str()


def pullback(p: MultiPoly) -> QuotientPoly:
    """Push an ell-polynomial into the quotient.

    Substitutes ell_b = x_b*(2 h_b^U - beta) and resolves the dependent
    hooks; the result is the canonical representative.
    """
    stray = set(p.vars) - ELL_VARS
    if stray:
        raise ValueError(f"not an ell polynomial: {sorted(stray)}")
    bindings = {
        f"l_{box}": (hook_symbol(box) * 2 - BETA) * X_SIGN[box]
        for box in stanley.FREE_BOXES
    }
    return QuotientPoly(p.substitute(bindings))


def claw_ell(box: str) -> MultiPoly:
    """The claw relation ell_b - sum of neighbour ells."""
    total = stanley.ell_var(box)
    for nbr in stanley.NEIGHBORS[box]:
        total = total - stanley.ell_var(nbr)
    return total


def claw_kernel_data(box: str) -> tuple[dict[str, Fraction], Fraction, int]:
    """Coefficients, beta coefficient and frame of the four-term relation.

    The relation -x_b h_b + sum of x_a h_a over neighbours - beta vanishes
    on every window when the hooks carry the reference choices; it equals
    -1/2 times the claw in the ell coordinates.
    """
    coeffs = {box: Fraction(-X_SIGN[box])}
    for nbr in stanley.NEIGHBORS[box]:
        coeffs[nbr] = Fraction(X_SIGN[nbr])
    return coeffs, Fraction(-1), stanley.ELL_REFERENCE


def in_claw_span(coeffs: dict[str, Fraction]) -> bool:
    """Whether an ell-linear form lies in the span of the ten claws."""
    claws = []
    for box in stanley.FREE_BOXES:
        row = [Fraction(0)] * len(stanley.FREE_BOXES)
        row[stanley.BOX_BIT[box]] = Fraction(1)
        for nbr in stanley.NEIGHBORS[box]:
            row[stanley.BOX_BIT[nbr]] = Fraction(-1)
        claws.append(row)
    target = [Fraction(coeffs.get(box, 0)) for box in stanley.FREE_BOXES]
    return petjohn.rational_rank(claws) == petjohn.rational_rank(claws + [target])


def one_minus_adjacency(g: dict[str, Fraction]) -> dict[str, Fraction]:
    """(1 - A) applied to a vertex function on the box graph."""
    out = {}
    for box in stanley.FREE_BOXES:
        value = Fraction(g.get(box, 0))
        for nbr in stanley.NEIGHBORS[box]:
            value -= Fraction(g.get(nbr, 0))
        if value:
            out[box] = value
    return out


# The kernel functions used by the orbit-sum decompositions, each the
# (1 - A) image of an explicit vertex function.
KERNEL_FUNCTIONS = {
    "f1": ({"c4": 1, "c3": -1, "b2": 1, "a2": 1}, {"c3": -1}),
    "f2": ({"c2": 1, "c5": 1, "b2": 1, "a2": 1}, {"c4": -1, "c3": -1}),
    "f3": ({"c4": 1, "bt3": 1, "a1": 1, "c3": 1, "a3": 1, "b1": 1},
           {"c4": -1, "c2": -1, "c5": -1}),
    "fGamma": ({box: 1 for box in stanley.FREE_BOXES},
               {box: Fraction(-1, 2) for box in stanley.FREE_BOXES}),
}


# -- orbit-graded slices -------------------------------------------------------------

def subset_weight(mask: int) -> Fraction:
    """The orbit-sum weight 2 e_I - |I| + 1 of a vertex subset."""
    return Fraction(stanley.closed_form_weight(mask), 2)


def orbit_sum(k: int) -> MultiPoly:
    """The degree-k orbit-graded slice T_k of the ell form.

    T_k weights each square-free ell-monomial of degree k by the subset
    weight of its complement; the slices regroup as
    2 * sum over k of beta^(10-k) * T_k = positive_ell_form().
    """
    if not 0 <= k <= 10:
        raise ValueError("slice degree must be between 0 and 10")
    total = ZERO
    for subset in combinations(stanley.FREE_BOXES, k):
        w = subset_weight(stanley.FULL_MASK ^ stanley.mask_of(subset))
        if not w:
            continue
        term = MultiPoly.constant(w)
        for box in subset:
            term = term * stanley.ell_var(box)
        total = total + term
    return total


@lru_cache(maxsize=1)
def main_ell_form() -> MultiPoly:
    """The ell-and-beta polynomial of the 26-term sum (scale 2^10)."""
    return stanley.ell_expansion(stanley.build_gstar())


@lru_cache(maxsize=1)
def positive_ell_form() -> MultiPoly:
    """The orientation of the ell form whose pure-beta coefficient is +42."""
    return -main_ell_form()


@lru_cache(maxsize=1)
def main_quotient() -> QuotientPoly:
    return pullback(main_ell_form())


# -- reports -------------------------------------------------------------------------

def _check(name: str, passed: bool, witness: str | None = None) -> dict:
    entry = {"name": name, "passed": bool(passed)}
    if witness is not None:
        entry["witness"] = witness
    return entry


def _report(name: str, checks: list[dict]) -> dict:
    return {
        "name": name,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


def verify_odd_vanishing() -> dict:
    """The odd orbit slices die in the quotient; degree two survives.

    Together with conjugation invariance this certifies the extra Z_2
    symmetry of the 26-term sum at the quotient level.
    """
    checks = []
    for k in (1, 3, 5, 7, 9):
        q = pullback(orbit_sum(k))
        checks.append(_check(
            f"pullback of orbit slice {k} vanishes", q.is_zero(),
            None if q.is_zero() else q.canonical_str()))
    q2 = pullback(orbit_sum(2))
    checks.append(_check(
        "pullback of orbit slice 2 is nonzero", not q2.is_zero(),
        q2.canonical_str()))
    conj = stanley.ell_expansion(stanley.build_gstar().conjugate())
    same = pullback(conj) == main_quotient()
    checks.append(_check("conjugated sum has the same pullback", same))
    regroup = ZERO
    for k in range(11):
        regroup = regroup + BETA ** (10 - k) * orbit_sum(k)
    checks.append(_check(
        "orbit slices regroup to the positive ell form at scale 2",
        regroup * 2 == positive_ell_form()))
    return _report("odd orbit-slice vanishing", checks)


def sigma56_substitution() -> dict[str, MultiPoly]:
    """The sixth-generator action as an ell-variable substitution."""
    return {
        f"l_{box}": stanley.ell_var(image) * sign
        for box, (image, sign) in petjohn.sigma56_on_ell().items()
    }


def verify_sigma56_invariance() -> dict:
    """Invariance of the quotient image under the lifted sixth generator."""
    checks = []
    sub = sigma56_substitution()
    image = main_ell_form().substitute(sub)
    checks.append(_check(
        "pullback unchanged by the sixth generator",
        pullback(image) == main_quotient()))
    product = ONE
    for box in stanley.FREE_BOXES:
        product = product * stanley.ell_var(box)
    checks.append(_check(
        "degree-ten slice fixed (an even number of sign flips)",
        product.substitute(sub) == product))
    star = subset_weight(stanley.mask_of(stanley.claw("c3")))
    independent = next(
        s for s in combinations(stanley.FREE_BOXES, 4)
        if stanley.induced_edges(stanley.mask_of(s)) == 0)
    anti = subset_weight(stanley.mask_of(independent))
    checks.append(_check(
        "four-star and four-independent weights cancel (3 + -3)",
        star == 3 and anti == -3,
        f"star={star}, independent={anti}"))
    for box, expected in (
            ("c5", -claw_ell("a2") - claw_ell("a1")),
            ("b1", claw_ell("b1"))):
        got = claw_ell(box).substitute(sub)
        checks.append(_check(
            f"claw at {box} transported inside the claw span",
            got == expected,
            None if got == expected else got.canonical_str()))
    return _report("sigma56 invariance", checks)


# -- hyperplane boundary data --------------------------------------------------------

def boundary_datum(box: str, c: str) -> int:
    """The single diagram the sum collapses to on the hyperplane h_box^c = 0.

    At the reference choice of the box this is the reference flipped on the
    closed neighbourhood; at the opposite choice it is the conjugate.
    """
    if box not in stanley.FREE_BOXES:
        raise ValueError(f"unknown box {box!r}")
    if c not in ("U", "L"):
        raise ValueError(f"unknown hook choice {c!r}")
    base = stanley.flip(stanley.X_MASK, stanley.claw(box))
    if c == stanley.choice(stanley.X_MASK, box):
        return base
    return stanley.conjugate_mask(base)


def hyperplane_form(box: str, c: str) -> MultiPoly:
    """The hook h_box^c as a linear form in the quotient variables."""
    form = hook_symbol(box)
    if c == "L":
        form = form - BETA
    return form


def _elimination(form: MultiPoly) -> tuple[str, MultiPoly]:
    """Solve a linear form for its lexicographically last hook variable.

    Falls back to beta when no hook variable occurs.  Returns the pivot
    name and its substitution polynomial.
    """
    hvars = sorted(v for v in form.vars if v != "b")
    pivot = hvars[-1] if hvars else "b"
    coeff = form.coefficient({pivot: 1})
    return pivot, MultiPoly.var(pivot) - form * (Fraction(1) / coeff)


@lru_cache(maxsize=None)
def _single_quotient(mask: int) -> QuotientPoly:
    return pullback(stanley.ell_expansion(stanley.StanleySum.single(mask)))


def quotient_datum(box: str, c: str) -> int:
    """The diagram whose primed polynomial the quotient collapses to on h_box^c = 0.

    The quotient encodes primed polynomials, and priming flips the choice at
    the four lambda-free boxes; the hyperplane therefore pairs with the
    boundary datum of the primed choice.  (The matching diagram is unique: a
    point scan over all 1024 choice masks leaves exactly this one.)
    """
    if box in stanley.LAMBDA_FREE:
        c = "L" if c == "U" else "U"
    return boundary_datum(box, c)


def verify_hyperplane(box: str, c: str) -> dict:
    """On h_box^c = 0 the 26-term sum equals a single diagram."""
    datum = quotient_datum(box, c)
    form = hyperplane_form(box, c)
    pivot, binding = _elimination(form)
    lhs = main_quotient().poly.substitute({pivot: binding})
    rhs = _single_quotient(datum).poly.substitute({pivot: binding})
    checks = [
        _check(
            f"restriction to h_{box}^{c} = 0 collapses to the datum",
            lhs == rhs,
            None if lhs == rhs else f"sum: {lhs.canonical_str()} ; "
                                    f"datum: {rhs.canonical_str()}"),
        _check(
            "datum absent from the support of the full sum",
            datum not in stanley.build_gstar().support(),
            stanley.diagram_text(datum)),
    ]
    report = _report(f"hyperplane collapse at ({box}, {c})", checks)
    report["eliminated"] = pivot
    report["hyperplane"] = form.canonical_str()
    return report


def _generator_image(gen: str, mask: int) -> int:
    image = stanley.apply_generator(stanley.StanleySum.single(mask), gen)
    ((out, coeff),) = image.terms.items()
    if coeff != 1:
        raise AssertionError(f"generator scaled a single diagram by {coeff}")
    return out


def verify_boundary_equivariance() -> dict:
    """The twenty collapse data transform equivariantly under the generators.

    Moving the hyperplane h_box^c by a signed generator moves its collapse
    datum by the same generator.  The equivalent statement for the displayed
    boundary data holds with the choice transport conjugated by priming.
    """
    checks = []
    for gen in stanley.GENERATOR_POINT_MAPS:
        bad = []
        for box in stanley.FREE_BOXES:
            for c in ("U", "L"):
                gbox, gc = stanley.act_on_box_choice(gen, box, c)
                if quotient_datum(gbox, gc) != _generator_image(
                        gen, quotient_datum(box, c)):
                    bad.append((box, c))
        checks.append(_check(
            f"generator {gen} moves all twenty data coherently",
            not bad, bad or None))
    return _report("boundary data equivariance", checks)


def verify_all_hyperplanes() -> dict:
    """All twenty hyperplane collapses plus their equivariance in one report."""
    checks = []
    for box in stanley.FREE_BOXES:
        for c in ("U", "L"):
            sub = verify_hyperplane(box, c)
            checks.append(_check(sub["name"], sub["passed"]))
    equi = verify_boundary_equivariance()
    checks.append(_check(equi["name"], equi["passed"]))
    return _report("hyperplane boundary data", checks)


# -- untwisting to balanced coordinates ----------------------------------------------

@lru_cache(maxsize=1)
def untwist_triples() -> dict[str, tuple[int, ...]]:
    """Point triples of the canonical pentagon embedding, per box."""
    embedding = petjohn.gamma_embedding(petjohn.CANONICAL_PENTAGON)
    return {
        box: petjohn.elements(embedding[duad])
        for box, duad in petjohn.BOX_DUAD0.items()
    }


def untwist_to_x(p: MultiPoly | None = None) -> MultiPoly:
    """Substitute each ell by the coordinate sum of its embedded triple.

    Defaults to the positive ell form.  The result lives in x1..x6 and
    beta; imposing x6 = -(x1+...+x5) identifies triple coordinates with
    their complements up to sign and kills the claw relations.
    """
    if p is None:
        p = positive_ell_form()
    stray = set(p.vars) - ELL_VARS
    if stray:
        raise ValueError(f"not an ell polynomial: {sorted(stray)}")
    triples = untwist_triples()
    bindings = {}
    for box in stanley.FREE_BOXES:
        total = ZERO
        for t in triples[box]:
            total = total + MultiPoly.var(f"x{t + 1}")
        bindings[f"l_{box}"] = total
    return p.substitute(bindings)


def balance_x(p: MultiPoly) -> MultiPoly:
    """Impose x6 = -(x1+...+x5)."""
    x6 = ZERO
    for v in XVARS[:5]:
        x6 = x6 - MultiPoly.var(v)
    return p.substitute({"x6": x6})


@lru_cache(maxsize=1)
def elementary_form() -> MultiPoly:
    """The untwisted positive form in e2..e6 and beta."""
    return expand_in_elementary(untwist_to_x())


ELEMENTARY_TARGET = (
    BETA ** 10 * 42
    + MultiPoly.var("e2") * BETA ** 8 * 54
    + (MultiPoly.var("e4") * 34 + MultiPoly.var("e2") ** 2 * 14) * BETA ** 6
    + (MultiPoly.var("e6") * 42 + MultiPoly.var("e3") ** 2 * 30
       + MultiPoly.var("e2") * MultiPoly.var("e4") * 4
       + MultiPoly.var("e2") ** 3 * 2) * BETA ** 4
    + (MultiPoly.var("e4") ** 2 * -8
       + MultiPoly.var("e3") * MultiPoly.var("e5") * -18
       + MultiPoly.var("e2") * MultiPoly.var("e6") * 12
       + MultiPoly.var("e2") * MultiPoly.var("e3") ** 2 * 6
       + MultiPoly.var("e2") ** 2 * MultiPoly.var("e4") * 2) * BETA ** 2
    + (MultiPoly.var("e5") ** 2 * 2
       + MultiPoly.var("e4") * MultiPoly.var("e6") * -8
       + MultiPoly.var("e3") ** 2 * MultiPoly.var("e4") * 2
       + MultiPoly.var("e2") * MultiPoly.var("e3") * MultiPoly.var("e5") * -2
       + MultiPoly.var("e2") ** 2 * MultiPoly.var("e6") * 2)
)


@lru_cache(maxsize=1)
def monomial_coefficients() -> dict[tuple[int, ...], Fraction]:
    """Monomial-symmetric coefficients a_lam of the untwisted form.

    The form is homogeneous of degree ten jointly in the coordinates and
    beta, so each m_lam coefficient is a_lam * beta^(10-|lam|).
    """
    lift = elementary_to_x(elementary_form())
    out = {}
    for lam, coeff in expand_in_monomial_symmetric(lift).items():
        weight = sum(lam)
        a = coeff.coefficient({"b": 10 - weight})
        if coeff != MultiPoly.monomial(a, {"b": 10 - weight}):
            raise AssertionError("monomial coefficient not a pure beta power")
        out[lam] = a
    return out


def verify_e_expansion() -> dict:
    """The untwisted form in the elementary basis, exactly."""
    checks = []
    e = elementary_form()
    match = e == ELEMENTARY_TARGET
    checks.append(_check(
        "elementary expansion matches the closed form", match,
        None if match else e.canonical_str()))
    checks.append(_check(
        "pure beta coefficient is 42",
        e.coefficient({"b": 10}) == 42))
    checks.append(_check(
        "e2 beta^8 coefficient is 54",
        e.coefficient({"e2": 1, "b": 8}) == 54))
    for box in stanley.FREE_BOXES:
        dead = balance_x(untwist_to_x(claw_ell(box))).is_zero()
        checks.append(_check(f"claw at {box} dies after balancing", dead))
    bound = all(
        lam[0] <= 3 for lam, a in monomial_coefficients().items() if lam and a)
    checks.append(_check("monomial support has no part above 3", bound))
    return _report("elementary-basis expansion", checks)


# -- non-negativity ------------------------------------------------------------------

def _dependent_images(base: dict[str, MultiPoly]) -> dict[str, MultiPoly]:
    """Extend images of the five free ells by the claw formulas."""
    out = dict(base)
    out["b2"] = base["b1"] + base["bt3"] + base["c3"]
    out["a2"] = base["a1"] + base["a3"] + base["c3"]
    out["c2"] = -(base["a1"] + base["b1"] + base["c3"])
    out["c5"] = -(base["a3"] + base["bt3"] + base["c3"])
    out["c4"] = -(base["a1"] + base["a3"] + base["b1"]
                  + base["bt3"] + base["c3"])
    return out


def distance_substitution() -> dict[str, MultiPoly]:
    """ell images 2(1 + x_i) + beta on the five free boxes, claws beyond.

    The x_i measure the distance from the five lower hook hyperplanes;
    the images satisfy every claw identically.
    """
    base = {
        box: MultiPoly.var(f"x{i + 1}") * 2 + 2 + BETA
        for i, box in enumerate(FREE_HOOKS)
    }
    return {f"l_{box}": img for box, img in _dependent_images(base).items()}


def homogeneous_substitution() -> dict[str, MultiPoly]:
    """ell images y_i + beta on the five free boxes, claws beyond."""
    base = {
        box: MultiPoly.var(f"y{i + 1}") + BETA
        for i, box in enumerate(FREE_HOOKS)
    }
    return {f"l_{box}": img for box, img in _dependent_images(base).items()}


def _negative_terms(p: MultiPoly) -> list[str]:
    out = []
    for e, c in p.sorted_terms():
        if c < 0:
            powers = {v: x for v, x in zip(p.vars, e) if x}
            out.append(MultiPoly.monomial(c, powers).canonical_str())
    return out


def verify_nonnegativity(engine=None) -> dict:
    """The three non-negativity statements of the untwisted and mapped forms."""
    checks = []

    negative = {lam: a for lam, a in monomial_coefficients().items() if a < 0}
    checks.append(_check(
        "monomial-symmetric coefficients are non-negative", not negative,
        None if not negative else repr(sorted(negative))))

    phi = distance_substitution()
    for box in stanley.FREE_BOXES:
        if not claw_ell(box).substitute(phi).is_zero():
            checks.append(_check(f"distance images satisfy claw {box}", False))
    total = ZERO
    for box in stanley.FREE_BOXES:
        total = total + phi[f"l_{box}"]
    checks.append(_check("distance images sum to zero", total.is_zero()))

    window = {"x1": MultiPoly.var("m1") + ALPHA * MultiPoly.var("n1"),
              "b": ALPHA - 1}
    shown = phi["l_a1"].substitute(window)
    target = (MultiPoly.var("m1") * 2 + 1
              + ALPHA * (MultiPoly.var("n1") * 2 + 1))
    checks.append(_check(
        "distance image of a1 in window coordinates", shown == target,
        shown.canonical_str()))

    zero_x = {v: ZERO for v in ("x1", "x2", "x3", "x4", "x5")}
    root = hook_table(WindowParams())
    consistent = all(
        phi[f"l_{box}"].substitute(zero_x).substitute({"b": ALPHA - 1})
        == root.ell(box)
        for box in stanley.FREE_BOXES)
    checks.append(_check(
        "distance images at zero match the root table ells", consistent))

    mapped = main_ell_form().substitute(phi).substitute({"b": ALPHA - 1})
    negatives = _negative_terms(mapped)
    checks.append(_check(
        "distance-mapped form has non-negative coefficients", not negatives,
        None if not negatives else "; ".join(negatives)))

    if engine is None:
        from .symfunc import JackEngine
        engine = JackEngine(degree_cap=6)
    stanley_value = engine.stanley_coefficient((2, 1), (2, 1), (3, 2, 1))
    at_zero = mapped.substitute(zero_x)
    checks.append(_check(
        "distance-mapped form at zero is 2^10/alpha times the root value",
        at_zero == exact_div(stanley_value * 1024, ALPHA)))

    rho = main_ell_form().substitute(homogeneous_substitution())
    homogeneous = all(sum(e) == 10 for e in rho.terms)
    checks.append(_check("homogeneous variant has pure degree ten",
                         homogeneous))
    negatives = _negative_terms(rho)
    checks.append(_check(
        "homogeneous variant has non-negative coefficients", not negatives,
        None if not negatives else "; ".join(negatives)))
    checks.append(_check(
        "homogeneous variant has beta degree at most 7",
        rho.degree_in("b") <= 7,
        f"beta degree {rho.degree_in('b')}"))
    return _report("non-negativity", checks)

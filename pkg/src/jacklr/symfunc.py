"""Symmetric functions over Q(alpha) and the Jack basis.

The engine works degree by degree.  Within one degree n, partitions are
indexed in reverse-lexicographic (descending) order, which refines dominance.
Power sums give the inner product ``<p_lam, p_mu> = delta * z_lam * alpha^len(lam)``;
monomial symmetric functions are converted to power sums through the exact
integer transition matrix, and the Jack basis arises by Gram-Schmidt against
that inner product in a dominance-compatible order.

``J`` here is the integral-form Jack polynomial: ``J_lam = (prod of lower
hooks of lam) * P_lam`` where ``P_lam = m_lam + (dominance-lower terms)``.
Its monomial coefficients are polynomials in alpha with the coefficient of
``m_{1^n}`` equal to ``n!``; both facts are asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ALPHA, MultiPoly, ONE, RatFunc, ZERO, parse_poly
from .partitions import (
    Partition,
    check_partition,
    dominates,
    enumerate_partitions,
    format_partition,
    lower_hook,
    parse_partition,
    upper_hook,
    weight,
    z_factor,
    boxes,
)

DEFAULT_DEGREE_CAP = 12


# -- power sums acting on the monomial basis ------------------------------------

def _multiply_by_power_sum(vec: dict[Partition, Fraction], k: int) -> dict[Partition, Fraction]:
    """Multiply an m-basis vector by p_k, exactly.

    m_lam * p_k = sum over mu obtained from lam by adding k to one part
    (possibly a new zero part) of mult_mu(that part + k) * m_mu.
    """
    out: dict[Partition, Fraction] = {}
    for lam, c in vec.items():
        for u in set(lam) | {0}:
            grown = list(lam)
            if u:
                grown.remove(u)
            grown.append(u + k)
            mu = tuple(sorted(grown, reverse=True))
            out[mu] = out.get(mu, Fraction(0)) + c * mu.count(u + k)
    return {mu: c for mu, c in out.items() if c}


def power_sum_in_monomials(rho: Partition) -> dict[Partition, Fraction]:
    """p_rho expanded in the monomial basis (integer coefficients)."""
    vec: dict[Partition, Fraction] = {(): Fraction(1)}
    for k in rho:
        vec = _multiply_by_power_sum(vec, k)
    return vec


# -- one degree of the engine ----------------------------------------------------

def _solve_lower_triangular(mat, rhs):
    """Solve M x = rhs for lower-triangular M with nonzero diagonal (Fractions)."""
    n = len(rhs)
    x = [Fraction(0)] * n
    for i in range(n):
        acc = rhs[i]
        for j in range(i):
            if mat[i][j]:
                acc -= mat[i][j] * x[j]
        x[i] = acc / mat[i][i]
    return x


class _Degree:
    """All per-degree data: bases, transitions, and the Jack polynomials."""

    def __init__(self, n: int):
        self.n = n
        self.parts = enumerate_partitions(n)  # descending, dominance-compatible
        self.index = {lam: i for i, lam in enumerate(self.parts)}
        size = len(self.parts)

        # R[i][j]: coefficient of m_{parts[j]} in p_{parts[i]}.  Dominance
        # compatibility makes this lower triangular in the descending order
        # with nonzero diagonal.
        self.p_to_m = []
        for rho in self.parts:
            vec = power_sum_in_monomials(rho)
            self.p_to_m.append([vec.get(lam, Fraction(0)) for lam in self.parts])
        for i in range(size):
            for j in range(i + 1, size):
                if self.p_to_m[i][j]:
                    raise AssertionError("power-sum transition not triangular")

        # m_to_p: row lam -> coefficients over p_rho, solved exactly.
        self.m_to_p = []
        for i in range(size):
            rhs = [Fraction(1) if j == i else Fraction(0) for j in range(size)]
            # Solve R^T x = e_i columnwise: we need m_lam = sum_rho x_rho p_rho,
            # i.e. sum_rho x_rho R[rho][mu] = delta_{lam,mu}.  R^T is upper
            # triangular; iterate from the bottom.
            x = [Fraction(0)] * size
            for j in range(size - 1, -1, -1):
                acc = rhs[j]
                for k in range(j + 1, size):
                    if self.p_to_m[k][j]:
                        acc -= self.p_to_m[k][j] * x[k]
                x[j] = acc / self.p_to_m[j][j]
            self.m_to_p.append(x)

        self.z_alpha = [
            MultiPoly.constant(z_factor(rho)) * ALPHA ** len(rho)
            for rho in self.parts
        ]

        self._jack_m: dict[Partition, dict[Partition, MultiPoly]] | None = None

    def pairing_of_p_vectors(self, u, v) -> RatFunc:
        """<sum u_rho p_rho, sum v_rho p_rho> with RatFunc coordinates."""
        acc = RatFunc(ZERO)
        for za, a, b in zip(self.z_alpha, u, v):
            if (not a.is_zero()) and (not b.is_zero()):
                acc = acc + a * b * RatFunc(za)
        return acc

    def m_vector_to_p(self, vec: dict[Partition, RatFunc]) -> list[RatFunc]:
        out = [RatFunc(ZERO)] * len(self.parts)
        for lam, c in vec.items():
            if c.is_zero():
                continue
            row = self.m_to_p[self.index[lam]]
            for j, r in enumerate(row):
                if r:
                    out[j] = out[j] + c * RatFunc(MultiPoly.constant(r))
        return out

    def jack_in_monomials(self) -> dict[Partition, dict[Partition, MultiPoly]]:
        if self._jack_m is None:
            self._jack_m = self._compute_jack()
        return self._jack_m

    def _compute_jack(self) -> dict[Partition, dict[Partition, MultiPoly]]:
        size = len(self.parts)
        ascending = list(range(size - 1, -1, -1))  # smallest partition first

        # Gram-Schmidt over Q(alpha).  Each P is kept both as m-coordinates
        # and as p-coordinates (the latter make pairings cheap).
        basis_m: list[dict[int, RatFunc]] = []
        basis_p: list[list[RatFunc]] = []
        norms: list[RatFunc] = []
        order_of: list[int] = []

        for idx in ascending:
            cur_m: dict[int, RatFunc] = {idx: RatFunc(ONE)}
            cur_p = [RatFunc(MultiPoly.constant(r)) for r in self.m_to_p[idx]]
            for prev_m, prev_p, norm in zip(basis_m, basis_p, norms):
                coeff = self.pairing_of_p_vectors(cur_p, prev_p) / norm
                if coeff.is_zero():
                    continue
                for pos, val in prev_m.items():
                    cur_m[pos] = cur_m.get(pos, RatFunc(ZERO)) - coeff * val
                for j in range(size):
                    if not prev_p[j].is_zero():
                        cur_p[j] = cur_p[j] - coeff * prev_p[j]
            basis_m.append({p: v for p, v in cur_m.items() if not v.is_zero()})
            basis_p.append(cur_p)
            norms.append(self.pairing_of_p_vectors(cur_p, cur_p))
            order_of.append(idx)

        out: dict[Partition, dict[Partition, MultiPoly]] = {}
        for pos_in_gs, idx in enumerate(order_of):
            lam = self.parts[idx]
            scale = RatFunc(ONE)
            for b in boxes(lam):
                scale = scale * RatFunc(lower_hook(lam, b))
            coeffs: dict[Partition, MultiPoly] = {}
            for pos, val in basis_m[pos_in_gs].items():
                poly = (scale * val).as_poly()
                if not poly.is_zero():
                    coeffs[self.parts[pos]] = poly
            out[lam] = coeffs

        # Integrality checks: coefficient of m_{1^n} is n!.
        if self.n:
            ones = self.parts[-1]
            nfact = 1
            for k in range(2, self.n + 1):
                nfact *= k
            for lam, coeffs in out.items():
                c = coeffs.get(ones, ZERO)
                if c != MultiPoly.constant(nfact):
                    raise AssertionError(
                        f"m_(1^n) coefficient of J_{lam} is {c.canonical_str()},"
                        f" expected {nfact}")
        return out


# -- symmetric functions with rational-function coefficients ---------------------

@dataclass(frozen=True)
class SymFunc:
    """A homogeneous symmetric function in the monomial basis over Q(alpha)."""

    degree: int
    coeffs: tuple[tuple[Partition, RatFunc], ...]

    @staticmethod
    def from_dict(degree: int, coeffs: dict[Partition, RatFunc]) -> "SymFunc":
        items = tuple(
            sorted(((lam, c) for lam, c in coeffs.items() if not c.is_zero())))
        for lam, _ in items:
            if weight(lam) != degree:
                raise ValueError(f"partition {lam} has weight != {degree}")
        return SymFunc(degree, items)

    def as_dict(self) -> dict[Partition, RatFunc]:
        return dict(self.coeffs)

    def coefficient(self, lam: Partition) -> RatFunc:
        for mu, c in self.coeffs:
            if mu == lam:
                return c
        return RatFunc(ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        out = self.as_dict()
        for lam, c in other.coeffs:
            out[lam] = out.get(lam, RatFunc(ZERO)) + c
        return SymFunc.from_dict(self.degree, out)

    def scale(self, c: RatFunc) -> "SymFunc":
        return SymFunc.from_dict(
            self.degree, {lam: v * c for lam, v in self.coeffs})


class JackEngine:
    """Computes and caches Jack polynomials degree by degree."""

    def __init__(self, degree_cap: int = DEFAULT_DEGREE_CAP):
        self.degree_cap = degree_cap
        self._degrees: dict[int, _Degree] = {}

    def degree(self, n: int) -> _Degree:
        if n > self.degree_cap:
            raise ValueError(
                f"degree {n} exceeds the configured cap {self.degree_cap}")
        if n not in self._degrees:
            self._degrees[n] = _Degree(n)
        return self._degrees[n]

    def jack(self, lam: Partition) -> SymFunc:
        lam = check_partition(lam)
        table = self.degree(weight(lam)).jack_in_monomials()
        return SymFunc.from_dict(
            weight(lam), {mu: RatFunc(c) for mu, c in table[lam].items()})

    def multiply(self, f: SymFunc, g: SymFunc) -> SymFunc:
        df, dg = self.degree(f.degree), self.degree(g.degree)
        fp = df.m_vector_to_p(f.as_dict())
        gp = dg.m_vector_to_p(g.as_dict())
        target = self.degree(f.degree + g.degree)
        prod_p: dict[Partition, RatFunc] = {}
        for i, a in enumerate(fp):
            if a.is_zero():
                continue
            for j, b in enumerate(gp):
                if b.is_zero():
                    continue
                rho = tuple(sorted(df.parts[i] + dg.parts[j], reverse=True))
                c = a * b
                prod_p[rho] = prod_p.get(rho, RatFunc(ZERO)) + c
        out: dict[Partition, RatFunc] = {}
        for rho, c in prod_p.items():
            if c.is_zero():
                continue
            row = target.p_to_m[target.index[rho]]
            for j, r in enumerate(row):
                if r:
                    lam = target.parts[j]
                    out[lam] = out.get(lam, RatFunc(ZERO)) + c * RatFunc(
                        MultiPoly.constant(r))
        return SymFunc.from_dict(f.degree + g.degree, out)

    def expand_in_jack(self, f: SymFunc) -> dict[Partition, RatFunc]:
        """Coefficients of f over the Jack basis of its degree."""
        deg = self.degree(f.degree)
        table = deg.jack_in_monomials()
        rest = f.as_dict()
        out: dict[Partition, RatFunc] = {}
        for lam in deg.parts:  # descending; J_lam leads at m_lam
            c = rest.get(lam, RatFunc(ZERO))
            if c.is_zero():
                continue
            lead = table[lam][lam]
            coeff = c / RatFunc(lead)
            out[lam] = coeff
            for mu, jc in table[lam].items():
                rest[mu] = rest.get(mu, RatFunc(ZERO)) - coeff * RatFunc(jc)
        for lam, c in rest.items():
            if not c.is_zero():
                raise AssertionError(f"expansion left a residue at {lam}")
        return {lam: c for lam, c in out.items() if not c.is_zero()}

    def lr_coefficient(self, mu: Partition, nu: Partition,
                       lam: Partition) -> RatFunc:
        """Coefficient of J_lam in J_mu * J_nu."""
        mu, nu, lam = check_partition(mu), check_partition(nu), check_partition(lam)
        if weight(mu) + weight(nu) != weight(lam):
            raise ValueError(
                f"weight mismatch: |{mu}| + |{nu}| != |{lam}|")
        product = self.multiply(self.jack(mu), self.jack(nu))
        return self.expand_in_jack(product).get(lam, RatFunc(ZERO))

    def stanley_coefficient(self, mu: Partition, nu: Partition,
                            lam: Partition) -> MultiPoly:
        """lr_coefficient times the full hook product of lam.

        Always a polynomial in alpha with integer coefficients (asserted).
        """
        g = self.lr_coefficient(mu, nu, lam)
        poly = (g * RatFunc(jack_norm(lam))).as_poly()
        for _, c in poly.terms.items():
            if c.denominator != 1:
                raise AssertionError(
                    f"non-integer Stanley coefficient for {mu},{nu};{lam}")
        return poly

    # -- disk cache ------------------------------------------------------------

    CACHE_HEADER = "jacklr jack cache v1 hookU=a(arm+1)+leg"

    def dump_cache(self, path) -> None:
        lines = [self.CACHE_HEADER]
        for n in sorted(self._degrees):
            deg = self._degrees[n]
            if deg._jack_m is None:
                continue
            table = deg.jack_in_monomials()
            for lam in sorted(table):
                entries = ";".join(
                    f"{format_partition(mu)}={table[lam][mu].canonical_str()}"
                    for mu in sorted(table[lam]))
                lines.append(f"{format_partition(lam)}|{entries}")
        text = "\n".join(lines) + "\n"
        with open(path, "w") as fh:
            fh.write(text)

    def load_cache(self, path) -> tuple[int, list[str]]:
        """Load cached Jack expansions; returns (#loaded, warnings)."""
        warnings: list[str] = []
        try:
            with open(path) as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            return 0, [f"cache unreadable: {exc}"]
        if not lines or lines[0] != self.CACHE_HEADER:
            return 0, [f"cache header mismatch in {path}; ignoring cache"]
        loaded: dict[int, dict[Partition, dict[Partition, MultiPoly]]] = {}
        count = 0
        for line in lines[1:]:
            if not line.strip():
                continue
            try:
                head, body = line.split("|", 1)
                lam = parse_partition(head)
                coeffs: dict[Partition, MultiPoly] = {}
                for chunk in body.split(";"):
                    key, val = chunk.split("=", 1)
                    coeffs[parse_partition(key)] = parse_poly(val)
                loaded.setdefault(weight(lam), {})[lam] = coeffs
                count += 1
            except Exception as exc:  # noqa: BLE001 - malformed line is data
                warnings.append(f"skipping corrupt cache line: {exc}")
        for n, table in loaded.items():
            if n > self.degree_cap:
                continue
            if set(table) != set(enumerate_partitions(n)):
                warnings.append(
                    f"cache for degree {n} incomplete; recomputing")
                continue
            deg = self.degree(n)
            deg._jack_m = table
        return count, warnings


def jack_norm(lam: Partition) -> MultiPoly:
    """The full hook product: prod over boxes of upper_hook * lower_hook."""
    out = ONE
    for b in boxes(lam):
        out = out * upper_hook(lam, b) * lower_hook(lam, b)
    return out


# -- module-level convenience engine ---------------------------------------------

_ENGINE = JackEngine()


def default_engine() -> JackEngine:
    return _ENGINE


def jack(lam) -> SymFunc:
    return _ENGINE.jack(tuple(lam))


def lr_coefficient(mu, nu, lam) -> RatFunc:
    return _ENGINE.lr_coefficient(tuple(mu), tuple(nu), tuple(lam))


def stanley_coefficient(mu, nu, lam) -> MultiPoly:
    return _ENGINE.stanley_coefficient(tuple(mu), tuple(nu), tuple(lam))

"""Exact rational arithmetic and sparse multivariate polynomials.

Every coefficient in this package is a ``fractions.Fraction``; there is no
floating point anywhere.  Polynomials are immutable once constructed and the
canonical term order is graded lexicographic (total degree first, then the
exponent tuple), which makes equality and text serialization deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class MultiPoly:
    """Sparse multivariate polynomial over the rationals.

    ``vars`` is a sorted tuple of variable names; ``terms`` maps exponent
    tuples (aligned with ``vars``) to nonzero coefficients.  Variables that
    do not actually occur are stripped, so equal polynomials have identical
    representations regardless of how they were built.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars=(), terms=None, _sorted=False):
        vars = tuple(vars)
        terms = dict(terms or {})
        if not _sorted and vars != tuple(sorted(vars)):
            if len(set(vars)) != len(vars):
                raise ValueError(f"duplicate variable in {vars}")
            order = sorted(range(len(vars)), key=lambda i: vars[i])
            terms = {tuple(e[i] for i in order): c for e, c in terms.items()}
            vars = tuple(sorted(vars))
        # merge duplicates, drop zero coefficients
        clean: dict[tuple, Fraction] = {}
        for e, c in terms.items():
            c = as_fraction(c)
            if len(e) != len(vars):
                raise ValueError("exponent length mismatch")
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
            acc = clean.get(e)
            c = c if acc is None else acc + c
            if c:
                clean[tuple(e)] = c
            elif acc is not None:
                del clean[e]
        # strip unused variables
        if vars:
            used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
            if len(used) != len(vars):
                vars = tuple(vars[i] for i in used)
                clean = {tuple(e[i] for i in used): c for e, c in clean.items()}
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    def __reduce__(self):
        return (MultiPoly, (self.vars, self.terms))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def constant(c) -> "MultiPoly":
        c = as_fraction(c)
        return MultiPoly((), {(): c} if c else {})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        return MultiPoly((name,), {(1,): Fraction(1)})

    @staticmethod
    def monomial(coeff, powers: dict[str, int]) -> "MultiPoly":
        powers = {v: e for v, e in powers.items() if e}
        names = tuple(sorted(powers))
        return MultiPoly(names, {tuple(powers[v] for v in names): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def coefficient(self, powers: dict[str, int]) -> Fraction:
        """Coefficient of the monomial with exactly the given exponents."""
        powers = {v: e for v, e in powers.items() if e}
        if any(v not in self.vars for v in powers):
            return Fraction(0)
        key = tuple(powers.get(v, 0) for v in self.vars)
        return self.terms.get(key, Fraction(0))

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # -- ring operations ---------------------------------------------------

    def _aligned(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        allvars = tuple(sorted(set(self.vars) | set(other.vars)))

        def embed(p):
            idx = [allvars.index(v) for v in p.vars]
            out = {}
            for e, c in p.terms.items():
                full = [0] * len(allvars)
                for i, x in zip(idx, e):
                    full[i] = x
                out[tuple(full)] = c
            return out

        return allvars, embed(self), embed(other)

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        vars, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return MultiPoly(vars, out, _sorted=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()}, _sorted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_constant():
            c = other.constant_value()
            if not c:
                return MultiPoly.zero()
            return MultiPoly(self.vars, {e: k * c for e, k in self.terms.items()}, _sorted=True)
        if self.is_constant():
            return other * self
        vars, a, b = self._aligned(other)
        out: dict[tuple, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return MultiPoly(vars, out, _sorted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.vars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, bindings: dict) -> "MultiPoly":
        """Exact composition: replace variables by polynomials (or rationals).

        Unbound variables pass through untouched; bindings for variables not
        present are ignored.
        """
        live = {v: MultiPoly._coerce(p) for v, p in bindings.items() if v in self.vars}
        if not live:
            return self
        pow_cache: dict[tuple[str, int], MultiPoly] = {}

        def power(v, n):
            key = (v, n)
            if key not in pow_cache:
                base = live[v] if v in live else MultiPoly.var(v)
                pow_cache[key] = base ** n
            return pow_cache[key]

        total = MultiPoly.zero()
        for e, c in self.terms.items():
            term = MultiPoly.constant(c)
            for v, n in zip(self.vars, e):
                if n:
                    term = term * power(v, n)
            total = total + term
        return total

    def evaluate(self, values: dict[str, Fraction]) -> Fraction:
        """Evaluate at exact rational values; every occurring variable must be bound."""
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise ValueError(f"unbound variables: {missing}")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, n in zip(self.vars, e):
                if n:
                    t *= as_fraction(values[v]) ** n
            total += t
        return total

    # -- univariate helpers --------------------------------------------------

    def single_variable(self) -> str | None:
        """The unique variable occurring, or None for constants."""
        if len(self.vars) > 1:
            raise ValueError(f"not univariate: variables {self.vars}")
        return self.vars[0] if self.vars else None

    def univariate_coeffs(self) -> list[Fraction]:
        """Dense coefficient list [c0, c1, ...] of a univariate polynomial."""
        self.single_variable()
        if not self.terms:
            return []
        deg = max(e[0] if e else 0 for e in self.terms)
        out = [Fraction(0)] * (deg + 1)
        for e, c in self.terms.items():
            out[e[0] if e else 0] = c
        return out

    @staticmethod
    def from_univariate_coeffs(name: str, coeffs) -> "MultiPoly":
        return MultiPoly((name,), {(i,): c for i, c in enumerate(coeffs) if c})

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        e = max(self.terms, key=lambda t: (sum(t), t))
        return self.terms[e]

    # -- serialization -------------------------------------------------------

    def canonical_str(self) -> str:
        """Deterministic text form: graded-lex descending terms.

        Example: ``6*a^4 + 2/3*a*x - 4``.  Round-trips through :func:`parse`.
        """
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            if c.denominator == 1:
                num = str(abs(c.numerator))
            else:
                num = f"{abs(c.numerator)}/{c.denominator}"
            mono = [f"{v}^{n}" if n > 1 else v for v, n in zip(self.vars, e) if n]
            if mono and num == "1":
                body = "*".join(mono)
            elif mono:
                body = num + "*" + "*".join(mono)
            else:
                body = num
            factors.append(body)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.canonical_str()})"


# -- common generators --------------------------------------------------------

ALPHA = MultiPoly.var("a")
BETA = MultiPoly.var("b")
ONE = MultiPoly.constant(1)
ZERO = MultiPoly.zero()


def alpha_poly(*coeffs) -> MultiPoly:
    """Polynomial in the single variable ``a`` with ascending coefficients."""
    return MultiPoly.from_univariate_coeffs("a", [as_fraction(c) for c in coeffs])


# -- univariate division and gcd ----------------------------------------------


def divrem(a: MultiPoly, b: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Exact univariate division with remainder: ``a = q*b + r``, deg r < deg b.

    Both arguments must live in the same single variable (constants allowed).
    """
    if b.is_zero():
        raise ZeroDivisionError("zero divisor")
    va, vb = a.single_variable(), b.single_variable()
    if va is not None and vb is not None and va != vb:
        raise ValueError(f"different variables: {va} vs {vb}")
    name = va or vb or "a"
    ac, bc = a.univariate_coeffs(), b.univariate_coeffs()
    q = [Fraction(0)] * max(0, len(ac) - len(bc) + 1)
    r = list(ac)
    while len(r) >= len(bc) and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(bc):
            break
        k = len(r) - len(bc)
        f = r[-1] / bc[-1]
        q[k] = f
        for i, c in enumerate(bc):
            r[k + i] -= f * c
        r.pop()
    return (MultiPoly.from_univariate_coeffs(name, q),
            MultiPoly.from_univariate_coeffs(name, r))


def divides(b: MultiPoly, a: MultiPoly) -> bool:
    """True when univariate b divides a exactly."""
    return divrem(a, b)[1].is_zero()


def exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    q, r = divrem(a, b)
    if not r.is_zero():
        raise ValueError("inexact division")
    return q


def _primitive_normalized(p: MultiPoly) -> MultiPoly:
    """Scale to integer coefficients with content 1 and positive leading coefficient."""
    if p.is_zero():
        return p
    from math import gcd, lcm
    den = lcm(*[c.denominator for c in p.terms.values()]) if p.terms else 1
    num = gcd(*[abs(c.numerator) for c in p.terms.values()])
    scale = Fraction(den, num if num else 1)
    if p.leading_coefficient() < 0:
        scale = -scale
    return p * scale


def gcd_univariate(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic-free gcd of univariate polynomials, primitive with positive lead."""
    while not b.is_zero():
        a, b = b, divrem(a, b)[1]
    return _primitive_normalized(a)


# -- rational functions --------------------------------------------------------


class RatFunc:
    """Quotient of two MultiPoly values.

    Univariate quotients are kept reduced (gcd 1, primitive denominator with
    positive leading coefficient).  For multivariate entries no gcd is
    attempted and equality falls back to cross-multiplication, which is all
    any identity check here requires.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _to_poly(num)
        den = _to_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = ONE
        elif den.is_constant():
            num = num * (1 / den.constant_value())
            den = ONE
        else:
            joint = set(num.vars) | set(den.vars)
            if len(joint) <= 1:
                g = gcd_univariate(num, den)
                if g.total_degree() > 0:
                    num, den = exact_div(num, g), exact_div(den, g)
                dprim = _primitive_normalized(den)
                ratio = den.leading_coefficient() / dprim.leading_coefficient()
                num, den = num * (1 / ratio), dprim
                if den.is_constant():
                    num = num * (1 / den.constant_value())
                    den = ONE
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    def __reduce__(self):
        return (RatFunc, (self.num, self.den))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction, MultiPoly)):
            return RatFunc(x)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_poly(self) -> MultiPoly:
        if self.den == ONE:
            return self.num
        q, r = divrem(self.num, self.den)
        if r.is_zero():
            return q
        raise ValueError(f"not a polynomial: ({self.num.canonical_str()}) / ({self.den.canonical_str()})")

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFunc is unhashable (cross-multiplied equality)")

    def evaluate(self, values: dict[str, Fraction]) -> Fraction:
        d = self.den.evaluate(values)
        if not d:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(values) / d

    def canonical_str(self) -> str:
        if self.den == ONE:
            return self.num.canonical_str()
        return f"({self.num.canonical_str()}) / ({self.den.canonical_str()})"

    def __repr__(self):
        return f"RatFunc({self.canonical_str()})"


def _to_poly(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MultiPoly.constant(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


# -- parsing --------------------------------------------------------------------


class _Parser:
    """Recursive-descent parser for the canonical polynomial text form.

    Grammar: sums of products of powers; bases are nonnegative integers,
    identifiers, or parenthesized expressions; exponents are (possibly
    negative) integers.  Negative exponents and ``/`` yield rational
    functions.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ValueError(f"parse error at position {self.pos}: {msg} in {self.text!r}")

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> RatFunc:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.text[self.pos] == "-":
                sign = -sign
            self.pos += 1
        total = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.text[self.pos] == "-":
                    sign = -sign
                self.pos += 1
            total = total + self.term() * sign
        return total

    def term(self) -> RatFunc:
        value = self.power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = value * self.power()
            elif ch == "/":
                self.pos += 1
                value = value / self.power()
            elif ch == "(":
                value = value * self.power()
            else:
                return value

    def power(self) -> RatFunc:
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            neg = False
            if self.peek() == "-":
                neg = True
                self.pos += 1
            n = self.integer()
            return base ** (-n if neg else n)
        return base

    def base(self) -> RatFunc:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch.isdigit():
            return RatFunc(self.integer())
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            return RatFunc(MultiPoly.var(self.text[start:self.pos]))
        self.error("expected a factor")

    def integer(self) -> int:
        ch = self.peek()
        if not ch.isdigit():
            self.error("expected an integer")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])


def parse_ratfunc(text: str) -> RatFunc:
    p = _Parser(text)
    value = p.expr()
    if p.peek():
        p.error("trailing input")
    return value


def parse_poly(text: str) -> MultiPoly:
    return parse_ratfunc(text).as_poly()


# -- symmetric-polynomial expansions (six variables, e1 = 0) --------------------

XVARS = tuple(f"x{i}" for i in range(1, 7))


def elementary_symmetric(k: int, names) -> MultiPoly:
    """e_k in the given variables."""
    names = list(names)
    if k == 0:
        return ONE
    if k > len(names):
        return ZERO
    from itertools import combinations
    terms = {}
    n = len(names)
    for combo in combinations(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = Fraction(1)
    return MultiPoly(tuple(names), terms)


def _e1zero_images() -> dict[int, MultiPoly]:
    """e_k(x1..x6) with x6 eliminated by e1 = 0, as polynomials in x1..x5."""
    x6 = -sum((MultiPoly.var(v) for v in XVARS[:5]), ZERO)
    return {k: elementary_symmetric(k, XVARS).substitute({"x6": x6}) for k in range(2, 7)}


_E1ZERO_CACHE: dict[int, MultiPoly] | None = None


def _e_images():
    global _E1ZERO_CACHE
    if _E1ZERO_CACHE is None:
        _E1ZERO_CACHE = _e1zero_images()
    return _E1ZERO_CACHE


def _partitions_with_parts(n: int, parts) -> list[tuple[int, ...]]:
    out = []

    def rec(rem, largest, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for p in parts:
            if p <= largest and p <= rem:
                rec(rem - p, p, acc + [p])

    rec(n, max(parts) if parts else 0, [])
    return out


def _solve_exact(columns: list[MultiPoly], target: MultiPoly):
    """Solve sum_i c_i * columns[i] = target exactly, or return None."""
    allvars = tuple(sorted({v for col in columns for v in col.vars} | set(target.vars)))

    def vec(p: MultiPoly):
        out = {}
        for e, c in p.terms.items():
            full = [0] * len(allvars)
            for v, x in zip(p.vars, e):
                full[allvars.index(v)] = x
            out[tuple(full)] = c
        return out

    cols = [vec(c) for c in columns]
    tvec = vec(target)
    rows = sorted(set().union(*[set(c) for c in cols], set(tvec)))
    matrix = [[c.get(r, Fraction(0)) for c in cols] + [tvec.get(r, Fraction(0))] for r in rows]
    ncols = len(cols)
    pivots = []
    r = 0
    for j in range(ncols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][j]), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        pv = matrix[r][j]
        matrix[r] = [x / pv for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][j]:
                f = matrix[i][j]
                matrix[i] = [x - f * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(j)
        r += 1
    # inconsistent system?
    for i in range(r, len(matrix)):
        if matrix[i][ncols]:
            return None
    solution = [Fraction(0)] * ncols
    for i, j in enumerate(pivots):
        solution[j] = matrix[i][ncols]
    return solution


def expand_in_elementary(p: MultiPoly) -> MultiPoly:
    """Rewrite a symmetric polynomial of x1..x6 (modulo e1 = 0) in e2..e6.

    The input may involve x1..x6 plus passenger variables (e.g. ``b``); x6 is
    first eliminated via x6 = -(x1+...+x5).  Raises ``ValueError('not
    symmetric')`` when no exact representation exists.
    """
    images = _e_images()
    x6 = -sum((MultiPoly.var(v) for v in XVARS[:5]), ZERO)
    p = p.substitute({"x6": x6})
    xset = set(XVARS[:5])
    passengers = tuple(v for v in p.vars if v not in xset)
    # group terms by passenger exponents
    slices: dict[tuple, dict] = {}
    for e, c in p.terms.items():
        pe = tuple(x for v, x in zip(p.vars, e) if v not in xset)
        xe = tuple((v, x) for v, x in zip(p.vars, e) if v in xset and x)
        slices.setdefault(pe, {})[xe] = c
    pow_cache: dict[tuple[int, int], MultiPoly] = {}

    def epow(k, n):
        if (k, n) not in pow_cache:
            pow_cache[(k, n)] = images[k] ** n
        return pow_cache[(k, n)]

    result = ZERO
    for pe, terms in sorted(slices.items()):
        sl = ZERO
        for xe, c in terms.items():
            sl = sl + MultiPoly.monomial(c, dict(xe))
        passenger_mono = MultiPoly.monomial(1, dict(zip(passengers, pe)))
        if sl.is_constant():
            result = result + passenger_mono * sl
            continue
        for d in sorted({sum(e) for e in sl.terms}):
            comp = MultiPoly(sl.vars, {e: c for e, c in sl.terms.items() if sum(e) == d}, _sorted=True)
            if comp.is_constant():
                result = result + passenger_mono * comp
                continue
            cands = _partitions_with_parts(d, [2, 3, 4, 5, 6])
            cols = []
            for lam in cands:
                prod = ONE
                for k in set(lam):
                    prod = prod * epow(k, lam.count(k))
                cols.append(prod)
            sol = _solve_exact(cols, comp)
            if sol is None:
                raise ValueError("not symmetric")
            for lam, c in zip(cands, sol):
                if c:
                    mono = MultiPoly.monomial(c, {f"e{k}": lam.count(k) for k in set(lam)})
                    result = result + passenger_mono * mono
    return result


def elementary_to_x(p: MultiPoly) -> MultiPoly:
    """Substitute e_k -> e_k(x1..x6) (full six variables, no elimination)."""
    bindings = {f"e{k}": elementary_symmetric(k, XVARS) for k in range(1, 7)}
    return p.substitute(bindings)


def monomial_symmetric(lam: tuple[int, ...], names=XVARS) -> MultiPoly:
    """Monomial symmetric polynomial m_lambda in the given variables."""
    n = len(names)
    if len(lam) > n:
        return ZERO
    base = tuple(list(lam) + [0] * (n - len(lam)))
    terms = {e: Fraction(1) for e in set(permutations(base))}
    return MultiPoly(tuple(names), terms)


def expand_in_monomial_symmetric(p: MultiPoly) -> dict[tuple[int, ...], MultiPoly]:
    """Expansion of a symmetric polynomial of x1..x6 in the m_lambda basis.

    Passenger variables (e.g. ``b``) stay inside the returned coefficients.
    Raises ``ValueError('not symmetric')`` if extraction leaves a residual.
    """
    xset = set(XVARS)
    out: dict[tuple[int, ...], MultiPoly] = {}
    work = p
    guard = 0
    while not work.is_zero():
        guard += 1
        if guard > 100000:
            raise ValueError("not symmetric")
        # graded-lex leading term in the x-variables (exponents read x1..x6)
        best = None
        for e, c in work.terms.items():
            xe = {v: x for v, x in zip(work.vars, e) if v in xset}
            vec = tuple(xe.get(v, 0) for v in XVARS)
            key = (sum(vec), vec)
            if best is None or key > best[0]:
                best = (key, e, c)
        (_, vec), e, c = best
        if any(vec[i] < vec[i + 1] for i in range(5)):
            raise ValueError("not symmetric")
        lam = tuple(x for x in vec if x)
        passenger = MultiPoly.monomial(c, {v: x for v, x in zip(work.vars, e) if v not in xset})
        out[lam] = out.get(lam, ZERO) + passenger
        work = work - passenger * monomial_symmetric(lam)
    return {lam: c for lam, c in out.items() if not c.is_zero()}

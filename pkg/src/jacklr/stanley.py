"""Diagram calculus on hook symbols for the (2,1),(2,1) -> (3,2,1) triple.

A diagram assigns an upper/lower choice to every box of a partition triple.
For the root triple the three boxes b3, c1, c6 are bound together (b3 and c1
share the choice, c6 takes the complement), so diagrams live on ten free
boxes, one of which is the virtual box "bt3" standing for the bound bundle.
Diagrams are encoded as 10-bit masks over the fixed box order below, with a
set bit meaning the lower hook is chosen.

The ten free boxes carry a fixed Petersen-graph structure: each box is
labelled by a 2-subset (duad) of {1..5} and two boxes are adjacent when
their duads are disjoint.

The evaluation of a diagram D is the product of the chosen hooks of mu and
nu divided by the product of the chosen hooks of lambda.  The "primed"
evaluation is the plain evaluation times the full hook product of lambda:
the product of the chosen hooks of mu and nu with the complement-chosen
hooks of lambda.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exact import ALPHA, MultiPoly, ONE, RatFunc, ZERO, divrem
from .partitions import (
    Partition,
    boxes as partition_boxes,
    lower_hook,
    root_hook,
    upper_hook,
)

# -- the ten free boxes and their Petersen structure ------------------------------

FREE_BOXES = ("a1", "a2", "a3", "b1", "b2", "bt3", "c2", "c3", "c4", "c5")
BOX_BIT = {name: i for i, name in enumerate(FREE_BOXES)}
FULL_MASK = (1 << len(FREE_BOXES)) - 1

BOX_DUAD = {
    "a1": (3, 4), "a2": (2, 5), "a3": (1, 3),
    "b1": (2, 4), "b2": (3, 5), "bt3": (1, 2),
    "c2": (4, 5), "c3": (1, 4), "c4": (2, 3), "c5": (1, 5),
}


def adjacent(a: str, b: str) -> bool:
    """Petersen adjacency: disjoint duads (Kneser K(5,2))."""
    return not set(BOX_DUAD[a]) & set(BOX_DUAD[b])


EDGES = tuple(
    (a, b) for a, b in combinations(FREE_BOXES, 2) if adjacent(a, b))

NEIGHBORS = {
    b: tuple(a for a in FREE_BOXES if a != b and adjacent(a, b))
    for b in FREE_BOXES
}


def claw(b: str) -> tuple[str, ...]:
    """Closed neighborhood of b."""
    return (b,) + NEIGHBORS[b]


def mask_of(boxes) -> int:
    m = 0
    for b in boxes:
        m |= 1 << BOX_BIT[b]
    return m


def boxes_of(mask: int) -> tuple[str, ...]:
    return tuple(b for b in FREE_BOXES if mask >> BOX_BIT[b] & 1)


def induced_edges(mask: int) -> int:
    """Number of Petersen edges with both endpoints inside the subset."""
    return sum(
        1 for a, b in EDGES
        if mask >> BOX_BIT[a] & 1 and mask >> BOX_BIT[b] & 1)


# -- diagrams as masks -------------------------------------------------------------

# Reference diagram X: everything upper except c3.
X_MASK = mask_of(["c3"])
# The lambda free boxes.  The primed form of a diagram flips exactly these;
# the primed form of X fixes the sign vector x_b of the ell-coordinates.
LAMBDA_FREE = ("c2", "c3", "c4", "c5")
LAMBDA_FREE_MASK = mask_of(LAMBDA_FREE)
ELL_REFERENCE = X_MASK ^ LAMBDA_FREE_MASK


def primed_mask(mask: int) -> int:
    """The mask of the primed (polynomial) form: lambda choices flipped."""
    return mask ^ LAMBDA_FREE_MASK


def choice(mask: int, box: str) -> str:
    return "L" if mask >> BOX_BIT[box] & 1 else "U"


def flip(mask: int, boxes) -> int:
    return mask ^ mask_of(boxes)


def conjugate_mask(mask: int) -> int:
    return mask ^ FULL_MASK


def sign_vector(ref: int) -> dict[str, int]:
    """x_b = +1 where the reference choice is upper, -1 where lower."""
    return {b: -1 if ref >> BOX_BIT[b] & 1 else 1 for b in FREE_BOXES}


def diagram_text(mask: int) -> str:
    """Row-major English-convention text form; '?' marks the bound boxes."""
    mu_part = "".join(choice(mask, b) for b in ("a2", "a3", "a1"))
    b3 = choice(mask, "bt3")
    nu_part = choice(mask, "b2") + b3 + choice(mask, "b1")
    c1, c6 = "?", "?"
    lam_part = (choice(mask, "c4") + choice(mask, "c5") + c6
                + choice(mask, "c2") + choice(mask, "c3") + c1)
    return f"mu:{mu_part};nu:{nu_part};lam:{lam_part}"


class StanleySum:
    """A finite integer (or Fraction) combination of diagrams."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        clean = {}
        for mask, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[mask] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("StanleySum is immutable")

    @staticmethod
    def single(mask: int, coeff=1) -> "StanleySum":
        return StanleySum({mask: Fraction(coeff)})

    def coefficient(self, mask: int) -> Fraction:
        return self.terms.get(mask, Fraction(0))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.terms))

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "StanleySum") -> "StanleySum":
        out = dict(self.terms)
        for mask, c in other.terms.items():
            out[mask] = out.get(mask, Fraction(0)) + c
        return StanleySum(out)

    def __sub__(self, other: "StanleySum") -> "StanleySum":
        return self + other.scale(-1)

    def scale(self, c) -> "StanleySum":
        c = Fraction(c)
        return StanleySum({mask: v * c for mask, v in self.terms.items()})

    def conjugate(self) -> "StanleySum":
        return StanleySum(
            {conjugate_mask(mask): c for mask, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, StanleySum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        bits = ", ".join(
            f"{c}*[{diagram_text(m)}]" for m, c in sorted(self.terms.items()))
        return f"StanleySum({bits})"


def build_gstar() -> StanleySum:
    """The 26-term rule: 7X - 2 sum of single flips + sum of edge flips."""
    terms = {X_MASK: Fraction(7)}
    for b in FREE_BOXES:
        terms[flip(X_MASK, [b])] = Fraction(-2)
    for a, b in EDGES:
        terms[flip(X_MASK, [a, b])] = Fraction(1)
    return StanleySum(terms)


# -- evaluation --------------------------------------------------------------------

MU_BOXES = ("a1", "a2", "a3")
NU_FREE_BOXES = ("b1", "b2")
LAM_FREE_BOXES = ("c2", "c3", "c4", "c5")

HookContext = dict  # (box name, "U"/"L") -> MultiPoly


def _flip_choice(c: str) -> str:
    return "L" if c == "U" else "U"


def physical_choices(mask: int) -> dict[str, str]:
    """Expand the virtual form to the twelve physical boxes."""
    out = {b: choice(mask, b) for b in FREE_BOXES if b != "bt3"}
    b3 = choice(mask, "bt3")
    out["b3"] = b3
    out["c1"] = b3
    out["c6"] = _flip_choice(b3)
    return out


def root_context() -> HookContext:
    """Hook values of the actual (2,1),(2,1),(3,2,1) triple.

    Includes the virtual rows ("bt3", U/L) defined as the bound-bundle
    product divided exactly by alpha.
    """
    ctx: HookContext = {}
    for name in ("a1", "a2", "a3", "b1", "b2", "b3",
                 "c1", "c2", "c3", "c4", "c5", "c6"):
        ctx[(name, "U")] = root_hook(name, "U")
        ctx[(name, "L")] = root_hook(name, "L")
    for up in ("U", "L"):
        dn = _flip_choice(up)
        bundle = ctx[("b3", up)] * ctx[("c1", dn)] * ctx[("c6", up)]
        q, r = divrem(bundle, ALPHA)
        if not r.is_zero():
            raise AssertionError("bound-bundle product not divisible by alpha")
        ctx[("bt3", up)] = q
    return ctx


def evaluate(s: StanleySum, ctx: HookContext) -> RatFunc:
    """Chosen hooks of mu,nu over chosen hooks of lambda."""
    total = RatFunc(ZERO)
    for mask, c in s.terms.items():
        ch = physical_choices(mask)
        num = ONE
        for b in MU_BOXES + NU_FREE_BOXES + ("b3",):
            num = num * ctx[(b, ch[b])]
        den = ONE
        for b in LAM_FREE_BOXES + ("c1", "c6"):
            den = den * ctx[(b, ch[b])]
        total = total + RatFunc(num * c, den)
    return total


def evaluate_poly(s: StanleySum, ctx: HookContext) -> MultiPoly:
    """Primed evaluation: chosen mu,nu hooks times complement-chosen
    lambda hooks, a polynomial."""
    total = ZERO
    for mask, c in s.terms.items():
        ch = physical_choices(mask)
        prod = MultiPoly.constant(c)
        for b in MU_BOXES + NU_FREE_BOXES + ("b3",):
            prod = prod * ctx[(b, ch[b])]
        for b in LAM_FREE_BOXES + ("c1", "c6"):
            prod = prod * ctx[(b, _flip_choice(ch[b]))]
        total = total + prod
    return total


def evaluate_virtual(s: StanleySum, ctx: HookContext) -> MultiPoly:
    """Ten-box primed product using the virtual bt3 rows.

    Equals evaluate_poly divided by alpha whenever the context's virtual
    rows are the bound-bundle products over alpha.
    """
    total = ZERO
    for mask, c in s.terms.items():
        pm = primed_mask(mask)
        prod = MultiPoly.constant(c)
        for b in FREE_BOXES:
            prod = prod * ctx[(b, choice(pm, b))]
        total = total + prod
    return total


# -- general triples ---------------------------------------------------------------

@dataclass(frozen=True)
class TripleDiagram:
    """A hook-choice assignment on an arbitrary partition triple."""

    mu: Partition
    nu: Partition
    lam: Partition
    choices: tuple  # ((slot, box), "U"/"L") pairs, sorted

    @staticmethod
    def build(mu, nu, lam, assign) -> "TripleDiagram":
        mu, nu, lam = tuple(mu), tuple(nu), tuple(lam)
        items = []
        for slot, part in (("mu", mu), ("nu", nu), ("lam", lam)):
            for box in partition_boxes(part):
                c = assign(slot, box)
                if c not in ("U", "L"):
                    raise ValueError(f"bad choice {c!r}")
                items.append(((slot, box), c))
        return TripleDiagram(mu, nu, lam, tuple(sorted(items)))

    def _hook(self, slot, box, c) -> MultiPoly:
        part = {"mu": self.mu, "nu": self.nu, "lam": self.lam}[slot]
        return upper_hook(part, box) if c == "U" else lower_hook(part, box)

    def evaluate(self) -> RatFunc:
        num, den = ONE, ONE
        for (slot, box), c in self.choices:
            if slot == "lam":
                den = den * self._hook(slot, box, c)
            else:
                num = num * self._hook(slot, box, c)
        return RatFunc(num, den)

    def evaluate_primed(self) -> MultiPoly:
        prod = ONE
        for (slot, box), c in self.choices:
            if slot == "lam":
                c = _flip_choice(c)
            prod = prod * self._hook(slot, box, c)
        return prod


# -- K-transform -------------------------------------------------------------------

def _subsets_of(mask: int):
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def k_transform(s: StanleySum, ref: int) -> dict[int, Fraction]:
    """K_I = sum of coefficients of diagrams agreeing with ref on I."""
    out = {I: Fraction(0) for I in range(FULL_MASK + 1)}
    for mask, c in s.terms.items():
        agreement = ~(mask ^ ref) & FULL_MASK
        for I in _subsets_of(agreement):
            out[I] += c
    return out


def k_inverse(kvals: dict[int, Fraction], ref: int) -> StanleySum:
    """Inverse of k_transform: recovers the unique sum with those K-values."""
    terms: dict[int, Fraction] = {}
    for agree in range(FULL_MASK + 1):
        acc = Fraction(0)
        rest = ~agree & FULL_MASK
        for extra in _subsets_of(rest):
            t = agree | extra
            val = kvals.get(t, Fraction(0))
            if val:
                acc += (-1 if bin(extra).count("1") % 2 else 1) * val
        if acc:
            terms[ref ^ (~agree & FULL_MASK)] = acc
    return StanleySum(terms)


# -- kernel functions --------------------------------------------------------------

def kernel_sum(coeffs: dict[str, Fraction], d, frame: int) -> StanleySum:
    """The kernel Stanley sum of f = sum a_b h_b^{frame_b} + d*beta.

    Coefficients of frame^L for L inside the support Y of f:
    c_L = (-1)^{|L|} (d - sum over b in Y minus L of sigma_b a_b), with
    sigma_b = -1 for an upper frame choice and +1 for a lower one.
    """
    d = Fraction(d)
    sigma = {b: (1 if choice(frame, b) == "L" else -1) for b in coeffs}
    support = sorted(coeffs)
    if not support:
        return StanleySum({frame: d})
    terms: dict[int, Fraction] = {}
    for r in range(len(support) + 1):
        for L in combinations(support, r):
            inside = set(L)
            total = sum(
                (sigma[b] * Fraction(coeffs[b]) for b in support
                 if b not in inside),
                Fraction(0))
            c = (-1 if r % 2 else 1) * (d - total)
            if c:
                terms[flip(frame, L)] = c
    return StanleySum(terms)


def frame_polynomial(s: StanleySum, frame: int) -> MultiPoly:
    """Formal monomial expansion relative to a frame.

    The variable h_<box> stands for the frame-chosen hook of that box; the
    opposite choice is represented by h_<box> + sigma_b * beta (variable
    "b"), the exact shift between the two hooks of one box.
    """
    beta = MultiPoly.var("b")
    total = ZERO
    for mask, c in s.terms.items():
        prod = MultiPoly.constant(c)
        for box in FREE_BOXES:
            h = MultiPoly.var(f"h_{box}")
            if choice(mask, box) == choice(frame, box):
                prod = prod * h
            else:
                sigma = 1 if choice(frame, box) == "L" else -1
                prod = prod * (h + beta * sigma)
        total = total + prod
    return total


def kernel_identity_sides(coeffs: dict[str, Fraction], d,
                          frame: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the kernel identity as formal polynomials.

    Left: the frame polynomial of kernel_sum.  Right:
    (-1)^{|Y|} sigma_Y * (product of off-support frame hooks) * beta^{|Y|-1} * f.
    """
    if not coeffs:
        raise ValueError("kernel identity needs a nonempty support")
    beta = MultiPoly.var("b")
    left = frame_polynomial(kernel_sum(coeffs, d, frame), frame)
    support = sorted(coeffs)
    sigma_y = 1
    for b in support:
        sigma_y *= 1 if choice(frame, b) == "L" else -1
    f = beta * Fraction(d)
    for b in support:
        f = f + MultiPoly.var(f"h_{b}") * Fraction(coeffs[b])
    right = f * sigma_y * (-1 if len(support) % 2 else 1)
    for b in FREE_BOXES:
        if b not in coeffs:
            right = right * MultiPoly.var(f"h_{b}")
    right = right * beta ** (len(support) - 1)
    return left, right


# -- the ell coordinates -----------------------------------------------------------

def ell_var(box: str) -> MultiPoly:
    return MultiPoly.var(f"l_{box}")


def ell_expansion(s: StanleySum, ref: int = ELL_REFERENCE) -> MultiPoly:
    """2^10 times the ten-box primed monomial form of s, in ell and beta.

    Substitutes, for each box, twice the primed-chosen hook as
    x_b*ell_b + beta for an upper primed choice and x_b*ell_b - beta for
    a lower one, where the sign x_b is +1 exactly when the reference
    choice at b is upper.
    """
    x = sign_vector(ref)
    beta = MultiPoly.var("b")
    total = ZERO
    for mask, c in s.terms.items():
        pm = primed_mask(mask)
        prod = MultiPoly.constant(c)
        for box in FREE_BOXES:
            term = ell_var(box) * x[box]
            if choice(pm, box) == "U":
                term = term + beta
            else:
                term = term - beta
            prod = prod * term
        total = total + prod
    return total


def ell_weights(s: StanleySum, ref: int = ELL_REFERENCE) -> dict[int, Fraction]:
    """Weights w_I with 2^10 * s = sum over I of beta^|I| w_I ell_{complement}."""
    expansion = ell_expansion(s, ref)
    out: dict[int, Fraction] = {I: Fraction(0) for I in range(FULL_MASK + 1)}
    for exps, coeff in expansion.terms.items():
        present = set()
        for v, e in zip(expansion.vars, exps):
            if v.startswith("l_") and e:
                if e != 1:
                    raise AssertionError("ell-expansion not multilinear")
                present.add(v[2:])
        I = FULL_MASK ^ mask_of(present)
        out[I] += coeff
    return out


def closed_form_weight(I: int) -> int:
    """2 * (2 e_I - |I| + 1) with e_I the induced edge count of I."""
    return 2 * (2 * induced_edges(I) - bin(I).count("1") + 1)


# -- signed box actions of the symmetry generators ---------------------------------

# Each generator is a permutation of the five duad points; a box pair swapped
# with a flip is exactly a pair whose duads are exchanged by the permutation.
GENERATOR_POINT_MAPS = {
    "R1": {1: 1, 2: 2, 3: 5, 4: 4, 5: 3},
    "R2": {1: 1, 2: 5, 3: 3, 4: 4, 5: 2},
    "T": {1: 4, 2: 2, 3: 3, 4: 1, 5: 5},
    "R3": {1: 3, 2: 4, 3: 1, 4: 2, 5: 5},
}

# Boxes that pick up a hook flip under each generator (the swapped pairs of
# the signed action; the fixed boxes never flip).
GENERATOR_FLIPS = {
    "R1": ("a1", "c2", "a2", "c4", "a3", "c5"),
    "R2": ("b1", "c2", "b2", "c4", "bt3", "c5"),
    "T": (),
    "R3": ("a2", "c2", "b2", "c5", "c3", "c4"),
}


def box_permutation(gen: str) -> dict[str, str]:
    pt = GENERATOR_POINT_MAPS[gen]
    duad_to_box = {frozenset(d): b for b, d in BOX_DUAD.items()}
    return {
        b: duad_to_box[frozenset(pt[p] for p in duad)]
        for b, duad in BOX_DUAD.items()
    }


def apply_generator(s: StanleySum, gen: str) -> StanleySum:
    """Transport a sum along a signed box action.

    The signed swaps act on the primed monomials (the polynomial form),
    so masks are moved through primed coordinates.  Every generator flips
    an even number of boxes, so the global sign is +1.
    """
    perm = box_permutation(gen)
    flips = set(GENERATOR_FLIPS[gen])
    terms: dict[int, Fraction] = {}
    for mask, c in s.terms.items():
        pm = primed_mask(mask)
        new = 0
        for b in FREE_BOXES:
            bit = pm >> BOX_BIT[b] & 1
            if b in flips:
                bit ^= 1
            new |= bit << BOX_BIT[perm[b]]
        disp = primed_mask(new)
        terms[disp] = terms.get(disp, Fraction(0)) + c
    return StanleySum(terms)


def act_on_box_choice(gen: str, box: str, c: str) -> tuple[str, str]:
    """Image of a (box, choice) pair under a signed generator."""
    perm = box_permutation(gen)
    if box in GENERATOR_FLIPS[gen]:
        c = _flip_choice(c)
    return perm[box], c

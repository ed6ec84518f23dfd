"""Petersen and Johnson graph machinery.

The Petersen graph is modelled as the Kneser graph K(5,2): vertices are the
2-subsets (duads) of a 5-point set, adjacent when disjoint.  The Johnson
graph J(6,3) has the 3-subsets of a 6-point set as vertices, adjacent when
they share two points.  The ground set is {0..5}; the duads live on {0..4}
and the sixth point 5 is the one adjoined to every syntheme.

Subsets are stored as bitmasks and enumerated in lexicographic order of
their element tuples.  All spectral claims are established by exact
rational rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .stanley import BOX_DUAD, FREE_BOXES

POINTS = (0, 1, 2, 3, 4, 5)
DUAD_POINTS = (0, 1, 2, 3, 4)
FULL6 = (1 << 6) - 1


def mask_from(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def elements(mask: int) -> tuple[int, ...]:
    return tuple(p for p in POINTS if mask >> p & 1)


def complement6(mask: int) -> int:
    return mask ^ FULL6


PETERSEN_VERTICES = tuple(
    mask_from(d) for d in combinations(DUAD_POINTS, 2))
JOHNSON_VERTICES = tuple(
    mask_from(t) for t in combinations(POINTS, 3))

# Box labels of the ten free boxes, as duads on {0..4} (the shared duad
# table is 1-based on {1..5}).
BOX_DUAD0 = {
    b: mask_from(p - 1 for p in duad) for b, duad in BOX_DUAD.items()
}
DUAD0_BOX = {m: b for b, m in BOX_DUAD0.items()}


def petersen_adjacent(a: int, b: int) -> bool:
    return a != b and not a & b


def johnson_adjacent(a: int, b: int) -> bool:
    return bin(a & b).count("1") == 2


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def petersen_graph() -> Graph:
    edges = tuple(
        (a, b) for a, b in combinations(PETERSEN_VERTICES, 2)
        if petersen_adjacent(a, b))
    return Graph(PETERSEN_VERTICES, edges)


def johnson_graph() -> Graph:
    edges = tuple(
        (a, b) for a, b in combinations(JOHNSON_VERTICES, 2)
        if johnson_adjacent(a, b))
    return Graph(JOHNSON_VERTICES, edges)


# -- mystic pentagons --------------------------------------------------------------

@dataclass(frozen=True)
class MysticPentagon:
    """A 2-coloring of the edges of K5 whose white edges form a 5-cycle.

    The black edges (the remaining five duads) then form the complementary
    5-cycle automatically.
    """

    white: frozenset

    def __post_init__(self):
        if not is_pentagon(self.white):
            raise ValueError("white edges must form a 5-cycle")

    @property
    def black(self) -> frozenset:
        return frozenset(set(PETERSEN_VERTICES) - self.white)


def is_pentagon(duads) -> bool:
    """True when the duads are the edge set of a single 5-cycle on {0..4}."""
    duads = list(duads)
    if len(set(duads)) != 5:
        return False
    degree = {p: 0 for p in DUAD_POINTS}
    for d in duads:
        pts = elements(d)
        if len(pts) != 2 or any(p > 4 for p in pts):
            return False
        for p in pts:
            degree[p] += 1
    if any(deg != 2 for deg in degree.values()):
        return False
    # 2-regular on five points is one 5-cycle exactly when connected
    seen = {0}
    frontier = [0]
    while frontier:
        p = frontier.pop()
        for d in duads:
            if p in elements(d):
                other = [x for x in elements(d) if x != p][0]
                if other not in seen:
                    seen.add(other)
                    frontier.append(other)
    return len(seen) == 5


def all_pentagons() -> tuple[MysticPentagon, ...]:
    """The twelve 5-cycle colorings, deterministically ordered."""
    found = set()
    rest = (1, 2, 3, 4)
    from itertools import permutations
    for order in permutations(rest):
        cycle = (0,) + order
        edges = frozenset(
            mask_from((cycle[i], cycle[(i + 1) % 5])) for i in range(5))
        found.add(edges)
    assert len(found) == 12
    return tuple(
        MysticPentagon(w)
        for w in sorted(found, key=lambda s: sorted(map(elements, s))))


# White edges of the pentagon 1-2-3-4-5-1 in the 1-based labels, i.e. the
# cycle 0-1-2-3-4-0 here; the pentad and embedding examples all use it.
CANONICAL_PENTAGON = MysticPentagon(frozenset(
    mask_from(d) for d in ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))))

# Pinned orbit table of rho for the canonical pentagon: the five 4-cycles,
# each row reading (T, rho(T), T^c, rho(T)^c) in 1-based point triples.
RHO_FOUR_CYCLES = (
    ((1, 2, 6), (1, 2, 4), (3, 4, 5), (3, 5, 6)),
    ((1, 3, 6), (4, 5, 6), (2, 4, 5), (1, 2, 3)),
    ((1, 4, 6), (2, 3, 6), (2, 3, 5), (1, 4, 5)),
    ((1, 5, 6), (1, 3, 5), (2, 3, 4), (2, 4, 6)),
    ((2, 5, 6), (3, 4, 6), (1, 3, 4), (1, 2, 5)),
)


def _extra_point(P: MysticPentagon) -> int:
    covered = set()
    for d in P.white:
        covered.update(elements(d))
    missing = [p for p in POINTS if p not in covered]
    assert len(missing) == 1
    return missing[0]


def pentad_from_pentagon(P: MysticPentagon, q: int) -> frozenset:
    """The five synthemes determined by a mystic pentagon.

    Each white duad A has a unique disjoint black duad B; with e the point
    of the 5-cycle left over, {A, B, {e,q}} is a syntheme.  The five
    synthemes partition the fifteen duads of the six points.
    """
    if q not in POINTS or any(q in elements(d) for d in P.white):
        raise ValueError("q must be the point avoided by the pentagon")
    synthemes = []
    for A in P.white:
        disjoint_black = [B for B in P.black if not A & B]
        if len(disjoint_black) != 1:
            raise ValueError("white edges must form a 5-cycle")
        B = disjoint_black[0]
        e = [p for p in DUAD_POINTS if not (A | B) >> p & 1]
        assert len(e) == 1
        synthemes.append(frozenset({A, B, mask_from((e[0], q))}))
    result = frozenset(synthemes)
    covered = [d for s in result for d in s]
    assert len(covered) == 15 and len(set(covered)) == 15
    return result


# -- the order-4 map rho and the Petersen embeddings --------------------------------

def rho(P: MysticPentagon) -> dict[int, int]:
    """The order-4 permutation of the 3-subsets defined by a pentagon.

    For a 3-subset T let d_T be the q-free duad of the q-containing member
    of {T, T^c}, let {d_T, d', {e,q}} be its syntheme and D(T) = {q} + d'.
    Then rho(T) is D(T), complemented exactly when (q not in T) differs
    from the whiteness of d_T.
    """
    q = _extra_point(P)
    pentad = pentad_from_pentagon(P, q)
    qbit = 1 << q
    by_duad = {}
    for syntheme in pentad:
        free = [d for d in syntheme if not d & qbit]
        if len(free) == 2:
            by_duad[free[0]] = free[1]
            by_duad[free[1]] = free[0]
    out = {}
    for T in JOHNSON_VERTICES:
        if T & qbit:
            d = T ^ qbit
            q_in = True
        else:
            d = complement6(T) ^ qbit
            q_in = False
        dprime = by_duad[d]
        image = qbit | dprime
        if (not q_in) != (d in P.white):
            image = complement6(image)
        out[T] = image
    return out


def gamma_embedding(P: MysticPentagon) -> dict[int, int]:
    """The Petersen-to-Johnson embedding: a duad d maps to rho(d + {q})."""
    q = _extra_point(P)
    r = rho(P)
    return {d: r[d | (1 << q)] for d in PETERSEN_VERTICES}


def all_embeddings() -> tuple[dict[int, int], ...]:
    """The distinct embeddings over all pentagon colorings (twelve)."""
    seen = []
    for P in all_pentagons():
        g = gamma_embedding(P)
        if g not in seen:
            seen.append(g)
    return tuple(seen)


# -- signed permutations and the intertwiners ---------------------------------------

@dataclass(frozen=True)
class SignedPermutation:
    """A permutation of the six points, optionally composed with
    complementation of 3-subsets (sign -1)."""

    sign: int
    images: tuple[int, ...]  # images[p] is the image of point p

    def apply(self, mask: int) -> int:
        out = 0
        for p in POINTS:
            if mask >> p & 1:
                out |= 1 << self.images[p]
        if self.sign < 0:
            out = complement6(out)
        return out

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        images = tuple(self.images[other.images[p]] for p in POINTS)
        return SignedPermutation(self.sign * other.sign, images)


def _perm_from_swaps(*swaps) -> tuple[int, ...]:
    images = list(POINTS)
    for a, b in swaps:
        images[a], images[b] = images[b], images[a]
    return tuple(images)


# The five generators, written 0-based (the 1-based forms are
# s12=-(46)(15)(23), s23=-(56)(12)(34), s34=-(16)(23)(45),
# s45=-(26)(15)(34), s56=-(65)(14)(23)).
S12 = SignedPermutation(-1, _perm_from_swaps((3, 5), (0, 4), (1, 2)))
S23 = SignedPermutation(-1, _perm_from_swaps((4, 5), (0, 1), (2, 3)))
S34 = SignedPermutation(-1, _perm_from_swaps((0, 5), (1, 2), (3, 4)))
S45 = SignedPermutation(-1, _perm_from_swaps((1, 5), (0, 4), (2, 3)))
S56 = SignedPermutation(-1, _perm_from_swaps((4, 5), (0, 3), (1, 2)))

# The duad-side transpositions the first four intertwine: adjacent
# transpositions of the five pentagon points.
DUAD_TRANSPOSITIONS = (
    _perm_from_swaps((0, 1)),
    _perm_from_swaps((1, 2)),
    _perm_from_swaps((2, 3)),
    _perm_from_swaps((3, 4)),
)


def intertwiner_generators() -> tuple[SignedPermutation, ...]:
    return (S12, S23, S34, S45, S56)


def apply_point_perm(images: tuple[int, ...], mask: int) -> int:
    out = 0
    for p in POINTS:
        if mask >> p & 1:
            out |= 1 << images[p]
    return out


def sigma56_on_ell() -> dict[str, tuple[str, int]]:
    """The signed permutation of the ten ell-variables induced by s56.

    Transported through the canonical embedding with the identification
    of a 3-subset with minus its complement: each box's image vertex is
    either another box's gamma-image (sign +1) or its complement (-1).
    """
    g = gamma_embedding(CANONICAL_PENTAGON)
    vertex_box = {}
    for b in FREE_BOXES:
        vertex_box[g[BOX_DUAD0[b]]] = (b, 1)
        vertex_box[complement6(g[BOX_DUAD0[b]])] = (b, -1)
    out = {}
    for b in FREE_BOXES:
        image = S56.apply(g[BOX_DUAD0[b]])
        out[b] = vertex_box[image]
    return out


# -- exact spectra -----------------------------------------------------------------

def rational_rank(rows) -> int:
    """Rank of a matrix of Fractions by Gaussian elimination."""
    rows = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(cols):
        pivot = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = rows[pivot_row][col]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col] / inv
                rows[r] = [x - factor * y
                           for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
    return rank


def adjacency_matrix(graph: Graph) -> list[list[Fraction]]:
    index = {v: i for i, v in enumerate(graph.vertices)}
    n = len(graph.vertices)
    mat = [[Fraction(0)] * n for _ in range(n)]
    for a, b in graph.edges:
        mat[index[a]][index[b]] = Fraction(1)
        mat[index[b]][index[a]] = Fraction(1)
    return mat


def eigenspace_dimension(graph: Graph, value) -> int:
    """dim ker(A - value*Id), exactly."""
    mat = adjacency_matrix(graph)
    n = len(mat)
    for i in range(n):
        mat[i][i] -= Fraction(value)
    return n - rational_rank(mat)


def petersen_spectrum() -> dict[int, int]:
    g = petersen_graph()
    dims = {k: eigenspace_dimension(g, k) for k in (3, 1, -2)}
    assert sum(dims.values()) == 10
    return dims


def johnson_spectrum() -> dict[int, int]:
    g = johnson_graph()
    dims = {k: eigenspace_dimension(g, k) for k in (9, 3, -1, -3)}
    assert sum(dims.values()) == 20
    return dims


# -- the appendix triple table -------------------------------------------------------

APPENDIX_TRIPLES = {
    "a1": mask_from((1, 4, 5)),
    "a2": mask_from((1, 3, 5)),
    "a3": mask_from((2, 3, 5)),
    "b1": mask_from((0, 2, 5)),
    "b2": mask_from((0, 1, 2)),
    "bt3": mask_from((1, 2, 4)),
    "c2": mask_from((2, 3, 4)),
    "c3": mask_from((0, 1, 3)),
    "c4": mask_from((0, 3, 4)),
    "c5": mask_from((0, 4, 5)),
}


def appendix_matching_pentagons() -> tuple[tuple[dict, MysticPentagon], ...]:
    """Embeddings realizing the appendix triple table up to complement.

    The appendix labels the six points in its own order, so the match is
    sought over all relabelings of the five duad points together with all
    pentagon colorings: returned are the (point_map, pentagon) pairs with
    gamma(point_map(duad(b))) equal to the appendix triple of b or its
    complement for every box.  point_map sends the 1-based duad points
    {1..5} into {0..4}.  Exactly one relabeling works, with one pentagon
    up to color swap.
    """
    from itertools import permutations
    matches = []
    for bij in permutations(DUAD_POINTS):
        point_map = {i + 1: bij[i] for i in range(5)}
        duads = {
            b: mask_from(point_map[p] for p in duad)
            for b, duad in BOX_DUAD.items()
        }
        for P in all_pentagons():
            g = gamma_embedding(P)
            if all(
                g[duads[b]] in (T, complement6(T))
                for b, T in APPENDIX_TRIPLES.items()
            ):
                matches.append((point_map, P))
    return tuple(matches)

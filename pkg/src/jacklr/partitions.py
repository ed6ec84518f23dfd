"""Integer partitions, boxes, alpha-hook lengths, corners, and pivot pairs.

Conventions, fixed once for the whole package:

* Partitions are tuples of weakly decreasing positive integers; ``()`` is the
  empty partition.  Text form is comma-separated parts (``3,2,1``), with the
  empty string for the empty partition.
* Boxes are 0-indexed ``(row, col)`` pairs in English convention: row 0 is the
  longest row, and box ``(i, j)`` lies in ``lam`` iff ``j < lam[i]``.
* Hook lengths deform with a parameter alpha (variable ``a``): the upper hook
  is ``a*(arm+1) + leg`` and the lower hook is ``a*arm + leg + 1``; their
  difference is always ``a - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import ALPHA, MultiPoly, ONE

Partition = tuple[int, ...]
Box = tuple[int, int]


def check_partition(lam) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam):
        raise ValueError(f"nonpositive part in {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts not weakly decreasing: {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        return check_partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def weight(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains_box(lam: Partition, box: Box) -> bool:
    i, j = box
    return 0 <= i < len(lam) and 0 <= j < lam[i]


def contains(lam: Partition, mu: Partition) -> bool:
    """Containment of Young diagrams: mu_i <= lam_i for all i."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def boxes(lam: Partition):
    for i, p in enumerate(lam):
        for j in range(p):
            yield (i, j)


def arm(lam: Partition, box: Box) -> int:
    if not contains_box(lam, box):
        raise ValueError(f"box {box} not in diagram {lam}")
    i, j = box
    return lam[i] - j - 1


def leg(lam: Partition, box: Box) -> int:
    if not contains_box(lam, box):
        raise ValueError(f"box {box} not in diagram {lam}")
    i, j = box
    return conjugate(lam)[j] - i - 1


def upper_hook(lam: Partition, box: Box) -> MultiPoly:
    """alpha*(arm+1) + leg."""
    return ALPHA * (arm(lam, box) + 1) + leg(lam, box)


def lower_hook(lam: Partition, box: Box) -> MultiPoly:
    """alpha*arm + leg + 1."""
    return ALPHA * arm(lam, box) + (leg(lam, box) + 1)


def ordinary_hook(lam: Partition, box: Box) -> int:
    return arm(lam, box) + leg(lam, box) + 1


def ordinary_hook_product(lam: Partition) -> int:
    out = 1
    for b in boxes(lam):
        out *= ordinary_hook(lam, b)
    return out


def addable_corners(lam: Partition) -> list[Box]:
    """Boxes whose addition yields a partition, sorted by increasing row."""
    out = []
    for i in range(len(lam) + 1):
        j = lam[i] if i < len(lam) else 0
        above = lam[i - 1] if i > 0 else None
        if above is None or j < above:
            out.append((i, j))
    return out


def removable_corners(lam: Partition) -> list[Box]:
    out = []
    for i, p in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if p > below:
            out.append((i, p - 1))
    return out


def add_box(lam: Partition, box: Box) -> Partition:
    i, j = box
    if box not in addable_corners(lam):
        raise ValueError(f"{box} is not an addable corner of {lam}")
    parts = list(lam)
    if i == len(parts):
        parts.append(1)
    else:
        parts[i] += 1
    return tuple(parts)


def remove_box(lam: Partition, box: Box) -> Partition:
    i, j = box
    if box not in removable_corners(lam):
        raise ValueError(f"{box} is not a removable corner of {lam}")
    parts = list(lam)
    parts[i] -= 1
    if parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (equal weights assumed)."""
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic (descending) order.

    This order refines dominance: lam > mu in dominance implies lam appears
    first.
    """
    if n < 0:
        raise ValueError("negative weight")

    def rec(rem: int, largest: int):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, largest), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest

    return tuple(rec(n, n))


def z_factor(lam: Partition) -> int:
    """z_lambda = prod_i i^{m_i} m_i! with m_i the multiplicity of i."""
    out = 1
    for v in set(lam):
        m = lam.count(v)
        fact = 1
        for k in range(2, m + 1):
            fact *= k
        out *= v ** m * fact
    return out


@dataclass(frozen=True)
class PivotPair:
    """Two partitions differing by a single box move, with their pivot box.

    ``corner_a`` and ``corner_b`` are distinct addable corners of ``base``
    with ``row(a) > row(b)``; the pivot box ``d`` is the componentwise minimum
    ``(row(b), col(a))`` and carries the shared hook
    ``upper_hook(lambda1, d) = lower_hook(lambda2, d)``.
    """

    base: Partition
    corner_a: Box
    corner_b: Box
    lambda1: Partition
    lambda2: Partition
    pivot_box: Box
    shared_hook: MultiPoly


def pivot_pairs(kappa: Partition) -> list[PivotPair]:
    corners = addable_corners(kappa)
    out = []
    for bi in range(len(corners)):
        for ai in range(bi + 1, len(corners)):
            b, a = corners[bi], corners[ai]  # row(a) > row(b)
            lam1, lam2 = add_box(kappa, a), add_box(kappa, b)
            d = (b[0], a[1])
            hook = upper_hook(lam1, d)
            if hook != lower_hook(lam2, d):
                raise AssertionError(
                    f"pivot hook mismatch at {kappa}, corners {a}, {b}")
            out.append(PivotPair(kappa, a, b, lam1, lam2, d, hook))
    return out


# -- the root triple's box dictionary -------------------------------------------
#
# The ten free boxes of the (2,1) x (2,1) -> (3,2,1) triple, plus the bound
# boxes b3, c1, c6.  Slot is one of "mu", "nu", "lam".

ROOT_MU: Partition = (2, 1)
ROOT_NU: Partition = (2, 1)
ROOT_LAM: Partition = (3, 2, 1)

ROOT_BOX_TABLE: dict[str, tuple[str, Box]] = {
    "a1": ("mu", (1, 0)),
    "a2": ("mu", (0, 0)),
    "a3": ("mu", (0, 1)),
    "b1": ("nu", (1, 0)),
    "b2": ("nu", (0, 0)),
    "b3": ("nu", (0, 1)),
    "c1": ("lam", (2, 0)),
    "c2": ("lam", (1, 0)),
    "c3": ("lam", (1, 1)),
    "c4": ("lam", (0, 0)),
    "c5": ("lam", (0, 1)),
    "c6": ("lam", (0, 2)),
}


def root_hook(name: str, choice: str) -> MultiPoly:
    """Hook of a named root-triple box; choice is 'U' or 'L'."""
    slot, box = ROOT_BOX_TABLE[name]
    lam = {"mu": ROOT_MU, "nu": ROOT_NU, "lam": ROOT_LAM}[slot]
    if choice == "U":
        return upper_hook(lam, box)
    if choice == "L":
        return lower_hook(lam, box)
    raise ValueError(f"bad hook choice {choice!r}")

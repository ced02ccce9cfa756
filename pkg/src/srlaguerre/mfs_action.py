"""Valley hopping: the x-factorization and the modified Foata-Strehl action.

All letter classifications here use the zero boundary pi(0) = pi(n+1) = 0.
The starred linear statistics (peaks, valleys, double ascents, double
descents under that boundary) live here next to the action that uses them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multiset import IntMultiset
from .perm_stats import Permutation, coordinate_stat, linear_class


@dataclass(frozen=True)
class StarredClasses:
    """Values of a permutation classified under the zero boundary."""

    Lpk: IntMultiset
    Lval: IntMultiset
    Lda: IntMultiset
    Ldd: IntMultiset

    @property
    def lpk(self) -> int:
        return self.Lpk.cardinality

    @property
    def lval(self) -> int:
        return self.Lval.cardinality

    @property
    def lda(self) -> int:
        return self.Lda.cardinality

    @property
    def ldd(self) -> int:
        return self.Ldd.cardinality


def starred_classes(pi: Permutation) -> StarredClasses:
    """Classify every value of pi as peak / valley / double ascent / descent."""
    buckets: dict[str, list[int]] = {
        "peak": [], "valley": [], "double_ascent": [], "double_descent": [],
    }
    for p in range(1, pi.n + 1):
        buckets[linear_class(pi.word, p, 0, 0)].append(pi.word[p - 1])
    return StarredClasses(
        Lpk=IntMultiset(buckets["peak"]),
        Lval=IntMultiset(buckets["valley"]),
        Lda=IntMultiset(buckets["double_ascent"]),
        Ldd=IntMultiset(buckets["double_descent"]),
    )


def x_factorization(
    pi: Permutation, x: int
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Split pi = w1 w2 x w3 w4 around the letter x.

    w2 (resp. w3) is the maximal contiguous block immediately left (right)
    of x whose letters are all larger than x.
    """
    word = pi.word
    p = pi.position(x) - 1
    lo = p
    while lo > 0 and word[lo - 1] > x:
        lo -= 1
    hi = p + 1
    while hi < len(word) and word[hi] > x:
        hi += 1
    return word[:lo], word[lo:p], word[p + 1:hi], word[hi:]


def mfs_phi_x(pi: Permutation, x: int) -> Permutation:
    """One hop: swap the blocks around x unless x is a valley."""
    if linear_class(pi.word, pi.position(x), 0, 0) == "valley":
        return pi
    w1, w2, w3, w4 = x_factorization(pi, x)
    return Permutation(w1 + w3 + (x,) + w2 + w4)


def mfs_full(pi: Permutation) -> Permutation:
    """The involution that hops every letter that can hop.

    Applies the single-letter action for every x in [n]; the single-letter
    actions commute, so the order of application does not matter.
    """
    result = pi
    for x in range(1, pi.n + 1):
        result = mfs_phi_x(result, x)
    return result


def coordinate_stat_zero_boundary(pi: Permutation, which: str, i: int) -> int:
    """Coordinate pattern statistic with the zero boundary in force.

    The virtual letters pi(0) = pi(n+1) = 0 take part in the adjacent pairs,
    so the final pair (pi(n), 0) is always a descent.  Only ``2-31`` is
    affected: position i < n gains one occurrence when pi(i) < pi(n).  The
    ``2-13`` and ``31-2`` counts coincide with the plain ones, since the
    virtual pairs can never serve them.
    """
    base = coordinate_stat(pi, which, i)
    if which == "2-31" and i < pi.n and pi.value(i) < pi.value(pi.n):
        base += 1
    return base


def pattern_multisets_zero_boundary(
    pi: Permutation,
) -> tuple[IntMultiset, IntMultiset, IntMultiset]:
    """The three coordinate multisets under the zero boundary."""
    results = []
    for which in ("2-13", "2-31", "31-2"):
        items: list[int] = []
        for i in range(1, pi.n + 1):
            items.extend([pi.value(i)] * coordinate_stat_zero_boundary(pi, which, i))
        results.append(IntMultiset(items))
    return results[0], results[1], results[2]


def _extrema_sequence(pi: Permutation) -> list[tuple[int, int, str]]:
    """Valleys and peaks left to right as (position, value, kind).

    The zero boundary contributes virtual valleys of value 0 at positions 0
    and n+1.
    """
    out = [(0, 0, "valley")]
    for p in range(1, pi.n + 1):
        kind = linear_class(pi.word, p, 0, 0)
        if kind in ("valley", "peak"):
            out.append((p, pi.word[p - 1], kind))
    out.append((pi.n + 1, 0, "valley"))
    return out


def coordinate_stat_by_extrema(pi: Permutation, which: str, i: int) -> int:
    """Zero-boundary coordinate statistic recomputed from consecutive extrema.

    Each occurrence is witnessed by a consecutive valley/peak pair (no other
    extremum strictly between them) bracketing the value pi(i): ``2-13`` uses
    a (valley, peak) pair to the right of i, ``2-31`` a (peak, valley) pair
    to the right, and ``31-2`` a (peak, valley) pair to the left.  Serves as
    an independent oracle for the direct zero-boundary counts.
    """
    v = pi.value(i)
    extrema = _extrema_sequence(pi)
    count = 0
    for (j, vj, kind_j), (k, vk, kind_k) in zip(extrema, extrema[1:]):
        if which == "2-13":
            if kind_j == "valley" and kind_k == "peak" and i < j:
                if vj < v < vk:
                    count += 1
        elif which == "2-31":
            if kind_j == "peak" and kind_k == "valley" and i < j:
                if vk < v < vj:
                    count += 1
        elif which == "31-2":
            if kind_j == "peak" and kind_k == "valley" and k < i:
                if vk < v < vj:
                    count += 1
        else:
            raise ValueError(f"unknown coordinate statistic: {which!r}")
    return count

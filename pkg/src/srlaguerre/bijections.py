"""Bijections between permutations and weight-bounded bicolored Motzkin paths.

Three encodings are provided with their inverses: the linear one driven by
value classes and descent-based weights (phi_fv), the cyclic one driven by
excedance classes and side numbers (phi_fz), and the shifted-cyclic one
driven by nestings around the position of 1 (phi_yzl).  Derived maps: the
composition phi_csz, the mirror theta, the Kreweras complement, and the
permutation maps obtained by conjugating the path involution xi through
each encoding.
"""

from __future__ import annotations

from .histories import (
    LaguerreHistory,
    StepType,
    critical_step,
    history_statistics,
)
from .involution import xi
from .perm_stats import (
    Permutation,
    coordinate_stat,
    linear_class,
    side_numbers,
    variant_nesting_numbers,
)


class SlotIndexOutOfRange(ValueError):
    """Slot-insertion inversion addressed a nonexistent empty slot."""


class PlacementImpossible(ValueError):
    """Column placement inversion could not place a value."""


class ArcMismatch(ValueError):
    """Semi-arc inversion produced an inconsistent diagram."""


_CLASS_TO_STEP = {
    "valley": StepType.N,
    "peak": StepType.S,
    "double_ascent": StepType.E,
    "double_descent": StepType.DE,
}


# ---------------------------------------------------------------------------
# Linear encoding
# ---------------------------------------------------------------------------

def phi_fv(pi: Permutation) -> LaguerreHistory:
    """Encode by the linear class of each value.

    Value i becomes N / S / E / dE according to whether it is a valley,
    peak, double ascent, or double descent of the word, with boundary
    values smaller than all (left) and larger than all (right).  The weight
    of i is its 2-31 coordinate count, plus one on S and dE steps.
    """
    n = pi.n
    steps = []
    weights = []
    for i in range(1, n + 1):
        step = _CLASS_TO_STEP[linear_class(pi.word, pi.position(i), 0, n + 1)]
        c = coordinate_stat(pi, "2-31", pi.position(i))
        if step.is_sde:
            c += 1
        steps.append(step)
        weights.append(c)
    return LaguerreHistory(steps, weights)


def phi_fv_inv(history: LaguerreHistory) -> Permutation:
    """Invert the linear encoding by slot insertion.

    Starting from a single empty slot, letter i replaces the c_i-th empty
    slot counted from the right starting at 0: an S step inserts ``i``, an
    N step ``slot i slot``, an E step ``i slot``, a dE step ``slot i``.
    The one leftover slot at the far right is erased.
    """
    word: list[int | None] = [None]
    for i in range(1, history.n + 1):
        empties = [p for p, v in enumerate(word) if v is None]
        c = history.weight(i)
        if c >= len(empties):
            raise SlotIndexOutOfRange(
                f"step {i} wants empty slot {c} of {len(empties)}"
            )
        p = empties[len(empties) - 1 - c]
        step = history.step(i)
        if step is StepType.S:
            word[p:p + 1] = [i]
        elif step is StepType.N:
            word[p:p + 1] = [None, i, None]
        elif step is StepType.E:
            word[p:p + 1] = [i, None]
        else:
            word[p:p + 1] = [None, i]
    if word[-1] is not None or any(v is None for v in word[:-1]):
        raise SlotIndexOutOfRange("leftover slot is not the trailing one")
    return Permutation(word[:-1])


# ---------------------------------------------------------------------------
# Cyclic encoding
# ---------------------------------------------------------------------------

def phi_fz(pi: Permutation) -> LaguerreHistory:
    """Encode by the cyclic class of each value.

    Value i becomes N / S / E / dE according to whether it is a cyclic
    valley, cyclic peak, cyclic double descent, or cyclic double ascent.
    The weight of i is the side number at position pi^{-1}(i), plus one on
    S and dE steps.
    """
    n = pi.n
    side = side_numbers(pi)
    steps = []
    weights = []
    for i in range(1, n + 1):
        p = pi.position(i)
        q = pi.value(i)
        if p > i < q:
            step = StepType.N
        elif p < i > q:
            step = StepType.S
        elif p >= i >= q:
            step = StepType.E
        else:
            step = StepType.DE
        c = side[p - 1]
        if step.is_sde:
            c += 1
        steps.append(step)
        weights.append(c)
    return LaguerreHistory(steps, weights)


def _place_left(values: list[int], weights: dict[int, int], size: int) -> list[int]:
    """Place values smallest-first; value x lands in the c_x-th empty slot
    counted from the left (1-based)."""
    row: list[int | None] = [None] * size
    for x in sorted(values):
        empties = [p for p, v in enumerate(row) if v is None]
        k = weights[x] - 1
        if not 0 <= k < len(empties):
            raise PlacementImpossible(f"value {x} wants empty slot {k + 1}")
        row[empties[k]] = x
    return [v for v in row if v is not None]


def _place_right(values: list[int], weights: dict[int, int], size: int) -> list[int]:
    """Place values largest-first; value x keeps c_x empty slots to its
    right."""
    row: list[int | None] = [None] * size
    for x in sorted(values, reverse=True):
        empties = [p for p, v in enumerate(row) if v is None]
        k = weights[x]
        if not 0 <= k < len(empties):
            raise PlacementImpossible(f"value {x} wants {k} empty slots right")
        row[empties[len(empties) - 1 - k]] = x
    return [v for v in row if v is not None]


def phi_fz_inv(history: LaguerreHistory) -> Permutation:
    """Invert the cyclic encoding by building two placement words.

    The excedance word maps N/dE step indices (ascending) to S/dE step
    indices placed smallest-first with c_x - 1 empty slots to the left; the
    non-excedance word maps S/E step indices to N/E step indices placed
    largest-first with c_x empty slots to the right.
    """
    n = history.n
    weights = {i: history.weight(i) for i in range(1, n + 1)}
    nde = [i for i in range(1, n + 1) if history.step(i).is_nde]
    sde = [i for i in range(1, n + 1) if history.step(i).is_sde]
    se = [i for i in range(1, n + 1) if history.step(i) in (StepType.S, StepType.E)]
    ne = [i for i in range(1, n + 1) if history.step(i).is_ne]
    if len(nde) != len(sde) or len(se) != len(ne):
        raise PlacementImpossible("column counts disagree")
    exc_bottom = _place_left(sde, weights, len(nde))
    nexc_bottom = _place_right(ne, weights, len(se))
    word = [0] * n
    for pos, val in zip(nde + se, exc_bottom + nexc_bottom):
        word[pos - 1] = val
    if sorted(word) != list(range(1, n + 1)):
        raise PlacementImpossible("placement did not produce a permutation")
    return Permutation(word)


# ---------------------------------------------------------------------------
# Shifted-cyclic encoding
# ---------------------------------------------------------------------------

def phi_yzl(pi: Permutation) -> LaguerreHistory:
    """Encode by the shifted-cyclic class of each index.

    For i < n away from pone (the position of the letter 1), the step is
    N / S / E / dE according to the shifted valley / peak / double-descent /
    double-ascent classes; i = pone < n takes N or E, and i = n takes S
    unless pone = n, in which case E.  The weight of i is the variant
    nesting number, plus one on S and dE steps.
    """
    n = pi.n
    pone = pi.position(1)
    vnest = variant_nesting_numbers(pi)
    steps = []
    for i in range(1, n + 1):
        if i == n:
            step = StepType.E if pone == n else StepType.S
        elif i == pone:
            step = StepType.N if i + 1 <= pi.position(i + 1) else StepType.E
        else:
            up_left = pi.value(i) > i
            up_right = i + 1 <= pi.position(i + 1)
            if up_left and up_right:
                step = StepType.N
            elif not up_left and not up_right:
                step = StepType.S
            elif up_left:
                step = StepType.E
            else:
                step = StepType.DE
        steps.append(step)
    weights = [
        vnest[i - 1] + (1 if steps[i - 1].is_sde else 0) for i in range(1, n + 1)
    ]
    return LaguerreHistory(steps, weights)


def phi_yzl_inv(history: LaguerreHistory) -> Permutation:
    """Invert the shifted-cyclic encoding via a semi-arc diagram.

    Every node gets one outward stub (AR above for an excedance left
    endpoint, BL below for a weak-deficiency right endpoint) and one inward
    stub (AL above right endpoint, BR below left endpoint).  Nesting
    numbers recovered from the weights dictate how stubs are paired.
    """
    n = history.n
    k = critical_step(history)
    stats = history_statistics(history)

    ar: list[int] = []
    al: list[int] = []
    bl: list[int] = []
    br: list[int] = [1]
    bl.extend({k, n})
    if k < n:
        if history.step(k) is StepType.N:
            br.append(k + 1)
        else:
            al.append(k + 1)
    for i in range(1, n):
        if i == k:
            continue
        step = history.step(i)
        if step is StepType.N:
            ar.append(i)
            br.append(i + 1)
        elif step is StepType.E:
            ar.append(i)
            al.append(i + 1)
        elif step is StepType.DE:
            bl.append(i)
            br.append(i + 1)
        else:
            bl.append(i)
            al.append(i + 1)
    if len(ar) != len(al) or len(bl) != len(br):
        raise ArcMismatch("stub counts disagree")

    nest = {}
    for i in range(1, n + 1):
        nest[i] = (
            history.weight(i)
            - (1 if history.step(i).is_sde else 0)
            + (1 if i in stats.Sdeb else 0)
            - (1 if i in stats.Nea else 0)
        )

    sigma: dict[int, int] = {}
    remaining_al = sorted(al, reverse=True)
    for i in sorted(ar, reverse=True):
        if not 0 <= nest[i] < len(remaining_al):
            raise ArcMismatch(f"node {i} wants upper partner {nest[i]}")
        j = remaining_al.pop(nest[i])
        if j <= i:
            raise ArcMismatch(f"upper arc {i}->{j} points backwards")
        sigma[i] = j
    remaining_br = sorted(br)
    for j in sorted(bl):
        if not 0 <= nest[j] < len(remaining_br):
            raise ArcMismatch(f"node {j} wants lower partner {nest[j]}")
        i = remaining_br.pop(nest[j])
        if i > j:
            raise ArcMismatch(f"lower arc {j}->{i} points forwards")
        sigma[j] = i
    word = [sigma.get(i, 0) for i in range(1, n + 1)]
    if sorted(word) != list(range(1, n + 1)):
        raise ArcMismatch("diagram does not read as a permutation")
    return Permutation(word)


# ---------------------------------------------------------------------------
# Derived maps
# ---------------------------------------------------------------------------

def phi_csz(pi: Permutation) -> Permutation:
    """Transport the linear encoding into the cyclic one."""
    return phi_fz_inv(phi_fv(pi))


def theta(pi: Permutation) -> Permutation:
    """The mirror map: theta_n = n+1-pi(n) and theta_i = n+1-pi(n-i)."""
    n = pi.n
    word = [0] * n
    word[n - 1] = n + 1 - pi.value(n)
    for i in range(1, n):
        word[i - 1] = n + 1 - pi.value(n - i)
    return Permutation(word)


def kreweras(pi: Permutation) -> Permutation:
    """The Kreweras complement pi^{-1}(2) ... pi^{-1}(n) pi^{-1}(1)."""
    n = pi.n
    return Permutation(
        [pi.position(v % n + 1) for v in range(1, n + 1)]
    )


_CONJUGATED = {
    "phi": (phi_fv, phi_fv_inv),
    "phi_inv": (phi_fv, phi_fv_inv),
    "eta": (phi_fz, phi_fz_inv),
    "rho": (phi_yzl, phi_yzl_inv),
}


def conjugated_map(pi: Permutation, which: str) -> Permutation:
    """Conjugate the path involution through one of the three encodings.

    ``phi`` (alias ``phi_inv``) goes through the linear encoding, ``eta``
    through the cyclic one, ``rho`` through the shifted-cyclic one.  The
    composition is computed literally, never via a shortcut formula.
    """
    try:
        encode, decode = _CONJUGATED[which]
    except KeyError:
        raise ValueError(f"unknown conjugated map: {which!r}") from None
    return decode(xi(encode(pi)))

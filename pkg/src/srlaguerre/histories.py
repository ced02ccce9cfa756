"""Restricted Laguerre histories: weighted 2-Motzkin paths counted by n!.

A history of length n is a lattice path with steps N (up), S (down),
E (level) and dE (dotted level, written D in text form) that starts and
ends at height 0 and never dips below it, together with integer weights
c_1..c_n.  With h_i the height before step i, the weight bounds are

    0 <= c_i <= h_i   if step i is N or E      (the "NE" class)
    1 <= c_i <= h_i   if step i is S or dE     (the "SdE" class)

so an S or dE step can never occur at height 0.  There are exactly n!
histories of length n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import product
from typing import Iterable, Iterator

from .multiset import IntMultiset


class StepType(IntEnum):
    """Path steps, ordered N < E < dE < S for lexicographic enumeration."""

    N = 0
    E = 1
    DE = 2
    S = 3

    @property
    def is_ne(self) -> bool:
        return self in (StepType.N, StepType.E)

    @property
    def is_sde(self) -> bool:
        return self in (StepType.S, StepType.DE)

    @property
    def is_nde(self) -> bool:
        return self in (StepType.N, StepType.DE)

    @property
    def rise(self) -> int:
        if self is StepType.N:
            return 1
        if self is StepType.S:
            return -1
        return 0

    @property
    def letter(self) -> str:
        return _LETTER[self]


_LETTER = {StepType.N: "N", StepType.E: "E", StepType.DE: "D", StepType.S: "S"}
_BY_LETTER = {v: k for k, v in _LETTER.items()}

NE_STEPS = frozenset((StepType.N, StepType.E))
SDE_STEPS = frozenset((StepType.S, StepType.DE))
NDE_STEPS = frozenset((StepType.N, StepType.DE))
SE_STEPS = frozenset((StepType.S, StepType.E))


class PathBelowAxis(ValueError):
    """The step word dips below height 0."""

    def __init__(self, index: int):
        super().__init__(f"path drops below the axis at step {index}")
        self.index = index


class PathNotClosed(ValueError):
    """The step word does not return to height 0."""

    def __init__(self, height: int):
        super().__init__(f"path ends at height {height}, expected 0")
        self.height = height


class WeightOutOfBounds(ValueError):
    """A weight violates its class-dependent bounds."""

    def __init__(self, index: int, weight: int, lo: int, hi: int):
        super().__init__(f"weight c_{index} = {weight} outside [{lo}, {hi}]")
        self.index = index


class LaguerreHistory:
    """An immutable restricted Laguerre history (w, h, c), indices 1-based."""

    __slots__ = ("w", "h", "c")

    def __init__(self, w: Iterable[StepType], c: Iterable[int]):
        w = tuple(StepType(s) for s in w)
        c = tuple(c)
        self.w = w
        self.h = _heights(w)
        self.c = c
        if len(c) != len(w):
            raise ValueError("step word and weight sequence have different lengths")
        for i, (step, height, weight) in enumerate(zip(w, self.h, c), start=1):
            lo = 0 if step in NE_STEPS else 1
            if not lo <= weight <= height:
                raise WeightOutOfBounds(i, weight, lo, height)

    @classmethod
    def _unchecked(cls, w: tuple[StepType, ...], h: tuple[int, ...], c: tuple[int, ...]) -> "LaguerreHistory":
        obj = cls.__new__(cls)
        obj.w = w
        obj.h = h
        obj.c = c
        return obj

    @property
    def n(self) -> int:
        return len(self.w)

    def step(self, i: int) -> StepType:
        """Step i, 1-based."""
        return self.w[i - 1]

    def height(self, i: int) -> int:
        """Height before step i, 1-based."""
        return self.h[i - 1]

    def weight(self, i: int) -> int:
        """Weight c_i, 1-based."""
        return self.c[i - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaguerreHistory):
            return NotImplemented
        return self.w == other.w and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.w, self.c))

    def __repr__(self) -> str:
        return f"LaguerreHistory.from_text({self.to_text()!r})"

    def to_text(self) -> str:
        """Render as ``NNDS/0,1,2,1`` (D is the dotted east step)."""
        word = "".join(s.letter for s in self.w)
        return word + "/" + ",".join(str(x) for x in self.c)

    @classmethod
    def from_text(cls, text: str) -> "LaguerreHistory":
        text = text.strip()
        if text == "/":
            return from_word_and_weights((), ())
        if "/" not in text:
            raise ValueError(f"malformed history literal (missing '/'): {text!r}")
        word_part, _, weight_part = text.partition("/")
        try:
            w = tuple(_BY_LETTER[ch] for ch in word_part)
        except KeyError as exc:
            raise ValueError(f"unknown step letter {exc.args[0]!r}") from None
        c = tuple(int(x) for x in weight_part.split(",")) if weight_part else ()
        return from_word_and_weights(w, c)

    def to_json(self) -> dict:
        return {
            "w": [s.letter for s in self.w],
            "h": list(self.h),
            "c": list(self.c),
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaguerreHistory":
        w = tuple(_BY_LETTER[ch] for ch in data["w"])
        return from_word_and_weights(w, tuple(int(x) for x in data["c"]))


def _heights(w: tuple[StepType, ...]) -> tuple[int, ...]:
    """Heights before each step; raises if the path is invalid."""
    heights = []
    height = 0
    for i, step in enumerate(w, start=1):
        heights.append(height)
        height += step.rise
        if height < 0:
            raise PathBelowAxis(i)
    if height != 0:
        raise PathNotClosed(height)
    return tuple(heights)


def from_word_and_weights(w: Iterable[StepType], c: Iterable[int]) -> LaguerreHistory:
    """Validate and build a history from its step word and weights."""
    return LaguerreHistory(w, c)


def critical_step(history: LaguerreHistory) -> int:
    """The largest index i with c_i = 0.

    Always defined: c_1 = 0 since h_1 = 0 forces step 1 into the NE class
    with weight 0.  The critical step itself is always an N or E step.
    """
    c = history.c
    for i in range(len(c), 0, -1):
        if c[i - 1] == 0:
            return i
    raise ValueError("history has no zero weight; it cannot be valid")


@dataclass(frozen=True)
class HistoryStatRecord:
    """Statistics of a history, split around the critical step cs.

    Neb/Sdeb/Ndeb collect step indices of the given class strictly before
    cs, Nea/Sdea/Ndea strictly after.  Nde takes indices in [n-1] only.
    Asc holds the indices i in [n-1] where the weights "ascend":
    c_i < c_{i+1} for an NE step i, c_i <= c_{i+1} for an SdE step i.
    Ht has h_i copies of i, Wt has c_i copies of i.
    """

    cs: int
    Neb: IntMultiset
    Sdeb: IntMultiset
    Ndeb: IntMultiset
    Nea: IntMultiset
    Sdea: IntMultiset
    Ndea: IntMultiset
    Nde: IntMultiset
    Asc: IntMultiset
    Ht: IntMultiset
    Wt: IntMultiset

    @property
    def neb(self) -> int:
        return self.Neb.cardinality

    @property
    def sdeb(self) -> int:
        return self.Sdeb.cardinality

    @property
    def nea(self) -> int:
        return self.Nea.cardinality

    @property
    def sdea(self) -> int:
        return self.Sdea.cardinality

    @property
    def nde(self) -> int:
        return self.Nde.cardinality

    @property
    def asc(self) -> int:
        return self.Asc.cardinality

    @property
    def ht(self) -> int:
        return self.Ht.cardinality

    @property
    def wt(self) -> int:
        return self.Wt.cardinality


def history_statistics(history: LaguerreHistory) -> HistoryStatRecord:
    w = history.w
    h = history.h
    c = history.c
    n = len(w)
    cs = critical_step(history)

    neb, sdeb, ndeb, nea, sdea, ndea = [], [], [], [], [], []
    for i in range(1, n + 1):
        step = w[i - 1]
        if i < cs:
            if step in NE_STEPS:
                neb.append(i)
            else:
                sdeb.append(i)
            if step in NDE_STEPS:
                ndeb.append(i)
        elif i > cs:
            if step in NE_STEPS:
                nea.append(i)
            else:
                sdea.append(i)
            if step in NDE_STEPS:
                ndea.append(i)

    nde = [i for i in range(1, n) if w[i - 1] in NDE_STEPS]
    asc = []
    for i in range(1, n):
        if w[i - 1] in NE_STEPS:
            if c[i - 1] < c[i]:
                asc.append(i)
        elif c[i - 1] <= c[i]:
            asc.append(i)

    ht = IntMultiset.from_pairs((i, h[i - 1]) for i in range(1, n + 1) if h[i - 1])
    wt = IntMultiset.from_pairs((i, c[i - 1]) for i in range(1, n + 1) if c[i - 1])

    return HistoryStatRecord(
        cs=cs,
        Neb=IntMultiset(neb),
        Sdeb=IntMultiset(sdeb),
        Ndeb=IntMultiset(ndeb),
        Nea=IntMultiset(nea),
        Sdea=IntMultiset(sdea),
        Ndea=IntMultiset(ndea),
        Nde=IntMultiset(nde),
        Asc=IntMultiset(asc),
        Ht=ht,
        Wt=wt,
    )


def _words(n: int) -> Iterator[tuple[tuple[StepType, ...], tuple[int, ...]]]:
    """All 2-Motzkin words of length n with their height sequences, in
    lexicographic order under N < E < dE < S."""
    word: list[StepType] = []
    heights: list[int] = []

    def rec(i: int, height: int) -> Iterator[tuple[tuple[StepType, ...], tuple[int, ...]]]:
        if i == n:
            yield tuple(word), tuple(heights)
            return
        remaining = n - i - 1
        for step in (StepType.N, StepType.E, StepType.DE, StepType.S):
            nh = height + step.rise
            if nh < 0 or nh > remaining:
                continue
            word.append(step)
            heights.append(height)
            yield from rec(i + 1, nh)
            word.pop()
            heights.pop()

    return rec(0, 0)


def enumerate_histories(n: int) -> Iterator[LaguerreHistory]:
    """All n! histories of length n, in a fixed deterministic order:
    step words lexicographically (N < E < dE < S), then weight vectors
    lexicographically."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    make = LaguerreHistory._unchecked
    for w, h in _words(n):
        ranges = []
        for step, height in zip(w, h):
            if step in NE_STEPS:
                ranges.append(range(height + 1))
            else:
                ranges.append(range(1, height + 1))
        for c in product(*ranges):
            yield make(w, h, c)

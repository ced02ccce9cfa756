"""Permutation statistics.

Covers the linear family (descents, descent tops/bottoms, ascent bottoms,
descent differences and bottom sums), the cyclic family (excedances, side
numbers, inversion-entry multisets), the shifted-cyclic family (nestings and
their variant around the position of 1), vincular pattern counters, and a
registry of Mahonian statistics built from these ingredients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Callable, Iterable, Iterator, Sequence

from .multiset import IntMultiset


class NotAPermutation(ValueError):
    """Raised when a word is not a permutation of 1..n."""

    def __init__(self, word: Sequence[int]):
        super().__init__(f"not a permutation of 1..n: {tuple(word)}")
        self.word = tuple(word)


class UnknownStatistic(KeyError):
    """Raised when a statistic name is not registered."""

    def __init__(self, stat_id: str):
        super().__init__(stat_id)
        self.stat_id = stat_id


class PatternSyntaxError(ValueError):
    """Raised when a vincular pattern literal cannot be parsed."""


class Permutation:
    """A permutation of [n], stored one-line as word = (pi(1), ..., pi(n))."""

    __slots__ = ("word", "_inverse")

    def __init__(self, word: Iterable[int]):
        w = tuple(int(v) for v in word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise NotAPermutation(w)
        self.word = w
        self._inverse: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.word)

    def value(self, i: int) -> int:
        """pi(i), 1-based."""
        return self.word[i - 1]

    @property
    def inverse_word(self) -> tuple[int, ...]:
        if self._inverse is None:
            inv = [0] * len(self.word)
            for i, v in enumerate(self.word, start=1):
                inv[v - 1] = i
            self._inverse = tuple(inv)
        return self._inverse

    def position(self, v: int) -> int:
        """pi^{-1}(v), 1-based."""
        return self.inverse_word[v - 1]

    def inverse(self) -> "Permutation":
        return Permutation(self.inverse_word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Permutation({self.to_text()!r})"

    def to_text(self) -> str:
        return ",".join(str(v) for v in self.word)

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse a comma-separated word; a bare digit string is accepted for n <= 9."""
        text = text.strip()
        if not text:
            raise ValueError("empty permutation text")
        if "," in text:
            try:
                values = [int(part) for part in text.split(",")]
            except ValueError:
                raise ValueError(f"cannot parse permutation {text!r}") from None
        else:
            if not text.isdigit():
                raise ValueError(f"cannot parse permutation {text!r}")
            values = [int(ch) for ch in text]
        return cls(values)

    def to_json(self) -> list[int]:
        return list(self.word)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "Permutation":
        return cls(data)


def iter_perms(n: int) -> Iterator[Permutation]:
    """All permutations of [n] in lexicographic order."""
    for word in _permutations(range(1, n + 1)):
        yield Permutation(word)


# ---------------------------------------------------------------------------
# Trivial bijections
# ---------------------------------------------------------------------------

def _reverse(word: tuple[int, ...]) -> tuple[int, ...]:
    return word[::-1]


def _complement(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    return tuple(n + 1 - v for v in word)


def _invert(word: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(word)
    for i, v in enumerate(word, start=1):
        inv[v - 1] = i
    return tuple(inv)


_TRIVIAL = {"r": _reverse, "c": _complement, "i": _invert}


def trivial_bijection(pi: Permutation, which: str) -> Permutation:
    """Apply reverse / complement / inverse, or a composition of them.

    A multi-letter name is read as a composition: ``"rci"`` means apply the
    inverse first, then complement, then reverse.
    """
    if not which or any(ch not in _TRIVIAL for ch in which):
        raise ValueError(f"unknown trivial bijection: {which!r}")
    word = pi.word
    for ch in reversed(which):
        word = _TRIVIAL[ch](word)
    return Permutation(word)


# ---------------------------------------------------------------------------
# Linear statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearStatRecord:
    """Descent/ascent statistics of a permutation read as a word."""

    Des: IntMultiset
    Ides: IntMultiset
    Dt: IntMultiset
    Db: IntMultiset
    Ab: IntMultiset
    Dtb: IntMultiset
    Dta: IntMultiset
    Dbb: IntMultiset
    Dba: IntMultiset
    Abb: IntMultiset
    Aba: IntMultiset
    Ddif: IntMultiset
    Dbot: IntMultiset

    @property
    def des(self) -> int:
        return self.Des.cardinality

    @property
    def ides(self) -> int:
        return self.Ides.cardinality

    @property
    def ddif(self) -> int:
        return self.Ddif.cardinality

    @property
    def dbot(self) -> int:
        return self.Dbot.cardinality


def linear_family(pi: Permutation) -> LinearStatRecord:
    word = pi.word
    n = len(word)
    last = word[-1] if n else 0
    des_pos: list[int] = []
    asc_bottoms: list[int] = []
    ddif: list[int] = []
    dbot: list[int] = []
    for i in range(1, n):
        a, b = word[i - 1], word[i]
        if a > b:
            des_pos.append(i)
            ddif.extend(range(b + 1, a + 1))
            dbot.extend([b] * b)
        else:
            asc_bottoms.append(a)
    dt = [word[i - 1] for i in des_pos]
    db = [word[i] for i in des_pos]
    ides = [i for i in range(1, n) if pi.inverse_word[i - 1] > pi.inverse_word[i]]
    return LinearStatRecord(
        Des=IntMultiset(des_pos),
        Ides=IntMultiset(ides),
        Dt=IntMultiset(dt),
        Db=IntMultiset(db),
        Ab=IntMultiset(asc_bottoms),
        Dtb=IntMultiset(v for v in dt if v < last),
        Dta=IntMultiset(v for v in dt if v > last),
        Dbb=IntMultiset(v for v in db if v < last),
        Dba=IntMultiset(v for v in db if v > last),
        Abb=IntMultiset(v for v in asc_bottoms if v < last),
        Aba=IntMultiset(v for v in asc_bottoms if v > last),
        Ddif=IntMultiset(ddif),
        Dbot=IntMultiset(dbot),
    )


# ---------------------------------------------------------------------------
# Cyclic statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicStatRecord:
    """Excedance statistics of a permutation read as a bijection."""

    Exc: IntMultiset
    Nexc: IntMultiset
    Ep: IntMultiset
    Excb: IntMultiset
    Exca: IntMultiset
    Nexcb: IntMultiset
    Nexca: IntMultiset
    Epb: IntMultiset
    Epa: IntMultiset
    Edif: IntMultiset
    Ebot: IntMultiset
    Ine: IntMultiset
    side: tuple[int, ...]
    Cpk: IntMultiset
    Cval: IntMultiset
    Cda: IntMultiset
    Cdd: IntMultiset

    @property
    def exc(self) -> int:
        return self.Exc.cardinality

    @property
    def nexc(self) -> int:
        return self.Nexc.cardinality

    @property
    def edif(self) -> int:
        return self.Edif.cardinality

    @property
    def ebot(self) -> int:
        return self.Ebot.cardinality

    @property
    def ine(self) -> int:
        return self.Ine.cardinality


def side_numbers(pi: Permutation) -> tuple[int, ...]:
    """Side number of each position.

    An excedance value gets the number of larger letters to its left inside
    the excedance subword; a non-excedance value gets the number of smaller
    letters to its right inside the non-excedance subword.
    """
    word = pi.word
    n = len(word)
    exc_sub = [word[i] for i in range(n) if word[i] > i + 1]
    nexc_sub = [word[i] for i in range(n) if word[i] <= i + 1]
    side = []
    for i in range(n):
        v = word[i]
        if v > i + 1:
            k = exc_sub.index(v)
            side.append(sum(1 for u in exc_sub[:k] if u > v))
        else:
            k = nexc_sub.index(v)
            side.append(sum(1 for u in nexc_sub[k + 1:] if u < v))
    return tuple(side)


def cyclic_family(pi: Permutation) -> CyclicStatRecord:
    word = pi.word
    n = len(word)
    last = word[-1] if n else 0
    ep = [i for i in range(1, n + 1) if word[i - 1] > i]
    exc = [word[i - 1] for i in ep]
    nexc = [word[i - 1] for i in range(1, n + 1) if word[i - 1] <= i]
    edif: list[int] = []
    ebot: list[int] = []
    for i in ep:
        edif.extend(range(i + 1, word[i - 1] + 1))
        ebot.extend([i] * i)
    side = side_numbers(pi)
    ine: list[int] = []
    for i in range(n):
        ine.extend([word[i]] * side[i])
    cpk, cval, cda, cdd = [], [], [], []
    for v in range(1, n + 1):
        p = pi.position(v)
        q = word[v - 1]
        if p < v and v > q:
            cpk.append(v)
        elif p > v and v < q:
            cval.append(v)
        elif p < v < q:
            cda.append(v)
        else:
            cdd.append(v)
    return CyclicStatRecord(
        Exc=IntMultiset(exc),
        Nexc=IntMultiset(nexc),
        Ep=IntMultiset(ep),
        Excb=IntMultiset(v for v in exc if v < last),
        Exca=IntMultiset(v for v in exc if v > last),
        Nexcb=IntMultiset(v for v in nexc if v < last),
        Nexca=IntMultiset(v for v in nexc if v > last),
        Epb=IntMultiset(i for i in ep if i < last),
        Epa=IntMultiset(i for i in ep if i > last),
        Edif=IntMultiset(edif),
        Ebot=IntMultiset(ebot),
        Ine=IntMultiset(ine),
        side=side,
        Cpk=IntMultiset(cpk),
        Cval=IntMultiset(cval),
        Cda=IntMultiset(cda),
        Cdd=IntMultiset(cdd),
    )


# ---------------------------------------------------------------------------
# Shifted-cyclic statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftedStatRecord:
    """Nesting statistics shifted around pone, the position of the letter 1."""

    pone: int
    nest: tuple[int, ...]
    vnest: tuple[int, ...]
    Scval: IntMultiset
    Scpk: IntMultiset
    Scda: IntMultiset
    Scdd: IntMultiset
    Nep: IntMultiset
    Vnex: IntMultiset
    Vnepb: IntMultiset
    Vnepa: IntMultiset
    Vnexb: IntMultiset
    Vnexa: IntMultiset
    Vepb: IntMultiset
    Vepa: IntMultiset
    Vedif: IntMultiset
    Vbot: IntMultiset
    Vnest: IntMultiset


def nesting_numbers(pi: Permutation) -> tuple[int, ...]:
    """nest_i: nestings with i as the inner endpoint."""
    word = pi.word
    n = len(word)
    nest = []
    for i in range(1, n + 1):
        v = word[i - 1]
        if v > i:
            count = sum(1 for j in range(1, i) if v < word[j - 1])
        else:
            count = sum(1 for j in range(i + 1, n + 1) if word[j - 1] < v)
        nest.append(count)
    return tuple(nest)


def variant_nesting_numbers(pi: Permutation) -> tuple[int, ...]:
    """vnest_i: nest_i adjusted by the position of the letter 1."""
    word = pi.word
    pone = pi.position(1)
    nest = nesting_numbers(pi)
    vnest = []
    for i in range(1, len(word) + 1):
        v = word[i - 1]
        value = nest[i - 1]
        if v <= i and i < pone:
            value -= 1
        elif v > i and i > pone:
            value += 1
        vnest.append(value)
    return tuple(vnest)


def shifted_family(pi: Permutation) -> ShiftedStatRecord:
    word = pi.word
    n = len(word)
    pone = pi.position(1)
    nest = nesting_numbers(pi)
    vnest = variant_nesting_numbers(pi)
    exc_values = {word[i - 1] for i in range(1, n + 1) if word[i - 1] > i}
    ep = [i for i in range(1, n + 1) if word[i - 1] > i]
    nep = [i for i in range(1, n + 1) if word[i - 1] <= i]
    vnex = [i for i in range(1, n) if i + 1 not in exc_values]
    scval, scpk, scda, scdd = [], [], [], []
    for i in range(1, n):
        up_left = word[i - 1] > i
        up_right = i + 1 <= pi.position(i + 1)
        if up_left and up_right:
            scval.append(i)
        elif not up_left and not up_right:
            scpk.append(i)
        elif up_left:
            scda.append(i)
        else:
            scdd.append(i)
    vedif: list[int] = []
    for i in ep:
        vedif.extend(range(i + 1, word[i - 1]))
    vedif.extend(range(pone + 1, n + 1))
    vbot: list[int] = []
    for i in vnex:
        vbot.extend([i] * i)
    vnest_ms: list[int] = []
    for i in range(1, n + 1):
        vnest_ms.extend([i] * vnest[i - 1])
    return ShiftedStatRecord(
        pone=pone,
        nest=nest,
        vnest=vnest,
        Scval=IntMultiset(scval),
        Scpk=IntMultiset(scpk),
        Scda=IntMultiset(scda),
        Scdd=IntMultiset(scdd),
        Nep=IntMultiset(nep),
        Vnex=IntMultiset(vnex),
        Vnepb=IntMultiset(i for i in nep if i < pone),
        Vnepa=IntMultiset(i for i in nep if i > pone),
        Vnexb=IntMultiset(i for i in vnex if i < pone),
        Vnexa=IntMultiset(i for i in vnex if i > pone),
        Vepb=IntMultiset(i for i in ep if i < pone),
        Vepa=IntMultiset(i for i in ep if i > pone),
        Vedif=IntMultiset(vedif),
        Vbot=IntMultiset(vbot),
        Vnest=IntMultiset(vnest_ms),
    )


# ---------------------------------------------------------------------------
# Vincular patterns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VincularPattern:
    """A pattern whose glued positions must land on adjacent host letters.

    ``glued`` holds positions p (1-based) meaning pattern letters p and p+1
    must be adjacent in the host.
    """

    values: tuple[int, ...]
    glued: frozenset[int]

    def __post_init__(self):
        k = len(self.values)
        if sorted(self.values) != list(range(1, k + 1)) or k > 4:
            raise PatternSyntaxError(f"bad pattern values: {self.values}")
        if any(p < 1 or p > k - 1 for p in self.glued):
            raise PatternSyntaxError(f"glued positions out of range: {self.glued}")


def parse_vincular(literal: str) -> VincularPattern:
    """Parse a pattern literal such as ``2u31`` or ``u31_2``.

    Digits are pattern letters; ``u`` glues the digit run that follows it
    (terminated by ``_``, another ``u``, or end of string); ``_`` is a
    separator carrying no adjacency requirement.
    """
    values: list[int] = []
    glued: set[int] = set()
    in_run = False
    run_start = 0
    for ch in literal:
        if ch == "u":
            in_run = True
            run_start = len(values) + 1
        elif ch == "_":
            in_run = False
        elif ch.isdigit():
            values.append(int(ch))
            if in_run and len(values) > run_start:
                glued.add(len(values) - 1)
        else:
            raise PatternSyntaxError(f"bad character {ch!r} in pattern {literal!r}")
    if not values:
        raise PatternSyntaxError(f"empty pattern literal {literal!r}")
    return VincularPattern(tuple(values), frozenset(glued))


def _stratum_count(letters: Iterable[int], rank: int, lo: int, hi: int) -> int:
    """Count letters that could play pattern rank ``rank`` against {lo, hi}."""
    if rank == 1:
        return sum(1 for u in letters if u < lo)
    if rank == 2:
        return sum(1 for u in letters if lo < u < hi)
    return sum(1 for u in letters if u > hi)


def _count3_one_glue(word: tuple[int, ...], values: tuple[int, ...], glue: int) -> int:
    """Length-3 pattern with a single glued pair, in O(n^2)."""
    n = len(word)
    total = 0
    if glue == 2:
        a, b, c = values
        for j in range(1, n - 1):
            x, y = word[j], word[j + 1]
            if (x < y) != (b < c):
                continue
            lo, hi = min(x, y), max(x, y)
            total += _stratum_count(word[:j], a, lo, hi)
    else:
        a, b, c = values
        for j in range(n - 1):
            x, y = word[j], word[j + 1]
            if (x < y) != (a < b):
                continue
            lo, hi = min(x, y), max(x, y)
            total += _stratum_count(word[j + 2:], c, lo, hi)
    return total


def _count_generic(word: tuple[int, ...], values: tuple[int, ...], glued: frozenset[int]) -> int:
    n = len(word)
    k = len(values)
    count = 0

    def rank_pattern(letters: list[int]) -> tuple[int, ...]:
        order = sorted(letters)
        return tuple(order.index(v) + 1 for v in letters)

    def extend(positions: list[int]) -> None:
        nonlocal count
        depth = len(positions)
        if depth == k:
            if rank_pattern([word[p] for p in positions]) == values:
                count += 1
            return
        if depth == 0:
            candidates = range(n - k + 1)
        elif depth in glued:
            candidates = [positions[-1] + 1]
        else:
            candidates = range(positions[-1] + 1, n)
        for p in candidates:
            if p < n:
                extend(positions + [p])

    extend([])
    return count


def vincular_count(pi: Permutation, pattern: VincularPattern | str) -> int:
    """Number of occurrences of a vincular pattern in pi."""
    if isinstance(pattern, str):
        pattern = parse_vincular(pattern)
    word = pi.word
    n = len(word)
    values, glued = pattern.values, pattern.glued
    k = len(values)
    if k == 1:
        return n
    if k == 2:
        descending = values == (2, 1)
        if 1 in glued:
            return sum(1 for i in range(n - 1) if (word[i] > word[i + 1]) == descending)
        total = 0
        for i in range(n):
            rest = word[i + 1:]
            total += sum(1 for u in rest if (word[i] > u) == descending)
        return total
    if k == 3 and len(glued) == 1:
        return _count3_one_glue(word, values, next(iter(glued)))
    return _count_generic(word, values, glued)


def coordinate_stat(pi: Permutation, which: str, i: int) -> int:
    """Coordinate pattern statistic at position i.

    ``2-13`` counts j with i < j < n and pi(j) < pi(i) < pi(j+1);
    ``2-31`` counts j with i < j < n and pi(j+1) < pi(i) < pi(j);
    ``31-2`` counts j with j < i－1 and pi(j+1) < pi(i) < pi(j).
    """
    word = pi.word
    n = len(word)
    if not 1 <= i <= n:
        raise IndexError(i)
    v = word[i - 1]
    if which == "2-13":
        return sum(1 for j in range(i + 1, n) if word[j - 1] < v < word[j])
    if which == "2-31":
        return sum(1 for j in range(i + 1, n) if word[j] < v < word[j - 1])
    if which == "31-2":
        return sum(1 for j in range(1, i - 1) if word[j] < v < word[j - 1])
    raise ValueError(f"unknown coordinate statistic: {which!r}")


def pattern_multisets(pi: Permutation) -> tuple[IntMultiset, IntMultiset, IntMultiset]:
    """The multisets 2-13, 2-31, 31-2: value pi(i) with its coordinate count."""
    results = []
    for which in ("2-13", "2-31", "31-2"):
        items: list[int] = []
        for i in range(1, pi.n + 1):
            items.extend([pi.value(i)] * coordinate_stat(pi, which, i))
        results.append(IntMultiset(items))
    return results[0], results[1], results[2]


# ---------------------------------------------------------------------------
# Mahonian statistic registry
# ---------------------------------------------------------------------------

_REGISTRY_PATTERNS = (
    "u21", "u12", "1u32", "2u31", "2u13", "3u21", "3u12",
    "u23_1", "u31_2", "u32_1", "u13_2", "u21_3", "u12_3",
)


def _sorting_index(word: tuple[int, ...]) -> int:
    """Sum of swap lengths when selection-sorting the largest letter home."""
    w = list(word)
    pos = {v: i for i, v in enumerate(w)}
    total = 0
    for v in range(len(w), 0, -1):
        i = pos[v]
        if i != v - 1:
            other = w[v - 1]
            w[i], w[v - 1] = other, v
            pos[other], pos[v] = i, v - 1
            total += (v - 1) - i
    return total


@lru_cache(maxsize=4096)
def _ingredients(word: tuple[int, ...]) -> dict[str, int]:
    """All numeric ingredients the Mahonian registry draws from."""
    pi = Permutation(word)
    n = len(word)
    g: dict[str, int] = {"n": n, "last": word[-1] if n else 0}
    for literal in _REGISTRY_PATTERNS:
        g[literal] = vincular_count(pi, literal)
    lin = linear_family(pi)
    g["des"] = lin.des
    g["dbot"] = lin.dbot
    g["ddif"] = lin.ddif
    cyc = cyclic_family(pi)
    g["exc"] = cyc.exc
    g["ebot"] = cyc.ebot
    g["edif"] = cyc.edif
    g["ine"] = cyc.ine
    sh = shifted_family(pi)
    g["pone"] = sh.pone
    g["vbot"] = sh.Vbot.cardinality
    g["vedif"] = sh.Vedif.cardinality
    g["vnest"] = sh.Vnest.cardinality
    g["inv"] = sum(
        1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j]
    )
    g["sor"] = _sorting_index(word)
    return g


def _mahonian_value(g: dict[str, int], name: str) -> int:
    n = g["n"]
    if name == "maj":
        return g["1u32"] + g["2u31"] + g["3u21"] + g["u21"]
    if name == "inv":
        return g["u23_1"] + g["u31_2"] + g["u32_1"] + g["u21"]
    if name == "mak":
        return g["dbot"] + g["2u31"]
    if name == "makl":
        return g["dbot"] + g["u31_2"]
    if name == "mad":
        return g["ddif"] + g["2u31"]
    if name == "madl":
        return g["ddif"] + g["u31_2"]
    if name == "bast":
        return g["u13_2"] + g["u21_3"] + g["u32_1"] + g["u21"]
    if name == "bast_p":
        return g["u13_2"] + g["u31_2"] + g["u32_1"] + g["u21"]
    if name == "bast_pp":
        return g["1u32"] + g["3u12"] + g["3u21"] + g["u21"]
    if name == "foze":
        return g["u21_3"] + g["3u21"] + g["u13_2"] + g["u21"]
    if name == "foze_p":
        return g["1u32"] + 2 * g["2u31"] + g["u21"]
    if name == "foze_pp":
        return g["u23_1"] + 2 * g["u31_2"] + g["u21"]
    if name == "sist":
        return 2 * g["u13_2"] + g["2u13"] + g["u21"]
    if name == "sist_p":
        return 2 * g["u13_2"] + g["2u31"] + g["u21"]
    if name == "sist_pp":
        return g["u13_2"] + 2 * g["2u31"] + g["u21"]
    if name == "den":
        return g["ebot"] + g["ine"]
    if name == "sor":
        return g["sor"]
    if name == "mak_p":
        return (_mahonian_value(g, "mak") + (1 - n) * g["des"]
                + g["last"] + n * (n - 3) // 2)
    if name == "mad_p":
        return _mahonian_value(g, "mad") + 2 * g["last"] - n - 1
    if name == "makl_p":
        return _mahonian_value(g, "makl") - n * g["des"] + n * (n - 1) // 2
    if name == "madl_p":
        return _mahonian_value(g, "madl") - g["des"] + g["last"] - 1
    if name == "fz3":
        return g["ebot"] + g["edif"] - g["exc"] - g["ine"]
    if name == "fz4":
        return 2 * g["edif"] - g["exc"] - g["ine"]
    if name == "inv_p":
        return g["inv"] + 2 * g["last"] - 1 - n
    if name == "den_p":
        return (_mahonian_value(g, "den") + (1 - n) * g["exc"]
                + g["last"] + n * (n - 3) // 2)
    if name == "fz3_p":
        return _mahonian_value(g, "fz3") - n * g["exc"] + n * (n - 1) // 2
    if name == "fz4_p":
        return _mahonian_value(g, "fz4") - g["exc"] + g["last"] - 1
    if name == "yzl1":
        return g["vbot"] + g["vnest"]
    if name == "yzl2":
        return g["vedif"] + g["vnest"]
    if name == "yzl3":
        return g["vbot"] + g["vedif"] - (n - 1 - g["exc"]) - g["vnest"]
    if name == "yzl4":
        return 2 * g["vedif"] - (n - 1 - g["exc"]) - g["vnest"]
    if name == "yzl1_p":
        return (_mahonian_value(g, "yzl1") + (n - 1) * g["exc"]
                + g["pone"] + (-n * n + n - 2) // 2)
    if name == "yzl2_p":
        return _mahonian_value(g, "yzl2") + 2 * g["pone"] - n - 1
    if name == "yzl3_p":
        return _mahonian_value(g, "yzl3") + n * g["exc"] - n * (n - 1) // 2
    if name == "yzl4_p":
        return _mahonian_value(g, "yzl4") + g["exc"] + g["pone"] - n
    raise UnknownStatistic(name)


MAHONIAN_NAMES: tuple[str, ...] = (
    "maj", "inv", "mak", "makl", "mad", "madl",
    "bast", "bast_p", "bast_pp", "foze", "foze_p", "foze_pp",
    "sist", "sist_p", "sist_pp", "den", "sor",
    "mak_p", "mad_p", "makl_p", "madl_p", "fz3", "fz4",
    "inv_p", "den_p", "fz3_p", "fz4_p",
    "yzl1", "yzl2", "yzl3", "yzl4",
    "yzl1_p", "yzl2_p", "yzl3_p", "yzl4_p",
)


def mahonian(pi: Permutation, stat_id: str) -> int:
    """Evaluate a registered Mahonian statistic."""
    if stat_id not in MAHONIAN_NAMES:
        raise UnknownStatistic(stat_id)
    return _mahonian_value(_ingredients(pi.word), stat_id)


_SIMPLE_STATS: dict[str, Callable[[Permutation], int]] = {
    "des": lambda pi: linear_family(pi).des,
    "ides": lambda pi: linear_family(pi).ides,
    "exc": lambda pi: cyclic_family(pi).exc,
    "nexc": lambda pi: cyclic_family(pi).nexc,
    "pone": lambda pi: shifted_family(pi).pone,
    "last": lambda pi: pi.value(pi.n),
}


def statistic(name: str) -> Callable[[Permutation], int]:
    """Resolve a statistic name to a callable.

    Accepts the Mahonian registry names, the simple names des / ides / exc /
    nexc / pone / last, and vincular pattern literals.
    """
    if name in MAHONIAN_NAMES:
        return lambda pi: mahonian(pi, name)
    if name in _SIMPLE_STATS:
        return _SIMPLE_STATS[name]
    try:
        pattern = parse_vincular(name)
    except PatternSyntaxError:
        raise UnknownStatistic(name) from None
    return lambda pi: vincular_count(pi, pattern)


# ---------------------------------------------------------------------------
# Classical pattern avoidance
# ---------------------------------------------------------------------------

def classical_avoids(pi: Permutation, pattern: Sequence[int]) -> bool:
    """True iff pi has no classical occurrence of the pattern."""
    pat = tuple(int(v) for v in pattern)
    k = len(pat)
    if sorted(pat) != list(range(1, k + 1)):
        raise NotAPermutation(pat)
    return _count_generic(pi.word, pat, frozenset()) == 0


def _gen_312_avoiding(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Words over an ascending value tuple avoiding the pattern 312.

    A word avoids 312 exactly when, splitting at its minimum, everything
    before the minimum is smaller than everything after it, and both parts
    avoid 312 recursively.
    """
    if not values:
        yield ()
        return
    m, rest = values[0], values[1:]
    for j in range(len(rest) + 1):
        for alpha in _gen_312_avoiding(rest[:j]):
            for beta in _gen_312_avoiding(rest[j:]):
                yield alpha + (m,) + beta


def avoiders(n: int, pattern: Sequence[int]) -> Iterator[Permutation]:
    """All permutations of [n] avoiding the classical pattern."""
    pat = tuple(int(v) for v in pattern)
    values = tuple(range(1, n + 1))
    if pat == (3, 1, 2):
        for word in _gen_312_avoiding(values):
            yield Permutation(word)
    elif pat == (2, 1, 3):
        for word in _gen_312_avoiding(values):
            yield Permutation(word[::-1])
    else:
        for pi in iter_perms(n):
            if classical_avoids(pi, pat):
                yield pi


# ---------------------------------------------------------------------------
# Shared linear-class helper
# ---------------------------------------------------------------------------

def linear_class(word: Sequence[int], p: int, left: int, right: int) -> str:
    """Classify the letter at 1-based position p against its neighbors.

    ``left`` and ``right`` are the boundary values used beyond the ends of
    the word (e.g. 0 and n+1 for smaller-than-all / larger-than-all).
    Returns one of "peak", "valley", "double_ascent", "double_descent".
    """
    v = word[p - 1]
    a = word[p - 2] if p > 1 else left
    b = word[p] if p < len(word) else right
    if a < v > b:
        return "peak"
    if a > v < b:
        return "valley"
    if a < v < b:
        return "double_ascent"
    return "double_descent"

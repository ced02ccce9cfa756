"""Exact multiset arithmetic over positive integers.

All statistics in this package are either integers or finite multisets of
positive integers.  ``IntMultiset`` is immutable and hashable; the two
combining operations are the disjoint union and a *strict* difference that
raises if the subtrahend is not contained in the minuend (silently clamping
would hide bookkeeping bugs in the identities this package verifies).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class ContainmentViolation(ValueError):
    """Strict multiset difference applied to a non-contained subtrahend."""

    def __init__(self, value: int):
        super().__init__(f"difference would give value {value} a negative multiplicity")
        self.value = value


class OutOfRange(ValueError):
    """A value handed to the reflection kappa lies outside (0, n)."""

    def __init__(self, value: int, n: int):
        super().__init__(f"value {value} is outside the open interval (0, {n})")
        self.value = value
        self.n = n


class IntMultiset:
    """An immutable multiset of positive integers."""

    __slots__ = ("_entries", "_items", "_card")

    def __init__(self, values: Iterable[int] = ()):
        entries: dict[int, int] = {}
        for v in values:
            entries[v] = entries.get(v, 0) + 1
        self._init_from(entries)

    def _init_from(self, entries: dict[int, int]) -> None:
        for v, m in entries.items():
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"multiset values must be positive integers, got {v!r}")
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"multiplicities must be positive integers, got {m!r}")
        self._entries = entries
        self._items = tuple(sorted(entries.items()))
        self._card = sum(entries.values())

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "IntMultiset":
        """Build from (value, multiplicity) pairs; repeated values accumulate."""
        entries: dict[int, int] = {}
        for v, m in pairs:
            entries[v] = entries.get(v, 0) + m
        ms = cls.__new__(cls)
        ms._init_from(entries)
        return ms

    @classmethod
    def _unchecked(cls, entries: dict[int, int]) -> "IntMultiset":
        ms = cls.__new__(cls)
        ms._entries = entries
        ms._items = tuple(sorted(entries.items()))
        ms._card = sum(entries.values())
        return ms

    @property
    def entries(self) -> Mapping[int, int]:
        return dict(self._entries)

    @property
    def cardinality(self) -> int:
        return self._card

    def multiplicity(self, value: int) -> int:
        return self._entries.get(value, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self._items)

    def __len__(self) -> int:
        return self._card

    def __iter__(self) -> Iterator[int]:
        for v, m in self._items:
            for _ in range(m):
                yield v

    def __contains__(self, value: int) -> bool:
        return value in self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMultiset):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __or__(self, other: "IntMultiset") -> "IntMultiset":
        return disjoint_union(self, other)

    def __sub__(self, other: "IntMultiset") -> "IntMultiset":
        return strict_difference(self, other)

    def __repr__(self) -> str:
        return f"IntMultiset.from_text({self.to_text()!r})"

    def to_text(self) -> str:
        """Render as ``{4^2,5,6^3}`` (sorted values, ``^`` for multiplicity > 1)."""
        parts = []
        for v, m in self._items:
            parts.append(str(v) if m == 1 else f"{v}^{m}")
        return "{" + ",".join(parts) + "}"

    @classmethod
    def from_text(cls, text: str) -> "IntMultiset":
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(f"malformed multiset literal: {text!r}")
        body = text[1:-1].strip()
        pairs = []
        if body:
            for part in body.split(","):
                part = part.strip()
                if "^" in part:
                    v, m = part.split("^", 1)
                    pairs.append((int(v), int(m)))
                else:
                    pairs.append((int(part), 1))
        return cls.from_pairs(pairs)

    def to_json(self) -> list[list[int]]:
        """Sorted ``[value, multiplicity]`` pairs."""
        return [[v, m] for v, m in self._items]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "IntMultiset":
        return cls.from_pairs((int(v), int(m)) for v, m in data)


def disjoint_union(a: IntMultiset, b: IntMultiset) -> IntMultiset:
    """Multiset sum: multiplicities add."""
    entries = dict(a._entries)
    for v, m in b._entries.items():
        entries[v] = entries.get(v, 0) + m
    return IntMultiset._unchecked(entries)


def strict_difference(a: IntMultiset, b: IntMultiset) -> IntMultiset:
    """Multiset difference, defined only when ``b`` is contained in ``a``.

    Raises ContainmentViolation on the smallest offending value.
    """
    entries = dict(a._entries)
    for v in sorted(b._entries):
        m = b._entries[v]
        have = entries.get(v, 0)
        if m > have:
            raise ContainmentViolation(v)
        if m == have:
            del entries[v]
        else:
            entries[v] = have - m
    return IntMultiset._unchecked(entries)


def kappa(n: int, a: IntMultiset) -> IntMultiset:
    """Reflect every value v to n - v.

    Every value must lie strictly between 0 and n; kappa is an involution
    on such multisets.
    """
    entries: dict[int, int] = {}
    for v, m in a._entries.items():
        if not 0 < v < n:
            raise OutOfRange(v, n)
        entries[n - v] = m
    return IntMultiset._unchecked(entries)

"""Tests for permutation statistics, patterns, and the Mahonian registry."""

import math
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from srlaguerre.multiset import IntMultiset
from srlaguerre.perm_stats import (
    MAHONIAN_NAMES,
    NotAPermutation,
    PatternSyntaxError,
    Permutation,
    UnknownStatistic,
    avoiders,
    classical_avoids,
    coordinate_stat,
    cyclic_family,
    iter_perms,
    linear_family,
    mahonian,
    parse_vincular,
    pattern_multisets,
    shifted_family,
    side_numbers,
    statistic,
    trivial_bijection,
    vincular_count,
)

perm_strategy = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(Permutation)


def test_permutation_basics():
    pi = Permutation([3, 1, 2])
    assert pi.n == 3
    assert pi.value(1) == 3 and pi.position(3) == 1
    assert pi.inverse() == Permutation([2, 3, 1])
    assert Permutation.from_text("3,1,2") == pi
    assert Permutation.from_text("312") == pi
    assert pi.to_text() == "3,1,2"


def test_invalid_permutations_rejected():
    with pytest.raises(NotAPermutation):
        Permutation([1, 1])
    with pytest.raises(NotAPermutation):
        Permutation([2, 3])


def test_iter_perms_counts():
    for n in range(1, 6):
        assert sum(1 for _ in iter_perms(n)) == math.factorial(n)


def test_trivial_bijections():
    pi = Permutation.from_text("618742593")
    assert trivial_bijection(pi, "r") == Permutation.from_text("395247816")
    assert trivial_bijection(pi, "c") == Permutation.from_text("492368517")
    assert trivial_bijection(pi, "i") == pi.inverse()
    assert trivial_bijection(Permutation.from_text("12"), "rci") == \
        Permutation.from_text("12")


def test_linear_family_worked_example():
    pi = Permutation.from_text("618742593")
    lin = linear_family(pi)
    assert lin.Des == IntMultiset([1, 3, 4, 5, 8])
    assert lin.Ides == IntMultiset([3, 5, 7])
    assert lin.Dt == IntMultiset([4, 6, 7, 8, 9])
    assert lin.Dtb == IntMultiset()
    assert lin.Dta == lin.Dt
    assert lin.Db == IntMultiset([1, 2, 3, 4, 7])
    assert lin.Dbb == IntMultiset([1, 2])
    assert lin.Dba == IntMultiset([4, 7])
    assert lin.Ab == IntMultiset([1, 2, 5])
    assert lin.Abb == IntMultiset([1, 2])
    assert lin.Aba == IntMultiset([5])
    assert lin.Ddif == IntMultiset.from_pairs(
        [(2, 1), (3, 2), (4, 3), (5, 3), (6, 3), (7, 2), (8, 2), (9, 1)])
    assert lin.Dbot == IntMultiset.from_pairs(
        [(1, 1), (2, 2), (3, 3), (4, 4), (7, 7)])


def test_pattern_multisets_worked_example():
    pi = Permutation.from_text("618742593")
    m13, m31, m312 = pattern_multisets(pi)
    assert m13 == IntMultiset([4, 6, 6, 7, 8])
    assert m31 == IntMultiset([4, 5, 6, 6, 7, 8])
    assert m312 == IntMultiset([2, 3, 3, 4, 5, 5])


def test_cyclic_family_worked_example():
    pi = Permutation.from_text("947612853")
    cyc = cyclic_family(pi)
    assert cyc.Exc == IntMultiset([4, 6, 7, 8, 9])
    assert cyc.Ep == IntMultiset([1, 2, 3, 4, 7])
    assert cyc.Nexc == IntMultiset([1, 2, 3, 5])
    assert cyc.Epb == IntMultiset([1, 2])
    assert cyc.Epa == IntMultiset([4, 7])
    assert cyc.Nexcb == IntMultiset([1, 2])
    assert cyc.Nexca == IntMultiset([5])
    assert cyc.Edif == IntMultiset.from_pairs(
        [(2, 1), (3, 2), (4, 3), (5, 3), (6, 3), (7, 2), (8, 2), (9, 1)])
    assert cyc.Ebot == IntMultiset.from_pairs(
        [(1, 1), (2, 2), (3, 3), (4, 4), (7, 7)])
    assert side_numbers(pi) == (0, 1, 1, 2, 0, 0, 1, 1, 0)
    assert cyc.Ine == IntMultiset([4, 5, 6, 6, 7, 8])


def test_shifted_family_worked_example():
    pi = Permutation.from_text("671395482")
    sh = shifted_family(pi)
    assert sh.pone == 3
    assert sh.Vnex == IntMultiset([1, 2, 3, 4, 7])
    assert sh.Vnepb == IntMultiset()
    assert sh.Vnepa == IntMultiset([4, 6, 7, 8, 9])
    assert sh.Vepb == IntMultiset([1, 2])
    assert sh.Vepa == IntMultiset([5])
    assert sh.Vnexb == IntMultiset([1, 2])
    assert sh.Vnexa == IntMultiset([4, 7])
    assert sh.Vedif == IntMultiset.from_pairs(
        [(2, 1), (3, 2), (4, 3), (5, 3), (6, 3), (7, 2), (8, 2), (9, 1)])
    assert sh.Vbot == IntMultiset.from_pairs(
        [(1, 1), (2, 2), (3, 3), (4, 4), (7, 7)])
    assert sh.Vnest == IntMultiset([4, 5, 6, 6, 7, 8])


def brute_vincular(word, values, glued):
    """Independent oracle for vincular pattern counting."""
    from itertools import combinations

    k = len(values)
    count = 0
    for positions in combinations(range(len(word)), k):
        if any(positions[p] + 1 != positions[p + 1] for p in glued):
            continue
        letters = [word[p] for p in positions]
        ranks = sorted(range(k), key=lambda t: letters[t])
        pattern = [0] * k
        for rank, t in enumerate(ranks, start=1):
            pattern[t] = rank
        if tuple(pattern) == values:
            count += 1
    return count


def test_vincular_anchor():
    # 41253 contains exactly one occurrence of the glued-31 pattern 3142.
    assert vincular_count(Permutation.from_text("41253"), "u31_42") == 1
    assert vincular_count(Permutation.from_text("618742593"), "2u31") == 6


def test_vincular_against_brute_force():
    literals = ["2u31", "2u13", "u31_2", "1u32", "u32_1", "u13_2",
                "3u12", "u12_3", "u12", "u21", "u21_3", "3u21", "u23_1"]
    for pi in iter_perms(5):
        for literal in literals:
            pat = parse_vincular(literal)
            glued = {p - 1 for p in pat.glued}
            assert vincular_count(pi, literal) == brute_vincular(
                pi.word, pat.values, glued)


def test_vincular_syntax_errors():
    with pytest.raises(PatternSyntaxError):
        parse_vincular("")
    with pytest.raises(PatternSyntaxError):
        parse_vincular("u12345")
    with pytest.raises(PatternSyntaxError):
        parse_vincular("13")


def test_coordinate_stats_sum_to_pattern_count():
    for pi in iter_perms(5):
        n = pi.n
        assert sum(coordinate_stat(pi, "2-31", i) for i in range(1, n + 1)) \
            == vincular_count(pi, "2u31")
        assert sum(coordinate_stat(pi, "2-13", i) for i in range(1, n + 1)) \
            == vincular_count(pi, "2u13")
        assert sum(coordinate_stat(pi, "31-2", i) for i in range(1, n + 1)) \
            == vincular_count(pi, "u31_2")


def test_avoiders_catalan_counts():
    assert sum(1 for _ in avoiders(4, (2, 1, 3))) == 14
    assert sum(1 for _ in avoiders(6, (3, 1, 2))) == 132


def test_avoiders_against_filter():
    for pattern in ((3, 1, 2), (2, 1, 3)):
        fast = {p.word for p in avoiders(5, pattern)}
        slow = {p.word for p in iter_perms(5)
                if classical_avoids(p, pattern)}
        assert fast == slow


def test_all_registry_statistics_are_mahonian():
    for n in range(1, 6):
        expected = Counter()
        for pi in iter_perms(n):
            expected[statistic("inv")(pi)] += 1
        for name in MAHONIAN_NAMES:
            got = Counter(mahonian(pi, name) for pi in iter_perms(n))
            assert got == expected, name


def test_unknown_statistic():
    with pytest.raises(UnknownStatistic):
        statistic("nosuchstat")


def test_simple_statistics():
    pi = Permutation.from_text("231")
    assert statistic("des")(pi) == 1
    assert statistic("exc")(pi) == 2
    assert statistic("pone")(pi) == 3
    assert statistic("maj")(Permutation.from_text("123")) == 0


@given(perm_strategy)
def test_trivial_bijections_are_involutions_or_inverses(pi):
    assert trivial_bijection(trivial_bijection(pi, "r"), "r") == pi
    assert trivial_bijection(trivial_bijection(pi, "c"), "c") == pi
    assert trivial_bijection(trivial_bijection(pi, "i"), "i") == pi


@given(perm_strategy)
def test_des_plus_ascents(pi):
    lin = linear_family(pi)
    assert lin.Des.cardinality + lin.Ab.cardinality == pi.n - 1

"""Registry of verifiable claims about the involution and the bijections.

Every claim is an exhaustive check over all weighted paths or all
permutations of a given size; the runner reports per-size pass/fail with a
counterexample on failure.  Item sweeps can be partitioned across threads;
the reported result is independent of the partitioning.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .genfun import jacobi_moments
from .histories import (
    LaguerreHistory,
    critical_step,
    enumerate_histories,
    history_statistics,
)
from .involution import check_against_table, verify_xi_contract, xi
from .mfs_action import (
    coordinate_stat_by_extrema,
    coordinate_stat_zero_boundary,
    mfs_full,
    pattern_multisets_zero_boundary,
    starred_classes,
)
from .multiset import IntMultiset, kappa
from .bijections import (
    conjugated_map,
    kreweras,
    phi_csz,
    phi_fv,
    phi_fz,
    phi_yzl,
    theta,
)
from .perm_stats import (
    Permutation,
    avoiders,
    cyclic_family,
    iter_perms,
    linear_family,
    mahonian,
    pattern_multisets,
    shifted_family,
    trivial_bijection,
    vincular_count,
)

__all__ = [
    "ClaimOutcome",
    "ClaimSpec",
    "CLAIM_REGISTRY",
    "claim_ids",
    "get_claim",
    "run_claim",
    "UnknownClaim",
]


class UnknownClaim(ValueError):
    """No claim registered under the given id."""


@dataclass(frozen=True)
class ClaimOutcome:
    claim: str
    n: int
    status: str  # "pass" or "fail"
    checked: int
    counterexample: str | None
    millis: int

    def to_json(self) -> dict:
        data = {
            "claim": self.claim,
            "n": self.n,
            "status": self.status,
            "checked": self.checked,
            "millis": self.millis,
        }
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        return data


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    description: str
    items: Callable[[int], Iterable]
    test: Callable[[int, object], "str | None"]


def _full_range(n: int) -> IntMultiset:
    return IntMultiset(range(1, n))


def _kap(n: int, m: IntMultiset) -> IntMultiset:
    return kappa(n + 1, m)


# ---------------------------------------------------------------------------
# History-side claims
# ---------------------------------------------------------------------------

def _test_involution(n: int, w_hist: LaguerreHistory) -> str | None:
    v_hist = xi(w_hist)
    if xi(v_hist) != w_hist:
        return f"{w_hist.to_text()}: double application differs"
    if not verify_xi_contract(w_hist, v_hist):
        return f"{w_hist.to_text()}: defining conditions violated"
    problem = check_against_table(w_hist, v_hist)
    if problem is not None:
        return f"{w_hist.to_text()}: {problem}"
    return None


def _test_five_stat_symmetry(n: int, w_hist: LaguerreHistory) -> str | None:
    g = history_statistics(w_hist)
    h = history_statistics(xi(w_hist))
    lhs = (g.ht - g.wt, g.neb, g.sdeb, g.nea, g.sdea)
    rhs = (h.ht - h.wt, h.sdea, h.nea, h.sdeb, h.neb)
    if lhs != rhs:
        return f"{w_hist.to_text()}: {lhs} != {rhs}"
    return None


def _test_multiset_symmetry(n: int, w_hist: LaguerreHistory) -> str | None:
    g = history_statistics(w_hist)
    h = history_statistics(xi(w_hist))
    checks = [
        ("Neb", g.Neb, _kap(n, h.Sdea)),
        ("Sdeb", g.Sdeb, _kap(n, h.Nea)),
        ("Nea", g.Nea, _kap(n, h.Sdeb)),
        ("Sdea", g.Sdea, _kap(n, h.Neb)),
        ("Ht", g.Ht, _kap(n, (h.Ht | h.Neb) - h.Sdea)),
        ("Wt", g.Wt, _kap(n, (h.Wt | h.Neb) - h.Sdea)),
        ("Nde", _full_range(n) - g.Nde, kappa(n, h.Nde)),
        ("Asc", _full_range(n) - g.Asc, kappa(n, h.Asc)),
    ]
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return f"{w_hist.to_text()}: {label}: {lhs.to_text()} != {rhs.to_text()}"
    return None


def _test_exponent_symmetry(n: int, w_hist: LaguerreHistory) -> str | None:
    g = history_statistics(w_hist)
    h = history_statistics(xi(w_hist))
    ok = (
        g.neb == h.sdea
        and g.sdeb == h.nea
        and g.nea == h.sdeb
        and g.sdea == h.neb
        and g.nde == n - 1 - h.nde
        and g.asc == n - 1 - h.asc
        and g.cs == n + 1 - h.cs
        and g.ht == h.ht + h.neb - h.sdea
        and g.wt == h.wt + h.neb - h.sdea
    )
    return None if ok else f"{w_hist.to_text()}: exponent relations violated"


# ---------------------------------------------------------------------------
# Encoding claims
# ---------------------------------------------------------------------------

def _test_linear_correspondence(n: int, pi: Permutation) -> str | None:
    g = history_statistics(phi_fv(pi))
    lin = linear_family(pi)
    m13, m31, m312 = pattern_multisets(pi)
    if pi.value(n) != g.cs:
        return f"{pi.to_text()}: last letter != critical step"
    checks = [
        ("Dtb", lin.Dtb, g.Sdeb),
        ("Dta", lin.Dta, g.Sdea),
        ("Dbb", lin.Dbb, g.Ndeb),
        ("Dba", lin.Dba, g.Ndea),
        ("Abb", lin.Abb, g.Neb),
        ("Aba", lin.Aba, g.Nea),
        ("Ides", lin.Ides, g.Asc),
        ("Ddif", lin.Ddif, g.Ht),
        ("Dt+2-31", lin.Dt | m31, g.Wt),
        ("2-13", m13, (g.Wt - g.Nea) - g.Sdea),
        ("2-31", m31, (g.Wt - g.Sdeb) - g.Sdea),
        ("31-2", m312, g.Ht - g.Wt),
    ]
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return f"{pi.to_text()}: {label}: {lhs.to_text()} != {rhs.to_text()}"
    return None


def _test_linear_conjugate(n: int, pi: Permutation) -> str | None:
    sigma = conjugated_map(pi, "phi")
    lp, ls = linear_family(pi), linear_family(sigma)
    mp, ms = pattern_multisets(pi), pattern_multisets(sigma)
    checks = [
        ("Dtb", lp.Dtb, _kap(n, ls.Aba)),
        ("Dta", lp.Dta, _kap(n, ls.Abb)),
        ("Abb", lp.Abb, _kap(n, ls.Dta)),
        ("Aba", lp.Aba, _kap(n, ls.Dtb)),
        ("2-13", mp[0], _kap(n, ms[1])),
        ("2-31", mp[1], _kap(n, ms[0])),
        ("31-2", mp[2], _kap(n, ms[2])),
        ("Db", _full_range(n) - lp.Db, kappa(n, ls.Db)),
        ("Ides", _full_range(n) - lp.Ides, kappa(n, ls.Ides)),
    ]
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return f"{pi.to_text()}: {label}: {lhs.to_text()} != {rhs.to_text()}"
    return None


def _test_cyclic_correspondence(n: int, pi: Permutation) -> str | None:
    g = history_statistics(phi_fz(pi))
    cyc = cyclic_family(pi)
    if pi.value(n) != g.cs:
        return f"{pi.to_text()}: last letter != critical step"
    checks = [
        ("Excb", cyc.Excb, g.Sdeb),
        ("Exca", cyc.Exca, g.Sdea),
        ("Epb", cyc.Epb, g.Ndeb),
        ("Epa", cyc.Epa, g.Ndea),
        ("Nexcb", cyc.Nexcb, g.Neb),
        ("Nexca", cyc.Nexca, g.Nea),
        ("Edif", cyc.Edif, g.Ht),
        ("Exc+Ine", cyc.Exc | cyc.Ine, g.Wt),
        ("Ine+Excb-Nexca", (cyc.Ine | cyc.Excb) - cyc.Nexca,
         (g.Wt - g.Nea) - g.Sdea),
        ("Ine", cyc.Ine, (g.Wt - g.Sdeb) - g.Sdea),
        ("Edif-Exc-Ine", (cyc.Edif - cyc.Exc) - cyc.Ine, g.Ht - g.Wt),
    ]
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return f"{pi.to_text()}: {label}: {lhs.to_text()} != {rhs.to_text()}"
    return None


def _test_csz_transport(n: int, pi: Permutation) -> str | None:
    sigma = phi_csz(pi)
    lin = linear_family(pi)
    m13, m31, m312 = pattern_multisets(pi)
    cyc = cyclic_family(sigma)
    if pi.value(n) != sigma.value(n):
        return f"{pi.to_text()}: last letters differ"
    # The last letter is always a non-excedance value but never an ascent
    # bottom, so it is removed from Nexc before comparing.
    checks = [
        ("Dt/Exc", lin.Dt, cyc.Exc),
        ("Db/Ep", lin.Db, cyc.Ep),
        ("Ab/Nexc", lin.Ab, cyc.Nexc - IntMultiset([sigma.value(n)])),
        ("2-13", m13, (cyc.Ine | cyc.Excb) - cyc.Nexca),
        ("2-31", m31, cyc.Ine),
        ("31-2", m312, (cyc.Edif - cyc.Exc) - cyc.Ine),
        ("Dbot/Ebot", lin.Dbot, cyc.Ebot),
        ("Ddif/Edif", lin.Ddif, cyc.Edif),
    ]
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return f"{pi.to_text()}: {label}: {lhs.to_text()} != {rhs.to_text()}"
    return None


def _test_cyclic_conjugate(n: int, pi: Permutation) -> str | None:
    sigma = conjugated_map(pi, "eta")
    cp, cs = cyclic_family(pi), cyclic_family(sigma)
    p13 = (cp.Ine | cp.Excb) - cp.Nexca
    s13 = (cs.Ine | cs.Excb) - cs.Nexca
    # The last letter, always a non-excedance value, falls outside the
    # value reflection and is removed from Nexc on both sides.
    checks = [
        ("Exc", cp.Exc, _kap(n, cs.Nexc - IntMultiset([sigma.value(n)]))),
        ("Nexc", cp.Nexc - IntMultiset([pi.value(n)]), _kap(n, cs.Exc)),
        ("Ine+Excb-Nexca", p13, _kap(n, cs.Ine)),
        ("Ine", cp.Ine, _kap(n, s13)),
        ("Edif-Exc-Ine", (cp.Edif - cp.Exc) - cp.Ine,
         _kap(n, (cs.Edif - cs.Exc) - cs.Ine)),
        ("Ep", _full_range(n) - cp.Ep, kappa(n, cs.Ep)),
    ]
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return f"{pi.to_text()}: {label}: {lhs.to_text()} != {rhs.to_text()}"
    return None


def _test_shifted_correspondence(n: int, pi: Permutation) -> str | None:
    g = history_statistics(phi_yzl(pi))
    sh = shifted_family(pi)
    checks = [
        ("Vnepb", sh.Vnepb, g.Sdeb),
        ("Vnepa", sh.Vnepa, g.Sdea),
        ("Vnexb", sh.Vnexb, g.Ndeb),
        ("Vnexa", sh.Vnexa, g.Ndea),
        ("Vepb", sh.Vepb, g.Neb),
        ("Vepa", sh.Vepa, g.Nea),
        ("Vedif", sh.Vedif, g.Ht),
        ("Vnepb+Vnepa+Vnest", sh.Vnepb | sh.Vnepa | sh.Vnest, g.Wt),
        ("Vnest+Vnepb-Vepa", (sh.Vnest | sh.Vnepb) - sh.Vepa,
         (g.Wt - g.Nea) - g.Sdea),
        ("Vnest", sh.Vnest, (g.Wt - g.Sdeb) - g.Sdea),
        ("Vedif-rest", ((sh.Vedif - sh.Vnepb) - sh.Vnepa) - sh.Vnest,
         g.Ht - g.Wt),
    ]
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return f"{pi.to_text()}: {label}: {lhs.to_text()} != {rhs.to_text()}"
    return None


def _test_critical_is_pone(n: int, pi: Permutation) -> str | None:
    if critical_step(phi_yzl(pi)) != pi.position(1):
        return f"{pi.to_text()}: critical step != position of 1"
    return None


def _test_shifted_conjugate(n: int, pi: Permutation) -> str | None:
    sigma = conjugated_map(pi, "rho")
    sp, ss = shifted_family(pi), shifted_family(sigma)

    def rest(s):
        return ((s.Vedif - s.Vnepb) - s.Vnepa) - s.Vnest

    checks = [
        ("Vnepb", sp.Vnepb, _kap(n, ss.Vepa)),
        ("Vnepa", sp.Vnepa, _kap(n, ss.Vepb)),
        ("Vepb", sp.Vepb, _kap(n, ss.Vnepa)),
        ("Vepa", sp.Vepa, _kap(n, ss.Vnepb)),
        ("Vnest+Vnepb-Vepa", (sp.Vnest | sp.Vnepb) - sp.Vepa,
         _kap(n, ss.Vnest)),
        ("Vnest", sp.Vnest, _kap(n, (ss.Vnest | ss.Vnepb) - ss.Vepa)),
        ("Vedif-rest", rest(sp), _kap(n, rest(ss))),
        ("Vnex", _full_range(n) - sp.Vnex, kappa(n, ss.Vnex)),
    ]
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return f"{pi.to_text()}: {label}: {lhs.to_text()} != {rhs.to_text()}"
    return None


# ---------------------------------------------------------------------------
# Valley-hopping claims
# ---------------------------------------------------------------------------

def _test_valley_hopping(n: int, pi: Permutation) -> str | None:
    sigma = mfs_full(pi)
    if mfs_full(sigma) != pi:
        return f"{pi.to_text()}: double application differs"
    lp = linear_family(pi)
    ls = linear_family(sigma)
    if ls.des != n - 1 - lp.des:
        return f"{pi.to_text()}: descent counts not complementary"
    mp, ms = pattern_multisets(pi), pattern_multisets(sigma)
    if mp[0] != ms[0] or mp[2] != ms[2]:
        return f"{pi.to_text()}: 2-13 or 31-2 multiset changed"
    star = starred_classes(pi)
    zp = pattern_multisets_zero_boundary(pi)[1]
    zs = pattern_multisets_zero_boundary(sigma)[1]
    try:
        expected = (zp | star.Ldd) - star.Lda
    except Exception as exc:
        return f"{pi.to_text()}: {exc}"
    if zs != expected:
        return f"{pi.to_text()}: boundary 2-31 multiset mismatch"
    return None


def _test_extrema_counting(n: int, pi: Permutation) -> str | None:
    for which in ("2-13", "2-31", "31-2"):
        for i in range(1, n + 1):
            direct = coordinate_stat_zero_boundary(pi, which, i)
            paired = coordinate_stat_by_extrema(pi, which, i)
            if direct != paired:
                return f"{pi.to_text()}: {which} at {i}: {direct} != {paired}"
    return None


# ---------------------------------------------------------------------------
# Distribution claims
# ---------------------------------------------------------------------------

def _stat_bundle(pi: Permutation) -> tuple[int, int, int, int, int]:
    lin = linear_family(pi)
    return (
        vincular_count(pi, "u31_2"),
        vincular_count(pi, "2u13"),
        vincular_count(pi, "2u31"),
        lin.des,
        lin.ides,
    )


def _counter_claim(
    lhs_key: Callable[[int, tuple], tuple],
    rhs_key: Callable[[int, tuple], tuple],
    restricted: bool = False,
) -> Callable[[int, object], "str | None"]:
    def test(n: int, _: object) -> str | None:
        perms = avoiders(n, (3, 1, 2)) if restricted else iter_perms(n)
        lhs: Counter = Counter()
        rhs: Counter = Counter()
        for pi in perms:
            bundle = _stat_bundle(pi)
            lhs[lhs_key(n, bundle)] += 1
            rhs[rhs_key(n, bundle)] += 1
        if lhs != rhs:
            diff = next(iter(set(lhs.items()) ^ set(rhs.items())))
            return f"distributions differ near {diff}"
        return None

    return test


def _q_factorial_counter(n: int) -> Counter:
    coeffs = [1]
    for k in range(2, n + 1):
        new = [0] * (len(coeffs) + k - 1)
        for e, c in enumerate(coeffs):
            for j in range(k):
                new[e + j] += c
        coeffs = new
    return Counter({e: c for e, c in enumerate(coeffs) if c})


def _mahonian_claim(names: Sequence[str]) -> Callable[[int, object], "str | None"]:
    def test(n: int, _: object) -> str | None:
        expected = _q_factorial_counter(n)
        perms = list(iter_perms(n))
        for name in names:
            got = Counter(mahonian(pi, name) for pi in perms)
            if got != expected:
                return f"{name} is not Mahonian at n={n}"
        return None

    return test


def _test_complement_transport(n: int, pi: Permutation) -> str | None:
    comp = trivial_bijection(pi, "c")
    checks = [
        ("mad_p/sist_pp", mahonian(pi, "mad_p"), mahonian(comp, "sist_pp")),
        ("madl_p/sist_p", mahonian(pi, "madl_p"), mahonian(comp, "sist_p")),
        ("makl_p/makl", mahonian(pi, "makl_p"), mahonian(comp, "makl")),
    ]
    for label, lhs, rhs in checks:
        if lhs != rhs:
            return f"{pi.to_text()}: {label}: {lhs} != {rhs}"
    return None


def _test_pattern_sum_identity_a(n: int, pi: Permutation) -> str | None:
    lhs = vincular_count(pi, "2u13") + vincular_count(pi, "u12")
    rhs = vincular_count(pi, "2u31") + pi.value(n) - 1
    if lhs != rhs:
        return f"{pi.to_text()}: {lhs} != {rhs}"
    return None


def _test_pattern_sum_identity_b(n: int, pi: Permutation) -> str | None:
    des = linear_family(pi).des
    lhs = (
        vincular_count(pi, "3u12")
        + vincular_count(pi, "u12_3")
        + vincular_count(pi, "2u13")
        + vincular_count(pi, "u13_2")
        + vincular_count(pi, "u12")
        + n * des
    )
    rhs = (
        vincular_count(pi, "1u32")
        + vincular_count(pi, "u32_1")
        + vincular_count(pi, "2u31")
        + vincular_count(pi, "u31_2")
        + 2 * vincular_count(pi, "u21")
    )
    if lhs - rhs != n * (n - 3) // 2 + pi.value(n):
        return f"{pi.to_text()}: {lhs - rhs} != {n * (n - 3) // 2 + pi.value(n)}"
    return None


_EQ34_LHS = ("yzl1", "yzl2", "yzl3", "yzl4", "yzl1_p", "yzl2_p", "yzl3_p", "yzl4_p")
_EQ34_RHS = ("den_p", "inv_p", "fz3_p", "fz4_p", "den", "inv", "fz3", "fz4")


def _test_shifted_mahonian_transport(n: int, pi: Permutation) -> str | None:
    image = trivial_bijection(pi, "rci")
    for left, right in zip(_EQ34_LHS, _EQ34_RHS):
        if mahonian(pi, left) != mahonian(image, right):
            return f"{pi.to_text()}: {left} != {right} of reverse-complement-inverse"
    return None


def _test_eta_is_theta(n: int, pi: Permutation) -> str | None:
    if conjugated_map(pi, "eta") != theta(pi):
        return f"{pi.to_text()}: conjugated map differs from mirror map"
    return None


def _test_yzl_factorization(n: int, pi: Permutation) -> str | None:
    target = phi_yzl(pi)
    if target != phi_fz(kreweras(pi)):
        return f"{pi.to_text()}: shifted encoding != cyclic of Kreweras complement"
    if target != xi(phi_fz(trivial_bijection(pi, "rci"))):
        return f"{pi.to_text()}: shifted encoding != involution of conjugated cyclic"
    return None


def _moment_claim(alpha: int) -> Callable[[int, object], "str | None"]:
    def test(n: int, _: object) -> str | None:
        moment = jacobi_moments(
            lambda k: 2 * k + alpha + 1, lambda k: k * (k + alpha), n + 1
        )[n]
        expected = math.factorial(n + alpha)
        if moment != expected:
            return f"moment {moment} != {expected}"
        return None

    return test


# ---------------------------------------------------------------------------
# Registry and runner
# ---------------------------------------------------------------------------

def _histories(n: int) -> Iterable[LaguerreHistory]:
    return enumerate_histories(n)


def _perms(n: int) -> Iterable[Permutation]:
    return iter_perms(n)


def _whole(n: int) -> Iterable:
    return (n,)


CLAIM_REGISTRY: tuple[ClaimSpec, ...] = (
    ClaimSpec("thm3.2-involution",
              "the path map is an involution obeying its defining conditions"
              " and local case table",
              _histories, _test_involution),
    ClaimSpec("cor3.3",
              "five-statistic numeric symmetry under the path involution",
              _histories, _test_five_stat_symmetry),
    ClaimSpec("cor3.6",
              "multiset-valued symmetry under the path involution",
              _histories, _test_multiset_symmetry),
    ClaimSpec("cor1.1",
              "monomial exponent symmetry of the nine-variable polynomial",
              _histories, _test_exponent_symmetry),
    ClaimSpec("prop4.3",
              "linear statistics transported by the value-class encoding",
              _perms, _test_linear_correspondence),
    ClaimSpec("cor4.4",
              "linear statistics reflected by the conjugated involution",
              _perms, _test_linear_conjugate),
    ClaimSpec("eq14",
              "joint symmetry of (31-2, 2-13, 2-31, des, ides)",
              _whole, _counter_claim(
                  lambda n, b: b,
                  lambda n, b: (b[0], b[2], b[1], n - 1 - b[3], n - 1 - b[4]))),
    ClaimSpec("eq17",
              "(des, 2-31, 31-2) ~ (n-1-des, 2-13, 31-2)",
              _whole, _counter_claim(
                  lambda n, b: (b[3], b[2], b[0]),
                  lambda n, b: (n - 1 - b[3], b[1], b[0]))),
    ClaimSpec("eq18",
              "(des, 2-13, 31-2) ~ (n-1-des, 2-13, 31-2)",
              _whole, _counter_claim(
                  lambda n, b: (b[3], b[1], b[0]),
                  lambda n, b: (n - 1 - b[3], b[1], b[0]))),
    ClaimSpec("eq19",
              "(des, 2-13, 31-2) ~ (des, 2-31, 31-2)",
              _whole, _counter_claim(
                  lambda n, b: (b[3], b[1], b[0]),
                  lambda n, b: (b[3], b[2], b[0]))),
    ClaimSpec("eq19-restricted",
              "(des, 2-13) ~ (des, 2-31) over 312-avoiders",
              _whole, _counter_claim(
                  lambda n, b: (b[3], b[1]),
                  lambda n, b: (b[3], b[2]),
                  restricted=True)),
    ClaimSpec("thm4.6",
              "valley hopping complements descents and shifts the boundary"
              " 2-31 multiset by the starred double classes",
              _perms, _test_valley_hopping),
    ClaimSpec("fact4.8",
              "coordinate counts equal consecutive extrema-pair counts",
              _perms, _test_extrema_counting),
    ClaimSpec("prop4.10",
              "cyclic statistics transported by the excedance-class encoding",
              _perms, _test_cyclic_correspondence),
    ClaimSpec("csz-corollary",
              "linear-to-cyclic statistic transport along the composed"
              " encoding",
              _perms, _test_csz_transport),
    ClaimSpec("eta-corollary",
              "cyclic statistics reflected by the conjugated involution",
              _perms, _test_cyclic_conjugate),
    ClaimSpec("prop4.17",
              "shifted statistics transported by the nesting encoding",
              _perms, _test_shifted_correspondence),
    ClaimSpec("lem4.14",
              "the critical step equals the position of the letter 1",
              _perms, _test_critical_is_pone),
    ClaimSpec("rho-corollary",
              "shifted statistics reflected by the conjugated involution",
              _perms, _test_shifted_conjugate),
    ClaimSpec("tab2-mahonian",
              "the eighteen closed-form statistics are Mahonian",
              _whole, _mahonian_claim((
                  "mak_p", "mad_p", "makl_p", "madl_p", "fz3", "fz4",
                  "inv_p", "den_p", "fz3_p", "fz4_p",
                  "yzl1", "yzl2", "yzl3", "yzl4",
                  "yzl1_p", "yzl2_p", "yzl3_p", "yzl4_p"))),
    ClaimSpec("tab3-mahonian",
              "the seventeen pattern-sum statistics are Mahonian",
              _whole, _mahonian_claim((
                  "maj", "inv", "mak", "makl", "mad", "madl",
                  "bast", "bast_p", "bast_pp",
                  "foze", "foze_p", "foze_pp",
                  "sist", "sist_p", "sist_pp", "den", "sor"))),
    ClaimSpec("thm4.20",
              "primed statistics transported by complementation",
              _perms, _test_complement_transport),
    ClaimSpec("lem4.21",
              "2-13 plus adjacent ascents equals 2-31 plus last letter"
              " minus one",
              _perms, _test_pattern_sum_identity_a),
    ClaimSpec("lem4.22",
              "signed vincular pattern sum identity with descents",
              _perms, _test_pattern_sum_identity_b),
    ClaimSpec("eq34",
              "the eight shifted statistics match the cyclic ones after"
              " reverse-complement-inverse",
              _perms, _test_shifted_mahonian_transport),
    ClaimSpec("thm4.23-eq35",
              "the cyclic conjugated involution equals the mirror map",
              _perms, _test_eta_is_theta),
    ClaimSpec("thm4.23-eq36",
              "the shifted encoding factors through the Kreweras complement",
              _perms, _test_yzl_factorization),
    ClaimSpec("moments-alpha0",
              "continued-fraction moments with weights (2k+1, k^2) are n!",
              _whole, _moment_claim(0)),
    ClaimSpec("moments-alpha1",
              "continued-fraction moments with weights (2k+2, k(k+1)) are"
              " (n+1)!",
              _whole, _moment_claim(1)),
)

_BY_ID = {spec.claim_id: spec for spec in CLAIM_REGISTRY}


def claim_ids() -> tuple[str, ...]:
    return tuple(spec.claim_id for spec in CLAIM_REGISTRY)


def get_claim(claim_id: str) -> ClaimSpec:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaim(claim_id) from None


def _scan(
    spec: ClaimSpec, n: int, items: Sequence
) -> tuple[int, "str | None"]:
    """First failure index (or len(items)) and its description."""
    for k, item in enumerate(items):
        problem = spec.test(n, item)
        if problem is not None:
            return k, problem
    return len(items), None


def run_claim(claim_id: str, n: int, threads: int = 1) -> ClaimOutcome:
    """Run one claim exhaustively at size n.

    The reported outcome is independent of the thread count: the
    counterexample, if any, is always the first one in canonical order.
    """
    spec = get_claim(claim_id)
    start = time.monotonic()
    if threads <= 1:
        checked = 0
        counterexample = None
        for item in spec.items(n):
            problem = spec.test(n, item)
            if problem is not None:
                counterexample = problem
                break
            checked += 1
    else:
        items = list(spec.items(n))
        chunk = max(1, -(-len(items) // threads))
        slices = [items[k:k + chunk] for k in range(0, len(items), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(lambda part: _scan(spec, n, part), slices)
            )
        checked = 0
        counterexample = None
        for offset, (local, problem) in zip(
            range(0, len(items), chunk), results
        ):
            if problem is not None:
                checked = offset + local
                counterexample = problem
                break
            checked = offset + local
    millis = int((time.monotonic() - start) * 1000)
    status = "pass" if counterexample is None else "fail"
    return ClaimOutcome(claim_id, n, status, checked, counterexample, millis)

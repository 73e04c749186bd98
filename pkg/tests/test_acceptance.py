"""Acceptance gate. Each criterion records one PASS/FAIL line, printed at the end of the run.

Run directly (``python tests/test_acceptance.py``) or through pytest; in
both cases the summary lists every criterion with its measured runtime.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import acceptance_log  # noqa: E402
from mik.certifier import (  # noqa: E402
    Rule,
    cc_filter,
    certify_ntf,
    check_ntf_bounded,
    validate_certificate,
)
from mik.clutter import clutter_of  # noqa: E402
from mik.core import Monomial, MonomialIdeal, colon, ideal_power, ideal_sum  # noqa: E402
from mik.decomposition import VarPrime, height_and_unmixed, minimal_primes, symbolic_power  # noqa: E402
from mik.enumerate import batch_check  # noqa: E402
from mik.repro import MIXED_MIN, TH_MIN, golden  # noqa: E402

G = golden()
BASE_LEAVES = {Rule.PRINCIPAL, Rule.PRIME_IDEAL, Rule.BIPARTITE_BASE, Rule.WHISKER_BASE}


def _x(n, i):
    return MonomialIdeal(n, [Monomial.var(n, i)])


def _prime_list(ps):
    return sorted((len(p.vars), p.vars) for p in ps)


def _gate(number, title, checks: dict, start: float, limit_s: float):
    elapsed = time.perf_counter() - start
    ok = all(checks.values()) and elapsed < limit_s
    bad = [k for k, v in checks.items() if not v]
    if elapsed >= limit_s:
        bad.append(f"runtime {elapsed:.1f}s over {limit_s:.0f}s")
    acceptance_log.record(number, title, ok, elapsed, "; ".join(bad))
    assert ok, bad


def test_criterion_1_six_variable_counterexample():
    t = time.perf_counter()
    I = G["six_var"]
    I2, I3 = ideal_power(I, 2), ideal_power(I, 3)
    _gate(1, "(I^2:I) = I and (I^3:I) != I^2 for the six-variable ideal", {
        "(I^2:I) == I": colon(I2, I) == I,
        "(I^3:I) != I^2": colon(I3, I) != I2,
    }, t, 5)


def test_criterion_2_sweep_up_to_four_vertices():
    t = time.perf_counter()
    reports = [batch_check(n, "spp", 3) for n in range(1, 5)]
    _gate(2, "all clutters on <= 4 vertices: (I^(k+1):I) = I^k, k <= 3", {
        "166 clutters on 4 vertices": reports[-1].total_clutters == 166,
        "zero failures": all(r.fails == 0 for r in reports),
        "zero unknowns": all(r.tallies["unknown"] == 0 for r in reports),
    }, t, 60)


def test_criterion_3_sweep_five_vertices():
    t = time.perf_counter()
    r = batch_check(5, "spp", 2)
    _gate(3, "all 7579 clutters on 5 vertices: (I^(k+1):I) = I^k, k <= 2", {
        "7579 clutters": r.total_clutters == 7579,
        "zero failures": r.fails == 0,
        "zero unknowns": r.tallies["unknown"] == 0,
    }, t, 1800)


def test_criterion_4_first_deletion_example():
    t = time.perf_counter()
    I, L = G["th_I"], G["th_L"]
    verdict, cert = certify_ntf(I)
    validate_certificate(cert)
    v = check_ntf_bounded(L, 2)
    _gate(4, "six-variable deletion example: Min, proof via v = x3x6, embedded prime of L^2", {
        "Min(I) is the four listed primes": _prime_list(minimal_primes(I)) == TH_MIN,
        "I proven": verdict.holds,
        "top rule uses v = x3x6": cert.rule is Rule.TH43_RECURSION
        and cert.data["v"] == Monomial.from_support(6, [3, 6]),
        "L fails at S=2 with (x1,x2,x4,x5,x7)": v.fails and v.witness == (VarPrime(7, (1, 2, 4, 5, 7)), 2),
    }, t, 60)


def test_criterion_5_mixed_ideal():
    t = time.perf_counter()
    I = G["mixed"]
    r = cc_filter(clutter_of(I))
    _gate(5, "mixed eight-variable ideal: 11 minimal primes, not unmixed, filtered by v = x6x7x8", {
        "Min(I) is the 11 listed primes": _prime_list(minimal_primes(I)) == MIXED_MIN,
        "not unmixed": height_and_unmixed(I)[1] is False,
        "filter: cor43 with v = x6x7x8": not r.candidate and r.reason == "cor43" and r.evidence["v"] == "x6*x7*x8",
        "no embedded prime up to S=3": check_ntf_bounded(I, 3).holds,
    }, t, 300)


def test_criterion_6_split_example():
    t = time.perf_counter()
    I, J, L = G["split_I"], G["split_J"], G["split_L"]
    x3, x6 = _x(8, 3), _x(8, 6)
    branch = check_ntf_bounded(ideal_sum(x3 * I, J), 2)
    whole = check_ntf_bounded(L, 2)
    proven = {
        name: certify_ntf(K)[0].holds
        for name, K in [("I", I), ("J", J), ("I+J", ideal_sum(I, J)), ("I+x6J", ideal_sum(I, x6 * J))]
    }
    _gate(6, "split example: x3I+J has embedded (x1,x2,x3,x5,x7) at s=2; L not NTF; I, J, I+J, I+x6J proven", {
        "x3I+J embedded (x1,x2,x3,x5,x7)": branch.fails and branch.witness == (VarPrime(8, (1, 2, 3, 5, 7)), 2),
        "L has an embedded prime at s=2": whole.fails,
        **{f"{k} proven": v for k, v in proven.items()},
    }, t, 300)


@pytest.mark.xfail(strict=True, reason="(x1,x4,x5,x6,x8) is a minimal prime of L, so it cannot be embedded")
def test_criterion_6b_listed_embedded_prime_of_L():
    t = time.perf_counter()
    L = G["split_L"]
    q = VarPrime(8, (1, 4, 5, 6, 8))
    v = check_ntf_bounded(L, 2)
    embedded = [tuple(p) for p in v.details.get("embedded", [])]
    minimal = q in minimal_primes(L)
    checks = {"(x1,x4,x5,x6,x8) embedded in L^2": q.vars in embedded}
    elapsed = time.perf_counter() - t
    note = (
        f"unattainable: (x1,x4,x5,x6,x8) is a minimal prime of L (minimal={minimal}); "
        f"the only embedded prime of L^2 is {embedded}"
    )
    acceptance_log.record("6b", "split example: L^2 has embedded prime (x1,x4,x5,x6,x8)", all(checks.values()),
                          elapsed, "" if all(checks.values()) else note)
    assert all(checks.values())


def test_criterion_7_eight_cycle_windows():
    t = time.perf_counter()
    L = G["c8"]
    verdict, cert = certify_ntf(L)
    validate_certificate(cert)
    _gate(7, "4-windows of the 8-cycle: LinearSplit on (x4,x8) down to bases; L^s = L^(s), s <= 3", {
        "proven": verdict.holds,
        "top rule LinearSplit (4,8)": cert.rule is Rule.LINEAR_SPLIT and (cert.data["i"], cert.data["j"]) == (4, 8),
        "leaves are bases": all(leaf.rule in BASE_LEAVES for leaf in cert.leaves()),
        "L^s == L^(s) for s <= 3": all(ideal_power(L, s) == symbolic_power(L, s) for s in (1, 2, 3)),
    }, t, 300)


def _suites():
    import test_certifier as tc
    import test_core as tco
    import test_decomposition as td

    return {
        "membership oracle (sum/product/power/intersect/colon)": [
            tco.test_sum_matches_oracle, tco.test_product_matches_oracle, tco.test_power_matches_oracle,
            tco.test_intersect_matches_oracle, tco.test_colon_matches_oracle,
        ],
        "modular laws and colon identities": [
            tco.test_intersection_distributes_over_sum, tco.test_modular_law, tco.test_colon_by_product,
            tco.test_colon_of_intersection, tco.test_colon_by_sum, tco.test_colon_by_unused_variable_is_identity,
        ],
        "colon of irreducible powers": [tco.test_colon_of_irreducible_power],
        "Ass: decomposition vs witness oracle": [td.test_ass_agrees_with_witness_oracle],
        "symbolic power of an intersection, k <= 3": [td.test_symbolic_power_of_intersection],
        "minimal prime under each embedded prime (ambient <= 4, s <= 3)": [
            td.test_embedded_primes_contain_a_minimal_prime_through_each_variable,
        ],
        "cone preserves bounded SPP (100 clutters, k <= 2)": [tc.test_cone_preserves_bounded_strong_persistence],
        "deletion/contraction stability of proven ideals": [
            tc.test_proven_ideals_stay_ntf_under_deletion_and_contraction,
        ],
        "exhaustive certifier soundness (ambient <= 4, S = 3)": [tc.test_certifier_sound_on_every_small_squarefree_ideal],
    }


def test_criterion_8_property_suites():
    t = time.perf_counter()
    checks = {}
    for label, fns in _suites().items():
        ok = True
        for fn in fns:
            try:
                fn()
            except Exception:  # a failing suite is reported, not raised mid-loop
                ok = False
        checks[label] = ok
    _gate(8, "property suites (each >= 200 randomized or exhaustive cases unless stated)", checks, t, 600)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

"""Golden reproduction cases: fixed ideals with known answers, re-derived on demand."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .certifier import (
    Rule,
    certify_ntf,
    check_ntf_bounded,
    check_spp,
    cc_filter,
    validate_certificate,
)
from .clutter import clutter_of
from .core import Monomial, MonomialIdeal, colon, ideal_power, ideal_sum
from .decomposition import height_and_unmixed, minimal_primes, symbolic_power
from .enumerate import batch_check

__all__ = ["CASES", "LONG_CASES", "CaseResult", "run_case", "run_cases", "golden"]


def _ideal(n: int, supports) -> MonomialIdeal:
    return MonomialIdeal.from_supports(n, supports)


def _var(n: int, i: int) -> MonomialIdeal:
    return MonomialIdeal(n, [Monomial.var(n, i)])


def golden() -> dict:
    """The named fixed ideals used by the reproduction suite and the acceptance tests."""
    six = _ideal(6, [[1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6],
                     [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6]])
    th_I = _ideal(6, [[3, 6], [2, 5], [1, 4], [1, 5, 6], [2, 4, 6], [3, 4, 5], [1, 2, 3]])
    th_L = _ideal(7, [[3, 6, 7], [2, 5], [1, 4], [1, 5, 6], [2, 4, 6], [3, 4, 5], [1, 2, 3]])
    mixed = _ideal(8, [[6, 7, 8], [5, 6, 7], [1, 2, 7], [1, 2, 3], [3, 4, 5, 6], [2, 3, 4, 5]])
    sp_I = _ideal(8, [[1, 2], [2, 4], [4, 5], [7, 8], [1, 8], [5, 7]])
    sp_J = _ideal(8, [[4, 5], [5, 7], [7, 8], [1, 2], [2, 7]])
    c8 = _ideal(8, [[(i + k) % 8 + 1 for k in range(4)] for i in range(8)])
    return {
        "six_var": six,
        "th_I": th_I,
        "th_L": th_L,
        "mixed": mixed,
        "split_I": sp_I,
        "split_J": sp_J,
        "split_L": ideal_sum(_var(8, 3) * sp_I, _var(8, 6) * sp_J),
        "c8": c8,
    }


def _primes(*lists) -> list:
    return sorted((len(p), tuple(sorted(p))) for p in lists)


def _prime_list(ps) -> list:
    return sorted((len(p.vars), p.vars) for p in ps)


TH_MIN = _primes((3, 2, 1), (6, 5, 1), (6, 4, 2), (5, 4, 3))
MIXED_MIN = _primes(
    (6, 2), (7, 3), (6, 3, 1), (6, 4, 1), (7, 4, 1), (6, 5, 1),
    (7, 5, 1), (8, 5, 1), (7, 4, 2), (7, 5, 2), (8, 5, 2),
)


@dataclass
class CaseResult:
    name: str
    passed: bool
    checks: list = field(default_factory=list)
    duration_ms: float = 0.0

    def to_dict(self) -> dict:
        return {"case": self.name, "passed": self.passed, "checks": self.checks, "duration_ms": self.duration_ms}


class _Checks:
    def __init__(self):
        self.items: list = []

    def eq(self, label: str, got, want) -> None:
        self.items.append({"check": label, "passed": got == want, "got": _show(got), "expected": _show(want)})

    def ok(self) -> bool:
        return all(c["passed"] for c in self.items)


def _show(x):
    if isinstance(x, (list, tuple)):
        return [_show(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def _case_spp_6var(c: _Checks) -> None:
    I = golden()["six_var"]
    c.eq("(I^2 : I) == I", colon(ideal_power(I, 2), I) == I, True)
    c.eq("(I^3 : I) == I^2", colon(ideal_power(I, 3), I) == ideal_power(I, 2), False)
    v = check_spp(I, 2)
    c.eq("check spp K=2 status", v.status.value, "fails")
    c.eq("check spp K=2 failing k", v.witness[1], 2)


def _case_th(c: _Checks) -> None:
    g = golden()
    I, L = g["th_I"], g["th_L"]
    c.eq("Min(I)", _prime_list(minimal_primes(I)), TH_MIN)
    verdict, cert = certify_ntf(I)
    validate_certificate(cert)
    c.eq("certify I", verdict.status.value, "holds")
    c.eq("top rule", cert.rule.value, Rule.TH43_RECURSION.value)
    c.eq("witness v", str(cert.data.get("v")), "x3*x6")
    v = check_ntf_bounded(L, 2)
    c.eq("L at S=2", v.status.value, "fails")
    c.eq("embedded prime of L^2", list(v.witness[0].vars) if v.fails else None, [1, 2, 4, 5, 7])


def _case_mixed(c: _Checks) -> None:
    I = golden()["mixed"]
    c.eq("Min(I)", _prime_list(minimal_primes(I)), MIXED_MIN)
    c.eq("unmixed", height_and_unmixed(I)[1], False)
    r = cc_filter(clutter_of(I))
    c.eq("filter reason", r.reason, "cor43")
    c.eq("filter witness v", r.evidence.get("v"), "x6*x7*x8")
    c.eq("bounded NTF at S=3", check_ntf_bounded(I, 3).status.value, "holds")


def _case_split(c: _Checks) -> None:
    g = golden()
    I, J, L = g["split_I"], g["split_J"], g["split_L"]
    n = 8
    x3, x6 = _var(n, 3), _var(n, 6)
    v = check_ntf_bounded(ideal_sum(x3 * I, J), 2)
    c.eq("x3I+J embedded at s=2", list(v.witness[0].vars) if v.fails else None, [1, 2, 3, 5, 7])
    vl = check_ntf_bounded(L, 2)
    c.eq("L fails at s=2", vl.status.value, "fails")
    # (x1,x4,x5,x6,x8) is a minimal prime of L, so it cannot be the embedded witness
    c.eq("(x1,x4,x5,x6,x8) minimal for L", (5, (1, 4, 5, 6, 8)) in _prime_list(minimal_primes(L)), True)
    c.eq("L embedded primes at s=2", vl.details.get("embedded"), [[1, 2, 3, 5, 7]])
    for label, K in [("I", I), ("J", J), ("I+J", ideal_sum(I, J)), ("I+x6J", ideal_sum(I, x6 * J))]:
        c.eq(f"certify {label}", certify_ntf(K)[0].status.value, "holds")


_BASE_LEAVES = {Rule.PRINCIPAL, Rule.PRIME_IDEAL, Rule.BIPARTITE_BASE, Rule.WHISKER_BASE}


def _case_c8(c: _Checks) -> None:
    L = golden()["c8"]
    verdict, cert = certify_ntf(L)
    validate_certificate(cert)
    c.eq("certify L", verdict.status.value, "holds")
    c.eq("top rule", cert.rule.value, Rule.LINEAR_SPLIT.value)
    c.eq("split pair", (cert.data.get("i"), cert.data.get("j")), (4, 8))
    c.eq("leaves are bases", all(leaf.rule in _BASE_LEAVES for leaf in cert.leaves()), True)
    for s in (1, 2, 3):
        c.eq(f"L^{s} == L^({s})", ideal_power(L, s) == symbolic_power(L, s), True)


def _sweep(n: int, K: int):
    def run(c: _Checks) -> None:
        r = batch_check(n, "spp", K)
        c.eq(f"n={n} spp K={K} failures", r.fails, 0)
        c.eq(f"n={n} unknown", r.tallies["unknown"], 0)
        c.eq(f"n={n} clutter count", r.total_clutters, {1: 1, 2: 4, 3: 18, 4: 166, 5: 7579}[n])
    return run


def _sweep_upto(N: int, K: int):
    def run(c: _Checks) -> None:
        for n in range(1, N + 1):
            _sweep(n, K)(c)
    return run


CASES = {
    "spp-6var": _case_spp_6var,
    "exa-ntf-1": _case_th,
    "rem-ntf": _case_mixed,
    "exa-ntf-2": _case_split,
    "c8": _case_c8,
    "sweep-4": _sweep_upto(4, 3),
    "sweep-5": _sweep(5, 2),
}
LONG_CASES = frozenset({"sweep-5"})


def run_case(name: str) -> CaseResult:
    if name not in CASES:
        raise KeyError(f"unknown case {name!r}; known: {', '.join(CASES)}")
    start = time.perf_counter()
    c = _Checks()
    try:
        CASES[name](c)
    except Exception as exc:
        c.items.append({"check": "ran without error", "passed": False, "got": f"{type(exc).__name__}: {exc}", "expected": None})
    return CaseResult(name, c.ok(), c.items, round((time.perf_counter() - start) * 1000, 3))


def run_cases(names=None, long: bool = False) -> list:
    if names is None:
        names = [n for n in CASES if long or n not in LONG_CASES]
    return [run_case(n) for n in names]

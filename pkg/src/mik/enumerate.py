"""Exhaustive clutter enumeration and batch property sweeps."""

from __future__ import annotations

import os
import signal
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .certifier import (
    DEFAULT_NTF_BOUND,
    DEFAULT_SPP_BOUND,
    Status,
    Verdict,
    check_ntf_bounded,
    check_packing,
    check_persistence,
    check_spp,
)
from .clutter import Clutter, edge_ideal

__all__ = [
    "MAX_ENUM_VERTICES",
    "MAX_CANONICAL_VERTICES",
    "PROPERTIES",
    "enumerate_clutters",
    "canonical_form",
    "InstanceResult",
    "SweepReport",
    "check_clutter",
    "batch_check",
    "default_jobs",
]

MAX_ENUM_VERTICES = 6
MAX_CANONICAL_VERTICES = 8
PROPERTIES = ("spp", "persistence", "ntf", "packing")


def _subsets(n: int) -> list:
    """Nonempty subsets of 1..n as sorted tuples, by size then lexicographically."""
    return [c for k in range(1, n + 1) for c in combinations(range(1, n + 1), k)]


def enumerate_clutters(n: int):
    """Yield every clutter on ``{1..n}`` with at least one edge, once each.

    Edges are added in (size, lex) order; a new edge may not contain an
    earlier one, and earlier edges are never larger, so every antichain
    arises from exactly one increasing edge sequence.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_ENUM_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_ENUM_VERTICES}, got {n!r}")
    subs = _subsets(n)
    masks = [sum(1 << (v - 1) for v in s) for s in subs]
    m = len(subs)

    def extend(chosen: list, chosen_masks: list, start: int):
        for k in range(start, m):
            mk = masks[k]
            if any(c & mk == c for c in chosen_masks):
                continue
            chosen.append(subs[k])
            chosen_masks.append(mk)
            yield Clutter(n, tuple(chosen))
            yield from extend(chosen, chosen_masks, k + 1)
            chosen.pop()
            chosen_masks.pop()

    yield from extend([], [], 0)


def _edge_seq(edges) -> tuple:
    return tuple(sorted((tuple(sorted(e)) for e in edges), key=lambda e: (len(e), e)))


def canonical_form(C: Clutter) -> Clutter:
    """Lexicographically least relabeling of ``C`` over all vertex permutations."""
    n = C.vertices
    if n > MAX_CANONICAL_VERTICES:
        raise ValueError(f"canonical form is capped at {MAX_CANONICAL_VERTICES} vertices, got {n}")
    best = None
    for perm in permutations(range(1, n + 1)):
        seq = _edge_seq(tuple(perm[v - 1] for v in e) for e in C.edges)
        if best is None or seq < best:
            best = seq
    return Clutter(n, best)


@dataclass(frozen=True)
class InstanceResult:
    index: int
    clutter: str
    status: Status
    witness: dict | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        d = {"index": self.index, "clutter": self.clutter, "status": self.status.value}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.error is not None:
            d["error"] = self.error
        return d


@dataclass
class SweepReport:
    vertex_count: int
    property: str
    bound: int | None
    total_clutters: int = 0
    tallies: dict = field(default_factory=lambda: {s.value: 0 for s in Status})
    failures: list = field(default_factory=list)
    unknowns: list = field(default_factory=list)
    duration_ms: float = 0.0

    def add(self, r: InstanceResult) -> None:
        self.total_clutters += 1
        self.tallies[r.status.value] += 1
        if r.status is Status.FAILS:
            self.failures.append(r)
        elif r.status is Status.UNKNOWN:
            self.unknowns.append(r)

    @property
    def fails(self) -> int:
        return self.tallies[Status.FAILS.value]

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "property": self.property,
            "bound": self.bound,
            "total_clutters": self.total_clutters,
            "tallies": dict(self.tallies),
            "failures": [r.to_dict() for r in self.failures],
            "unknowns": [r.to_dict() for r in self.unknowns],
            "duration_ms": self.duration_ms,
        }


def check_clutter(C: Clutter, prop: str, bound: int | None = None) -> Verdict:
    """Run one property checker on ``C`` (or its edge ideal)."""
    if prop == "packing":
        return check_packing(C)
    I = edge_ideal(C)
    if prop == "spp":
        return check_spp(I, bound or DEFAULT_SPP_BOUND)
    if prop == "persistence":
        return check_persistence(I, bound or DEFAULT_SPP_BOUND)
    if prop == "ntf":
        return check_ntf_bounded(I, bound or DEFAULT_NTF_BOUND)
    raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")


class _Timeout(Exception):
    pass


def _on_alarm(signum, frame):
    raise _Timeout()


def _run_one(args) -> InstanceResult:
    index, C, prop, bound, timeout = args
    use_alarm = bool(timeout) and hasattr(signal, "setitimer")
    old = signal.signal(signal.SIGALRM, _on_alarm) if use_alarm else None
    try:
        try:
            if use_alarm:
                signal.setitimer(signal.ITIMER_REAL, timeout)
            v = check_clutter(C, prop, bound)
        finally:
            if use_alarm:
                signal.setitimer(signal.ITIMER_REAL, 0)
    except _Timeout:
        return InstanceResult(index, str(C), Status.UNKNOWN, error=f"timed out after {timeout}s")
    except Exception as exc:  # recorded, not fatal to the sweep
        return InstanceResult(index, str(C), Status.UNKNOWN, error=f"{type(exc).__name__}: {exc}")
    finally:
        if use_alarm:
            signal.signal(signal.SIGALRM, old)
    if v.status is Status.FAILS:
        canon = canonical_form(C) if C.vertices <= MAX_CANONICAL_VERTICES else C
        w = v.to_dict()["witness"]
        w["canonical"] = str(canon)
        return InstanceResult(index, str(C), v.status, w)
    return InstanceResult(index, str(C), v.status)


def default_jobs() -> int:
    env = os.environ.get("MIK_JOBS")
    if env:
        return max(1, int(env))
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def batch_check(
    n: int,
    prop: str,
    bound: int | None = None,
    jobs: int = 1,
    timeout: float | None = None,
    limit: int | None = None,
) -> SweepReport:
    """Check ``prop`` on every clutter on ``n`` vertices; results are aggregated in enumeration order."""
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    if bound is not None and (not isinstance(bound, int) or bound < 1):
        raise ValueError(f"bound must be a positive integer, got {bound!r}")
    start = time.perf_counter()
    report = SweepReport(n, prop, None if prop == "packing" else bound or (
        DEFAULT_NTF_BOUND if prop == "ntf" else DEFAULT_SPP_BOUND))
    tasks = ((i, C, prop, bound, timeout) for i, C in enumerate(enumerate_clutters(n)) if limit is None or i < limit)
    if jobs > 1:
        from multiprocessing import get_context

        with get_context("fork").Pool(jobs) as pool:
            results = list(pool.imap(_run_one, tasks, chunksize=64))
    else:
        results = [_run_one(t) for t in tasks]
    for r in sorted(results, key=lambda r: r.index):
        report.add(r)
    report.duration_ms = round((time.perf_counter() - start) * 1000, 3)
    return report

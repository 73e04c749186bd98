"""Property checkers and a rule-based prover/refuter for normal torsion-freeness.

Bounded checkers (:func:`check_spp`, :func:`check_persistence`,
:func:`check_ntf_bounded`) only ever claim a property up to their power
bound. Unbounded claims come solely from :func:`certify_ntf`, whose proving
rules are the reduction theorems for square-free monomial ideals:

* stripping a common monomial factor preserves NTF in both directions;
* a sum of ideals in disjoint sets of variables is NTF when each summand is;
* edge ideals of bipartite graphs are NTF, and stay NTF after whiskering
  one edge with a fresh variable;
* ``L = x_i I + x_j J`` is NTF iff ``x_i I + J`` and ``I + x_j J`` are;
* if a square-free ``v in I^l`` meets every minimal prime in exactly ``l``
  variables and every deletion ``I \\ x_i`` (``x_i | v``) is NTF, then so is ``I``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .clutter import Clutter, bipartition, edge_ideal, has_packing_property
from .core import (
    Monomial,
    MonomialIdeal,
    _member,
    colon,
    deletion,
    ideal_power,
    ideal_sum,
    strip_common_factor,
    support,
)
from .decomposition import (
    VarPrime,
    associated_primes,
    beta1,
    height_and_unmixed,
    is_associated,
    minimal_primes,
    symbolic_power,
)

__all__ = [
    "Status",
    "Verdict",
    "Rule",
    "Certificate",
    "CertificateError",
    "InconsistentAlgorithmsError",
    "check_spp",
    "check_persistence",
    "check_ntf_bounded",
    "check_packing",
    "th43_witness_search",
    "linear_split_search",
    "certify_ntf",
    "validate_certificate",
    "FilterResult",
    "cc_filter",
    "DEFAULT_SPP_BOUND",
    "DEFAULT_NTF_BOUND",
]

DEFAULT_SPP_BOUND = 3
DEFAULT_NTF_BOUND = 4


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check.

    ``power_bound`` is the largest power examined; it is None for verdicts
    backed by a proof certificate and for the exact (power-free) packing
    check. ``witness`` is ``(prime, s)`` for failures; the prime is None
    when the failure is an ideal inequality, and packing failures use
    ``("minor", {...})``.
    """

    status: Status
    power_bound: int | None
    witness: tuple | None = None
    notes: str = ""
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.status is Status.FAILS and self.witness is None:
            raise ValueError("a failing verdict must carry a witness")
        if self.status is not Status.FAILS and self.witness is not None:
            raise ValueError("only failing verdicts carry witnesses")

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def to_dict(self) -> dict:
        w = None
        if self.witness is not None:
            p, s = self.witness
            if p is None or isinstance(p, VarPrime):
                w = {"prime": list(p.vars) if p is not None else None, "power": s}
            else:
                w = {p: _jsonable(s)}
        return {
            "status": self.status.value,
            "power_bound": self.power_bound,
            "witness": w,
            "notes": self.notes,
            "details": self.details,
        }


class InconsistentAlgorithmsError(AssertionError):
    """Two independent computations of the same fact disagreed."""


def _require_nonzero_proper(I: MonomialIdeal) -> None:
    if I.is_zero() or I.is_unit():
        raise ValueError("property checks need a nonzero proper ideal")


def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.is_squarefree():
        raise ValueError(f"expected a square-free ideal, got ({I})")


def _check_bound(k: int, name: str) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"{name} must be a positive integer, got {k!r}")


def check_spp(I: MonomialIdeal, K: int = DEFAULT_SPP_BOUND) -> Verdict:
    """Strong persistence up to ``K``: ``(I^(k+1) : I) == I^k`` for ``1 <= k <= K``."""
    _require_nonzero_proper(I)
    _check_bound(K, "power bound")
    for k in range(1, K + 1):
        Ik = ideal_power(I, k)
        quotient = colon(ideal_power(I, k + 1), I)
        if quotient != Ik:
            extra = next(g for g in quotient.gens if not _member(Ik.gens, g))
            return Verdict(
                Status.FAILS,
                K,
                (None, k),
                notes=f"(I^{k + 1} : I) != I^{k}",
                details={"extra_generator": str(extra)},
            )
    return Verdict(Status.HOLDS, K, notes=f"(I^(k+1) : I) = I^k for k <= {K}")


def check_persistence(I: MonomialIdeal, K: int = DEFAULT_SPP_BOUND) -> Verdict:
    """``Ass(I^k) <= Ass(I^(k+1))`` for ``1 <= k <= K``."""
    _require_nonzero_proper(I)
    _check_bound(K, "power bound")
    prev = associated_primes(I)
    for k in range(1, K + 1):
        nxt = associated_primes(ideal_power(I, k + 1))
        lost = [p for p in prev if p not in nxt]
        if lost:
            return Verdict(Status.FAILS, K, (lost[0], k), notes=f"{lost[0]} in Ass(I^{k}) but not Ass(I^{k + 1})")
        prev = nxt
    return Verdict(Status.HOLDS, K, notes=f"Ass(I^k) grows for k <= {K}")


def check_packing(C: Clutter) -> Verdict:
    """Packing property: alpha_0 = beta_1 on every nontrivial minor. Exact, no power bound."""
    packs, failing = has_packing_property(C)
    if packs:
        return Verdict(Status.HOLDS, None, notes="every minor satisfies alpha_0 = beta_1")
    D, T = failing
    return Verdict(
        Status.FAILS,
        None,
        ("minor", {"delete": list(D), "contract": list(T)}),
        notes=f"minor deleting {list(D)} and contracting {list(T)} has alpha_0 != beta_1",
    )


def check_ntf_bounded(I: MonomialIdeal, S: int = DEFAULT_NTF_BOUND) -> Verdict:
    """No embedded primes of ``I^s`` for ``s <= S``, cross-checked against ``I^s == I^(s)``."""
    _require_squarefree(I)
    _require_nonzero_proper(I)
    _check_bound(S, "power bound")
    mins = minimal_primes(I)
    for s in range(1, S + 1):
        Is = ideal_power(I, s)
        embedded = [p for p in associated_primes(Is) if p not in mins]
        equal = Is == symbolic_power(I, s)
        if bool(embedded) == equal:
            raise InconsistentAlgorithmsError(
                f"Ass(I^{s}) and I^{s} = I^({s}) disagree for ({I})"
            )
        if embedded:
            return Verdict(
                Status.FAILS,
                S,
                (embedded[0], s),
                notes=f"{embedded[0]} is an embedded prime of I^{s}",
                details={"embedded": [list(p.vars) for p in embedded]},
            )
    return Verdict(Status.HOLDS, S, notes=f"I^s = I^(s) for s <= {S}")


# ---------------------------------------------------------------------------
# witness searches


def _meets_exactly(v: tuple, primes, ell: int) -> bool:
    vs = {i + 1 for i, e in enumerate(v) if e}
    return all(len(vs.intersection(p.vars)) == ell for p in primes)


def th43_witness_search(I: MonomialIdeal, l_max: int | None = None):
    """Find ``(l, v)``: square-free ``v in I^l`` meeting every minimal prime in exactly ``l`` variables.

    Products of pairwise coprime generators are tried before arbitrary
    square-free monomials of ``I^l``. Returns None when nothing is found.
    """
    _require_squarefree(I)
    _require_nonzero_proper(I)
    if l_max is None:
        l_max = beta1(I)[0]
    mins = minimal_primes(I)
    gens = I.gens
    live = sorted(support(I))
    n = I.ambient
    for ell in range(1, l_max + 1):
        for combo in combinations(gens, ell):
            v = tuple(map(sum, zip(*combo)))
            if max(v) <= 1 and _meets_exactly(v, mins, ell):
                return ell, Monomial._raw(v)
        power = ideal_power(I, ell).gens
        for size in range(1, len(live) + 1):
            cands = []
            for chosen in combinations(live, size):
                v = tuple(1 if i + 1 in chosen else 0 for i in range(n))
                cands.append(v)
            for v in sorted(cands):
                if _member(power, v) and _meets_exactly(v, mins, ell):
                    return ell, Monomial._raw(v)
    return None


def linear_split_search(L: MonomialIdeal):
    """Find ``(i, I, j, J)`` with ``L = x_i I + x_j J`` and each generator divisible by exactly one of ``x_i, x_j``.

    Pairs are scanned from the highest variable indices down. Returns None
    when no split exists.
    """
    _require_squarefree(L)
    _require_nonzero_proper(L)
    n = L.ambient
    gens = L.gens
    for j in range(n, 0, -1):
        for i in range(j - 1, 0, -1):
            a, b = i - 1, j - 1
            if all(bool(g[a]) != bool(g[b]) for g in gens):
                with_i = [g[:a] + (0,) + g[a + 1:] for g in gens if g[a]]
                with_j = [g[:b] + (0,) + g[b + 1:] for g in gens if g[b]]
                if with_i and with_j:
                    return i, MonomialIdeal(n, with_i), j, MonomialIdeal(n, with_j)
    return None


# ---------------------------------------------------------------------------
# certificates


class Rule(str, enum.Enum):
    STRIP_FACTOR = "StripFactor"
    DISJOINT_SPLIT = "DisjointSplit"
    PRINCIPAL = "Principal"
    PRIME_IDEAL = "PrimeIdeal"
    BIPARTITE_BASE = "BipartiteBase"
    WHISKER_BASE = "WhiskerBase"
    TH43_RECURSION = "Th43Recursion"
    LINEAR_SPLIT = "LinearSplit"
    BOUNDED_REFUTATION = "BoundedRefutation"
    BOUNDED_INCONCLUSIVE = "BoundedInconclusive"


LEAF_RULES = frozenset(
    {
        Rule.PRINCIPAL,
        Rule.PRIME_IDEAL,
        Rule.BIPARTITE_BASE,
        Rule.WHISKER_BASE,
        Rule.BOUNDED_REFUTATION,
        Rule.BOUNDED_INCONCLUSIVE,
    }
)


class Outcome(str, enum.Enum):
    PROVEN = "proven"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    """One rule application: the ideal it concerns, its outcome, and its premises."""

    rule: Rule
    ideal: MonomialIdeal
    outcome: Outcome
    premises: tuple = ()
    data: dict = field(default_factory=dict, compare=False)
    witness: tuple | None = None

    def leaves(self):
        if not self.premises:
            yield self
        for p in self.premises:
            yield from p.leaves()

    def walk(self):
        yield self
        for p in self.premises:
            yield from p.walk()

    def to_dict(self) -> dict:
        w = None
        if self.witness is not None:
            w = {"prime": list(self.witness[0].vars), "power": self.witness[1]}
        return {
            "rule": self.rule.value,
            "ideal": str(self.ideal),
            "vars": self.ideal.ambient,
            "outcome": self.outcome.value,
            "witness": w,
            "data": _jsonable(self.data),
            "premises": [p.to_dict() for p in self.premises],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        from .textio import parse_ideal

        n = d["vars"]
        w = d.get("witness")
        witness = (VarPrime(n, tuple(w["prime"])), w["power"]) if w else None
        return cls(
            Rule(d["rule"]),
            parse_ideal(d["ideal"], vars=n),
            Outcome(d["outcome"]),
            tuple(cls.from_dict(p) for p in d.get("premises", ())),
            dict(d.get("data", {})),
            witness,
        )

    def pretty(self, indent: int = 0) -> str:
        pad = "  " * indent
        extra = ", ".join(f"{k}={v}" for k, v in _jsonable(self.data).items())
        line = f"{pad}{self.rule.value} [{self.outcome.value}] ({self.ideal})"
        if extra:
            line += f"  {{{extra}}}"
        return "\n".join([line] + [p.pretty(indent + 1) for p in self.premises])


def _jsonable(x: Any):
    if isinstance(x, (MonomialIdeal, Monomial)):
        return str(x)
    if isinstance(x, VarPrime):
        return list(x.vars)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _components(I: MonomialIdeal) -> list:
    """Generators grouped into blocks that share no variables."""
    gens = list(I.gens)
    masks = [sum(1 << i for i, e in enumerate(g) if e) for g in gens]
    blocks: list = []
    for g, m in zip(gens, masks):
        merged = [g]
        mm = m
        rest = []
        for bg, bm in blocks:
            if bm & mm:
                merged.extend(bg)
                mm |= bm
            else:
                rest.append((bg, bm))
        # a later block may now touch the merged one
        changed = True
        while changed:
            changed = False
            still = []
            for bg, bm in rest:
                if bm & mm:
                    merged.extend(bg)
                    mm |= bm
                    changed = True
                else:
                    still.append((bg, bm))
            rest = still
        blocks = rest + [(merged, mm)]
    out = [MonomialIdeal(I.ambient, bg) for bg, _ in blocks]
    return sorted(out, key=lambda J: J.gens)


def _whisker_pattern(I: MonomialIdeal):
    """Detect ``(u_1..u_t) + (z * u_{t+1})`` over a bipartite graph with ``z`` fresh."""
    gens = I.gens
    if len(gens) < 2:
        return None
    cubic = [g for g in gens if sum(g) == 3]
    if len(cubic) != 1 or any(sum(g) != 2 for g in gens if g is not cubic[0]):
        return None
    g = cubic[0]
    others = [h for h in gens if h is not g]
    used = set()
    for h in others:
        used.update(i + 1 for i, e in enumerate(h) if e)
    for z in (i + 1 for i, e in enumerate(g) if e):
        if z in used:
            continue
        edge = tuple(i + 1 for i, e in enumerate(g) if e and i + 1 != z)
        graph_edges = [tuple(i + 1 for i, e in enumerate(h) if e) for h in others] + [edge]
        try:
            G = Clutter(I.ambient, tuple(graph_edges))
        except ValueError:
            continue
        sides = bipartition(G)
        if sides is not None:
            return {"whisker_var": z, "edge": list(edge), "bipartition": [list(sides[0]), list(sides[1])]}
    return None


def _check_bipartition(edges, sides) -> bool:
    a, b = set(sides[0]), set(sides[1])
    return not (a & b) and all((x in a and y in b) or (x in b and y in a) for x, y in edges)


def _is_prime_ideal(I: MonomialIdeal) -> bool:
    return bool(I.gens) and all(sum(g) == 1 for g in I.gens)


def _disjoint_witness(I: MonomialIdeal, blocks: list, bad: "Certificate"):
    """Lift an embedded prime of one block to the whole sum by adding a minimal prime of the rest."""
    p, s = bad.witness
    primes = set(p.vars)
    for other in blocks:
        if other == bad.ideal:
            continue
        primes.update(minimal_primes(other)[0].vars)
    q = VarPrime(I.ambient, tuple(primes))
    Is = ideal_power(I, s)
    if is_associated(q, Is) and q not in minimal_primes(I):
        return q, s
    return None


@dataclass
class _Budget:
    depth: int
    power_bound: int
    l_max: int | None


class _Certifier:
    def __init__(self, budget: _Budget):
        self.budget = budget
        self.memo: dict = {}

    def run(self, I: MonomialIdeal, depth: int) -> Certificate:
        key = (I, depth)
        if key not in self.memo:
            self.memo[key] = self._certify(I, depth)
        return self.memo[key]

    def _bounded(self, I: MonomialIdeal, note: str = "") -> Certificate:
        v = check_ntf_bounded(I, self.budget.power_bound)
        data = {"power_bound": self.budget.power_bound}
        if note:
            data["reason"] = note
        if v.fails:
            return Certificate(Rule.BOUNDED_REFUTATION, I, Outcome.REFUTED, (), data, v.witness)
        return Certificate(Rule.BOUNDED_INCONCLUSIVE, I, Outcome.UNKNOWN, (), data)

    def _certify(self, I: MonomialIdeal, depth: int) -> Certificate:
        if I.is_zero() or I.is_unit():
            return Certificate(Rule.PRINCIPAL, I, Outcome.PROVEN, (), {"convention": "zero or unit ideal"})

        if len(I.gens) == 1:
            return Certificate(Rule.PRINCIPAL, I, Outcome.PROVEN)

        h, rest = strip_common_factor(I)
        if any(h):
            sub = self.run(rest, depth)
            return Certificate(Rule.STRIP_FACTOR, I, sub.outcome, (sub,), {"factor": h}, sub.witness)
        if _is_prime_ideal(I):
            return Certificate(Rule.PRIME_IDEAL, I, Outcome.PROVEN)

        blocks = _components(I)
        if len(blocks) > 1:
            subs = tuple(self.run(B, depth) for B in blocks)
            if all(s.outcome is Outcome.PROVEN for s in subs):
                return Certificate(Rule.DISJOINT_SPLIT, I, Outcome.PROVEN, subs)
            for s in subs:
                if s.outcome is Outcome.REFUTED:
                    w = _disjoint_witness(I, blocks, s)
                    if w is not None:
                        return Certificate(Rule.DISJOINT_SPLIT, I, Outcome.REFUTED, subs, {}, w)

        if all(sum(g) == 2 for g in I.gens):
            G = Clutter(I.ambient, tuple(tuple(g.support()) for g in I.gens))
            sides = bipartition(G)
            if sides is not None:
                return Certificate(
                    Rule.BIPARTITE_BASE, I, Outcome.PROVEN, (), {"bipartition": [list(sides[0]), list(sides[1])]}
                )
            return self._bounded(I, "graph is not bipartite")

        pattern = _whisker_pattern(I)
        if pattern is not None:
            return Certificate(Rule.WHISKER_BASE, I, Outcome.PROVEN, (), pattern)

        if depth > 0:
            split = linear_split_search(I)
            if split is not None:
                i, Ii, j, Jj = split
                xi = MonomialIdeal(I.ambient, [Monomial.var(I.ambient, i)])
                xj = MonomialIdeal(I.ambient, [Monomial.var(I.ambient, j)])
                left = self.run(ideal_sum(xi * Ii, Jj), depth - 1)
                right = self.run(ideal_sum(Ii, xj * Jj), depth - 1)
                data = {"i": i, "I": Ii, "j": j, "J": Jj}
                if left.outcome is Outcome.PROVEN and right.outcome is Outcome.PROVEN:
                    return Certificate(Rule.LINEAR_SPLIT, I, Outcome.PROVEN, (left, right), data)
                for branch in (left, right):
                    if branch.outcome is Outcome.REFUTED:
                        return Certificate(
                            Rule.LINEAR_SPLIT, I, Outcome.REFUTED, (left, right), data, branch.witness
                        )

            found = th43_witness_search(I, self.budget.l_max)
            if found is not None:
                ell, v = found
                subs = tuple(self.run(deletion(I, x), depth - 1) for x in sorted(v.support()))
                if all(s.outcome is Outcome.PROVEN for s in subs):
                    return Certificate(Rule.TH43_RECURSION, I, Outcome.PROVEN, subs, {"l": ell, "v": v})

        return self._bounded(I)


def certify_ntf(
    I: MonomialIdeal,
    depth: int | None = None,
    power_bound: int = DEFAULT_NTF_BOUND,
    l_max: int | None = None,
) -> tuple:
    """Try to prove or refute that square-free ``I`` is normally torsion-free.

    Returns ``(verdict, certificate)``. ``depth`` limits nested
    LinearSplit/Th43Recursion steps (default: number of variables).
    """
    _require_squarefree(I)
    _check_bound(power_bound, "power bound")
    budget = _Budget(I.ambient if depth is None else depth, power_bound, l_max)
    cert = _Certifier(budget).run(I, budget.depth)
    return _verdict_of(cert, power_bound), cert


def _verdict_of(cert: Certificate, power_bound: int) -> Verdict:
    if cert.outcome is Outcome.PROVEN:
        return Verdict(Status.HOLDS, None, notes=f"proven by {cert.rule.value}")
    if cert.outcome is Outcome.REFUTED:
        p, s = cert.witness
        return Verdict(Status.FAILS, power_bound, (p, s), notes=f"{p} is an embedded prime of I^{s}")
    return Verdict(Status.UNKNOWN, power_bound, notes="no rule applied and no embedded prime found")


# ---------------------------------------------------------------------------
# replay


def _fail(cert: Certificate, msg: str):
    raise CertificateError(f"{cert.rule.value} on ({cert.ideal}): {msg}")


def _check_refutation_witness(cert: Certificate) -> None:
    if cert.witness is None:
        _fail(cert, "refutation without witness")
    p, s = cert.witness
    if p in minimal_primes(cert.ideal):
        _fail(cert, f"{p} is a minimal prime, not an embedded one")
    if not is_associated(p, ideal_power(cert.ideal, s)):
        _fail(cert, f"{p} is not associated to I^{s}")


def validate_certificate(cert: Certificate) -> bool:
    """Re-check every rule's side conditions, bottom-up, without searching.

    Raises :class:`CertificateError` on the first violated condition.
    """
    for p in cert.premises:
        validate_certificate(p)
    I = cert.ideal
    rule = cert.rule
    outs = [p.outcome for p in cert.premises]
    if rule in LEAF_RULES and cert.premises:
        _fail(cert, "leaf rule with premises")

    if cert.outcome is Outcome.REFUTED:
        _check_refutation_witness(cert)
    elif cert.witness is not None:
        _fail(cert, "only refutations carry witnesses")

    if rule is Rule.PRINCIPAL:
        if not (I.is_zero() or I.is_unit() or len(I.gens) == 1) or cert.outcome is not Outcome.PROVEN:
            _fail(cert, "not principal")
    elif rule is Rule.PRIME_IDEAL:
        if not _is_prime_ideal(I) or cert.outcome is not Outcome.PROVEN:
            _fail(cert, "not generated by variables")
    elif rule is Rule.STRIP_FACTOR:
        h, rest = strip_common_factor(I)
        if len(cert.premises) != 1 or cert.premises[0].ideal != rest or not any(h):
            _fail(cert, "premise is not the ideal with its common factor removed")
        if cert.outcome is not outs[0]:
            _fail(cert, "outcome must match the stripped ideal")
    elif rule is Rule.DISJOINT_SPLIT:
        blocks = [p.ideal for p in cert.premises]
        if len(blocks) < 2:
            _fail(cert, "needs at least two blocks")
        for a, b in combinations(blocks, 2):
            if support(a) & support(b):
                _fail(cert, "blocks share variables")
        total = blocks[0]
        for B in blocks[1:]:
            total = ideal_sum(total, B)
        if total != I:
            _fail(cert, "blocks do not sum to the ideal")
        if cert.outcome is Outcome.PROVEN and any(o is not Outcome.PROVEN for o in outs):
            _fail(cert, "proven with an unproven block")
        if cert.outcome is Outcome.REFUTED and Outcome.REFUTED not in outs:
            _fail(cert, "refuted without a refuted block")
    elif rule is Rule.BIPARTITE_BASE:
        if not all(sum(g) == 2 and max(g) == 1 for g in I.gens):
            _fail(cert, "not a graph")
        edges = [tuple(sorted(g.support())) for g in I.gens]
        if not _check_bipartition(edges, cert.data.get("bipartition", ([], []))):
            _fail(cert, "bipartition does not split every edge")
    elif rule is Rule.WHISKER_BASE:
        d = cert.data
        z = d["whisker_var"]
        edge = tuple(d["edge"])
        g = Monomial.from_support(I.ambient, edge + (z,))
        if g not in I.gens:
            _fail(cert, "whiskered edge is not a generator")
        others = [h for h in I.gens if h != g]
        if any(sum(h) != 2 or h[z - 1] for h in others) or z in edge:
            _fail(cert, "whisker variable is not fresh or base is not a graph")
        graph = [tuple(sorted(h.support())) for h in others] + [edge]
        if not _check_bipartition(graph, d["bipartition"]):
            _fail(cert, "base graph is not bipartite")
    elif rule is Rule.LINEAR_SPLIT:
        from .textio import parse_ideal

        n = I.ambient
        i, j = cert.data["i"], cert.data["j"]
        Ii = cert.data["I"] if isinstance(cert.data["I"], MonomialIdeal) else parse_ideal(cert.data["I"], vars=n)
        Jj = cert.data["J"] if isinstance(cert.data["J"], MonomialIdeal) else parse_ideal(cert.data["J"], vars=n)
        if i == j or j in support(Ii) or i in support(Jj) or i in support(Ii) or j in support(Jj):
            _fail(cert, "gcd side conditions violated")
        xi = MonomialIdeal(n, [Monomial.var(n, i)])
        xj = MonomialIdeal(n, [Monomial.var(n, j)])
        if ideal_sum(xi * Ii, xj * Jj) != I:
            _fail(cert, "ideal is not x_i I + x_j J")
        if [p.ideal for p in cert.premises] != [ideal_sum(xi * Ii, Jj), ideal_sum(Ii, xj * Jj)]:
            _fail(cert, "premises are not x_i I + J and I + x_j J")
        if cert.outcome is Outcome.PROVEN and any(o is not Outcome.PROVEN for o in outs):
            _fail(cert, "proven with an unproven branch")
        if cert.outcome is Outcome.REFUTED and Outcome.REFUTED not in outs:
            _fail(cert, "refuted without a refuted branch")
    elif rule is Rule.TH43_RECURSION:
        from .textio import parse_monomial

        ell = cert.data["l"]
        v = cert.data["v"]
        v = v if isinstance(v, Monomial) else parse_monomial(v, I.ambient)
        if not v.is_squarefree() or not _member(ideal_power(I, ell).gens, v):
            _fail(cert, f"v = {v} is not a square-free element of I^{ell}")
        if not _meets_exactly(tuple(v), minimal_primes(I), ell):
            _fail(cert, "v does not meet every minimal prime in exactly l variables")
        wanted = [deletion(I, x) for x in sorted(v.support())]
        if [p.ideal for p in cert.premises] != wanted:
            _fail(cert, "premises are not the deletions along supp(v)")
        if cert.outcome is not Outcome.PROVEN or any(o is not Outcome.PROVEN for o in outs):
            _fail(cert, "only proves, and only from proven deletions")
    elif rule is Rule.BOUNDED_REFUTATION:
        if cert.outcome is not Outcome.REFUTED:
            _fail(cert, "bounded refutation must refute")
    elif rule is Rule.BOUNDED_INCONCLUSIVE:
        if cert.outcome is not Outcome.UNKNOWN:
            _fail(cert, "inconclusive leaf must be unknown")
    return True


# ---------------------------------------------------------------------------
# minimal-counterexample filter


@dataclass(frozen=True)
class FilterResult:
    candidate: bool
    reason: str
    evidence: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {"candidate": self.candidate, "reason": self.reason, "evidence": _jsonable(self.evidence)}


def cc_filter(
    C: Clutter,
    l_max: int | None = None,
    power_bound: int = DEFAULT_NTF_BOUND,
    depth: int | None = None,
) -> FilterResult:
    """Rule a clutter out as a minimal counterexample to packing => MFMC, or flag it."""
    if C.is_trivial():
        raise ValueError("the filter needs a clutter with at least one nonempty edge")
    packs, failing = has_packing_property(C)
    if not packs:
        return FilterResult(False, "no-packing", {"failing_minor": {"delete": failing[0], "contract": failing[1]}})
    I = edge_ideal(C)
    heights, unmixed = height_and_unmixed(I)
    if unmixed:
        return FilterResult(False, "unmixed", {"heights": heights})
    found = th43_witness_search(I, l_max)
    if found is not None:
        ell, v = found
        return FilterResult(False, "cor43", {"l": ell, "v": str(v)})
    verdict, cert = certify_ntf(I, depth=depth, power_bound=power_bound, l_max=l_max)
    if verdict.holds:
        return FilterResult(False, "ntf-proved", {"certificate": cert.to_dict()})
    if verdict.fails:
        p, s = verdict.witness
        return FilterResult(
            True,
            "not-ntf-refuted-but-packs",
            {"embedded_prime": list(p.vars), "power": s, "alert": "packs but is not NTF"},
        )
    return FilterResult(True, "unresolved", {"power_bound": power_bound})


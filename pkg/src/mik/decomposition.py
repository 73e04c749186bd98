"""Prime structure of monomial ideals.

Irreducible decomposition is the primary route to associated primes; the
witness search in :func:`ass_witness_oracle` is a second, independent route
kept for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .core import (
    Monomial,
    MonomialIdeal,
    _intersect,
    _member,
    _minimal,
    box,
    radical,
)

__all__ = [
    "VarPrime",
    "PrimeSet",
    "IrreducibleComponent",
    "irreducible_decomposition",
    "associated_primes",
    "ass_witness_oracle",
    "is_associated",
    "minimal_primes",
    "embedded_primes",
    "symbolic_power",
    "alexander_dual",
    "height_and_unmixed",
    "beta1",
    "localize",
]


@dataclass(frozen=True, order=False)
class VarPrime:
    """The prime ideal generated by the variables ``x_i, i in vars``."""

    ambient: int
    vars: tuple

    def __post_init__(self):
        vs = tuple(sorted(set(self.vars)))
        if not vs:
            raise ValueError("a monomial prime needs at least one variable")
        if vs[0] < 1 or vs[-1] > self.ambient:
            raise IndexError(f"prime variables {vs} out of range 1..{self.ambient}")
        object.__setattr__(self, "vars", vs)

    @property
    def height(self) -> int:
        return len(self.vars)

    def sort_key(self) -> tuple:
        return (len(self.vars), self.vars)

    def __lt__(self, other: "VarPrime") -> bool:
        return self.sort_key() < other.sort_key()

    def __contains__(self, i: int) -> bool:
        return i in self.vars

    def issubset(self, other: "VarPrime") -> bool:
        return set(self.vars) <= set(other.vars)

    def without(self, i: int) -> "VarPrime | None":
        """The prime with ``x_i`` removed, or None when nothing is left."""
        rest = tuple(v for v in self.vars if v != i)
        return VarPrime(self.ambient, rest) if rest else None

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.variables(self.ambient, self.vars)

    def power(self, k: int) -> MonomialIdeal:
        return _prime_power(self.ambient, self.vars, k)

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i}" for i in self.vars) + ")"


@lru_cache(maxsize=4096)
def _prime_power(ambient: int, vs: tuple, k: int) -> MonomialIdeal:
    gens = []
    for combo in _compositions(len(vs), k):
        e = [0] * ambient
        for v, c in zip(vs, combo):
            e[v - 1] = c
        gens.append(tuple(e))
    return MonomialIdeal._canonical(ambient, _minimal(gens))


def _compositions(parts: int, total: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(parts - 1, total - first):
            yield (first,) + rest


class PrimeSet(tuple):
    """Duplicate-free primes sorted by height, then by variable set."""

    __slots__ = ()

    def __new__(cls, primes: Iterable[VarPrime] = ()):
        return tuple.__new__(cls, sorted(set(primes), key=VarPrime.sort_key))

    def minimal(self) -> "PrimeSet":
        return PrimeSet(
            p for p in self if not any(q != p and q.issubset(p) for q in self)
        )

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self) + "}"


@dataclass(frozen=True)
class IrreducibleComponent:
    """The irreducible ideal ``(x_i^a : (i, a) in powers)``."""

    ambient: int
    powers: tuple

    def __post_init__(self):
        pw = tuple(sorted(dict(self.powers).items()))
        if len(pw) != len(self.powers):
            raise ValueError("at most one entry per variable")
        if not pw:
            raise ValueError("an irreducible component needs at least one entry")
        for i, a in pw:
            if not 1 <= i <= self.ambient or a < 1:
                raise ValueError(f"bad entry x{i}^{a}")
        object.__setattr__(self, "powers", pw)

    @classmethod
    def _from_vector(cls, vec: tuple) -> "IrreducibleComponent":
        return cls(len(vec), tuple((i + 1, a) for i, a in enumerate(vec) if a))

    def issubset(self, other: "IrreducibleComponent") -> bool:
        theirs = dict(other.powers)
        return all(i in theirs and theirs[i] <= a for i, a in self.powers)

    def radical(self) -> VarPrime:
        return VarPrime(self.ambient, tuple(i for i, _ in self.powers))

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ambient, [Monomial.var(self.ambient, i, a) for i, a in self.powers])

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in self.powers) + ")"


def _require_proper(J: MonomialIdeal) -> None:
    if J.is_zero():
        raise ValueError("the zero ideal has no decomposition here")
    if J.is_unit():
        raise ValueError("the unit ideal has no associated primes")


def _comp_le(c1: tuple, c2: tuple) -> bool:
    # component vectors: entry 0 means the variable is absent
    for a, b in zip(c1, c2):
        if a and (not b or b > a):
            return False
    return True


def _prune(comps) -> frozenset:
    comps = list(set(comps))
    keep = []
    for c in comps:
        if not any(d != c and _comp_le(d, c) for d in comps):
            keep.append(c)
    return frozenset(keep)


@lru_cache(maxsize=1 << 16)
def _decompose(gens: tuple) -> frozenset:
    n = len(gens[0])
    for idx, g in enumerate(gens):
        nz = [i for i in range(n) if g[i]]
        if len(nz) < 2:
            continue
        i = max(nz, key=lambda j: (g[j], -j))
        pure = tuple(g[i] if j == i else 0 for j in range(n))
        rest = g[:i] + (0,) + g[i + 1:]
        others = gens[:idx] + gens[idx + 1:]
        left = _decompose(_minimal(others + (pure,)))
        right = _decompose(_minimal(others + (rest,)))
        return _prune(left | right)
    comp = [0] * n
    for g in gens:
        for j in range(n):
            if g[j]:
                comp[j] = g[j]
    return frozenset([tuple(comp)])


def irreducible_decomposition(J: MonomialIdeal) -> tuple:
    """Irredundant irreducible components whose intersection is ``J``."""
    _require_proper(J)
    comps = _decompose(J.gens)
    return tuple(
        sorted(
            (IrreducibleComponent._from_vector(c) for c in comps),
            key=lambda c: (len(c.powers), c.powers),
        )
    )


def associated_primes(J: MonomialIdeal) -> PrimeSet:
    _require_proper(J)
    return PrimeSet(c.radical() for c in irreducible_decomposition(J))


def localize(J: MonomialIdeal, keep: Iterable[int]) -> MonomialIdeal:
    """Set every variable outside ``keep`` to 1 and re-minimalize."""
    keep = set(keep)
    mask = tuple(1 if i + 1 in keep else 0 for i in range(J.ambient))
    return MonomialIdeal._canonical(
        J.ambient, _minimal(tuple(e if m else 0 for e, m in zip(g, mask)) for g in J.gens)
    )


def _has_socle_witness(Js: MonomialIdeal, subset: tuple) -> bool:
    if Js.is_unit() or Js.is_zero():
        return False
    gens = Js.gens
    lcm = tuple(map(max, *gens)) if len(gens) > 1 else tuple(gens[0])
    idx = [i - 1 for i in subset]
    if any(lcm[i] == 0 for i in idx):
        return False
    bound = [lcm[i] if (i + 1) in subset else 0 for i in range(Js.ambient)]
    for v in box(bound):
        if _member(gens, v):
            continue
        ok = True
        for i in idx:
            w = v[:i] + (v[i] + 1,) + v[i + 1:]
            if not _member(gens, w):
                ok = False
                break
        if ok:
            return True
    return False


def ass_witness_oracle(J: MonomialIdeal) -> PrimeSet:
    """Associated primes by direct socle-witness search over every variable subset."""
    _require_proper(J)
    n = J.ambient
    found = []
    for size in range(1, n + 1):
        for subset in combinations(range(1, n + 1), size):
            if _has_socle_witness(localize(J, subset), subset):
                found.append(VarPrime(n, subset))
    return PrimeSet(found)


def is_associated(p: VarPrime, J: MonomialIdeal) -> bool:
    """Whether ``p`` is in Ass(R/J), via the decomposition of J localized at p."""
    _require_proper(J)
    Jp = localize(J, p.vars)
    if Jp.is_unit():
        return False
    return any(c.radical() == p for c in irreducible_decomposition(Jp))


def minimal_primes(I: MonomialIdeal) -> PrimeSet:
    _require_proper(I)
    return associated_primes(radical(I)).minimal()


def embedded_primes(J: MonomialIdeal) -> PrimeSet:
    ass = associated_primes(J)
    mins = ass.minimal()
    return PrimeSet(p for p in ass if p not in mins)


def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.is_squarefree():
        raise ValueError(f"expected a square-free ideal, got ({I})")


@lru_cache(maxsize=4096)
def _symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    result = None
    for p in minimal_primes(I):
        pk = p.power(k).gens
        result = pk if result is None else _intersect(result, pk)
    return MonomialIdeal._canonical(I.ambient, result)


def symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^(k)``: the intersection of ``p^k`` over the minimal primes of square-free ``I``."""
    _require_squarefree(I)
    _require_proper(I)
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"symbolic power needs k >= 1, got {k!r}")
    return _symbolic_power(I, k)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Cover ideal: generated by the products of variables over each minimal prime."""
    _require_squarefree(I)
    _require_proper(I)
    return MonomialIdeal.from_supports(I.ambient, (p.vars for p in minimal_primes(I)))


def height_and_unmixed(I: MonomialIdeal) -> tuple:
    heights = tuple(sorted(p.height for p in minimal_primes(I)))
    return heights, len(set(heights)) == 1


def beta1(I: MonomialIdeal) -> tuple:
    """Largest set of pairwise coprime generators, as ``(size, witness)``."""
    _require_squarefree(I)
    _require_proper(I)
    gens = I.gens
    masks = [sum(1 << i for i, e in enumerate(g) if e) for g in gens]
    best: list = []

    def grow(chosen: list, used: int, start: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + (len(gens) - start) <= len(best):
            return
        for j in range(start, len(gens)):
            if not masks[j] & used:
                chosen.append(j)
                grow(chosen, used | masks[j], j + 1)
                chosen.pop()

    grow([], 0, 0)
    return len(best), tuple(gens[j] for j in best)


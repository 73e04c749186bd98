"""Exact monomial and monomial-ideal arithmetic.

Monomials are exponent vectors over a fixed number of variables ``x1..xn``.
Ideals are stored by their minimal generating set in canonical order
(total degree, then lexicographic on exponent vectors), so two ideals are
equal exactly when their generator tuples are equal.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as _cartesian
from operator import add, le, sub
from typing import Iterable, Sequence

__all__ = [
    "AmbientMismatchError",
    "Monomial",
    "MonomialIdeal",
    "monomial_divides",
    "monomial_lcm_gcd",
    "minimalize",
    "membership",
    "ideal_sum",
    "ideal_product",
    "ideal_power",
    "ideal_intersect",
    "colon",
    "ideal_equals",
    "deletion",
    "contraction",
    "strip_common_factor",
    "weighted_degree",
    "radical",
    "support",
]


class AmbientMismatchError(ValueError):
    """Raised when two objects live in polynomial rings of different size."""


def _check_same(a: int, b: int) -> None:
    if a != b:
        raise AmbientMismatchError(f"ambient mismatch: {a} vs {b} variables")


class Monomial(tuple):
    """Exponent vector ``(a1, ..., an)`` standing for ``x1^a1 * ... * xn^an``."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(exponents)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {e!r}")
        return tuple.__new__(cls, exps)

    @classmethod
    def _raw(cls, exps: tuple) -> "Monomial":
        return tuple.__new__(cls, exps)

    @classmethod
    def one(cls, ambient: int) -> "Monomial":
        return cls._raw((0,) * ambient)

    @classmethod
    def var(cls, ambient: int, i: int, power: int = 1) -> "Monomial":
        """The pure power ``x_i^power`` (1-based index)."""
        if not 1 <= i <= ambient:
            raise IndexError(f"variable x{i} out of range 1..{ambient}")
        exps = [0] * ambient
        exps[i - 1] = power
        return cls(exps)

    @classmethod
    def from_support(cls, ambient: int, variables: Iterable[int]) -> "Monomial":
        exps = [0] * ambient
        for i in variables:
            if not 1 <= i <= ambient:
                raise IndexError(f"variable x{i} out of range 1..{ambient}")
            exps[i - 1] = 1
        return cls._raw(tuple(exps))

    @property
    def ambient(self) -> int:
        return len(self)

    @property
    def exponents(self) -> tuple:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def support(self) -> frozenset:
        """1-based indices of the variables dividing this monomial."""
        return frozenset(i + 1 for i, e in enumerate(self) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self)

    def is_one(self) -> bool:
        return not any(self)

    def divides(self, other: "Monomial") -> bool:
        return monomial_divides(self, other)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            _check_same(len(self), len(other))
            return Monomial._raw(tuple(map(add, self, other)))
        return NotImplemented

    def __pow__(self, k: int) -> "Monomial":
        return Monomial._raw(tuple(e * k for e in self))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not monomial_divides(other, self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial._raw(tuple(map(sub, self, other)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return monomial_lcm_gcd(self, other)[0]

    def gcd(self, other: "Monomial") -> "Monomial":
        return monomial_lcm_gcd(self, other)[1]

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r}, n={len(self)})"

    # tuple ordering would leak into comparisons between monomials; keep it
    # explicit through the canonical key instead
    def sort_key(self) -> tuple:
        return (sum(self), tuple(self))


def monomial_divides(a: Sequence[int], b: Sequence[int]) -> bool:
    _check_same(len(a), len(b))
    return all(map(le, a, b))


def monomial_lcm_gcd(a: Sequence[int], b: Sequence[int]) -> tuple:
    _check_same(len(a), len(b))
    return (Monomial._raw(tuple(map(max, a, b))), Monomial._raw(tuple(map(min, a, b))))


# ---------------------------------------------------------------------------
# raw kernels on plain exponent tuples; callers guarantee equal lengths


def _mask(t: tuple) -> int:
    m = 0
    for i, e in enumerate(t):
        if e:
            m |= 1 << i
    return m


def _key(t: tuple) -> tuple:
    return (sum(t), t)


def _minimal(cands) -> tuple:
    """Minimal elements (under divisibility) of a collection of tuples, canonical order."""
    uniq = sorted(set(cands), key=_key)
    if len(uniq) <= 1:
        return tuple(uniq)
    if not any(uniq[0]):
        return (uniq[0],)
    kept: list = []
    kept_masks: list = []
    for c in uniq:
        cm = _mask(c)
        for k, km in zip(kept, kept_masks):
            if not (km & ~cm) and all(map(le, k, c)):
                break
        else:
            kept.append(c)
            kept_masks.append(cm)
    return tuple(kept)


def _member(gens: tuple, v: tuple) -> bool:
    for g in gens:
        if all(map(le, g, v)):
            return True
    return False


def _colon_mono(gens: tuple, v: tuple) -> tuple:
    return _minimal(tuple(x - y if x > y else 0 for x, y in zip(g, v)) for g in gens)


def _intersect(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    a_in = [g for g in a if _member(b, g)]
    b_in = [g for g in b if _member(a, g)]
    if len(a_in) == len(a):
        return a
    if len(b_in) == len(b):
        return b
    sa = set(a_in)
    sb = set(b_in)
    ra = [g for g in a if g not in sa]
    rb = [g for g in b if g not in sb]
    cands = set(a_in)
    cands.update(b_in)
    for x in ra:
        for y in rb:
            cands.add(tuple(map(max, x, y)))
    return _minimal(cands)


def _product(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    return _minimal(tuple(map(add, x, y)) for x in a for y in b)


# ---------------------------------------------------------------------------


class MonomialIdeal:
    """A monomial ideal given by its minimal generators in canonical order.

    The empty generator tuple is the zero ideal; ``(1)`` is the unit ideal.
    Instances are immutable and hashable.
    """

    __slots__ = ("ambient", "gens", "_hash")

    def __init__(self, ambient: int, generators: Iterable = ()):
        if not isinstance(ambient, int) or ambient < 1:
            raise ValueError(f"ambient must be a positive integer, got {ambient!r}")
        raw = []
        for g in generators:
            m = g if isinstance(g, Monomial) else Monomial(g)
            _check_same(ambient, len(m))
            raw.append(tuple(m))
        self._set(ambient, _minimal(raw))

    def _set(self, ambient: int, gens: tuple) -> None:
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "gens", tuple(Monomial._raw(g) for g in gens))
        object.__setattr__(self, "_hash", hash((ambient, self.gens)))

    @classmethod
    def _canonical(cls, ambient: int, gens: tuple) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        obj._set(ambient, gens)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def zero(cls, ambient: int) -> "MonomialIdeal":
        return cls._canonical(ambient, ())

    @classmethod
    def unit(cls, ambient: int) -> "MonomialIdeal":
        return cls._canonical(ambient, ((0,) * ambient,))

    @classmethod
    def from_supports(cls, ambient: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        """Square-free ideal from 1-based variable sets, e.g. ``[[1, 2], [2, 3]]``."""
        return cls(ambient, [Monomial.from_support(ambient, s) for s in supports])

    @classmethod
    def variables(cls, ambient: int, indices: Iterable[int]) -> "MonomialIdeal":
        return cls(ambient, [Monomial.var(ambient, i) for i in indices])

    @property
    def generators(self) -> tuple:
        return self.gens

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def support(self) -> frozenset:
        return support(self)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, v) -> bool:
        return membership(self, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ambient == other.ambient and self.gens == other.gens

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return ideal_product(self, MonomialIdeal._canonical(self.ambient, (tuple(other),)))
        return ideal_product(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MonomialIdeal":
        return ideal_power(self, k)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_intersect(self, other)

    def __truediv__(self, by) -> "MonomialIdeal":
        return colon(self, by)

    def issubset(self, other: "MonomialIdeal") -> bool:
        _check_same(self.ambient, other.ambient)
        return all(_member(other.gens, g) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.issubset(other)

    def __str__(self) -> str:
        if not self.gens:
            return "0"
        return ", ".join(str(g) for g in self.gens)

    def __repr__(self) -> str:
        return f"MonomialIdeal({str(self)!r}, n={self.ambient})"


def minimalize(ms: Iterable, ambient: int | None = None) -> MonomialIdeal:
    """Canonical ideal generated by ``ms``; ``ambient`` is needed only for empty input."""
    ms = [tuple(m) for m in ms]
    if not ms:
        if ambient is None:
            raise ValueError("ambient is required to build the zero ideal from no monomials")
        return MonomialIdeal.zero(ambient)
    n = len(ms[0])
    if ambient is not None:
        _check_same(ambient, n)
    for m in ms:
        _check_same(n, len(m))
    return MonomialIdeal(n, ms)


def membership(I: MonomialIdeal, v: Sequence[int]) -> bool:
    _check_same(I.ambient, len(v))
    return _member(I.gens, tuple(v))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I.ambient, J.ambient)
    return MonomialIdeal._canonical(I.ambient, _minimal(I.gens + J.gens))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I.ambient, J.ambient)
    return MonomialIdeal._canonical(I.ambient, _product(I.gens, J.gens))


@lru_cache(maxsize=8192)
def _power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k == 0:
        return MonomialIdeal.unit(I.ambient)
    if k == 1:
        return I
    return MonomialIdeal._canonical(I.ambient, _product(_power(I, k - 1).gens, I.gens))


def ideal_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"power must be a nonnegative integer, got {k!r}")
    return _power(I, k)


def ideal_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I.ambient, J.ambient)
    return MonomialIdeal._canonical(I.ambient, _intersect(I.gens, J.gens))


def colon(I: MonomialIdeal, by) -> MonomialIdeal:
    """``(I : by)`` for a monomial or a nonzero monomial ideal ``by``."""
    if isinstance(by, MonomialIdeal):
        _check_same(I.ambient, by.ambient)
        if by.is_zero():
            raise ValueError("colon by the zero ideal is undefined")
        result = None
        for v in by.gens:
            part = _colon_mono(I.gens, v)
            result = part if result is None else _intersect(result, part)
            if not result:
                break
        return MonomialIdeal._canonical(I.ambient, result)
    v = tuple(by)
    _check_same(I.ambient, len(v))
    return MonomialIdeal._canonical(I.ambient, _colon_mono(I.gens, v))


def ideal_equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check_same(I.ambient, J.ambient)
    return I.gens == J.gens


def _check_index(I: MonomialIdeal, i: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= I.ambient:
        raise IndexError(f"variable x{i} out of range 1..{I.ambient}")


def deletion(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Set ``x_i = 0``: drop every generator divisible by ``x_i``."""
    _check_index(I, i)
    return MonomialIdeal._canonical(I.ambient, tuple(g for g in I.gens if not g[i - 1]))


def contraction(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Set ``x_i = 1`` in every generator and re-minimalize."""
    _check_index(I, i)
    j = i - 1
    return MonomialIdeal._canonical(
        I.ambient, _minimal(g[:j] + (0,) + g[j + 1:] for g in I.gens)
    )


def strip_common_factor(I: MonomialIdeal) -> tuple:
    """Return ``(h, I')`` with ``h`` the gcd of the generators and ``I = h * I'``."""
    if I.is_zero():
        raise ValueError("the zero ideal has no common factor")
    h = tuple(map(min, *I.gens)) if len(I.gens) > 1 else tuple(I.gens[0])
    rest = tuple(tuple(map(sub, g, h)) for g in I.gens)
    # dividing every generator by the same monomial preserves minimality but
    # not necessarily the lexicographic tie order
    return Monomial._raw(h), MonomialIdeal._canonical(I.ambient, _minimal(rest))


def weighted_degree(M: Monomial, u: Monomial) -> int:
    """Sum of the exponents of ``u`` over the variables dividing square-free ``M``."""
    _check_same(len(M), len(u))
    if any(e > 1 for e in M):
        raise ValueError(f"{M} is not square-free")
    return sum(e for m, e in zip(M, u) if m)


def support(I: MonomialIdeal) -> frozenset:
    out = set()
    for g in I.gens:
        out.update(i + 1 for i, e in enumerate(g) if e)
    return frozenset(out)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._canonical(
        I.ambient, _minimal(tuple(1 if e else 0 for e in g) for g in I.gens)
    )


def box(bound: Sequence[int]):
    """All exponent vectors componentwise below-or-equal to ``bound``."""
    return _cartesian(*(range(b + 1) for b in bound))

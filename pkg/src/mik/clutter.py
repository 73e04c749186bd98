"""Clutters (simple hypergraphs) and their edge ideals."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .core import MonomialIdeal, _minimal

__all__ = [
    "Clutter",
    "MinorTooLargeError",
    "edge_ideal",
    "clutter_of",
    "minor",
    "minor_ideal",
    "cover_number",
    "matching_number",
    "has_packing_property",
    "cone",
    "is_bipartite",
    "bipartition",
    "MAX_PACKING_VERTICES",
]

MAX_PACKING_VERTICES = 14


class MinorTooLargeError(ValueError):
    pass


def _edge_key(e: tuple) -> tuple:
    return (len(e), e)


@dataclass(frozen=True)
class Clutter:
    """Antichain of edges over the vertex set ``{1..vertices}``.

    Edges are sorted tuples of vertices, ordered by size and then
    lexicographically. The single empty edge is allowed only on its own and
    marks the trivial clutter produced by contracting an edge away.
    """

    vertices: int
    edges: tuple

    def __post_init__(self):
        if not isinstance(self.vertices, int) or self.vertices < 1:
            raise ValueError(f"vertex count must be positive, got {self.vertices!r}")
        edges = sorted({tuple(sorted(set(e))) for e in self.edges}, key=_edge_key)
        for e in edges:
            if e and (e[0] < 1 or e[-1] > self.vertices):
                raise ValueError(f"edge {e} outside vertex set 1..{self.vertices}")
        if () in edges and len(edges) > 1:
            raise ValueError("the empty edge is contained in every other edge")
        sets = [frozenset(e) for e in edges]
        for a, b in combinations(sets, 2):
            if a <= b or b <= a:
                raise ValueError(f"not a clutter: {sorted(a)} and {sorted(b)} are nested")
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def parse(cls, text: str, vertices: int | None = None) -> "Clutter":
        """Parse ``"{1,2},{2,3}"``; non-minimal edges are dropped."""
        from .textio import parse_clutter

        return parse_clutter(text, vertices)

    def is_trivial(self) -> bool:
        return not self.edges or self.edges == ((),)

    def is_uniform(self, d: int) -> bool:
        return all(len(e) == d for e in self.edges)

    def __str__(self) -> str:
        return ",".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)


def edge_ideal(C: Clutter) -> MonomialIdeal:
    return MonomialIdeal.from_supports(C.vertices, C.edges)


def clutter_of(I: MonomialIdeal) -> Clutter:
    if not I.is_squarefree():
        raise ValueError(f"({I}) is not square-free")
    if I.is_zero() or I.is_unit():
        raise ValueError("clutters correspond to nonzero proper ideals")
    return Clutter(I.ambient, tuple(tuple(sorted(g.support())) for g in I.gens))


def _ideal_or_trivial(n: int, gens: tuple) -> Clutter:
    if not gens:
        return Clutter(n, ())
    if not any(gens[0]):
        return Clutter(n, ((),))
    return Clutter(n, tuple(tuple(i + 1 for i, e in enumerate(g) if e) for g in gens))


def minor_ideal(I: MonomialIdeal, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> MonomialIdeal:
    """Delete (``x_i = 0``) and contract (``x_j = 1``) sets of variables at once."""
    D, T = set(delete), set(contract)
    if D & T:
        raise ValueError(f"delete and contract sets overlap: {sorted(D & T)}")
    n = I.ambient
    for v in D | T:
        if not 1 <= v <= n:
            raise IndexError(f"vertex {v} out of range 1..{n}")
    dz = [i - 1 for i in D]
    tz = {i - 1 for i in T}
    kept = (g for g in I.gens if not any(g[i] for i in dz))
    return MonomialIdeal._canonical(
        n, _minimal(tuple(0 if i in tz else e for i, e in enumerate(g)) for g in kept)
    )


def minor(C: Clutter, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> Clutter:
    J = minor_ideal(edge_ideal(C), delete, contract)
    return _ideal_or_trivial(C.vertices, J.gens)


def _require_edges(C: Clutter) -> None:
    if C.is_trivial():
        raise ValueError("operation needs a clutter with at least one nonempty edge")


@lru_cache(maxsize=1 << 15)
def _cover_number(n: int, masks: tuple) -> int:
    for size in range(0, n + 1):
        for combo in combinations(range(n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            if all(m & s for m in masks):
                return size
    raise AssertionError("unreachable: the full vertex set covers every nonempty edge")


@lru_cache(maxsize=1 << 15)
def _matching_number(masks: tuple) -> int:
    best = 0

    def grow(count: int, used: int, start: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + len(masks) - start <= best:
            return
        for j in range(start, len(masks)):
            if not masks[j] & used:
                grow(count + 1, used | masks[j], j + 1)

    grow(0, 0, 0)
    return best


def _masks(C: Clutter) -> tuple:
    return tuple(sum(1 << (v - 1) for v in e) for e in C.edges)


def cover_number(C: Clutter) -> int:
    """alpha_0: size of a smallest vertex set meeting every edge."""
    _require_edges(C)
    return _cover_number(C.vertices, _masks(C))


def matching_number(C: Clutter) -> int:
    """beta_1: largest number of pairwise disjoint edges."""
    _require_edges(C)
    return _matching_number(_masks(C))


def has_packing_property(C: Clutter) -> tuple:
    """``(packs, failing_minor)``; every nontrivial minor must satisfy alpha_0 = beta_1.

    Minors with no edges, or whose only edge is empty, are skipped.
    ``failing_minor`` is ``(delete, contract)`` as sorted tuples.
    """
    _require_edges(C)
    if C.vertices > MAX_PACKING_VERTICES:
        raise MinorTooLargeError(
            f"minor enumeration is capped at {MAX_PACKING_VERTICES} vertices, got {C.vertices}"
        )
    I = edge_ideal(C)
    live = sorted(I.support())
    n = C.vertices
    seen = set()
    # fewest touched vertices first, so the reported witness is as small as possible
    for touched in range(len(live) + 1):
        for chosen in combinations(live, touched):
            for dsize in range(touched + 1):
                for D in combinations(chosen, dsize):
                    T = tuple(v for v in chosen if v not in D)
                    J = minor_ideal(I, D, T)
                    if J.is_zero() or J.is_unit() or J.gens in seen:
                        continue
                    seen.add(J.gens)
                    masks = tuple(sum(1 << i for i, e in enumerate(g) if e) for g in J.gens)
                    if _cover_number(n, masks) != _matching_number(masks):
                        return False, (tuple(D), T)
    return True, None


def cone(C: Clutter, new_vertex: int | None = None) -> Clutter:
    """Add a fresh vertex to every edge; the vertex set grows to include it."""
    x = C.vertices + 1 if new_vertex is None else new_vertex
    if x <= C.vertices:
        raise ValueError(f"cone vertex {x} must lie outside 1..{C.vertices}")
    return Clutter(x, tuple(e + (x,) for e in C.edges))


def bipartition(C: Clutter):
    """Two-colouring of a graph as ``(side_a, side_b)``, or None for odd cycles."""
    if not C.is_uniform(2):
        raise ValueError("bipartiteness is defined here for 2-uniform clutters only")
    adj: dict = {}
    for a, b in C.edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    colour: dict = {}
    for start in sorted(adj):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    side_a = tuple(sorted(v for v, c in colour.items() if c == 0))
    side_b = tuple(sorted(v for v, c in colour.items() if c == 1))
    return side_a, side_b


def is_bipartite(C: Clutter) -> bool:
    return bipartition(C) is not None

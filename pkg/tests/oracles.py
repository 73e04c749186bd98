"""Brute-force reference implementations used only by the tests.

Nothing here calls into the package's kernels: membership is divisibility
written out by hand, and ideals are handled as plain lists of exponent tuples.
"""

from __future__ import annotations

from itertools import combinations, product


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def member(gens, v) -> bool:
    return any(divides(g, v) for g in gens)


def box(n: int, top: int):
    return product(range(top + 1), repeat=n)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def member_product(A, B, v) -> bool:
    """v in A*B iff some a in A, b in B have a + b dividing v."""
    return any(divides(add(a, b), v) for a in A for b in B)


def member_power(A, k: int, v) -> bool:
    if k == 0:
        return True
    return any(divides(a, v) and member_power(A, k - 1, tuple(x - y for x, y in zip(v, a))) for a in A)


def member_colon(A, B, v) -> bool:
    return all(member(A, add(v, b)) for b in B)


def minimal_covers(n: int, supports):
    """Inclusion-minimal vertex covers, by exhaustive subset search."""
    edges = [set(s) for s in supports]
    covers = []
    for k in range(n + 1):
        for S in combinations(range(1, n + 1), k):
            s = set(S)
            if all(e & s for e in edges) and not any(c <= s for c in covers):
                covers.append(s)
    return sorted((len(c), tuple(sorted(c))) for c in covers)


def antichain_count(n: int) -> int:
    """Antichains of nonempty subsets of an n-set with at least one member, by filtering all families."""
    subs = [frozenset(c) for k in range(1, n + 1) for c in combinations(range(n), k)]
    count = 0
    for mask in range(1, 1 << len(subs)):
        fam = [subs[i] for i in range(len(subs)) if mask >> i & 1]
        if all(not (a <= b or b <= a) for a, b in combinations(fam, 2)):
            count += 1
    return count


def matching_number(supports) -> int:
    edges = [set(s) for s in supports]
    for k in range(len(edges), 0, -1):
        for combo in combinations(edges, k):
            if all(not (a & b) for a, b in combinations(combo, 2)):
                return k
    return 0

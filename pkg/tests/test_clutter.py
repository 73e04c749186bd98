from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from mik.clutter import (
    Clutter,
    MinorTooLargeError,
    clutter_of,
    cone,
    cover_number,
    edge_ideal,
    has_packing_property,
    is_bipartite,
    matching_number,
    minor,
)
from mik.core import MonomialIdeal
from mik.textio import parse_ideal

TRIANGLE = Clutter(3, ((1, 2), (2, 3), (1, 3)))
C4 = Clutter(4, ((1, 2), (2, 3), (3, 4), (1, 4)))
C8_SUPPORTS = [[(i + k) % 8 + 1 for k in range(4)] for i in range(8)]


class TestClutter:
    def test_canonical_edges(self):
        assert Clutter(3, ((2, 3), (2, 1))).edges == ((1, 2), (2, 3))
        assert str(Clutter.parse("{2,3},{1}")) == "{1},{2,3}"

    def test_rejects_nested_edges(self):
        with pytest.raises(ValueError):
            Clutter(3, ((1, 2), (1, 2, 3)))
        with pytest.raises(ValueError):
            Clutter(2, ((1, 3),))

    def test_parse_drops_non_minimal(self):
        assert Clutter.parse("{1,2},{1,2,3}") == Clutter(3, ((1, 2),))

    def test_edge_ideal_round_trip(self):
        assert edge_ideal(Clutter.parse("{1,2},{2,3}")) == parse_ideal("x1*x2, x2*x3")
        assert edge_ideal(Clutter(1, ((1,),))) == parse_ideal("x1")
        L = MonomialIdeal.from_supports(8, C8_SUPPORTS)
        C = clutter_of(L)
        assert len(C.edges) == 8 and all(len(e) == 4 for e in C.edges)
        assert edge_ideal(C) == L
        with pytest.raises(ValueError):
            clutter_of(parse_ideal("x1^2"))

    def test_minors(self):
        assert minor(TRIANGLE, delete=[3]) == Clutter(3, ((1, 2),))
        assert minor(TRIANGLE, contract=[3]) == Clutter(3, ((1,), (2,)))
        assert minor(Clutter(2, ((1, 2),)), delete=[1]).edges == ()
        assert minor(Clutter(2, ((1,),)), contract=[1]).is_trivial()
        with pytest.raises(ValueError):
            minor(TRIANGLE, delete=[1], contract=[1])

    def test_numbers(self):
        assert cover_number(TRIANGLE) == 2 and matching_number(TRIANGLE) == 1
        assert cover_number(Clutter(3, ((1, 2, 3),))) == 1
        assert cover_number(C4) == 2 and matching_number(C4) == 2
        assert matching_number(Clutter(3, ((1,), (2,), (3,)))) == 3

    def test_packing(self):
        assert has_packing_property(TRIANGLE) == (False, ((), ()))
        assert has_packing_property(C4) == (True, None)
        assert has_packing_property(Clutter(3, ((1, 2, 3),))) == (True, None)
        with pytest.raises(MinorTooLargeError):
            has_packing_property(Clutter(15, ((1, 15),)))

    def test_cone(self):
        assert cone(Clutter(2, ((1, 2),))) == Clutter(3, ((1, 2, 3),))
        c = cone(TRIANGLE, 4)
        assert len(c.edges) == 3 and all(4 in e and len(e) == 3 for e in c.edges)
        with pytest.raises(ValueError):
            cone(TRIANGLE, 2)

    def test_bipartite(self):
        assert is_bipartite(C4)
        assert not is_bipartite(TRIANGLE)
        assert is_bipartite(Clutter(5, ((1, 2), (1, 3), (3, 4), (3, 5))))
        with pytest.raises(ValueError):
            is_bipartite(Clutter(3, ((1, 2, 3),)))


@st.composite
def clutters(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    raw = draw(st.lists(st.sets(st.integers(1, n), min_size=1, max_size=n), min_size=1, max_size=5))
    sets = {frozenset(s) for s in raw}
    edges = [tuple(sorted(s)) for s in sets if not any(t < s for t in sets)]
    return Clutter(n, tuple(edges))


@given(clutters())
def test_cover_number_matches_brute_force(C):
    assert (cover_number(C), True) == (min(len(c) for _, c in oracles.minimal_covers(C.vertices, C.edges)), True)


@given(clutters())
def test_matching_number_matches_brute_force(C):
    assert matching_number(C) == oracles.matching_number(C.edges)


@given(clutters(max_n=5))
def test_matching_never_exceeds_cover(C):
    assert matching_number(C) <= cover_number(C)


@given(clutters(max_n=5))
def test_packing_passes_to_minors(C):
    packs, _ = has_packing_property(C)
    if packs:
        for v in range(1, C.vertices + 1):
            for M in (minor(C, delete=[v]), minor(C, contract=[v])):
                if not M.is_trivial():
                    assert has_packing_property(M)[0]

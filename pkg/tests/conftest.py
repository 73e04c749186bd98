from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from mik.core import MonomialIdeal  # noqa: E402

settings.register_profile(
    "mik", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("mik")


@st.composite
def ideals(draw, n=None, max_exp=3, max_gens=4, min_gens=1):
    n = draw(st.integers(1, 4)) if n is None else n
    gens = draw(
        st.lists(st.tuples(*[st.integers(0, max_exp)] * n), min_size=min_gens, max_size=max_gens)
    )
    return MonomialIdeal(n, gens)


@st.composite
def squarefree_ideals(draw, n=None, max_gens=5):
    I = draw(ideals(n=n, max_exp=1, max_gens=max_gens))
    if I.is_unit():
        I = MonomialIdeal.variables(I.ambient, [1])
    return I


@st.composite
def ideal_pairs(draw, max_exp=3):
    n = draw(st.integers(1, 4))
    return draw(ideals(n=n, max_exp=max_exp)), draw(ideals(n=n, max_exp=max_exp))


@st.composite
def ideal_triples(draw, max_exp=2):
    n = draw(st.integers(1, 3))
    return tuple(draw(ideals(n=n, max_exp=max_exp, max_gens=3)) for _ in range(3))


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)

"""Text grammar for ideals and clutters.

Ideals: generators separated by commas; a generator is ``x<k>`` factors
joined by ``*`` with an optional ``^<exp>``, or the literal ``1``. An empty
string or ``0`` is the zero ideal. Whitespace is ignored.

Clutters: ``{1,2},{2,3}``.
"""

from __future__ import annotations

import re

from .core import Monomial, MonomialIdeal

__all__ = ["ParseError", "parse_ideal", "parse_monomial", "format_ideal", "parse_clutter"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(x)(\d+)|(\^)(\d+)|(\*)|(,)|(1)(?!\d)|(0)(?!\d))")


def _parse_factors(text: str):
    """Yield generators as lists of ``(index, exponent)`` plus unit markers."""
    gens: list = []
    current: list | None = None
    expect_factor = True
    last = None
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r}", pos)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1):
            if not expect_factor:
                raise ParseError("expected '*' or ','", start)
            idx = int(m.group(2))
            if idx < 1:
                raise ParseError("variable indices start at 1", start)
            current = current if current is not None else []
            current.append([idx, 1])
            expect_factor = False
            last = "var"
            pos = m.end()
            continue
        elif m.group(3):
            if last != "var":
                raise ParseError("'^' must follow a variable", start)
            current[-1][1] = int(m.group(4))
        elif m.group(5):
            if expect_factor:
                raise ParseError("'*' must follow a factor", start)
            expect_factor = True
        elif m.group(6):
            if expect_factor or current is None:
                raise ParseError("empty generator", start)
            gens.append(current)
            current = None
            expect_factor = True
        elif m.group(7):
            if not expect_factor:
                raise ParseError("expected '*' or ','", start)
            current = current if current is not None else []
            current.append("unit")
            expect_factor = False
        else:
            if gens or current is not None or text[m.end():].strip():
                raise ParseError("'0' may only appear alone", start)
            return []
        last = None
        pos = m.end()
    if current is None:
        if gens:
            raise ParseError("trailing ','", stripped_end)
        return []
    if expect_factor:
        raise ParseError("dangling '*'", stripped_end)
    gens.append(current)
    return gens


def parse_ideal(text: str, vars: int | None = None) -> MonomialIdeal:
    """Parse an ideal; ``vars`` fixes the ambient, otherwise the largest index is used."""
    gens = _parse_factors(text)
    top = max((f[0] for g in gens for f in g if f != "unit"), default=0)
    if vars is None:
        if top == 0:
            raise ParseError("cannot infer the number of variables; pass vars", 0)
        n = top
    else:
        if top > vars:
            raise ParseError(f"x{top} exceeds the declared {vars} variables", text.find(f"x{top}"))
        n = vars
    monos = []
    for g in gens:
        e = [0] * n
        for f in g:
            if f != "unit":
                e[f[0] - 1] += f[1]
        monos.append(Monomial(e))
    return MonomialIdeal(n, monos)


def parse_monomial(text: str, vars: int) -> Monomial:
    gens = _parse_factors(text)
    if len(gens) != 1:
        raise ParseError("expected exactly one monomial", 0)
    e = [0] * vars
    for f in gens[0]:
        if f != "unit":
            if f[0] > vars:
                raise ParseError(f"x{f[0]} exceeds the declared {vars} variables", 0)
            e[f[0] - 1] += f[1]
    return Monomial(e)


def format_ideal(I: MonomialIdeal) -> str:
    return str(I)


_EDGE = re.compile(r"\s*\{([^{}]*)\}\s*(,|$)")


def parse_clutter(text: str, vertices: int | None = None):
    from .clutter import Clutter

    edges = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _EDGE.match(text, pos)
        if not m:
            raise ParseError("expected '{i,j,...}'", pos)
        body = m.group(1).strip()
        if not body:
            raise ParseError("empty edge", m.start())
        try:
            edge = tuple(int(t) for t in body.split(","))
        except ValueError:
            raise ParseError("edge entries must be integers", m.start()) from None
        if min(edge) < 1:
            raise ParseError("vertices start at 1", m.start())
        edges.append(edge)
        pos = m.end()
    if not edges:
        raise ParseError("a clutter needs at least one edge", 0)
    top = max(max(e) for e in edges)
    if vertices is not None and top > vertices:
        raise ParseError(f"vertex {top} exceeds the declared {vertices} vertices", 0)
    n = vertices or top
    # drop non-minimal edges the same way ideal parsing canonicalizes
    sets = {frozenset(e) for e in edges}
    minimal = [s for s in sets if not any(t < s for t in sets)]
    return Clutter(n, tuple(tuple(sorted(s)) for s in minimal))

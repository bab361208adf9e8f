"""Points of quaternionic projective space HP^1.

A line is stored through its inhomogeneous coordinate: the line of
``(1, q)`` is ``Line(q)`` and the line of ``(0, 1)`` is ``Line.INF``.
The line of ``v`` is the line of ``v * lam`` for every nonzero ``lam``.
"""

from __future__ import annotations

import functools
import json
from typing import Callable, Iterable, Iterator, Sequence

from .exactfield import ONE, FieldElem
from .linalg import MatH, VecH, inner, norm2
from .quaternion import Q_ONE, Q_ZERO, Quat, format_quat, parse_quat


class Line:
    __slots__ = ("q",)

    def __init__(self, q: Quat | None):
        self.q = q

    @property
    def is_inf(self) -> bool:
        return self.q is None

    def vector(self) -> VecH:
        """Canonical representative (first nonzero coordinate 1)."""
        if self.q is None:
            return VecH(Q_ZERO, Q_ONE)
        return VecH(Q_ONE, self.q)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Line) and self.q == other.q

    def __hash__(self) -> int:
        return hash(("line", self.q))

    def __repr__(self) -> str:
        return "Line(inf)" if self.q is None else f"Line({format_quat(self.q)})"

    def to_text(self) -> str:
        return "inf" if self.q is None else format_quat(self.q)

    @classmethod
    def from_text(cls, text: str) -> "Line":
        text = text.strip()
        if text == "inf":
            return INF
        return cls(parse_quat(text))

    def to_json(self) -> dict:
        if self.q is None:
            return {"tag": "inf"}
        return {"tag": "finite", "q": format_quat(self.q)}

    @classmethod
    def from_json(cls, data: dict) -> "Line":
        if data["tag"] == "inf":
            return INF
        return cls(parse_quat(data["q"]))


INF = Line(None)


def line_of(v: VecH) -> Line:
    if v.v1.is_zero():
        if v.v2.is_zero():
            raise ValueError("the zero vector spans no line")
        return INF
    return Line(v.v2 * v.v1.inv())


def angle(l1: Line, l2: Line) -> FieldElem:
    """|<v,w>|^2 / (|v|^2 |w|^2) for representatives v, w."""
    v, w = l1.vector(), l2.vector()
    return inner(v, w).nrd() / (norm2(v) * norm2(w))


def orthocomplement(l: Line) -> Line:
    if l.q is None:
        return Line(Q_ZERO)
    if l.q.is_zero():
        return INF
    # line of (-conj(q), 1)
    return Line((-l.q.conj()).inv())


def act(g: MatH, l: Line) -> Line:
    """g . l, the line of g v for any representative v."""
    (a, b), (c, d) = g.rows
    if l.q is None:
        return line_of(VecH(b, d))
    return line_of(VecH(a + b * l.q, c + d * l.q))


class LineSet:
    """Insertion-ordered, duplicate-free collection of lines; equality ignores order."""

    def __init__(self, lines: Iterable[Line] = ()):
        self._lines: dict[Line, int] = {}
        for l in lines:
            self.add(l)

    def add(self, l: Line) -> bool:
        if l in self._lines:
            return False
        self._lines[l] = len(self._lines)
        return True

    def index(self, l: Line) -> int:
        return self._lines[l]

    def __contains__(self, l: object) -> bool:
        return l in self._lines

    def __iter__(self) -> Iterator[Line]:
        return iter(self._lines)

    def __len__(self) -> int:
        return len(self._lines)

    def __getitem__(self, n: int) -> Line:
        return list(self._lines)[n]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LineSet):
            return self._lines.keys() == other._lines.keys()
        return NotImplemented

    def __repr__(self) -> str:
        return f"LineSet({len(self)} lines)"

    def as_set(self) -> frozenset[Line]:
        return frozenset(self._lines)

    def to_text(self) -> str:
        return "".join(l.to_text() + "\n" for l in self)

    @classmethod
    def from_text(cls, text: str) -> "LineSet":
        return cls(Line.from_text(s) for s in text.splitlines() if s.strip() and not s.startswith("#"))

    def to_json(self) -> str:
        return json.dumps([l.to_json() for l in self], indent=1)

    @classmethod
    def from_json(cls, text: str) -> "LineSet":
        return cls(Line.from_json(d) for d in json.loads(text))


def load_lineset(path: str) -> LineSet:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json"):
        return LineSet.from_json(text)
    return LineSet.from_text(text)


def orbit_under(gens: Sequence[MatH], seed: Line, action: Callable[[MatH, Line], Line] = act) -> LineSet:
    """Orbit of a line under the group generated by ``gens`` (BFS in generator order)."""
    orbit = LineSet([seed])
    frontier = [seed]
    while frontier:
        nxt = []
        for l in frontier:
            for g in gens:
                m = action(g, l)
                if orbit.add(m):
                    nxt.append(m)
        frontier = nxt
    return orbit


def line_orbit(group, seed: Line) -> LineSet:
    """Orbit of ``seed`` under a :class:`~quatrefl.groups.MatGroup`."""
    return orbit_under(group.generators, seed)


def angle_set(lines: Iterable[Line]) -> frozenset[FieldElem]:
    """All angles between distinct lines of the set."""
    lines = list(lines)
    vecs = [l.vector() for l in lines]
    norms = [norm2(v) for v in vecs]
    out = set()
    for a in range(len(lines)):
        for b in range(a + 1, len(lines)):
            out.add(inner(vecs[a], vecs[b]).nrd() / (norms[a] * norms[b]))
    return frozenset(out)


def angle_matrix(lines: Sequence[Line]) -> list[list[FieldElem]]:
    vecs = [l.vector() for l in lines]
    norms = [norm2(v) for v in vecs]
    n = len(vecs)
    out = [[ONE] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            x = inner(vecs[a], vecs[b]).nrd() / (norms[a] * norms[b])
            out[a][b] = out[b][a] = x
    return out


def sorted_fields(xs: Iterable[FieldElem]) -> list[FieldElem]:
    return sorted(xs, key=functools.cmp_to_key(lambda a, b: (a - b).sign()))


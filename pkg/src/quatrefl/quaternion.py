"""Quaternions over F, finite unit groups, and reflection systems.

A reflection system is a set of unit quaternions containing 1 and closed
under ``a o b = a b^-1 a``; it records the antidiagonal reflections
``[[0, b], [b^-1, 0]]`` of a rank-two imprimitive group.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

from .exactfield import ONE, ZERO, FieldElem, FieldLike, format_field, parse_field

DEFAULT_CAP = 256


class CapExceeded(RuntimeError):
    """A closure grew past its cap; the input is infinite or misconfigured."""


class Quat:
    """x1 + xi*i + xj*j + xk*k with parts in F."""

    __slots__ = ("x1", "xi", "xj", "xk", "_hash")

    def __init__(self, x1: FieldLike = 0, xi: FieldLike = 0, xj: FieldLike = 0, xk: FieldLike = 0):
        self.x1 = FieldElem.coerce(x1)
        self.xi = FieldElem.coerce(xi)
        self.xj = FieldElem.coerce(xj)
        self.xk = FieldElem.coerce(xk)
        self._hash = None

    @classmethod
    def _of(cls, a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem) -> "Quat":
        q = cls.__new__(cls)
        q.x1, q.xi, q.xj, q.xk = a, b, c, d
        q._hash = None
        return q

    @property
    def parts(self) -> tuple[FieldElem, FieldElem, FieldElem, FieldElem]:
        return (self.x1, self.xi, self.xj, self.xk)

    def is_zero(self) -> bool:
        return self.x1.is_zero() and self.xi.is_zero() and self.xj.is_zero() and self.xk.is_zero()

    def is_real(self) -> bool:
        return self.xi.is_zero() and self.xj.is_zero() and self.xk.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Quat):
            return self.parts == other.parts
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.is_real() and self.x1 == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.parts)
        return self._hash

    def __neg__(self) -> "Quat":
        return Quat._of(-self.x1, -self.xi, -self.xj, -self.xk)

    def __add__(self, other: "QuatLike") -> "Quat":
        o = qcoerce(other)
        return Quat._of(self.x1 + o.x1, self.xi + o.xi, self.xj + o.xj, self.xk + o.xk)

    __radd__ = __add__

    def __sub__(self, other: "QuatLike") -> "Quat":
        o = qcoerce(other)
        return Quat._of(self.x1 - o.x1, self.xi - o.xi, self.xj - o.xj, self.xk - o.xk)

    def __rsub__(self, other: "QuatLike") -> "Quat":
        return qcoerce(other) - self

    def __mul__(self, other: "QuatLike") -> "Quat":
        if isinstance(other, (int, Fraction, FieldElem)):
            return Quat._of(self.x1 * other, self.xi * other, self.xj * other, self.xk * other)
        if not isinstance(other, Quat):
            return NotImplemented
        return q_mul(self, other)

    def __rmul__(self, other: FieldLike) -> "Quat":
        if isinstance(other, (int, Fraction, FieldElem)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: FieldLike) -> "Quat":
        if isinstance(other, Quat):
            return self * other.inv()
        inv = 1 / Fraction(other) if isinstance(other, (int, Fraction)) else other.inverse()
        return self * inv

    def conj(self) -> "Quat":
        return Quat._of(self.x1, -self.xi, -self.xj, -self.xk)

    def nrd(self) -> FieldElem:
        return self.x1 * self.x1 + self.xi * self.xi + self.xj * self.xj + self.xk * self.xk

    def inv(self) -> "Quat":
        n = self.nrd()
        if n.is_zero():
            raise ZeroDivisionError("inverse of the zero quaternion")
        return self.conj() * n.inverse()

    def __pow__(self, n: int) -> "Quat":
        if n < 0:
            return self.inv() ** (-n)
        result, base = Q_ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def order(self, limit: int = 1000) -> int | None:
        """Multiplicative order, or None if not finite below ``limit``."""
        p = self
        for n in range(1, limit + 1):
            if p == Q_ONE:
                return n
            p = p * self
        return None

    def __str__(self) -> str:
        return format_quat(self)

    def __repr__(self) -> str:
        return f"Quat{format_quat(self)}"


QuatLike = Union[Quat, FieldElem, int, Fraction]


def qcoerce(x: QuatLike) -> Quat:
    if isinstance(x, Quat):
        return x
    return Quat(x)


def q_mul(p: Quat, q: Quat) -> Quat:
    a1, b1, c1, d1 = p.parts
    a2, b2, c2, d2 = q.parts
    z1, zi, zj, zk = a1.is_zero(), b1.is_zero(), c1.is_zero(), d1.is_zero()
    w1, wi, wj, wk = a2.is_zero(), b2.is_zero(), c2.is_zero(), d2.is_zero()

    def acc(terms):
        out = ZERO
        for sgn, x, zx, y, zy in terms:
            if zx or zy:
                continue
            t = x * y
            out = out + t if sgn > 0 else out - t
        return out

    return Quat._of(
        acc(((1, a1, z1, a2, w1), (-1, b1, zi, b2, wi), (-1, c1, zj, c2, wj), (-1, d1, zk, d2, wk))),
        acc(((1, a1, z1, b2, wi), (1, b1, zi, a2, w1), (1, c1, zj, d2, wk), (-1, d1, zk, c2, wj))),
        acc(((1, a1, z1, c2, wj), (-1, b1, zi, d2, wk), (1, c1, zj, a2, w1), (1, d1, zk, b2, wi))),
        acc(((1, a1, z1, d2, wk), (1, b1, zi, c2, wj), (-1, c1, zj, b2, wi), (1, d1, zk, a2, w1))),
    )


def q_conj(q: Quat) -> Quat:
    return q.conj()


def q_inv(q: Quat) -> Quat:
    return q.inv()


def q_nrd(q: Quat) -> FieldElem:
    return q.nrd()


Q_ZERO = Quat()
Q_ONE = Quat(1)
Q_I = Quat(0, 1)
Q_J = Quat(0, 0, 1)
Q_K = Quat(0, 0, 0, 1)

Q8: frozenset[Quat] = frozenset(s * u for s in (1, -1) for u in (Q_ONE, Q_I, Q_J, Q_K))


def circ(a: Quat, b: Quat) -> Quat:
    """a o b = a b^-1 a."""
    return a * b.inv() * a


def unit_closure(gens: Iterable[Quat], cap: int = DEFAULT_CAP) -> frozenset[Quat]:
    """Multiplicative closure of unit quaternions (always contains 1)."""
    gens = list(gens)
    for g in gens:
        if g.nrd() != ONE:
            raise ValueError(f"{g} is not a unit quaternion")
    seen = {Q_ONE}
    frontier = [Q_ONE]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceeded(f"unit closure exceeded {cap} elements")
        frontier = nxt
    return frozenset(seen)


def reflection_system_closure(xs: Iterable[Quat], cap: int = DEFAULT_CAP) -> frozenset[Quat]:
    """Smallest set containing xs and 1 that is closed under circ."""
    elems = set(xs) | {Q_ONE}
    for x in elems:
        if x.nrd() != ONE:
            raise ValueError(f"{x} is not a unit quaternion")
    inverses = {x: x.inv() for x in elems}
    changed = True
    while changed:
        changed = False
        current = list(elems)
        for a in current:
            for b in current:
                c = a * inverses[b] * a
                if c not in elems:
                    elems.add(c)
                    inverses[c] = c.inv()
                    changed = True
                    if len(elems) > cap:
                        raise CapExceeded(f"reflection system exceeded {cap} elements")
    return frozenset(elems)


def is_reflection_system(elems: Iterable[Quat], cap: int = DEFAULT_CAP) -> bool:
    """Check the three axioms: 1 in L, circ-closed, finite generated group."""
    elems = frozenset(elems)
    if Q_ONE not in elems:
        return False
    if any(circ(a, b) not in elems for a in elems for b in elems):
        return False
    try:
        unit_closure(elems, cap)
    except CapExceeded:
        return False
    return True


def is_abelian(elems: Iterable[Quat]) -> bool:
    elems = list(elems)
    return all(a * b == b * a for a in elems for b in elems)


def format_quat(q: Quat) -> str:
    return "(" + ", ".join(format_field(x) for x in q.parts) + ")"


_QUAT_RE = re.compile(r"^\s*\((.*)\)\s*$")


def parse_quat(text: str) -> Quat:
    """Inverse of :func:`format_quat`: ``(<F>, <F>, <F>, <F>)``."""
    m = _QUAT_RE.match(text)
    if not m:
        raise ValueError(f"quaternion text must be parenthesised: {text!r}")
    parts = m.group(1).split(",")
    if len(parts) != 4:
        raise ValueError(f"quaternion needs four parts: {text!r}")
    return Quat(*(parse_field(p) for p in parts))

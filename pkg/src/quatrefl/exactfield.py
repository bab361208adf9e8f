"""Exact arithmetic in F = Q(sqrt2, sqrt3, sqrt5) and its complexification F(i).

Elements are stored as eight integer coordinates over the basis
``1, r2, r3, r5, r6, r10, r15, r30`` (``rN`` = sqrt N) together with one
positive common denominator, reduced so that the gcd of all nine integers
is 1.  The representation is therefore unique and hashing is exact.

The sign of an element is taken in the real embedding where all three
square roots are positive.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

RADICALS: tuple[int, ...] = (1, 2, 3, 5, 6, 10, 15, 30)
_RAD_INDEX = {m: n for n, m in enumerate(RADICALS)}
DIM = len(RADICALS)


def _build_mul_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    # sqrt(m) * sqrt(n) = g * sqrt(mn / g^2) with g = gcd(m, n)
    rows = []
    for m in RADICALS:
        row = []
        for n in RADICALS:
            g = math.gcd(m, n)
            row.append((_RAD_INDEX[(m // g) * (n // g)], g))
        rows.append(tuple(row))
    return tuple(rows)


MUL_TABLE = _build_mul_table()

Scalar = Union[int, Fraction]
_ZERO8 = (0,) * DIM


class FieldElem:
    """Element of Q(sqrt2, sqrt3, sqrt5) with canonical integer coordinates."""

    __slots__ = ("c", "d", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = (), den: int = 1):
        coeffs = list(coeffs)
        if len(coeffs) > DIM:
            raise ValueError(f"expected at most {DIM} coordinates")
        coeffs += [0] * (DIM - len(coeffs))
        if any(isinstance(x, Fraction) for x in coeffs):
            lcm = 1
            for x in coeffs:
                if isinstance(x, Fraction):
                    lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
            coeffs = [int(x * lcm) for x in coeffs]
            den *= lcm
        self._set([int(x) for x in coeffs], den)

    def _set(self, ints: list[int], den: int) -> None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            ints = [-x for x in ints]
            den = -den
        g = math.gcd(*ints, den)
        if g != 1:
            ints = [x // g for x in ints]
            den //= g
        self.c = tuple(ints)
        self.d = den
        self._hash = None

    @classmethod
    def _raw(cls, ints: list[int], den: int) -> "FieldElem":
        obj = cls.__new__(cls)
        obj._set(ints, den)
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def rational(cls, x: Scalar) -> "FieldElem":
        x = Fraction(x)
        return cls._raw([x.numerator] + [0] * (DIM - 1), x.denominator)

    @classmethod
    def sqrt_of(cls, m: int) -> "FieldElem":
        """sqrt(m) for a square-free basis radical m."""
        if m not in _RAD_INDEX:
            raise ValueError(f"sqrt({m}) is not a basis radical of F")
        ints = [0] * DIM
        ints[_RAD_INDEX[m]] = 1
        return cls._raw(ints, 1)

    @classmethod
    def coerce(cls, x: "FieldLike") -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldElem")

    # inspection ---------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.d) for x in self.c)

    def is_zero(self) -> bool:
        return self.c == _ZERO8

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return Fraction(self.c[0], self.d)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.c, self.d))
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElem):
            return self.d == other.d and self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self == FieldElem.rational(other)
        return NotImplemented

    # arithmetic ---------------------------------------------------------
    def __neg__(self) -> "FieldElem":
        obj = FieldElem.__new__(FieldElem)
        obj.c = tuple(-x for x in self.c)
        obj.d = self.d
        obj._hash = None
        return obj

    def __add__(self, other: "FieldLike") -> "FieldElem":
        if not isinstance(other, FieldElem):
            try:
                other = FieldElem.coerce(other)
            except TypeError:
                return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        d1, d2 = self.d, other.d
        if d1 == d2:
            return FieldElem._raw([a + b for a, b in zip(self.c, other.c)], d1)
        return FieldElem._raw([a * d2 + b * d1 for a, b in zip(self.c, other.c)], d1 * d2)

    __radd__ = __add__

    def __sub__(self, other: "FieldLike") -> "FieldElem":
        if not isinstance(other, FieldElem):
            try:
                other = FieldElem.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "FieldLike") -> "FieldElem":
        return FieldElem.coerce(other) - self

    def __mul__(self, other: "FieldLike") -> "FieldElem":
        if isinstance(other, int):
            return FieldElem._raw([a * other for a in self.c], self.d)
        if isinstance(other, Fraction):
            return FieldElem._raw([a * other.numerator for a in self.c], self.d * other.denominator)
        if not isinstance(other, FieldElem):
            return NotImplemented
        a = self.c
        b = other.c
        out = [0] * DIM
        bnz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                row = MUL_TABLE[i]
                for j, y in bnz:
                    k, g = row[j]
                    out[k] += g * x * y
        return FieldElem._raw(out, self.d * other.d)

    __rmul__ = __mul__

    def conjugate_radical(self, p: int) -> "FieldElem":
        """Galois conjugate sending sqrt(p) to -sqrt(p) (p in 2, 3, 5)."""
        ints = [-x if m % p == 0 else x for x, m in zip(self.c, RADICALS)]
        return FieldElem._raw(ints, self.d)

    def inverse(self) -> "FieldElem":
        """Exact inverse via the tower of Galois conjugations."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F")
        y1 = self.conjugate_radical(2)
        x1 = self * y1
        y2 = x1.conjugate_radical(3)
        x2 = x1 * y2
        y3 = x2.conjugate_radical(5)
        norm = x2 * y3
        return (y1 * y2 * y3) * (1 / norm.to_fraction())

    def __truediv__(self, other: "FieldLike") -> "FieldElem":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in F")
            return self * (1 / Fraction(other))
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: "FieldLike") -> "FieldElem":
        return FieldElem.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # order --------------------------------------------------------------
    def sign(self) -> int:
        return field_sign(self)

    def __lt__(self, other: "FieldLike") -> bool:
        return field_sign(self - FieldElem.coerce(other)) < 0

    def __le__(self, other: "FieldLike") -> bool:
        return field_sign(self - FieldElem.coerce(other)) <= 0

    def __gt__(self, other: "FieldLike") -> bool:
        return field_sign(self - FieldElem.coerce(other)) > 0

    def __ge__(self, other: "FieldLike") -> bool:
        return field_sign(self - FieldElem.coerce(other)) >= 0

    def __float__(self) -> float:
        return math.fsum(float(Fraction(x, self.d)) * math.sqrt(m) for x, m in zip(self.c, RADICALS) if x)

    # text ---------------------------------------------------------------
    def __str__(self) -> str:
        return format_field(self)

    def __repr__(self) -> str:
        return f"FieldElem({format_field(self)!r})"


FieldLike = Union[FieldElem, int, Fraction]

ZERO = FieldElem()
ONE = FieldElem.rational(1)
SQRT2 = FieldElem.sqrt_of(2)
SQRT3 = FieldElem.sqrt_of(3)
SQRT5 = FieldElem.sqrt_of(5)


def field_add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def field_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def field_neg(a: FieldElem) -> FieldElem:
    return -a


def field_inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def _sqrt_floor_scaled(m: int, bits: int) -> int:
    return math.isqrt(m << (2 * bits))


def field_sign(a: FieldElem) -> int:
    """Exact sign: zero is decided on coordinates, otherwise by interval refinement."""
    if a.is_zero():
        return 0
    bits = 32
    while True:
        lo = hi = 0
        for x, m in zip(a.c, RADICALS):
            if not x:
                continue
            s = _sqrt_floor_scaled(m, bits)
            exact = s * s == m << (2 * bits)
            s_hi = s if exact else s + 1
            if x > 0:
                lo += x * s
                hi += x * s_hi
            else:
                lo += x * s_hi
                hi += x * s
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


def sqrt_in_field(x: FieldElem) -> FieldElem | None:
    """Square root of x when it has the form r*sqrt(m), r rational; else None.

    Only rational x can have such a root.  The result is the nonnegative root.
    """
    if not x.is_rational():
        return None
    q = x.to_fraction()
    if q < 0:
        return None
    if q == 0:
        return ZERO
    for m in RADICALS:
        t = q / m
        n, d = t.numerator, t.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return FieldElem.sqrt_of(m) * Fraction(rn, rd)
    return None


# text form ------------------------------------------------------------

def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_field(a: FieldElem) -> str:
    terms = []
    for q, m in zip(a.coeffs, RADICALS):
        if q == 0:
            continue
        terms.append(_fmt_rational(q) if m == 1 else f"{_fmt_rational(q)}*r{m}")
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"^([+-]?)(\d+(?:/\d+)?)?(?:\*?r(\d+))?$")


def parse_field(text: str) -> FieldElem:
    """Parse ``c0 + c1*r2 + ...``; also accepts ``-`` separators and bare ``r5``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty field element")
    s = re.sub(r"\+-", "-", s)
    s = re.sub(r"--", "+", s)
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces).lstrip("+") != s.lstrip("+"):
        raise ValueError(f"cannot parse field element {text!r}")
    coeffs = [Fraction(0)] * DIM
    for piece in pieces:
        m = _TERM.match(piece)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"bad term {piece!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        rad = int(m.group(3)) if m.group(3) else 1
        if rad not in _RAD_INDEX:
            raise ValueError(f"r{rad} is not a basis radical")
        coeffs[_RAD_INDEX[rad]] += sign * coef
    return FieldElem(coeffs)


# complexification -----------------------------------------------------

class ComplexElem:
    """re + im*i with re, im in F."""

    __slots__ = ("re", "im")

    def __init__(self, re: FieldLike = 0, im: FieldLike = 0):
        self.re = FieldElem.coerce(re)
        self.im = FieldElem.coerce(im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ComplexElem):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.im.is_zero() and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def __add__(self, other: "ComplexLike") -> "ComplexElem":
        other = _ccoerce(other)
        return ComplexElem(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexElem":
        return ComplexElem(-self.re, -self.im)

    def __sub__(self, other: "ComplexLike") -> "ComplexElem":
        return self + (-_ccoerce(other))

    def __rsub__(self, other: "ComplexLike") -> "ComplexElem":
        return _ccoerce(other) - self

    def __mul__(self, other: "ComplexLike") -> "ComplexElem":
        if isinstance(other, (int, Fraction, FieldElem)):
            return ComplexElem(self.re * other, self.im * other)
        if not isinstance(other, ComplexElem):
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexElem(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conj(self) -> "ComplexElem":
        return ComplexElem(self.re, -self.im)

    def abs2(self) -> FieldElem:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "ComplexElem":
        n = self.abs2()
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero in F(i)")
        ninv = n.inverse()
        return ComplexElem(self.re * ninv, -self.im * ninv)

    def __truediv__(self, other: "ComplexLike") -> "ComplexElem":
        return self * _ccoerce(other).inverse()

    def __str__(self) -> str:
        return f"[{self.re}; {self.im}]"

    def __repr__(self) -> str:
        return f"ComplexElem({self.re!s}, {self.im!s})"


ComplexLike = Union[ComplexElem, FieldElem, int, Fraction]
I_C = ComplexElem(0, 1)


def _ccoerce(x: ComplexLike) -> ComplexElem:
    if isinstance(x, ComplexElem):
        return x
    return ComplexElem(x, 0)

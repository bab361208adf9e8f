"""Vectors in H^2, 2x2 quaternionic matrices, 4x4 complex matrices.

H^2 is a right H-module: matrices act on the left and scalars multiply on
the right.  The inner product is conjugate-linear in its first argument,
``<v, w> = conj(v1) w1 + conj(v2) w2``, so ``<a, a xi> = |a|^2 xi``.

Both matrix classes expose a flat integer encoding (coordinates over Q
with one common denominator) used by :mod:`quatrefl.groups` to close
groups with integer matrix products.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Sequence

from .exactfield import DIM, ComplexElem, FieldElem, parse_field
from .quaternion import Q_ONE, Q_ZERO, Quat, QuatLike, format_quat, parse_quat, qcoerce


def _flatten_fields(fields: Sequence[FieldElem]) -> tuple[list[int], int]:
    den = 1
    for f in fields:
        den = den * f.d // math.gcd(den, f.d)
    ints: list[int] = []
    for f in fields:
        s = den // f.d
        ints.extend(x * s for x in f.c)
    return ints, den


def _unflatten_fields(ints: Sequence[int], den: int, count: int) -> list[FieldElem]:
    return [FieldElem._raw([int(x) for x in ints[n * DIM:(n + 1) * DIM]], int(den)) for n in range(count)]


class VecH:
    """Column vector (v1, v2) in H^2."""

    __slots__ = ("v1", "v2")

    def __init__(self, v1: QuatLike, v2: QuatLike):
        self.v1 = qcoerce(v1)
        self.v2 = qcoerce(v2)

    @property
    def entries(self) -> tuple[Quat, Quat]:
        return (self.v1, self.v2)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VecH) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def is_zero(self) -> bool:
        return self.v1.is_zero() and self.v2.is_zero()

    def scale(self, lam: QuatLike) -> "VecH":
        """Right scalar multiplication v*lam."""
        lam = qcoerce(lam)
        return VecH(self.v1 * lam, self.v2 * lam)

    def __add__(self, other: "VecH") -> "VecH":
        return VecH(self.v1 + other.v1, self.v2 + other.v2)

    def __sub__(self, other: "VecH") -> "VecH":
        return VecH(self.v1 - other.v1, self.v2 - other.v2)

    def __neg__(self) -> "VecH":
        return VecH(-self.v1, -self.v2)

    def __repr__(self) -> str:
        return f"VecH({format_quat(self.v1)}, {format_quat(self.v2)})"

    def to_json(self) -> list[str]:
        return [format_quat(self.v1), format_quat(self.v2)]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "VecH":
        if len(data) != 2:
            raise ValueError("a vector in H^2 has two entries")
        return cls(parse_quat(data[0]), parse_quat(data[1]))


E1 = VecH(1, 0)
E2 = VecH(0, 1)


class MatH:
    """2x2 matrix over the quaternions with entries in F."""

    __slots__ = ("rows", "_hash", "_flat")
    FLAT_SIZE = 2 * 2 * 4 * DIM

    def __init__(self, rows: Sequence[Sequence[QuatLike]]):
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("MatH is 2x2")
        self.rows = tuple(tuple(qcoerce(x) for x in r) for r in rows)
        self._hash = None
        self._flat = None

    @classmethod
    def _of(cls, a: Quat, b: Quat, c: Quat, d: Quat) -> "MatH":
        m = cls.__new__(cls)
        m.rows = ((a, b), (c, d))
        m._hash = None
        m._flat = None
        return m

    @classmethod
    def identity(cls) -> "MatH":
        return cls._of(Q_ONE, Q_ZERO, Q_ZERO, Q_ONE)

    @classmethod
    def diag(cls, a: QuatLike, d: QuatLike) -> "MatH":
        return cls._of(qcoerce(a), Q_ZERO, Q_ZERO, qcoerce(d))

    @property
    def entries(self) -> tuple[Quat, Quat, Quat, Quat]:
        (a, b), (c, d) = self.rows
        return (a, b, c, d)

    def __getitem__(self, rc: tuple[int, int]) -> Quat:
        return self.rows[rc[0]][rc[1]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MatH) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __mul__(self, other):
        if isinstance(other, MatH):
            return h_mul(self, other)
        if isinstance(other, VecH):
            return h_apply(self, other)
        if isinstance(other, (int, Fraction, FieldElem)):
            return MatH._of(*(x * other for x in self.entries))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self * other
        return NotImplemented

    def __add__(self, other: "MatH") -> "MatH":
        return MatH._of(*(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "MatH") -> "MatH":
        return MatH._of(*(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "MatH":
        return MatH._of(*(-x for x in self.entries))

    def left_scalar(self, q: QuatLike) -> "MatH":
        """The matrix q*M (every entry multiplied on the left)."""
        q = qcoerce(q)
        return MatH._of(*(q * x for x in self.entries))

    def adjoint(self) -> "MatH":
        return h_adjoint(self)

    def inverse(self) -> "MatH":
        return h_inverse(self)

    def is_diagonal(self) -> bool:
        return self.rows[0][1].is_zero() and self.rows[1][0].is_zero()

    def is_antidiagonal(self) -> bool:
        return self.rows[0][0].is_zero() and self.rows[1][1].is_zero()

    def is_monomial(self) -> bool:
        return self.is_diagonal() or self.is_antidiagonal()

    def columns(self) -> tuple[VecH, VecH]:
        (a, b), (c, d) = self.rows
        return VecH(a, c), VecH(b, d)

    def order(self, limit: int = 1000) -> int | None:
        ident = MatH.identity()
        p = self
        for n in range(1, limit + 1):
            if p == ident:
                return n
            p = p * self
        return None

    # flat encoding ----------------------------------------------------
    def to_flat(self) -> tuple[list[int], int]:
        if self._flat is None:
            fields = [f for q in self.entries for f in q.parts]
            ints, den = _flatten_fields(fields)
            g = math.gcd(*ints, den)
            self._flat = ([x // g for x in ints], den // g)
        return self._flat

    @classmethod
    def from_flat(cls, ints: Sequence[int], den: int) -> "MatH":
        f = _unflatten_fields(ints, den, 16)
        qs = [Quat._of(*f[4 * n:4 * n + 4]) for n in range(4)]
        return cls._of(*qs)

    @classmethod
    def basis(cls) -> list["MatH"]:
        out = []
        for n in range(cls.FLAT_SIZE):
            ints = [0] * cls.FLAT_SIZE
            ints[n] = 1
            out.append(cls.from_flat(ints, 1))
        return out

    def __repr__(self) -> str:
        (a, b), (c, d) = self.rows
        return f"MatH([[{a}, {b}], [{c}, {d}]])"

    def to_json(self) -> list[list[str]]:
        return [[format_quat(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "MatH":
        return cls([[parse_quat(x) for x in r] for r in data])


def h_mul(a: MatH, b: MatH) -> MatH:
    (a11, a12), (a21, a22) = a.rows
    (b11, b12), (b21, b22) = b.rows

    def dot(x, y, u, v):
        if x.is_zero() or y.is_zero():
            return u * v if not (u.is_zero() or v.is_zero()) else Q_ZERO
        if u.is_zero() or v.is_zero():
            return x * y
        return x * y + u * v

    return MatH._of(
        dot(a11, b11, a12, b21), dot(a11, b12, a12, b22),
        dot(a21, b11, a22, b21), dot(a21, b12, a22, b22),
    )


def h_apply(g: MatH, v: VecH) -> VecH:
    (a, b), (c, d) = g.rows
    return VecH(a * v.v1 + b * v.v2, c * v.v1 + d * v.v2)


def h_adjoint(g: MatH) -> MatH:
    (a, b), (c, d) = g.rows
    return MatH._of(a.conj(), c.conj(), b.conj(), d.conj())


def inner(v: VecH, w: VecH) -> Quat:
    """<v, w> = conj(v1) w1 + conj(v2) w2."""
    return v.v1.conj() * w.v1 + v.v2.conj() * w.v2


def norm2(v: VecH) -> FieldElem:
    return v.v1.nrd() + v.v2.nrd()


def abs2_inner(v: VecH, w: VecH) -> FieldElem:
    return inner(v, w).nrd()


def is_unitary(g: MatH) -> bool:
    return h_adjoint(g) * g == MatH.identity()


# elimination over a division ring ---------------------------------------

def row_reduce(rows: list[list], zero, inv, is_zero) -> tuple[list[list], list[int]]:
    """Reduced row echelon form by left row operations.

    ``rows`` is modified in place; entries need ``*``, ``-`` and the supplied
    ``inv``.  Left operations preserve the right-module solution set of Mv=0.
    Returns (rows, pivot columns).
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if not is_zero(rows[i][col])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p_inv = inv(rows[r][col])
        rows[r] = [p_inv * x for x in rows[r]]
        for i in range(nrows):
            if i != r and not is_zero(rows[i][col]):
                m = rows[i][col]
                rows[i] = [x - m * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def kernel_rank_2x2(m: MatH) -> tuple[int, VecH | None]:
    """Rank of M over H and, when the rank is 1, a kernel vector in line-canonical form."""
    rows = [list(r) for r in m.rows]
    rows, pivots = row_reduce(rows, Q_ZERO, lambda q: q.inv(), lambda q: q.is_zero())
    rank = len(pivots)
    if rank != 1:
        if rank == 0:
            return 0, None
        return rank, None
    if pivots[0] == 1:
        return 1, VecH(Q_ONE, Q_ZERO)
    # x1 + r12 x2 = 0 -> (-r12, 1), rescaled so the first nonzero entry is 1
    x1 = -rows[0][1]
    if x1.is_zero():
        return 1, VecH(Q_ZERO, Q_ONE)
    return 1, VecH(Q_ONE, x1.inv())


def h_inverse(m: MatH) -> MatH:
    rows = [list(m.rows[0]) + [Q_ONE, Q_ZERO], list(m.rows[1]) + [Q_ZERO, Q_ONE]]
    rows, pivots = row_reduce(rows, Q_ZERO, lambda q: q.inv(), lambda q: q.is_zero())
    if pivots[:2] != [0, 1]:
        raise ZeroDivisionError("singular quaternionic matrix")
    return MatH([rows[0][2:], rows[1][2:]])


# complex side -----------------------------------------------------------

def _c(x) -> ComplexElem:
    return x if isinstance(x, ComplexElem) else ComplexElem(x)


class MatC:
    """4x4 matrix over F(i)."""

    __slots__ = ("rows", "_hash", "_flat")
    N = 4
    FLAT_SIZE = 4 * 4 * 2 * DIM

    def __init__(self, rows: Sequence[Sequence]):
        if len(rows) != self.N or any(len(r) != self.N for r in rows):
            raise ValueError("MatC is 4x4")
        self.rows = tuple(tuple(_c(x) for x in r) for r in rows)
        self._hash = None
        self._flat = None

    @classmethod
    def identity(cls) -> "MatC":
        return cls([[1 if r == c else 0 for c in range(4)] for r in range(4)])

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "MatC":
        """Permutation matrix with column c having a 1 in row perm[c] (0-based)."""
        rows = [[0] * 4 for _ in range(4)]
        for c, r in enumerate(perm):
            rows[r][c] = 1
        return cls(rows)

    def __getitem__(self, rc: tuple[int, int]) -> ComplexElem:
        return self.rows[rc[0]][rc[1]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MatC) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __mul__(self, other):
        if isinstance(other, MatC):
            out = []
            for r in range(4):
                row = []
                for c in range(4):
                    acc = ComplexElem()
                    for k in range(4):
                        x, y = self.rows[r][k], other.rows[k][c]
                        if not (x.is_zero() or y.is_zero()):
                            acc = acc + x * y
                    row.append(acc)
                out.append(row)
            return MatC(out)
        if isinstance(other, (int, Fraction, FieldElem, ComplexElem)):
            return MatC([[x * other for x in r] for r in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem, ComplexElem)):
            return self * other
        return NotImplemented

    def __neg__(self) -> "MatC":
        return MatC([[-x for x in r] for r in self.rows])

    def trace(self) -> ComplexElem:
        acc = ComplexElem()
        for n in range(4):
            acc = acc + self.rows[n][n]
        return acc

    def adjoint(self) -> "MatC":
        return MatC([[self.rows[c][r].conj() for c in range(4)] for r in range(4)])

    def inverse(self) -> "MatC":
        rows = [list(self.rows[r]) + [ComplexElem(1 if r == c else 0) for c in range(4)] for r in range(4)]
        rows, pivots = row_reduce(rows, ComplexElem(), lambda z: z.inverse(), lambda z: z.is_zero())
        if pivots[:4] != [0, 1, 2, 3]:
            raise ZeroDivisionError("singular complex matrix")
        return MatC([r[4:] for r in rows])

    def is_unitary(self) -> bool:
        return self.adjoint() * self == MatC.identity()

    def order(self, limit: int = 1000) -> int | None:
        ident = MatC.identity()
        p = self
        for n in range(1, limit + 1):
            if p == ident:
                return n
            p = p * self
        return None

    def to_flat(self) -> tuple[list[int], int]:
        if self._flat is None:
            fields = [f for r in self.rows for z in r for f in (z.re, z.im)]
            ints, den = _flatten_fields(fields)
            g = math.gcd(*ints, den)
            self._flat = ([x // g for x in ints], den // g)
        return self._flat

    @classmethod
    def from_flat(cls, ints: Sequence[int], den: int) -> "MatC":
        f = _unflatten_fields(ints, den, 32)
        zs = [ComplexElem(f[2 * n], f[2 * n + 1]) for n in range(16)]
        return cls([zs[4 * r:4 * r + 4] for r in range(4)])

    @classmethod
    def basis(cls) -> list["MatC"]:
        out = []
        for n in range(cls.FLAT_SIZE):
            ints = [0] * cls.FLAT_SIZE
            ints[n] = 1
            out.append(cls.from_flat(ints, 1))
        return out

    def __repr__(self) -> str:
        return "MatC(" + repr([[str(z) for z in r] for r in self.rows]) + ")"

    def to_json(self) -> list[list[list[str]]]:
        return [[[str(z.re), str(z.im)] for z in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "MatC":
        return cls([[ComplexElem(parse_field(z[0]), parse_field(z[1])) for z in r] for r in data])


# matrix files -----------------------------------------------------------

def load_matrices(path: str) -> list:
    """Read a JSON list of matrices (MatH: rows of Quat text; MatC: rows of [re, im])."""
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data["generators"]
    out = []
    for m in data:
        if len(m) == 2:
            out.append(MatH.from_json(m))
        elif len(m) == 4:
            out.append(MatC.from_json(m))
        else:
            raise ValueError("matrices must be 2x2 quaternionic or 4x4 complex")
    return out


def dump_matrices(mats: Sequence, path: str) -> None:
    with open(path, "w") as fh:
        json.dump({"generators": [m.to_json() for m in mats]}, fh, indent=1)
        fh.write("\n")

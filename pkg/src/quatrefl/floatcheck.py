"""Double-precision mirror of the exact types, used for the eigenvector-family sweep.

A quaternion is a length-4 float array (1, i, j, k parts); vectors are
(2, 4) arrays and matrices (2, 2, 4).  Group elements are stacked along a
leading axis so one residual evaluation covers the whole group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exactfield import FieldElem, sqrt_in_field
from .groups import MatGroup, verify_fixed_line
from .linalg import MatH, VecH
from .lines import line_of
from .quaternion import Q_I, Q_J, Q_ONE, Quat

LIMIT = 1 / math.sqrt(2)


class DomainError(ValueError):
    pass


class NotRepresentable(ValueError):
    pass


def quat_f(q: Quat) -> np.ndarray:
    return np.array([float(x) for x in q.parts])


def vec_f(v: VecH) -> np.ndarray:
    return np.stack([quat_f(q) for q in v.entries])


def mat_f(m: MatH) -> np.ndarray:
    return np.array([[quat_f(q) for q in row] for row in m.rows])


def group_f(G: MatGroup) -> np.ndarray:
    return np.stack([mat_f(g) for g in G.elements])


def qmul_f(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Quaternion product over the last axis (broadcasting)."""
    a1, b1, c1, d1 = np.moveaxis(p, -1, 0)
    a2, b2, c2, d2 = np.moveaxis(q, -1, 0)
    return np.stack([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ], axis=-1)


def qconj_f(q: np.ndarray) -> np.ndarray:
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def matmul_f(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of quaternion matrices (..., n, m, 4) @ (..., m, p, 4)."""
    return qmul_f(a[..., :, :, None, :], b[..., None, :, :, :]).sum(axis=-3)


def apply_f(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    return qmul_f(m, v[..., None, :, :]).sum(axis=-2)


def inner_f(v: np.ndarray, w: np.ndarray) -> np.ndarray:
    return qmul_f(qconj_f(v), w).sum(axis=-2)


def family_vector(t: float, sign: int = 1) -> np.ndarray:
    """(1, t(1+j) + sign*sqrt(1-2t^2) i) as a (2, 4) float array."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if abs(t) > LIMIT * (1 + 1e-15):
        raise DomainError(f"|t| = {abs(t)} exceeds 1/sqrt(2)")
    s = math.sqrt(max(0.0, 1 - 2 * t * t))
    return np.array([[1.0, 0, 0, 0], [t, sign * s, t, 0]])


def residual_f(elems: np.ndarray, v: np.ndarray) -> float:
    """max over g of | |<v, g v>|^2 - <v, v>^2 |."""
    gv = apply_f(elems, v)
    ip = inner_f(v[None], gv)
    lhs = (ip ** 2).sum(axis=-1)
    nv = (v ** 2).sum()
    return float(np.max(np.abs(lhs - nv * nv)))


def family_residual(H: MatGroup | np.ndarray, t: float, sign: int = 1) -> float:
    elems = H if isinstance(H, np.ndarray) else group_f(H)
    return residual_f(elems, family_vector(t, sign))


@dataclass(frozen=True)
class SweepConfig:
    grid: int = 1001
    tol: float = 1e-10


@dataclass
class SweepResult:
    grid: int
    tol: float
    max_residual: float
    worst_t: float
    passed: bool


def sweep(H: MatGroup, config: SweepConfig = SweepConfig()) -> SweepResult:
    elems = group_f(H)
    worst, worst_t = 0.0, 0.0
    for t in np.linspace(-LIMIT, LIMIT, config.grid):
        for sign in (1, -1):
            r = family_residual(elems, float(t), sign)
            if r > worst:
                worst, worst_t = r, float(t)
    return SweepResult(config.grid, config.tol, worst, worst_t, worst < config.tol)


def exact_family_vector(t: FieldElem, sign: int = 1) -> VecH:
    t = FieldElem.coerce(t)
    rest = 1 - 2 * t * t
    if rest.sign() < 0:
        raise DomainError(f"t = {t} lies outside [-1/sqrt2, 1/sqrt2]")
    s = sqrt_in_field(rest)
    if s is None:
        raise NotRepresentable(f"sqrt(1 - 2t^2) = sqrt({rest}) is not of the form r*sqrt(m)")
    return VecH(Q_ONE, (Q_ONE + Q_J) * t + Q_I * (s * sign))


def exact_family_check(t: FieldElem, H: MatGroup | None = None) -> bool:
    """Exact fixed-line test of both family vectors at t under H (default G8_family)."""
    if H is None:
        from .catalog import group

        H = group("G8_family")
    return all(verify_fixed_line(H, line_of(exact_family_vector(t, s))) for s in (1, -1))


def embedding_error(a: MatH, b: MatH) -> float:
    """Largest entry gap between float(a b) and float(a) float(b)."""
    return float(np.max(np.abs(mat_f(a * b) - matmul_f(mat_f(a), mat_f(b)))))


def diagonalization_example() -> list[tuple[MatH, MatH, MatH]]:
    """(M, M^-1 X M, expected) for X = antidiag(j, j) and the two conjugators given for it."""
    from .exactfield import SQRT2

    r = SQRT2.inverse()
    X = MatH([[0, Q_J], [Q_J, 0]])
    k = Q_I * Q_J
    cases = [
        (MatH([[1, 1], [1, -Q_I]]), MatH.diag(Q_J, k)),
        (MatH([[1, 1], [1, (Q_ONE - Q_I) * r]]), MatH.diag(Q_J, (Q_J + k) * r)),
    ]
    return [(M, M.inverse() * X * M, D) for M, D in cases]

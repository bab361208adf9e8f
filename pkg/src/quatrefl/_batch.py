"""Batched exact arithmetic on integer coordinate arrays.

Rows are rational vectors stored as (int numerators, positive den).  int64
is used while a product bound guarantees no overflow; otherwise the
arithmetic falls back to Python integers in object arrays.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .exactfield import DIM, MUL_TABLE, FieldElem

_SAFE = 2 ** 62


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat)
    return int(np.abs(a).max())


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer product a @ b."""
    if a.dtype != object and b.dtype != object:
        if _absmax(a) * _absmax(b) * max(a.shape[-1], 1) < _SAFE:
            return a @ b
    return a.astype(object) @ b.astype(object)


def normalize(p: np.ndarray, den: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Divide every row and its denominator by their common gcd."""
    if p.dtype != object and den.dtype != object:
        g = np.gcd.reduce(np.concatenate([p, den[:, None]], axis=1), axis=1)
        return p // g[:, None], den // g
    rows, dens = [], []
    for row, d in zip(p, den):
        g = math.gcd(*(int(x) for x in row), int(d))
        rows.append([int(x) // g for x in row])
        dens.append(int(d) // g)
    p2 = np.array(rows, dtype=object).reshape(p.shape)
    d2 = np.array(dens, dtype=object)
    if _absmax(p2) < _SAFE and _absmax(d2) < _SAFE:
        return p2.astype(np.int64), d2.astype(np.int64)
    return p2, d2


def row_key(ints: Sequence[int], den: int) -> bytes | tuple:
    """Hashable key of a normalized rational row, independent of storage dtype."""
    vals = [int(x) for x in ints] + [int(den)]
    if all(-_SAFE < v < _SAFE for v in vals):
        return np.array(vals, dtype=np.int64).tobytes()
    return tuple(vals)


def row_keys(p: np.ndarray, den: np.ndarray) -> list:
    if p.dtype != object and den.dtype != object:
        full = np.ascontiguousarray(np.concatenate([p, den[:, None]], axis=1))
        return [r.tobytes() for r in full]
    return [row_key(r, d) for r, d in zip(p, den)]


def linear_map_matrix(images: Sequence[tuple[Sequence[int], int]]) -> tuple[np.ndarray, int]:
    """Stack rational rows (ints, den) over one common denominator."""
    den = 1
    for _, d in images:
        den = den * d // math.gcd(den, d)
    rows = [[int(x) * (den // d) for x in ints] for ints, d in images]
    arr = np.array(rows, dtype=object)
    if _absmax(arr) < _SAFE:
        arr = arr.astype(np.int64)
    return arr, den


def fmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Multiply arrays of F-coordinates (last axis of length 8) elementwise."""
    a = a.astype(object)
    b = b.astype(object)
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=object)
    nz_a = [i for i in range(DIM) if a[..., i].any()]
    nz_b = [j for j in range(DIM) if b[..., j].any()]
    for i in nz_a:
        for j in nz_b:
            k, g = MUL_TABLE[i][j]
            out[..., k] = out[..., k] + g * a[..., i] * b[..., j]
    return out


def nrd_rows(q: np.ndarray) -> np.ndarray:
    """Reduced norm of quaternion coordinate rows of shape (N, 4, 8)."""
    out = fmul(q[:, 0, :], q[:, 0, :])
    for part in range(1, 4):
        out = out + fmul(q[:, part, :], q[:, part, :])
    return out


def fpow(a: np.ndarray, n: int) -> np.ndarray:
    out = a
    for _ in range(n - 1):
        out = fmul(out, a)
    return out


def field_rows(ints: np.ndarray, den: np.ndarray) -> list[FieldElem]:
    return [FieldElem._raw([int(x) for x in r], int(d)) for r, d in zip(ints, den)]


def sum_field_rows(ints: np.ndarray, den: np.ndarray) -> FieldElem:
    """Exact sum of rows ints[r] / den[r] (rows grouped by denominator)."""
    total = FieldElem()
    groups: dict[int, list[int]] = {}
    for r, d in enumerate(den):
        groups.setdefault(int(d), []).append(r)
    for d, idx in groups.items():
        s = ints[idx].astype(object).sum(axis=0)
        total = total + FieldElem._raw([int(x) for x in s], d)
    return total

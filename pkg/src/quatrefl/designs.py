"""Spherical (t,t)-designs in HP^1: frame potentials, design potentials, Hoggar bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _batch
from .exactfield import ONE, FieldElem, field_sign
from .groups import MatGroup, inner_with_images
from .linalg import VecH, norm2
from .lines import Line, LineSet, angle_matrix, sorted_fields
from .quaternion import Quat

MAX_T = 3


class BoundInapplicable(ValueError):
    pass


def c_t(d: int, t: int) -> FieldElem:
    """prod_{j<t} (2 + j) / (2d + j), the (t,t)-design constant for H^d."""
    if d < 1 or t < 1:
        raise ValueError("need d >= 1 and t >= 1")
    out = Fraction(1)
    for j in range(t):
        out *= Fraction(2 + j, 2 * d + j)
    return FieldElem.rational(out)


def frame_potential(lines: Sequence[Line], t: int) -> FieldElem:
    total = FieldElem()
    for row in angle_matrix(list(lines)):
        for a in row:
            total = total + a ** t
    return total


def is_tt_design(lines: Sequence[Line], t: int, d: int = 2) -> bool:
    lines = list(lines)
    if not lines:
        raise ValueError("empty line set")
    n = len(lines)
    return frame_potential(lines, t) == c_t(d, t) * (n * n)


def design_potential(G: MatGroup, x: VecH, t: int) -> FieldElem:
    """(1/|G|) sum_g |<x, g x>|^(2t) - c_t <x, x>^(2t); zero iff the orbit of x is a (t,t)-design."""
    if x.is_zero():
        raise ValueError("zero vector")
    q, qd = inner_with_images(G, x)
    n = _batch.nrd_rows(q)
    powered = _batch.fpow(n, t)
    dens = np.array([int(d) ** (2 * t) for d in qd], dtype=object)
    total = _batch.sum_field_rows(powered, dens)
    return total / G.order - c_t(2, t) * norm2(x) ** (2 * t)


def random_rational_vector(rng: np.random.Generator, bound: int = 5) -> VecH:
    """A nonzero vector of small random integer quaternions (designs are scale invariant)."""
    while True:
        parts = [int(x) for x in rng.integers(-bound, bound + 1, size=8)]
        v = VecH(Quat(*parts[:4]), Quat(*parts[4:]))
        if not v.is_zero():
            return v


@dataclass(frozen=True)
class SamplingConfig:
    samples: int = 200
    seed: int = 20240
    bound: int = 5

    def vectors(self) -> list[VecH]:
        rng = np.random.default_rng(self.seed)
        return [random_rational_vector(rng, self.bound) for _ in range(self.samples)]


def special_bound(d: int, alpha, beta) -> FieldElem:
    """Hoggar's bound for line systems with two nonzero angles alpha, beta."""
    a, b = FieldElem.coerce(alpha), FieldElem.coerce(beta)
    m = 2 * d + 1
    den = 3 - m * (a + b) + d * m * a * b
    if field_sign(den) <= 0:
        raise BoundInapplicable(f"denominator {den} is not positive")
    return d * m * (ONE - a) * (ONE - b) / den


def absolute_bound(d: int) -> FieldElem:
    return FieldElem.rational(Fraction(d * d * (4 * d * d - 1), 3))


@dataclass
class DesignReport:
    n: int
    strengths: dict[int, bool]
    angles: list[FieldElem]
    s: int
    regular_scheme: bool
    special_bound: FieldElem | None
    absolute_bound: FieldElem
    meets_special_bound: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def within_absolute_bound(self) -> bool | None:
        """None when the bound does not apply (more than two nonzero angles)."""
        if sum(1 for a in self.angles if not a.is_zero()) > 2:
            return None
        return field_sign(self.absolute_bound - self.n) >= 0

    @property
    def t(self) -> int:
        """Largest verified strength (0 if not even a (1,1)-design)."""
        best = 0
        for k in sorted(self.strengths):
            if not self.strengths[k]:
                break
            best = k
        return best

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "strengths": {str(k): v for k, v in self.strengths.items()},
            "angles": [str(a) for a in self.angles],
            "s": self.s,
            "regular_scheme": self.regular_scheme,
            "special_bound": None if self.special_bound is None else str(self.special_bound),
            "meets_special_bound": self.meets_special_bound,
            "absolute_bound": str(self.absolute_bound),
            "within_absolute_bound": self.within_absolute_bound,
        }


def design_report(lines: LineSet | Sequence[Line], d: int = 2, max_t: int = MAX_T) -> DesignReport:
    lines = list(lines)
    if not lines:
        raise ValueError("empty line set")
    mat = angle_matrix(lines)
    n = len(lines)
    strengths = {}
    for t in range(1, max_t + 1):
        total = FieldElem()
        for row in mat:
            for a in row:
                total = total + a ** t
        strengths[t] = total == c_t(d, t) * (n * n)
    angles = sorted_fields({mat[a][b] for a in range(n) for b in range(a + 1, n)})
    report = DesignReport(n, strengths, angles, len(angles), False, None, absolute_bound(d))
    report.regular_scheme = report.t >= 1 and report.t >= report.s - 1
    nonzero = [a for a in angles if not a.is_zero()]
    if len(nonzero) == 2:
        try:
            report.special_bound = special_bound(d, nonzero[0], nonzero[1])
            report.meets_special_bound = report.special_bound == n
        except BoundInapplicable as exc:
            report.notes.append(str(exc))
    return report

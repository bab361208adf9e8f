"""The correspondence between M_4(C) in symplectic form and M_2(H).

    [[A, -B], [conj(B), conj(A)]]  <->  A + B j

with A, B in M_2(F(i)), complex i identified with the quaternion i, so
that (x + y i) j = x j + y k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactfield import ComplexElem, sqrt_in_field
from .groups import MatGroup
from .linalg import MatC, MatH
from .quaternion import Quat

BLICHFELDT_EXTRA = {"13": [], "14": ["R2"], "16": ["SB"], "18": ["iA"]}


@dataclass
class SymplecticCheck:
    is_symplectic: bool
    A: list[list[ComplexElem]] | None = None
    B: list[list[ComplexElem]] | None = None

    def __bool__(self) -> bool:
        return self.is_symplectic


def is_symplectic(m: MatC) -> SymplecticCheck:
    rows = m.rows
    A = [[rows[r][c] for c in range(2)] for r in range(2)]
    B = [[-rows[r][c + 2] for c in range(2)] for r in range(2)]
    for r in range(2):
        for c in range(2):
            if rows[r + 2][c] != B[r][c].conj() or rows[r + 2][c + 2] != A[r][c].conj():
                return SymplecticCheck(False)
    return SymplecticCheck(True, A, B)


def has_real_trace(m: MatC) -> bool:
    return m.trace().is_real()


def _quat_of(a: ComplexElem, b: ComplexElem) -> Quat:
    # a + b j with a = a.re + a.im i, b j = b.re j + b.im k
    return Quat._of(a.re, a.im, b.re, b.im)


def c_to_h(m: MatC) -> MatH:
    chk = is_symplectic(m)
    if not chk:
        raise ValueError("matrix is not in symplectic form")
    return MatH([[_quat_of(chk.A[r][c], chk.B[r][c]) for c in range(2)] for r in range(2)])


def h_to_c(m: MatH) -> MatC:
    A = [[ComplexElem(q.x1, q.xi) for q in row] for row in m.rows]
    B = [[ComplexElem(q.xj, q.xk) for q in row] for row in m.rows]
    rows = []
    for r in range(2):
        rows.append([A[r][0], A[r][1], -B[r][0], -B[r][1]])
    for r in range(2):
        rows.append([B[r][0].conj(), B[r][1].conj(), A[r][0].conj(), A[r][1].conj()])
    return MatC(rows)


def fs_indicator(G: MatGroup) -> Fraction:
    """(1/|G|) sum_g trace(g^2); must be rational for the result to be meaningful."""
    if G.kind is not MatC:
        raise TypeError("Frobenius-Schur indicator is computed on the complex side")
    total = ComplexElem()
    for g in G.elements:
        total = total + (g * g).trace()
    if not total.is_real() or not total.re.is_rational():
        raise ValueError(f"character sum {total} is not rational")
    return total.re.to_fraction() / G.order


def real_trace_scaling(m: MatC) -> ComplexElem | None:
    """A unit scalar c (in F(i)) with trace(c m) real and positive, or None if unavailable."""
    tr = m.trace()
    if tr.is_real():
        return ComplexElem(1)
    n = tr.abs2()
    root = sqrt_in_field(n)
    if root is None:
        return None
    return tr.conj() * root.inverse()


def conjugate(m: MatC, p: MatC) -> MatC:
    return p * m * p.inverse()


def blichfeldt_pipeline(name: str, conjugator: MatC | None = None) -> MatGroup:
    """Quaternionic group of Blichfeldt's collineation group 13, 14, 16 or 18.

    The complex generators (K with A2, A3 scaled by i, T, and the extra
    element) are conjugated by the permutation matrix of (1 4), converted
    to quaternionic matrices and closed.
    """
    from .catalog import blichfeldt

    key = name.rstrip("°").rstrip("o")
    if key not in BLICHFELDT_EXTRA:
        raise ValueError(f"unsupported Blichfeldt group {name!r}; use one of 13, 14, 16, 18")
    P = conjugator if conjugator is not None else blichfeldt("P_perm")
    complex_gens = [blichfeldt(n) for n in ("A1", "iA2", "iA3", "A4", "T")]
    complex_gens += [blichfeldt(n) for n in BLICHFELDT_EXTRA[key]]
    quat = [c_to_h(conjugate(g, P)) for g in complex_gens]
    return MatGroup(quat, name=f"G{key}")


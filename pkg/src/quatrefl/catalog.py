"""Named matrices, groups, fiducial vectors and line sets.

Entries are built lazily and cached.  Group entries hold generator lists;
``group(name)`` closes them once per process.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable

from .exactfield import SQRT2, SQRT3, SQRT5, ComplexElem, FieldElem
from .groups import MatGroup, verify_fixed_line
from .linalg import MatC, MatH, VecH, is_unitary
from .lines import Line, LineSet, line_of
from .quaternion import Q8, Q_I, Q_J, Q_K, Q_ONE, Quat

HALF = Fraction(1, 2)
INV_SQRT2 = SQRT2.inverse()
i, j, k = Q_I, Q_J, Q_K
ONE = Q_ONE


@dataclass
class CatalogEntry:
    name: str
    kind: str  # matrix | group-generators | vector | line-set
    payload: Any
    anchor: str
    order: int | None = None
    ambient: str | None = None
    fixed_by: str | None = None
    meta: dict = field(default_factory=dict)


class UnknownName(KeyError):
    pass


def _m(a, b, c, d, scale=1) -> MatH:
    return MatH([[a, b], [c, d]]) * scale if scale != 1 else MatH([[a, b], [c, d]])


def _cm(rows, scale: ComplexElem | FieldElem | int = 1) -> MatC:
    def conv(x):
        if isinstance(x, tuple):
            return ComplexElem(*x)
        return ComplexElem(x)

    return MatC([[conv(x) for x in r] for r in rows]) * scale


CI = (0, 1)
CMI = (0, -1)
_ONE_PLUS_I = ComplexElem(1, 1)


# complex side: Blichfeldt's collineation generators ------------------------

def _blichfeldt_table() -> dict[str, MatC]:
    A1 = _cm([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    A2 = _cm([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]])
    A3 = _cm([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    A4 = _cm([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    S = _cm([[CI, 0, 0, 0], [0, CI, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], _ONE_PLUS_I * INV_SQRT2)
    T = _cm([[CMI, 0, 0, CI], [0, 1, 1, 0], [1, 0, 0, 1], [0, CMI, CI, 0]], _ONE_PLUS_I * HALF)
    R = _cm([[1, CI, 0, 0], [CI, 1, 0, 0], [0, 0, CI, -1], [0, 0, 1, CMI]], INV_SQRT2)
    A = _cm([[1, 0, 0, 0], [0, CI, 0, 0], [0, 0, CI, 0], [0, 0, 0, 1]], _ONE_PLUS_I * INV_SQRT2)
    B = _cm([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]], _ONE_PLUS_I * INV_SQRT2)
    iu = ComplexElem(0, 1)
    return {
        "A1": A1, "A2": A2, "A3": A3, "A4": A4, "S": S, "T": T, "R": R, "A": A, "B": B,
        "iA2": A2 * iu, "iA3": A3 * iu, "R2": R * R, "SB": S * B, "iA": A * iu, "BR": B * R, "AB": A * B,
        "P_perm": MatC.permutation([3, 1, 2, 0]),
    }


@lru_cache(maxsize=None)
def _blichfeldt_cache() -> dict[str, MatC]:
    return _blichfeldt_table()


def blichfeldt(name: str) -> MatC:
    return _blichfeldt_cache()[name]


# quaternionic side ---------------------------------------------------------

def mub_vectors() -> list[VecH]:
    """The ten MUB vectors, unnormalized, ordered e1, e2, then (1, +u), (1, -u) for u = 1, i, j, k."""
    out = [VecH(1, 0), VecH(0, 1)]
    for u in (ONE, i, j, k):
        out += [VecH(1, u), VecH(1, -u)]
    return out


def mub_lines() -> LineSet:
    return LineSet(line_of(v) for v in mub_vectors())


def mub_bases() -> list[tuple[VecH, VecH]]:
    """The five orthonormal bases (scaled by 1/sqrt2 where needed)."""
    vs = mub_vectors()
    out = [(vs[0], vs[1])]
    for n in range(2, 10, 2):
        out.append((vs[n].scale(INV_SQRT2), vs[n + 1].scale(INV_SQRT2)))
    return out


def mub_pairs() -> list[frozenset[Line]]:
    ls = list(mub_lines())
    return [frozenset(ls[n:n + 2]) for n in range(0, 10, 2)]


def roots40_vectors() -> list[VecH]:
    q8 = sorted(Q8, key=str)
    out = []
    seen = set()
    for n, p in enumerate(q8):
        for q in q8[n + 1:]:
            s = p + q
            if s.is_zero():
                continue
            line = line_of(VecH(SQRT2, s))
            if line not in seen:
                seen.add(line)
                out.append(VecH(SQRT2, s))
    for q in q8:
        out.append(VecH(1 + SQRT2, q))
    for q in q8:
        out.append(VecH(q, 1 + SQRT2))
    return out


def roots40() -> LineSet:
    return LineSet(line_of(v) for v in roots40_vectors())


def _F() -> MatH:
    return _m(1, 1, 1, -1, INV_SQRT2)


def _c_j() -> MatH:
    return _m((1 + j) * HALF, (j - 1) * HALF, (j - 1) * HALF, (1 + j) * HALF)


def _t() -> MatH:
    return _m((j - k) * HALF, (1 - i) * HALF, (-j - k) * HALF, (1 + i) * HALF)


def _anti(b: Quat) -> MatH:
    return _m(0, b, b.inv(), 0)


def _K_gens() -> list[MatH]:
    return [MatH.diag(-1, 1), _m(0, 1, 1, 0), _m(0, i, -i, 0), _m(0, j, -j, 0), _m(0, k, -k, 0)]


def _fiveorder2() -> list[MatH]:
    return [_anti(b * INV_SQRT2) for b in (1 + i, 1 - i, 1 + j, 1 + k)] + [_F()]


def _conjugator(q: Quat) -> MatH:
    return _m(1, q, q, 1, INV_SQRT2)


_G_NAME = re.compile(r"^G\(\s*([ijk])\s*,\s*([ijk])\s*\)$")
_UNITS = {"i": i, "j": j, "k": k}


def _entries() -> dict[str, Callable[[], CatalogEntry]]:
    E = CatalogEntry
    out: dict[str, Callable[[], CatalogEntry]] = {}

    def add(name, kind, anchor, build, **kw):
        out[name] = lambda: E(name, kind, build(), anchor, **kw)

    # groups
    add("K", "group-generators", "imprimitive group of the five MUBs: one diagonal and four antidiagonal reflections",
        _K_gens, order=32)
    add("P0", "group-generators", "K extended by the Fourier matrix, imprimitive with three systems",
        lambda: [_m(0, 1, 1, 0), _m(0, i, -i, 0), _m(0, j, -j, 0), _F()], order=64, ambient="P3")
    add("P1", "group-generators", "generating reflections of P1 = G(i,j)",
        lambda: [MatH.diag(i, 1), _c_j()], order=320, ambient="P2")
    add("P2", "group-generators", "generating reflections of P2",
        lambda: [MatH.diag(i, 1), MatH.diag(j, 1), _c_j()], order=1920, ambient="P3")
    add("P3", "group-generators", "generating reflections of P3",
        lambda: [MatH.diag(i, 1), MatH.diag(j, 1), _F()], order=3840)
    add("P3_fiveorder2", "group-generators", "P3 from five order-two reflections", _fiveorder2, order=3840)
    add("P3_from_P2", "group-generators", "P2 with the order-two reflection of root (1, (1+i)/sqrt2)",
        lambda: [MatH.diag(i, 1), MatH.diag(j, 1), _c_j(), _m(0, -1 + i, -1 - i, 0, INV_SQRT2)], order=3840)
    add("Kt", "group-generators", "K with the order-ten element t", lambda: _K_gens() + [_t()], order=160)
    add("H32", "group-generators", "diagonal reducible subgroup of P1 (10 lines)",
        lambda: [MatH.diag(i, 1), MatH.diag(i, i), MatH.diag(j, j)], order=32, ambient="P1", meta={"lines": 10})
    add("H20", "group-generators", "reducible subgroup of P1 fixing w (16 lines)",
        lambda: [MatH.diag(j, k), _m(i - j, i - j, i - j, -i + j, HALF)], order=20, ambient="P1", meta={"lines": 16})
    add("H16a", "group-generators", "reducible subgroup of P1 fixing (sqrt2, 1+i) (20 lines)",
        lambda: [MatH.diag(j, k), _m(0, j, j, 0)], order=16, ambient="P1", meta={"lines": 20})
    add("H16b", "group-generators", "reducible subgroup of P1 fixing (sqrt2, 1+j) (20 lines)",
        lambda: [MatH.diag(j, j), _m(i - k, 1 - j, 1 + j, -i - k, HALF)], order=16, ambient="P1", meta={"lines": 20})
    add("H80_P2", "group-generators", "order-24 subgroup of P2 fixing (sqrt3, 1+i+j) (80 lines)",
        lambda: [_m(0, 1 - i - j + k, 1 + i + j + k, 0, HALF), _m(i + j, i - j, i - j, i + j, HALF)],
        order=24, ambient="P2", meta={"lines": 80})
    add("H48_P3", "group-generators", "order-48 subgroup of P3 fixing (3, 1+i+j) (80 lines)",
        lambda: [MatH.diag(i + j, i + j) * INV_SQRT2, _m(1 + i, 1 + i, -1 + i, 1 - i, HALF)],
        order=48, ambient="P3", meta={"lines": 80})
    add("G8_family", "group-generators", "stabilizer in P1 of (sqrt3, 1+i+j), with a continuous family of fixed lines",
        lambda: [_m(0, k, k, 0), _m(i + k, 1 + j, -1 + j, i - k, HALF)], order=8, ambient="P1")
    add("G8_diag", "group-generators", "order-8 group <iI, antidiag(j, j)> with a continuous family of eigenvectors",
        lambda: [MatH.diag(i, i), _m(0, j, j, 0)], order=8)
    for a in "ijk":
        for b in "ijk":
            if a != b:
                add(f"G({a},{b})", "group-generators", f"G_(q1,q2) with q1={a}, q2={b}",
                    (lambda a=a, b=b: _gq_gens(_UNITS[a], _UNITS[b])), order=320, ambient="P2")
    # single matrices
    add("F", "matrix", "Fourier matrix, an order-two reflection in P3", _F)
    add("t", "matrix", "order-ten element obtained from T", _t)
    add("c_j", "matrix", "reflection r_{(1,1),j}", _c_j)
    for q, nm in ((i, "i"), (j, "j"), (k, "k")):
        add(f"M_{nm}", "matrix", f"conjugator rendering P0 monomial (q={nm})", (lambda q=q: _conjugator(q)))
    for nm in ("A1", "A2", "A3", "A4", "S", "T", "R", "A", "B", "P_perm", "iA2", "iA3", "R2", "SB", "iA", "BR", "AB"):
        add(nm, "matrix", f"Blichfeldt collineation matrix {nm} in M_4(C)", (lambda nm=nm: blichfeldt(nm)))
    add("KC_real", "group-generators", "<A1, A2, A3, A4> (indicator +1)",
        lambda: [blichfeldt(n) for n in ("A1", "A2", "A3", "A4")], order=32)
    add("KC_quat", "group-generators", "<A1, iA2, iA3, A4> (indicator -1)",
        lambda: [blichfeldt(n) for n in ("A1", "iA2", "iA3", "A4")], order=32)
    # vectors
    add("e1", "vector", "first standard basis vector, fiducial of the MUB lines", lambda: VecH(1, 0))
    add("w", "vector", "fiducial of the 16-line system", lambda: VecH(1 + SQRT5, 1 + i + j + k), fixed_by="H20")
    add("wperp", "vector", "fiducial orthogonal to w", lambda: VecH(-1 + i + j + k, 1 + SQRT5), fixed_by="H20")
    add("f20a", "vector", "fiducial of a 20-line system", lambda: VecH(SQRT2, 1 + i), fixed_by="H16a")
    add("f20b", "vector", "fiducial of the other 20-line system", lambda: VecH(SQRT2, 1 + j), fixed_by="H16b")
    add("f80", "vector", "fiducial of the 80-line P2 system", lambda: VecH(SQRT3, 1 + i + j), fixed_by="H80_P2")
    add("f80b", "vector", "fiducial orthogonal to f80", lambda: VecH(-1 + i + j, SQRT3), fixed_by="H80_P2")
    add("f80_P3", "vector", "fiducial of the 80-line system with angles m/8", lambda: VecH(3, 1 + i + j),
        fixed_by="H48_P3")
    add("f80_P3b", "vector", "fiducial orthogonal to f80_P3", lambda: VecH(-1 + i + j, 3), fixed_by="H48_P3")
    add("f2", "vector", "point (sqrt2, 1+i) with nontrivial pointwise stabilizer in P3", lambda: VecH(SQRT2, 1 + i))
    # line sets
    add("mub10", "line-set", "the ten lines of the five quaternionic MUBs", mub_lines)
    add("roots40", "line-set", "the forty order-two root lines of P3", roots40)
    return out


def _gq_gens(q1: Quat, q2: Quat) -> list[MatH]:
    from .linalg import VecH as _V
    from .reflections import make_reflection

    return [make_reflection(_V(1, 0), q1), make_reflection(_V(1, 1), q2)]


@lru_cache(maxsize=None)
def _registry() -> dict[str, Callable[[], CatalogEntry]]:
    return _entries()


def names() -> list[str]:
    return list(_registry())


def _canonical_name(name: str) -> str:
    m = _G_NAME.match(name.replace(" ", ""))
    if m:
        return f"G({m.group(1)},{m.group(2)})"
    return name


@lru_cache(maxsize=None)
def get(name: str) -> CatalogEntry:
    name = _canonical_name(name)
    try:
        return _registry()[name]()
    except KeyError:
        raise UnknownName(name) from None


@lru_cache(maxsize=None)
def group(name: str) -> MatGroup:
    e = get(name)
    if e.kind != "group-generators":
        raise ValueError(f"{name} is a {e.kind}, not a group")
    return MatGroup(e.payload, name=e.name)


def vector(name: str) -> VecH:
    e = get(name)
    if e.kind != "vector":
        raise ValueError(f"{name} is a {e.kind}, not a vector")
    return e.payload


def matrix(name: str):
    e = get(name)
    if e.kind != "matrix":
        raise ValueError(f"{name} is a {e.kind}, not a matrix")
    return e.payload


def line(name: str) -> Line:
    return line_of(vector(name))


# the line systems of the maximal reducible subgroups ------------------------

@dataclass(frozen=True)
class Table3Row:
    group: str
    fiducial: str
    stabilizer_order: int
    angles: tuple[Fraction, ...]
    lines: int


def _fr(*xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


ANGLES_MUB = _fr(0, "1/2")
ANGLES_16 = _fr("1/5", "3/5")
ANGLES_32 = _fr(0, "1/5", "2/5", "3/5", "4/5")
ANGLES_20 = _fr(0, "1/4", "1/2", "3/4")
ANGLES_SIXTHS = tuple(Fraction(n, 6) for n in range(6))
ANGLES_EIGHTHS = tuple(Fraction(n, 8) for n in range(8))

TABLE3: tuple[Table3Row, ...] = (
    Table3Row("P1", "e1", 32, ANGLES_MUB, 10),
    Table3Row("P2", "e1", 192, ANGLES_MUB, 10),
    Table3Row("P3", "e1", 384, ANGLES_MUB, 10),
    Table3Row("P1", "w", 20, ANGLES_16, 16),
    Table3Row("P2", "w", 120, ANGLES_16, 16),
    Table3Row("P1", "wperp", 20, ANGLES_16, 16),
    Table3Row("P2", "wperp", 120, ANGLES_16, 16),
    Table3Row("P3", "w", 120, ANGLES_32, 32),
    Table3Row("P1", "f20a", 16, ANGLES_20, 20),
    Table3Row("P1", "f20b", 16, ANGLES_20, 20),
    Table3Row("P2", "f20a", 48, ANGLES_20, 40),
    Table3Row("P3", "f20a", 96, ANGLES_20, 40),
    Table3Row("P1", "f80", 8, ANGLES_SIXTHS, 40),
    Table3Row("P2", "f80", 24, ANGLES_SIXTHS, 80),
    Table3Row("P3", "f80", 48, ANGLES_SIXTHS, 80),
    Table3Row("P1", "f80_P3", 4, ANGLES_EIGHTHS, 80),
    Table3Row("P2", "f80_P3", 24, ANGLES_EIGHTHS, 80),
    Table3Row("P3", "f80_P3", 48, ANGLES_EIGHTHS, 80),
)


# verification and export ---------------------------------------------------

def _payload_text(e: CatalogEntry) -> str:
    p = e.payload
    if e.kind == "matrix":
        return repr(p.to_json())
    if e.kind == "group-generators":
        return repr([m.to_json() for m in p])
    if e.kind == "vector":
        return repr(p.to_json())
    return p.to_text()


def export(name: str) -> str:
    """Entry payload in the module file formats (JSON for matrices/vectors, text for line sets)."""
    import json

    e = get(name)
    if e.kind == "line-set":
        return e.payload.to_text()
    if e.kind == "group-generators":
        return json.dumps({"generators": [m.to_json() for m in e.payload]}, indent=1)
    return json.dumps(e.payload.to_json(), indent=1)


def checksum() -> str:
    """SHA-256 over the canonical text of every entry, in registry order."""
    h = hashlib.sha256()
    for n in names():
        e = get(n)
        h.update(f"{n}|{e.kind}|{_payload_text(e)}\n".encode())
    return h.hexdigest()


@dataclass
class CatalogCheck:
    name: str
    check: str
    passed: bool
    detail: str = ""


def verify_catalog() -> list[CatalogCheck]:
    """Closure orders, containment in the ambient group, fixed fiducials, unitarity."""
    out: list[CatalogCheck] = []
    for n in names():
        e = get(n)
        if e.kind == "matrix":
            m = e.payload
            ok = m.is_unitary() if isinstance(m, MatC) else is_unitary(m)
            out.append(CatalogCheck(n, "unitary", ok))
        elif e.kind == "group-generators":
            unitary = all(m.is_unitary() if isinstance(m, MatC) else is_unitary(m) for m in e.payload)
            out.append(CatalogCheck(n, "generators unitary", unitary))
            if e.order is not None:
                g = group(n)
                out.append(CatalogCheck(n, "order", g.order == e.order, f"{g.order} (expected {e.order})"))
            if e.ambient is not None:
                out.append(CatalogCheck(n, f"subgroup of {e.ambient}", group(n).is_subgroup_of(group(e.ambient))))
        elif e.kind == "vector":
            ok = not e.payload.is_zero()
            out.append(CatalogCheck(n, "nonzero", ok))
            if e.fixed_by is not None:
                fixed = verify_fixed_line(group(e.fixed_by), line_of(e.payload))
                out.append(CatalogCheck(n, f"line fixed by {e.fixed_by}", fixed))
        else:
            out.append(CatalogCheck(n, "nonempty", len(e.payload) > 0))
    return out

"""Quaternionic reflections: construction, detection, censuses, imprimitivity.

A unitary reflection with root ``a`` and scalar ``xi`` (|xi| = 1, xi != 1)
fixes the orthogonal complement of ``a`` pointwise and sends ``a`` to
``a xi``.  Scalars are reported for the canonical root representative
(first nonzero coordinate 1), so they are deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactfield import ONE
from .groups import MatGroup
from .linalg import MatH, VecH, inner, kernel_rank_2x2, norm2
from .lines import Line, LineSet, act, line_of, orbit_under, orthocomplement
from .quaternion import (Q_I, Q_J, Q_K, Q_ONE, Q_ZERO, Quat, is_abelian, is_reflection_system,
                         unit_closure)


class NotAReflection(ValueError):
    pass


@dataclass(frozen=True)
class Reflection:
    matrix: MatH
    root: Line
    scalar: Quat
    order: int


def make_reflection(a: VecH, xi: Quat) -> MatH:
    """r_{a,xi} = I - a (1 - xi) a* / <a, a>."""
    if a.is_zero():
        raise ValueError("zero root vector")
    if xi.nrd() != ONE:
        raise ValueError("reflection scalar must have norm 1")
    if xi == Q_ONE:
        raise ValueError("reflection scalar must differ from 1")
    s = (Q_ONE - xi) / norm2(a)
    ent = [[Q_ONE if r == c else Q_ZERO for c in range(2)] for r in range(2)]
    for r, ar in enumerate(a.entries):
        for c, ac in enumerate(a.entries):
            ent[r][c] = ent[r][c] - ar * s * ac.conj()
    return MatH(ent)


def detect_reflection(g: MatH) -> Reflection:
    """Root line, scalar and order of a reflection; raises NotAReflection otherwise."""
    rank, kern = kernel_rank_2x2(MatH.identity() - g)
    if rank != 1:
        raise NotAReflection("identity" if rank == 0 else "I - g has full rank")
    root = orthocomplement(line_of(kern))
    a = root.vector()
    xi = inner(a, g * a) / norm2(a)
    if g * a != a.scale(xi):
        raise NotAReflection("root is not an eigenvector (g is not unitary)")
    order = xi.order()
    if order is None:
        raise NotAReflection("scalar of infinite order")
    return Reflection(g, root, xi, order)


def is_reflection(g: MatH) -> bool:
    try:
        detect_reflection(g)
    except NotAReflection:
        return False
    return True


def reflection_census(G: MatGroup) -> list[Reflection]:
    cached = G.__dict__.get("_census")
    if cached is None:
        cached = []
        for g in G.elements:
            try:
                cached.append(detect_reflection(g))
            except NotAReflection:
                pass
        G._census = cached
    return list(cached)


def root_lines(G: MatGroup | Sequence[Reflection]) -> LineSet:
    refs = reflection_census(G) if isinstance(G, MatGroup) else G
    return LineSet(r.root for r in refs)


def scalar_group_label(scalars: Iterable[Quat]) -> str:
    """C_n for cyclic groups, Q8 for the quaternion group, else '<order>nonabelian'."""
    grp = unit_closure(set(scalars) | {Q_ONE})
    n = len(grp)
    if is_abelian(grp):
        if any(q.order() == n for q in grp):
            return f"C{n}"
        return f"abelian{n}"
    if n == 8:
        return "Q8"
    return f"nonabelian{n}"


@dataclass
class ReflectionType:
    orbits: list[tuple[int, str]]
    total: int = 0  # number of reflections

    def __str__(self) -> str:
        return ", ".join(f"{n}{lbl}" for n, lbl in self.orbits)

    def counter(self) -> Counter:
        return Counter(self.orbits)


def reflection_type(G: MatGroup, census: Sequence[Reflection] | None = None) -> ReflectionType:
    """Orbits of the root subgroups R_a under conjugation (= the line action on roots)."""
    census = reflection_census(G) if census is None else census
    scalars: dict[Line, list[Quat]] = {}
    for r in census:
        scalars.setdefault(r.root, []).append(r.scalar)
    remaining = LineSet(scalars)
    orbits = []
    done = set()
    for l in remaining:
        if l in done:
            continue
        orb = orbit_under(G.generators, l)
        done |= orb.as_set()
        orbits.append((len(orb), scalar_group_label(scalars[l])))
    return ReflectionType(orbits, len(census))


def monomial_subgroup(G: MatGroup) -> MatGroup:
    gens = [r.matrix for r in reflection_census(G) if r.matrix.is_monomial()]
    if not gens:
        return MatGroup([MatH.identity()], name=f"G_M({G.name})")
    return MatGroup(gens, name=f"G_M({G.name})")


@dataclass
class ImprimitiveData:
    L: frozenset[Quat]
    Hdiag: frozenset[Quat]

    @property
    def K(self) -> frozenset[Quat]:
        return unit_closure(self.L)


def imprimitive_data(G: MatGroup) -> ImprimitiveData:
    """(L, H) of the canonical form G_K(L, H) of a monomial reflection group."""
    if not all(g.is_monomial() for g in G.elements):
        raise ValueError("imprimitive_data needs a monomial group")
    L = {Q_ONE}
    H = {Q_ONE}
    for r in reflection_census(G):
        m = r.matrix
        if m.is_antidiagonal():
            b = m[0, 1]
            if m[1, 0] == b.inv():
                L.add(b)
        elif m[1, 1] == Q_ONE:
            H.add(m[0, 0])
    L, H = frozenset(L), frozenset(H)
    if not is_reflection_system(L):
        raise AssertionError("L fails the reflection-system axioms")
    K = unit_closure(L)
    if not H <= K or any(k * h * k.inv() not in H for k in K for h in H):
        raise AssertionError("H is not a normal subgroup of <L>")
    return ImprimitiveData(L, H)


def imprimitivity_systems(G: MatGroup, candidates: Iterable[Line] | None = None) -> list[frozenset[Line]]:
    """Orthogonal pairs {l, l-perp} (l among candidates) mapped to themselves by every generator.

    Complete only relative to the candidate set; an empty answer is not a
    proof of primitivity.
    """
    if candidates is None:
        from .catalog import mub_lines

        candidates = list(root_lines(G)) + list(mub_lines())
    out: list[frozenset[Line]] = []
    for l in candidates:
        pair = frozenset({l, orthocomplement(l)})
        if pair in out:
            continue
        if all(frozenset(act(g, x) for x in pair) == pair for g in G.generators):
            out.append(pair)
    return out


def g_q1q2(q1: Quat, q2: Quat) -> MatGroup:
    """<r_{(1,0),q1}, r_{(1,1),q2}> for distinct q1, q2 in {i, j, k}."""
    units = (Q_I, Q_J, Q_K)
    if q1 not in units or q2 not in units or q1 == q2:
        raise ValueError("need distinct q1, q2 among i, j, k")
    gens = [make_reflection(VecH(1, 0), q1), make_reflection(VecH(1, 1), q2)]
    return MatGroup(gens, name=f"G({q1},{q2})")


def reflection_subgroup(G: MatGroup) -> MatGroup:
    refs = [r.matrix for r in reflection_census(G)]
    if not refs:
        return MatGroup([MatH.identity()])
    return MatGroup(refs)


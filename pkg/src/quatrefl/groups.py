"""Finite matrix groups: closure, conjugates, permutation actions, stabilizers.

Elements are kept as normalized integer coordinate rows (see
``MatH.to_flat``).  Closure is a breadth-first search in which a whole
frontier is multiplied by a generator with one integer matrix product;
each element remembers its BFS parent, so homomorphisms given on the
generators extend to every element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _batch
from .exactfield import FieldElem
from .linalg import MatH, VecH, inner, norm2
from .lines import Line, act, orbit_under
from .quaternion import CapExceeded

DEFAULT_CAP = 8192

_BASIS: dict[type, list] = {}


def _basis(kind: type) -> list:
    if kind not in _BASIS:
        _BASIS[kind] = kind.basis()
    return _BASIS[kind]


def right_matrix(g) -> tuple[np.ndarray, int]:
    """Integer matrix R with flat(h g) = flat(h) @ R / den."""
    return _batch.linear_map_matrix([(e * g).to_flat() for e in _basis(type(g))])


def left_matrix(g) -> tuple[np.ndarray, int]:
    """Integer matrix L with flat(g h) = flat(h) @ L / den."""
    return _batch.linear_map_matrix([(g * e).to_flat() for e in _basis(type(g))])


def _flat_key(m) -> bytes | tuple:
    ints, den = m.to_flat()
    return _batch.row_key(ints, den)


class MatGroup:
    """A finite group of MatH or MatC given by generators, closed on construction."""

    def __init__(self, generators: Iterable, cap: int = DEFAULT_CAP, name: str | None = None):
        gens = list(generators)
        if not gens:
            raise ValueError("a group needs at least one generator")
        kind = type(gens[0])
        if any(type(g) is not kind for g in gens):
            raise TypeError("generators must all be MatH or all be MatC")
        self.kind = kind
        self.side = "quaternionic" if kind is MatH else "complex"
        self.generators = tuple(gens)
        self.name = name
        self._close(cap)

    def _close(self, cap: int) -> None:
        ident = self.kind.identity()
        i_ints, i_den = ident.to_flat()
        rights = [right_matrix(g) for g in self.generators]
        index = {_batch.row_key(i_ints, i_den): 0}
        parent = [(-1, -1)]
        chunks = [np.array([i_ints], dtype=np.int64)]
        den_chunks = [np.array([i_den], dtype=np.int64)]
        frontier = chunks[0]
        fden = den_chunks[0]
        fids = np.array([0])
        while len(fids):
            new_rows, new_dens, new_ids = [], [], []
            for gi, (r, rden) in enumerate(rights):
                p = _batch.matmul(frontier, r)
                pd = fden * rden
                p, pd = _batch.normalize(p, pd)
                for row, key in enumerate(_batch.row_keys(p, pd)):
                    if key in index:
                        continue
                    idx = len(parent)
                    if idx >= cap:
                        raise CapExceeded(f"group closure exceeded {cap} elements")
                    index[key] = idx
                    parent.append((int(fids[row]), gi))
                    new_rows.append(p[row])
                    new_dens.append(pd[row])
                    new_ids.append(idx)
            if not new_ids:
                break
            frontier = np.array(new_rows)
            fden = np.array(new_dens)
            fids = np.array(new_ids)
            chunks.append(frontier)
            den_chunks.append(fden)
        self._index = index
        self._parent = parent
        self.flat = np.concatenate(chunks, axis=0)
        self.den = np.concatenate(den_chunks, axis=0)

    # basic protocol -----------------------------------------------------
    @property
    def order(self) -> int:
        return len(self._parent)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, m) -> bool:
        return type(m) is self.kind and _flat_key(m) in self._index

    def index_of(self, m) -> int:
        return self._index[_flat_key(m)]

    @cached_property
    def elements(self) -> list:
        return [self.kind.from_flat(r, d) for r, d in zip(self.flat, self.den)]

    def __iter__(self):
        return iter(self.elements)

    def keys(self) -> frozenset:
        return frozenset(self._index)

    def __repr__(self) -> str:
        label = self.name or "MatGroup"
        return f"<{label}: order {self.order}, {len(self.generators)} generators>"

    def is_subgroup_of(self, other: "MatGroup") -> bool:
        return self.kind is other.kind and all(k in other._index for k in self._index)

    def same_elements(self, other: "MatGroup") -> bool:
        return self.kind is other.kind and self.keys() == other.keys()

    def extend_hom(self, gen_images: Sequence, compose: Callable, identity) -> list:
        """Images of all elements under the homomorphism given on generators.

        ``compose(a, b)`` must return the image of x*y from the images a of x
        and b of y.
        """
        images = [identity]
        for p, gi in self._parent[1:]:
            images.append(compose(images[p], gen_images[gi]))
        return images

    def word(self, idx: int) -> list[int]:
        """Generator indices whose product (left to right) is element ``idx``."""
        out = []
        while idx > 0:
            idx, gi = self._parent[idx]
            out.append(gi)
        return out[::-1]

    def transform(self, mat: np.ndarray, mat_den: int) -> tuple[np.ndarray, np.ndarray]:
        """Apply a Q-linear map (as a right-multiplied integer matrix) to every element."""
        p = _batch.matmul(self.flat, mat)
        pd = self.den * mat_den
        return _batch.normalize(p, np.asarray(pd))


def closure(gens: Iterable, cap: int = DEFAULT_CAP, name: str | None = None) -> MatGroup:
    return MatGroup(gens, cap=cap, name=name)


def subgroup_from_indices(G: MatGroup, indices: Sequence[int], name: str | None = None) -> MatGroup:
    """The subgroup of G whose elements are G.elements[n] for n in ``indices``.

    The index set must already be a subgroup.  Generators are picked greedily
    so the closure stays cheap.
    """
    indices = list(indices)
    wanted = {_batch.row_key(G.flat[n], G.den[n]) for n in indices}
    gens: list = []
    H: MatGroup | None = None
    for n in indices:
        key = _batch.row_key(G.flat[n], G.den[n])
        if H is not None and key in H._index:
            continue
        m = G.kind.from_flat(G.flat[n], G.den[n])
        if H is None and m == G.kind.identity():
            continue
        gens.append(m)
        try:
            H = MatGroup(gens, cap=len(wanted), name=name)
        except CapExceeded:
            raise ValueError("index set is not a subgroup") from None
        if H.order == len(wanted):
            break
    if H is None:
        H = MatGroup([G.kind.identity()], name=name)
    if H.keys() != wanted:
        raise ValueError("index set is not a subgroup")
    return H


# conjugation -----------------------------------------------------------

def _conjugation_matrix(s) -> tuple[np.ndarray, int]:
    r, rd = right_matrix(s.inverse())
    l, ld = left_matrix(s)
    return _batch.matmul(r, l), rd * ld


def subgroup_conjugates(G: MatGroup, H: MatGroup) -> list[frozenset]:
    """Distinct element sets s H s^-1, s in G (BFS over conjugation by generators)."""
    if not H.is_subgroup_of(G):
        raise ValueError(f"{H!r} is not contained in {G!r}")
    conj = [_conjugation_matrix(s) for s in G.generators]
    start = (H.flat, H.den)
    seen = {H.keys(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for flat, den in frontier:
            for m, md in conj:
                p = _batch.matmul(flat, m)
                p, pd = _batch.normalize(p, den * md)
                ks = frozenset(_batch.row_keys(p, pd))
                if ks not in seen:
                    seen[ks] = (p, pd)
                    nxt.append((p, pd))
        frontier = nxt
    return list(seen)


def count_conjugates(G: MatGroup, H: MatGroup) -> int:
    return len(subgroup_conjugates(G, H))


def is_normal(G: MatGroup, H: MatGroup) -> bool:
    return count_conjugates(G, H) == 1


# permutation actions ---------------------------------------------------

def perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Permutation of (x*y) from those of x and y: x acts after y."""
    return tuple(p[i] for i in q)


def perm_closure(gens: Sequence[tuple[int, ...]], cap: int = 10 ** 6) -> set[tuple[int, ...]]:
    n = len(gens[0]) if gens else 0
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = perm_compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        if len(seen) > cap:
            raise CapExceeded("permutation group too large")
        frontier = nxt
    return seen


def perm_order(p: tuple[int, ...]) -> int:
    order = 1
    seen = set()
    for start in range(len(p)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def cycle_notation(p: Sequence[int]) -> str:
    """Cycle notation with 1-based points, e.g. ``(3 6 4 5)(7 9 8 10)``; identity is ``()``."""
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


@dataclass
class PermImage:
    degree: int
    image_order: int
    generator_perms: list[tuple[int, ...]]
    kernel_order: int
    kernel: list[int] = field(default_factory=list, repr=False)
    element_perms: list[tuple[int, ...]] = field(default_factory=list, repr=False)

    def one_line(self, n: int) -> tuple[int, ...]:
        """1-based one-line notation of generator n."""
        return tuple(x + 1 for x in self.generator_perms[n])

    def cycles(self, n: int) -> str:
        return cycle_notation(self.generator_perms[n])

    def image_elements(self) -> set[tuple[int, ...]]:
        return set(self.element_perms)


def perm_action(G: MatGroup, points: Sequence, action: Callable | None = None) -> PermImage:
    """Permutation representation of G on ``points`` (lines, or pairs of lines).

    Pairs are given as 2-element frozensets of lines and acted on setwise.
    """
    points = list(points)
    if action is None:
        def action(g, pt):
            if isinstance(pt, frozenset):
                return frozenset(act(g, l) for l in pt)
            return act(g, pt)
    pos = {pt: n for n, pt in enumerate(points)}
    gen_perms = []
    for g in G.generators:
        perm = []
        for pt in points:
            img = action(g, pt)
            if img not in pos:
                raise ValueError(f"{g!r} moves {pt!r} outside the point set")
            perm.append(pos[img])
        gen_perms.append(tuple(perm))
    ident = tuple(range(len(points)))
    elem_perms = G.extend_hom(gen_perms, perm_compose, ident)
    kernel = [n for n, p in enumerate(elem_perms) if p == ident]
    image = set(elem_perms)
    if len(image) * len(kernel) != G.order:
        raise AssertionError("image and kernel orders are inconsistent")
    return PermImage(len(points), len(image), gen_perms, len(kernel), kernel, elem_perms)


# stabilizers -------------------------------------------------------------

def _vec_flat(v: VecH) -> tuple[list[int], int]:
    from .linalg import _flatten_fields

    ints, den = _flatten_fields([f for q in v.entries for f in q.parts])
    g = math.gcd(*ints, den)
    return [x // g for x in ints], den // g


def _quat_flat(q) -> tuple[list[int], int]:
    from .linalg import _flatten_fields

    return _flatten_fields(list(q.parts))


def apply_all(G: MatGroup, v: VecH) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates of g v for every element g (rows in element order)."""
    mat, mden = _batch.linear_map_matrix([_vec_flat(e * v) for e in _basis(MatH)])
    return G.transform(mat, mden)


def inner_with_images(G: MatGroup, v: VecH) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates of <v, g v> for every g, as (N, 4, 8) numerators and (N,) denominators."""
    mat, mden = _batch.linear_map_matrix([_quat_flat(inner(v, e * v)) for e in _basis(MatH)])
    p, pd = G.transform(mat, mden)
    return p.reshape(len(p), 4, -1), pd


def fixes_line_mask(G: MatGroup, v: VecH) -> list[bool]:
    """Per element: |<v, g v>|^2 == <v, v>^2 (equality in Cauchy-Schwarz, g unitary)."""
    q, qd = inner_with_images(G, v)
    n = _batch.nrd_rows(q)
    target = norm2(v) ** 2
    out = []
    for row, d in zip(n, qd):
        out.append(FieldElem._raw([int(x) for x in row], int(d) ** 2) == target)
    return out


def line_stabilizer(G: MatGroup, l: Line) -> MatGroup:
    mask = fixes_line_mask(G, l.vector())
    return subgroup_from_indices(G, [n for n, ok in enumerate(mask) if ok], name=f"Stab({G.name}, {l})")


def pointwise_stabilizer(G: MatGroup, v: VecH) -> MatGroup:
    p, pd = apply_all(G, v)
    target = _batch.row_key(*_vec_flat(v))
    keys = _batch.row_keys(p, pd)
    idx = [n for n, k in enumerate(keys) if k == target]
    return subgroup_from_indices(G, idx, name=f"Fix({G.name}, {v})")


def verify_fixed_line(H: MatGroup, l: Line) -> bool:
    """Exact elementwise check that every h in H maps the line to itself."""
    v = l.vector()
    nv = norm2(v) ** 2
    return all(inner(v, h * v).nrd() == nv for h in H.elements)


def fixed_lines_among(H: MatGroup, candidates: Iterable[Line]) -> list[Line]:
    return [l for l in candidates if all(act(h, l) == l for h in H.generators)]


# irreducibility ------------------------------------------------------------

def real_span_rank(G: MatGroup) -> int:
    """Dimension of the real span of the elements inside M_2(H) (at most 16)."""
    basis: list[tuple[int, list[FieldElem]]] = []
    for g in G.elements:
        row = [f for q in g.entries for f in q.parts]
        for piv, b in basis:
            c = row[piv]
            if not c.is_zero():
                row = [x - c * y for x, y in zip(row, b)]
        piv = next((n for n, x in enumerate(row) if not x.is_zero()), None)
        if piv is None:
            continue
        inv = row[piv].inverse()
        row = [x * inv for x in row]
        basis = [(p, [x - b[piv] * y for x, y in zip(b, row)]) for p, b in basis]
        basis.append((piv, row))
        if len(basis) == 16:
            break
    return len(basis)


def is_irreducible(G: MatGroup) -> bool:
    if G.kind is not MatH:
        raise TypeError("irreducibility is tested on the quaternionic side")
    return real_span_rank(G) == 16


def orbit_stabilizer_ok(G: MatGroup, l: Line) -> bool:
    return len(orbit_under(G.generators, l)) * line_stabilizer(G, l).order == G.order


def element_orders(G: MatGroup) -> list[int]:
    return [g.order() for g in G.elements]


def scalar_subgroup(G: MatGroup) -> list:
    """Elements of the form q I."""
    return [g for g in G.elements if g.is_diagonal() and g[0, 0] == g[1, 1]]


import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatrefl import catalog as C
from quatrefl.groups import (CapExceeded, MatGroup, closure, count_conjugates, cycle_notation, is_normal,
                             line_stabilizer, orbit_stabilizer_ok, perm_action, perm_order, pointwise_stabilizer,
                             subgroup_from_indices)
from quatrefl.exactfield import FieldElem
from quatrefl.linalg import MatH, VecH
from quatrefl.lines import act, line_of, line_orbit
from quatrefl.quaternion import Q_I, Q_J, Quat
from quatrefl.symplectic import h_to_c


def naive_closure(gens):
    """Plain BFS over exact matrices, independent of the batched engine."""
    ident = MatH.identity()
    seen, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


@pytest.mark.parametrize("gens, order", [
    ([MatH.diag(Q_I, 1), MatH.diag(Q_J, 1)], 8),
    ([MatH.diag(Q_I, 1), MatH.diag(1, Q_J)], 16),
    ([MatH([[0, 1], [1, 0]]), MatH.diag(Q_I, 1)], 32),   # C4 wr C2
])
def test_small_closures(gens, order):
    assert closure(gens).order == order == len(naive_closure(gens))


@pytest.mark.parametrize("name", ["K", "P0"])
def test_engine_agrees_with_naive_closure(name):
    G = C.group(name)
    assert set(G.elements) == naive_closure(list(G.generators))


def test_complex_side_has_same_order():
    assert closure([h_to_c(g) for g in C.get("P1").payload]).order == 320


def test_P3_closure_time():
    start = time.perf_counter()
    G = closure(C.get("P3").payload)
    assert G.order == 3840
    assert time.perf_counter() - start < 10


def test_cap():
    r = Quat(FieldElem.rational(3) / 5, FieldElem.rational(4) / 5)
    with pytest.raises(CapExceeded):
        closure([MatH.diag(r, 1)], cap=100)


def test_mixed_generators_rejected():
    with pytest.raises(TypeError):
        MatGroup([MatH.identity(), h_to_c(MatH.identity())])


def test_words_reproduce_elements():
    G = C.group("P1")
    for idx in (0, 1, 17, G.order - 1):
        m = MatH.identity()
        for gi in G.word(idx):
            m = m * G.generators[gi]
        assert m == G.elements[idx]


def test_stabilizers():
    P3 = C.group("P3")
    S = line_stabilizer(P3, line_of(VecH(1, 0)))
    assert S.order * len(line_orbit(P3, line_of(VecH(1, 0)))) == P3.order
    assert all(act(g, line_of(VecH(1, 0))) == line_of(VecH(1, 0)) for g in S.elements)
    assert pointwise_stabilizer(P3, VecH(1, 0)).order == 8
    assert orbit_stabilizer_ok(P3, C.line("w"))


def test_subgroup_from_indices_validates():
    G = C.group("K")
    order4 = next(n for n, g in enumerate(G.elements) if g.order() == 4)
    with pytest.raises(ValueError):
        subgroup_from_indices(G, [0, order4])
    assert subgroup_from_indices(G, [0, 1]).order == 2   # {I, diag(-1, 1)}


def test_normality_and_conjugates():
    P1, P2 = C.group("P1"), C.group("P2")
    assert is_normal(P1, C.group("K"))
    assert count_conjugates(P2, P1) == 6


def test_perm_helpers():
    assert perm_order((1, 2, 0, 4, 3)) == 6
    assert cycle_notation((1, 2, 0, 4, 3)) == "(1 2 3)(4 5)"
    assert cycle_notation((0, 1)) == "()"


def test_perm_action_on_mub_lines():
    img = perm_action(C.group("P3"), list(C.mub_lines()))
    assert img.degree == 10 and img.image_order == 1920 and img.kernel_order == 2


@given(st.integers(0, 319), st.integers(0, 319))
def test_index_lookup_is_consistent(a, b):
    G = C.group("P1")
    x, y = G.elements[a], G.elements[b]
    assert G.elements[G.index_of(x * y)] == x * y

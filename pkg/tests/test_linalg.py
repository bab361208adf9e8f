import pytest
from hypothesis import given

from quatrefl import catalog as C
from quatrefl.exactfield import SQRT2
from quatrefl.linalg import (MatC, MatH, VecH, dump_matrices, h_inverse, inner, is_unitary, kernel_rank_2x2,
                             load_matrices, norm2)
from quatrefl.lines import line_of
from quatrefl.quaternion import Q_I, Q_J, Quat

from conftest import matrices, vectors

P3 = C.group("P3")


def test_kernel_of_identity_minus_F():
    rank, kern = kernel_rank_2x2(MatH.identity() - C.matrix("F"))
    assert rank == 1
    assert line_of(kern) == line_of(VecH(1 + SQRT2, 1))


def test_kernel_ranks():
    assert kernel_rank_2x2(MatH.identity())[0] == 2
    assert kernel_rank_2x2(MatH([[0, 0], [0, 0]]))[0] == 0
    # rank 1 over H even though the columns are not real multiples of each other
    rank, kern = kernel_rank_2x2(MatH([[1, Q_I], [Q_J, Q_J * Q_I]]))
    assert rank == 1 and MatH([[1, Q_I], [Q_J, Q_J * Q_I]]) * kern == VecH(0, 0)


def test_inverse_and_singular():
    m = MatH([[1, Q_I], [Q_J, 2]])
    assert m * h_inverse(m) == MatH.identity()
    with pytest.raises(ZeroDivisionError):
        h_inverse(MatH([[1, Q_I], [Q_J, Q_J * Q_I]]))


def test_monomial_predicates():
    assert MatH.diag(Q_I, 1).is_diagonal()
    assert MatH([[0, 1], [Q_J, 0]]).is_antidiagonal()
    assert not C.matrix("F").is_monomial()


def test_matrix_file_round_trip(tmp_path):
    mats = list(C.get("P3").payload)
    path = tmp_path / "gens.json"
    dump_matrices(mats, str(path))
    assert load_matrices(str(path)) == mats
    cm = [C.blichfeldt("A1"), C.blichfeldt("T")]
    dump_matrices(cm, str(tmp_path / "c.json"))
    assert load_matrices(str(tmp_path / "c.json")) == cm


def test_complex_permutation_matrix():
    p = MatC.permutation([3, 1, 2, 0])
    assert p * p == MatC.identity()
    assert p.is_unitary()


@given(matrices(), matrices())
def test_adjoint_reverses_products(a, b):
    assert (a * b).adjoint() == b.adjoint() * a.adjoint()


@given(matrices(), matrices(), vectors())
def test_action_is_compatible_with_products(a, b, v):
    assert (a * b) * v == a * (b * v)


@given(vectors(), vectors(), vectors())
def test_inner_is_sesquilinear(u, v, w):
    lam = Quat(1, 2, -1, 3)
    assert inner(u, v + w) == inner(u, v) + inner(u, w)
    assert inner(u, v.scale(lam)) == inner(u, v) * lam
    assert inner(u.scale(lam), v) == lam.conj() * inner(u, v)
    assert inner(v, u) == inner(u, v).conj()


@given(vectors(), vectors(), __import__("hypothesis").strategies.integers(0, P3.order - 1))
def test_unitary_invariance(v, w, idx):
    g = P3.elements[idx]
    assert is_unitary(g)
    assert inner(g * v, g * w) == inner(v, w)
    assert norm2(g * v) == norm2(v)

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatrefl import catalog as C
from quatrefl.designs import (BoundInapplicable, SamplingConfig, absolute_bound, c_t, design_potential,
                              design_report, frame_potential, is_tt_design, special_bound)
from quatrefl.exactfield import FieldElem
from quatrefl.linalg import VecH
from quatrefl.lines import angle, line_orbit

from conftest import vectors

fifth = FieldElem.rational(Fraction(1, 5))


def hoggar(d, a, b):
    """Special bound, straight from the closed form with Fractions."""
    m = 2 * d + 1
    return d * m * (1 - a) * (1 - b) / (3 - m * (a + b) + d * m * a * b)


def test_design_constants():
    assert c_t(2, 1) == FieldElem.rational(Fraction(1, 2))
    assert c_t(2, 2) == FieldElem.rational(Fraction(3, 10))
    assert c_t(2, 3) == fifth
    with pytest.raises(ValueError):
        c_t(0, 1)


def test_potential_of_K_orbit_at_strength_two():
    # K moves e1 only to e2, so the average is (1 + 0)/2 and c_2 = 3/10
    assert len(line_orbit(C.group("K"), C.line("e1"))) == 2
    assert design_potential(C.group("K"), VecH(1, 0), 2) == fifth


def test_sixteen_line_neighbour_counts():
    lines = list(line_orbit(C.group("P1"), C.line("w")))
    # a + b = 15, 1 + 3a/5 + b/5 = 16 c_1 = 8  =>  a = 10 at angle 3/5, b = 5 at angle 1/5
    for l in lines:
        angles = [angle(l, m) for m in lines if m != l]
        assert angles.count(FieldElem.rational(Fraction(3, 5))) == 10
        assert angles.count(fifth) == 5


def test_sixteen_line_report():
    rep = design_report(line_orbit(C.group("P1"), C.line("w")))
    assert rep.n == 16 and rep.t == 3
    assert rep.special_bound == 16 and rep.meets_special_bound
    assert rep.within_absolute_bound is True
    assert rep.regular_scheme


def test_eighty_line_report_has_no_absolute_verdict():
    rep = design_report(line_orbit(C.group("P2"), C.line("f80")))
    assert rep.n == 80 and rep.t == 3
    assert rep.within_absolute_bound is None
    assert rep.special_bound is None


def test_mub_lines_are_a_three_design():
    assert is_tt_design(C.mub_lines(), 3)
    assert frame_potential(C.mub_lines(), 1) == c_t(2, 1) * 100


def test_two_lines_are_not_a_design():
    assert not is_tt_design([C.line("e1"), C.line("w")], 1)
    with pytest.raises(ValueError):
        is_tt_design([], 1)


@pytest.mark.parametrize("a, b", [(Fraction(1, 5), Fraction(3, 5)), (Fraction(1, 4), Fraction(5, 8)),
                                  (Fraction(0), Fraction(1, 2))])
def test_special_bound_matches_closed_form(a, b):
    assert special_bound(2, a, b) == FieldElem.rational(hoggar(2, a, b))


def test_special_bound_values():
    assert special_bound(2, Fraction(1, 5), Fraction(3, 5)) == 16
    assert special_bound(2, Fraction(1, 4), Fraction(5, 8)) == 15
    assert absolute_bound(2) == 20
    with pytest.raises(BoundInapplicable):
        special_bound(2, Fraction(0), Fraction(3, 5))   # denominator 0


def test_sampling_is_seeded():
    cfg = SamplingConfig(samples=5)
    assert cfg.vectors() == cfg.vectors()
    assert SamplingConfig(samples=5, seed=1).vectors() != cfg.vectors()


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        design_potential(C.group("K"), VecH(0, 0), 1)


@given(vectors(), st.sampled_from([1, 2, 3]))
def test_P3_orbits_are_designs(v, t):
    assert design_potential(C.group("P3"), v, t).is_zero()


@given(vectors(), st.sampled_from([Fraction(2), Fraction(-1, 3), Fraction(5, 7)]))
def test_potential_is_homogeneous(v, lam):
    G = C.group("K")
    # |<x, gx>|^(2t) has degree 4t in x
    assert design_potential(G, v.scale(lam), 2) == design_potential(G, v, 2) * FieldElem.rational(lam) ** 8


@given(vectors())
def test_potential_is_never_negative(v):
    assert design_potential(C.group("K"), v, 2) >= 0

"""Hypothesis strategies shared by the property tests, plus the acceptance summary hook."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from quatrefl.exactfield import DIM, FieldElem
from quatrefl.linalg import MatH, VecH
from quatrefl.quaternion import Quat

settings.register_profile("quatrefl", max_examples=60, deadline=None)
settings.load_profile("quatrefl")

small_fraction = st.fractions(min_value=-6, max_value=6, max_denominator=7)


@st.composite
def field_elems(draw, max_terms: int = 3) -> FieldElem:
    coeffs = [Fraction(0)] * DIM
    for idx in draw(st.lists(st.integers(0, DIM - 1), max_size=max_terms, unique=True)):
        coeffs[idx] = draw(small_fraction)
    return FieldElem(coeffs)


def nonzero(strategy):
    return strategy.filter(lambda x: not x.is_zero())


@st.composite
def rational_quats(draw) -> Quat:
    return Quat(*(draw(small_fraction) for _ in range(4)))


@st.composite
def quats(draw) -> Quat:
    return Quat(*(draw(field_elems(2)) for _ in range(4)))


@st.composite
def vectors(draw, entries=None) -> VecH:
    entries = entries or rational_quats()
    return draw(nonzero(st.builds(VecH, entries, entries)))


@st.composite
def matrices(draw) -> MatH:
    return MatH([[draw(rational_quats()) for _ in range(2)] for _ in range(2)])


# acceptance summary ----------------------------------------------------------------------------

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def acceptance_line():
    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] criterion {number:2d}: {title}"
        ACCEPTANCE_LINES[number] = line + (f"  ({detail})" if detail else "")
        print(ACCEPTANCE_LINES[number])

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])

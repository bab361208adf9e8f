"""Acceptance criteria 1-13, one printed PASS/FAIL line each.

Every criterion is backed by records from :mod:`quatrefl.checks`; a
criterion passes when all of its records pass.  Run directly with
``python3 tests/test_acceptance.py`` for the summary without pytest.
"""

from __future__ import annotations

import time
from functools import lru_cache

import pytest

from quatrefl import catalog as C
from quatrefl import checks
from quatrefl.groups import closure


@lru_cache(maxsize=None)
def suite(name: str) -> tuple:
    return tuple(checks.SUITES[name]())


def records(name: str, select=None) -> list:
    rs = [r for r in suite(name) if r.expected != ""]
    return [r for r in rs if select is None or select(r.name)]


def _p3_closure_seconds() -> float:
    start = time.perf_counter()
    assert closure(C.get("P3").payload).order == 3840
    return time.perf_counter() - start


def _imprimitivity(name: str) -> bool:
    return name.startswith("systems of imprimitivity")


CRITERIA = {
    1: ("group orders and P3 closure time", lambda: records("orders")),
    2: ("reflection censuses and the 40 order-two root lines", lambda: records("censuses")),
    3: ("five MUBs and the 10-line orbit of e1", lambda: records("mubs")),
    4: ("Table 3 stabilizers, orbit sizes and angle sets", lambda: records("table3")),
    5: ("(3,3)-designs and vanishing design potentials", lambda: records("designs")),
    6: ("special and absolute bounds", lambda: records("bounds")),
    7: ("symplectic bridge and Blichfeldt pipeline", lambda: records("bridge")),
    8: ("actions on the MUB lines and pairs", lambda: records("actions")),
    9: ("conjugacy counts and the six G(q1,q2)", lambda: records("conjugacy")),
    10: ("imprimitivity systems", lambda: records("systems", _imprimitivity)),
    11: ("reflection systems and generation of P3", lambda: records("systems", lambda n: not _imprimitivity(n))),
    12: ("continuous eigenvector family and pointwise stabilizers", lambda: records("family")),
    13: ("partition properties", lambda: records("partitions")),
}


def evaluate(number: int) -> tuple[bool, list]:
    rs = CRITERIA[number][1]()
    failed = [r for r in rs if not r.passed]
    if number == 1:
        secs = _p3_closure_seconds()
        if secs >= 10:
            failed.append(checks.Record("P3 closure time", "< 10 s", f"{secs:.2f} s", False))
    return (not failed and bool(rs)), failed


def _detail(failed: list) -> str:
    return "; ".join(f"{r.name}: expected {r.expected}, computed {r.computed}" for r in failed)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, acceptance_line):
    ok, failed = evaluate(number)
    acceptance_line(number, CRITERIA[number][0], ok, _detail(failed))
    assert ok, _detail(failed)


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        ok, failed = evaluate(n)
        tail = f"  ({_detail(failed)})" if failed else ""
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {CRITERIA[n][0]}{tail}")

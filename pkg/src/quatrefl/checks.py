"""Check suites behind the CLI reports and the acceptance tests.

Every suite returns a list of :class:`Record`; expected values are the
published ones, computed values come from the exact engine.
"""

from __future__ import annotations

import json
import os
import re
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import catalog as C
from .catalog import ANGLES_SIXTHS
from .designs import SamplingConfig, absolute_bound, design_potential, design_report, is_tt_design, special_bound
from .exactfield import SQRT2, SQRT3, SQRT5, FieldElem
from .floatcheck import SweepConfig, diagonalization_example, exact_family_check, sweep
from .groups import (MatGroup, count_conjugates, cycle_notation, line_stabilizer, perm_action, perm_order,
                     pointwise_stabilizer)
from .linalg import MatH, VecH, inner, norm2
from .lines import LineSet, act, angle_set, line_orbit, sorted_fields
from .quaternion import Q_I, Q_J, Q_K, Q_ONE, reflection_system_closure, unit_closure
from .reflections import (imprimitive_data, imprimitivity_systems, monomial_subgroup, reflection_census,
                          reflection_subgroup, reflection_type)
from .symplectic import blichfeldt_pipeline, c_to_h, conjugate, fs_indicator


@dataclass
class Record:
    name: str
    expected: Any
    computed: Any
    passed: bool
    note: str = ""


def rec(name: str, expected: Any, computed: Any, note: str = "") -> Record:
    return Record(name, expected, computed, expected == computed, note)


def _s(x: Any) -> Any:
    """JSON-friendly rendering."""
    if isinstance(x, (FieldElem, Fraction)):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_s(y) for y in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_s(y) for y in x)
    if isinstance(x, dict):
        return {str(k): _s(v) for k, v in x.items()}
    return x


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    t = int(epoch) if epoch is not None else int(time.time())
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(t))


@dataclass
class Report:
    command: str
    records: list[Record] = field(default_factory=list)
    timestamp: str = field(default_factory=_timestamp)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json(self) -> str:
        data = {
            "command": self.command,
            "timestamp": self.timestamp,
            "pass": self.passed,
            "checks": [
                {"name": r.name, "expected": _s(r.expected), "computed": _s(r.computed), "pass": r.passed,
                 **({"note": r.note} if r.note else {})}
                for r in self.records
            ],
        }
        return json.dumps(data, indent=1)

    def to_text(self) -> str:
        lines = [f"# {self.command}  ({self.timestamp})"]
        for r in self.records:
            mark = "PASS" if r.passed else "FAIL"
            if r.expected == "":
                lines.append(f"      {r.name}: {_s(r.computed)}")
                continue
            lines.append(f"{mark}  {r.name}: expected {_s(r.expected)}, computed {_s(r.computed)}")
            if r.note:
                lines.append(f"      note: {r.note}")
        graded = [r for r in self.records if r.expected != ""]
        if graded:
            n_fail = sum(not r.passed for r in graded)
            lines.append(f"{len(graded) - n_fail}/{len(graded)} checks passed")
        return "\n".join(lines)


def _fracs(xs) -> list[Fraction]:
    return [x.to_fraction() for x in sorted_fields(xs)]


# 1. group orders --------------------------------------------------------------

def suite_orders() -> list[Record]:
    out = []
    for name, n in (("K", 32), ("P0", 64), ("P1", 320), ("P2", 1920), ("P3", 3840)):
        t0 = time.perf_counter()
        order = C.group(name).order
        out.append(rec(f"|{name}|", n, order, f"{time.perf_counter() - t0:.2f}s" if name == "P3" else ""))
    r = SQRT2.inverse()
    octa = unit_closure({(Q_ONE + Q_I) * r, (Q_ONE + Q_I + Q_J + Q_K) * Fraction(1, 2)})
    out.append(rec("|O| (binary octahedral)", 48, len(octa)))
    out.append(rec("|O| from (1+i)/sqrt2, (1+j)/sqrt2", 48, len(unit_closure({(Q_ONE + Q_I) * r, (Q_ONE + Q_J) * r}))))
    for name, n in (("P1", 64), ("P2", 128), ("P3", 768)):
        out.append(rec(f"|G_M({name})|", n, monomial_subgroup(C.group(name)).order))
    return out


# 2. reflection censuses ---------------------------------------------------------

TABLE2 = (
    ("P3", 3840, 110, "10Q8, 40C2", 768, 46, "2Q8, 8C2, 24C2"),
    ("P2", 1920, 70, "10Q8", 128, 22, "2Q8, 8C2"),
    ("P1", 320, 30, "10C4", 64, 14, "2C4, 4C2, 4C2"),
    ("K", 32, 10, None, 32, 10, "2C2, 2C2, 2C2, 2C2, 2C2"),
)


def _type_counter(text: str) -> Counter:
    """'10Q8, 40C2' -> Counter({(10, 'Q8'): 1, (40, 'C2'): 1})."""
    out = Counter()
    for part in text.split(","):
        m = re.fullmatch(r"\s*(\d+)(\w+)\s*", part)
        out[(int(m.group(1)), m.group(2))] += 1
    return out


def c2_root_lines(G) -> LineSet:
    census = reflection_census(G)
    per_root = Counter(r.root for r in census)
    return LineSet(r.root for r in census if per_root[r.root] == 1)


def suite_censuses() -> list[Record]:
    out = []
    for name, _, refs, rtype, _, _, _ in TABLE2:
        G = C.group(name)
        census = reflection_census(G)
        out.append(rec(f"reflections in {name}", refs, len(census)))
        if rtype is not None:
            out.append(rec(f"reflection type of {name}", _type_counter(rtype),
                           reflection_type(G, census).counter(), str(reflection_type(G, census))))
    roots = c2_root_lines(C.group("P3"))
    out.append(rec("order-two root lines of P3 equal the listed 40", True, roots == C.roots40(), f"{len(roots)} lines"))
    mono = sum(1 for r in reflection_census(C.group("P3")) if r.root in roots and r.matrix.is_monomial())
    out.append(rec("monomial order-two reflections of P3", 24, mono))
    mub = C.mub_lines()
    for name in ("P1", "P2"):
        roots_all = LineSet(r.root for r in reflection_census(C.group(name)))
        out.append(rec(f"root lines of {name} are the MUB lines", True, roots_all == mub))
    return out


# 3. MUBs ------------------------------------------------------------------------

def suite_mubs() -> list[Record]:
    bases = C.mub_bases()
    orthonormal = all(
        norm2(u) == 1 and norm2(v) == 1 and inner(u, v).is_zero() for u, v in bases)
    unbiased = set()
    for a in range(5):
        for b in range(a + 1, 5):
            for u in bases[a]:
                for v in bases[b]:
                    unbiased.add(inner(u, v).nrd())
    out = [
        rec("five bases orthonormal", True, orthonormal),
        rec("cross-basis angles", [Fraction(1, 2)], _fracs(unbiased)),
    ]
    for name in ("P1", "P2", "P3"):
        orbit = line_orbit(C.group(name), C.line("e1"))
        out.append(rec(f"{name}-orbit of e1 is the 10 MUB lines", True, orbit == C.mub_lines(), f"{len(orbit)} lines"))
    return out


# 4. Table 3 -------------------------------------------------------------------------

def suite_table3() -> list[Record]:
    out = []
    for row in C.TABLE3:
        G = C.group(row.group)
        l = C.line(row.fiducial)
        orbit = line_orbit(G, l)
        stab = line_stabilizer(G, l).order
        label = f"{row.group} / {row.fiducial}"
        out.append(rec(f"{label}: |Stab|", row.stabilizer_order, stab))
        out.append(rec(f"{label}: lines", row.lines, len(orbit)))
        out.append(rec(f"{label}: angles", list(row.angles), _fracs(angle_set(orbit))))
        out.append(rec(f"{label}: |orbit| * |Stab| = |G|", G.order, len(orbit) * stab))
    return out


# 5. designs --------------------------------------------------------------------------

DESIGN_SYSTEMS = (("P1", "e1", 10), ("P1", "w", 16), ("P1", "f20a", 20), ("P3", "w", 32),
                  ("P1", "f80", 40), ("P2", "f20a", 40), ("P2", "f80", 80), ("P3", "f80_P3", 80))


def suite_designs(samples: int = 200, seed: int = SamplingConfig.seed) -> list[Record]:
    out = []
    for g, f, n in DESIGN_SYSTEMS:
        orbit = line_orbit(C.group(g), C.line(f))
        out.append(rec(f"{n}-line system ({g}, {f}) is a (3,3)-design", (n, True), (len(orbit), is_tt_design(orbit, 3))))
    fiducials = [n for n in C.names() if C.get(n).kind == "vector"]
    vectors = SamplingConfig(samples=samples, seed=seed).vectors()
    for g in ("P1", "P2", "P3"):
        G = C.group(g)
        bad = [f for f in fiducials if not design_potential(G, C.vector(f), 3).is_zero()]
        out.append(rec(f"p^(3) vanishes at catalog fiducials under {g}", [], bad))
        nonzero = sum(1 for v in vectors if not design_potential(G, v, 3).is_zero())
        out.append(rec(f"p^(3) vanishes at {samples} seeded vectors under {g}", 0, nonzero, f"seed {seed}"))
    return out


# 6. bounds -------------------------------------------------------------------------------

def suite_bounds() -> list[Record]:
    b16 = special_bound(2, Fraction(1, 5), Fraction(3, 5))
    rep = design_report(line_orbit(C.group("P1"), C.line("w")))
    beta = Fraction(3, 5)
    return [
        rec("special bound (1/5, 3/5)", 16, b16.to_fraction()),
        rec("16-line system attains it", True, rep.meets_special_bound),
        rec("special bound (1/4, 5/8)", 15, special_bound(2, Fraction(1, 4), Fraction(5, 8)).to_fraction()),
        rec("absolute bound d=2", 20, absolute_bound(2).to_fraction()),
        rec("attaining angle 3/5 is rational and not 1/p", (True, False), (True, beta.numerator == 1)),
    ]


# 7. bridge ---------------------------------------------------------------------------------

def suite_bridge() -> list[Record]:
    out = [
        rec("FS indicator <A1,A2,A3,A4>", 1, fs_indicator(C.group("KC_real"))),
        rec("FS indicator <A1,iA2,iA3,A4>", -1, fs_indicator(C.group("KC_quat"))),
    ]
    for name, order, refs in (("14", 320, 30), ("16", 1920, 70), ("18", 3840, 110)):
        G = blichfeldt_pipeline(name)
        out.append(rec(f"group {name}: order, reflections", (order, refs), (G.order, len(reflection_census(G)))))
    out.append(rec("group 18 contains F", True, C.matrix("F") in blichfeldt_pipeline("18")))
    t = c_to_h(conjugate(C.blichfeldt("T"), C.blichfeldt("P_perm")))
    out.append(rec("P T P converts to t", True, t == C.matrix("t")))
    out.append(rec("order of t", 10, t.order()))
    Kt = C.group("Kt")
    census = reflection_census(Kt)
    sub = reflection_subgroup(Kt)
    out.append(rec("reflections in <K,t>", 10, len(census)))
    out.append(rec("reflection subgroup of <K,t> is K, a proper subgroup", (True, 32, 160),
                   (sub.same_elements(C.group("K")), sub.order, Kt.order)))
    return out


# 8. actions ----------------------------------------------------------------------------------

ACTION_LINES = {
    "diag(i,1)": "(3 6 4 5)(7 9 8 10)",
    "c_j": "(1 7 2 8)(5 10 6 9)",
    "diag(j,1)": "(3 8 4 7)(5 10 6 9)",
    "F": "(1 3)(2 4)(5 6)(7 8)(9 10)",
    "t": "(1 6 9 4 7)(2 5 10 3 8)",
}
ACTION_PAIRS = {"diag(i,1)": "(2 3)(4 5)", "c_j": "(1 4)(3 5)", "diag(j,1)": "(2 4)(3 5)", "F": "(1 2)"}


def _pair_action(g, pair):
    return frozenset(act(g, x) for x in pair)


def suite_actions() -> list[Record]:
    mats = {"diag(i,1)": MatH.diag(Q_I, 1), "c_j": C.matrix("c_j"), "diag(j,1)": MatH.diag(Q_J, 1),
            "F": C.matrix("F"), "t": C.matrix("t")}
    probe = MatGroup(list(mats.values()), name="probe")
    lines = list(C.mub_lines())
    on_lines = perm_action(probe, lines)
    pairs = C.mub_pairs()
    on_pairs = perm_action(C.group("P3"), pairs, action=_pair_action)
    out = []
    for n, (name, m) in enumerate(mats.items()):
        out.append(rec(f"{name} on lines", ACTION_LINES[name], on_lines.cycles(n)))
    p3 = C.group("P3")
    for name, cyc in ACTION_PAIRS.items():
        perm = tuple(pairs.index(_pair_action(mats[name], p)) for p in pairs)
        out.append(rec(f"{name} on pairs", cyc, cycle_notation(perm)))
    lines_p3 = perm_action(p3, lines)
    kernel = sorted(str(p3.elements[n]) for n in lines_p3.kernel)
    out.append(rec("kernel of P3 on lines is {+-I}", sorted([str(MatH.identity()), str(MatH.diag(-1, -1))]), kernel))
    K = C.group("K")
    out.append(rec("kernel of P3 on pairs is K", (32, True),
                   (on_pairs.kernel_order, all(p3.elements[n] in K for n in on_pairs.kernel))))
    for name, n in (("P3", 120), ("P2", 60), ("P1", 10), ("P0", 2)):
        img = perm_action(C.group(name), pairs, action=_pair_action)
        out.append(rec(f"|{name}/K| via pairs", n, img.image_order))
    img1 = perm_action(C.group("P1"), pairs, action=_pair_action)
    orders = sorted({perm_order(p) for p in img1.image_elements()})
    out.append(rec("element orders of P1/K", True, set(orders) <= {1, 2, 5}, str(orders)))
    return out


# 9. conjugacy ------------------------------------------------------------------------------

def suite_conjugacy() -> list[Record]:
    out = [
        rec("conjugates of P1 in P2", 6, count_conjugates(C.group("P2"), C.group("P1"))),
        rec("conjugates of P0 in P3", 5, count_conjugates(C.group("P3"), C.group("P0")),
            "P3/K is S5 on the MUB pairs and P0/K is generated by a transposition, which has 10 conjugates"),
        rec("conjugates of K in P3", 1, count_conjugates(C.group("P3"), C.group("K"))),
    ]
    orders = {f"G({a},{b})": C.group(f"G({a},{b})").order for a in "ijk" for b in "ijk" if a != b}
    out.append(rec("all six G(q1,q2) have order 320", [320] * 6, list(orders.values())))
    P2 = C.group("P2")
    sets = {C.group(n).keys() for n in orders}
    out.append(rec("the six G(q1,q2) are distinct subgroups of P2", (6, True),
                   (len(sets), all(C.group(n).is_subgroup_of(P2) for n in orders))))
    return out


# 10/11. imprimitivity and reflection systems -----------------------------------------------

def suite_systems() -> list[Record]:
    pairs = C.mub_pairs()
    out = []
    for name, expected in (("K", [1, 2, 3, 4, 5]), ("P0", [3, 4, 5]), ("P1", []), ("P2", []), ("P3", [])):
        found = imprimitivity_systems(C.group(name))
        labels = sorted(pairs.index(s) + 1 if s in pairs else str(sorted(map(str, s))) for s in found)
        out.append(rec(f"systems of imprimitivity of {name} (MUB pair labels)", expected, labels))
    r = SQRT2.inverse()
    a, b, c = (Q_ONE + Q_I) * r, (Q_ONE + Q_J) * r, (Q_ONE + Q_K) * r
    omega = (Q_ONE + Q_I + Q_J + Q_K) * Fraction(1, 2)
    L32 = reflection_system_closure({Q_ONE, a, b, c})
    sizes = [
        len(reflection_system_closure({Q_ONE, Q_I, Q_J, Q_K})),
        len(L32),
        len(reflection_system_closure({Q_ONE, a, b, Q_K})),
        len(reflection_system_closure({Q_ONE, a, b})),
        len(reflection_system_closure({Q_ONE, (Q_I - Q_J) * r, (Q_I - Q_K) * r, (Q_J + Q_K) * r})),
    ]
    out.append(rec("reflection system sizes Q8, L32, L20, L18, L14", [8, 32, 20, 18, 14], sizes))
    out.append(rec("-L in L for the catalog systems", True, all(-x in L32 for x in L32)))
    out.append(rec("<L32> is the binary octahedral group", 48, len(unit_closure(L32))))
    LO = reflection_system_closure({Q_ONE, a, omega})
    out.append(rec("L32 = ((1+i)/sqrt2) L({1, (1+i)/sqrt2, (1+i+j+k)/2})", True, {a * x for x in LO} == set(L32),
                   f"the three generators close to {len(LO)} elements, not 32"))
    LO4 = reflection_system_closure({Q_ONE, a, omega, Q_J})
    out.append(rec("L32 = ((1+i)/sqrt2) L({1, (1+i)/sqrt2, (1+i+j+k)/2, j})", True, {a * x for x in LO4} == set(L32)))
    data = imprimitive_data(monomial_subgroup(C.group("P3")))
    out.append(rec("G_M(P3): L = L32, H = Q8", (True, 8), (set(data.L) == set(L32), len(data.Hdiag))))
    out.append(rec("five order-two reflections generate P3", True,
                   C.group("P3_fiveorder2").same_elements(C.group("P3"))))
    out.append(rec("P2 with r_{(1,(1+i)/sqrt2),-1} generates P3", True,
                   C.group("P3_from_P2").same_elements(C.group("P3"))))
    P0 = C.group("P0")
    for q in "ijk":
        M = C.matrix(f"M_{q}")
        Mi = M.inverse()
        out.append(rec(f"M_{q}^-1 P0 M_{q} is monomial", True, all((Mi * g * M).is_monomial() for g in P0.elements)))
    return out


# 12. continuous family and pointwise stabilizers ---------------------------------------------

FAMILY_TS = (("0", FieldElem()), ("1/2", FieldElem.rational(Fraction(1, 2))), ("1/sqrt2", SQRT2.inverse()),
             ("1/sqrt3", SQRT3.inverse()), ("1/sqrt5", SQRT5.inverse()))


def suite_family(config: SweepConfig = SweepConfig()) -> list[Record]:
    out = [rec(f"exact family check at t = {label}", True, exact_family_check(t)) for label, t in FAMILY_TS]
    res = sweep(C.group("G8_family"), config)
    out.append(Record(f"float sweep, {config.grid} points, max residual < {config.tol:g}", f"< {config.tol:g}",
                      f"{res.max_residual:.3e}", res.passed))
    for label, (M, got, want) in zip(("[[1,1],[1,-i]]", "[[1,1],[1,(1-i)/sqrt2]]"), diagonalization_example()):
        out.append(rec(f"M^-1 antidiag(j,j) M is diagonal for M = {label}", str(want), str(got)))
    for name, label, v, n in (("P1", "(1,0)", VecH(1, 0), 4), ("P2", "(1,0)", VecH(1, 0), 8),
                              ("P3", "(1,0)", VecH(1, 0), 8), ("P3", "(sqrt2,1+i)", C.vector("f2"), 2)):
        out.append(rec(f"|pointwise stabilizer of {label} in {name}|", n, pointwise_stabilizer(C.group(name), v).order))
    return out


# 13. partitions -------------------------------------------------------------------------------

def suite_partitions() -> list[Record]:
    P1, P2 = C.group("P1"), C.group("P2")
    a = line_orbit(P1, C.line("f20a")).as_set()
    b = line_orbit(P1, C.line("f20b")).as_set()
    roots = C.roots40().as_set()
    u = line_orbit(P1, C.line("f80")).as_set()
    v = line_orbit(P1, C.line("f80b")).as_set()
    big = line_orbit(P2, C.line("f80")).as_set()
    rest = big - u
    w = line_orbit(P1, next(iter(sorted(rest, key=repr)))).as_set() if rest else set()
    return [
        rec("20-line orbits partition the 40 root lines", (20, 20, 0, True), (len(a), len(b), len(a & b), (a | b) == roots)),
        rec("P1-orbits of f80 and f80b partition the 80-line P2-orbit", (40, 40, 0, True),
            (len(u), len(v), len(u & v), (u | v) == big), "f80b lies in the P1-orbit of f80"),
        rec("the 80-line P2-orbit splits into two 40-line P1-orbits", (40, 40, True), (len(u), len(w), (u | w) == big)),
        rec("both halves have the angles m/6", [list(ANGLES_SIXTHS)] * 2, [_fracs(angle_set(u)), _fracs(angle_set(w))]),
    ]


# tables --------------------------------------------------------------------------------------

def table1() -> list[Record]:
    return [rec(f"{n} generators close to the documented order", C.get(n).order, C.group(n).order)
            for n in ("K", "P1", "P2", "P3")]


def table2() -> list[Record]:
    out = []
    for name, order, refs, rtype, gm_order, gm_refs, gm_type in TABLE2:
        G = C.group(name)
        M = monomial_subgroup(G)
        out.append(rec(f"{name}: |G|", order, G.order))
        out.append(rec(f"{name}: reflections", refs, len(reflection_census(G))))
        if rtype is not None:
            out.append(rec(f"{name}: reflection orbits", _type_counter(rtype), reflection_type(G).counter()))
        out.append(rec(f"{name}: |G_M|", gm_order, M.order))
        out.append(rec(f"{name}: reflections of G_M", gm_refs, len(reflection_census(M))))
        out.append(rec(f"{name}: reflection orbits of G_M", _type_counter(gm_type), reflection_type(M).counter()))
    return out


SUITES: dict[str, Callable[[], list[Record]]] = {
    "orders": suite_orders,
    "censuses": suite_censuses,
    "mubs": suite_mubs,
    "table3": suite_table3,
    "designs": suite_designs,
    "bounds": suite_bounds,
    "bridge": suite_bridge,
    "actions": suite_actions,
    "conjugacy": suite_conjugacy,
    "systems": suite_systems,
    "family": suite_family,
    "partitions": suite_partitions,
}

VERIFY_GROUPS = {
    "mubs": ["mubs"],
    "designs": ["designs", "partitions"],
    "bounds": ["bounds"],
    "actions": ["actions", "conjugacy"],
    "systems": ["systems"],
    "bridge": ["bridge"],
    "family": ["family"],
    "all": list(SUITES),
}

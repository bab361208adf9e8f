"""Command-line entry point: ``quatrefl`` or ``python3 -m quatrefl``.

Exit codes: 0 when every check passes, 1 on a failed check, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import catalog as C
from . import checks
from .checks import Record, Report, rec
from .designs import (BoundInapplicable, SamplingConfig, absolute_bound, design_potential, design_report,
                      special_bound)
from .exactfield import FieldElem, field_sign, parse_field
from .floatcheck import DomainError, NotRepresentable, SweepConfig, exact_family_check, sweep
from .groups import MatGroup, line_stabilizer, pointwise_stabilizer
from .linalg import MatC, VecH, dump_matrices, load_matrices
from .lines import Line, LineSet, angle_set, line_of, line_orbit, sorted_fields
from .reflections import reflection_census, reflection_type
from .symplectic import BLICHFELDT_EXTRA, blichfeldt_pipeline, fs_indicator


class UsageError(Exception):
    pass


# input resolution ------------------------------------------------------------

def resolve_group(spec: str) -> MatGroup:
    """A catalog group name, a Blichfeldt number (14, 16, ...) or a generator file."""
    if os.path.isfile(spec):
        gens = load_matrices(spec)
        if not gens:
            raise UsageError(f"{spec}: no generators")
        return MatGroup(gens, name=os.path.basename(spec))
    key = spec.rstrip("o°")
    if key in BLICHFELDT_EXTRA:
        return blichfeldt_pipeline(key)
    try:
        return C.group(spec)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"unknown group {spec!r}") from exc


def resolve_vector(spec: str) -> VecH:
    if os.path.isfile(spec):
        with open(spec) as fh:
            return VecH.from_json(json.load(fh))
    try:
        return C.vector(spec)
    except (KeyError, ValueError):
        pass
    try:
        return VecH.from_json(json.loads(spec))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot read a vector from {spec!r}") from exc


def resolve_line(spec: str) -> Line:
    """Catalog vector name, a line-set file (first line is used), JSON vector, or line text."""
    if os.path.isfile(spec):
        with open(spec) as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("["):
            data = json.loads(text)
            if data and isinstance(data[0], dict):
                return LineSet.from_json(text)[0]
            return line_of(VecH.from_json(data))
        return LineSet.from_text(text)[0]
    try:
        return C.line(spec)
    except (KeyError, ValueError):
        pass
    try:
        return Line.from_text(spec)
    except ValueError:
        return line_of(resolve_vector(spec))


def parse_scalar(text: str) -> FieldElem:
    try:
        return parse_field(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse field element {text!r}") from exc


# commands -------------------------------------------------------------------------

def cmd_table(args) -> Report:
    n = args.number
    if n == 1:
        return Report("table 1", checks.table1())
    if n == 2:
        return Report("table 2", checks.table2())
    return Report("table 3", checks.suite_table3())


def cmd_verify(args) -> Report:
    what = args.what
    if what == "design":
        return _verify_design(args)
    if what == "bounds" and args.angles:
        return _verify_bounds(args)
    records: list[Record] = []
    for suite in checks.VERIFY_GROUPS[what]:
        if suite == "designs":
            records += checks.suite_designs(samples=args.samples, seed=args.seed)
        else:
            records += checks.SUITES[suite]()
    return Report(f"verify {what}", records)


def _verify_design(args) -> Report:
    if not args.group or not args.seed_line:
        raise UsageError("verify design needs --group and --seed-line")
    G = resolve_group(args.group)
    l = resolve_line(args.seed_line)
    orbit = line_orbit(G, l)
    rep = design_report(orbit, max_t=max(args.t, 1))
    pot = design_potential(G, l.vector(), args.t)
    data = rep.to_json()
    records = [
        rec(f"orbit is a ({args.t},{args.t})-design", True, rep.strengths.get(args.t, False)),
        rec(f"p^({args.t}) at the seed line", "0", str(pot)),
        Record("design report", "", data, True),
    ]
    return Report(f"verify design --group {args.group} --t {args.t}", records)


def _verify_bounds(args) -> Report:
    try:
        angles = [Fraction(a) for a in args.angles.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --angles {args.angles!r}") from exc
    records = [Record("absolute bound", "", str(absolute_bound(args.d)), True)]
    nonzero = [a for a in angles if a != 0]
    if len(nonzero) == 2:
        try:
            b = special_bound(args.d, *nonzero)
            records.append(Record("special bound", "", str(b), True))
            if args.n is not None:
                records.append(rec(f"n = {args.n} within special bound", True, field_sign(b - args.n) >= 0))
        except BoundInapplicable as exc:
            records.append(Record("special bound", "", f"inapplicable: {exc}", True))
    if args.n is not None:
        records.append(rec(f"n = {args.n} within absolute bound", True,
                           field_sign(absolute_bound(args.d) - args.n) >= 0))
    return Report(f"verify bounds --angles {args.angles} --d {args.d}", records)


def cmd_group(args) -> Report:
    G = resolve_group(args.group)
    label = args.group
    if args.action == "order":
        return Report(f"group order {label}", [Record("order", "", G.order, True)])
    if args.action == "reflections":
        census = reflection_census(G)
        records = [Record("reflections", "", len(census), True)]
        if G.kind is not MatC:
            records.append(Record("reflection type", "", str(reflection_type(G, census)), True))
        if args.verbose:
            for r in census:
                records.append(Record(f"root {r.root.to_text()}", "", f"scalar {r.scalar}, order {r.order}", True))
        return Report(f"group reflections {label}", records)
    if not args.line and not args.vector:
        raise UsageError(f"group {args.action} needs --line or --vector")
    if args.action == "orbit":
        l = resolve_line(args.line or args.vector)
        orbit = line_orbit(G, l)
        records = [
            Record("orbit size", "", len(orbit), True),
            Record("angles", "", [str(a) for a in sorted_fields(angle_set(orbit))], True),
        ]
        if args.emit:
            with open(args.emit, "w") as fh:
                fh.write(orbit.to_text())
            records.append(Record("written", "", args.emit, True))
        return Report(f"group orbit {label}", records)
    if args.vector and args.pointwise:
        H = pointwise_stabilizer(G, resolve_vector(args.vector))
        return Report(f"group stabilizer --pointwise {label}", [Record("pointwise stabilizer order", "", H.order, True)])
    H = line_stabilizer(G, resolve_line(args.line or args.vector))
    return Report(f"group stabilizer {label}", [Record("line stabilizer order", "", H.order, True)])


def cmd_catalog(args) -> Report:
    if args.action == "list":
        records = [Record(n, "", f"{C.get(n).kind}: {C.get(n).anchor}", True) for n in C.names()]
        return Report("catalog list", records)
    if not args.name:
        raise UsageError("catalog show needs a name")
    try:
        e = C.get(args.name)
    except KeyError as exc:
        raise UsageError(f"unknown catalog name {args.name!r}") from exc
    payload = C.export(e.name) if args.json else C.export(e.name).replace("\n", "\n      ")
    return Report(f"catalog show {args.name}", [Record("kind", "", e.kind, True), Record("anchor", "", e.anchor, True),
                                                Record("payload", "", payload, True)])


def cmd_bridge(args) -> Report:
    key = args.group.rstrip("o°")
    if key not in BLICHFELDT_EXTRA:
        raise UsageError(f"unsupported group {args.group!r}; choose from {', '.join(BLICHFELDT_EXTRA)}")
    G = blichfeldt_pipeline(key)
    records = [Record("order", "", G.order, True), Record("reflections", "", len(reflection_census(G)), True)]
    if args.emit:
        dump_matrices(list(G.generators), args.emit)
        records.append(Record("written", "", args.emit, True))
    return Report(f"bridge --group {args.group}", records)


def cmd_fs(args) -> Report:
    if args.file:
        gens = load_matrices(args.file)
        G = MatGroup(gens)
    elif args.group:
        G = resolve_group(args.group)
    else:
        raise UsageError("fs-indicator needs --file or --group")
    if G.kind is not MatC:
        raise UsageError("fs-indicator needs complex 4x4 generators")
    return Report("fs-indicator", [Record("indicator", "", str(fs_indicator(G)), True),
                                   Record("order", "", G.order, True)])


def cmd_family(args) -> Report:
    if args.action == "sweep":
        res = sweep(C.group("G8_family"), SweepConfig(grid=args.grid, tol=args.tol))
        return Report(f"family sweep --grid {args.grid} --tol {args.tol:g}",
                      [Record("max residual", f"< {args.tol:g}", f"{res.max_residual:.3e}", res.passed)])
    if not args.t:
        raise UsageError("family exact needs --t")
    t = parse_scalar(args.t)
    try:
        ok = exact_family_check(t)
    except (DomainError, NotRepresentable) as exc:
        raise UsageError(str(exc)) from exc
    return Report(f"family exact --t {args.t}", [rec(f"family vectors at t = {t} are fixed lines", True, ok)])


# parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    p = argparse.ArgumentParser(prog="quatrefl", description="Exact checks for quaternionic reflection groups "
                                "of type P and their line systems.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="recompute a table")
    t.add_argument("number", type=int, choices=[1, 2, 3])
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run a check suite or an ad hoc check")
    v.add_argument("what", choices=["mubs", "designs", "design", "bounds", "actions", "systems", "bridge", "family",
                                    "all"])
    v.add_argument("--samples", type=int, default=SamplingConfig.samples)
    v.add_argument("--seed", type=int, default=SamplingConfig.seed)
    v.add_argument("--group")
    v.add_argument("--seed-line")
    v.add_argument("--t", type=int, default=3)
    v.add_argument("--angles")
    v.add_argument("--d", type=int, default=2)
    v.add_argument("--n", type=int)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("group", parents=[common], help="orders, reflections, orbits, stabilizers")
    g.add_argument("action", choices=["order", "reflections", "orbit", "stabilizer"])
    g.add_argument("--group", required=True, help="catalog name, Blichfeldt number or generator file")
    g.add_argument("--line")
    g.add_argument("--vector")
    g.add_argument("--pointwise", action="store_true")
    g.add_argument("--emit", help="write the orbit as a line-set file")
    g.add_argument("-v", "--verbose", action="store_true")
    g.set_defaults(func=cmd_group)

    c = sub.add_parser("catalog", parents=[common], help="list or show catalog entries")
    c.add_argument("action", choices=["list", "show"])
    c.add_argument("name", nargs="?")
    c.set_defaults(func=cmd_catalog)

    b = sub.add_parser("bridge", parents=[common], help="quaternionic group from a Blichfeldt group")
    b.add_argument("--group", required=True)
    b.add_argument("--emit")
    b.set_defaults(func=cmd_bridge)

    f = sub.add_parser("fs-indicator", parents=[common], help="Frobenius-Schur indicator of a complex group")
    f.add_argument("--file")
    f.add_argument("--group")
    f.set_defaults(func=cmd_fs)

    fam = sub.add_parser("family", parents=[common], help="continuous eigenvector family")
    fam.add_argument("action", choices=["sweep", "exact"])
    fam.add_argument("--grid", type=int, default=SweepConfig.grid)
    fam.add_argument("--tol", type=float, default=SweepConfig.tol)
    fam.add_argument("--t")
    fam.set_defaults(func=cmd_family)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"quatrefl: error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())

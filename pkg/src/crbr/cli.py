"""Command line interface: ``crbr revise|explain|entails|enumerate``.

Exit codes: 0 ok/true, 1 false, 2 parse error, 3 inconsistent new
information, 4 cap exceeded, 5 invalid family.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import report
from .config import Limits
from .errors import (
    CapExceeded, DuplicateFormula, EmptySubbase, FormulaSyntaxError, InconsistentInput,
    InvalidFamily,
)
from .evidence import credibility_table, dec4
from .formula import BeliefBase, parse, parse_base, render
from .revision import OperatorKind, outcome_entails, revise, validate_family
from .sat import is_satisfiable
from .subbase import (
    SubbaseFamily, all_intersections, check_limits, enumerate_inclusion_maximal,
    filter_cardinality_maximal,
)

EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_INCONSISTENT, EXIT_CAP, EXIT_FAMILY = range(6)

CRITERIA = ("inclusion", "cardinality", "credibility", "intersections")


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _op_help() -> str:
    names = [k.value + (" (experimental)" if k.experimental else "") for k in OperatorKind]
    return "revision operator: " + ", ".join(names)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", required=True, type=Path, help="base file, one formula per line")
    common.add_argument("--mu", required=True, help="new information formula")
    common.add_argument("--family", type=Path, help="explicit subbase family (indices per line)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-vars", type=int, default=None, help="variable cap (default 24)")
    common.add_argument("--max-base", type=int, default=None, help="base size cap (default 20)")

    ops = [k.value for k in OperatorKind]
    p = argparse.ArgumentParser(prog="crbr", description="Belief base revision with credibility.")
    sub = p.add_subparsers(dest="command", required=True)

    rv = sub.add_parser("revise", parents=[common], help="revise a base and print the result")
    rv.add_argument("--op", required=True, choices=ops, metavar="KIND", help=_op_help())

    sub.add_parser("explain", parents=[common], help="evidential report for CSRG, CSRW and CSIR")

    en = sub.add_parser("entails", parents=[common], help="does the revised base entail --psi?")
    en.add_argument("--op", required=True, choices=ops, metavar="KIND", help=_op_help())
    en.add_argument("--psi", required=True, help="query formula")

    ls = sub.add_parser("enumerate", parents=[common], help="list a family of subbases")
    ls.add_argument("--criterion", required=True, choices=CRITERIA)
    return p


def _load(args) -> tuple[BeliefBase, object, SubbaseFamily | None, Limits]:
    limits = Limits.from_env(args.max_vars, args.max_base)
    try:
        base = parse_base(args.base.read_text(encoding="utf-8"))
        mu = parse(args.mu)
    except OSError as exc:
        raise _Fail(EXIT_PARSE, f"cannot read base file: {exc}") from None
    except FormulaSyntaxError as exc:
        raise _Fail(EXIT_PARSE, f"parse error: {exc}") from None
    except DuplicateFormula as exc:
        raise _Fail(EXIT_PARSE, f"duplicate formula: {exc}") from None
    try:
        check_limits(base, [mu], limits)
    except CapExceeded as exc:
        raise _Fail(EXIT_CAP, f"cap exceeded: {exc}") from None
    if not is_satisfiable([mu], max_vars=None):
        raise _Fail(EXIT_INCONSISTENT, "inconsistent input: the new information is unsatisfiable")
    family = None
    if args.family is not None:
        try:
            family = report.parse_family(args.family.read_text(encoding="utf-8"), base)
            if any(not s for s in family):
                raise InvalidFamily("a family member is empty")
            validate_family(base, mu, family)
        except OSError as exc:
            raise _Fail(EXIT_FAMILY, f"cannot read family file: {exc}") from None
        except InvalidFamily as exc:
            raise _Fail(EXIT_FAMILY, f"invalid family: {exc}") from None
    return base, mu, family, limits


def _family(base, mu, family, limits) -> SubbaseFamily:
    return family if family is not None else enumerate_inclusion_maximal(base, mu, limits)


def _listing(base: BeliefBase, sets) -> list[str]:
    lines = []
    for s in sets:
        body = " ; ".join(render(f) for f in base.select(s.mask)) or "(empty)"
        lines.append(f"[{', '.join(map(str, s.indices))}] {body}")
    return lines or ["(none)"]


def cmd_revise(args, out) -> int:
    base, mu, family, limits = _load(args)
    o = revise(base, mu, args.op, family=family, limits=limits)
    if args.format == "json":
        w = _family(base, mu, family, limits) if len(base) else SubbaseFamily(base)
        print(report.dumps(report.build(base, mu, w, [o])), file=out)
    else:
        print(render(o.result), file=out)
    return EXIT_OK


def cmd_explain(args, out) -> int:
    base, mu, family, limits = _load(args)
    w = _family(base, mu, family, limits) if len(base) else SubbaseFamily(base)
    kinds = [k for k in OperatorKind if k.credibility_based]
    outcomes = [revise(base, mu, k, family=family, limits=limits) for k in kinds]
    rep = report.build(base, mu, w, outcomes)
    if args.format == "json":
        print(report.dumps(rep), file=out)
        return EXIT_OK
    print(f"mu: {render(mu)}", file=out)
    if rep["evidence"] is None:
        print("no evidence to combine (family is empty or contains the empty subbase)", file=out)
    else:
        table = credibility_table(w)
        print("family:", file=out)
        for i, r in enumerate(table.members, start=1):
            print(f"  B'{i} {_listing(base, [r.subbase])[0]}", file=out)
            print(f"      m={dec4(r.mass)} ({r.mass})  Bel={dec4(r.belief)} ({r.belief})", file=out)
        print("intersections:", file=out)
        for i, r in enumerate(table.intersections, start=1):
            print(f"  X'{i} {_listing(base, [r.subbase])[0]}", file=out)
            print(f"      m={dec4(r.mass)} ({r.mass})  Bel={dec4(r.belief)} ({r.belief})", file=out)
        if not table.intersections:
            print("  (none)", file=out)
        print(f"m(B)={dec4(table.base_mass)} ({table.base_mass})", file=out)
        print(f"conflict k={dec4(table.conflict)} ({table.conflict})", file=out)
    for o in outcomes:
        print(f"{o.operator.value}: {render(o.result)}", file=out)
    return EXIT_OK


def cmd_entails(args, out) -> int:
    base, mu, family, limits = _load(args)
    try:
        psi = parse(args.psi)
    except FormulaSyntaxError as exc:
        raise _Fail(EXIT_PARSE, f"parse error in --psi: {exc}") from None
    o = revise(base, mu, args.op, family=family, limits=limits)
    try:
        verdict = outcome_entails(o, psi, max_vars=limits.max_vars)
    except CapExceeded as exc:
        raise _Fail(EXIT_CAP, f"cap exceeded: {exc}") from None
    if args.format == "json":
        print(report.dumps({"entails": verdict, "psi": render(psi), **report.outcome(o)}), file=out)
    else:
        print("true" if verdict else "false", file=out)
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_enumerate(args, out) -> int:
    base, mu, family, limits = _load(args)
    w = _family(base, mu, family, limits) if len(base) else SubbaseFamily(base)
    crit = args.criterion
    if crit == "inclusion":
        sets = w.sets
    elif crit == "cardinality":
        sets = filter_cardinality_maximal(w).sets
    elif crit == "intersections":
        sets = all_intersections(w).sets
    elif not w.sets or any(not s for s in w):
        sets = w.sets
    else:
        sets = tuple(credibility_table(w).most_credible_members())
    if args.format == "json":
        print(report.dumps({"criterion": crit, "mu": render(mu),
                            "family": report.family(sets, base)}), file=out)
    else:
        for line in _listing(base, sets):
            print(line, file=out)
    return EXIT_OK


COMMANDS = {"revise": cmd_revise, "explain": cmd_explain,
            "entails": cmd_entails, "enumerate": cmd_enumerate}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except _Fail as exc:
        print(f"crbr: {exc}", file=err)
        return exc.code
    except CapExceeded as exc:
        print(f"crbr: cap exceeded: {exc}", file=err)
        return EXIT_CAP
    except InconsistentInput as exc:
        print(f"crbr: inconsistent input: {exc}", file=err)
        return EXIT_INCONSISTENT
    except (InvalidFamily, EmptySubbase) as exc:
        print(f"crbr: invalid family: {exc}", file=err)
        return EXIT_FAMILY


if __name__ == "__main__":
    sys.exit(main())

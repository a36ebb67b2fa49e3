"""JSON-ready reports of revision runs and the family file format."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable

from .errors import InvalidFamily
from .evidence import CredibilityTable, credibility_table, dec4
from .formula import BeliefBase, Formula, render
from .revision import RevisionOutcome
from .subbase import Subbase, SubbaseFamily, all_intersections

SCHEMA_VERSION = 1


def parse_family(text: str, base: BeliefBase) -> SubbaseFamily:
    """One subbase per line as comma-separated 0-based indices.

    Blank lines and ``#`` comments are skipped; ``{}`` denotes the empty subbase.
    """
    sets: list[Subbase] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "{}":
            sub = Subbase(0)
        else:
            try:
                idx = [int(tok) for tok in line.split(",")]
            except ValueError:
                raise InvalidFamily(f"line {lineno}: expected comma-separated indices") from None
            bad = [i for i in idx if not 0 <= i < len(base)]
            if bad:
                raise InvalidFamily(f"line {lineno}: index {bad[0]} outside 0..{len(base) - 1}")
            if len(set(idx)) != len(idx):
                raise InvalidFamily(f"line {lineno}: repeated index")
            sub = Subbase.of(idx)
        if sub in sets:
            raise InvalidFamily(f"line {lineno}: duplicate subbase")
        sets.append(sub)
    return SubbaseFamily(base, tuple(sets))


def rational(x: Fraction) -> dict[str, Any]:
    return {"num": x.numerator, "den": x.denominator, "dec4": dec4(x)}


def subbase(base: BeliefBase, s: Subbase) -> dict[str, Any]:
    return {"indices": list(s.indices), "formulas": [render(f) for f in base.select(s.mask)]}


def family(fam: SubbaseFamily | Iterable[Subbase], base: BeliefBase) -> list[dict[str, Any]]:
    return [subbase(base, s) for s in fam]


def evidence(table: CredibilityTable) -> dict[str, Any]:
    base = table.family.base

    def rows(rs):
        return [{**subbase(base, r.subbase), "mass": rational(r.mass), "bel": rational(r.belief)}
                for r in rs]

    return {
        "members": rows(table.members),
        "intersections": rows(table.intersections),
        "masses": [{**subbase(base, s), "mass": rational(v)} for s, v in table.combined.masses.items()],
        "base_mass": rational(table.base_mass),
        "conflict": rational(table.conflict),
        "step_conflicts": [rational(k) for k in table.step_conflicts],
        "most_credible_members": family(table.most_credible_members(), base),
        "most_credible_intersections": family(table.most_credible_intersections(), base),
    }


def outcome(o: RevisionOutcome) -> dict[str, Any]:
    return {
        "operator": o.operator.value,
        "selected": family(o.selected, o.base),
        "result": render(o.result),
    }


def _table_for(w: SubbaseFamily) -> CredibilityTable | None:
    if not w.sets or any(not s for s in w):
        return None
    return credibility_table(w)


def build(base: BeliefBase, mu: Formula, w: SubbaseFamily,
          outcomes: Iterable[RevisionOutcome]) -> dict[str, Any]:
    """Full report: the family, its evidence, and each operator's selection and result."""
    table = _table_for(w)
    return {
        "schema": SCHEMA_VERSION,
        "mu": render(mu),
        "base": [render(f) for f in base],
        "family": family(w, base),
        "intersections": family(all_intersections(w), base),
        "evidence": evidence(table) if table is not None else None,
        "outcomes": [outcome(o) for o in outcomes],
    }


def dumps(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)

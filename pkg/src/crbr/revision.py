"""Formula-based revision operators and their consequence queries.

Every operator starts from W(B, mu), the inclusion-maximal mu-consistent
subbases (or a family supplied by the caller), picks sets under its
maximality criterion and combines them with its strategy:

* permissive (GINSBERG, RSRG, CSRG): disjoin the chosen sets, then add mu;
* drastic (WIDTIO, RSRW, CSRW): keep only their common formulas, add mu;
* compromise (CSIR, RSIR, SIR): disjoin chosen intersections of W, add mu.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .config import Limits
from .errors import InconsistentInput, InvalidFamily
from .evidence import CredibilityTable, credibility_table
from .formula import BeliefBase, Formula, conjoin, disjoin
from .sat import entails, is_satisfiable
from .subbase import (
    ConsistencyOracle, Subbase, SubbaseFamily, all_intersections, check_limits,
    enumerate_inclusion_maximal, filter_cardinality_maximal, inclusion_maximal_members,
)


class OperatorKind(enum.Enum):
    GINSBERG = "ginsberg"
    WIDTIO = "widtio"
    RSRG = "rsrg"
    RSRW = "rsrw"
    CSRG = "csrg"
    CSRW = "csrw"
    CSIR = "csir"
    RSIR = "rsir"  # experimental
    SIR = "sir"  # experimental

    @property
    def drastic(self) -> bool:
        return self in _DRASTIC

    @property
    def credibility_based(self) -> bool:
        return self in (OperatorKind.CSRG, OperatorKind.CSRW, OperatorKind.CSIR)

    @property
    def experimental(self) -> bool:
        return self in (OperatorKind.RSIR, OperatorKind.SIR)


_DRASTIC = frozenset({OperatorKind.WIDTIO, OperatorKind.RSRW, OperatorKind.CSRW})


@dataclass(frozen=True)
class RevisionOutcome:
    """Result of ``B * mu``.

    ``selected`` holds the sets whose conjunctions are disjoined; for drastic
    operators it is the single common-intersection set (possibly empty).
    """

    operator: OperatorKind
    mu: Formula
    selected: SubbaseFamily
    result: Formula
    diagnostics: Optional[CredibilityTable] = None

    @property
    def base(self) -> BeliefBase:
        return self.selected.base


def _disjunctive(base: BeliefBase, sets, mu: Formula) -> Formula:
    sets = list(sets)
    if not sets or any(not s for s in sets):
        return mu
    return conjoin([disjoin(conjoin(base.select(s.mask)) for s in sets), mu])


def _outcome(op, mu, base, sets, diagnostics=None) -> RevisionOutcome:
    family = SubbaseFamily(base, tuple(sets))
    if op.drastic:
        common = family.intersection()
        family = SubbaseFamily(base, (common,))
        result = conjoin([*base.select(common.mask), mu])
    else:
        result = _disjunctive(base, family.sets, mu)
    return RevisionOutcome(op, mu, family, result, diagnostics)


def validate_family(base: BeliefBase, mu: Formula, family: SubbaseFamily,
                    require_consistent: bool = True) -> None:
    """Reject empty members and, unless disabled, members inconsistent with ``mu``."""
    if not family.sets:
        raise InvalidFamily("the family is empty")
    if family.base != base:
        raise InvalidFamily("the family belongs to a different base")
    consistent = ConsistencyOracle(base, mu)
    for s in family:
        if not s and len(family) > 1:
            raise InvalidFamily("an empty subbase can only appear alone")
        if require_consistent and not consistent(s.mask):
            raise InvalidFamily(f"{s!r} is inconsistent with the new information")


def _consistent_members(base, mu, family: SubbaseFamily) -> list[Subbase]:
    consistent = ConsistencyOracle(base, mu)
    return [s for s in family if consistent(s.mask)]


def revise(base: BeliefBase, mu: Formula, op: OperatorKind | str,
           family: SubbaseFamily | None = None, limits: Limits = Limits()) -> RevisionOutcome:
    """Revise ``base`` by ``mu`` with operator ``op``.

    ``family`` replaces the enumerated W(B, mu); it is used as given, so a
    member inconsistent with ``mu`` can make a permissive result unsatisfiable.
    Call :func:`validate_family` first to rule that out.
    """
    op = OperatorKind(op)
    check_limits(base, [mu], limits)
    if not is_satisfiable([mu], max_vars=None):
        raise InconsistentInput("the new information is unsatisfiable")
    if len(base) == 0:
        return RevisionOutcome(op, mu, SubbaseFamily(base), mu)
    if family is None:
        w = enumerate_inclusion_maximal(base, mu, limits)
    else:
        validate_family(base, mu, family, require_consistent=False)
        w = family
    full = Subbase(base.full_mask)
    if w.sets == (full,):
        return RevisionOutcome(op, mu, w, conjoin([*base, mu]))
    if w.sets == (Subbase(0),):
        return RevisionOutcome(op, mu, w, mu)

    if op in (OperatorKind.GINSBERG, OperatorKind.WIDTIO):
        return _outcome(op, mu, base, w.sets)
    if op in (OperatorKind.RSRG, OperatorKind.RSRW):
        return _outcome(op, mu, base, filter_cardinality_maximal(w).sets)
    if op in (OperatorKind.CSRG, OperatorKind.CSRW):
        table = credibility_table(w)
        return _outcome(op, mu, base, table.most_credible_members(), table)
    if op is OperatorKind.CSIR:
        table = credibility_table(w)
        cands = set(_consistent_members(base, mu, all_intersections(w)))
        rows = [r for r in table.intersections if r.subbase in cands]
        if not rows:
            return RevisionOutcome(op, mu, SubbaseFamily(base), mu, table)
        best = max(r.belief for r in rows)
        return _outcome(op, mu, base, [r.subbase for r in rows if r.belief == best], table)
    if op is OperatorKind.RSIR:
        focs = all_intersections(filter_cardinality_maximal(w))
        chosen = filter_cardinality_maximal(focs.with_sets(_consistent_members(base, mu, focs)))
        return _outcome(op, mu, base, chosen.sets)
    if op is OperatorKind.SIR:
        focs = all_intersections(w)
        chosen = inclusion_maximal_members(focs.with_sets(_consistent_members(base, mu, focs)))
        return _outcome(op, mu, base, chosen.sets)
    raise ValueError(f"unknown operator {op}")


def outcome_entails(outcome: RevisionOutcome, psi: Formula,
                    max_vars: int | None = None) -> bool:
    """``B * mu |= psi``: each selected set together with mu entails psi."""
    base, mu = outcome.base, outcome.mu
    sets = outcome.selected.sets
    if not sets:
        return entails([mu], psi, max_vars)
    return all(entails([*base.select(s.mask), mu], psi, max_vars) for s in sets)


@dataclass(frozen=True)
class SelectionAgreementReport:
    """Whether credibility and cardinality pick the same subbases, two ways.

    ``families_equal`` compares Wbel with Wcard directly; ``equal_mass``
    and ``margin`` are the two mass conditions on the combined BBA whose
    conjunction should hold exactly when the families coincide.
    """

    wbel: SubbaseFamily
    wcard: SubbaseFamily
    families_equal: bool
    equal_mass: bool
    margin: bool

    @property
    def conditions_hold(self) -> bool:
        return self.equal_mass and self.margin

    @property
    def verdict(self) -> str:
        return "equal" if self.families_equal else "different"

    @property
    def agrees(self) -> bool:
        return self.families_equal == self.conditions_hold


def check_selection_agreement(base: BeliefBase, mu: Formula,
                              family: SubbaseFamily | None = None,
                              limits: Limits = Limits()) -> SelectionAgreementReport:
    check_limits(base, [mu], limits)
    if not is_satisfiable([mu], max_vars=None):
        raise InconsistentInput("the new information is unsatisfiable")
    w = family if family is not None else enumerate_inclusion_maximal(base, mu, limits)
    wcard = filter_cardinality_maximal(w)
    if len(base) == 0 or w.sets == (Subbase(0),):
        return SelectionAgreementReport(w, wcard, True, True, True)
    table = credibility_table(w)
    wbel = w.with_sets(table.most_credible_members())
    mass = {r.subbase: r.mass for r in table.members}
    focs = [r for r in table.intersections]

    def support(s: Subbase) -> Fraction:
        return sum((r.mass for r in focs if r.subbase < s), Fraction(0))

    inside = list(wbel)
    outside = [s for s in w if s not in wbel]
    equal_mass = all(mass[i] == mass[j] and support(i) == support(j)
                     for i in inside for j in inside)
    margin = all(mass[i] - mass[j] > max(Fraction(0), support(j) - support(i))
                 for i in inside for j in outside)
    return SelectionAgreementReport(wbel, wcard, wbel.sets == wcard.sets, equal_mass, margin)

"""Belief base revision over propositional bases, with credibility-based operators."""

from .config import Limits
from .errors import (
    CapExceeded, CrbrError, DuplicateFormula, EmptySubbase, FormulaSyntaxError,
    InconsistentInput, InvalidFamily, TotalConflict, UnassignedAtom,
)
from .evidence import (
    CredibilityTable, MassFunction, belief_of, combine_all, credibility_table, dec4,
    dempster_combine, plausibility_of, simple_bba,
)
from .formula import BeliefBase, parse, parse_base, render, variables, evaluate
from .revision import OperatorKind, RevisionOutcome, check_selection_agreement, outcome_entails, revise
from .sat import entails, equivalent, is_satisfiable
from .subbase import (
    Subbase, SubbaseFamily, all_intersections, enumerate_inclusion_maximal,
    filter_cardinality_maximal,
)

__version__ = "0.1.0"

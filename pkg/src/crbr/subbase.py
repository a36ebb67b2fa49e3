"""Subbases as index bitsets, and the families built from them.

The inclusion-maximal enumerator walks the subset lattice downward from the
whole base one cardinality level at a time; a consistent set met on a level
is maximal unless it lies inside a set already found on a higher level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .config import Limits
from .errors import CapExceeded, InconsistentInput, InvalidFamily
from .formula import BeliefBase, Formula, variables
from .sat import Encoder, dpll, truth_table_satisfiable


@dataclass(frozen=True, order=False)
class Subbase:
    """A set of base indices stored as a bitmask (bit ``i`` = formula ``i``)."""

    mask: int

    @classmethod
    def of(cls, indices: Iterable[int]) -> "Subbase":
        m = 0
        for i in indices:
            if i < 0:
                raise ValueError(f"negative index {i}")
            m |= 1 << i
        return cls(m)

    @property
    def indices(self) -> tuple[int, ...]:
        m, out, i = self.mask, [], 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __and__(self, other: "Subbase") -> "Subbase":
        return Subbase(self.mask & other.mask)

    def __or__(self, other: "Subbase") -> "Subbase":
        return Subbase(self.mask | other.mask)

    def __le__(self, other: "Subbase") -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "Subbase") -> bool:
        return self.mask != other.mask and self <= other

    def sort_key(self) -> tuple[int, int]:
        """Canonical order: larger sets first, then by bitmask value."""
        return (-len(self), self.mask)

    def __repr__(self) -> str:
        return "Subbase({" + ", ".join(map(str, self.indices)) + "})"


@dataclass(frozen=True)
class SubbaseFamily:
    """Distinct subbases of one base, kept in canonical order."""

    base: BeliefBase
    sets: tuple[Subbase, ...] = field(default=())

    def __post_init__(self):
        uniq = sorted(set(self.sets), key=Subbase.sort_key)
        full = self.base.full_mask
        for s in uniq:
            if s.mask & ~full:
                raise InvalidFamily(f"{s!r} has indices outside a base of size {len(self.base)}")
        object.__setattr__(self, "sets", tuple(uniq))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[Subbase]:
        return iter(self.sets)

    def __contains__(self, s: Subbase) -> bool:
        return s in self.sets

    def formulas(self, s: Subbase) -> list[Formula]:
        return self.base.select(s.mask)

    def intersection(self) -> Subbase:
        """Common members of every set; the empty subbase for an empty family."""
        if not self.sets:
            return Subbase(0)
        m = self.base.full_mask
        for s in self.sets:
            m &= s.mask
        return Subbase(m)

    def with_sets(self, sets: Iterable[Subbase]) -> "SubbaseFamily":
        return SubbaseFamily(self.base, tuple(sets))


class ConsistencyOracle:
    """Memoized ``S ∪ {mu}`` satisfiability checks over one base."""

    def __init__(self, base: BeliefBase, mu: Formula):
        self.base = base
        self.mu = mu
        self._enc = Encoder()
        self._mu_clauses = self._enc.encode(mu)
        self._clauses = [self._enc.encode(f) for f in base]
        self._memo: dict[int, bool] = {}
        self.calls = 0

    def __call__(self, mask: int) -> bool:
        if mask not in self._memo:
            self.calls += 1
            clauses = list(self._mu_clauses)
            for i in Subbase(mask):
                clauses.extend(self._clauses[i])
            self._memo[mask] = dpll(clauses)
        return self._memo[mask]


def check_limits(base: BeliefBase, extra: Sequence[Formula], limits: Limits) -> None:
    if len(base) > limits.max_base:
        raise CapExceeded(f"base of {len(base)} formulas exceeds the cap of {limits.max_base}")
    n = len(variables([*base, *extra]))
    if n > limits.max_vars:
        raise CapExceeded(f"{n} variables exceed the cap of {limits.max_vars}")


def enumerate_inclusion_maximal(base: BeliefBase, mu: Formula,
                                limits: Limits = Limits()) -> SubbaseFamily:
    """W(B, mu): subsets of ``base`` consistent with ``mu`` and maximal under inclusion."""
    check_limits(base, [mu], limits)
    return _enumerate(base, mu)


@lru_cache(maxsize=256)
def _enumerate(base: BeliefBase, mu: Formula) -> SubbaseFamily:
    consistent = ConsistencyOracle(base, mu)
    if not consistent(0):
        raise InconsistentInput("the new information is unsatisfiable")
    found: list[int] = []
    level = {base.full_mask}
    while level:
        below: set[int] = set()
        for m in level:
            if any(m & f == m for f in found):
                continue
            if consistent(m):
                found.append(m)
            else:
                rest = m
                while rest:
                    bit = rest & -rest
                    below.add(m & ~bit)
                    rest ^= bit
        # sets found on this level are incomparable; only higher levels can absorb
        level = below
    return SubbaseFamily(base, tuple(Subbase(m) for m in found))


def brute_force_maximal(base: BeliefBase, mu: Formula) -> SubbaseFamily:
    """Reference W(B, mu) by truth-table scan of all 2^|B| subsets."""
    n = len(base)
    ok = [m for m in range(1 << n) if truth_table_satisfiable([mu, *base.select(m)])]
    if not ok:
        raise InconsistentInput("the new information is unsatisfiable")
    okset = set(ok)
    maximal = []
    for m in ok:
        free = base.full_mask & ~m
        ext, bit_iter = False, free
        while bit_iter:
            bit = bit_iter & -bit_iter
            if (m | bit) in okset:
                ext = True
                break
            bit_iter ^= bit
        if not ext:
            maximal.append(Subbase(m))
    return SubbaseFamily(base, tuple(maximal))


def filter_cardinality_maximal(family: SubbaseFamily) -> SubbaseFamily:
    """Members of ``family`` with the largest cardinality."""
    if not family.sets:
        return family
    best = max(len(s) for s in family)
    return family.with_sets(s for s in family if len(s) == best)


def all_intersections(family: SubbaseFamily) -> SubbaseFamily:
    """Foc∩: every nonempty intersection of two or more members.

    Pairwise intersections closed under further intersection give exactly
    the sub-collection intersections.
    """
    sets = [s.mask for s in family]
    found = {a & b for i, a in enumerate(sets) for b in sets[i + 1:]} - {0}
    frontier = set(found)
    while frontier:
        new = {a & b for a in frontier for b in found} - {0} - found
        found |= new
        frontier = new
    return family.with_sets(Subbase(m) for m in found)


def inclusion_maximal_members(family: SubbaseFamily) -> SubbaseFamily:
    return family.with_sets(s for s in family if not any(s < t for t in family))

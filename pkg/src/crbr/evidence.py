"""Dempster-Shafer evidence over the subsets of a belief base.

The frame of discernment is the base itself; focal sets are subbases and
masses are exact :class:`fractions.Fraction` values. Decimals appear only
through :func:`dec4` at the reporting boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping

from .errors import EmptySubbase, TotalConflict
from .formula import BeliefBase
from .subbase import Subbase, SubbaseFamily, all_intersections

Rational = Fraction


def dec4(x: Fraction) -> str:
    """Four decimal places, rounding half away from zero."""
    sign = "-" if x < 0 else ""
    scaled = abs(x) * 10_000
    q = int(scaled)
    if scaled - q >= Fraction(1, 2):
        q += 1
    return f"{sign}{q // 10_000}.{q % 10_000:04d}"


@dataclass(frozen=True)
class MassFunction:
    """A normalized BBA over a frame of ``frame_size`` indexed statements."""

    frame_size: int
    masses: Mapping[Subbase, Fraction]

    def __post_init__(self):
        full = (1 << self.frame_size) - 1
        clean = {}
        for s, v in self.masses.items():
            v = Fraction(v)
            if v < 0:
                raise ValueError(f"negative mass {v} on {s!r}")
            if v == 0:
                continue
            if not s:
                raise ValueError("the empty set cannot carry mass")
            if s.mask & ~full:
                raise ValueError(f"{s!r} lies outside the frame")
            clean[s] = v
        if sum(clean.values()) != 1:
            raise ValueError(f"masses sum to {sum(clean.values())}, not 1")
        object.__setattr__(self, "masses", dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key())))

    @property
    def frame(self) -> Subbase:
        return Subbase((1 << self.frame_size) - 1)

    def __getitem__(self, s: Subbase) -> Fraction:
        return self.masses.get(s, Fraction(0))

    def focal_sets(self) -> list[Subbase]:
        return list(self.masses)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame_size == other.frame_size and self.masses == other.masses

    def __hash__(self) -> int:
        return hash((self.frame_size, frozenset(self.masses.items())))

    @classmethod
    def vacuous(cls, frame_size: int) -> "MassFunction":
        return cls(frame_size, {Subbase((1 << frame_size) - 1): Fraction(1)})


def simple_bba(sub: Subbase, base: BeliefBase) -> MassFunction:
    """Mass |sub|/|B| on ``sub``, the remaining ignorance on the whole base."""
    if not sub:
        raise EmptySubbase("a simple mass function needs a nonempty subbase")
    n = len(base)
    frame = Subbase(base.full_mask)
    if not sub <= frame:
        raise ValueError(f"{sub!r} is not a subbase of a base of size {n}")
    if sub == frame:
        return MassFunction.vacuous(n)
    share = Fraction(len(sub), n)
    return MassFunction(n, {sub: share, frame: 1 - share})


def combine_with_conflict(m1: MassFunction, m2: MassFunction) -> tuple[MassFunction, Fraction]:
    """Dempster's rule; also returns the conflict mass k sent to the empty set."""
    if m1.frame_size != m2.frame_size:
        raise ValueError("mass functions are defined on different frames")
    raw: dict[Subbase, Fraction] = {}
    k = Fraction(0)
    for x, a in m1.masses.items():
        for y, b in m2.masses.items():
            z = x & y
            if z:
                raw[z] = raw.get(z, Fraction(0)) + a * b
            else:
                k += a * b
    if k == 1:
        raise TotalConflict("the two mass functions are in total conflict")
    norm = 1 - k
    return MassFunction(m1.frame_size, {z: v / norm for z, v in raw.items()}), k


def dempster_combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    return combine_with_conflict(m1, m2)[0]


def combine_all(ms: Iterable[MassFunction]) -> MassFunction:
    ms = list(ms)
    if not ms:
        raise ValueError("combine_all needs at least one mass function")
    return reduce(dempster_combine, ms)


def belief_of(m: MassFunction, a: Subbase) -> Fraction:
    return sum((v for x, v in m.masses.items() if x <= a), Fraction(0))


def plausibility_of(m: MassFunction, a: Subbase) -> Fraction:
    return sum((v for x, v in m.masses.items() if x & a), Fraction(0))


@dataclass(frozen=True)
class CredibilityRow:
    subbase: Subbase
    mass: Fraction
    belief: Fraction


@dataclass(frozen=True)
class CredibilityTable:
    """Combined evidence of a subbase family.

    ``conflict`` is the total mass the n-way combination sends to the empty
    set, i.e. ``1 - prod(1 - k_step)``; ``step_conflicts`` holds the k of each
    pairwise fold in order.
    """

    family: SubbaseFamily
    members: tuple[CredibilityRow, ...]
    intersections: tuple[CredibilityRow, ...]
    combined: MassFunction
    step_conflicts: tuple[Fraction, ...]
    conflict: Fraction

    @property
    def base_mass(self) -> Fraction:
        return self.combined[self.combined.frame]

    def belief(self, s: Subbase) -> Fraction:
        return belief_of(self.combined, s)

    def most_credible_members(self) -> list[Subbase]:
        return _argmax(self.members)

    def most_credible_intersections(self) -> list[Subbase]:
        return _argmax(self.intersections)


def _argmax(rows: Iterable[CredibilityRow]) -> list[Subbase]:
    rows = list(rows)
    if not rows:
        return []
    best = max(r.belief for r in rows)
    return [r.subbase for r in rows if r.belief == best]


def credibility_table(family: SubbaseFamily) -> CredibilityTable:
    """Simple BBA per member, Dempster combination, then Bel of members and of Foc∩."""
    if not family.sets:
        raise ValueError("credibility needs a nonempty family")
    bbas = [simple_bba(s, family.base) for s in family]
    combined = bbas[0]
    steps = []
    for m in bbas[1:]:
        combined, k = combine_with_conflict(combined, m)
        steps.append(k)
    survive = Fraction(1)
    for k in steps:
        survive *= 1 - k
    focs = all_intersections(family)
    return CredibilityTable(
        family=family,
        members=tuple(CredibilityRow(s, combined[s], belief_of(combined, s)) for s in family),
        intersections=tuple(CredibilityRow(x, combined[x], belief_of(combined, x)) for x in focs),
        combined=combined,
        step_conflicts=tuple(steps),
        conflict=1 - survive,
    )

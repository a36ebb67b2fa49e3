"""Seeded random formulas and bases for property checks and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .formula import (
    BOTTOM, TOP, And, Atom, BeliefBase, Formula, Iff, Implies, Not, Or, Xor,
)
from .sat import is_satisfiable

_BINARY = (And, Or, Xor, Implies, Iff)


@dataclass(frozen=True)
class CorpusConfig:
    max_base: int = 10
    max_vars: int = 6
    max_depth: int = 3
    p_constant: float = 0.02


def random_formula(rng: random.Random, atoms: list[str], depth: int,
                   p_constant: float = 0.0) -> Formula:
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < p_constant:
            return rng.choice((TOP, BOTTOM))
        a = Atom(rng.choice(atoms))
        return Not(a) if rng.random() < 0.4 else a
    if rng.random() < 0.15:
        return Not(random_formula(rng, atoms, depth - 1, p_constant))
    cls = rng.choice(_BINARY)
    return cls(random_formula(rng, atoms, depth - 1, p_constant),
               random_formula(rng, atoms, depth - 1, p_constant))


def random_case(rng: random.Random, cfg: CorpusConfig = CorpusConfig()) -> tuple[BeliefBase, Formula]:
    """A base of distinct formulas and a satisfiable new formula over shared atoms."""
    atoms = [f"p{i}" for i in range(rng.randint(1, cfg.max_vars))]
    size = rng.randint(0, cfg.max_base)
    formulas: list[Formula] = []
    for _ in range(8 * size):
        if len(formulas) == size:
            break
        f = random_formula(rng, atoms, rng.randint(0, cfg.max_depth), cfg.p_constant)
        if f not in formulas:
            formulas.append(f)
    while True:
        mu = random_formula(rng, atoms, rng.randint(0, 2))
        if is_satisfiable([mu]):
            return BeliefBase(tuple(formulas)), mu


def corpus(seed: int, count: int, cfg: CorpusConfig = CorpusConfig()):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_case(rng, cfg)

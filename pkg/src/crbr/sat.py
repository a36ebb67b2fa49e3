"""Satisfiability, entailment and equivalence over finite formula sets.

Formulas are clausified with a Tseitin encoding (fresh variables are
internal and never leave this module) and decided by a small DPLL solver.
``truth_table_satisfiable`` is the exhaustive reference used by the tests.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded
from .formula import (
    And, Atom, Bottom, Formula, Iff, Implies, Not, Or, Top, Xor, evaluate, variables,
)

DEFAULT_MAX_VARS = 24

Clause = tuple[int, ...]


class Encoder:
    """Tseitin clausifier with a shared atom-to-variable map.

    Each call to :meth:`encode` returns clauses asserting one formula; the
    clause lists of several formulas can be concatenated freely, which lets
    callers test many subsets of a base without re-encoding.
    """

    def __init__(self):
        self.atoms: dict[str, int] = {}
        self.next_var = 1
        self._cache: dict[Formula, tuple[int, tuple[Clause, ...]]] = {}

    def _fresh(self) -> int:
        v = self.next_var
        self.next_var += 1
        return v

    def _atom(self, name: str) -> int:
        if name not in self.atoms:
            self.atoms[name] = self._fresh()
        return self.atoms[name]

    def _lit(self, f: Formula, out: list[Clause]) -> int:
        if isinstance(f, Atom):
            return self._atom(f.name)
        if isinstance(f, Not):
            return -self._lit(f.child, out)
        if isinstance(f, (Top, Bottom)):
            x = self._fresh()
            out.append((x,) if isinstance(f, Top) else (-x,))
            return x
        a = self._lit(f.left, out)
        b = self._lit(f.right, out)
        x = self._fresh()
        if isinstance(f, And):
            out += [(-x, a), (-x, b), (x, -a, -b)]
        elif isinstance(f, Or):
            out += [(-x, a, b), (x, -a), (x, -b)]
        elif isinstance(f, Implies):
            out += [(-x, -a, b), (x, a), (x, -b)]
        elif isinstance(f, Xor):
            out += [(-x, a, b), (-x, -a, -b), (x, -a, b), (x, a, -b)]
        elif isinstance(f, Iff):
            out += [(-x, -a, b), (-x, a, -b), (x, a, b), (x, -a, -b)]
        else:
            raise TypeError(f"not a formula: {f!r}")
        return x

    def encode(self, f: Formula) -> tuple[Clause, ...]:
        if f not in self._cache:
            out: list[Clause] = []
            root = self._lit(f, out)
            out.append((root,))
            self._cache[f] = (root, tuple(out))
        return self._cache[f][1]


def _propagate(clauses: list[Clause], lit: int) -> list[Clause] | None:
    neg = -lit
    out = []
    for c in clauses:
        if lit in c:
            continue
        if neg in c:
            c = tuple([l for l in c if l != neg])
            if not c:
                return None
        out.append(c)
    return out


def dpll(clauses: Iterable[Clause]) -> bool:
    """Decide satisfiability of a clause set (unit propagation + branching)."""
    stack: list[list[Clause]] = [list(clauses)]
    while stack:
        cs: list[Clause] | None = stack.pop()
        while cs:
            unit = next((c[0] for c in cs if len(c) == 1), None)
            if unit is None:
                break
            cs = _propagate(cs, unit)
        if cs is None:
            continue
        if not cs:
            return True
        # branch on a literal of the shortest clause
        lit = min(cs, key=len)[0]
        for choice in (-lit, lit):
            nxt = _propagate(cs, choice)
            if nxt is not None:
                stack.append(nxt)
    return False


def _check_cap(fs: Sequence[Formula], max_vars: int | None) -> frozenset[str]:
    names = variables(fs)
    if max_vars is not None and len(names) > max_vars:
        raise CapExceeded(f"{len(names)} variables exceed the cap of {max_vars}")
    return names


def is_satisfiable(fs: Iterable[Formula], max_vars: int | None = DEFAULT_MAX_VARS) -> bool:
    fs = list(fs)
    _check_cap(fs, max_vars)
    enc = Encoder()
    clauses: list[Clause] = []
    for f in fs:
        clauses.extend(enc.encode(f))
    return dpll(clauses)


def entails(fs: Iterable[Formula], psi: Formula, max_vars: int | None = DEFAULT_MAX_VARS) -> bool:
    """True iff every model of ``fs`` satisfies ``psi``."""
    return not is_satisfiable([*fs, Not(psi)], max_vars)


def equivalent(f: Formula, g: Formula, max_vars: int | None = DEFAULT_MAX_VARS) -> bool:
    return not is_satisfiable([Xor(f, g)], max_vars)


def assignments(names: Iterable[str]) -> Iterator[dict[str, bool]]:
    """Every total assignment over ``names``, in a fixed order."""
    names = sorted(names)
    for bits in product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def truth_table_satisfiable(fs: Iterable[Formula]) -> bool:
    """Exhaustive reference decision procedure."""
    fs = list(fs)
    return any(all(evaluate(f, v) for f in fs) for v in assignments(variables(fs)))

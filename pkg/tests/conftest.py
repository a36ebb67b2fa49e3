from pathlib import Path

import pytest
from hypothesis import strategies as st

from crbr.formula import (
    BOTTOM, TOP, And, Atom, BeliefBase, Iff, Implies, Not, Or, Xor, parse, parse_base,
)
from crbr.subbase import Subbase, SubbaseFamily

DATA = Path(__file__).resolve().parent.parent / "data"

ATOMS = ["a", "b", "c", "d", "e", "f"]


def formulas(atoms=ATOMS, max_leaves=12):
    leaves = st.one_of(st.sampled_from(atoms).map(Atom), st.sampled_from([TOP, BOTTOM]))
    binary = st.sampled_from([And, Or, Xor, Implies, Iff])

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.tuples(binary, children, children).map(lambda t: t[0](t[1], t[2])),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


@st.composite
def bases(draw, atoms=ATOMS[:4], max_size=6):
    fs = draw(st.lists(formulas(atoms, max_leaves=5), max_size=max_size, unique=True))
    return BeliefBase(tuple(fs))


@pytest.fixture
def ex2():
    """Base, new information (exclusive-or reading) and listed family of the CSRG example."""
    base = parse_base((DATA / "ex2.base").read_text())
    fam = SubbaseFamily(base, tuple(Subbase.of(s) for s in
                                    ([0, 1, 2], [0, 2, 3], [0, 4], [5, 6, 7, 8])))
    return base, parse("a & (b ^ e)"), fam


@pytest.fixture
def ex3():
    base = parse_base((DATA / "ex3.base").read_text())
    fam = SubbaseFamily(base, tuple(Subbase.of(s) for s in
                                    ([0, 1, 2, 3], [4, 5, 6, 7], [0, 8, 9], [4, 8, 9])))
    return base, parse("a & !e"), fam

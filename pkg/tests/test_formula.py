import pytest
from hypothesis import given

from crbr.errors import DuplicateFormula, FormulaSyntaxError, UnassignedAtom
from crbr.formula import (
    BOTTOM, TOP, And, Atom, BeliefBase, Iff, Implies, Not, Or, Xor, evaluate, parse,
    parse_base, render, variables,
)

from conftest import DATA, formulas

a, b, c, e = Atom("a"), Atom("b"), Atom("c"), Atom("e")


@pytest.mark.parametrize("text, tree", [
    ("a -> !b", Implies(a, Not(b))),
    ("a & (b <-> e)", And(a, Iff(b, e))),
    ("a -> b -> c", Implies(a, Implies(b, c))),
    ("a <-> b <-> c", Iff(a, Iff(b, c))),
    ("a & b & c", And(And(a, b), c)),
    ("a | b & c", Or(a, And(b, c))),
    ("a ^ b | c", Xor(a, Or(b, c))),
    ("a -> b ^ c", Implies(a, Xor(b, c))),
    ("a <-> b -> c", Iff(a, Implies(b, c))),
    ("!!a", Not(Not(a))),
    ("top & bot", And(TOP, BOTTOM)),
    ("  a\t&\n b ", And(a, b)),
])
def test_parse_precedence_and_associativity(text, tree):
    assert parse(text) == tree


def test_unicode_aliases():
    assert parse("¬a ∧ b ∨ c → a ⊕ e ↔ ⊤") == parse("!a & b | c -> a ^ e <-> top")
    assert parse("a ⟷ b") == Iff(a, b)
    assert parse("⊥") == BOTTOM


def test_atom_lexical_class():
    assert parse("x1_Y") == Atom("x1_Y")
    assert parse("topx") == Atom("topx")
    with pytest.raises(FormulaSyntaxError):
        parse("Abc")
    with pytest.raises(FormulaSyntaxError):
        parse("1a")


@pytest.mark.parametrize("text, offset", [
    ("a &", 3),
    ("(a | b", 6),
    ("a b", 2),
    ("¬ $", 3),  # '¬' is two bytes in UTF-8
    ("", 0),
])
def test_syntax_error_reports_byte_offset(text, offset):
    with pytest.raises(FormulaSyntaxError) as info:
        parse(text)
    assert info.value.offset == offset
    assert info.value.expected


def test_render_is_ascii():
    f = parse("¬a ∧ (b ↔ e)")
    assert render(f) == "!a & (b <-> e)"
    assert render(parse("(a -> b) -> c")) == "(a -> b) -> c"
    assert render(parse("a & (b & c)")) == "a & (b & c)"


@given(formulas())
def test_render_parse_round_trip(f):
    assert parse(render(f)) == f


def test_variables():
    assert variables([TOP]) == frozenset()
    assert variables([parse("a -> !b"), b]) == {"a", "b"}
    base = parse_base((DATA / "ex2.base").read_text())
    assert variables(base) == {"a", "b", "c", "d", "e"}


def test_evaluate():
    assert evaluate(Xor(a, b), {"a": True, "b": True}) is False
    assert evaluate(Iff(a, b), {"a": True, "b": True}) is True
    assert evaluate(parse("a -> !b"), {"a": True, "b": False}) is True
    assert evaluate(TOP, {}) and not evaluate(BOTTOM, {})
    with pytest.raises(UnassignedAtom):
        evaluate(And(a, b), {"a": True})


def test_base_rejects_structural_duplicates():
    with pytest.raises(DuplicateFormula):
        BeliefBase.of("a", "b", "a")
    # structural identity only: commuted conjunctions are distinct formulas
    assert len(BeliefBase.of("a & b", "b & a")) == 2


def test_parse_base_file_format():
    base = parse_base("# comment\n\na -> b\n  b\n")
    assert base.formulas == (parse("a -> b"), b)
    with pytest.raises(DuplicateFormula, match="line 3 duplicates line 1"):
        parse_base("a\nb\na\n")
    with pytest.raises(FormulaSyntaxError, match="line 2"):
        parse_base("a\na &\n")

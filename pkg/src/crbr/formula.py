"""Propositional formulas: AST, parser, renderer and classical evaluation.

Grammar (ASCII, whitespace insignificant), loosest binding first::

    iff     := implies ('<->' iff)?
    implies := xor ('->' implies)?
    xor     := or ('^' or)*
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '!' unary | atom | 'top' | 'bot' | '(' iff ')'

Unicode aliases ``¬ ∧ ∨ ⊕ → ↔ ⊤ ⊥`` are accepted on input. Rendering
always emits ASCII with the fewest parentheses that still re-parse to the
same tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import DuplicateFormula, FormulaSyntaxError, UnassignedAtom

__all__ = [
    "Formula", "Atom", "Not", "And", "Or", "Xor", "Implies", "Iff", "Top", "Bottom",
    "TOP", "BOTTOM", "parse", "render", "variables", "evaluate", "conjoin", "disjoin",
    "BeliefBase", "parse_base",
]


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Top:
    def __str__(self) -> str:
        return "top"


@dataclass(frozen=True)
class Bottom:
    def __str__(self) -> str:
        return "bot"


@dataclass(frozen=True)
class Not:
    child: "Formula"

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class _Binary:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return render(self)


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Xor(_Binary):
    pass


class Implies(_Binary):
    pass


class Iff(_Binary):
    pass


Formula = Union[Atom, Top, Bottom, Not, And, Or, Xor, Implies, Iff]

TOP = Top()
BOTTOM = Bottom()

_SYMBOL = {And: "&", Or: "|", Xor: "^", Implies: "->", Iff: "<->"}
_PREC = {Iff: 1, Implies: 2, Xor: 3, Or: 4, And: 5, Not: 6}
_RIGHT_ASSOC = (Implies, Iff)


# -- lexer -----------------------------------------------------------------

_ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")
_OPERATORS = [
    ("<->", "IFF"), ("->", "IMP"),
    ("↔", "IFF"), ("⟷", "IFF"), ("→", "IMP"),
    ("!", "NOT"), ("¬", "NOT"), ("&", "AND"), ("∧", "AND"),
    ("|", "OR"), ("∨", "OR"), ("^", "XOR"), ("⊕", "XOR"),
    ("(", "LP"), (")", "RP"), ("⊤", "TOP"), ("⊥", "BOT"),
]
_KEYWORDS = {"top": "TOP", "bot": "BOT"}


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _ATOM_RE.match(text, pos)
        if m:
            word = m.group()
            tokens.append((_KEYWORDS.get(word, "ATOM"), word, pos))
            pos = m.end()
            continue
        for sym, kind in _OPERATORS:
            if text.startswith(sym, pos):
                tokens.append((kind, sym, pos))
                pos += len(sym)
                break
        else:
            raise FormulaSyntaxError(f"unexpected character {ch!r}", _byte_offset(text, pos),
                                     "atom, constant, '!' or '('")
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        kind, value, pos = self.tokens[self.i]
        found = "end of input" if kind == "EOF" else repr(value)
        raise FormulaSyntaxError(f"unexpected {found}", _byte_offset(self.text, pos), expected)

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek() != "EOF":
            self.fail("binary connective or end of input")
        return f

    def iff(self) -> Formula:
        left = self.implies()
        if self.peek() == "IFF":
            self.advance()
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.left_chain(0)
        if self.peek() == "IMP":
            self.advance()
            return Implies(left, self.implies())
        return left

    _CHAIN = (("XOR", Xor), ("OR", Or), ("AND", And))

    def left_chain(self, level: int) -> Formula:
        if level == len(self._CHAIN):
            return self.unary()
        kind, cls = self._CHAIN[level]
        f = self.left_chain(level + 1)
        while self.peek() == kind:
            self.advance()
            f = cls(f, self.left_chain(level + 1))
        return f

    def unary(self) -> Formula:
        kind = self.peek()
        if kind == "NOT":
            self.advance()
            return Not(self.unary())
        if kind == "ATOM":
            return Atom(self.advance()[1])
        if kind == "TOP":
            self.advance()
            return TOP
        if kind == "BOT":
            self.advance()
            return BOTTOM
        if kind == "LP":
            self.advance()
            f = self.iff()
            if self.peek() != "RP":
                self.fail("')'")
            self.advance()
            return f
        self.fail("atom, constant, '!' or '('")


def parse(text: str) -> Formula:
    """Parse formula text into an AST.

    >>> parse("a -> !b")
    Implies(left=Atom(name='a'), right=Not(child=Atom(name='b')))
    """
    return _Parser(text).parse()


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 7)


def render(f: Formula) -> str:
    """Render ``f`` as ASCII text that parses back to an identical tree."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Bottom):
        return "bot"
    if isinstance(f, Not):
        inner = render(f.child)
        return "!" + (f"({inner})" if _prec(f.child) < _PREC[Not] else inner)
    p = _PREC[type(f)]
    right_assoc = isinstance(f, _RIGHT_ASSOC)
    left, right = render(f.left), render(f.right)
    lp, rp = _prec(f.left), _prec(f.right)
    if lp < p or (lp == p and right_assoc):
        left = f"({left})"
    if rp < p or (rp == p and not right_assoc):
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


def _walk(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, _Binary):
            stack.append(node.right)
            stack.append(node.left)


def variables(fs: Iterable[Formula]) -> frozenset[str]:
    """Atom names occurring in any of ``fs``."""
    return frozenset(n.name for f in fs for n in _walk(f) if isinstance(n, Atom))


def evaluate(f: Formula, v: Mapping[str, bool]) -> bool:
    """Classical truth value of ``f`` under the assignment ``v``."""
    if isinstance(f, Atom):
        try:
            return bool(v[f.name])
        except KeyError:
            raise UnassignedAtom(f.name) from None
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not evaluate(f.child, v)
    a = evaluate(f.left, v)
    if isinstance(f, And):
        return a and evaluate(f.right, v)
    if isinstance(f, Or):
        return a or evaluate(f.right, v)
    if isinstance(f, Implies):
        return (not a) or evaluate(f.right, v)
    b = evaluate(f.right, v)
    if isinstance(f, Xor):
        return a != b
    return a == b


def conjoin(fs: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; ``top`` for an empty sequence."""
    out = None
    for f in fs:
        out = f if out is None else And(out, f)
    return TOP if out is None else out


def disjoin(fs: Iterable[Formula]) -> Formula:
    """Left-nested disjunction; ``bot`` for an empty sequence."""
    out = None
    for f in fs:
        out = f if out is None else Or(out, f)
    return BOTTOM if out is None else out


@dataclass(frozen=True)
class BeliefBase:
    """An ordered finite set of formulas; a formula's position is its index."""

    formulas: tuple[Formula, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "formulas", tuple(self.formulas))
        seen: dict[Formula, int] = {}
        for i, f in enumerate(self.formulas):
            if f in seen:
                raise DuplicateFormula(f"formula {i} duplicates formula {seen[f]}: {render(f)}")
            seen[f] = i

    def __len__(self) -> int:
        return len(self.formulas)

    def __iter__(self):
        return iter(self.formulas)

    def __getitem__(self, i: int) -> Formula:
        return self.formulas[i]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.formulas)) - 1

    def select(self, mask: int) -> list[Formula]:
        """Formulas whose index bit is set in ``mask``, in index order."""
        return [f for i, f in enumerate(self.formulas) if mask >> i & 1]

    @classmethod
    def of(cls, *texts: str) -> "BeliefBase":
        return cls(tuple(parse(t) for t in texts))


def parse_base(text: str) -> BeliefBase:
    """Parse base-file text: one formula per line, ``#`` comments and blanks skipped.

    Syntax errors and duplicates are reported with 1-based line numbers.
    """
    formulas: list[Formula] = []
    lines: dict[Formula, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            f = parse(stripped)
        except FormulaSyntaxError as exc:
            raise FormulaSyntaxError(f"line {lineno}: {exc.message}", exc.offset, exc.expected) from None
        if f in lines:
            raise DuplicateFormula(f"line {lineno} duplicates line {lines[f]}: {render(f)}")
        lines[f] = lineno
        formulas.append(f)
    return BeliefBase(tuple(formulas))

"""Exception hierarchy shared by every layer of the engine."""


class CrbrError(Exception):
    """Base class for all errors raised by the package."""


class FormulaSyntaxError(CrbrError, ValueError):
    """Raised when formula text does not conform to the grammar.

    ``offset`` is the UTF-8 byte offset of the offending token and
    ``expected`` a short human readable hint of what the parser wanted.
    """

    def __init__(self, message: str, offset: int, expected: str = ""):
        self.message = message
        self.offset = offset
        self.expected = expected
        detail = f"{message} at byte {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class DuplicateFormula(CrbrError, ValueError):
    """A belief base contains two structurally identical formulas."""


class UnassignedAtom(CrbrError, KeyError):
    """An assignment is missing a value for an atom of the formula."""


class CapExceeded(CrbrError):
    """The variable or base-size guardrail was exceeded."""


class InconsistentInput(CrbrError):
    """Revision was requested with an unsatisfiable new formula."""


class EmptySubbase(CrbrError, ValueError):
    """A simple mass function was requested for the empty subbase."""


class TotalConflict(CrbrError):
    """Dempster combination of two fully conflicting mass functions."""


class InvalidFamily(CrbrError, ValueError):
    """A supplied subbase family is malformed or not usable for revision."""

"""Exception hierarchy shared by every engine module.

Everything the engine can raise on user input derives from SymbaError, so
the REPL can catch one base class and keep the session alive.
"""


class SymbaError(Exception):
    """Base class for all engine errors."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self) -> str:
        if self.position is not None:
            return f"{self.message} (at position {self.position})"
        return self.message


class ParseError(SymbaError):
    """Input text is not a sentence of the expression grammar."""

    def __init__(self, message: str, position: int, expected: set[str] | None = None):
        super().__init__(message, position)
        self.expected = frozenset(expected or ())


# --- coefficient rings ---

class ZeroDenominator(SymbaError):
    pass


class BadModulus(SymbaError):
    pass


class ModulusMismatch(SymbaError):
    pass


class NotOrdered(SymbaError):
    """abs/sign requested for a ring with no order (modular integers)."""


# --- polynomials and factories ---

class LengthMismatch(SymbaError):
    pass


class NotAPolynomialRing(SymbaError):
    pass


class WrongCoefficientRing(SymbaError):
    pass


class FactoryMismatch(SymbaError):
    pass


class NegativeExponent(SymbaError):
    pass


class BadVariables(SymbaError):
    """Empty, malformed, or duplicated variable names in a ring factory."""


# --- coercion ---

class NotInTower(SymbaError):
    pass


class IncompatibleRings(SymbaError):
    pass


# --- evaluation ---

class EvalError(SymbaError):
    """Base for errors raised while evaluating an AST."""


class UnboundName(EvalError):
    pass


class ArityError(EvalError):
    pass


class EvalTypeError(EvalError):
    """Operand or argument of the wrong kind (indexing a polynomial, etc.)."""

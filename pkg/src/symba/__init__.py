"""symba: a computer-algebra engine with reconstructing output.

Every value the engine prints is a valid input expression that evaluates
back to an equal value with the identical printed form. The engine covers
arbitrary-precision integers, reduced rationals, modular integers, and
sparse multivariate polynomials over towers of those rings, with automatic
coercion between tower levels.
"""

from .coefficients import (
    ModInt,
    Rational,
    int_arith,
    mod_arith,
    mod_make,
    rat_arith,
    rat_make,
)
from .coercion import CoercionPair, base, coerce, depth, lift, natural_factory
from .errors import (
    ArityError,
    BadModulus,
    BadVariables,
    EvalError,
    EvalTypeError,
    FactoryMismatch,
    IncompatibleRings,
    LengthMismatch,
    ModulusMismatch,
    NegativeExponent,
    NotAPolynomialRing,
    NotInTower,
    NotOrdered,
    ParseError,
    SymbaError,
    UnboundName,
    WrongCoefficientRing,
    ZeroDenominator,
)
from .evaluator import (
    Builtin,
    Context,
    dispatch,
    eval_expr,
    eval_statement,
    new_context,
    power,
    prelude,
)
from .polynomial import (
    QQ,
    ZZ,
    Polynomial,
    PolyRing,
    RingFactory,
    TermOrder,
    Zn,
    generators,
    poly_arith,
    poly_pow,
    term_cmp,
    value_of,
)
from .syntax import (
    is_reconstructing,
    parse,
    parse_expression,
    print_pretty,
    print_value,
    reconstruction_failure,
)

__all__ = [
    "ArityError",
    "BadModulus",
    "BadVariables",
    "Builtin",
    "CoercionPair",
    "Context",
    "EvalError",
    "EvalTypeError",
    "FactoryMismatch",
    "IncompatibleRings",
    "LengthMismatch",
    "ModInt",
    "ModulusMismatch",
    "NegativeExponent",
    "NotAPolynomialRing",
    "NotInTower",
    "NotOrdered",
    "ParseError",
    "Polynomial",
    "PolyRing",
    "QQ",
    "Rational",
    "RingFactory",
    "SymbaError",
    "TermOrder",
    "UnboundName",
    "WrongCoefficientRing",
    "ZZ",
    "ZeroDenominator",
    "Zn",
    "base",
    "coerce",
    "depth",
    "dispatch",
    "eval_expr",
    "eval_statement",
    "generators",
    "int_arith",
    "is_reconstructing",
    "lift",
    "mod_arith",
    "mod_make",
    "natural_factory",
    "new_context",
    "parse",
    "parse_expression",
    "poly_arith",
    "poly_pow",
    "power",
    "prelude",
    "print_pretty",
    "print_value",
    "rat_arith",
    "rat_make",
    "reconstruction_failure",
    "term_cmp",
    "value_of",
]

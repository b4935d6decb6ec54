"""Sparse multivariate polynomials over first-class ring factories.

A factory describes a ring: ZZ, QQ, Zn(m), or PolyRing(coefficients, vars,
order). Polynomial values are sparse maps from exponent vectors to
coefficient values, kept in ascending term order so printing and equality
are deterministic.

Canonical-form rules enforced here:
  * no stored coefficient is zero;
  * a polynomial that is just a constant does not exist as a Polynomial;
    it mutates to the (recursively mutated) coefficient, so `(1+x)-x`
    really is the integer 1;
  * the zero of any tower is the zero of its bottom base ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .coefficients import ModInt, Rational, int_arith, mod_arith, rat_arith
from .errors import (
    BadModulus,
    BadVariables,
    FactoryMismatch,
    LengthMismatch,
    NegativeExponent,
    NotAPolynomialRing,
    NotOrdered,
    WrongCoefficientRing,
)

ExpVec = tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class TermOrder(Enum):
    LEX = "lex"
    GRAD = "grad"

    def __str__(self) -> str:
        return f"PolyRing.{self.value}"


class RingFactory:
    """Marker base for ring descriptors."""

    def __str__(self) -> str:
        from .syntax import print_value

        return print_value(self)


@dataclass(frozen=True)
class ZZ(RingFactory):
    """The ring of integers."""


@dataclass(frozen=True)
class QQ(RingFactory):
    """The field of rationals."""


@dataclass(frozen=True)
class Zn(RingFactory):
    """Integers modulo a fixed modulus >= 2."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise BadModulus(f"modulus must be >= 2, got {self.modulus}")


@dataclass(frozen=True)
class PolyRing(RingFactory):
    """Polynomial ring over a coefficient factory, with named variables."""

    coefficients: RingFactory
    variables: tuple[str, ...]
    order: TermOrder

    def __post_init__(self):
        if not self.variables:
            raise BadVariables("a polynomial ring needs at least one variable")
        seen = set(tower_variables(self.coefficients))
        for name in self.variables:
            if not _NAME_RE.fullmatch(name):
                raise BadVariables(f"invalid variable name {name!r}")
            if name in seen:
                raise BadVariables(f"variable {name!r} already used in this tower")
            seen.add(name)


def tower_variables(f: RingFactory) -> list[str]:
    """All variable names declared anywhere in f's coefficient chain."""
    names: list[str] = []
    while isinstance(f, PolyRing):
        names.extend(f.variables)
        f = f.coefficients
    return names


def bottom(f: RingFactory) -> RingFactory:
    """The non-polynomial factory at the bottom of the tower."""
    while isinstance(f, PolyRing):
        f = f.coefficients
    return f


Value = Union[int, Rational, ModInt, "Polynomial"]


@dataclass(frozen=True)
class Polynomial:
    """Non-constant element of a PolyRing; terms sorted ascending."""

    factory: PolyRing
    terms: tuple[tuple[ExpVec, Value], ...]

    def __post_init__(self):
        nvars = len(self.factory.variables)
        assert self.terms, "empty polynomial must mutate to the bottom zero"
        assert not (len(self.terms) == 1 and not any(self.terms[0][0])), (
            "constant polynomial must mutate to its coefficient"
        )
        for exps, coeff in self.terms:
            assert len(exps) == nvars and all(e >= 0 for e in exps)
            assert not is_zero(coeff), "zero coefficient stored"
            assert is_element(self.factory.coefficients, coeff), (
                "coefficient outside the declared coefficient ring"
            )

    def __str__(self) -> str:
        from .syntax import print_value

        return print_value(self)


def is_int(v: object) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def is_element(ring: RingFactory, v: object) -> bool:
    """Does canonical value v denote an element of `ring`?

    Mutated constants count: an int is an element of every tower over ZZ
    or QQ, a ModInt of every tower over its Zn.
    """
    if isinstance(ring, ZZ):
        return is_int(v)
    if isinstance(ring, QQ):
        return is_int(v) or isinstance(v, Rational)
    if isinstance(ring, Zn):
        return isinstance(v, ModInt) and v.modulus == ring.modulus
    if isinstance(ring, PolyRing):
        if isinstance(v, Polynomial) and v.factory == ring:
            return True
        return is_element(ring.coefficients, v)
    return False


def is_zero(v: Value) -> bool:
    if is_int(v):
        return v == 0
    if isinstance(v, ModInt):
        return v.residue == 0
    return False  # normalized Rational/Polynomial are never zero


def zero_of(f: RingFactory) -> Value:
    b = bottom(f)
    if isinstance(b, Zn):
        return ModInt(0, b.modulus)
    return 0


def one_of(f: RingFactory) -> Value:
    b = bottom(f)
    if isinstance(b, Zn):
        return ModInt(1, b.modulus)
    return 1


def coefficient_sign(v: Value) -> int:
    """Sign used for printing and abs: ModInts count as non-negative,
    a polynomial takes the sign of its leading (highest-term) coefficient."""
    if is_int(v):
        return (v > 0) - (v < 0)
    if isinstance(v, Rational):
        return 1 if v.numerator > 0 else -1
    if isinstance(v, ModInt):
        return 1
    return coefficient_sign(v.terms[-1][1])


def term_cmp(order: TermOrder, a: ExpVec, b: ExpVec) -> int:
    """Total order on equal-length exponent vectors: -1, 0, or +1.

    lex compares left to right (first-declared variable most significant);
    grad compares total degree first, ties broken by lex.
    """
    if len(a) != len(b):
        raise LengthMismatch(f"exponent vectors of length {len(a)} and {len(b)}")
    if order is TermOrder.GRAD:
        da, db = sum(a), sum(b)
        if da != db:
            return -1 if da < db else 1
    return (a > b) - (a < b)


def _sort_key(order: TermOrder):
    if order is TermOrder.GRAD:
        return lambda item: (sum(item[0]), item[0])
    return lambda item: item[0]


def normalize_terms(f: PolyRing, terms: dict[ExpVec, Value]) -> Value:
    """Collapse a raw term map into canonical form.

    Zero coefficients are dropped; an empty map is the bottom zero; a lone
    constant term mutates to its coefficient; anything else becomes a
    Polynomial with terms sorted ascending in f's order.
    """
    live = {e: c for e, c in terms.items() if not is_zero(c)}
    if not live:
        return zero_of(f)
    if len(live) == 1:
        (exps, coeff), = live.items()
        if not any(exps):
            return coeff
    return Polynomial(f, tuple(sorted(live.items(), key=_sort_key(f.order))))


def as_term_map(f: PolyRing, v: Value) -> dict[ExpVec, Value]:
    """View a canonical element of f as a raw term map over f."""
    assert is_element(f, v), f"{v!r} is not an element of {f!r}"
    if isinstance(v, Polynomial) and v.factory == f:
        return dict(v.terms)
    if is_zero(v):
        return {}
    return {(0,) * len(f.variables): v}


def generators(f: RingFactory) -> tuple[Value, ...]:
    """The top-level variables of f as polynomials, in declaration order."""
    if not isinstance(f, PolyRing):
        raise NotAPolynomialRing(f"{f} has no generators")
    n = len(f.variables)
    one = one_of(f.coefficients)
    gens = []
    for i in range(n):
        exps = tuple(1 if j == i else 0 for j in range(n))
        gens.append(Polynomial(f, ((exps, one),)))
    return tuple(gens)


def value_of(f: RingFactory, c: Value) -> Value:
    """Embed a coefficient into f; the result immediately re-canonicalizes,
    so constants come back mutated (zero comes back as the bottom zero)."""
    if not isinstance(f, PolyRing):
        raise NotAPolynomialRing(f"{f} cannot embed coefficients")
    if not is_element(f.coefficients, c):
        raise WrongCoefficientRing(f"{c} is not in the coefficient ring of {f}")
    if is_zero(c):
        return zero_of(f)
    return normalize_terms(f, {(0,) * len(f.variables): c})


def ring_op(ring: RingFactory, op: str, a: Value, b: Value | None = None) -> Value:
    """Arithmetic on canonical elements of `ring`; op in {add,sub,mul,neg,abs}.

    Operands must already live in `ring` (coercion happens upstream);
    mutated constants are accepted as elements.
    """
    if isinstance(ring, ZZ):
        return int_arith(op, a, b)
    if isinstance(ring, QQ):
        return rat_arith(op, a, b)
    if isinstance(ring, Zn):
        return mod_arith(op, a, b)
    return _poly_op(ring, op, a, b)


def _poly_op(f: PolyRing, op: str, a: Value, b: Value | None) -> Value:
    cring = f.coefficients
    if op == "neg":
        return normalize_terms(
            f, {e: ring_op(cring, "neg", c) for e, c in as_term_map(f, a).items()}
        )
    if op == "abs":
        if isinstance(bottom(f), Zn):
            raise NotOrdered("polynomials over modular integers have no absolute value")
        return a if coefficient_sign(a) >= 0 else _poly_op(f, "neg", a, None)
    ta, tb = as_term_map(f, a), as_term_map(f, b)
    if op in ("add", "sub"):
        out = dict(ta)
        for e, c in tb.items():
            c = ring_op(cring, "neg", c) if op == "sub" else c
            out[e] = ring_op(cring, "add", out[e], c) if e in out else c
        return normalize_terms(f, out)
    if op == "mul":
        out: dict[ExpVec, Value] = {}
        for e1, c1 in ta.items():
            for e2, c2 in tb.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = ring_op(cring, "mul", c1, c2)
                out[e] = ring_op(cring, "add", out[e], c) if e in out else c
        return normalize_terms(f, out)
    raise ValueError(f"unknown polynomial op {op!r}")


def poly_arith(op: str, a: Polynomial, b: Polynomial | None = None) -> Value:
    """Ring operations on Polynomial values proper (same factory required)."""
    if b is not None and a.factory != b.factory:
        raise FactoryMismatch(f"{a.factory} and {b.factory} are different rings")
    return ring_op(a.factory, op, a, b)


def poly_pow(a: Polynomial, e: int) -> Value:
    """e-fold product by squaring; pow(a, 0) is the one of the bottom ring."""
    if e < 0:
        raise NegativeExponent(f"negative exponent {e}")
    result: Value = one_of(a.factory)
    square: Value = a
    while e:
        if e & 1:
            result = ring_op(a.factory, "mul", result, square)
        square = ring_op(a.factory, "mul", square, square)
        e >>= 1
    return result

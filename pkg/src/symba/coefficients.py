"""Base coefficient rings: integers, reduced rationals, modular integers.

Integers are plain Python ints (one arbitrary-precision type for small and
big values, so the printed form never changes shape when a value grows).
Rationals and modular integers are immutable records whose constructors
only accept already-canonical fields; use rat_make/mod_make to normalize.

A rational with denominator 1 never exists: rat_make returns the plain
integer instead (the value mutates to the simpler type, and prints as it).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BadModulus, ModulusMismatch, NotOrdered, ZeroDenominator


@dataclass(frozen=True)
class Rational:
    """Reduced fraction with positive denominator > 1."""

    numerator: int
    denominator: int

    def __post_init__(self):
        assert self.denominator > 1, "denominator-1 rationals must mutate to int"
        assert gcd(abs(self.numerator), self.denominator) == 1, "fraction not reduced"

    def __str__(self) -> str:
        return f"frac({self.numerator},{self.denominator})"


@dataclass(frozen=True)
class ModInt:
    """Residue in [0, modulus) carrying its modulus."""

    residue: int
    modulus: int

    def __post_init__(self):
        assert self.modulus >= 2, "modulus must be >= 2"
        assert 0 <= self.residue < self.modulus, "residue not canonical"

    def __str__(self) -> str:
        return f"mod({self.residue},{self.modulus})"


def int_arith(op: str, a: int, b: int | None = None) -> int:
    """Exact integer arithmetic; op in {add,sub,mul,neg,abs}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "abs":
        return abs(a)
    raise ValueError(f"unknown integer op {op!r}")


def rat_make(n: int, d: int) -> Rational | int:
    """Build the reduced rational n/d, mutating to int when d divides n."""
    if d == 0:
        raise ZeroDenominator(f"zero denominator in frac({n},{d})")
    if d < 0:
        n, d = -n, -d
    g = gcd(abs(n), d)
    n, d = n // g, d // g
    if d == 1:
        return n
    return Rational(n, d)


def _num_den(v: Rational | int) -> tuple[int, int]:
    if isinstance(v, Rational):
        return v.numerator, v.denominator
    return v, 1


def rat_arith(op: str, a: Rational | int, b: Rational | int | None = None) -> Rational | int:
    """Exact rational arithmetic over Rational-or-int operands, normalized."""
    n1, d1 = _num_den(a)
    if op == "neg":
        return rat_make(-n1, d1)
    if op == "abs":
        return rat_make(abs(n1), d1)
    n2, d2 = _num_den(b)
    if op == "add":
        return rat_make(n1 * d2 + n2 * d1, d1 * d2)
    if op == "sub":
        return rat_make(n1 * d2 - n2 * d1, d1 * d2)
    if op == "mul":
        return rat_make(n1 * n2, d1 * d2)
    raise ValueError(f"unknown rational op {op!r}")


def mod_make(v: int, m: int) -> ModInt:
    """Reduce v into the canonical non-negative residue class mod m."""
    if m < 2:
        raise BadModulus(f"modulus must be >= 2, got {m}")
    return ModInt(v % m, m)


def mod_arith(op: str, a: ModInt, b: ModInt | None = None) -> ModInt:
    """Modular arithmetic; binary operands must share their modulus."""
    m = a.modulus
    if op == "neg":
        return ModInt(-a.residue % m, m)
    if op == "abs":
        raise NotOrdered("modular integers have no absolute value")
    if b.modulus != m:
        raise ModulusMismatch(f"cannot combine mod {m} with mod {b.modulus}")
    if op == "add":
        return ModInt((a.residue + b.residue) % m, m)
    if op == "sub":
        return ModInt((a.residue - b.residue) % m, m)
    if op == "mul":
        return ModInt((a.residue * b.residue) % m, m)
    raise ValueError(f"unknown modular op {op!r}")

"""Adjusting operands across ring towers so binary operations are defined.

The rules, in order: a plain int first promotes into the other operand's
base ring (identity for ZZ and QQ, reduction for Zn); then the shallower
operand is lifted into the deeper operand's factory. Equal depths demand
equal factories; unrelated rings are an error, not a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import ModInt, Rational, mod_make
from .errors import IncompatibleRings, ModulusMismatch, NotInTower
from .polynomial import (
    QQ,
    ZZ,
    Polynomial,
    PolyRing,
    RingFactory,
    Value,
    Zn,
    bottom,
    is_element,
    is_int,
)


@dataclass(frozen=True)
class CoercionPair:
    left: Value
    right: Value
    common: RingFactory


def natural_factory(v: Value) -> RingFactory:
    """The factory a canonical value directly belongs to."""
    if is_int(v):
        return ZZ()
    if isinstance(v, Rational):
        return QQ()
    if isinstance(v, ModInt):
        return Zn(v.modulus)
    if isinstance(v, Polynomial):
        return v.factory
    raise IncompatibleRings(f"{v!r} is not a ring element")


def depth(v: Value | RingFactory) -> int:
    """Number of polynomial levels above the base ring (0 for base)."""
    f = v if isinstance(v, RingFactory) else natural_factory(v)
    n = 0
    while isinstance(f, PolyRing):
        n += 1
        f = f.coefficients
    return n


def base(v: Value | RingFactory) -> RingFactory:
    """The bottom non-polynomial factory of the value's tower."""
    f = v if isinstance(v, RingFactory) else natural_factory(v)
    return bottom(f)


def lift(f: RingFactory, v: Value) -> Value:
    """Embed v into ring f through the tower.

    The embedding is semantic: canonical forms already print mutated, so
    the returned value is v itself once membership is verified.
    """
    if not is_element(f, v):
        raise NotInTower(f"{v} does not live in the tower of {f}")
    return v


def _promote_int(v: int, target: RingFactory) -> tuple[Value, RingFactory]:
    if isinstance(target, Zn):
        return mod_make(v, target.modulus), target
    if isinstance(target, QQ):
        return v, target  # denominator-1 rationals are ints already
    return v, ZZ()


def coerce(a: Value, b: Value) -> CoercionPair:
    """Adjust a and b so both belong to one common factory.

    Raises IncompatibleRings when no promotion/lift can relate the two
    towers, ModulusMismatch for modular values with different moduli.
    """
    fa, fb = natural_factory(a), natural_factory(b)
    if is_int(a) and not is_int(b):
        a, fa = _promote_int(a, base(fb))
    elif is_int(b) and not is_int(a):
        b, fb = _promote_int(b, base(fa))
    da, db = depth(fa), depth(fb)
    if da == db:
        if fa != fb:
            if isinstance(a, ModInt) and isinstance(b, ModInt):
                raise ModulusMismatch(
                    f"cannot combine mod {a.modulus} with mod {b.modulus}"
                )
            raise IncompatibleRings(f"{fa} and {fb} are unrelated rings")
        return CoercionPair(a, b, fa)
    if da < db:
        if not is_element(fb, a):
            raise IncompatibleRings(f"{fa} does not occur in the tower of {fb}")
        return CoercionPair(lift(fb, a), b, fb)
    if not is_element(fa, b):
        raise IncompatibleRings(f"{fb} does not occur in the tower of {fa}")
    return CoercionPair(a, lift(fa, b), fa)

"""Shared test helpers: random tower/value generators and oracles.

Generators are driven by an explicit random.Random so every test run is
deterministic and the acceptance suite can guarantee its sample counts.
"""

from __future__ import annotations

import random
from fractions import Fraction

from symba import (
    Context,
    ModInt,
    Polynomial,
    PolyRing,
    QQ,
    Rational,
    RingFactory,
    TermOrder,
    ZZ,
    Zn,
    generators,
    new_context,
    rat_make,
    value_of,
)
from symba.polynomial import is_element, is_int, is_zero, normalize_terms, ring_op

BASES = (ZZ(), QQ(), Zn(11))

# one name pool per tower level, globally distinct so printing stays unambiguous
VAR_POOLS = (("x", "y", "z"), ("u", "v", "w"), ("s", "t", "q"))


def random_base(rng: random.Random) -> RingFactory:
    return rng.choice(BASES)


def random_tower(rng: random.Random, depth: int | None = None) -> RingFactory:
    """A random factory of depth 0..3 over a random base."""
    if depth is None:
        depth = rng.randint(0, 3)
    f = random_base(rng)
    for level in range(depth):
        nvars = rng.randint(1, 3)
        names = tuple(VAR_POOLS[level][:nvars])
        order = rng.choice((TermOrder.LEX, TermOrder.GRAD))
        f = PolyRing(f, names, order)
    return f


def random_coefficient(rng: random.Random, base: RingFactory):
    """A random (possibly zero) element of a base ring."""
    if isinstance(base, Zn):
        return ModInt(rng.randrange(base.modulus), base.modulus)
    if isinstance(base, QQ) and rng.random() < 0.5:
        return rat_make(rng.randint(-10, 10), rng.randint(1, 10))
    return rng.randint(-10, 10)


def random_value(rng: random.Random, f: RingFactory, max_terms: int = 3, max_exp: int = 5):
    """A random canonical element of f (may mutate down to a constant)."""
    if not isinstance(f, PolyRing):
        return random_coefficient(rng, f)
    nvars = len(f.variables)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        coeff = random_value(rng, f.coefficients, max_terms, max_exp)
        if not is_zero(coeff):
            terms[exps] = coeff
    return normalize_terms(f, terms)


def random_nonzero_value(rng: random.Random, f: RingFactory, **kw):
    for _ in range(100):
        v = random_value(rng, f, **kw)
        if not is_zero(v):
            return v
    raise AssertionError("generator kept producing zero")


def bind_generators(f: RingFactory, ctx: Context | None = None) -> Context:
    """Context with every tower variable of f bound to its generator."""
    ctx = ctx or new_context()
    g = f
    levels = []
    while isinstance(g, PolyRing):
        levels.append(g)
        g = g.coefficients
    for level in reversed(levels):
        for name, gen in zip(level.variables, generators(level)):
            ctx = ctx.bind(name, gen)
    return ctx


def assert_canonical(v):
    """Deep scan: no zero coefficient, no constant polynomial, sorted terms."""
    if isinstance(v, Polynomial):
        assert len(v.terms) >= 1
        assert not (len(v.terms) == 1 and not any(v.terms[0][0])), (
            "constant polynomial survived normalization"
        )
        from symba import term_cmp

        order = v.factory.order
        for (e1, _), (e2, _) in zip(v.terms, v.terms[1:]):
            assert term_cmp(order, e1, e2) == -1, "terms not in ascending order"
        for exps, coeff in v.terms:
            assert not is_zero(coeff), "zero coefficient stored"
            assert is_element(v.factory.coefficients, coeff)
            assert_canonical(coeff)
    elif isinstance(v, Rational):
        from math import gcd

        assert v.denominator > 1
        assert gcd(abs(v.numerator), v.denominator) == 1
    elif isinstance(v, ModInt):
        assert 0 <= v.residue < v.modulus
    elif isinstance(v, tuple):
        for item in v:
            assert_canonical(item)
    else:
        assert is_int(v), f"unexpected value {v!r}"


def chain_embed(f: RingFactory, c):
    """Embed a coefficient into f by explicitly nesting value_of through
    every tower level (the manual coercion chain), bottom level first."""
    levels = []
    g = f
    while isinstance(g, PolyRing):
        levels.append(g)
        g = g.coefficients
    for level in reversed(levels):
        if is_element(level.coefficients, c):
            c = value_of(level, c)
    return c


def substitute(v, env: dict[str, int]):
    """Evaluation homomorphism into plain Python arithmetic.

    Integers stay ints, rationals become Fraction, modular values become
    their residue (caller reduces mod m); polynomial levels substitute the
    env value for each variable.
    """
    if is_int(v):
        return v
    if isinstance(v, Rational):
        return Fraction(v.numerator, v.denominator)
    if isinstance(v, ModInt):
        return v.residue
    assert isinstance(v, Polynomial)
    total = 0
    for exps, coeff in v.terms:
        term = substitute(coeff, env)
        for name, e in zip(v.factory.variables, exps):
            term *= env[name] ** e
        total += term
    return total


def numeric_equal(a, b, f: RingFactory, env: dict[str, int]) -> bool:
    """Compare two elements of f by substitution, mod m over Zn bases."""
    from symba.polynomial import bottom

    va, vb = substitute(a, env), substitute(b, env)
    base = bottom(f)
    if isinstance(base, Zn):
        return va % base.modulus == vb % base.modulus
    return va == vb

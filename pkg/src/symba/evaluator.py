"""AST evaluation over an immutable binding context.

A Context is an ordered name->value map chained to a parent; the prelude
context at the root binds the builtin constructors (frac, mod, pow, gens,
print, ZZ, QQ, Zn, PolyRing) and the term orders, reachable both as bare
names (lex, grad) and qualified ones (PolyRing.lex, PolyRing.grad).

Assignment never mutates: evaluating a statement returns the value (None
for assignments) together with the context to use afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .coefficients import ModInt, Rational, mod_make, rat_make
from .coercion import coerce, natural_factory
from .errors import (
    ArityError,
    EvalTypeError,
    NegativeExponent,
    SymbaError,
    UnboundName,
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
    is_int,
    poly_pow,
    ring_op,
)
from .syntax import (
    Assign,
    AstNode,
    Binary,
    Call,
    Index,
    IntLiteral,
    ListAssign,
    ListLiteral,
    MethodCall,
    Name,
    QualifiedName,
    StringLiteral,
    Unary,
    print_value,
)

Writer = Callable[[str], None]


def _discard(_line: str) -> None:
    pass


@dataclass(frozen=True)
class Builtin:
    """A prelude callable; prints as its own name."""

    name: str
    arity: int
    fn: Callable

    def __str__(self) -> str:
        return self.name


class Context:
    """Ordered, immutable name bindings with optional parent chaining."""

    __slots__ = ("bindings", "parent")

    def __init__(self, bindings: dict | None = None, parent: Optional["Context"] = None):
        self.bindings = dict(bindings or {})
        self.parent = parent

    def lookup(self, name: str):
        ctx = self
        while ctx is not None:
            if name in ctx.bindings:
                return ctx.bindings[name]
            ctx = ctx.parent
        raise UnboundName(f"name {name!r} is not defined")

    def bind(self, name: str, value) -> "Context":
        merged = dict(self.bindings)
        merged[name] = value
        return Context(merged, self.parent)

    def local_items(self):
        return list(self.bindings.items())


def _want_int(v, what: str) -> int:
    if not is_int(v):
        raise EvalTypeError(f"{what} must be an integer, got {print_value(v)}")
    return v


def _builtin_frac(args, write):
    n = _want_int(args[0], "frac numerator")
    d = _want_int(args[1], "frac denominator")
    return rat_make(n, d)


def _builtin_mod(args, write):
    v = _want_int(args[0], "mod value")
    m = _want_int(args[1], "mod modulus")
    return mod_make(v, m)


def _builtin_pow(args, write):
    return power(args[0], args[1])


def _builtin_gens(args, write):
    f = args[0]
    if not isinstance(f, RingFactory):
        raise EvalTypeError(f"gens expects a ring, got {print_value(f)}")
    return generators(f)


def _builtin_print(args, write):
    write(print_value(args[0]))
    return None


def _builtin_zz(args, write):
    return ZZ()


def _builtin_qq(args, write):
    return QQ()


def _builtin_zn(args, write):
    return Zn(_want_int(args[0], "modulus"))


def _builtin_polyring(args, write):
    coeff, names, order = args
    if not isinstance(coeff, RingFactory):
        raise EvalTypeError(f"PolyRing coefficients must be a ring, got {print_value(coeff)}")
    if not isinstance(names, str):
        raise EvalTypeError('PolyRing variables must be a string like "x,y"')
    if not isinstance(order, TermOrder):
        raise EvalTypeError("PolyRing order must be PolyRing.lex or PolyRing.grad")
    return PolyRing(coeff, tuple(s.strip() for s in names.split(",")), order)


def prelude() -> Context:
    """The root context every session chains to."""
    builtins = [
        Builtin("frac", 2, _builtin_frac),
        Builtin("mod", 2, _builtin_mod),
        Builtin("pow", 2, _builtin_pow),
        Builtin("gens", 1, _builtin_gens),
        Builtin("print", 1, _builtin_print),
        Builtin("ZZ", 0, _builtin_zz),
        Builtin("QQ", 0, _builtin_qq),
        Builtin("Zn", 1, _builtin_zn),
        Builtin("PolyRing", 3, _builtin_polyring),
    ]
    bindings = {b.name: b for b in builtins}
    bindings["lex"] = TermOrder.LEX
    bindings["grad"] = TermOrder.GRAD
    bindings["PolyRing.lex"] = TermOrder.LEX
    bindings["PolyRing.grad"] = TermOrder.GRAD
    return Context(bindings)


_PRELUDE = prelude()


def new_context() -> Context:
    """A fresh, empty session context over the shared prelude."""
    return Context({}, _PRELUDE)


def _is_ring_value(v) -> bool:
    return is_int(v) or isinstance(v, (Rational, ModInt, Polynomial))


def power(a, e):
    """a ** e for non-negative integer e, by value kind."""
    if not is_int(e):
        raise EvalTypeError(f"exponent must be an integer, got {print_value(e)}")
    if e < 0:
        raise NegativeExponent(f"negative exponent {e}")
    if is_int(a):
        return a**e
    if isinstance(a, Rational):
        if e == 0:
            return 1
        return Rational(a.numerator**e, a.denominator**e)
    if isinstance(a, ModInt):
        return ModInt(pow(a.residue, e, a.modulus), a.modulus)
    if isinstance(a, Polynomial):
        return poly_pow(a, e)
    raise EvalTypeError(f"cannot raise {print_value(a)} to a power")


def dispatch(op: str, a, b):
    """Binary operator dispatch: coerce to a common ring, then operate.

    op "eq" compares the coerced values structurally.
    """
    if not _is_ring_value(a) or not _is_ring_value(b):
        raise EvalTypeError(
            f"cannot apply {op} to {print_value(a)} and {print_value(b)}"
        )
    pair = coerce(a, b)
    if op == "eq":
        return pair.left == pair.right
    return ring_op(pair.common, op, pair.left, pair.right)


def negate(v):
    if not _is_ring_value(v):
        raise EvalTypeError(f"cannot negate {print_value(v)}")
    return ring_op(natural_factory(v), "neg", v)


def eval_expr(node: AstNode, ctx: Context, write: Writer = _discard):
    """Evaluate an expression AST to a value (None only for print calls)."""
    try:
        return _eval(node, ctx, write)
    except SymbaError as e:
        if e.position is None:
            e.position = getattr(node, "pos", None)
        raise


def _eval(node: AstNode, ctx: Context, write: Writer):
    if isinstance(node, IntLiteral):
        return int(node.text)
    if isinstance(node, StringLiteral):
        return node.text
    if isinstance(node, Name):
        return ctx.lookup(node.identifier)
    if isinstance(node, QualifiedName):
        return ctx.lookup(f"{node.base}.{node.attr}")
    if isinstance(node, Unary):
        return negate(_value(node.operand, ctx, write))
    if isinstance(node, Binary):
        a = _value(node.left, ctx, write)
        b = _value(node.right, ctx, write)
        if node.op == "pow":
            return power(a, b)
        return dispatch(node.op, a, b)
    if isinstance(node, Call):
        callee = ctx.lookup(node.callee)
        if not isinstance(callee, Builtin):
            raise EvalTypeError(f"{node.callee!r} is not callable")
        args = tuple(_value(arg, ctx, write) for arg in node.args)
        if len(args) != callee.arity:
            raise ArityError(
                f"{callee.name} takes {callee.arity} argument(s), got {len(args)}"
            )
        return callee.fn(args, write)
    if isinstance(node, MethodCall):
        receiver = _value(node.receiver, ctx, write)
        if node.args:
            raise ArityError(f".{node.method}() takes no arguments")
        if node.method == "gens":
            if not isinstance(receiver, RingFactory):
                raise EvalTypeError(f"{print_value(receiver)} has no generators")
            return generators(receiver)
        if node.method == "factory":
            if not _is_ring_value(receiver):
                raise EvalTypeError(f"{print_value(receiver)} has no factory")
            return natural_factory(receiver)
        raise EvalTypeError(f"unknown method {node.method!r}")
    if isinstance(node, ListLiteral):
        return tuple(_value(item, ctx, write) for item in node.items)
    if isinstance(node, Index):
        receiver = _value(node.receiver, ctx, write)
        if not isinstance(receiver, tuple):
            raise EvalTypeError(f"cannot index {print_value(receiver)}")
        idx = _value(node.index, ctx, write)
        if not is_int(idx):
            raise EvalTypeError("list index must be an integer")
        if not 0 <= idx < len(receiver):
            raise EvalTypeError(f"index {idx} out of range for list of {len(receiver)}")
        return receiver[idx]
    raise EvalTypeError(f"cannot evaluate {node!r} as an expression")


def _value(node: AstNode, ctx: Context, write: Writer):
    v = _eval(node, ctx, write)
    if v is None:
        raise EvalTypeError("print(...) has no value")
    return v


def eval_statement(node: AstNode, ctx: Context, write: Writer = _discard):
    """Evaluate a statement; returns (value-or-None, context-to-continue-with)."""
    if isinstance(node, Assign):
        v = _value(node.expr, ctx, write)
        return None, ctx.bind(node.name, v)
    if isinstance(node, ListAssign):
        v = _value(node.expr, ctx, write)
        if not isinstance(v, tuple):
            raise EvalTypeError(f"cannot destructure {print_value(v)}")
        if len(v) != len(node.names):
            raise ArityError(
                f"pattern of {len(node.names)} name(s) against list of {len(v)}"
            )
        for name, item in zip(node.names, v):
            ctx = ctx.bind(name, item)
        return None, ctx
    return eval_expr(node, ctx, write), ctx

"""Expression grammar and the canonical printer.

The printer and parser are two halves of one contract: print_value emits
exactly one form per value, and that form parses and evaluates back to an
equal value. is_reconstructing checks the full loop for a given string.

Grammar (statements are line-oriented):
    statement  := NAME '=' expr | '[' NAME {',' NAME} ']' '=' expr | expr
    expr       := multerm {('+'|'-') multerm}           left-assoc
    multerm    := unary {'*' unary}                     left-assoc
    unary      := '-' unary | power
    power      := postfix ['**' power]                  right-assoc, no unary rhs
    postfix    := atom {'.' NAME ['(' args ')'] | '[' expr ']'}
    atom       := INT | STRING | NAME ['(' args ')'] | '(' expr ')'
                | '[' [expr {',' expr}] ']'
Whitespace is insignificant, '#' starts a line comment, statements may end
with one ';'. '-x**2' parses as -(x**2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coefficients import ModInt, Rational
from .errors import ParseError, SymbaError
from .polynomial import (
    QQ,
    ZZ,
    Polynomial,
    PolyRing,
    RingFactory,
    TermOrder,
    Zn,
    coefficient_sign,
    is_int,
    one_of,
    ring_op,
)

# --- AST ---


@dataclass(frozen=True)
class AstNode:
    pass


@dataclass(frozen=True)
class IntLiteral(AstNode):
    text: str
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class StringLiteral(AstNode):
    text: str
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class Name(AstNode):
    identifier: str
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class QualifiedName(AstNode):
    base: str
    attr: str
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class Unary(AstNode):
    op: str  # neg
    operand: AstNode
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class Binary(AstNode):
    op: str  # add | sub | mul | pow
    left: AstNode
    right: AstNode
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class Call(AstNode):
    callee: str
    args: tuple[AstNode, ...]
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class MethodCall(AstNode):
    receiver: AstNode
    method: str
    args: tuple[AstNode, ...]
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class ListLiteral(AstNode):
    items: tuple[AstNode, ...]
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class Index(AstNode):
    receiver: AstNode
    index: AstNode
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class Assign(AstNode):
    name: str
    expr: AstNode
    pos: int = field(default=-1, compare=False, repr=False)


@dataclass(frozen=True)
class ListAssign(AstNode):
    names: tuple[str, ...]
    expr: AstNode
    pos: int = field(default=-1, compare=False, repr=False)


# --- tokenizer ---


@dataclass(frozen=True)
class Token:
    kind: str  # int | name | string | op | eof
    text: str
    pos: int


_PUNCT = set("+-*=,.()[];")


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(source)
    while i < n:
        c = source[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        start = i
        if c.isdigit():
            while i < n and source[i].isdigit():
                i += 1
            tokens.append(Token("int", source[start:i], start))
            continue
        if c.isalpha() or c == "_":
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(Token("name", source[start:i], start))
            continue
        if c == '"':
            i += 1
            while i < n and source[i] != '"':
                if source[i] == "\n":
                    raise ParseError("unterminated string", start, {'"'})
                i += 1
            if i >= n:
                raise ParseError("unterminated string", start, {'"'})
            tokens.append(Token("string", source[start + 1:i], start))
            i += 1
            continue
        if c == "*":
            if i + 1 < n and source[i + 1] == "*":
                tokens.append(Token("op", "**", start))
                i += 2
            else:
                tokens.append(Token("op", "*", start))
                i += 1
            continue
        if c in _PUNCT:
            tokens.append(Token("op", c, start))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i, set())
    tokens.append(Token("eof", "", n))
    return tokens


# --- parser ---


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text == text

    def eat_op(self, text: str) -> bool:
        if self.at_op(text):
            self.i += 1
            return True
        return False

    def expect_op(self, text: str) -> Token:
        if not self.at_op(text):
            tok = self.peek()
            raise ParseError(
                f"expected {text!r}, found {tok.text or 'end of input'!r}",
                tok.pos,
                {text},
            )
        return self.advance()

    def expect_name(self) -> Token:
        tok = self.peek()
        if tok.kind != "name":
            raise ParseError(
                f"expected a name, found {tok.text or 'end of input'!r}",
                tok.pos,
                {"name"},
            )
        return self.advance()

    # expression levels, loosest first

    def expr(self) -> AstNode:
        node = self.multerm()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in ("+", "-"):
                self.advance()
                rhs = self.multerm()
                node = Binary("add" if tok.text == "+" else "sub", node, rhs, pos=tok.pos)
            else:
                return node

    def multerm(self) -> AstNode:
        node = self.unary()
        while self.at_op("*"):
            tok = self.advance()
            node = Binary("mul", node, self.unary(), pos=tok.pos)
        return node

    def unary(self) -> AstNode:
        if self.at_op("-"):
            tok = self.advance()
            return Unary("neg", self.unary(), pos=tok.pos)
        return self.power()

    def power(self) -> AstNode:
        node = self.postfix()
        if self.at_op("**"):
            tok = self.advance()
            # right-assoc; rhs may not start with unary minus unless parenthesized
            return Binary("pow", node, self.power(), pos=tok.pos)
        return node

    def postfix(self) -> AstNode:
        node = self.atom()
        while True:
            if self.at_op("."):
                dot = self.advance()
                attr = self.expect_name()
                if self.at_op("("):
                    node = MethodCall(node, attr.text, self.call_args(), pos=dot.pos)
                elif isinstance(node, Name):
                    node = QualifiedName(node.identifier, attr.text, pos=dot.pos)
                else:
                    raise ParseError(
                        "qualified names need a plain name on the left", dot.pos, {"("}
                    )
            elif self.at_op("["):
                tok = self.advance()
                idx = self.expr()
                self.expect_op("]")
                node = Index(node, idx, pos=tok.pos)
            else:
                return node

    def call_args(self) -> tuple[AstNode, ...]:
        self.expect_op("(")
        args: list[AstNode] = []
        if not self.at_op(")"):
            args.append(self.expr())
            while self.eat_op(","):
                args.append(self.expr())
        self.expect_op(")")
        return tuple(args)

    def atom(self) -> AstNode:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return IntLiteral(tok.text, pos=tok.pos)
        if tok.kind == "string":
            self.advance()
            return StringLiteral(tok.text, pos=tok.pos)
        if tok.kind == "name":
            self.advance()
            if self.at_op("("):
                return Call(tok.text, self.call_args(), pos=tok.pos)
            return Name(tok.text, pos=tok.pos)
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        if self.at_op("["):
            self.advance()
            items: list[AstNode] = []
            if not self.at_op("]"):
                items.append(self.expr())
                while self.eat_op(","):
                    items.append(self.expr())
            self.expect_op("]")
            return ListLiteral(tuple(items), pos=tok.pos)
        raise ParseError(
            f"expected an expression, found {tok.text or 'end of input'!r}",
            tok.pos,
            {"int", "string", "name", "(", "["},
        )

    def expect_eof(self):
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(
                f"unexpected trailing input {tok.text!r}", tok.pos, {"end of input"}
            )


def parse(source: str) -> AstNode:
    """Parse one statement: an assignment, list-destructuring, or expression."""
    p = _Parser(tokenize(source))
    node = p.expr()
    if p.at_op("="):
        eq = p.advance()
        rhs = p.expr()
        if isinstance(node, Name):
            node = Assign(node.identifier, rhs, pos=eq.pos)
        elif isinstance(node, ListLiteral) and node.items and all(
            isinstance(item, Name) for item in node.items
        ):
            names = tuple(item.identifier for item in node.items)
            node = ListAssign(names, rhs, pos=eq.pos)
        else:
            raise ParseError("cannot assign to this pattern", eq.pos, set())
    p.eat_op(";")
    p.expect_eof()
    return node


def parse_expression(source: str) -> AstNode:
    """Parse a single expression; assignments and trailing ';' are rejected."""
    p = _Parser(tokenize(source))
    node = p.expr()
    p.expect_eof()
    return node


# --- canonical printer ---


def print_value(v) -> str:
    """The one canonical, reconstructing form of a value."""
    if is_int(v):
        return str(v)
    if isinstance(v, Rational):
        return f"frac({v.numerator},{v.denominator})"
    if isinstance(v, ModInt):
        return f"mod({v.residue},{v.modulus})"
    if isinstance(v, tuple):
        return "[" + ", ".join(print_value(item) for item in v) + "]"
    if isinstance(v, Polynomial):
        return _print_polynomial(v)
    if isinstance(v, RingFactory):
        return _print_factory(v)
    if isinstance(v, TermOrder):
        return f"PolyRing.{v.value}"
    if isinstance(v, str):
        return v  # string output form drops the quotes: strings are not symbolic
    from .evaluator import Builtin

    if isinstance(v, Builtin):
        return v.name
    raise TypeError(f"no printed form for {v!r}")


def _print_polynomial(p: Polynomial) -> str:
    f = p.factory
    cring = f.coefficients
    one = one_of(cring)
    out: list[str] = []
    for i, (exps, coeff) in enumerate(p.terms):
        mono = "*".join(
            v if e == 1 else f"{v}**{e}" for v, e in zip(f.variables, exps) if e
        )
        if not mono:
            # constant term; always the lowest term, so it opens the string
            assert i == 0
            out.append(print_value(coeff))
            continue
        negative = coefficient_sign(coeff) < 0
        mag = ring_op(cring, "neg", coeff) if negative else coeff
        if mag == one:
            body = mono
        else:
            text = print_value(mag)
            if isinstance(mag, Polynomial) and len(mag.terms) > 1:
                text = f"({text})"
            body = f"{text}*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"-{body}" if negative else f"+{body}")
    return "".join(out)


def _print_factory(f: RingFactory) -> str:
    if isinstance(f, ZZ):
        return "ZZ()"
    if isinstance(f, QQ):
        return "QQ()"
    if isinstance(f, Zn):
        return f"Zn({f.modulus})"
    assert isinstance(f, PolyRing)
    inner = _print_factory(f.coefficients)
    names = ",".join(f.variables)
    return f'PolyRing({inner},"{names}",PolyRing.{f.order.value})'


def print_pretty(f: RingFactory) -> str:
    """Short display form of a tower, e.g. ZZ[x][y][z]; not reconstructing."""
    levels = []
    while isinstance(f, PolyRing):
        levels.append(f.variables)
        f = f.coefficients
    if isinstance(f, ZZ):
        text = "ZZ"
    elif isinstance(f, QQ):
        text = "QQ"
    else:
        text = f"Z{f.modulus}"
    return text + "".join(f"[{','.join(vs)}]" for vs in reversed(levels))


# --- the reconstruction predicate ---


def reconstruction_failure(source: str, ctx) -> str | None:
    """None when source is reconstructing in ctx, else a one-line reason."""
    from .evaluator import eval_expr

    try:
        node = parse_expression(source)
    except SymbaError as e:
        return f"does not parse: {e}"
    try:
        value = eval_expr(node, ctx, write=lambda _line: None)
    except (SymbaError, RecursionError) as e:
        return f"does not evaluate: {e}"
    if value is None:
        return "evaluates to nothing"
    printed = print_value(value)
    if printed != source:
        return f"prints back as {printed!r}"
    return None


def is_reconstructing(source: str, ctx) -> bool:
    """Definition check: source parses, evaluates in ctx, and the result
    prints as exactly the same string."""
    return reconstruction_failure(source, ctx) is None

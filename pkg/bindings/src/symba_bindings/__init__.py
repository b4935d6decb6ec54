"""Ring and RingElem wrappers with native Python operators.

The wrappers hold no algebra of their own: every operation is sent to the
symba engine and the engine's canonical output string is the new value
handle. Because engine output is reconstructing, strings are a lossless
wire format: the boundary is the engine CLI plus its expression grammar,
nothing else.

    >>> from symba_bindings import Ring, ZZ, lex
    >>> r = Ring(ZZ(), ["x"])
    >>> [x] = r.gens()
    >>> print(1 + x)
    1+x

The engine binary is found via $SYMBA_CLI, then `symba` on PATH, then
`python -m symba`.
"""

from __future__ import annotations

import os
import re
import shlex
import shutil
import subprocess
import sys
import tempfile

__all__ = ["Ring", "RingElem", "PolyRing", "ZZ", "QQ", "Zn", "lex", "grad", "EngineError"]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class EngineError(RuntimeError):
    """The engine rejected a script (its stderr message is the payload)."""


def _engine_command() -> list[str]:
    override = os.environ.get("SYMBA_CLI")
    if override:
        return shlex.split(override)
    found = shutil.which("symba")
    if found:
        return [found]
    return [sys.executable, "-m", "symba"]


def _run_script(text: str) -> str:
    """Run a script through the engine CLI, returning its stdout."""
    with tempfile.NamedTemporaryFile("w", suffix=".sym", delete=False) as handle:
        handle.write(text)
        path = handle.name
    try:
        proc = subprocess.run(
            _engine_command() + [path], capture_output=True, text=True
        )
    finally:
        os.unlink(path)
    if proc.returncode != 0:
        raise EngineError(proc.stderr.strip() or f"engine exited {proc.returncode}")
    return proc.stdout


def _evaluate(bindings: list[str], expression: str) -> str:
    """One expression in a fresh engine session seeded with bindings."""
    script = "\n".join(bindings + [expression]) + "\n"
    lines = _run_script(script).splitlines()
    if not lines:
        raise EngineError(f"engine produced no value for {expression!r}")
    return lines[-1]


class _BaseRing:
    """Coefficient-ring designators for the bottom of a tower."""

    form: str

    def __str__(self) -> str:
        return self.form

    def __repr__(self) -> str:
        return self.form


class ZZ(_BaseRing):
    form = "ZZ()"


class QQ(_BaseRing):
    form = "QQ()"


class Zn(_BaseRing):
    def __init__(self, modulus: int):
        self.form = f"Zn({modulus})"


class _TermOrder:
    def __init__(self, form: str):
        self.form = form

    def __repr__(self) -> str:
        return self.form


lex = _TermOrder("PolyRing.lex")
grad = _TermOrder("PolyRing.grad")


class Ring:
    """Wrapper for an engine-side polynomial ring factory."""

    def __init__(self, coeff, vars, order: _TermOrder = lex):
        if isinstance(coeff, RingElem):
            coeff = coeff.factory()
        if isinstance(coeff, Ring):
            self.coeff = coeff
            coeff_form = coeff.form
        elif isinstance(coeff, _BaseRing):
            self.coeff = None
            coeff_form = coeff.form
        else:
            raise ValueError(f"no coefficient ring in {coeff!r}")
        if isinstance(vars, str):
            names = [s.strip() for s in vars.split(",")]
        else:
            names = [str(v) for v in vars]
        if not names or not all(_NAME_RE.fullmatch(n) for n in names):
            raise ValueError(f"bad variable names {vars!r}")
        if not isinstance(order, _TermOrder):
            raise ValueError(f"no term order in {order!r}")
        self.vars = tuple(names)
        self.form = f'PolyRing({coeff_form},"{",".join(names)}",{order.form})'

    @property
    def depth(self) -> int:
        return 1 + (self.coeff.depth if self.coeff is not None else 0)

    def binding_statements(self) -> list[str]:
        """Engine statements binding every generator of this tower."""
        inner = self.coeff.binding_statements() if self.coeff is not None else []
        return inner + [f'[{",".join(self.vars)}] = {self.form}.gens()']

    def gens(self) -> list["RingElem"]:
        # a generator's canonical form is its own variable name
        return [RingElem(self, name) for name in self.vars]

    def __str__(self) -> str:
        return self.form

    def __repr__(self) -> str:
        return self.form

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.form == other.form

    def __hash__(self) -> int:
        return hash(self.form)


class PolyRing(Ring):
    """Paper-style alias requiring an explicit term order."""

    def __init__(self, coeff, vars, order: _TermOrder):
        super().__init__(coeff, vars, order)


def _merge_bindings(a: list[str], b: list[str]) -> list[str]:
    merged = list(a)
    merged.extend(stmt for stmt in b if stmt not in merged)
    return merged


class RingElem:
    """Wrapper for an engine-side value; the canonical string is the handle."""

    def __init__(self, ring: Ring, form: str):
        self.ring = ring
        self.form = form

    def factory(self) -> Ring:
        return self.ring

    def _operand_form(self, other) -> str | None:
        if isinstance(other, RingElem):
            return other.form
        if isinstance(other, int) and not isinstance(other, bool):
            return str(other)
        return None

    def _combine(self, other, template: str) -> "RingElem":
        other_form = self._operand_form(other)
        if other_form is None:
            return NotImplemented
        bindings = self.ring.binding_statements()
        result_ring = self.ring
        if isinstance(other, RingElem):
            bindings = _merge_bindings(bindings, other.ring.binding_statements())
            if other.ring.depth > result_ring.depth:
                result_ring = other.ring
        expr = template.format(a=f"({self.form})", b=f"({other_form})")
        return RingElem(result_ring, _evaluate(bindings, expr))

    def __add__(self, other):
        return self._combine(other, "{a}+{b}")

    def __radd__(self, other):
        return self._combine(other, "{b}+{a}")

    def __sub__(self, other):
        return self._combine(other, "{a}-{b}")

    def __rsub__(self, other):
        return self._combine(other, "{b}-{a}")

    def __mul__(self, other):
        return self._combine(other, "{a}*{b}")

    def __rmul__(self, other):
        return self._combine(other, "{b}*{a}")

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        return RingElem(
            self.ring,
            _evaluate(self.ring.binding_statements(), f"({self.form})**{exponent}"),
        )

    def __neg__(self):
        return RingElem(
            self.ring,
            _evaluate(self.ring.binding_statements(), f"-({self.form})"),
        )

    def __eq__(self, other) -> bool:
        # canonical printing is unique per value, so handles compare as strings
        if isinstance(other, RingElem):
            return self.form == other.form
        form = self._operand_form(other)
        return form is not None and self.form == form

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return hash(self.form)

    def __str__(self) -> str:
        return self.form

    def __repr__(self) -> str:
        return self.form

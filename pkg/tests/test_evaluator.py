"""Evaluation: contexts, builtins, operator dispatch, statements."""

import random

import pytest

from symba import (
    ArityError,
    BadModulus,
    BadVariables,
    EvalTypeError,
    IncompatibleRings,
    ModInt,
    NegativeExponent,
    Polynomial,
    PolyRing,
    Rational,
    TermOrder,
    UnboundName,
    ZZ,
    Zn,
    coerce,
    dispatch,
    eval_expr,
    eval_statement,
    generators,
    mod_make,
    new_context,
    parse,
    parse_expression,
    power,
    print_value,
    rat_make,
)
from symba.polynomial import ring_op

from conftest import random_tower, random_value

LEX = TermOrder.LEX


def run_lines(lines, ctx=None):
    """Execute statements in sequence, collecting written/echoed output."""
    ctx = ctx or new_context()
    out = []
    write = out.append
    for line in lines:
        result, ctx = eval_statement(parse(line), ctx, write)
        if result is not None:
            write(print_value(result))
    return out, ctx


class TestSession:
    def test_sample_session_flow(self):
        out, ctx = run_lines(
            [
                'r = PolyRing(ZZ(),"x",lex)',
                "[x] = r.gens()",
                "print(1+x)",
                '[y] = PolyRing(x.factory(),"y",PolyRing.lex).gens()',
                "print(x+x*y)",
                '[z] = PolyRing(y.factory(),"z",PolyRing.lex).gens()',
                "print((1-z)**2)",
            ]
        )
        assert out == ["1+x", "x+x*y", "1-2*z+z**2"]

    def test_assignments_echo_nothing(self):
        out, _ = run_lines(["r = ZZ()"])
        assert out == []

    def test_bare_expression_value(self):
        out, _ = run_lines(["frac(1,2)+frac(1,3)"])
        assert out == ["frac(5,6)"]

    def test_destructuring_arity(self):
        with pytest.raises(ArityError):
            run_lines(['[a] = PolyRing(ZZ(),"B,S",lex).gens()'])

    def test_destructure_non_list(self):
        with pytest.raises(EvalTypeError):
            run_lines(["[a] = 5"])

    def test_unbound_name(self):
        with pytest.raises(UnboundName):
            run_lines(["nope+1"])

    def test_context_shadowing_not_mutation(self):
        _, ctx1 = run_lines(["a = 1"])
        _, ctx2 = run_lines(["a = 2"], ctx1)
        assert ctx1.lookup("a") == 1
        assert ctx2.lookup("a") == 2

    def test_expression_statement_leaves_context_alone(self):
        _, ctx1 = run_lines(["a = 1"])
        _, ctx2 = run_lines(["a+1"], ctx1)
        assert ctx1.bindings == ctx2.bindings


class TestBuiltins:
    def test_prelude_names_resolvable_everywhere(self):
        names = [
            "frac", "mod", "pow", "gens", "print",
            "ZZ", "QQ", "Zn", "PolyRing", "PolyRing.lex", "PolyRing.grad",
        ]
        ctx = new_context()
        _, ctx = eval_statement(parse("a = 1"), ctx)
        for name in names:
            assert ctx.lookup(name) is not None

    def test_arity_errors(self):
        for bad in ["frac(1)", "mod(1,2,3)", "gens()", "ZZ(1)", "print()"]:
            with pytest.raises(ArityError):
                run_lines([bad])

    def test_frac_wants_integers(self):
        with pytest.raises(EvalTypeError):
            run_lines(["frac(frac(1,2),2)"])

    def test_zn_bad_modulus(self):
        with pytest.raises(BadModulus):
            run_lines(["Zn(1)"])

    def test_polyring_validates(self):
        with pytest.raises(EvalTypeError):
            run_lines(['PolyRing(1,"x",lex)'])
        with pytest.raises(EvalTypeError):
            run_lines(["PolyRing(ZZ(),1,lex)"])
        with pytest.raises(EvalTypeError):
            run_lines(['PolyRing(ZZ(),"x",1)'])
        with pytest.raises(BadVariables):
            run_lines(['PolyRing(ZZ(),"x,x",lex)'])
        with pytest.raises(BadVariables):
            run_lines(['PolyRing(PolyRing(ZZ(),"x",lex),"x",lex)'])

    def test_variable_list_tolerates_spaces(self):
        out, _ = run_lines(['PolyRing(ZZ(),"B, S",lex)'])
        assert out == ['PolyRing(ZZ(),"B,S",PolyRing.lex)']

    def test_gens_function_and_method_agree(self):
        out, _ = run_lines(
            ['r = PolyRing(ZZ(),"x",lex)', "gens(r)", "r.gens()"]
        )
        assert out == ["[x]", "[x]"]

    def test_print_returns_nothing(self):
        with pytest.raises(EvalTypeError):
            run_lines(["print(1)+1"])

    def test_calling_a_value_fails(self):
        with pytest.raises(EvalTypeError):
            run_lines(["a = 1", "a(2)"])

    def test_pow_builtin_is_star_star(self):
        out, _ = run_lines(["pow(2,10)", "2**10"])
        assert out == ["1024", "1024"]


class TestMethodsAndIndexing:
    def test_factory_of_kinds(self):
        out, _ = run_lines(
            [
                "frac(1,2).factory()",
                "mod(5,11).factory()",
                "x = 1",
                "x.factory()",
            ]
        )
        assert out == ["QQ()", "Zn(11)", "ZZ()"]

    def test_factory_of_factory_fails(self):
        with pytest.raises(EvalTypeError):
            run_lines(["ZZ().factory()"])

    def test_gens_on_value_fails(self):
        with pytest.raises(EvalTypeError):
            run_lines(["mod(1,7).gens()"])

    def test_unknown_method(self):
        with pytest.raises(EvalTypeError):
            run_lines(["frac(1,2).wat()"])

    def test_methods_take_no_arguments(self):
        with pytest.raises(ArityError):
            run_lines(['PolyRing(ZZ(),"x",lex).gens(1)'])

    def test_indexing(self):
        out, _ = run_lines(['g = PolyRing(ZZ(),"B,S",lex).gens()', "g[0]", "g[1]"])
        assert out == ["B", "S"]

    def test_indexing_errors(self):
        with pytest.raises(EvalTypeError):
            run_lines(["mod(1,7)[0]"])
        with pytest.raises(EvalTypeError):
            run_lines(['g = PolyRing(ZZ(),"x",lex).gens()', "g[2]"])
        with pytest.raises(EvalTypeError):
            run_lines(['g = PolyRing(ZZ(),"x",lex).gens()', "g[frac(1,2)]"])

    def test_qualified_name_lookup(self):
        out, _ = run_lines(["PolyRing.lex", "PolyRing.grad"])
        assert out == ["PolyRing.lex", "PolyRing.grad"]
        with pytest.raises(UnboundName):
            run_lines(["PolyRing.wat"])


class TestDispatch:
    def test_add_int_polynomial(self):
        f = PolyRing(ZZ(), ("x",), LEX)
        (x,) = generators(f)
        assert dispatch("add", 1, x) == Polynomial(f, (((0,), 1), ((1,), 1)))

    def test_eq_after_normalization(self):
        assert dispatch("eq", rat_make(2, 4), rat_make(1, 2)) is True
        assert dispatch("eq", 1, 2) is False

    def test_incompatible(self):
        with pytest.raises(IncompatibleRings):
            dispatch("add", mod_make(1, 7), rat_make(1, 2))

    def test_dispatch_equals_manual_coercion_plus_ring_op(self):
        rng = random.Random(31)
        for _ in range(200):
            f = random_tower(rng)
            g = f
            while isinstance(g, PolyRing) and rng.random() < 0.5:
                g = g.coefficients
            a = random_value(rng, f, max_terms=2, max_exp=3)
            b = random_value(rng, g, max_terms=2, max_exp=3)
            pair = coerce(a, b)
            for op in ("add", "sub", "mul"):
                assert dispatch(op, a, b) == ring_op(pair.common, op, pair.left, pair.right)

    def test_operand_order_symmetric(self):
        rng = random.Random(32)
        for _ in range(100):
            f = random_tower(rng)
            a = random_value(rng, f, max_terms=2, max_exp=3)
            b = random_value(rng, f, max_terms=2, max_exp=3)
            assert dispatch("add", a, b) == dispatch("add", b, a)
            assert dispatch("mul", a, b) == dispatch("mul", b, a)

    def test_non_ring_operands(self):
        with pytest.raises(EvalTypeError):
            run_lines(["[1,2]+[3]"])
        with pytest.raises(EvalTypeError):
            run_lines(['"a"+"b"'])
        with pytest.raises(EvalTypeError):
            run_lines(["ZZ()+1"])

    def test_determinism(self):
        node = parse_expression("(1-z)**2")
        _, ctx = run_lines(
            ['[z] = PolyRing(ZZ(),"z",lex).gens()']
        )
        v1 = eval_expr(node, ctx)
        v2 = eval_expr(node, ctx)
        assert v1 == v2
        assert print_value(v1) == print_value(v2)


class TestPower:
    def test_int_huge_exponent(self):
        assert power(2, 100) == 2**100

    def test_rational(self):
        assert power(rat_make(1, 2), 3) == Rational(1, 8)
        assert power(rat_make(2, 3), 0) == 1

    def test_modint(self):
        assert power(mod_make(5, 11), 3) == ModInt(4, 11)  # 125 mod 11
        assert power(mod_make(0, 11), 0) == ModInt(1, 11)

    def test_negative_exponent_everywhere(self):
        (x,) = generators(PolyRing(ZZ(), ("x",), LEX))
        for v in (2, rat_make(1, 2), mod_make(5, 11), x):
            with pytest.raises(NegativeExponent):
                power(v, -1)

    def test_non_integer_exponent(self):
        with pytest.raises(EvalTypeError):
            power(2, rat_make(1, 2))

    def test_non_ring_base(self):
        with pytest.raises(EvalTypeError):
            power(ZZ(), 2)


class TestNegate:
    def test_by_kind(self):
        out, _ = run_lines(["-5", "-frac(1,2)", "-mod(5,11)"])
        assert out == ["-5", "frac(-1,2)", "mod(6,11)"]

    def test_non_ring(self):
        with pytest.raises(EvalTypeError):
            run_lines(["-ZZ()"])

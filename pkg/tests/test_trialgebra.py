import itertools

import pytest
from hypothesis import given, settings, strategies as st

from arithmetree import (
    AXIOMS,
    GEN,
    UNIT,
    FormalSum,
    LiteralSyntaxError,
    Op,
    UndefinedExpressionError,
    axiom_failures,
    decode_name,
    encode_name,
    enumerate_trees,
    evaluate_at_generator,
    involute_name,
    involution_sum,
    op_names,
    order_interval,
    over,
    parse_expression,
    star,
    star_names,
    tri_op,
    under,
    universal_expression,
)

from oracles import A, AB, ACA, BA, M, N


def names(n):
    return [encode_name(t) for t in enumerate_trees(n)]


def lits(ns):
    return sorted(decode_name(v).literal for v in ns)


positive = st.integers(1, 3).flatmap(lambda n: st.sampled_from(names(n)))


def test_op_examples():
    a = N(A)
    assert lits(op_names(Op.BULLET, a, a)) == [M]
    assert lits(op_names(Op.SUCC, a, a)) == [AB]
    assert lits(op_names(Op.PREC, a, a)) == [BA]


def test_star_examples():
    a = N(A)
    assert star(a, a) == FormalSum.of([N(AB), N(M), N(BA)])
    assert star(a, UNIT) == FormalSum.basis(a)
    assert star(UNIT, a) == FormalSum.basis(a)
    # A ★ M has three terms, which here coincide with its order interval.
    assert lits(star_names(a, N(M))) == ["((oo)oo)", "(o(ooo))", "(oooo)"]
    assert set(star_names(a, N(M))) == set(order_interval(a, N(M)))


def test_unit_conventions():
    a = N(A)
    assert op_names(Op.PREC, a, UNIT) == (a,)
    assert op_names(Op.SUCC, UNIT, a) == (a,)
    for kind in Op:
        if kind is not Op.PREC:
            assert op_names(kind, a, UNIT) == ()
        if kind is not Op.SUCC:
            assert op_names(kind, UNIT, a) == ()
        with pytest.raises(UndefinedExpressionError):
            op_names(kind, UNIT, UNIT)


def test_op_parse_aliases():
    assert Op.parse("<") is Op.PREC and Op.parse("prec") is Op.PREC
    assert Op.parse(">") is Op.SUCC and Op.parse("≻") is Op.SUCC
    assert Op.parse(".") is Op.BULLET and Op.parse("•") is Op.BULLET
    with pytest.raises(Exception):
        Op.parse("?")


@pytest.mark.parametrize("total", range(2, 6))
def test_three_operations_partition_the_product(total):
    for n in range(1, total):
        for v, w in itertools.product(names(n), names(total - n)):
            parts = [set(op_names(k, v, w)) for k in Op]
            assert sum(len(p) for p in parts) == len(set().union(*parts))
            assert set().union(*parts) == set(star_names(v, w))


@pytest.mark.parametrize("total", range(2, 4))
def test_product_support_is_the_order_interval_in_low_degree(total):
    for n in range(1, total):
        for v, w in itertools.product(names(n), names(total - n)):
            assert set(star_names(v, w)) == set(order_interval(v, w))


def test_product_support_is_smaller_than_the_interval_in_degree_4():
    # Frozen finding: four pairs of total degree 4 have an order interval
    # strictly larger than the support of their product.
    bad = []
    for n in range(1, 4):
        for v, w in itertools.product(names(n), names(4 - n)):
            s, i = set(star_names(v, w)), set(order_interval(v, w))
            assert s <= i
            if s != i:
                bad.append((decode_name(v).literal, decode_name(w).literal, lits(i - s)))
    assert bad == [
        ("(oo)", "(o((oo)o))", ["(o(o(oo)o))"]),
        ("(oo)", "(o(oo)o)", ["((oo)((oo)o))", "(oo((oo)o))"]),
        ("(o((oo)o))", "(oo)", ["(o(oo)(oo))", "(o(oo)oo)"]),
        ("(o(oo)o)", "(oo)", ["((o((oo)o))o)", "(o((oo)o)o)"]),
    ]


@pytest.mark.parametrize("total", range(3, 6))
def test_seven_axioms(total):
    for a, b, c in ((a, b, c) for a in range(1, total) for b in range(1, total) for c in range(1, total)
                    if a + b + c == total):
        for x, y, z in itertools.product(names(a), names(b), names(c)):
            assert axiom_failures(x, y, z) == []


def test_axiom_table():
    assert len(AXIOMS) == 7


@settings(max_examples=50, deadline=None)
@given(positive, positive, positive)
def test_star_is_associative(x, y, z):
    lhs = sum((c * star(u, z) for u, c in star(x, y).items()), FormalSum())
    rhs = sum((c * star(x, u) for u, c in star(y, z).items()), FormalSum())
    assert lhs == rhs


@settings(max_examples=80, deadline=None)
@given(positive, positive)
def test_mirror_swaps_prec_and_succ(v, w):
    mv, mw = involute_name(v), involute_name(w)
    assert set(op_names(Op.PREC, v, w)) == {involute_name(u) for u in op_names(Op.SUCC, mw, mv)}
    assert set(op_names(Op.BULLET, v, w)) == {involute_name(u) for u in op_names(Op.BULLET, mw, mv)}
    assert involution_sum(star(v, w)) == star(mw, mv)


def test_tri_op_is_bilinear():
    a, m = N(A), N(M)
    x = FormalSum({a: 2, m: -1})
    assert tri_op(Op.BULLET, x, a) == 2 * tri_op(Op.BULLET, a, a) - tri_op(Op.BULLET, m, a)
    assert tri_op("<", a, a) == FormalSum.basis(N(BA))


# --------------------------------------------------------------------------
# universal expressions


def test_universal_expression_examples():
    assert str(universal_expression(N(M))) == "g . g"
    assert str(universal_expression(N(AB))) == "g > g"
    assert str(universal_expression(N(BA))) == "g < g"
    assert str(universal_expression(N(ACA))) == "g > (g < g)"
    assert universal_expression(N(ACA)).pretty() == "g ≻ (g ≺ g)"
    assert universal_expression(N(A)) == GEN


def test_the_other_bracketing_of_the_mirror_symmetric_example_agrees():
    assert evaluate_at_generator(parse_expression("(g > g) < g")) == FormalSum.basis(N(ACA))


@pytest.mark.parametrize("n", range(1, 6))
def test_universal_expressions_evaluate_back(n):
    for v in names(n):
        e = universal_expression(v)
        assert evaluate_at_generator(e) == FormalSum.basis(v)
        assert e.generator_count() == n
        assert parse_expression(str(e)) == e


def test_universal_expressions_are_distinct():
    exprs = [str(universal_expression(v)) for v in names(4)]
    assert len(set(exprs)) == len(exprs)


def test_parse_expression_errors():
    assert parse_expression("g") == GEN
    for bad in ("", "g <", "(g . g", "g ? g", "x"):
        with pytest.raises(LiteralSyntaxError):
            parse_expression(bad)


def test_over_under_bound_the_product():
    for v, w in itertools.product(names(2), names(2)):
        s = star_names(v, w)
        assert over(v, w) in s and under(v, w) in s

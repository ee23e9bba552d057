"""Symbolic core: parsing, normal ordering, confluence, printing."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlorentz.fockrep import (CutoffSpace, expr_ladder_weight, pair_block,
                              represent, represent_expr)
from qlorentz.qexpr import (Bracket, Gen, NormalForm, ParseError,
                            Product, QPow, ScalarLit, Sum, commutator,
                            normal_order, parse, parse_normal)
from qlorentz.scalars import MINUS_ONE, Q_MINUS_QINV, Scalar, qnum

NO = parse_normal


# -- defining relations -------------------------------------------------------

def test_weight_qinv_relation_reduces_to_qN():
    assert str(NO("a1*a1") + NO("0")) == str(NO("a1^2"))
    assert str(NO("a1*ad1 - q^-1*ad1*a1")) == "qpow(1,1)"


def test_weight_q_relation_reduces_to_qminusN():
    assert str(NO("a1*ad1 - q*ad1*a1")) == "qpow(-1,1)"


def test_weighted_bracket_form():
    assert NO("[a1, ad1, w=q^-1]") == NO("qpow(1,1)")


def test_qpower_exchange():
    assert NO("a1*qpow(1,1) - q*qpow(1,1)*a1").is_zero()
    assert NO("ad1*qpow(1,1) - q^-1*qpow(1,1)*ad1").is_zero()


def test_ladder_commutator_equals_qinteger_diagonal():
    lhs = NO("[ad1*a2, ad2*a1]")
    rhs = (NormalForm.diagonal((2, -2, 0, 0))
           - NormalForm.diagonal((-2, 2, 0, 0))) / Q_MINUS_QINV
    assert lhs == rhs


def test_bilinear_product_against_block_matrix_oracle():
    # (a2+ a1)(a1+ a2) reduced symbolically must equal the naive product of
    # the two factor matrices on every graded block
    e = parse("(ad2*a1)*(ad1*a2)")
    nf = normal_order(e)
    for n in range(0, 6):
        block = pair_block(n)
        naive = (represent(NO("ad2*a1"), block)
                 * represent(NO("ad1*a2"), block))
        assert (represent(nf, block) - naive).is_zero()


def test_distinct_modes_commute():
    assert NO("[qpow(1,1)*ad1*a1, qpow(3,2)*a2*ad2]").is_zero()
    assert NO("[ad1*a2, ad3*a4]").is_zero()


# -- parser -------------------------------------------------------------------

def test_parse_product_structure():
    e = parse("a1 * ad1")
    assert isinstance(e, Product)
    assert e.factors == (Gen("a", 1), Gen("ad", 1))


def test_parse_commutator_structure():
    e = parse("[ad1*a2, ad2*a1]")
    assert isinstance(e, Bracket)
    assert isinstance(e.left, Product)
    assert e.weight is None


def test_parse_minkowski_raising_generator():
    e = parse("qpow(-1/2,1)*qpow(1/2,2)*ad1*a2")
    assert isinstance(e, Product)
    assert e.factors[0] == QPow(-1, 1)
    assert e.factors[1] == QPow(1, 2)


def test_parse_scalars_and_powers():
    assert NO("3/2*q^-2") == NormalForm.scalar(
        Scalar.from_rational(Fraction(3, 2)) * Scalar.p_power(-4))
    assert NO("i^2") == NormalForm.scalar(MINUS_ONE)
    assert NO("sqrt2^2") == NormalForm.scalar(Scalar.from_rational(2))
    assert NO("qnum(3)") == NormalForm.scalar(qnum(3))
    assert NO("-a1*a2 + a1*a2").is_zero()


@pytest.mark.parametrize("bad", [
    "a1*", "[a1, a2", "qpow(1/3,1)", "a5", "q^", "b1", "(a1", "a1 a2",
    "qpow(1,5)", "[a1, a2, v=q]", "1/0", "", "*a1", "qnum(1/2)",
])
def test_malformed_inputs_have_located_errors(bad):
    with pytest.raises(ParseError) as err:
        parse(bad)
    assert err.value.line >= 1
    assert err.value.col >= 1
    assert "syntax error" in str(err.value)


def test_error_reports_expected_tokens():
    with pytest.raises(ParseError) as err:
        parse("a1 +")
    assert err.value.expected


def test_error_location_tracks_lines():
    with pytest.raises(ParseError) as err:
        parse("a1 +\n  ad1 *\n  b7")
    assert err.value.line == 3
    assert err.value.col == 3


# -- structural properties ----------------------------------------------------

def test_bare_number_operator_is_rejected():
    with pytest.raises(ValueError):
        normal_order(Gen("N", 1))


def test_negative_power_needs_invertible_base():
    assert NO("qpow(1,1)^-2") == NormalForm.qpow(-4, 1)
    assert NO("(q*qpow(1/2,1))^-1") == NormalForm.qpow(-1, 1) * Scalar.p_power(-2)
    with pytest.raises(ValueError):
        NO("(ad1*a2)^-1")
    with pytest.raises(ValueError):
        NO("(qpow(1,1) + qpow(1,2))^-1")


def test_commutator_weight_must_be_scalar():
    with pytest.raises(ValueError):
        NO("[a1, ad1, w=ad2*a2]")


def test_monomial_keys_keep_ladders_unpaired():
    # canonical monomials never hold a creator and an annihilator of the
    # same mode; products eliminate the pair into diagonal q-powers
    nf = NO("ad1*a1")
    for key in nf.terms:
        for (_, r, s) in key:
            assert r == 0 or s == 0


small_scalars = st.builds(
    lambda n, d, k: Scalar.from_rational(Fraction(n, d)) * Scalar.p_power(k),
    st.integers(-3, 3), st.integers(1, 4), st.integers(-2, 2))

_ATOMS = ("a1", "ad1", "a2", "ad2", "qpow(1/2,1)", "qpow(-1/2,2)",
          "qpow(1,1)", "qnum(2)", "q", "i", "1/2", "p")


def _random_expr(rng, budget):
    kind = rng.randrange(6)
    if budget <= 1 or kind == 0:
        return rng.choice(_ATOMS)
    if kind in (1, 2):
        return (f"({_random_expr(rng, budget // 2)})"
                f"*({_random_expr(rng, budget // 2)})")
    if kind == 3:
        return (f"({_random_expr(rng, budget)}) + "
                f"({_random_expr(rng, budget)})")
    if kind == 4:
        return (f"({_random_expr(rng, budget)}) - "
                f"({_random_expr(rng, budget)})")
    return (f"[{_random_expr(rng, budget // 2)},"
            f" {_random_expr(rng, budget // 2)}]")


def test_associativity_of_monomial_products():
    # the heart of confluence: high-degree monomial triples associate exactly
    from qlorentz.scalars import ONE as _ONE
    rng = random.Random(42)

    def rand_mono():
        key = []
        for _ in range(2):
            t = rng.randint(-2, 2)
            if rng.random() < 0.5:
                key.append((t, rng.randint(0, 3), 0))
            else:
                key.append((t, 0, rng.randint(0, 3)))
        key += [(0, 0, 0), (0, 0, 0)]
        return NormalForm({tuple(key): _ONE})

    for _ in range(150):
        x, y, z = rand_mono(), rand_mono(), rand_mono()
        assert ((x * y) * z - x * (y * z)).is_zero()


def test_confluence_left_vs_rightmost_reduction():
    rng = random.Random(20240805)
    for _ in range(120):
        e = parse(_random_expr(rng, 4))
        assert normal_order(e, "left") == normal_order(e, "right")


def test_idempotence_of_normal_ordering():
    rng = random.Random(7)
    for _ in range(60):
        nf = normal_order(parse(_random_expr(rng, 4)))
        again = NO(str(nf))
        assert again == nf


@settings(max_examples=40, deadline=None)
@given(small_scalars, small_scalars)
def test_linearity(alpha, beta):
    x = NO("ad1*a2 + qpow(1/2,1)*a1*ad1")
    y = NO("ad2*a1*ad1*a2")
    lhs = normal_order(Sum((
        Product((ScalarLit(alpha), parse("ad1*a2 + qpow(1/2,1)*a1*ad1"))),
        Product((ScalarLit(beta), parse("ad2*a1*ad1*a2"))),
    )))
    assert lhs == x * alpha + y * beta


def test_representation_soundness_on_cutoff_space():
    # includes grading-violating expressions: compare on trusted columns
    rng = random.Random(99)
    space = CutoffSpace((1, 2), 8)
    for _ in range(40):
        e = parse(_random_expr(rng, 4))
        head = expr_ladder_weight(e)
        if head > 3:
            continue
        cols = space.trusted_columns(head)
        naive = represent_expr(e, space).columns(cols)
        symbolic = represent(normal_order(e), space,
                             allow_nonconserving=True).columns(cols)
        assert (naive - symbolic).is_zero()


# -- printing -----------------------------------------------------------------

def test_print_examples():
    assert str(NO("qpow(1,1)")) == "qpow(1,1)"
    assert str(NO("0")) == "0"
    assert str(NO("qpow(-1/2,1)*qpow(1/2,2)*ad1*a2")) == \
        "qpow(-1/2,1)*qpow(1/2,2)*ad1*a2"


def test_print_roundtrip_is_stable_after_one_pass():
    rng = random.Random(11)
    for _ in range(80):
        nf = normal_order(parse(_random_expr(rng, 4)))
        text = str(nf)
        nf2 = NO(text)
        assert nf2 == nf
        assert str(nf2) == text


def test_commutator_helper():
    x, y = NO("ad1*a2"), NO("ad2*a1")
    assert commutator(x, y) == x * y - y * x
    w = Scalar.p_power(-2)
    assert commutator(NO("a1"), NO("ad1"), w) == NO("qpow(1,1)")

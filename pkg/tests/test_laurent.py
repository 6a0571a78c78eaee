import pytest
from hypothesis import given, strategies as st

from fockcanon.laurent import (
    ONE,
    Q,
    QINV,
    ZERO,
    LaurentPoly,
    NonIntegralResultError,
    NotAntisymmetricError,
    RationalLaurentPoly,
    antisym_split,
    q_int,
)

P = LaurentPoly.from_terms


def test_add_cancellation():
    assert P({1: 1, -1: -1}) + P({-1: 1}) == Q


def test_add_identity():
    p = P({3: 2, 0: -1})
    assert ZERO + p == p


def test_add_hand():
    assert P({2: 1, 0: -1}) + P({0: -1, -2: 1}) == P({2: 1, 0: -2, -2: 1})


def test_mul_inverse():
    assert Q * QINV == ONE


def test_mul_hand():
    assert P({1: 1, -1: -1}) * P({1: 1, -1: 1}) == P({2: 1, -2: -1})


def test_mul_zero():
    assert P({5: 3}) * ZERO == ZERO


def test_bar_antisymmetric():
    assert P({1: 1, -1: -1}).bar() == P({-1: 1, 1: -1})


def test_bar_fixes_one():
    assert ONE.bar() == ONE


def test_bar_substitution():
    assert P({2: 1, 0: -1}).bar() == P({-2: 1, 0: -1})


def test_antisym_split_simple():
    assert antisym_split(P({1: 1, -1: -1})) == {1: 1}


def test_antisym_split_zero():
    assert antisym_split(ZERO) == {}


def test_antisym_split_hand():
    assert antisym_split(P({3: 2, 1: -1, -1: 1, -3: -2})) == {3: 2, 1: -1}


def test_antisym_split_rejects():
    with pytest.raises(NotAntisymmetricError):
        antisym_split(P({1: 1}))


def test_q_int():
    assert q_int(2) == P({1: 1, -1: 1})
    assert q_int(0) == ZERO
    assert q_int(-2) == -q_int(2)


small_polys = st.builds(
    lambda d: LaurentPoly.from_terms(d),
    st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6),
)


@given(small_polys)
def test_bar_involution(p):
    assert p.bar().bar() == p


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(small_polys)
def test_antisym_round_trip(p):
    r = p - p.bar()
    parts = antisym_split(r)
    rebuilt = sum(
        (LaurentPoly.from_terms({j: c, -j: -c}) for j, c in parts.items()),
        ZERO,
    )
    assert rebuilt == r


@given(small_polys)
def test_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json()) == p
    assert all(isinstance(c, str) for c in p.to_json()["c"])


def test_pretty():
    assert P({2: 1, 0: -1, -2: 1}).pretty() == "q^2-1+q^-2"
    assert P({1: 1, -1: -1}).pretty() == "q-q^-1"
    assert ZERO.pretty() == "0"
    assert P({1: -2}).pretty() == "-2q"


def test_latex():
    assert P({2: 1, -1: -1}).latex() == "q^{2}-q^{-1}"


def test_ring_membership_helpers():
    assert P({1: 1, 3: 2}).in_positive_ring()
    assert not P({0: 1}).in_positive_ring()
    assert P({-1: 4}).in_negative_ring()
    assert ZERO.in_positive_ring() and ZERO.in_negative_ring()


def test_rational_quarantine():
    from fractions import Fraction

    r = RationalLaurentPoly.from_poly(P({0: 1})) * Fraction(1, 2)
    with pytest.raises(NonIntegralResultError):
        r.integral()
    assert (r + r).integral() == ONE


def test_rational_mixed_arithmetic():
    from fractions import Fraction

    r = RationalLaurentPoly.from_poly(P({1: 1})) * P({-1: 1})
    assert r.integral() == ONE
    assert (r * Fraction(3, 2) * Fraction(2, 3)).integral() == ONE

from fractions import Fraction
from math import factorial

import pytest

from fockcanon import symfunc
from fockcanon.partitions import SizeMismatchError, conjugate, diagram, partitions_of


def test_z_order():
    assert symfunc.z_order((1, 1)) == 2
    assert symfunc.z_order((2,)) == 2
    assert symfunc.z_order((2, 1, 1)) == 4


def test_z_order_class_equation():
    # conjugacy class sizes r!/z_beta sum to r!
    for r in range(1, 8):
        assert sum(factorial(r) // symfunc.z_order(b) for b in partitions_of(r)) == factorial(r)


def test_mn_trivial_character():
    for beta in partitions_of(5):
        assert symfunc.mn_character((5,), beta) == 1


def test_mn_examples():
    assert symfunc.mn_character((1, 1), (2,)) == -1
    assert symfunc.mn_character((2, 1), (1, 1, 1)) == 2


def test_mn_sign_character():
    # chi^(1^r) on beta is the sign of the permutation
    for r in range(1, 7):
        for beta in partitions_of(r):
            sign = (-1) ** sum(b - 1 for b in beta)
            assert symfunc.mn_character((1,) * r, beta) == sign


def test_mn_size_mismatch():
    with pytest.raises(SizeMismatchError):
        symfunc.mn_character((2,), (1,))


def _hooks(p):
    pc = conjugate(p)
    return [
        p[r - 1] - c + pc[c - 1] - r + 1
        for (r, c) in sorted(diagram(p))
    ]


def test_mn_dimension_equals_hook_count():
    for r in range(1, 7):
        for alpha in partitions_of(r):
            dim = factorial(r)
            for h in _hooks(alpha):
                dim //= h
            assert symfunc.mn_character(alpha, (1,) * r) == dim


def test_column_orthogonality():
    for r in range(1, 7):
        parts = list(partitions_of(r))
        for a in parts:
            for g in parts:
                s = sum(
                    Fraction(
                        symfunc.mn_character(a, b) * symfunc.mn_character(g, b),
                        symfunc.z_order(b),
                    )
                    for b in parts
                )
                assert s == (1 if a == g else 0)


def test_schur_to_h_examples():
    assert symfunc.schur_to_h((1,)) == {(1,): 1}
    assert symfunc.schur_to_h((1, 1)) == {(1, 1): 1, (2,): -1}
    assert symfunc.schur_to_h((2, 1)) == {(2, 1): 1, (3,): -1}


def _ssyt_count(shape, content):
    """Number of semistandard tableaux of the given shape and content."""
    cells = sorted(diagram(shape), key=lambda rc: (rc[0], rc[1]))

    def rec(idx, filling, remaining):
        if idx == len(cells):
            return 1 if all(x == 0 for x in remaining) else 0
        r, c = cells[idx]
        total = 0
        for v in range(1, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            left = filling.get((r, c - 1))
            up = filling.get((r - 1, c))
            if left is not None and v < left:
                continue
            if up is not None and v <= up:
                continue
            filling[(r, c)] = v
            remaining[v - 1] -= 1
            total += rec(idx + 1, filling, remaining)
            remaining[v - 1] += 1
            del filling[(r, c)]
        return total

    return rec(0, {}, list(content))


def test_inverse_kostka_round_trip():
    # sum_mu kappa_{alpha mu} K_{lam mu} = delta_{alpha lam}, with the
    # Kostka numbers counted directly from semistandard tableaux
    for r in range(0, 7):
        parts = list(partitions_of(r))
        for alpha in parts:
            kappa = symfunc.schur_to_h(alpha)
            for lam in parts:
                total = sum(
                    kappa.get(mu, 0) * _ssyt_count(lam, mu + (0,) * (len(lam)))
                    for mu in parts
                )
                assert total == (1 if lam == alpha else 0)

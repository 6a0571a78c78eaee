import pytest

from fockcanon import fock, verify
from fockcanon.canonical import (
    NotApplicableError,
    a_matrix,
    adjoint_matrix,
    blocks,
    canonical_lower,
    canonical_upper,
    check_duality,
    domino_theorem_check,
    steinberg_decompose,
    steinberg_g_minus,
)
from fockcanon.fock import FockVector
from fockcanon.laurent import ONE, LaurentPoly
from fockcanon.partitions import (
    conjugate,
    dominance_leq,
    is_n_regular,
    n_core_quotient,
    partitions_of,
    revlex_order,
)

P = LaurentPoly.from_terms


def test_a_matrix_reproduces_reference_tables():
    for m in (2, 3, 4):
        assert a_matrix(2, m) == verify.reference_bar_matrix(m)


def test_a_matrix_entry_example():
    assert a_matrix(2, 4).entry((1, 1, 1, 1), (4,)) == P({2: 1, 0: -1})


def test_a_matrix_involution_and_symmetry():
    for n in (2, 3, 4):
        for m in range(6):
            a = a_matrix(n, m)
            assert a.bar_entries().matmul(a).is_identity()
            for lam in revlex_order(m):
                for mu in revlex_order(m):
                    assert a.entry(lam, mu) == a.entry(conjugate(mu), conjugate(lam))


def test_canonical_upper_reproduces_reference_tables():
    for m in range(2, 7):
        assert canonical_upper(2, m) == verify.reference_upper_matrix(m)


def test_canonical_upper_m2():
    d = canonical_upper(2, 2)
    assert d.column((2,)) == FockVector({(2,): ONE, (1, 1): P({1: 1})})
    assert d.column((1, 1)) == FockVector.basis((1, 1))


def test_canonical_upper_identity_when_no_ribbon_fits():
    for m in range(5):
        n = max(m + 1, 2)
        assert canonical_upper(n, m).is_identity()
        assert canonical_lower(n, m).is_identity()


def test_canonical_lower_examples():
    e = canonical_lower(2, 2)
    assert e.row((2,)) == FockVector({(2,): ONE, (1, 1): P({-1: -1})})
    assert e.row((1, 1)) == FockVector.basis((1, 1))


def test_canonical_lower_core_is_bare():
    for n in (2, 3):
        for m in range(6):
            e = canonical_lower(n, m)
            for lam in partitions_of(m):
                core, quot = n_core_quotient(lam, n)
                if core == lam:
                    assert e.row(lam) == FockVector.basis(lam)


def test_bar_invariance_of_bases():
    for n in (2, 3):
        for m in range(6):
            d = canonical_upper(n, m)
            e = canonical_lower(n, m)
            for mu in revlex_order(m):
                assert fock.bar(d.column(mu), n) == d.column(mu)
                assert fock.bar(e.row(mu), n) == e.row(mu)


def test_congruence_rings():
    for n in (2, 3):
        for m in range(7):
            for (lam, mu), poly in canonical_upper(n, m).entries.items():
                if lam != mu:
                    assert poly.in_positive_ring()
            for (lam, mu), poly in canonical_lower(n, m).entries.items():
                if lam != mu:
                    assert poly.in_negative_ring()


def test_triangularity_and_blocks():
    for n in (2, 3):
        for m in range(7):
            for (lam, mu), _ in canonical_upper(n, m).entries.items():
                assert dominance_leq(lam, mu)
                assert n_core_quotient(lam, n)[0] == n_core_quotient(mu, n)[0]
            for (lam, mu), _ in canonical_lower(n, m).entries.items():
                assert dominance_leq(mu, lam)


def test_blocks_partition_the_degree():
    for n in (2, 3):
        for m in range(7):
            blk = blocks(n, m)
            seen = [p for members in blk.values() for p in members]
            assert sorted(seen) == sorted(revlex_order(m))


def test_adjoint_matrix_m2():
    c = adjoint_matrix(canonical_upper(2, 2))
    assert c.entry((2,), (2,)) == ONE
    assert c.entry((1, 1), (2,)) == P({1: -1})
    assert c.entry((1, 1), (1, 1)) == ONE


def test_adjoint_of_identity():
    d = canonical_upper(7, 3)  # no 7-ribbon fits in a partition of 3
    assert d.is_identity()
    assert adjoint_matrix(d).is_identity()


def test_d_times_c_is_identity():
    for n in (2, 3):
        for m in range(7):
            d = canonical_upper(n, m)
            assert d.matmul(adjoint_matrix(d)).is_identity()


def test_duality_examples():
    c = adjoint_matrix(canonical_upper(2, 2))
    e = canonical_lower(2, 2)
    assert c.entry((1, 1), (2,)) == P({1: -1})
    assert e.entry((2,), (1, 1)).bar() == P({1: -1})
    assert check_duality(e, c)


def test_duality_sweep():
    for n in (2, 3):
        for m in range(7):
            assert check_duality(
                canonical_lower(n, m), adjoint_matrix(canonical_upper(n, m))
            )


def test_steinberg_examples():
    assert steinberg_g_minus((2,), 2) == FockVector(
        {(2,): ONE, (1, 1): P({-1: -1})}
    )
    vac = FockVector.basis(())
    assert steinberg_g_minus((2, 2), 2) == fock.s_alpha((1, 1), vac, 2)
    assert steinberg_decompose((2, 2), 2) == ((), (1, 1))


def test_steinberg_applies_to_31():
    # (3,1)' = (2,1,1) repeats the part 1 twice, so it is 2-singular and the
    # factorization applies: (3,1) = (1,1) + 2*(1)
    assert steinberg_decompose((3, 1), 2) == ((1, 1), (1,))
    assert steinberg_g_minus((3, 1), 2) == canonical_lower(2, 4).row((3, 1))


def test_steinberg_not_applicable():
    with pytest.raises(NotApplicableError):
        steinberg_g_minus((2, 1), 2)  # (2,1)' = (2,1) is 2-regular


def test_steinberg_sweep():
    for n in (2, 3):
        for m in range(7):
            e = canonical_lower(n, m)
            for lam in partitions_of(m):
                if is_n_regular(conjugate(lam), n):
                    continue
                assert steinberg_g_minus(lam, n) == e.row(lam)


def test_domino_entry_examples():
    e2 = canonical_lower(2, 2)
    assert e2.entry((2,), (1, 1)) == P({-1: -1})
    assert e2.entry((2,), (2,)) == ONE


def test_domino_theorem_small():
    for m in (2, 4, 6):
        report = domino_theorem_check(m)
        assert report.ok, report.mismatches
        assert report.checked > 0


def test_domino_theorem_requires_even():
    with pytest.raises(ValueError):
        domino_theorem_check(3)

"""Acceptance suite.

One test per acceptance criterion, each driving the corresponding
verification suite at its stated range and tolerance (everything here is
exact arithmetic; "tolerance" means entry-for-entry equality).  Each test
prints a single PASS line on success; run with ``pytest -s
tests/test_acceptance.py`` to see them.
"""

import time

from fockcanon import verify, wedge
from fockcanon.canonical import canonical_upper
from fockcanon.partitions import revlex_order


def _declare(num: int, name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {num:2d} [{status}] {name}{suffix}")
    assert ok, f"criterion {num}: {name}{suffix}"


def _suite_ok(report):
    failed = [label for label, ok, _ in report.checks if not ok]
    return report.ok, ("; ".join(failed) if failed else f"{len(report.checks)} checks")


def test_criterion_01_printed_tables():
    t0 = time.perf_counter()
    ok, detail = _suite_ok(verify.run_tables(n=2, max_m=6))
    elapsed = time.perf_counter() - t0
    _declare(1, "printed bar and upper-basis tables, n=2", ok and elapsed < 1.0,
             f"{detail}, {elapsed:.2f}s")


def test_criterion_02_involution():
    t0 = time.perf_counter()
    ok = True
    details = []
    for n in (2, 3, 4):
        sub_ok, detail = _suite_ok(verify.run_involution(n, max_m=8))
        ok = ok and sub_ok
        details.append(f"n={n}: {detail}")
    elapsed = time.perf_counter() - t0
    _declare(2, "bar involution, m<=8, n in {2,3,4}", ok and elapsed < 60.0,
             f"{'; '.join(details)}, {elapsed:.1f}s")


def test_criterion_03_quantum_group():
    t0 = time.perf_counter()
    ok = all(_suite_ok(verify.run_uqsl(n, max_m=6))[0] for n in (2, 3))
    elapsed = time.perf_counter() - t0
    _declare(3, "quantum-group commutator, m<=6, n in {2,3}",
             ok and elapsed < 60.0, f"{elapsed:.1f}s")


def test_criterion_04_bar_commutation():
    # covered by the involution suite's commutation checks at m<=6
    ok = True
    for n in (2, 3):
        rep = verify.run_involution(n, max_m=6)
        for label, check_ok, _ in rep.checks:
            if label.startswith("bar commutes"):
                ok = ok and check_ok
    _declare(4, "bar commutes with f_i and B_-k, m<=6, n in {2,3}, k in {1,2}", ok)


def test_criterion_05_heisenberg():
    ok = all(_suite_ok(verify.run_heisenberg(n, max_m=6))[0] for n in (2, 3))
    _declare(5, "Heisenberg commutator and B-adjointness", ok)


def test_criterion_06_ribbon_oracle():
    ok = all(_suite_ok(verify.run_ribbon(n, max_m=6))[0] for n in (2, 3))
    _declare(6, "strip sums equal exponential formula, k<=3, m<=6, n in {2,3}", ok)


def test_criterion_07_basis_relations():
    ok = all(_suite_ok(verify.run_duality(n, max_m=8))[0] for n in (2, 3))
    _declare(7, "D*C=I, duality, rings, triangularity, blocks, m<=8, n in {2,3}", ok)


def test_criterion_08_steinberg():
    ok = all(_suite_ok(verify.run_steinberg(n, max_m=8))[0] for n in (2, 3))
    _declare(8, "Steinberg factorization matches lower-basis rows, m<=8", ok)


def test_criterion_09_domino():
    ok, detail = _suite_ok(verify.run_domino(2, max_m=8))
    _declare(9, "domino spin sums match lower-basis rows, m<=8", ok, detail)


def test_criterion_10_highest_weight():
    ok = True
    for n in (2, 3):
        rep = verify.run_uqsl(n, max_m=3)
        for label, check_ok, _ in rep.checks:
            if label.startswith("highest-weight"):
                ok = ok and check_ok
    _declare(10, "highest-weight vectors killed by e_i, |lam|<=3, n in {2,3}", ok)


def test_criterion_11_performance_gate():
    wedge.clear_caches()
    canonical_upper.cache_clear()
    try:
        t0 = time.perf_counter()
        d = canonical_upper(2, 10)
        elapsed = time.perf_counter() - t0
    finally:
        canonical_upper.cache_clear()
        wedge.clear_caches()
    ok = elapsed < 300.0 and len(d.order) == 42 == len(revlex_order(10))
    _declare(11, "D for n=2, m=10 under five minutes",
             ok, f"{elapsed:.2f}s on the {wedge.backend()} kernel")

"""Canonical bases and transition matrices.

Per degree m the bar involution is unitriangular on the standard basis in
reverse-lexicographic order, with blocks indexed by n-cores.  The triangular
correction algorithm turns that into the two canonical bases: processing
partitions upward in revlex, repeatedly cancel the revlex-maximal defect of
bar(v) - v with an earlier basis vector, using corrections in qZ[q] for the
upper basis G and in q^-1 Z[q^-1] for the lower basis G^-.

Matrix kinds and orientations:
  A: bar images,      column mu = bar|mu>
  D: upper basis,     column mu = G(mu)
  E: lower basis,     row lam  = G^-(lam)
  C: inverse of D     (adjoint-basis coefficients)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import fock
from .fock import FockVector
from .laurent import ONE, ZERO, LaurentPoly, antisym_split
from .partitions import (
    Partition,
    conjugate,
    is_n_regular,
    n_core_quotient,
    partitions_of,
    revlex_index,
    revlex_order,
    two_sign,
    yamanouchi_domino_tableaux,
)


class NotApplicableError(ValueError):
    """Steinberg factorization requested for a partition with n-regular conjugate."""


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    kind: str
    n: int
    m: int
    order: tuple[Partition, ...]
    entries: dict[tuple[Partition, Partition], LaurentPoly]

    def entry(self, row: Partition, col: Partition) -> LaurentPoly:
        return self.entries.get((tuple(row), tuple(col)), ZERO)

    def column(self, col: Partition) -> FockVector:
        col = tuple(col)
        return FockVector(
            {r: c for (r, cc), c in self.entries.items() if cc == col}
        )

    def row(self, row: Partition) -> FockVector:
        row = tuple(row)
        return FockVector(
            {cc: c for (r, cc), c in self.entries.items() if r == row}
        )

    def bar_entries(self) -> "TransitionMatrix":
        return TransitionMatrix(
            self.kind,
            self.n,
            self.m,
            self.order,
            {k: v.bar() for k, v in self.entries.items()},
        )

    def matmul(self, other: "TransitionMatrix") -> "TransitionMatrix":
        out: dict[tuple[Partition, Partition], LaurentPoly] = {}
        by_row: dict[Partition, list] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        for (r, mid), v in self.entries.items():
            for c, w in by_row.get(mid, ()):
                key = (r, c)
                cur = out.get(key)
                val = v * w if cur is None else cur + v * w
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return TransitionMatrix("?", self.n, self.m, self.order, out)

    def is_identity(self) -> bool:
        return self.entries == {(p, p): ONE for p in self.order}

    def __eq__(self, other):
        return (
            isinstance(other, TransitionMatrix)
            and (self.kind, self.n, self.m, self.order) ==
                (other.kind, other.n, other.m, other.order)
            and self.entries == other.entries
        )


def blocks(n: int, m: int) -> dict[Partition, list[Partition]]:
    """Partitions of m grouped by n-core, revlex order kept inside blocks."""
    out: dict[Partition, list[Partition]] = {}
    for p in revlex_order(m):
        core, _ = n_core_quotient(p, n)
        out.setdefault(core, []).append(p)
    return out


def a_matrix(n: int, m: int) -> TransitionMatrix:
    """Bar matrix: column mu holds bar|mu> in the standard basis."""
    entries: dict[tuple[Partition, Partition], LaurentPoly] = {}
    for block in blocks(n, m).values():
        block_set = set(block)
        for mu in block:
            for lam, c in fock.bar_basis_vector(mu, n).items():
                if lam not in block_set:
                    raise AssertionError(f"bar|{mu}> leaves its n-core block")
                entries[(lam, mu)] = c
    return TransitionMatrix("A", n, m, revlex_order(m), entries)


def _canonical_basis(n: int, m: int, lower: bool) -> dict[Partition, FockVector]:
    index = revlex_index(m)
    basis: dict[Partition, FockVector] = {}
    for block in blocks(n, m).values():
        for mu in reversed(block):  # ascending revlex
            v = FockVector.basis(mu)
            while True:
                delta = fock.bar(v, n) - v
                if not delta:
                    break
                nu = min(delta.support(), key=lambda p: index[p])
                parts = antisym_split(delta.coeff(nu))
                if lower:
                    corr = LaurentPoly.from_terms({-j: -r for j, r in parts.items()})
                else:
                    corr = LaurentPoly.from_terms(dict(parts))
                v = v + basis[nu].scale(corr)
            basis[mu] = v
    return basis


@lru_cache(maxsize=None)
def canonical_upper(n: int, m: int) -> TransitionMatrix:
    """Matrix D: column mu holds G(mu) = |mu> + sum_{lam} d_{lam mu} |lam>."""
    basis = _canonical_basis(n, m, lower=False)
    entries = {
        (lam, mu): c for mu, v in basis.items() for lam, c in v.items()
    }
    return TransitionMatrix("D", n, m, revlex_order(m), entries)


@lru_cache(maxsize=None)
def canonical_lower(n: int, m: int) -> TransitionMatrix:
    """Matrix E: row lam holds G^-(lam) = sum_mu e_{lam mu} |mu>."""
    basis = _canonical_basis(n, m, lower=True)
    entries = {
        (lam, mu): c for lam, v in basis.items() for mu, c in v.items()
    }
    return TransitionMatrix("E", n, m, revlex_order(m), entries)


def adjoint_matrix(d: TransitionMatrix) -> TransitionMatrix:
    """Matrix C = D^-1 by unitriangular forward substitution."""
    if d.kind != "D":
        raise ValueError("adjoint_matrix expects a D matrix")
    order = d.order
    index = {p: i for i, p in enumerate(order)}
    entries: dict[tuple[Partition, Partition], LaurentPoly] = {}
    for mu in order:
        # column mu of C: x with D x = e_mu; D is unitriangular downward.
        x: dict[Partition, LaurentPoly] = {mu: ONE}
        for lam in order[index[mu] + 1 :]:
            s = ZERO
            for nu, val in x.items():
                coeff = d.entry(lam, nu)
                if coeff:
                    s = s + coeff * val
            if s:
                x[lam] = -s
        for lam, val in x.items():
            entries[(lam, mu)] = val
    return TransitionMatrix("C", d.n, d.m, order, entries)


def check_duality(e: TransitionMatrix, c: TransitionMatrix) -> bool:
    """Entrywise identity c_{lam,mu}(q) = e_{lam',mu'}(1/q)."""
    if (e.n, e.m) != (c.n, c.m):
        raise ValueError("matrices are not comparable")
    for lam in e.order:
        for mu in e.order:
            if c.entry(lam, mu) != e.entry(conjugate(lam), conjugate(mu)).bar():
                return False
    return True


def adjoint_from_lower(e: TransitionMatrix) -> TransitionMatrix:
    """Kind-C matrix built from E through the conjugation duality."""
    entries = {}
    for (lam, mu), v in e.entries.items():
        entries[(conjugate(lam), conjugate(mu))] = v.bar()
    return TransitionMatrix("C", e.n, e.m, e.order, entries)


def steinberg_decompose(p: Partition, n: int) -> tuple[Partition, Partition]:
    """Write p = mu + n*alpha with mu' n-regular; unique via conjugate parts.

    Each part value of p' keeps its multiplicity mod n in mu'; the quotients
    go to alpha' n-fold.  Raises NotApplicableError when p' is n-regular
    (alpha would be empty).
    """
    pc = conjugate(p)
    if is_n_regular(pc, n):
        raise NotApplicableError(f"conjugate of {p} is {n}-regular")
    mult: dict[int, int] = {}
    for part in pc:
        mult[part] = mult.get(part, 0) + 1
    mu_c: list[int] = []
    alpha_c: list[int] = []
    for value, m in sorted(mult.items(), reverse=True):
        mu_c.extend([value] * (m % n))
        alpha_c.extend([value] * (m // n))
    mu = conjugate(tuple(sorted(mu_c, reverse=True)))
    alpha = conjugate(tuple(sorted(alpha_c, reverse=True)))
    rebuilt = tuple(
        (mu[i] if i < len(mu) else 0) + n * (alpha[i] if i < len(alpha) else 0)
        for i in range(max(len(mu), len(alpha)))
    )
    assert rebuilt == p, (p, mu, alpha)
    return mu, alpha


def steinberg_g_minus(p: Partition, n: int) -> FockVector:
    """G^-(p) = S_alpha(G^-(mu)) for the factorization p = mu + n*alpha."""
    mu, alpha = steinberg_decompose(tuple(p), n)
    gm = canonical_lower(n, sum(mu)).row(mu)
    return fock.s_alpha(alpha, gm, n)


@dataclass
class DominoReport:
    m: int
    checked: int
    mismatches: list

    @property
    def ok(self) -> bool:
        return not self.mismatches


def domino_theorem_check(m: int) -> DominoReport:
    """Compare rows of E (n=2) with signed spin sums over Yamanouchi domino
    tableaux: e_{2 lam, mu} = eps_2(mu) * sum_T q^(-v(T))."""
    if m % 2:
        raise ValueError("m must be even")
    e = canonical_lower(2, m)
    checked = 0
    mismatches = []
    for lam in partitions_of(m // 2):
        row = tuple(2 * x for x in lam)
        for mu in partitions_of(m):
            core, _ = n_core_quotient(mu, 2)
            if core:
                continue
            total = ZERO
            for tab in yamanouchi_domino_tableaux(mu, lam):
                total = total + LaurentPoly.monomial(1, -tab.vertical)
            expected = total * two_sign(mu)
            actual = e.entry(row, mu)
            checked += 1
            if expected != actual:
                mismatches.append((row, mu, actual, expected))
    return DominoReport(m, checked, mismatches)

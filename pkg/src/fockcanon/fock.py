"""The bosonic picture: Fock vectors and the operator actions on them.

Basis vectors are indexed by partitions.  The Chevalley action is computed
combinatorially on partitions; the Heisenberg generators and the bar
involution are delegated to the wedge layer.  The ribbon operators come in
two independent implementations: the combinatorial strip sum (v_op / u_op)
and the exponential formula through wedge straightening with rational
coefficients (v_op_via_heisenberg), which doubles as an oracle.
"""

from __future__ import annotations

from fractions import Fraction

from . import symfunc, wedge
from .laurent import ONE, ZERO, LaurentPoly, RationalLaurentPoly
from .partitions import (
    Partition,
    add_node_variants,
    node_counts,
    partitions_of,
    remove_node_variants,
    revlex_index,
    ribbon_strips_above,
    ribbon_strips_below,
)


class FockVector:
    """Finitely supported map from partitions to coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for p, c in dict(terms).items():
                if c:
                    data[tuple(p)] = c
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    @classmethod
    def basis(cls, p: Partition) -> "FockVector":
        return cls({tuple(p): ONE})

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    def coeff(self, p: Partition):
        return self.terms.get(tuple(p), ZERO)

    def support(self):
        return set(self.terms)

    def items(self):
        return self.terms.items()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for p, c in other.terms.items():
            cur = out.get(p)
            val = c if cur is None else cur + c
            if val:
                out[p] = val
            else:
                out.pop(p, None)
        return FockVector(out)

    def __neg__(self) -> "FockVector":
        return FockVector({p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c) -> "FockVector":
        if not c:
            return FockVector()
        return FockVector({p: coeff * c for p, coeff in self.terms.items()})

    def map_coeffs(self, fn) -> "FockVector":
        return FockVector({p: fn(c) for p, c in self.terms.items()})

    def integral(self) -> "FockVector":
        """Convert rational coefficients back to Z[q,1/q], failing loudly."""

        def conv(c):
            if isinstance(c, RationalLaurentPoly):
                return c.integral()
            return c

        return self.map_coeffs(conv)

    def degree(self) -> int:
        """Common size of the supporting partitions (requires homogeneity)."""
        degs = {sum(p) for p in self.terms}
        if len(degs) != 1:
            raise ValueError("vector is not degree-homogeneous")
        return degs.pop()

    def __str__(self):
        return self.pretty()

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        def order(p):
            return (sum(p), revlex_index(sum(p))[p])
        pieces = []
        for p in sorted(self.terms, key=order):
            ket = "|" + ("".join(str(x) for x in p) if p else "0") + ">"
            c = self.terms[p]
            body, sign = _coeff_str(c)
            pieces.append((sign, body + ket))
        first_sign, first = pieces[0]
        out = ("-" if first_sign < 0 else "") + first
        for sign, body in pieces[1:]:
            out += (" - " if sign < 0 else " + ") + body
        return out

    def to_json(self) -> list:
        return [
            {"partition": list(p), "poly": c.to_json()}
            for p, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, doc) -> "FockVector":
        return cls(
            {
                tuple(entry["partition"]): LaurentPoly.from_json(entry["poly"])
                for entry in doc
            }
        )

    def __repr__(self):
        return f"FockVector({self.pretty()!r})"


def _coeff_str(c) -> tuple[str, int]:
    """Render a coefficient for ket display; returns (body, sign)."""
    if not isinstance(c, LaurentPoly):
        return f"({c})", 1
    terms = list(c.terms())
    if len(terms) == 1:
        e, a = terms[0]
        sign = -1 if a < 0 else 1
        a = abs(a)
        if e == 0:
            return ("" if a == 1 else str(a)), sign
        mono = "q" if e == 1 else f"q^{e}"
        return (mono if a == 1 else f"{a}{mono}"), sign
    return f"({c.pretty()})", 1


# -- Chevalley action ---------------------------------------------------------


def f_action(i: int, v: FockVector, n: int) -> FockVector:
    """Node-adding generator: f_i |lam> = sum q^{N_i^r} |mu>."""
    out = FockVector()
    for p, c in v.items():
        for mu, n_r, _ in add_node_variants(p, i, n):
            out = out + FockVector({mu: c * LaurentPoly.monomial(1, n_r)})
    return out


def e_action(i: int, v: FockVector, n: int) -> FockVector:
    """Node-removing generator: e_i |mu> = sum q^{-N_i^l} |lam>.

    The exponent is the negative of the left count; the positive variant
    fails the quantum Serre commutator with f_i.
    """
    out = FockVector()
    for p, c in v.items():
        for lam, n_l, _ in remove_node_variants(p, i, n):
            out = out + FockVector({lam: c * LaurentPoly.monomial(1, -n_l)})
    return out


def weight_exponents(p: Partition, n: int) -> tuple[tuple[int, ...], int]:
    """Diagonal exponents: q^{h_i}|p> = q^{N_i}|p>, q^D|p> = q^{-N0}|p>."""
    counts = node_counts(p, n)
    return counts.diff, counts.zero_nodes


# -- Heisenberg / ribbon operators --------------------------------------------


def b_action(k: int, v: FockVector, n: int) -> FockVector:
    """Heisenberg generator B_k through the wedge picture."""
    wv = {}
    for p, c in v.items():
        wv[wedge.minimal_head(wedge.partition_to_word(p, len(p)))] = c
    out = wedge.b_action_words(k, wv, n)
    return FockVector({wedge.word_to_partition(w): c for w, c in out.items()})


def v_op(k: int, v: FockVector, n: int) -> FockVector:
    """Ribbon analogue of multiplication by the degree-k complete function:
    V_k |lam> = sum (-1)^h q^{-h} |mu> over horizontal strips of weight k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = FockVector()
    for p, c in v.items():
        for strip in ribbon_strips_above(p, n, k):
            coeff = c * LaurentPoly.monomial(
                -1 if strip.height % 2 else 1, -strip.height
            )
            out = out + FockVector({strip.target: coeff})
    return out


def u_op(k: int, v: FockVector, n: int) -> FockVector:
    """Adjoint of v_op: strip removal with the same signed coefficients."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = FockVector()
    for p, c in v.items():
        for strip in ribbon_strips_below(p, n, k):
            coeff = c * LaurentPoly.monomial(
                -1 if strip.height % 2 else 1, -strip.height
            )
            out = out + FockVector({strip.source: coeff})
    return out


def _b_chain(parts, v: FockVector, n: int) -> FockVector:
    out = v
    for r in parts:
        out = b_action(-r, out, n)
    return out


def v_op_via_heisenberg(k: int, v: FockVector, n: int) -> FockVector:
    """Exponential-formula oracle for v_op:
    V_k = sum over partitions rho of k of B_{-rho} / z_rho.

    Evaluated with rational coefficients; asserts the result is integral.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return v
    rational = v.map_coeffs(RationalLaurentPoly.from_poly)
    acc = FockVector()
    for rho in partitions_of(k):
        term = _b_chain(rho, rational, n)
        acc = acc + term.scale(Fraction(1, symfunc.z_order(rho)))
    return acc.integral()


def s_alpha(alpha: Partition, v: FockVector, n: int) -> FockVector:
    """Ribbon analogue of multiplication by the Schur function s_alpha,
    via the inverse Kostka expansion s_alpha = sum kappa_mu h_mu."""
    out = FockVector()
    for mu, kappa in symfunc.schur_to_h(tuple(alpha)).items():
        term = v
        for part in reversed(mu):
            term = v_op(part, term, n)
        out = out + term.scale(kappa)
    return out


def s_alpha_via_characters(alpha: Partition, v: FockVector, n: int) -> FockVector:
    """Character-expansion oracle:
    S_alpha = sum over cycle types beta of (chi^alpha_beta / z_beta) B_{-beta}.
    """
    r = sum(alpha)
    if r == 0:
        return v
    rational = v.map_coeffs(RationalLaurentPoly.from_poly)
    acc = FockVector()
    for beta in partitions_of(r):
        chi = symfunc.mn_character(tuple(alpha), beta)
        if not chi:
            continue
        term = _b_chain(beta, rational, n)
        acc = acc + term.scale(Fraction(chi, symfunc.z_order(beta)))
    return acc.integral()


def psi_q(p: Partition, n: int) -> FockVector:
    """Highest-weight vector V_{p_1} V_{p_2} ... V_{p_r} |0>."""
    out = FockVector.basis(())
    for part in reversed(p):
        out = v_op(part, out, n)
    return out


def inner_product(u: FockVector, v: FockVector) -> LaurentPoly:
    """Bilinear pairing with orthonormal standard basis (no conjugation)."""
    out = ZERO
    small, large = (u, v) if len(u.terms) <= len(v.terms) else (v, u)
    for p, c in small.items():
        other = large.terms.get(p)
        if other is not None:
            out = out + c * other
    return out


# -- bar involution -----------------------------------------------------------


def bar_basis_vector(p: Partition, n: int, k: int | None = None) -> FockVector:
    return FockVector(wedge.bar_basis(tuple(p), n, k))


def bar(v: FockVector, n: int) -> FockVector:
    """Semi-linear involution: coefficients q -> 1/q, kets to their bar images."""
    out = FockVector()
    for p, c in v.items():
        out = out + bar_basis_vector(p, n).scale(c.bar())
    return out

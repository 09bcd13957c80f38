"""Gauss sums over the prime field F_p, in two independent backends.

The exact backend expands G(phi, j) = sum_k phi(k) zeta_p^{jk} at conductor
p(p-1), where the multiplicative character phi takes values in the (p-1)-st
roots of unity.  The p-adic backend rebuilds the same sum inside truncated
Z_p[zeta_p] with phi valued in Teichmuller lifts, which is what exposes the
pi-adic valuation.  Both backends pin the character by its value on the least
primitive root, so they name the same object and can be compared digit by
digit after embedding.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycloElement, _polymul_int, _reduce_int_mod_cyclo, root_of_unity
from .numutil import discrete_log_table, is_odd_prime, least_primitive_root
from .padic import (
    AT_CAP,
    PadicCycloElement,
    PrecisionError,
    embed_cyclo,
    pi_valuation,
    teichmuller,
)


class MultiplicativeCharacter:
    """Character of F_p^* of exact order n, extended by phi(0) = 0.

    Pinned convention: phi(rho) is the chosen primitive n-th root of unity
    zeta_{p-1}^{(p-1)/n}, with rho the least primitive root mod p.  The
    p-adic realization replaces zeta_{p-1} by the Teichmuller lift of rho.
    """

    __slots__ = ("p", "n", "rho")

    def __init__(self, p, n):
        p = int(p)
        n = int(n)
        if not is_odd_prime(p):
            raise ValueError("need an odd prime, got %d" % p)
        if n < 1 or (p - 1) % n:
            raise ValueError("order %d does not divide %d" % (n, p - 1))
        self.p = p
        self.n = n
        self.rho = least_primitive_root(p)

    @property
    def order(self):
        return self.n

    def is_trivial(self):
        return self.n == 1

    def exponent_of(self, k):
        """t with phi(k) = zeta_{p-1}^t; k must be prime to p."""
        k %= self.p
        if k == 0:
            raise ValueError("phi(0) = 0 is not a root of unity")
        a = discrete_log_table(self.p)[k]
        return (a * ((self.p - 1) // self.n)) % (self.p - 1)

    def value(self, k):
        """phi(k) as an exact element of Q(zeta_{p-1}), zero at k = 0."""
        if k % self.p == 0:
            return CycloElement.zero(self.p - 1)
        return root_of_unity(self.p - 1, self.exponent_of(k))

    def value_padic(self, k, precision):
        """phi(k) as a Teichmuller lift in truncated Z_p[zeta_p]."""
        if k % self.p == 0:
            return PadicCycloElement.zero(self.p, precision)
        t = self.exponent_of(k)
        return teichmuller(pow(self.rho, t, self.p), self.p, precision)

    def __eq__(self, other):
        return (
            isinstance(other, MultiplicativeCharacter)
            and (self.p, self.n) == (other.p, other.n)
        )

    def __hash__(self):
        return hash((self.p, self.n))

    def __repr__(self):
        return "MultiplicativeCharacter(p=%d, n=%d)" % (self.p, self.n)


class ResidueSubgroup:
    """R_n, the subgroup of nonzero n-th powers mod p."""

    __slots__ = ("p", "n", "elements", "_members")

    def __init__(self, p, n):
        p = int(p)
        n = int(n)
        if not is_odd_prime(p):
            raise ValueError("need an odd prime, got %d" % p)
        if n < 1 or (p - 1) % n:
            raise ValueError("index %d does not divide %d" % (n, p - 1))
        self.p = p
        self.n = n
        members = {pow(k, n, p) for k in range(1, p)}
        assert len(members) == (p - 1) // n
        self.elements = tuple(sorted(members))
        self._members = frozenset(members)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, k):
        return int(k) % self.p in self._members

    def __repr__(self):
        return "ResidueSubgroup(p=%d, n=%d, %r)" % (self.p, self.n, self.elements)


@lru_cache(maxsize=None)
def _gauss_cyclo_exponent(p, t, j):
    """Exact G for the character rho -> zeta_{p-1}^t with additive twist j.

    zeta_{p-1} = zeta_m^p and zeta_p = zeta_m^{p-1} at m = p(p-1), so each
    summand is a single monomial and the whole sum is one canonical reduction.
    """
    dlog = discrete_log_table(p)
    m = p * (p - 1)
    return CycloElement.from_terms(
        m,
        (
            (1, (p * ((dlog[k] * t) % (p - 1)) + (p - 1) * ((j * k) % p)) % m)
            for k in range(1, p)
        ),
    )


@lru_cache(maxsize=None)
def _gauss_padic(p, n, j, precision):
    acc = PadicCycloElement.zero(p, precision)
    rho = least_primitive_root(p)
    dlog = discrete_log_table(p)
    step = (p - 1) // n
    for k in range(1, p):
        t = (dlog[k] * step) % (p - 1)
        w = teichmuller(pow(rho, t, p), p, precision)
        acc = acc + w * PadicCycloElement.zeta_power(p, precision, (j * k) % p)
    return acc


def gauss_sum(phi, j, backend="cyclotomic", precision=None):
    """G(phi, j) = sum over k in F_p of phi(k) zeta_p^{jk}.

    backend "cyclotomic": exact value at conductor p(p-1).
    backend "padic": the same sum rebuilt in truncated Z_p[zeta_p]; needs a
    precision.  The two agree after embed_cyclo (coherence is a tested law,
    not an assumption).
    """
    j = int(j) % phi.p
    if backend == "cyclotomic":
        if precision is not None:
            raise ValueError("precision applies to the padic backend only")
        return _gauss_cyclo_exponent(phi.p, (phi.p - 1) // phi.n, j)
    if backend == "padic":
        if precision is None:
            raise ValueError("padic backend needs a precision")
        return _gauss_padic(phi.p, phi.n, j, int(precision))
    raise ValueError("unknown backend %r" % (backend,))


def verify_translation(phi, j):
    """Exact check of G(phi, j) = phi(j)^{-1} G(phi, 1), j nonzero."""
    p = phi.p
    j = int(j) % p
    if j == 0:
        raise ValueError("translation identity needs j != 0")
    lhs = gauss_sum(phi, j)
    rhs = gauss_sum(phi, 1).mul_root((-p * phi.exponent_of(j)) % (p * (p - 1)))
    return lhs == rhs


def _min_valuation_precision(p):
    # smallest M with (p-1)(M-1) > p
    return p // (p - 1) + 2


def gauss_valuation(phi, j, precision):
    """pi-adic valuation of G(phi, j) for nontrivial phi and nonzero j.

    Requires (p-1)(precision-1) > p so the true valuation sits strictly
    below the truncation cap.  The returned value always meets the lower
    bound (p-1)/n; falling short would be arithmetic breakage, not input
    error, and raises accordingly.
    """
    p, n = phi.p, phi.n
    if n == 1:
        raise ValueError("valuation bound concerns nontrivial characters")
    j = int(j) % p
    if j == 0:
        raise ValueError("j must be nonzero")
    M = int(precision)
    if (p - 1) * (M - 1) <= p:
        raise PrecisionError(
            "precision %d too small to certify valuations at p = %d" % (M, p),
            suggested_precision=_min_valuation_precision(p),
        )
    v = pi_valuation(gauss_sum(phi, j, backend="padic", precision=M))
    if v is AT_CAP:
        raise PrecisionError(
            "valuation of G(phi, %d) not visible at precision %d" % (j, M),
            suggested_precision=M + 2,
        )
    if v < (p - 1) // n:
        raise ArithmeticError(
            "valuation %d fell below the guaranteed bound %d" % (v, (p - 1) // n)
        )
    return v


def character_sum_identity(phi, j):
    """Exact check of sum_{l=1}^{n-1} G(phi^l, j) = 1 + n sum_{k in R_n} zeta_p^{jk}."""
    p, n = phi.p, phi.n
    if n == 1:
        raise ValueError("identity needs a nontrivial character")
    j = int(j) % p
    if j == 0:
        raise ValueError("j must be nonzero")
    step = (p - 1) // n
    lhs = CycloElement.zero(p * (p - 1))
    for l in range(1, n):
        lhs = lhs + _gauss_cyclo_exponent(p, (step * l) % (p - 1), j)
    rhs = 1 + CycloElement.from_terms(
        p, ((n, (j * k) % p) for k in ResidueSubgroup(p, n))
    )
    return lhs == rhs


def _cyclic_mul(a, b):
    """Product in Z[x]/(x^m - 1) on length-m integer vectors."""
    m = len(a)
    full = _polymul_int(a, b)
    folded = full[:m] + [0] * (m - len(full))
    for i in range(m, len(full)):
        folded[i - m] += full[i]
    return folded


def _cyclic_pow(vec, e):
    m = len(vec)
    result = None
    sq = list(vec)
    while e:
        if e & 1:
            result = sq if result is None else _cyclic_mul(result, sq)
        e >>= 1
        if e:
            sq = _cyclic_mul(sq, sq)
    if result is None:
        result = [0] * m
        result[0] = 1
    return result


def _cyclo_from_cyclic(m, vec):
    return CycloElement(m, [Fraction(c) for c in _reduce_int_mod_cyclo(m, list(vec))])


def power_sum_S(phi, n):
    """S = sum over nonzero j of G(phi, j)^n, with its two certificates.

    Returns (S, exact, bounded): exact is the equality S = (p-1) G(phi, 1)^n
    checked in canonical form, bounded is the p-adic statement that S has
    pi-valuation at least p - 1.  The n argument must restate the character
    order; the j-th powers are accumulated in Z[x]/(x^m - 1) where each
    G(phi, j) is a 0/1 monomial vector, with only two dense canonical
    reductions per call.
    """
    p = phi.p
    n = int(n)
    if n != phi.n:
        raise ValueError("n must equal the character order %d, got %d" % (phi.n, n))
    if n == 1:
        raise ValueError("power sum concerns nontrivial characters")
    m = p * (p - 1)
    dlog = discrete_log_table(p)
    step = (p - 1) // n
    svec = [0] * m
    base_pow = None
    for j in range(1, p):
        vec = [0] * m
        for k in range(1, p):
            vec[(p * ((dlog[k] * step) % (p - 1)) + (p - 1) * ((j * k) % p)) % m] += 1
        powed = _cyclic_pow(vec, n)
        if j == 1:
            base_pow = powed
        svec = [a + b for a, b in zip(svec, powed)]
    S = _cyclo_from_cyclic(m, svec)
    rhs = _cyclo_from_cyclic(m, [(p - 1) * c for c in base_pow])
    exact = S == rhs
    v = pi_valuation(embed_cyclo(S, p, _min_valuation_precision(p)))
    bounded = v is AT_CAP or v >= p - 1
    return S, exact, bounded


def backend_coherence(phi, j, precision):
    """embed_cyclo of the exact sum equals the directly computed padic sum."""
    exact = gauss_sum(phi, j)
    direct = gauss_sum(phi, j, backend="padic", precision=precision)
    return embed_cyclo(exact, phi.p, precision) == direct

"""Truncated exact arithmetic in Z_p[zeta_p] for an odd prime p.

The ring of integers of the totally ramified degree p-1 extension
Q_p(zeta_p) is a free Z_p-module on 1, zeta, ..., zeta^{p-2}.  An element
here is that coefficient vector over Z/p^M.  Since the uniformizer
pi = zeta - 1 satisfies (pi^{p-1}) = (p), working coefficient-wise mod p^M
is exact arithmetic mod pi^{(p-1)M}; valuations strictly below that cap are
exact, anything at or above it is reported as AT_CAP.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .numutil import is_odd_prime, least_primitive_root


class PrecisionError(ValueError):
    """Raised when a valuation question cannot be settled at the working
    precision; carries a suggested precision to retry with."""

    def __init__(self, message, suggested_precision=None):
        super().__init__(message)
        self.suggested_precision = suggested_precision


class _AtCap:
    __slots__ = ()

    def __repr__(self):
        return "at-cap"


AT_CAP = _AtCap()


class PadicCycloElement:
    """Element of Z_p[zeta_p] mod p^M on the basis 1, zeta, ..., zeta^{p-2}."""

    __slots__ = ("p", "precision", "modulus", "coeffs")

    def __init__(self, p, precision, coeffs):
        p = int(p)
        precision = int(precision)
        if not is_odd_prime(p):
            raise ValueError("p must be an odd prime, got %r" % (p,))
        if precision < 1:
            raise ValueError("precision must be >= 1, got %r" % (precision,))
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError("expected %d coefficients, got %d" % (p - 1, len(coeffs)))
        self.p = p
        self.precision = precision
        self.modulus = p**precision
        self.coeffs = tuple(c % self.modulus for c in coeffs)

    @classmethod
    def zero(cls, p, precision):
        return cls(p, precision, (0,) * (p - 1))

    @classmethod
    def from_int(cls, value, p, precision):
        coeffs = [0] * (p - 1)
        coeffs[0] = int(value)
        return cls(p, precision, coeffs)

    @classmethod
    def one(cls, p, precision):
        return cls.from_int(1, p, precision)

    @classmethod
    def zeta_power(cls, p, precision, e):
        """zeta^e; the overflow exponent p-1 folds through Phi_p."""
        e = int(e) % p
        if e == p - 1:
            return cls(p, precision, (-1,) * (p - 1))
        coeffs = [0] * (p - 1)
        coeffs[e] = 1
        return cls(p, precision, coeffs)

    def _check(self, other):
        if self.p != other.p or self.precision != other.precision:
            raise ValueError("mixed p or precision in Z_p[zeta_p] arithmetic")

    def __add__(self, other):
        if isinstance(other, int):
            other = PadicCycloElement.from_int(other, self.p, self.precision)
        if not isinstance(other, PadicCycloElement):
            return NotImplemented
        self._check(other)
        return PadicCycloElement(
            self.p, self.precision, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return PadicCycloElement(self.p, self.precision, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, PadicCycloElement) else -int(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return PadicCycloElement(
                self.p, self.precision, [c * other for c in self.coeffs]
            )
        if not isinstance(other, PadicCycloElement):
            return NotImplemented
        self._check(other)
        n = self.p - 1
        mod = self.modulus
        conv = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] = (conv[i + j] + a * b) % mod
        # zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for e in range(2 * n - 2, n - 1, -1):
            c = conv[e]
            if c:
                conv[e] = 0
                base = e - n
                for i in range(n):
                    conv[base + i] -= c
        return PadicCycloElement(self.p, self.precision, conv[:n])

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            raise ValueError("negative powers are not defined in Z_p[zeta_p]")
        result = PadicCycloElement.one(self.p, self.precision)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def truncate(self, precision):
        """The same element at a lower precision."""
        if precision > self.precision:
            raise ValueError("cannot invent precision %d > %d" % (precision, self.precision))
        return PadicCycloElement(self.p, precision, self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def pi_digits(self):
        """Coefficients b_k of x = sum b_k pi^k (k < p-1) mod p^M, from the
        binomial change of basis zeta^i = (1 + pi)^i."""
        mod = self.modulus
        return tuple(
            sum(comb(i, k) * self.coeffs[i] for i in range(k, self.p - 1)) % mod
            for k in range(self.p - 1)
        )

    def __eq__(self, other):
        if isinstance(other, int):
            other = PadicCycloElement.from_int(other, self.p, self.precision)
        if not isinstance(other, PadicCycloElement):
            return NotImplemented
        return (
            self.p == other.p
            and self.precision == other.precision
            and self.coeffs == other.coeffs
        )

    def __str__(self):
        digits = self.pi_digits()
        parts = []
        for k, b in enumerate(digits):
            if b:
                parts.append("%d*pi^%d" % (b, k) if k else "%d" % b)
        body = " + ".join(parts) if parts else "O(pi^%d)" % ((self.p - 1) * self.precision)
        return "%s (p=%d, M=%d)" % (body, self.p, self.precision)

    __repr__ = __str__

    def to_json(self):
        return {"p": self.p, "M": self.precision, "coeffs": list(self.coeffs)}


def teichmuller(k, p, precision):
    """The unique (p-1)-th root of unity in Z_p congruent to k mod p,
    as an integer mod p^M; found by iterating x -> x^p to its fixpoint."""
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime, got %r" % (p,))
    if k % p == 0:
        raise ValueError("teichmuller lift needs k nonzero mod p, got %r" % (k,))
    mod = p ** int(precision)
    x = k % mod
    for _ in range(int(precision) + 1):
        nxt = pow(x, p, mod)
        if nxt == x:
            break
        x = nxt
    assert pow(x, p, mod) == x
    return x


def pi_valuation(x):
    """pi-adic valuation of x, exact whenever it is below the cap (p-1)*M.

    Writing x = sum b_k pi^k with b_k in Z_p, the candidate valuations
    (p-1)*v_p(b_k) + k are pairwise distinct mod p-1, so the minimum over
    the digits visible mod p^M is the true valuation.  AT_CAP means every
    digit vanished, i.e. v(x) >= (p-1)*M.
    """
    p = x.p
    best = None
    for k, b in enumerate(x.pi_digits()):
        if b:
            vp = 0
            while b % p == 0:
                b //= p
                vp += 1
            v = (p - 1) * vp + k
            if best is None or v < best:
                best = v
    return AT_CAP if best is None else best


@lru_cache(maxsize=256)
def _teichmuller_powers(p, precision):
    """Powers of the Teichmuller lift of the least primitive root."""
    base = teichmuller(least_primitive_root(p), p, precision)
    mod = p**precision
    out = [1]
    for _ in range(p - 2):
        out.append(out[-1] * base % mod)
    return tuple(out)


def embed_cyclo(x, p, precision):
    """Embed a CycloElement of conductor dividing p(p-1) into Z_p[zeta_p].

    Pinned convention: zeta_p goes to zeta, zeta_{p-1} goes to the
    Teichmuller lift of the least primitive root mod p.  On the compatible
    root system this forces zeta_{p(p-1)} -> teichmuller(rho) * zeta^{-1}.
    Denominators must be prime to p.
    """
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime, got %r" % (p,))
    target = p * (p - 1)
    if target % x.conductor:
        raise ValueError(
            "conductor %d does not divide p(p-1) = %d" % (x.conductor, target)
        )
    y = x.raise_conductor(target)
    mod = p ** int(precision)
    omega = _teichmuller_powers(p, precision)
    acc = [0] * (p - 1)
    for e, c in enumerate(y.coeffs):
        if not c:
            continue
        if c.denominator % p == 0:
            raise ValueError("denominator %d is divisible by p = %d" % (c.denominator, p))
        scalar = c.numerator * pow(c.denominator, -1, mod) % mod
        scalar = scalar * omega[e % (p - 1)] % mod
        slot = (-e) % p
        if slot == p - 1:
            for i in range(p - 1):
                acc[i] -= scalar
        else:
            acc[slot] += scalar
    return PadicCycloElement(p, precision, acc)


def zeta_substitute(x, u):
    """The ring map zeta -> zeta^u on Z_p[zeta_p], u nonzero mod p."""
    p = x.p
    u = int(u) % p
    if u == 0:
        raise ValueError("zeta substitution needs u nonzero mod p")
    acc = [0] * (p - 1)
    for i, c in enumerate(x.coeffs):
        if c:
            slot = i * u % p
            if slot == p - 1:
                for t in range(p - 1):
                    acc[t] -= c
            else:
                acc[slot] += c
    return PadicCycloElement(p, x.precision, acc)

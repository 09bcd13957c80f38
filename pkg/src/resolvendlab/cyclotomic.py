"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element of conductor m is a dense vector of phi(m) Fraction coefficients
on the power basis 1, z, ..., z^{phi(m)-1}, always reduced modulo the m-th
cyclotomic polynomial, so equality of values is equality of tuples.  Roots
for different conductors are compatible through zeta_{mn}^n = zeta_m; mixed
binary operations raise both operands to the lcm conductor first.

Coefficient work is done on integer vectors over a common denominator.
Dense products go through a packed big-integer multiply so that conductors
in the low thousands stay cheap; sums of roots of unity go through a cached
monomial-reduction table.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .numutil import divisor_list, euler_phi

_SCHOOLBOOK_CUTOFF = 1024


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("exact coefficient expected (int or Fraction), got %r" % type(c).__name__)


def _polymul_int_school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _polymul_int(a, b):
    """Product of two integer coefficient vectors (low degree first).

    Large inputs are packed into single big integers (one fixed-width signed
    digit per coefficient) and multiplied once; CPython's big-int multiply
    then does the convolution in C.  Digit width is chosen so no column sum
    can overflow its slot, which keeps the round trip exact.
    """
    if not a or not b:
        return []
    if len(a) * len(b) <= _SCHOOLBOOK_CUTOFF:
        return _polymul_int_school(a, b)
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    if ma == 0 or mb == 0:
        return [0] * (len(a) + len(b) - 1)
    bound = ma * mb * min(len(a), len(b))
    nbytes = bound.bit_length() // 8 + 1  # 2^(8*nbytes - 1) > bound
    width = 8 * nbytes
    half = 1 << (width - 1)
    offs = half.to_bytes(nbytes, "little")

    def pack(vec):
        buf = b"".join((c + half).to_bytes(nbytes, "little") for c in vec)
        return int.from_bytes(buf, "little") - int.from_bytes(offs * len(vec), "little")

    n = len(a) + len(b) - 1
    x = pack(a) * pack(b) + int.from_bytes(offs * n, "little")
    raw = x.to_bytes(n * nbytes, "little")
    return [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") - half
        for i in range(n)
    ]


def _polydiv_exact(num, den):
    """Exact division of integer polynomials, den monic; raises if inexact."""
    num = list(num)
    dd = len(den) - 1
    den_nz = [(i, c) for i, c in enumerate(den[:-1]) if c]
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            out[k - dd] = c
            num[k] = 0
            for i, di in den_nz:
                num[k - dd + i] -= c * di
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first.

    Computed by dividing x^m - 1 by Phi_d for every proper divisor d, which
    feeds the same cache recursively.  The fill is idempotent, so a race of
    first calls is harmless.
    """
    if m < 1:
        raise ValueError("conductor must be positive, got %r" % (m,))
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisor_list(m)[:-1]:
        poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=16)
def _phi_tail(m):
    """Pairs (i, t_i) with x^phi = sum t_i x^i mod Phi_m (Phi_m is monic)."""
    mono = cyclotomic_polynomial(m)
    return tuple((i, -c) for i, c in enumerate(mono[:-1]) if c)


@lru_cache(maxsize=16)
def _reduction_rows(m):
    """Row k - phi(m) holds the canonical coefficients of x^k mod Phi_m,
    for k in [phi(m), m)."""
    phi = euler_phi(m)
    tail = [0] * phi
    for i, t in _phi_tail(m):
        tail[i] = t
    rows = [tuple(tail)]
    row = tail
    for _ in range(phi + 1, m):
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            row = [r + top * t for r, t in zip(row, tail)]
        rows.append(tuple(row))
    return tuple(rows)


def _reduce_int_mod_cyclo(m, vec):
    """Reduce an integer coefficient vector mod Phi_m; returns length phi(m)."""
    phi = euler_phi(m)
    vec = list(vec)
    # x^m = 1 holds mod Phi_m, so fold high exponents first
    for k in range(len(vec) - 1, m - 1, -1):
        c = vec[k]
        if c:
            vec[k - m] += c
    del vec[m:]
    if len(vec) > phi:
        tail_nz = _phi_tail(m)
        for k in range(len(vec) - 1, phi - 1, -1):
            c = vec[k]
            if c:
                vec[k] = 0
                base = k - phi
                for i, t in tail_nz:
                    vec[base + i] += c * t
        del vec[phi:]
    while len(vec) < phi:
        vec.append(0)
    return vec


class CycloElement:
    """Element of Q(zeta_m) in canonical reduced form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs):
        conductor = int(conductor)
        phi = euler_phi(conductor)
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(
                "conductor %d needs %d coefficients, got %d" % (conductor, phi, len(coeffs))
            )
        self.conductor = conductor
        self.coeffs = coeffs

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, conductor=1):
        return cls(conductor, (Fraction(0),) * euler_phi(conductor))

    @classmethod
    def one(cls, conductor=1):
        return cls.from_rational(1, conductor)

    @classmethod
    def from_rational(cls, value, conductor=1):
        coeffs = [Fraction(0)] * euler_phi(conductor)
        coeffs[0] = _as_fraction(value)
        return cls(conductor, coeffs)

    @classmethod
    def from_terms(cls, conductor, terms):
        """Canonical form of sum c * zeta_m^e over an iterable of (c, e)."""
        conductor = int(conductor)
        phi = euler_phi(conductor)
        rows = _reduction_rows(conductor) if conductor > 1 else None
        num = [0] * phi
        den = 1
        for c, e in terms:
            if isinstance(c, Fraction):
                cn, cd = c.numerator, c.denominator
            else:
                cn, cd = int(c), 1
            if not cn:
                continue
            if den % cd:
                f = cd // gcd(den, cd)
                num = [v * f for v in num]
                den *= f
            cn *= den // cd
            e %= conductor
            if e < phi:
                num[e] += cn
            elif cn == 1:
                num = [v + r for v, r in zip(num, rows[e - phi])]
            elif cn == -1:
                num = [v - r for v, r in zip(num, rows[e - phi])]
            else:
                num = [v + cn * r for v, r in zip(num, rows[e - phi])]
        return cls(conductor, [Fraction(v, den) for v in num])

    @classmethod
    def from_json(cls, doc):
        conductor, pairs = doc
        return cls(int(conductor), [Fraction(int(n), int(d)) for n, d in pairs])

    # -- structure ------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def as_rational(self):
        """The element as a Fraction, or None if it is irrational."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def raise_conductor(self, conductor):
        """Rewrite in Q(zeta_conductor); conductor must be a multiple of ours."""
        conductor = int(conductor)
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(
                "cannot raise conductor %d to non-multiple %d" % (self.conductor, conductor)
            )
        step = conductor // self.conductor
        return CycloElement.from_terms(
            conductor, ((c, i * step) for i, c in enumerate(self.coeffs) if c)
        )

    def mul_root(self, e):
        """Product with zeta_m^e (e taken mod the conductor)."""
        return CycloElement.from_terms(
            self.conductor, ((c, i + e) for i, c in enumerate(self.coeffs) if c)
        )

    def _int_form(self):
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        return [c.numerator * (den // c.denominator) for c in self.coeffs], den

    # -- arithmetic -----------------------------------------------------

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElement.from_rational(other)
        elif not isinstance(other, CycloElement):
            return None
        m = lcm(self.conductor, other.conductor)
        return self.raise_conductor(m), other.raise_conductor(m)

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloElement(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloElement(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return CycloElement(self.conductor, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return CycloElement(self.conductor, [c * q for c in self.coeffs])
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        na, da = a._int_form()
        nb, db = b._int_form()
        prod = _polymul_int(na, nb)
        red = _reduce_int_mod_cyclo(a.conductor, prod)
        den = da * db
        return CycloElement(a.conductor, [Fraction(v, den) for v in red])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if not q:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        if isinstance(other, CycloElement):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElement.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse via the extended euclidean algorithm
        against Phi_m over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.conductor)
        m = self.conductor
        modulus = [Fraction(c) for c in cyclotomic_polynomial(m)]
        r0, r1 = modulus, _strip(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while _degree(r1) > 0:
            q, r = _polydivmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub_frac(s0, _polymul_frac(q, s1))
        c = r1[0]
        inv = [v / c for v in s1]
        inv = _reduce_frac_mod(m, inv)
        return CycloElement(m, inv)

    # -- comparison / rendering -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            r = self.as_rational()
            return r is not None and r == other
        if not isinstance(other, CycloElement):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else "%s*" % abs(c)
                sign = "-" if c < 0 else ""
                term = "%s%s%s" % (sign, mag, "z" if i == 1 else "z^%d" % i)
            if parts and not term.startswith("-"):
                term = "+" + term
            parts.append(term)
        body = "".join(parts) if parts else "0"
        return "%s (conductor %d)" % (body, self.conductor)

    __repr__ = __str__

    def to_json(self):
        return [self.conductor, [[c.numerator, c.denominator] for c in self.coeffs]]


def _strip(poly):
    while poly and not poly[-1]:
        poly.pop()
    return poly


def _degree(poly):
    return len(poly) - 1


def _polysub_frac(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _strip([x - y for x, y in zip(a, b)])


def _polymul_frac(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip(out)


def _polydivmod_frac(num, den):
    num = list(num)
    dd = _degree(den)
    lead = den[-1]
    if dd < 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - dd, 1)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            f = c / lead
            q[k - dd] = f
            for i, di in enumerate(den):
                num[k - dd + i] -= f * di
    return _strip(q), _strip(num[:dd])


def _reduce_frac_mod(m, poly):
    phi = euler_phi(m)
    den = 1
    for c in poly:
        den = lcm(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in poly]
    red = _reduce_int_mod_cyclo(m, ints)
    return [Fraction(v, den) for v in red]


def root_of_unity(conductor, k=1):
    """zeta_conductor^k in canonical form."""
    return CycloElement.from_terms(conductor, ((1, k),))


def galois_map(u, x):
    """The field automorphism determined by zeta_m -> zeta_m^u, gcd(u, m) = 1."""
    m = x.conductor
    u = int(u)
    if gcd(u, m) != 1:
        raise ValueError("galois_map needs gcd(u, m) = 1, got u=%d mod m=%d" % (u, m))
    return CycloElement.from_terms(m, ((c, i * u) for i, c in enumerate(x.coeffs) if c))


def conjugate(x):
    """Complex conjugation, the u = -1 automorphism."""
    return galois_map(x.conductor - 1 if x.conductor > 1 else 1, x)

"""The centered character pairing, its group-ring valued map, and the
transpose evaluation against equivariant maps.

For chi a character and s a group element of odd order o, write
chi(s) = zeta_o^t with t the centered representative in [(1-o)/2, (o-1)/2];
the pairing is t/o.  Summing over a virtual character gives a rational
group-ring element; that element is integral exactly when the virtual
character lies in the kernel of the determinant map, and the transpose
evaluation prod_s g(s)^{coefficient} exists under the same integrality, or
when fractional exponents are absorbed by p-th power structure in g.
"""

from __future__ import annotations

from fractions import Fraction

from .abelian import (
    Character,
    FiniteAbelianGroup,
    GroupElement,
    char_exponent,
    dual_enumerate,
    element_order,
)


class VirtualCharacter:
    """Formal integer combination of characters of one group."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group, coeffs):
        clean = {}
        for chi, n in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
            if chi.group != group:
                raise ValueError("character %r does not live on %r" % (chi, group))
            n = int(n)
            if n:
                clean[chi] = clean.get(chi, 0) + n
        self.group = group
        self.coeffs = {chi: n for chi, n in clean.items() if n}

    @classmethod
    def zero(cls, group):
        return cls(group, {})

    @classmethod
    def single(cls, chi, multiplicity=1):
        return cls(chi.group, {chi: multiplicity})

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].coords)

    def __add__(self, other):
        if not isinstance(other, VirtualCharacter) or other.group != self.group:
            return NotImplemented
        merged = dict(self.coeffs)
        for chi, n in other.coeffs.items():
            merged[chi] = merged.get(chi, 0) + n
        return VirtualCharacter(self.group, merged)

    def __neg__(self):
        return VirtualCharacter(self.group, {chi: -n for chi, n in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def conjugate(self):
        """chi -> chi^{-1} on every summand."""
        return VirtualCharacter(
            self.group, [(chi.inverse(), n) for chi, n in self.coeffs.items()]
        )

    def __eq__(self, other):
        return (
            isinstance(other, VirtualCharacter)
            and self.group == other.group
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "VirtualCharacter(0)"
        return "VirtualCharacter(%s)" % (
            " ".join("%+d*chi%r" % (n, chi.coords) for chi, n in self.items())
        )


class RationalGroupElement:
    """Element of Q[G] as a total map G -> Q, stored sparsely."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group, coeffs):
        clean = {}
        for s, q in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
            if s.group != group:
                raise ValueError("element %r does not live on %r" % (s, group))
            q = q if isinstance(q, Fraction) else Fraction(q)
            if q:
                clean[s] = clean.get(s, Fraction(0)) + q
        self.group = group
        self.coeffs = {s: q for s, q in clean.items() if q}

    def __getitem__(self, s):
        return self.coeffs.get(s, Fraction(0))

    def __add__(self, other):
        if not isinstance(other, RationalGroupElement) or other.group != self.group:
            return NotImplemented
        merged = dict(self.coeffs)
        for s, q in other.coeffs.items():
            merged[s] = merged.get(s, Fraction(0)) + q
        return RationalGroupElement(self.group, merged)

    def __neg__(self):
        return RationalGroupElement(self.group, {s: -q for s, q in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not self.coeffs

    def is_integral(self):
        """True when every coefficient is an integer."""
        return all(q.denominator == 1 for q in self.coeffs.values())

    def permute_powers(self, e):
        """The coordinate permutation s -> s^e, gcd(e, exponent) = 1."""
        return RationalGroupElement(
            self.group, [(s**e, q) for s, q in self.coeffs.items()]
        )

    def __eq__(self, other):
        return (
            isinstance(other, RationalGroupElement)
            and self.group == other.group
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "RationalGroupElement(0)"
        parts = [
            "%s*s%r" % (q, s.coords)
            for s, q in sorted(self.coeffs.items(), key=lambda kv: kv[0].coords)
        ]
        return "RationalGroupElement(%s)" % " + ".join(parts)

    def to_json(self):
        return [
            [list(s.coords), q.numerator, q.denominator]
            for s, q in sorted(self.coeffs.items(), key=lambda kv: kv[0].coords)
        ]


def pairing(chi, s):
    """The centered pairing t/|s| where chi(s) = zeta_{|s|}^t and t is the
    symmetric representative; |s| must be odd."""
    group = chi.group
    o = element_order(group, s)
    if o % 2 == 0:
        raise ValueError("pairing is undefined for even element order %d" % o)
    m = group.exponent
    k = char_exponent(group, chi, s)
    step = m // o
    assert k % step == 0  # chi(s) is an o-th root of unity
    t = (k // step) % o
    if t > (o - 1) // 2:
        t -= o
    return Fraction(t, o)


def stickelberger_map(psi):
    """sum over s of (sum_chi n_chi * pairing(chi, s)) * s, for odd |G|."""
    group = psi.group
    if group.order % 2 == 0:
        raise ValueError("the map needs a group of odd order, got order %d" % group.order)
    out = {}
    for s in group.elements():
        total = Fraction(0)
        for chi, n in psi.coeffs.items():
            total += n * pairing(chi, s)
        if total:
            out[s] = total
    return RationalGroupElement(group, out)


def det_map(psi):
    """The determinant character prod chi^{n_chi}."""
    group = psi.group
    coords = [0] * len(group.invariant_factors)
    for chi, n in psi.coeffs.items():
        for i, c in enumerate(chi.coords):
            coords[i] += n * c
    return Character(group, coords)


def in_S(psi):
    """Membership in the determinant kernel."""
    return det_map(psi).is_identity()


def kappa_twist(u, x):
    """The cyclotomic-unit twist: chi -> chi^u on characters (and virtual
    characters), s -> s^{u^{-1} mod m} on group elements."""
    u = int(u)
    if isinstance(x, Character):
        _check_unit(u, x.group)
        return x**u
    if isinstance(x, VirtualCharacter):
        _check_unit(u, x.group)
        return VirtualCharacter(x.group, [(chi**u, n) for chi, n in x.coeffs.items()])
    if isinstance(x, GroupElement):
        m = _check_unit(u, x.group)
        return x ** pow(u, -1, m)
    raise TypeError("kappa_twist acts on characters, virtual characters, or group elements")


def _check_unit(u, group):
    from math import gcd

    m = group.exponent
    if gcd(u, m) != 1:
        raise ValueError("twist unit %d is not invertible mod %d" % (u, m))
    return m


class EquivariantMap:
    """A total map on a group with a declared twist index n: the unit u is
    supposed to act on arguments by s -> s^{u^n} and on values through the
    matching coefficient action."""

    __slots__ = ("group", "twist", "values")

    def __init__(self, group, twist, values):
        elements = group.elements()
        if set(values) != set(elements):
            raise ValueError("values must cover every group element exactly once")
        self.group = group
        self.twist = int(twist)
        self.values = dict(values)

    def __call__(self, s):
        return self.values[s]

    def check_equivariance(self, units, action):
        """True when value(s^{u^twist}) = action(u, value(s)) for all given units."""
        m = self.group.exponent
        for u in units:
            e = pow(int(u), self.twist, m)
            for s, v in self.values.items():
                if self.values[s**e] != action(u, v):
                    return False
        return True

    def pointwise_mul(self, other):
        if other.group != self.group or other.twist != self.twist:
            raise ValueError("pointwise product needs matching group and twist")
        return EquivariantMap(
            self.group,
            self.twist,
            {s: self.values[s] * other.values[s] for s in self.group.elements()},
        )

    def __eq__(self, other):
        return (
            isinstance(other, EquivariantMap)
            and self.group == other.group
            and self.twist == other.twist
            and self.values == other.values
        )


def transpose_apply(g, psi):
    """prod_s g(s)^{q_s} with q_s the rational group-ring coefficients of psi.

    Integer exponents multiply directly.  A fractional q_s is only allowed
    when the value supports exact fractional powers (formal monomials whose
    exponents are divisible enough, the p-th power situation); otherwise the
    virtual character is outside the determinant kernel and this raises.
    """
    theta = stickelberger_map(psi)
    sample = next(iter(g.values.values()))
    result = sample**0
    for s in g.group.elements():
        q = theta[s]
        if not q:
            continue
        v = g(s)
        if q.denominator == 1:
            result = result * v ** int(q)
        else:
            frac_pow = getattr(v, "frac_pow", None)
            if frac_pow is None:
                raise ValueError(
                    "exponent %s at %r is not integral: virtual character is "
                    "outside the determinant kernel and the value carries no "
                    "p-th power structure" % (q, s)
                )
            result = result * frac_pow(q)
    return result

"""Finite abelian groups in invariant-factor form, their elements,
characters, and the exponent pairing every other module evaluates
characters through.

A group is a divisibility chain d_1 | d_2 | ... | d_r (each >= 2); the
empty chain is the trivial group.  Elements and characters are coordinate
tuples, coordinate i living mod d_i.  The pairing convention is pinned
once and for all:

    chi(s) = zeta_m ^ char_exponent(G, chi, s),  m = exponent(G),
    char_exponent = sum_i (m // d_i) * chi_i * s_i  (mod m)

which is bilinear in both arguments.
"""

from __future__ import annotations

import itertools
from math import gcd, lcm, prod


class FiniteAbelianGroup:
    """Invariant factors d_1 | d_2 | ... | d_r; () is the trivial group."""

    __slots__ = ("invariant_factors", "_elements", "_dual")

    def __init__(self, invariant_factors=()):
        factors = tuple(int(d) for d in invariant_factors)
        for d in factors:
            if d < 2:
                raise ValueError("invariant factors must be >= 2, got %r" % (d,))
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(
                    "invariant factors must form a divisibility chain, got %r" % (factors,)
                )
        self.invariant_factors = factors
        self._elements = None
        self._dual = None

    @classmethod
    def from_literal(cls, text):
        """Parse a literal like "3,9" into a group; validates divisibility."""
        text = text.strip()
        if not text or text in ("1", "()"):
            return cls(())
        try:
            factors = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(
                "bad group literal %r; expected comma-separated integers" % (text,)
            ) from None
        return cls(factors)

    @property
    def order(self):
        return prod(self.invariant_factors)

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def element(self, coords):
        return GroupElement(self, coords)

    def character(self, coords):
        return Character(self, coords)

    def identity(self):
        return GroupElement(self, (0,) * len(self.invariant_factors))

    def trivial_character(self):
        return Character(self, (0,) * len(self.invariant_factors))

    def elements(self):
        if self._elements is None:
            self._elements = tuple(
                GroupElement(self, coords)
                for coords in itertools.product(*[range(d) for d in self.invariant_factors])
            )
        return self._elements

    def __eq__(self, other):
        return (
            isinstance(other, FiniteAbelianGroup)
            and self.invariant_factors == other.invariant_factors
        )

    def __hash__(self):
        return hash(self.invariant_factors)

    def __repr__(self):
        if not self.invariant_factors:
            return "FiniteAbelianGroup()"
        return "FiniteAbelianGroup(%s)" % (",".join(map(str, self.invariant_factors)))


class _CoordTuple:
    """Shared coordinate arithmetic for group elements and characters."""

    __slots__ = ("group", "coords")

    def __init__(self, group, coords):
        coords = tuple(coords)
        if len(coords) != len(group.invariant_factors):
            raise ValueError(
                "expected %d coordinates for %r, got %r"
                % (len(group.invariant_factors), group, coords)
            )
        self.group = group
        self.coords = tuple(int(c) % d for c, d in zip(coords, group.invariant_factors))

    def _like(self, coords):
        return type(self)(self.group, coords)

    def __mul__(self, other):
        if type(other) is not type(self) or other.group != self.group:
            return NotImplemented
        return self._like(a + b for a, b in zip(self.coords, other.coords))

    def __pow__(self, k):
        k = int(k)
        return self._like(c * k for c in self.coords)

    def inverse(self):
        return self._like(-c for c in self.coords)

    def is_identity(self):
        return not any(self.coords)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.group == self.group
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((type(self).__name__, self.group.invariant_factors, self.coords))


class GroupElement(_CoordTuple):
    __slots__ = ()

    def __repr__(self):
        return "s%r" % (self.coords,)


class Character(_CoordTuple):
    __slots__ = ()

    def __repr__(self):
        return "chi%r" % (self.coords,)


def element_order(group, s):
    """Order of s (or of a character); lcm over i of d_i / gcd(d_i, c_i)."""
    if not group.invariant_factors:
        return 1
    return lcm(*(d // gcd(d, c) for d, c in zip(group.invariant_factors, s.coords)))


def char_exponent(group, chi, s):
    """The exponent k with chi(s) = zeta_m^k, m = exponent(G)."""
    m = group.exponent
    return (
        sum(
            (m // d) * a * b
            for d, a, b in zip(group.invariant_factors, chi.coords, s.coords)
        )
        % m
    )


def dual_enumerate(group):
    """All characters of the group, in lexicographic coordinate order."""
    if group._dual is None:
        group._dual = tuple(
            Character(group, coords)
            for coords in itertools.product(*[range(d) for d in group.invariant_factors])
        )
    return group._dual

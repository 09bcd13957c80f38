"""Formal Laurent monomials in unit symbols y_i and the identities that
collapse their averaged orbit sums onto transpose evaluations.

The y_i are placeholders for units indexed by F_p^*; nothing here assigns
them field values, so every check at this layer is an index computation
with exact cyclotomic coefficients.  The tau action multiplies a monomial's
coefficient by a root of unity determined by its index weight, the omega
action permutes indices and twists coefficients through the matching Galois
map, alpha averages one orbit of monomials, and each character sum over the
tau orbit must collapse to a single coefficient-1 monomial that equals the
transpose evaluation of the map g built from p-th powers of the symbols.
"""

from __future__ import annotations

from fractions import Fraction

from .abelian import FiniteAbelianGroup, dual_enumerate
from .cyclotomic import CycloElement, galois_map, root_of_unity
from .gauss import ResidueSubgroup
from .numutil import is_odd_prime
from .stickelberger import EquivariantMap, VirtualCharacter, transpose_apply


class VerificationError(ArithmeticError):
    """A computed object violated an identity that is supposed to hold."""


class WildMonomial:
    """Laurent monomial in symbols y_i, possibly from several tagged
    families; multiplication adds exponents.  Immutable and hashable."""

    __slots__ = ("exponents",)

    def __init__(self, exponents=()):
        items = exponents.items() if isinstance(exponents, dict) else exponents
        acc = {}
        for key, e in items:
            tag, i = key
            e = int(e)
            if e:
                k = (int(tag), int(i))
                acc[k] = acc.get(k, 0) + e
        self.exponents = tuple(sorted((k, e) for k, e in acc.items() if e))

    @classmethod
    def one(cls):
        return cls(())

    @classmethod
    def symbol(cls, i, tag=0, power=1):
        return cls((((tag, i), power),))

    def is_one(self):
        return not self.exponents

    def weight(self, p):
        """Index-weighted total degree mod p, the tau eigenvalue exponent."""
        return sum(i * e for (_, i), e in self.exponents) % p

    def __mul__(self, other):
        if not isinstance(other, WildMonomial):
            return NotImplemented
        return WildMonomial(tuple(self.exponents) + tuple(other.exponents))

    def __pow__(self, e):
        e = int(e)
        return WildMonomial(tuple((k, v * e) for k, v in self.exponents))

    def inverse(self):
        return self**-1

    def frac_pow(self, q):
        """Exact fractional power; every scaled exponent must be integral."""
        q = q if isinstance(q, Fraction) else Fraction(q)
        scaled = []
        for k, v in self.exponents:
            e = v * q
            if e.denominator != 1:
                raise ValueError(
                    "fractional exponent %s on %s" % (e, _symbol_str(k, 1))
                )
            scaled.append((k, int(e)))
        return WildMonomial(tuple(scaled))

    def __eq__(self, other):
        return isinstance(other, WildMonomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __str__(self):
        if not self.exponents:
            return "1"
        return "*".join(_symbol_str(k, e) for k, e in self.exponents)

    def __repr__(self):
        return "WildMonomial(%s)" % self


def _symbol_str(key, e):
    tag, i = key
    base = "y%d" % i if tag == 0 else "y%d_%d" % (tag, i)
    return base if e == 1 else "%s^%d" % (base, e)


class WildElement:
    """Finite sum of monomials with exact Q(zeta_p) coefficients."""

    __slots__ = ("p", "terms")

    def __init__(self, p, terms=()):
        p = int(p)
        if not is_odd_prime(p):
            raise ValueError("need an odd prime, got %d" % p)
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for mono, coeff in items:
            if not isinstance(mono, WildMonomial):
                raise TypeError("keys must be monomials, got %r" % (mono,))
            c = _coerce_coeff(p, coeff)
            acc[mono] = acc[mono] + c if mono in acc else c
        self.p = p
        self.terms = {m: c for m, c in acc.items() if not c.is_zero()}

    @classmethod
    def zero(cls, p):
        return cls(p, ())

    @classmethod
    def one(cls, p):
        return cls(p, ((WildMonomial.one(), 1),))

    @classmethod
    def monomial(cls, p, mono, coeff=1):
        return cls(p, ((mono, coeff),))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, WildElement) or other.p != self.p:
            return NotImplemented
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            merged[mono] = merged[mono] + c if mono in merged else c
        return WildElement(self.p, merged)

    def __neg__(self):
        return WildElement(self.p, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, WildElement) or other.p != self.p:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, WildElement):
            if other.p != self.p:
                raise ValueError("mixed primes %d and %d" % (self.p, other.p))
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = m1 * m2
                    c = c1 * c2
                    out[m] = out[m] + c if m in out else c
            return WildElement(self.p, out)
        if isinstance(other, WildMonomial):
            return WildElement(self.p, {m * other: c for m, c in self.terms.items()})
        return WildElement(self.p, {m: c * other for m, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (WildElement, WildMonomial)):
            return NotImplemented
        return self * other

    def __eq__(self, other):
        return (
            isinstance(other, WildElement)
            and self.p == other.p
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items(), key=lambda kv: kv[0].exponents):
            parts.append("(%s)*%s" % (c, mono))
        return " + ".join(parts)

    def __repr__(self):
        return "WildElement(p=%d, %s)" % (self.p, self)


def _coerce_coeff(p, c):
    if isinstance(c, CycloElement):
        if p % c.conductor:
            raise ValueError(
                "coefficient conductor %d does not divide %d" % (c.conductor, p)
            )
        return c
    return CycloElement.from_rational(c)


def c_of(i, p):
    """The representative of i mod p in the symmetric range [(1-p)/2, (p-1)/2]."""
    if not is_odd_prime(p):
        raise ValueError("need an odd prime, got %d" % p)
    c = int(i) % p
    if c > (p - 1) // 2:
        c -= p
    return c


class WildContext:
    """Derived data for one layer: the residue subgroup R_n, the twisted
    index d = (p-1)/n mod p with its inverse, and the abstract cyclic group
    of order p whose characters index the resolvents."""

    __slots__ = ("p", "n", "tag", "subgroup", "d", "d_inv", "group", "_inv")

    def __init__(self, p, n, tag=0):
        p = int(p)
        n = int(n)
        if not is_odd_prime(p):
            raise ValueError("need an odd prime, got %d" % p)
        if n < 1 or (p - 1) % n:
            raise ValueError("n = %d does not divide %d" % (n, p - 1))
        self.p = p
        self.n = n
        self.tag = int(tag)
        self.subgroup = ResidueSubgroup(p, n)
        self.d = ((p - 1) // n) % p
        assert self.d  # (p-1)/n lies in 1..p-1
        self.d_inv = pow(self.d, -1, p)
        self.group = FiniteAbelianGroup([p])
        self._inv = {i: pow(i, -1, p) for i in range(1, p)}

    @property
    def generator(self):
        return self.group.element([1])

    def character(self, k):
        """The character sending the generator to zeta_p^k."""
        return self.group.character([int(k) % self.p])

    def summand_monomial(self, k):
        """prod over i in R_n of y_i^{c(i^{-1} k)}."""
        k = int(k) % self.p
        return WildMonomial(
            {(self.tag, i): c_of(self._inv[i] * k, self.p) for i in self.subgroup}
        )

    def collapse_monomial(self, k):
        """The monomial the k-th character sum must collapse to."""
        return self.summand_monomial(self.d_inv * (int(k) % self.p))

    def __repr__(self):
        if self.tag:
            return "WildContext(p=%d, n=%d, tag=%d)" % (self.p, self.n, self.tag)
        return "WildContext(p=%d, n=%d)" % (self.p, self.n)


def tau_action(j, x):
    """j-th power of the generator action: each monomial's coefficient is
    multiplied by zeta_p^{j * weight}."""
    p = x.p
    j = int(j) % p
    if j == 0:
        return x
    out = {}
    for mono, coeff in x.terms.items():
        e = (j * mono.weight(p)) % p
        if e:
            if coeff.conductor != p:
                coeff = coeff.raise_conductor(p)
            coeff = coeff.mul_root(e)
        out[mono] = coeff
    return WildElement(p, out)


def omega_monomial(j, mono, p):
    """Index permutation i -> ij mod p on a bare monomial."""
    j = int(j) % p
    if j == 0:
        raise ValueError("omega needs an index prime to p")
    return WildMonomial(tuple(((tag, i * j % p), e) for (tag, i), e in mono.exponents))


def omega_action(j, x):
    """Permute symbol indices by i -> ij and twist coefficients by the
    Galois map zeta -> zeta^j."""
    p = x.p
    j = int(j) % p
    if j == 0:
        raise ValueError("omega needs an index prime to p")
    out = {}
    for mono, coeff in x.terms.items():
        out[omega_monomial(j, mono, p)] = galois_map(j, coeff)
    return WildElement(p, out)


def build_alpha(ctx):
    """(1/p) * sum over k in F_p of the k-th summand monomial."""
    p = ctx.p
    return WildElement(
        p, ((ctx.summand_monomial(k), Fraction(1, p)) for k in range(p))
    )


def conjugate_check(ctx, j, k):
    """tau^j scales the k-th summand by exactly zeta^{jkd}."""
    p = ctx.p
    elem = WildElement.monomial(p, ctx.summand_monomial(k))
    lhs = tau_action(j, elem)
    rhs = elem * root_of_unity(p, (int(j) * int(k) * ctx.d) % p)
    return lhs == rhs


def resolvent_at(ctx, k):
    """The character sum over the tau orbit of alpha against zeta^{-jk}.

    Computed as the defining double sum, grouped per monomial so each
    coefficient is a single canonical reduction of its p root-of-unity
    contributions.  The collapse to one coefficient-1 monomial, and its
    identity as the predicted monomial, are enforced here: anything else
    is a broken invariant, not a value.
    """
    p = ctx.p
    k = int(k) % p
    alpha = build_alpha(ctx)
    out = {}
    for mono, base in alpha.terms.items():
        scale = base.as_rational()
        w = mono.weight(p)
        coeff = CycloElement.from_terms(
            p, ((scale, j * (w - k)) for j in range(p))
        )
        if not coeff.is_zero():
            out[mono] = coeff
    result = WildElement(p, out)
    expected = ctx.collapse_monomial(k)
    if set(result.terms) != {expected} or result.terms[expected] != 1:
        raise VerificationError(
            "character sum at k = %d did not collapse to the unit monomial %s"
            % (k, expected)
        )
    return result


def build_g(ctx):
    """The map valued y_i^p on the element t^{d^{-1} i^{-1}} for each i in
    R_n, and 1 elsewhere, with declared twist -1."""
    p, d = ctx.p, ctx.d
    values = {}
    for a in range(p):
        s = ctx.group.element([a])
        mono = WildMonomial.one()
        if a:
            i = pow(a * d % p, -1, p)
            if i in ctx.subgroup:
                mono = WildMonomial.symbol(i, tag=ctx.tag, power=p)
        values[s] = mono
    return EquivariantMap(ctx.group, -1, values)


def transpose_eval_g(ctx, k):
    """Transpose evaluation of g at the character with exponent k; the p-th
    power structure of the values absorbs the denominator p exactly."""
    g = build_g(ctx)
    return transpose_apply(g, VirtualCharacter.single(ctx.character(k)))


def product_contexts(ctxs):
    """Composite decomposition check over G = (Z/p)^r.

    Contexts are retagged 1..r so their symbol families stay disjoint.  For
    every character (k_1, ..., k_r) three objects must agree: the product of
    the per-context collapsed resolvents, the product of the per-context
    transpose evaluations, and the direct transpose evaluation on G of the
    composite map supported on the coordinate axes.  Returns one
    (coords, monomial, pass) row per character.
    """
    if not ctxs:
        raise ValueError("need at least one context")
    p = ctxs[0].p
    if any(c.p != p for c in ctxs):
        raise ValueError("mixed primes in product: %r" % [c.p for c in ctxs])
    tagged = [WildContext(p, c.n, tag=idx + 1) for idx, c in enumerate(ctxs)]
    r = len(tagged)
    big = FiniteAbelianGroup([p] * r)
    gs = [build_g(c) for c in tagged]
    values = {}
    for s in big.elements():
        live = [idx for idx, a in enumerate(s.coords) if a]
        if len(live) == 1:
            idx = live[0]
            values[s] = gs[idx](tagged[idx].group.element([s.coords[idx]]))
        else:
            values[s] = WildMonomial.one()
    composite = EquivariantMap(big, -1, values)
    res_parts = []
    trans_parts = []
    for ctx in tagged:
        by_k = {}
        for k in range(p):
            ((mono, _),) = resolvent_at(ctx, k).terms.items()
            by_k[k] = mono
        res_parts.append(by_k)
        trans_parts.append({k: transpose_eval_g(ctx, k) for k in range(p)})
    rows = []
    for chi in dual_enumerate(big):
        ks = chi.coords
        res = WildMonomial.one()
        trans = WildMonomial.one()
        for idx in range(r):
            res = res * res_parts[idx][ks[idx]]
            trans = trans * trans_parts[idx][ks[idx]]
        direct = transpose_apply(composite, VirtualCharacter.single(chi))
        rows.append((tuple(ks), res, res == trans == direct))
    return rows

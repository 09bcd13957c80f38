import random
from fractions import Fraction

import pytest

from resolvendlab.cyclotomic import CycloElement, root_of_unity
from resolvendlab.padic import (
    AT_CAP,
    PadicCycloElement,
    PrecisionError,
    embed_cyclo,
    pi_valuation,
    teichmuller,
)


def test_teichmuller_examples():
    for p, M in [(3, 2), (5, 3), (7, 4)]:
        assert teichmuller(1, p, M) == 1
    # 2^5 = 32 = 7 mod 25, the fixpoint of 5th powering
    assert teichmuller(2, 5, 2) == 7
    assert pow(7, 4, 25) == 1


def test_teichmuller_rejects_zero():
    with pytest.raises(ValueError):
        teichmuller(0, 5, 2)
    with pytest.raises(ValueError):
        teichmuller(10, 5, 2)


def test_teichmuller_multiplicative():
    p, M = 7, 4
    mod = p ** M
    for j in range(1, p):
        for k in range(1, p):
            lhs = teichmuller(j, p, M) * teichmuller(k, p, M) % mod
            assert lhs == teichmuller(j * k % p, p, M)


def test_teichmuller_residue():
    p, M = 11, 3
    mod = p ** M
    for k in range(1, p):
        w = teichmuller(k, p, M)
        assert w % p == k
        assert pow(w, p - 1, mod) == 1


def test_pi_valuation_examples():
    p, M = 7, 3
    assert pi_valuation(PadicCycloElement.from_int(p, p, M)) == p - 1
    pi = PadicCycloElement.zeta_power(p, M, 1) - PadicCycloElement.one(p, M)
    assert pi_valuation(pi) == 1
    assert pi_valuation(PadicCycloElement.zero(p, M)) is AT_CAP
    assert pi_valuation(PadicCycloElement.one(p, M)) == 0


def test_pi_valuation_additive():
    p, M = 5, 4
    pi = PadicCycloElement.zeta_power(p, M, 1) - PadicCycloElement.one(p, M)
    x = PadicCycloElement.from_int(2, p, M)
    running = x
    for v in range(1, 8):
        running = running * pi
        assert pi_valuation(running) == v
    # products add valuations below cap
    a = pi * pi * PadicCycloElement.from_int(3, p, M)
    b = pi * PadicCycloElement.from_int(p, p, M)
    assert pi_valuation(a) == 2
    assert pi_valuation(b) == 1 + (p - 1)
    assert pi_valuation(a * b) == 3 + (p - 1)


def test_valuation_stable_under_precision_raise():
    p = 5
    for M in (2, 3, 4, 6):
        x = PadicCycloElement.from_int(2 * p, p, M)
        assert pi_valuation(x) == p - 1


def test_ring_axioms_random():
    rng = random.Random("padic")
    for p in (3, 5, 7, 11, 13):
        for M in (2, 4, 6):
            xs = [_random_padic(rng, p, M) for _ in range(3)]
            x, y, z = xs
            assert (x + y) * z == x * z + y * z
            assert (x * y) * z == x * (y * z)
            assert x - x == PadicCycloElement.zero(p, M)
            assert x * PadicCycloElement.one(p, M) == x


def test_mixed_precision_rejected():
    a = PadicCycloElement.one(5, 2)
    b = PadicCycloElement.one(5, 3)
    with pytest.raises(ValueError):
        a + b


def test_truncate():
    p = 5
    x = PadicCycloElement.from_int(123, p, 4)
    assert x.truncate(2) == PadicCycloElement.from_int(123, p, 2)


def test_embed_cyclo():
    p, M = 7, 4
    z = embed_cyclo(root_of_unity(p, 1), p, M)
    assert z == PadicCycloElement.zeta_power(p, M, 1)
    assert pi_valuation(z - PadicCycloElement.one(p, M)) == 1
    # zeta_{p-1} goes to the Teichmuller lift of the least primitive root
    w = embed_cyclo(root_of_unity(p - 1, 1), p, M)
    assert w == PadicCycloElement.from_int(teichmuller(3, p, M), p, M)
    acc = PadicCycloElement.one(p, M)
    for _ in range(p - 1):
        acc = acc * w
    assert acc == PadicCycloElement.one(p, M)


def test_embed_cyclo_homomorphism():
    rng = random.Random("embed")
    p, M = 7, 4
    for _ in range(50):
        x = _random_p_cyclo(rng, p)
        y = _random_p_cyclo(rng, p)
        ex = embed_cyclo(x, p, M)
        ey = embed_cyclo(y, p, M)
        assert embed_cyclo(x + y, p, M) == ex + ey
        assert embed_cyclo(x * y, p, M) == ex * ey


def test_embed_cyclo_rejects_p_denominator():
    with pytest.raises(ValueError):
        embed_cyclo(CycloElement.from_rational(Fraction(1, 7), 7), 7, 3)


def test_embed_cyclo_mixed_conductor():
    # conductor p(p-1) is allowed, with zeta_{p-1} = zeta_m^p
    p, M = 5, 3
    m = p * (p - 1)
    lift = PadicCycloElement.from_int(teichmuller(2, p, M), p, M)
    assert embed_cyclo(root_of_unity(m, p), p, M) == lift
    assert embed_cyclo(root_of_unity(m, p - 1), p, M) == PadicCycloElement.zeta_power(
        p, M, 1
    )


def test_precision_error_carries_hint():
    err = PrecisionError("too small", suggested_precision=4)
    assert isinstance(err, ValueError)
    assert err.suggested_precision == 4


def _random_padic(rng, p, M):
    mod = p ** M
    return PadicCycloElement(p, M, [rng.randrange(mod) for _ in range(p - 1)])


def _random_p_cyclo(rng, p):
    # denominators prime to p so the embedding is defined
    from resolvendlab.numutil import euler_phi

    dens = [d for d in range(1, 8) if d % p]
    return CycloElement(
        p,
        [Fraction(rng.randrange(-9, 10), rng.choice(dens)) for _ in range(p - 1)],
    )

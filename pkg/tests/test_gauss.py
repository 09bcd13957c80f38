import pytest

from resolvendlab.cyclotomic import CycloElement, root_of_unity
from resolvendlab.gauss import (
    MultiplicativeCharacter,
    ResidueSubgroup,
    backend_coherence,
    character_sum_identity,
    gauss_sum,
    gauss_valuation,
    power_sum_S,
    verify_translation,
)
from resolvendlab.padic import PrecisionError


def test_character_convention():
    phi = MultiplicativeCharacter(7, 3)
    # phi(rho) = zeta_6^2 for the least primitive root rho = 3
    assert phi.value(3) == root_of_unity(6, 2)
    assert phi.value(0).is_zero()
    assert phi.order == 3
    for j in range(1, 7):
        for k in range(1, 7):
            assert phi.value(j * k % 7) == phi.value(j) * phi.value(k)
    order = 1
    acc = phi.value(3)
    while acc != CycloElement.one(acc.conductor):
        acc = acc * phi.value(3)
        order += 1
    assert order == 3


def test_character_validation():
    with pytest.raises(ValueError):
        MultiplicativeCharacter(9, 2)
    with pytest.raises(ValueError):
        MultiplicativeCharacter(7, 4)


def test_residue_subgroup():
    r3 = ResidueSubgroup(7, 3)
    assert sorted(r3) == [1, 6]
    assert len(r3) == 2
    assert 6 in r3 and 2 not in r3
    r2 = ResidueSubgroup(7, 2)
    assert sorted(r2) == [1, 2, 4]
    assert len(ResidueSubgroup(13, 4)) == 3


def test_trivial_character_sums():
    for p in (3, 5, 7, 11, 13):
        one = MultiplicativeCharacter(p, 1)
        assert gauss_sum(one, 0).as_rational() == p - 1
        for j in range(1, p):
            assert gauss_sum(one, j).as_rational() == -1


def test_nontrivial_vanishes_at_zero():
    for p, n in [(5, 2), (7, 3), (13, 4)]:
        phi = MultiplicativeCharacter(p, n)
        assert gauss_sum(phi, 0).is_zero()


def test_quadratic_gauss_sum_p5():
    phi = MultiplicativeCharacter(5, 2)
    g1 = gauss_sum(phi, 1)
    expected = CycloElement.from_terms(5, [(1, 1), (-1, 2), (-1, 3), (1, 4)])
    assert g1 == expected.raise_conductor(g1.conductor)
    assert (g1 * g1).as_rational() == 5


def test_translation():
    phi = MultiplicativeCharacter(7, 3)
    for j in range(1, 7):
        assert verify_translation(phi, j)
    phi13 = MultiplicativeCharacter(13, 4)
    for j in range(1, 13):
        assert verify_translation(phi13, j)


def test_gauss_valuation_examples():
    assert gauss_valuation(MultiplicativeCharacter(5, 2), 1, 4) == 2
    assert gauss_valuation(MultiplicativeCharacter(7, 2), 3, 4) == 3
    assert gauss_valuation(MultiplicativeCharacter(7, 3), 1, 4) >= 2
    # quadratic sums square to +-p, forcing v = (p-1)/2 exactly
    for p in (5, 13, 17):
        phi = MultiplicativeCharacter(p, 2)
        for j in (1, 2):
            assert gauss_valuation(phi, j, 4) == (p - 1) // 2


def test_gauss_valuation_rejects_small_precision():
    phi = MultiplicativeCharacter(7, 2)
    with pytest.raises(PrecisionError) as info:
        gauss_valuation(phi, 1, 1)
    assert info.value.suggested_precision >= 3


def test_character_sum_identity():
    for p, n in [(5, 2), (7, 3), (7, 6), (11, 5), (13, 4)]:
        phi = MultiplicativeCharacter(p, n)
        for j in range(1, p):
            assert character_sum_identity(phi, j)


def test_character_sum_rhs_shape():
    # p = 7, n = 6 has R_6 = {1}: the right side is 1 + 6 zeta^j
    phi = MultiplicativeCharacter(7, 6)
    rhs = CycloElement.one(7) + CycloElement.from_rational(6, 7) * root_of_unity(7, 1)
    total = CycloElement.zero(42)
    for l in range(1, 6):
        total = total + _char_power_sum(phi, l, 1)
    assert total == rhs.raise_conductor(42)


def _char_power_sum(phi, l, j):
    # G(phi^l, j) computed directly from the definition
    total = CycloElement.zero(phi.p * (phi.p - 1))
    for k in range(1, phi.p):
        val = phi.value(k) ** l
        total = total + val.raise_conductor(42) * root_of_unity(
            phi.p, j * k % phi.p
        ).raise_conductor(42)
    return total


def test_power_sum_examples():
    phi = MultiplicativeCharacter(5, 2)
    S, exact, bounded = power_sum_S(phi, 2)
    assert S.as_rational() == 20
    assert exact and bounded
    for p, n in [(7, 2), (7, 3), (11, 5)]:
        _, exact, bounded = power_sum_S(MultiplicativeCharacter(p, n), n)
        assert exact and bounded


def test_power_sum_validates_n():
    phi = MultiplicativeCharacter(7, 3)
    with pytest.raises(ValueError):
        power_sum_S(phi, 2)


def test_backend_coherence():
    for p, n in [(3, 2), (5, 2), (5, 4), (7, 3)]:
        phi = MultiplicativeCharacter(p, n)
        for j in range(1, p):
            assert backend_coherence(phi, j, 4)


def test_padic_backend_values():
    from resolvendlab.padic import pi_valuation

    phi = MultiplicativeCharacter(5, 2)
    g = gauss_sum(phi, 1, backend="padic", precision=4)
    assert pi_valuation(g) == 2
    with pytest.raises(ValueError):
        gauss_sum(phi, 1, backend="nope")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a

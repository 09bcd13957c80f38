import itertools
import random
from fractions import Fraction

import pytest

from resolvendlab.abelian import FiniteAbelianGroup, dual_enumerate
from resolvendlab.cyclotomic import CycloElement, galois_map, root_of_unity
from resolvendlab.stickelberger import (
    EquivariantMap,
    RationalGroupElement,
    VirtualCharacter,
    det_map,
    in_S,
    kappa_twist,
    pairing,
    stickelberger_map,
    transpose_apply,
)


def test_pairing_identity():
    g = FiniteAbelianGroup((9,))
    for chi in dual_enumerate(g):
        assert pairing(chi, g.identity()) == 0


def test_pairing_z3():
    g = FiniteAbelianGroup((3,))
    s = g.element((1,))
    assert pairing(g.character((1,)), s) == Fraction(1, 3)
    assert pairing(g.character((2,)), s) == Fraction(-1, 3)


def test_pairing_antisymmetry():
    g = FiniteAbelianGroup((3, 9))
    for chi in dual_enumerate(g):
        for s in g.elements():
            assert pairing(chi.inverse(), s) == -pairing(chi, s)


def test_pairing_even_order_rejected():
    g = FiniteAbelianGroup((6,))
    with pytest.raises(ValueError):
        pairing(g.character((1,)), g.element((1,)))
    # the identity coordinate of an even group is still order 1: allowed
    assert pairing(g.character((1,)), g.element((0,))) == 0


def test_stickelberger_map_z3():
    g = FiniteAbelianGroup((3,))
    chi = g.character((1,))
    theta = stickelberger_map(VirtualCharacter.single(chi))
    assert theta[g.element((1,))] == Fraction(1, 3)
    assert theta[g.element((2,))] == Fraction(-1, 3)
    assert theta[g.identity()] == 0
    # antisymmetry collapses chi + chi^2
    psi = VirtualCharacter.single(chi) + VirtualCharacter.single(chi ** 2)
    assert stickelberger_map(psi).is_zero()
    assert stickelberger_map(VirtualCharacter.zero(g)).is_zero()


def test_stickelberger_map_rejects_even_order():
    g = FiniteAbelianGroup((2, 4))
    with pytest.raises(ValueError):
        stickelberger_map(VirtualCharacter.single(g.character((1, 1))))


def test_det_and_in_s():
    g = FiniteAbelianGroup((3,))
    chi = g.character((1,))
    assert in_S(VirtualCharacter.single(chi) - VirtualCharacter.single(chi))
    psi = VirtualCharacter(g, [(chi, 2), (chi ** 2, 1)])
    assert det_map(psi) == chi  # chi^4 = chi
    assert not in_S(psi)
    balanced = VirtualCharacter(g, [(chi, 1), (chi ** 2, 1)])
    assert in_S(balanced)
    assert stickelberger_map(balanced).is_integral()


def test_integrality_iff_kernel_small_boxes():
    for factors in [(3,), (9,)]:
        g = FiniteAbelianGroup(factors)
        chars = dual_enumerate(g)
        radius = 2 if g.order == 3 else 1
        for vec in itertools.product(range(-radius, radius + 1), repeat=len(chars)):
            psi = VirtualCharacter(g, list(zip(chars, vec)))
            assert in_S(psi) == stickelberger_map(psi).is_integral()


def test_integrality_iff_kernel_random():
    rng = random.Random("ker")
    g = FiniteAbelianGroup((15,))
    chars = dual_enumerate(g)
    for _ in range(200):
        vec = [rng.randrange(-6, 7) for _ in chars]
        psi = VirtualCharacter(g, list(zip(chars, vec)))
        assert in_S(psi) == stickelberger_map(psi).is_integral()


def test_antisymmetry_conjugate():
    rng = random.Random("conj")
    g = FiniteAbelianGroup((3, 3))
    chars = dual_enumerate(g)
    for _ in range(30):
        psi = VirtualCharacter(
            g, [(chi, rng.randrange(-4, 5)) for chi in chars]
        )
        total = stickelberger_map(psi) + stickelberger_map(psi.conjugate())
        assert total.is_zero()


def test_kappa_twist():
    g = FiniteAbelianGroup((3,))
    chi = g.character((1,))
    s = g.element((1,))
    assert kappa_twist(1, chi) == chi
    assert kappa_twist(1, s) == s
    assert kappa_twist(2, chi) == chi ** 2
    # on G(-1) the action is s -> s^{u^{-1}}; 2^{-1} = 2 mod 3
    assert kappa_twist(2, s) == s ** 2
    with pytest.raises(ValueError):
        kappa_twist(3, chi)


def test_kappa_twist_composition():
    g = FiniteAbelianGroup((9,))
    units = [u for u in range(1, 9) if u % 3]
    for u in units:
        for v in units:
            for chi in dual_enumerate(g):
                assert kappa_twist(u, kappa_twist(v, chi)) == kappa_twist(u * v, chi)
            for s in g.elements():
                assert kappa_twist(u, kappa_twist(v, s)) == kappa_twist(u * v, s)


def test_twist_equivariance():
    # the map side of the twist: Theta*(chi^u) is the s -> s^{u^{-1}} shuffle
    for factors in [(3,), (9,), (3, 3)]:
        g = FiniteAbelianGroup(factors)
        m = g.exponent
        units = [u for u in range(1, m) if _gcd(u, m) == 1]
        for chi in dual_enumerate(g):
            base = stickelberger_map(VirtualCharacter.single(chi))
            for u in units:
                twisted = stickelberger_map(
                    VirtualCharacter.single(kappa_twist(u, chi))
                )
                assert twisted == base.permute_powers(pow(u, -1, m))


def test_rational_group_element_json():
    g = FiniteAbelianGroup((3,))
    theta = stickelberger_map(VirtualCharacter.single(g.character((1,))))
    doc = theta.to_json()
    assert [[1], 1, 3] in doc


def test_equivariant_map_basics():
    g = FiniteAbelianGroup((3,))
    one = CycloElement.one(3)
    z = root_of_unity(3, 1)
    gmap = EquivariantMap(g, -1, {s: galois_map_value(z, s) for s in g.elements()})
    assert gmap(g.identity()) == one
    units = [1, 2]
    assert gmap.check_equivariance(units, galois_map)


def galois_map_value(z, s):
    k = s.coords[0] if s.coords else 0
    return z ** (3 - k) if k else CycloElement.one(3)


def test_transpose_apply_trivial():
    g = FiniteAbelianGroup((3,))
    ones = EquivariantMap(
        g, -1, {s: CycloElement.one(3) for s in g.elements()}
    )
    chi = g.character((1,))
    psi = VirtualCharacter(g, [(chi, 1), (chi ** 2, 1)])
    assert transpose_apply(ones, psi) == CycloElement.one(3)


def test_transpose_apply_integral_exponents():
    rng = random.Random("transpose")
    g = FiniteAbelianGroup((3,))
    chi = g.character((1,))
    values = {}
    for s in g.elements():
        values[s] = root_of_unity(3, rng.randrange(3)) * CycloElement.from_rational(
            rng.randrange(1, 5), 3
        )
    gmap = EquivariantMap(g, -1, values)
    psi = VirtualCharacter(g, [(chi, 1), (chi ** 2, 1)])
    theta = stickelberger_map(psi)
    expected = CycloElement.one(3)
    for s in g.elements():
        e = theta[s]
        assert e.denominator == 1
        expected = expected * values[s] ** int(e)
    assert transpose_apply(gmap, psi) == expected


def test_transpose_apply_multiplicative():
    g = FiniteAbelianGroup((3,))
    chi = g.character((1,))
    psi = VirtualCharacter(g, [(chi, 1), (chi ** 2, 1)])
    values = {s: root_of_unity(3, (2 * s.coords[0]) % 3) for s in g.elements()}
    gmap = EquivariantMap(g, -1, values)
    double = transpose_apply(gmap, psi + psi)
    assert double == transpose_apply(gmap, psi) * transpose_apply(gmap, psi)


def test_transpose_apply_rejects_outside_kernel():
    g = FiniteAbelianGroup((3,))
    chi = g.character((1,))
    values = {s: CycloElement.from_rational(2, 3) for s in g.elements()}
    gmap = EquivariantMap(g, -1, values)
    with pytest.raises(ValueError):
        transpose_apply(gmap, VirtualCharacter.single(chi))


def test_equivariant_map_requires_total_values():
    g = FiniteAbelianGroup((3,))
    with pytest.raises(ValueError):
        EquivariantMap(g, -1, {g.identity(): CycloElement.one(3)})


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a

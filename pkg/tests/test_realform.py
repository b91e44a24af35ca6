from fractions import Fraction

import pytest

from satake_kit.realform import (
    check_pairing_identity,
    family_from_json,
    lorentz,
    minuscule_paving,
    minuscule_weight,
    octonionic,
    orbit_dim,
    real_weight,
    restricted_rho,
    rho_pairing,
    to_dual_weight,
    to_dual_weight_record,
    weighted_half_sum,
    weyl_factorization_check,
)
from satake_kit.rootdata import root_system, weight, weyl_orbit

A1 = root_system("A", 1)
A2 = root_system("A", 2)
OCT = octonionic()


def test_family_invariants():
    for n in range(2, 13):
        fam = lorentz(n)
        assert fam.n_x == 2 * n - 2
        assert fam.dual is A1
        inv = fam.inventory_map
        assert (inv["K"].family, inv["K"].rank) == ("B", n - 1)
        assert (inv["M"].family, inv["M"].rank) == ("D", n - 1)
        assert (inv["G_dual"].family, inv["G_dual"].rank) == ("D", n)
        assert (inv["G_X_dual"].family, inv["G_X_dual"].rank) == ("A", 1)
        assert (inv["L_X_wedge"].family, inv["L_X_wedge"].rank) == ("B", n - 2)
    assert OCT.n_x == 8
    assert OCT.dual is A2
    inv = OCT.inventory_map
    assert inv["K"].label == "F4"
    assert inv["M"].label == "D4"
    assert inv["G_dual"].label == "E6"
    assert inv["L_X_wedge"].label == "G2"


def test_multiplicity_is_uniform():
    fam = lorentz(5)
    for alpha in fam.restricted.positive_roots:
        assert fam.multiplicity(alpha) == 8
    for alpha in OCT.restricted.positive_roots:
        assert OCT.multiplicity(alpha) == 8
    with pytest.raises(ValueError):
        fam.multiplicity((2,))


def test_lorentz_requires_n_at_least_two():
    with pytest.raises(ValueError):
        lorentz(1)


def test_family_json_roundtrip():
    assert family_from_json({"family": "lorentz", "n": 5}).n == 5
    assert family_from_json({"family": "octonionic"}).kind == "octonionic"
    assert lorentz(3).to_json() == {"family": "lorentz", "n": 3}
    assert OCT.to_json() == {"family": "octonionic"}
    with pytest.raises(ValueError):
        family_from_json({"family": "quaternionic"})
    with pytest.raises(ValueError):
        family_from_json({"family": "lorentz"})


def test_real_weight_dominance():
    fam = lorentz(4)
    assert real_weight(fam, 0).is_dominant()
    assert real_weight(fam, 3).is_dominant()
    assert not real_weight(fam, -1).is_dominant()
    assert real_weight(OCT, 2, -1).is_dominant()
    assert not real_weight(OCT, 1, 2).is_dominant()


def test_to_dual_weight_lorentz():
    fam = lorentz(6)
    assert to_dual_weight(real_weight(fam, 0)).coords == (0,)
    assert to_dual_weight(real_weight(fam, 3)).coords == (3,)
    record = to_dual_weight_record(real_weight(fam, 3))
    assert record.gl_weight == (3, 0)
    assert record.central_shift == 0
    assert record.image_dominant


def test_to_dual_weight_octonionic():
    # The minuscule real weight maps to a fundamental weight whose module
    # has dimension 3, orbit of size 3 (matching the paving length below).
    rec = to_dual_weight_record(real_weight(OCT, 1, 0))
    assert rec.weight.coords == (1, 0)
    assert rec.gl_weight == (1, 0, 0)
    assert len(weyl_orbit(rec.weight)) == 3
    assert to_dual_weight(real_weight(OCT, 2, 1)).coords == (1, 1)
    rec = to_dual_weight_record(real_weight(OCT, 1, -1))
    assert rec.weight.coords == (2, -1)
    assert rec.central_shift == 1
    assert rec.gl_weight == (2, 0, 1)
    assert not rec.image_dominant


def test_to_dual_weight_requires_dominant():
    with pytest.raises(ValueError):
        to_dual_weight(real_weight(lorentz(3), -2))
    with pytest.raises(ValueError):
        to_dual_weight(real_weight(OCT, 0, 1))


def test_restricted_rho_lorentz():
    for n in (2, 3, 5, 9):
        fam = lorentz(n)
        # Single positive root alpha = 2*omega with multiplicity 2n-2.
        assert restricted_rho(fam).coords == (2 * n - 2,)


def test_restricted_rho_octonionic():
    assert restricted_rho(OCT).coords == (8, 8)


def test_weighted_half_sum_custom_multiplicity():
    # All multiplicities equal to 2 gives exactly one copy of each positive
    # root; in A1 that is the single root alpha.
    coords = weighted_half_sum(A1, lambda alpha: 2)
    assert coords == (Fraction(2),)


def test_pairing_identity_examples():
    fam = lorentz(5)
    lam = real_weight(fam, 1)
    assert check_pairing_identity(fam, lam)
    assert fam.n_x * rho_pairing(fam, lam) == 4
    assert check_pairing_identity(lorentz(7), real_weight(lorentz(7), 0))
    assert check_pairing_identity(OCT, real_weight(OCT, 1, 1))


def test_pairing_identity_box():
    for n in range(2, 13):
        fam = lorentz(n)
        for m in range(0, 41):
            assert check_pairing_identity(fam, real_weight(fam, m))
    for a in range(13):
        for b in range(a + 1):
            assert check_pairing_identity(OCT, real_weight(OCT, a, b))


def test_orbit_dim():
    for n in (2, 4, 7):
        fam = lorentz(n)
        assert orbit_dim(fam, minuscule_weight(fam)) == 2 * n - 2
        assert orbit_dim(fam, real_weight(fam, 0)) == 0
    assert orbit_dim(OCT, real_weight(OCT, 0, 0)) == 0
    # The minuscule octonionic orbit is the octonionic projective plane,
    # of real dimension 16 = 2 n_X; its paving below ends in a 16-cell.
    assert orbit_dim(OCT, minuscule_weight(OCT)) == 16


def test_orbit_dim_additive():
    fam = lorentz(6)
    for m, k in [(0, 3), (2, 5), (7, 7)]:
        a, b = real_weight(fam, m), real_weight(fam, k)
        assert orbit_dim(fam, a + b) == orbit_dim(fam, a) + orbit_dim(fam, b)
    for x, y in [((1, 0), (1, 1)), ((2, 1), (3, 0))]:
        a, b = real_weight(OCT, *x), real_weight(OCT, *y)
        assert orbit_dim(OCT, a + b) == orbit_dim(OCT, a) + orbit_dim(OCT, b)


def test_minuscule_paving():
    assert minuscule_paving(lorentz(4)) == (0, 6)
    assert minuscule_paving(lorentz(2)) == (0, 2)
    assert minuscule_paving(OCT) == (0, 8, 16)
    for fam in (lorentz(3), lorentz(8), OCT):
        cells = minuscule_paving(fam)
        assert all(c % fam.n_x == 0 for c in cells)
        # One cell per Weyl orbit element of the minuscule dual weight.
        orbit = weyl_orbit(to_dual_weight(minuscule_weight(fam)))
        assert len(cells) == len(orbit)
        assert max(cells) == orbit_dim(fam, minuscule_weight(fam))


def test_weyl_factorization():
    for n in range(2, 13):
        assert weyl_factorization_check(lorentz(n))
    assert weyl_factorization_check(OCT)
    # Octonionic orders: 1152 = 192 * 6, via explicit enumeration.
    inv = OCT.inventory_map
    from satake_kit.rootdata import weyl_elements

    assert len(weyl_elements(root_system("F", 4))) == 1152
    assert len(weyl_elements(root_system("D", 4))) == 192
    assert len(weyl_elements(A2)) == 6

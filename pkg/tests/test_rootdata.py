from fractions import Fraction

import pytest

from satake_kit.rootdata import (
    Coweight,
    dominance_leq,
    dominant_representative,
    freudenthal_multiplicity,
    in_root_lattice,
    pair,
    positive_coroots,
    positive_root_count,
    rho,
    rho_check,
    root_coordinates,
    root_system,
    root_system_from_label,
    simple_reflection,
    weight,
    weyl_dimension,
    weyl_elements,
    weyl_group,
    weyl_orbit,
    weyl_order,
)

A1 = root_system("A", 1)
A2 = root_system("A", 2)
B2 = root_system("B", 2)
G2 = root_system("G", 2)
F4 = root_system("F", 4)


@pytest.mark.parametrize(
    "family,rank,count",
    [
        ("A", 1, 1),
        ("A", 2, 3),
        ("B", 2, 4),
        ("B", 3, 9),
        ("B", 4, 16),
        ("D", 2, 2),
        ("D", 3, 6),
        ("D", 4, 12),
        ("G", 2, 6),
        ("F", 4, 24),
        ("E", 6, 36),
    ],
)
def test_positive_root_counts(family, rank, count):
    system = root_system(family, rank)
    assert len(system.positive_roots) == count
    assert positive_root_count(family, rank) == count
    assert all(all(c >= 0 for c in beta) for beta in system.positive_roots)


def test_cartan_matrix_shape():
    for system in (A1, A2, B2, G2, F4):
        c = system.cartan_matrix
        assert all(c[i][i] == 2 for i in range(system.rank))
        assert all(
            c[i][j] <= 0 for i in range(system.rank) for j in range(system.rank) if i != j
        )


def test_unsupported_types_error():
    with pytest.raises(ValueError):
        root_system("E", 7)
    with pytest.raises(ValueError):
        root_system("G", 3)
    with pytest.raises(ValueError):
        root_system_from_label("H3")


def test_rho_is_all_ones():
    assert rho(A1).coords == (1,)
    assert rho(A2).coords == (1, 1)
    assert rho(F4).coords == (1, 1, 1, 1)


def test_rho_reflection_identity():
    # s_i(rho) = rho - alpha_i, and no simple reflection fixes rho.
    for system in (A1, A2, B2, G2, F4):
        r = rho(system)
        for i in range(system.rank):
            image = simple_reflection(r, i)
            alpha_fw = system.simple_root_weight_coords(i)
            assert image.coords == tuple(a - b for a, b in zip(r.coords, alpha_fw))
            assert image != r


def test_pair_a1_half_integer():
    assert pair(weight(A1, 1), rho_check(A1)) == Fraction(1, 2)


def test_pair_a2_against_brute_force_coroots():
    # Oracle: the three positive coroots of A2 written down by hand.
    by_hand = [(1, 0), (0, 1), (1, 1)]
    assert sorted(positive_coroots(A2)) == sorted(by_hand)
    half_sum = Coweight(
        (sum(Fraction(c[0]) for c in by_hand) / 2, sum(Fraction(c[1]) for c in by_hand) / 2),
        A2,
    )
    lam = weight(A2, 1, 1)
    assert pair(lam, half_sum) == 2
    assert pair(lam, rho_check(A2)) == 2


def test_pair_zero_weight():
    for system in (A1, A2, B2, F4):
        zero = weight(system, *([0] * system.rank))
        assert pair(zero, rho_check(system)) == 0


def test_pair_bilinear():
    lam = weight(A2, 2, 1)
    mu = weight(A2, 1, 3)
    rc = rho_check(A2)
    assert pair(lam + mu, rc) == pair(lam, rc) + pair(mu, rc)
    assert pair(3 * lam, rc) == 3 * pair(lam, rc)


def test_pair_incompatible_systems():
    with pytest.raises(ValueError):
        pair(weight(A1, 1), rho_check(A2))


def test_weyl_orbit_a1():
    orbit = weyl_orbit(weight(A1, 2))
    assert {w.coords for w in orbit} == {(2,), (-2,)}


def test_weyl_orbit_a2_fundamental():
    # Oracle: closure of (1,0) under the two reflections, done by hand.
    orbit = {w.coords for w in weyl_orbit(weight(A2, 1, 0))}
    assert orbit == {(1, 0), (-1, 1), (0, -1)}


def test_weyl_orbit_zero_fixed():
    for system in (A1, A2, G2):
        zero = weight(system, *([0] * system.rank))
        assert weyl_orbit(zero) == [zero]


def test_weyl_orbit_has_unique_dominant_element():
    for w in (weight(A2, -1, 2), weight(B2, 3, -1), weight(G2, -2, -1)):
        orbit = weyl_orbit(w)
        dominants = [v for v in orbit if v.is_dominant()]
        assert len(dominants) == 1
        assert dominant_representative(w) == dominants[0]


@pytest.mark.parametrize(
    "system,order",
    [(A1, 2), (A2, 6), (B2, 8), (G2, 12), (root_system("D", 4), 192), (F4, 1152)],
)
def test_weyl_enumeration_order(system, order):
    elements = weyl_elements(system)
    assert len(elements) == order
    assert weyl_order(system.family, system.rank) == order
    assert sum(e.sign for e in elements) == 0
    identity = tuple(
        tuple(int(r == c) for c in range(system.rank)) for r in range(system.rank)
    )
    assert any(e.matrix == identity and e.length == 0 for e in elements)
    assert max(e.length for e in elements) == len(system.positive_roots)


def test_weyl_enumeration_e6():
    elements = weyl_elements(root_system("E", 6))
    assert len(elements) == 51840
    assert max(e.length for e in elements) == 36


def test_weyl_generators_are_involutions():
    for system in (A2, B2, G2, F4):
        group = weyl_group(system)
        for gen in group.generators:
            rank = system.rank
            square = tuple(
                tuple(sum(gen[r][k] * gen[k][c] for k in range(rank)) for c in range(rank))
                for r in range(rank)
            )
            identity = tuple(tuple(int(r == c) for c in range(rank)) for r in range(rank))
            assert square == identity


def test_weyl_elements_too_large():
    with pytest.raises(ValueError):
        weyl_elements(root_system("B", 7))


def test_orbit_stabilizer_counts():
    # |orbit| * |stabilizer| = |W|, and the stabilizer is generated by the
    # simple reflections fixing the weight (checked by direct enumeration).
    for system, w in [(A2, weight(A2, 1, 0)), (B2, weight(B2, 0, 2)), (G2, weight(G2, 3, 0))]:
        elements = weyl_elements(system)
        orbit = weyl_orbit(w)
        stab = [
            e
            for e in elements
            if tuple(
                sum(e.matrix[r][c] * w.coords[c] for c in range(system.rank))
                for r in range(system.rank)
            )
            == w.coords
        ]
        assert len(orbit) * len(stab) == len(elements)
        fixing = [i for i in range(system.rank) if simple_reflection(w, i) == w]
        generated = {
            tuple(tuple(int(r == c) for c in range(system.rank)) for r in range(system.rank))
        }
        frontier = list(generated)
        gens = [weyl_group(system).generators[i] for i in fixing]
        while frontier:
            nxt = []
            for mat in frontier:
                for gen in gens:
                    prod = tuple(
                        tuple(
                            sum(gen[r][k] * mat[k][c] for k in range(system.rank))
                            for c in range(system.rank)
                        )
                        for r in range(system.rank)
                    )
                    if prod not in generated:
                        generated.add(prod)
                        nxt.append(prod)
            frontier = nxt
        assert len(generated) == len(stab)


def test_root_coordinates_roundtrip():
    for system in (A2, B2, G2, F4):
        for beta in system.positive_roots:
            fw = system.root_weight_coords(beta)
            back = root_coordinates(weight(system, *fw))
            assert tuple(back) == tuple(Fraction(b) for b in beta)


def test_dominance_order():
    lam = weight(A2, 1, 1)
    assert dominance_leq(weight(A2, 0, 0), lam)
    assert not dominance_leq(weight(A2, 1, 0), lam)  # not in the root lattice coset
    assert dominance_leq(lam, lam)
    assert not in_root_lattice(weight(A2, 1, 0))
    assert in_root_lattice(weight(A2, 1, 1))


def test_freudenthal_highest_weight():
    assert freudenthal_multiplicity(weight(A1, 5), weight(A1, 5)) == 1
    assert freudenthal_multiplicity(weight(A2, 1, 0), weight(A2, 1, 0)) == 1


def test_freudenthal_adjoint_zero_weight():
    # The zero weight space of the adjoint module is the Cartan subalgebra.
    assert freudenthal_multiplicity(weight(A2, 1, 1), weight(A2, 0, 0)) == 2


def test_freudenthal_rejects_non_dominant():
    with pytest.raises(ValueError):
        freudenthal_multiplicity(weight(A1, -2), weight(A1, 0))


def test_freudenthal_outside_hull_is_zero():
    assert freudenthal_multiplicity(weight(A1, 2), weight(A1, 4)) == 0
    assert freudenthal_multiplicity(weight(A1, 2), weight(A1, 1)) == 0


def test_freudenthal_total_dimension_matches_weyl_formula():
    # Sum of weight multiplicities over full orbits against the closed form.
    cases = [weight(A1, m) for m in range(0, 13, 2)] + [
        weight(A2, a, b) for a in range(4) for b in range(4) if a + b <= 6
    ]
    for lam in cases:
        system = lam.system
        total = 0
        seen = set()
        bound = 2 * pair(lam, rho_check(system))
        coords_range = range(0, int(bound) + 1)
        for c in _root_lattice_box(system, coords_range):
            mu = lam - weight(system, *system.root_weight_coords(c))
            mu_dom = dominant_representative(mu)
            if mu_dom.coords in seen or not dominance_leq(mu_dom, lam):
                continue
            seen.add(mu_dom.coords)
            total += len(weyl_orbit(mu_dom)) * freudenthal_multiplicity(lam, mu_dom)
        assert total == weyl_dimension(lam)


def _root_lattice_box(system, rng):
    if system.rank == 1:
        return [(c,) for c in rng]
    return [(c1, c2) for c1 in rng for c2 in rng]


def test_weyl_dimension_known_values():
    assert weyl_dimension(weight(A1, 1)) == 2
    assert weyl_dimension(weight(A2, 1, 0)) == 3
    assert weyl_dimension(weight(A2, 1, 1)) == 8
    assert weyl_dimension(weight(G2, 1, 0)) == 7

import pytest

from rootposets.affine import AffineWeylElement
from rootposets.ideals import (
    ad_edge_type_counts,
    ad_typed_edges,
    alcove_wall_types,
    check_minimal_element,
    descent_types,
    empty_ideal,
    enumerate_upper_ideals,
    expected_edge_count,
    expected_ideal_count,
    facet_types,
    full_ideal,
    generator_edge_types,
    ideal_count_closed_form,
    ideal_from_mask,
    ideal_from_roots,
    ideal_poset,
    ideal_powers,
    minimal_element,
    narayana_polynomial,
    principal_ideal,
    sample_ideals,
    z_point,
)
from rootposets.rootsystem import RootSystemError, root_system

IDEAL_COUNTS = {"A2": 5, "A3": 14, "B2": 6, "B3": 20, "C3": 20, "D4": 50, "F4": 105, "G2": 8}


@pytest.mark.parametrize("name,count", sorted(IDEAL_COUNTS.items()))
def test_ideal_counts(name, count):
    rs = root_system(name)
    assert len(enumerate_upper_ideals(rs)) == count
    assert expected_ideal_count(rs) == count
    assert ideal_count_closed_form(rs) == count


def test_large_counts_match_product_formula():
    for name in ("E6", "E7", "E8", "B8", "D8"):
        rs = root_system(name)
        assert expected_ideal_count(rs) == ideal_count_closed_form(rs)


def test_enumeration_is_sorted_and_distinct(small_system):
    ideals = enumerate_upper_ideals(small_system)
    masks = {ideal.mask for ideal in ideals}
    assert len(masks) == len(ideals)
    sizes = [len(ideal) for ideal in ideals]
    assert sizes == sorted(sizes)


def test_generators_form_minimal_antichain(small_system):
    rs = small_system
    for ideal in enumerate_upper_ideals(rs):
        roots = set(ideal.roots())
        assert set(ideal.generators) <= roots
        # generators are exactly the minimal elements of the ideal
        minimal = {
            g for g in roots if not any(r != g and rs.root_leq(r, g) for r in roots)
        }
        assert set(ideal.generators) == minimal
        # upward closure
        for g in roots:
            for p in rs.positive_roots:
                if rs.root_leq(g, p):
                    assert p in ideal


def test_ideal_from_mask_round_trip(small_system):
    for ideal in enumerate_upper_ideals(small_system):
        rebuilt = ideal_from_mask(small_system, ideal.mask)
        assert rebuilt == ideal
        assert rebuilt.generators == ideal.generators


def test_ideal_from_roots_validates():
    rs = root_system("A2")
    with pytest.raises(RootSystemError):
        ideal_from_roots(rs, [(1, 0)])  # missing (1, 1) above it
    with pytest.raises(RootSystemError):
        ideal_from_roots(rs, [(5, 5)])
    ideal = ideal_from_roots(rs, [(1, 0), (1, 1)])
    assert ideal.generators == ((1, 0),)


def test_full_and_empty_and_principal():
    rs = root_system("B3")
    full = full_ideal(rs)
    assert len(full) == len(rs.positive_roots)
    assert set(full.generators) == set(rs.simple_roots)
    assert len(empty_ideal(rs)) == 0
    top = principal_ideal(rs, rs.theta)
    assert top.roots() == [rs.theta]
    below = principal_ideal(rs, rs.simple_roots[0])
    assert all(rs.root_leq(rs.simple_roots[0], g) for g in below.roots())


def test_without_generator():
    rs = root_system("A2")
    full = full_ideal(rs)
    smaller = full.without_generator((1, 0))
    assert (1, 0) not in smaller
    assert len(smaller) == 2
    with pytest.raises(RootSystemError):
        full.without_generator((1, 1))  # not a generator of the full ideal


def test_ideal_powers_of_full_ideal():
    rs = root_system("C3")
    powers = ideal_powers(full_ideal(rs))
    # I^k is the set of roots of height >= k, so there are height(theta) = h-1 powers
    assert len(powers) == rs.h - 1
    for k, mask in enumerate(powers, start=1):
        want = sum(
            1 << i for i, g in enumerate(rs.positive_roots) if rs.height(g) >= k
        )
        assert mask == want


def test_is_abelian():
    rs = root_system("G2")
    assert empty_ideal(rs).is_abelian()
    assert principal_ideal(rs, rs.theta).is_abelian()
    assert not full_ideal(rs).is_abelian()
    # the three highest roots commute in G2; adding the next one does not
    by_height = sorted(rs.positive_roots, key=rs.height, reverse=True)
    assert ideal_from_roots(rs, by_height[:3]).is_abelian()
    assert not ideal_from_roots(rs, by_height[:4]).is_abelian()


def test_minimal_element_checks_pass(small_system):
    for ideal in enumerate_upper_ideals(small_system):
        me = minimal_element(ideal)
        levels = check_minimal_element(me)
        assert len(levels) == small_system.rank + 1
        assert all(k >= -1 for k in levels)
        if len(ideal):
            assert me.word[-1] == 0
        else:
            assert me.element.is_identity


def test_minimal_element_levels_of_extremes():
    rs = root_system("B3")
    assert check_minimal_element(minimal_element(empty_ideal(rs))) == (1, 0, 0, 0)
    top_levels = check_minimal_element(minimal_element(full_ideal(rs)))
    assert top_levels[1:] == (-1,) * rs.rank


def test_z_point_defining_property():
    rs = root_system("C3")
    assert z_point(minimal_element(empty_ideal(rs))) == (0, 0, 0)
    for ideal in enumerate_upper_ideals(rs):
        me = minimal_element(ideal)
        levels = check_minimal_element(me)
        z = z_point(me)
        for i, alpha in enumerate(rs.simple_roots):
            assert sum(z[j] * rs.pairing(alpha, j) for j in range(rs.rank)) == levels[1 + i]
        assert sum(z[j] * rs.pairing(rs.theta, j) for j in range(rs.rank)) == 1 - levels[0]


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C3", "G2"])
def test_four_type_routes_agree(name):
    rs = root_system(name)
    for ideal in enumerate_upper_ideals(rs):
        me = minimal_element(ideal)
        types = set(generator_edge_types(me).values())
        assert facet_types(me) == types
        assert set(alcove_wall_types(me)) == types
        assert descent_types(me) == types


def test_edge_counts(small_system):
    rs = small_system
    edges = ad_typed_edges(rs)
    assert len(edges) == expected_edge_count(rs)
    counts = ad_edge_type_counts(rs)
    assert sum(counts) == len(edges)
    for e in edges:
        assert len(e.lower) == len(e.upper) - 1
        assert e.lower.mask & ~e.upper.mask == 0
        assert 0 <= e.type_index <= rs.rank


def test_golden_sl4_statistics():
    rs = root_system("A3")
    ideals = enumerate_upper_ideals(rs)
    assert len(ideals) == 14
    assert expected_edge_count(rs) == 21
    assert sorted(ad_edge_type_counts(rs)) == [4, 5, 6, 6]
    me = minimal_element(full_ideal(rs))
    assert len(me.word) == 10
    assert me.element == AffineWeylElement.from_word(rs, (0, 1, 3, 0, 3, 1, 2, 1, 3, 0))


def test_narayana_matches_poset_covering(small_system):
    rs = small_system
    poly = narayana_polynomial(rs)
    assert poly == ideal_poset(rs).covering_polynomial()
    assert poly.degree == rs.rank
    assert poly.is_palindromic()
    assert poly(1) == expected_ideal_count(rs)
    assert poly.derivative_at_one() == expected_edge_count(rs)


def test_ideal_poset_has_unique_minimum(small_system):
    poset = ideal_poset(small_system)
    assert poset.minimal_elements() == [empty_ideal(small_system)]


def test_sample_ideals_deterministic():
    rs = root_system("D4")
    a = sample_ideals(rs, 20)
    b = sample_ideals(rs, 20)
    assert a == b
    masks = {ideal.mask for ideal in a}
    assert 0 in masks
    assert full_ideal(rs).mask in masks
    assert all(principal_ideal(rs, g).mask in masks for g in rs.positive_roots)
    # asking for more than exist returns everything
    small = root_system("A2")
    assert len(sample_ideals(small, 100)) == 5

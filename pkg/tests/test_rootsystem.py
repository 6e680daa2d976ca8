import math
from fractions import Fraction as Q

import pytest

from rootposets.rootsystem import (
    RootSystemError,
    admissible_systems,
    cartan_matrix,
    root_system,
)

POSITIVE_ROOT_COUNTS = {
    "A3": 6,
    "B3": 9,
    "C3": 9,
    "D4": 12,
    "E6": 36,
    "E7": 63,
    "E8": 120,
    "F4": 24,
    "G2": 6,
}

COXETER_NUMBERS = {  # (h, h*)
    "A5": (6, 6),
    "B4": (8, 7),
    "C4": (8, 5),
    "D5": (8, 8),
    "E6": (12, 12),
    "E7": (18, 18),
    "E8": (30, 30),
    "F4": (12, 9),
    "G2": (6, 4),
}


@pytest.mark.parametrize("name,count", sorted(POSITIVE_ROOT_COUNTS.items()))
def test_positive_root_counts(name, count):
    assert len(root_system(name).positive_roots) == count


@pytest.mark.parametrize("name,pair", sorted(COXETER_NUMBERS.items()))
def test_coxeter_numbers(name, pair):
    rs = root_system(name)
    assert (rs.h, rs.dual_h) == pair


def test_cartan_matrix_shape(small_system):
    rs = small_system
    a = cartan_matrix(rs.family, rs.rank)
    for i in range(rs.rank):
        assert a[i][i] == 2
        for j in range(rs.rank):
            if i != j:
                assert a[i][j] <= 0
                assert (a[i][j] == 0) == (a[j][i] == 0)


def test_gram_matrix_symmetric_positive(small_system):
    rs = small_system
    for i in range(rs.rank):
        for j in range(rs.rank):
            assert rs.gram[i][j] == rs.gram[j][i]
        assert rs.gram[i][i] == rs.d[i] * 2


def test_theta_is_dominant_long_and_unique_top(small_system):
    rs = small_system
    assert rs.is_dominant(rs.theta)
    assert rs.norm2(rs.theta) == 2
    top = rs.height(rs.theta)
    assert all(rs.height(r) < top for r in rs.positive_roots if r != rs.theta)


def test_height_counts_conjugate_to_exponents(small_system):
    # the number of roots of height k equals the number of exponents >= k
    rs = small_system
    heights = [rs.height(r) for r in rs.positive_roots]
    assert len(heights) == rs.rank * rs.h // 2
    for k in range(1, rs.h):
        assert heights.count(k) == sum(1 for e in rs.exponents if e >= k)


def test_exponents(small_system):
    rs = small_system
    assert sum(rs.exponents) == len(rs.positive_roots)
    assert sorted(rs.exponents) == list(rs.exponents) or rs.family in "DE"
    assert rs.exponents[0] == 1
    assert rs.exponents[-1] == rs.h - 1


def test_short_root_counts():
    assert sum(1 for r in root_system("B3").positive_roots
               if not root_system("B3").is_long(r)) == 3
    assert sum(1 for r in root_system("C3").positive_roots
               if not root_system("C3").is_long(r)) == 6
    assert sum(1 for r in root_system("F4").positive_roots
               if not root_system("F4").is_long(r)) == 12
    assert sum(1 for r in root_system("G2").positive_roots
               if not root_system("G2").is_long(r)) == 3


def test_roots_closed_under_reflection(small_system):
    rs = small_system
    for r in rs.positive_roots:
        for i in range(rs.rank):
            assert rs.is_root(rs.reflect(r, i))


def test_form_integrality_of_pairings(small_system):
    rs = small_system
    for r in rs.positive_roots:
        for i in range(rs.rank):
            assert rs.pairing(r, i).denominator == 1


def test_root_leq_is_a_partial_order(small_system):
    rs = small_system
    roots = rs.positive_roots
    for b in roots:
        assert rs.root_leq(b, b)
        assert rs.root_leq(b, rs.theta)
    for b in roots:
        for g in roots:
            if rs.root_leq(b, g) and rs.root_leq(g, b):
                assert b == g


def test_half_floor():
    assert root_system("G2").half_floor((2, 3)) == (1, 1)
    assert root_system("B3").half_floor((1, 2, 2)) == (0, 1, 1)
    assert root_system("A2").half_floor((1, 1)) == (0, 0)
    with pytest.raises(RootSystemError):
        root_system("A2").half_floor((2, 2))


def test_extended_diagram():
    # the affine node attaches to the unique simple not orthogonal to theta
    rs = root_system("A3")  # extended A_n diagram is a cycle
    assert (0, 1) in rs.extended_edges() and (0, 3) in rs.extended_edges()
    rs = root_system("G2")
    assert [e for e in rs.extended_edges() if 0 in e] == [(0, 1)]
    for i, j in rs.extended_edges():
        assert rs.extended_form(i, j) < 0


def test_admissible_systems():
    ids = admissible_systems(8)
    assert len(ids) == 33
    names = {str(s) for s in ids}
    assert {"A1", "B2", "C2", "D3", "E6", "E7", "E8", "F4", "G2"} <= names
    assert "E5" not in names and "F3" not in names
    assert [str(s) for s in admissible_systems(2)] == ["A1", "A2", "B2", "C2", "G2"]


@pytest.mark.parametrize("bad", ["E9", "F5", "G3", "A0", "H3", "B1", "D2", "x"])
def test_inadmissible_systems_raise(bad):
    with pytest.raises(RootSystemError):
        root_system(bad)


def test_factory_accepts_separate_rank():
    assert root_system("B", 3) is root_system("B3")


def test_fundamental_coweights(small_system):
    rs = small_system
    cw = rs.fundamental_coweights()
    for i in range(rs.rank):
        for j in range(rs.rank):
            assert rs.form(cw[i], rs.simple_roots[j]) == (1 if i == j else 0)

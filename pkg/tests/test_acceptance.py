"""Acceptance gate: one test per required behavior, one pass/fail line each.

Run with ``pytest -v tests/test_acceptance.py`` to see the per-criterion lines.
"""

import math
import subprocess
import sys
import time

from rootposets import abelian, ideals, rootposet, weights
from rootposets.affine import AffineWeylElement
from rootposets.rootsystem import admissible_systems, root_system

SAMPLE_SIZE = 500
EDGE_SAMPLE_SIZE = 300


def systems(max_rank=8):
    return [root_system(sid) for sid in admissible_systems(max_rank)]


def test_c01_root_poset_edge_counts_match_closed_forms():
    start = time.perf_counter()
    for rs in systems():
        assert rootposet.edge_type_counts(rs) == rootposet.expected_edge_type_counts(rs)
    assert sum(rootposet.edge_type_counts(root_system("F4"))) == 34
    assert time.perf_counter() - start < 1.0


def test_c02_short_root_subdiagram_counts():
    for rs in systems():
        if rs.family in ("B", "C", "F", "G"):
            got = rootposet.short_subdiagram_type_counts(rs)
            assert got == rootposet.expected_short_subdiagram_counts(rs)


def test_c03_weight_diagram_edge_counts_and_sl2_oracle():
    start = time.perf_counter()
    corpus = []
    for rs in systems():
        corpus.append((rs, weights.adjoint_weight(rs), "adjoint"))
        if rs.theta_short != rs.theta:
            corpus.append((rs, weights.short_dominant_weight(rs), "short"))
        if rs.family == "B":
            corpus.append((rs, weights.spin_weight(rs), "spin"))
    e6 = root_system("E6")
    corpus.append((e6, weights.fundamental_weight(e6, 0), "minuscule"))
    for rs, highest, label in corpus:
        ws = weights.weight_system(rs, highest)
        counts = weights.edge_type_counts(ws)
        assert counts == [weights.sl2_edge_count(ws, i) for i in range(rs.rank)]
        if label == "spin":
            n = rs.rank
            assert counts == [2 ** (n - 2)] * (n - 1) + [2 ** (n - 1)]
        if label == "adjoint":
            for i in range(rs.rank):
                if rs.is_long(rs.simple_roots[i]):
                    assert counts[i] == 2 * rs.dual_h - 2
        if label == "minuscule":
            assert sum(counts) == 36 and counts == [6] * 6
    assert time.perf_counter() - start < 30.0


def test_c04_ideal_counts_product_formula_and_edge_totals():
    ideals.enumerate_upper_ideals.cache_clear()
    for rs in systems():
        start = time.perf_counter()
        all_ideals = ideals.enumerate_upper_ideals(rs)
        assert time.perf_counter() - start < 60.0
        assert len(all_ideals) == ideals.expected_ideal_count(rs)
        assert len(all_ideals) == ideals.ideal_count_closed_form(rs)
        n_edges = sum(len(ideal.generators) for ideal in all_ideals)
        assert n_edges == ideals.expected_edge_count(rs)
    assert len(ideals.enumerate_upper_ideals(root_system("E8"))) == 25080
    assert ideals.expected_edge_count(root_system("E8")) == 100320


def test_c05_minimal_elements_satisfy_all_conditions():
    exhaustive = [rs for rs in systems(6)]
    for rs in exhaustive:
        for ideal in ideals.enumerate_upper_ideals(rs):
            ideals.check_minimal_element(ideals.minimal_element(ideal))
    for sid in ("E7", "E8"):
        rs = root_system(sid)
        batch = ideals.sample_ideals(rs, SAMPLE_SIZE)
        assert len(batch) >= SAMPLE_SIZE
        for ideal in batch:
            ideals.check_minimal_element(ideals.minimal_element(ideal))


def test_c06_edge_types_agree_along_all_four_routes():
    def agree(rs, batch):
        for ideal in batch:
            me = ideals.minimal_element(ideal)
            types = sorted(ideals.generator_edge_types(me).values())
            assert sorted(ideals.facet_types(me)) == types
            assert sorted(ideals.alcove_wall_types(me)) == types
            assert sorted(ideals.descent_types(me)) == types

    for rs in systems(4):
        agree(rs, ideals.enumerate_upper_ideals(rs))
    e6 = root_system("E6")
    agree(e6, ideals.sample_ideals(e6, EDGE_SAMPLE_SIZE))


def test_c07_sl4_golden_case():
    rs = root_system("A3")
    assert len(ideals.enumerate_upper_ideals(rs)) == 14
    counts = ideals.ad_edge_type_counts(rs)
    assert sum(counts) == 21
    assert sorted(counts) == [4, 5, 6, 6]
    me = ideals.minimal_element(ideals.full_ideal(rs))
    assert len(me.word) == 10
    assert me.element == AffineWeylElement.from_word(rs, (0, 1, 3, 0, 3, 1, 2, 1, 3, 0))


def test_c08_abelian_counts_and_typed_edges():
    for rs in systems():
        assert len(abelian.enumerate_abelian_ideals(rs)) == 2**rs.rank
        counts = abelian.ab_edge_type_counts(rs)
        assert sum(counts) == abelian.expected_ab_edge_count(rs)
        assert counts == abelian.expected_ab_edge_type_counts(rs)


def test_c09_commutative_roots_and_geometric_criterion():
    for rs in systems():
        assert len(abelian.commutative_roots(rs)) == abelian.expected_commutative_count(rs)
        if rs.family != "A":
            top = abelian.noncommutative_maximal(rs)
            if top is None:
                assert len(abelian.commutative_roots(rs)) == len(rs.positive_roots)
            else:
                assert top == rs.half_floor(rs.theta)
    for sid, count in (("E6", 25), ("E7", 34), ("E8", 44)):
        assert len(abelian.commutative_roots(root_system(sid))) == count
    for rs in systems(6):
        commutative = {rec.root for rec in abelian.commutative_roots(rs)}
        for gamma in rs.positive_roots:
            assert abelian.hyperplane_meets_double_alcove(rs, gamma) == (
                gamma in commutative
            )


def test_c10_classes_independence_fixtures_and_neighbour_laws():
    checked = set()
    for rs in systems(6) + [root_system("F4")]:
        if rs.id in checked:
            continue
        checked.add(rs.id)
        abelian.check_class_independence(rs)
        abelian.check_adjacent_classes(rs)
        abelian.check_orthogonal_maximal_classes(rs)
        abelian.check_cogenerator_orthogonality(rs)
    for sid in ("E6", "E7", "E8", "F4"):
        rs = root_system(sid)
        expected = abelian.expected_classes(rs)
        assert expected is not None
        assert abelian.class_map(rs) == expected


def test_c11_rotation_is_a_typed_graph_automorphism():
    for n in range(1, 8):
        rs = root_system(f"A{n}")
        ab = abelian.enumerate_abelian_ideals(rs)
        tau = {ideal: abelian.suter_tau(ideal) for ideal in ab}
        assert sorted(i.mask for i in tau.values()) == sorted(i.mask for i in ab)
        cur = {i: i for i in ab}
        order = 0
        while order == 0 or any(cur[i] != i for i in ab):
            cur = {i: tau[cur[i]] for i in ab}
            order += 1
            assert order <= n + 1
        assert order == n + 1
        typed = {
            frozenset((e.upper, e.lower)): e.type_index
            for e in abelian.ab_typed_edges(rs)
        }
        for pair, t in typed.items():
            image = frozenset(tau[ideal] for ideal in pair)
            assert typed[image] == (t + 2) % (n + 1)


def test_c12_long_abelian_ideal_counts():
    for n in range(3, 9):
        rs = root_system(f"B{n}")
        assert len(abelian.long_abelian_ideals(rs)) == 2 ** (n - 1)
        counts = abelian.long_abelian_edge_type_counts(rs)
        assert counts[:n] == [2 ** (n - 3)] * n
        assert counts[n] == 0
        assert sum(counts) == n * 2 ** (n - 3)
    for sid, count in (("C3", 2), ("G2", 3), ("F4", 4)):
        assert len(abelian.long_abelian_ideals(root_system(sid))) == count


def test_c13_covering_polynomial_tables():
    for rs in systems():
        assert rootposet.delta_covering_polynomial(rs) == (
            abelian.expected_delta_covering_polynomial(rs)
        )
        got = abelian.ab_covering_polynomial(rs)
        assert got == abelian.expected_ab_covering_polynomial(rs)
        q1 = got.coeffs[1] if len(got.coeffs) > 1 else 0
        assert q1 == len(abelian.commutative_roots(rs))
        assert got.degree <= abelian.max_orthogonal_simple_count(rs)
        if rs.family == "D":
            assert got.degree == rs.rank // 2 + 1
    assert list(abelian.ab_covering_polynomial(root_system("E8")).coeffs) == [
        1, 44, 118, 76, 17,
    ]
    for sid in ("E7", "E8"):
        assert abelian.ab_covering_polynomial(root_system(sid)).degree == 4
    for n in range(1, 7):
        got = abelian.boolean_lattice_covering_polynomial(n)
        assert list(got.coeffs) == [math.comb(n, k) for k in range(n + 1)]


def test_c14_binomial_convolution_identity():
    for a in range(21):
        for b in range(21):
            for c in range(21 - b):
                if a < b + c:
                    continue
                lhs = sum(
                    math.comb(x, c) * math.comb(a - x, b) for x in range(c, a - b + 1)
                )
                assert lhs == math.comb(a + 1, b + c + 1)


def test_c15_verification_cli_performance_envelope():
    start = time.perf_counter()
    full = subprocess.run(
        [sys.executable, "-m", "rootposets.cli", "verify", "--suite", "all", "--max-rank", "8"],
        capture_output=True,
        text=True,
        timeout=660,
    )
    elapsed_full = time.perf_counter() - start
    assert full.returncode == 0, full.stdout[-2000:] + full.stderr[-2000:]
    assert ", 0 failed" in full.stdout.splitlines()[-1]
    assert elapsed_full <= 600.0

    start = time.perf_counter()
    quick = subprocess.run(
        [sys.executable, "-m", "rootposets.cli", "verify", "--suite", "all", "--max-rank", "4"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    elapsed_quick = time.perf_counter() - start
    assert quick.returncode == 0, quick.stdout[-2000:] + quick.stderr[-2000:]
    assert ", 0 failed" in quick.stdout.splitlines()[-1]
    assert elapsed_quick <= 30.0

"""Abelian ideals, commutative roots and their classes, the type-A rotation
tau, long Abelian ideals, and covering polynomials.

An ideal is Abelian when no two of its roots sum to a root.  A positive root
is commutative when its principal ideal is Abelian; its class is the type of
the Hasse edge removing it from that ideal, and the class provably does not
depend on which Abelian ideal the root generates an edge of - here that
independence is re-verified rather than assumed.  Expected class values per
classical family and the full exceptional class tables ship as fixtures
(`data/`), guarding the machinery against convention drift.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from fractions import Fraction as Q
from functools import lru_cache
from importlib import resources
from typing import Iterable, NamedTuple, Sequence

from .affine import fundamental_alcove_vertices, is_in_closed_dilated_alcove
from .ideals import (
    IdealEdge,
    MinimalElement,
    UpperIdeal,
    _bits,
    _order_masks,
    _sum_table,
    generator_edge_types,
    ideal_from_mask,
    minimal_element,
    principal_ideal,
)
from .posets import FinitePoset, IntPolynomial
from .rootsystem import Root, RootSystem, RootSystemError


@lru_cache(maxsize=None)
def _expected_counts() -> dict:
    with resources.files("rootposets.data").joinpath("expected_counts.json").open() as fh:
        return json.load(fh)


@lru_cache(maxsize=None)
def _appendix_classes() -> dict:
    with resources.files("rootposets.data").joinpath("commutative_classes.json").open() as fh:
        return json.load(fh)


@lru_cache(maxsize=None)
def _sums_with(rs: RootSystem) -> tuple[int, ...]:
    """For each positive root index, the indices it sums with to a root."""
    table = _sum_table(rs)
    m = len(rs.positive_roots)
    return tuple(
        sum(1 << j for j in range(m) if table[i][j] >= 0) for i in range(m)
    )


@lru_cache(maxsize=None)
def enumerate_abelian_ideals(rs: RootSystem) -> tuple[UpperIdeal, ...]:
    """All Abelian upper ideals (count 2^rank), via pruned antichain search."""
    pos = rs.positive_roots
    up, comp = _order_masks(rs)
    sums = _sums_with(rs)
    m = len(pos)
    out: list[UpperIdeal] = []

    def descend(start: int, gens: tuple[int, ...], mask: int, blocked: int) -> None:
        out.append(UpperIdeal(rs, mask, tuple(sorted(pos[g] for g in gens))))
        for i in range(start, m):
            if blocked >> i & 1:
                continue
            new_mask = mask | up[i]
            added = new_mask & ~mask
            if any(sums[j] & new_mask for j in _bits(added)):
                continue
            descend(i + 1, gens + (i,), new_mask, blocked | comp[i])

    descend(0, (), 0, 0)
    out.sort(key=lambda ideal: (len(ideal), ideal.generators))
    assert len(out) == 2**rs.rank, "Abelian ideal count must be 2^rank"
    return tuple(out)


def abelian_poset(rs: RootSystem) -> FinitePoset:
    ideals = enumerate_abelian_ideals(rs)
    return FinitePoset(ideals, lambda a, b: a.mask & ~b.mask == 0, validate=False)


def ab_typed_edges(rs: RootSystem) -> list[IdealEdge]:
    edges = []
    for ideal in enumerate_abelian_ideals(rs):
        me = minimal_element(ideal)
        for gamma, t in generator_edge_types(me).items():
            edges.append(IdealEdge(ideal, ideal.without_generator(gamma), t))
    return edges


def ab_edge_type_counts(rs: RootSystem) -> list[int]:
    counts = [0] * (rs.rank + 1)
    for e in ab_typed_edges(rs):
        counts[e.type_index] += 1
    return counts


def expected_ab_edge_count(rs: RootSystem) -> int:
    n = rs.rank
    return (n + 1) * 2 ** (n - 2) if n >= 2 else 1


def expected_ab_edge_type_counts(rs: RootSystem) -> list[int]:
    """Per type: 2^(n-2) everywhere, except the symplectic pattern.

    For C_n (and A1, which is sp_2): alpha_0 gets 2^(n-1), the short chain
    types 2^(n-2) each, the long end node 0.  B2 is C2 with the two finite
    nodes swapped, so it inherits the transported pattern.
    """
    n = rs.rank
    if rs.family == "C" or (rs.family, n) == ("A", 1):
        if n == 1:
            return [1, 0]
        return [2 ** (n - 1)] + [2 ** (n - 2)] * (n - 1) + [0]
    if (rs.family, n) == ("B", 2):
        return [2, 0, 1]
    return [2 ** (n - 2)] * (n + 1)


# -- commutative roots and classes ------------------------------------------------


class CommutativeRoot(NamedTuple):
    root: Root
    class_index: int
    ideal: UpperIdeal


@lru_cache(maxsize=None)
def commutative_roots(rs: RootSystem) -> tuple[CommutativeRoot, ...]:
    """Roots whose principal ideal is Abelian, with their edge classes."""
    out = []
    for gamma in rs.positive_roots:
        ideal = principal_ideal(rs, gamma)
        if not ideal.is_abelian():
            continue
        me = minimal_element(ideal)
        out.append(CommutativeRoot(gamma, generator_edge_types(me)[gamma], ideal))
    return tuple(out)


def class_map(rs: RootSystem) -> dict[Root, int]:
    return {rec.root: rec.class_index for rec in commutative_roots(rs)}


def expected_commutative_count(rs: RootSystem) -> int:
    """n(n+1)/2, plus the product of branch-tail sizes when the diagram branches."""
    n = rs.rank
    base = n * (n + 1) // 2
    degree = [0] * n
    neighbours = [[] for _ in range(n)]
    for a, b in rs.dynkin_edges():
        degree[a] += 1
        degree[b] += 1
        neighbours[a].append(b)
        neighbours[b].append(a)
    branch = [i for i in range(n) if degree[i] == 3]
    if not branch:
        return base
    (node,) = branch
    product = 1
    for start in neighbours[node]:
        size = 0
        stack, seen = [start], {node, start}
        while stack:
            cur = stack.pop()
            size += 1
            for nb in neighbours[cur]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        product *= size
    return base + product


def noncommutative_maximal(rs: RootSystem) -> Root | None:
    """The unique maximal non-commutative root; None when all roots commute."""
    commutative = {rec.root for rec in commutative_roots(rs)}
    rest = [g for g in rs.positive_roots if g not in commutative]
    if not rest:
        return None
    maximal = [g for g in rest if not any(g != o and rs.root_leq(g, o) for o in rest)]
    if len(maximal) != 1:
        raise RootSystemError(f"expected a unique maximal non-commutative root, got {maximal}")
    return maximal[0]


def hyperplane_meets_double_alcove(rs: RootSystem, gamma: Root) -> bool:
    """Does {x : (x, gamma) = 1} meet the open double fundamental alcove?

    The form is affine on the simplex and equals -1 at the origin vertex, so
    the hyperplane meets the open simplex iff it is positive at some vertex.
    """
    values = [2 * rs.form(v, gamma) - 1 for v in fundamental_alcove_vertices(rs)]
    assert values[0] == -1
    return max(values) > 0


def check_class_independence(rs: RootSystem) -> dict[Root, int]:
    """Class of a commutative root recomputed in every Abelian ideal it generates."""
    observed: dict[Root, set[int]] = {}
    for ideal in enumerate_abelian_ideals(rs):
        me = minimal_element(ideal)
        for gamma, t in generator_edge_types(me).items():
            observed.setdefault(gamma, set()).add(t)
    classes = class_map(rs)
    if set(observed) != set(classes):
        raise RootSystemError("generators of Abelian ideals != commutative roots")
    for gamma, types in observed.items():
        if types != {classes[gamma]}:
            raise RootSystemError(f"class of {gamma} is not independent: {sorted(types)}")
    return classes


def check_adjacent_classes(rs: RootSystem) -> None:
    """Hasse-adjacent commutative roots have adjacent classes in the extended diagram."""
    classes = class_map(rs)
    extended = {tuple(sorted(e)) for e in rs.extended_edges()}
    for gamma, cls in classes.items():
        for i in range(rs.rank):
            upper = tuple(c + (1 if j == i else 0) for j, c in enumerate(gamma))
            if upper in classes:
                pair = tuple(sorted((cls, classes[upper])))
                if pair[0] == pair[1] or pair not in extended:
                    raise RootSystemError(
                        f"classes {pair} of adjacent roots {gamma} < {upper} are not"
                        " adjacent in the extended diagram"
                    )


def check_orthogonal_maximal_classes(rs: RootSystem) -> list[Root]:
    """Commutative maximal roots orthogonal to theta have class alpha_0."""
    classes = class_map(rs)
    orth = [g for g in rs.positive_roots if rs.form(g, rs.theta) == 0]
    maximal = [g for g in orth if not any(g != o and rs.root_leq(g, o) for o in orth)]
    witnesses = []
    for gamma in maximal:
        if gamma in classes:
            if classes[gamma] != 0:
                raise RootSystemError(f"maximal orthogonal root {gamma} has class {classes[gamma]}")
            witnesses.append(gamma)
    return witnesses


def check_cogenerator_orthogonality(rs: RootSystem) -> None:
    """Distinct generators of one Abelian ideal have orthogonal classes."""
    classes = class_map(rs)
    for ideal in enumerate_abelian_ideals(rs):
        gens = ideal.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                c1, c2 = classes[gens[i]], classes[gens[j]]
                if rs.extended_form(c1, c2) != 0:
                    raise RootSystemError(
                        f"co-generators {gens[i]}, {gens[j]} have non-orthogonal"
                        f" classes {c1}, {c2}"
                    )


# -- expected class fixtures --------------------------------------------------------


def _ones(n: int, lo: int, hi: int) -> Root:
    """Coordinates with 1 on [lo, hi) and 0 elsewhere."""
    return tuple(1 if lo <= i < hi else 0 for i in range(n))


def expected_classical_classes(rs: RootSystem) -> dict[Root, int] | None:
    """Per-family coordinate formulas for classes (1-based epsilon indices)."""
    n = rs.rank
    if rs.family == "A":
        out = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 2):
                out[_ones(n, i - 1, j - 1)] = (i + j - 1) % (n + 1)
        return out
    if rs.family == "C":
        out = {}
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                coords = [0] * n
                for k in range(i - 1, j - 1):
                    coords[k] = 1
                for k in range(j - 1, n - 1):
                    coords[k] = 2
                coords[n - 1] = 1
                out[tuple(coords)] = j - i
        return out
    if rs.family == "B":
        out = {}
        # eps_1 - eps_j, with eps_{n+1} := 0; class alpha_0 for j=2, else alpha_{j-1}
        for j in range(2, n + 2):
            coords = [0] * n
            for k in range(0, min(j - 1, n)):
                coords[k] = 1
            out[tuple(coords)] = 0 if j == 2 else j - 1
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                coords = [0] * n
                for k in range(i - 1, j - 1):
                    coords[k] = 1
                for k in range(j - 1, n):
                    coords[k] = 2
                out[tuple(coords)] = _eq_i_plus_j_class(i, j)
        return out
    if rs.family == "D":
        out = {}
        for j in range(2, n + 1):  # eps_1 - eps_j
            out[_ones(n, 0, j - 1)] = 0 if j == 2 else (j - 1 if j < n else n)
        for i in range(2, n - 1):  # eps_i - eps_n, 2 <= i <= n-2
            out[_ones(n, i - 1, n - 1)] = n - i
        # eps_{n-1} - eps_n shares the class of eps_{n-1} + eps_n
        out[_ones(n, n - 2, n - 1)] = _eq_i_plus_j_class(n - 1, n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                coords = [0] * n
                if j == n:
                    for k in range(i - 1, n - 2):
                        coords[k] = 1
                    coords[n - 1] = 1
                else:
                    for k in range(i - 1, j - 1):
                        coords[k] = 1
                    for k in range(j - 1, n - 2):
                        coords[k] = 2
                    coords[n - 2] = 1
                    coords[n - 1] = 1
                out[tuple(coords)] = _eq_i_plus_j_class(i, j)
        return out
    return None


def _eq_i_plus_j_class(i: int, j: int) -> int:
    if j - i >= 2:
        return j - i
    return 0 if j % 2 == 0 else 1


def expected_exceptional_classes(rs: RootSystem) -> dict[Root, int] | None:
    """The published class tables for E6, E7, E8, F4."""
    key = f"{rs.family}{rs.rank}"
    data = _appendix_classes().get(key)
    if data is None:
        return None
    out = {}
    for cls, roots in data.items():
        for digits in roots:
            out[tuple(int(ch) for ch in digits)] = int(cls)
    return out


def expected_classes(rs: RootSystem) -> dict[Root, int] | None:
    if rs.family in "ABCD":
        return expected_classical_classes(rs)
    return expected_exceptional_classes(rs)


# -- Suter's rotation on type-A Abelian ideals ---------------------------------------


def _pairs_from_ideal(ideal: UpperIdeal) -> list[tuple[int, int]]:
    """Generators eps_a - eps_b as (a, b) pairs, sorted by first index."""
    pairs = []
    for g in ideal.generators:
        support = [i for i, c in enumerate(g) if c]
        pairs.append((support[0] + 1, support[-1] + 2))
    return sorted(pairs)


def _ideal_from_pairs(rs: RootSystem, pairs: Iterable[tuple[int, int]]) -> UpperIdeal:
    n = rs.rank
    mask = 0
    for a, b in pairs:
        mask |= principal_ideal(rs, _ones(n, a - 1, b - 1)).mask
    return ideal_from_mask(rs, mask)


def suter_tau(ideal: UpperIdeal) -> UpperIdeal:
    """Suter's rotation of an Abelian ideal of sl_{n+1}.

    Generators (a_j, b_j) shift to (a_j+1, b_j+1); a pair with b = n+1 is
    dropped; a new pair (1, a_k+2) appears when a_k+1 < b_1, where a_k and
    b_1 refer to the original generators (for the empty ideal a_k = 0 and
    b_1 = infinity, so tau(empty) is the ideal of (1, 2)).
    """
    rs = ideal.rs
    if rs.family != "A":
        raise RootSystemError("the rotation tau is defined for type A only")
    n = rs.rank
    pairs = _pairs_from_ideal(ideal)
    a_last = pairs[-1][0] if pairs else 0
    b_first = pairs[0][1] if pairs else None
    new_pairs = [(a + 1, b + 1) for a, b in pairs if b != n + 1]
    if b_first is None or a_last + 1 < b_first:
        new_pairs.insert(0, (1, a_last + 2))
    result = _ideal_from_pairs(rs, new_pairs)
    if not result.is_abelian():
        raise RootSystemError("tau produced a non-Abelian ideal")
    return result


# -- long Abelian ideals -------------------------------------------------------------


@lru_cache(maxsize=None)
def long_abelian_ideals(rs: RootSystem) -> tuple[UpperIdeal, ...]:
    if all(rs.is_long(g) for g in rs.positive_roots):
        raise RootSystemError("long Abelian ideals are a non-simply-laced notion")
    return tuple(
        ideal
        for ideal in enumerate_abelian_ideals(rs)
        if all(rs.is_long(g) for g in ideal.roots())
    )


def long_abelian_edge_type_counts(rs: RootSystem) -> list[int]:
    """Typed edges of the Hasse diagram restricted to long Abelian ideals."""
    masks = {ideal.mask for ideal in long_abelian_ideals(rs)}
    counts = [0] * (rs.rank + 1)
    for ideal in long_abelian_ideals(rs):
        me = minimal_element(ideal)
        for gamma, t in generator_edge_types(me).items():
            if ideal.without_generator(gamma).mask in masks:
                counts[t] += 1
    return counts


def expected_long_abelian_count(rs: RootSystem) -> int:
    if rs.family == "B":
        return 2 ** (rs.rank - 1)
    return {"C": 2, "G": 3, "F": 4}[rs.family]


# -- covering polynomials -------------------------------------------------------------


def ab_covering_polynomial(rs: RootSystem) -> IntPolynomial:
    counts = Counter(len(ideal.generators) for ideal in enumerate_abelian_ideals(rs))
    return IntPolynomial.from_counts(counts)


def expected_ab_covering_polynomial(rs: RootSystem) -> IntPolynomial:
    n = rs.rank
    if rs.family in "ABC":
        coeffs = [math.comb(n + 1, 2 * k) for k in range(n // 2 + 2)]
    elif rs.family == "D":
        coeffs = [
            math.comb(n + 2, 2 * k) - (4 * math.comb(n - 1, 2 * k - 2) if k else 0)
            for k in range(n // 2 + 2)
        ]
    else:
        coeffs = _expected_counts()["ab_covering"][f"{rs.family}{n}"]
    return IntPolynomial(coeffs)


def expected_delta_covering_polynomial(rs: RootSystem) -> IntPolynomial:
    n = rs.rank
    if rs.family == "A":
        coeffs = [n, 0, math.comb(n, 2)]
    elif rs.family in "BC":
        coeffs = [n, n - 1, (n - 1) ** 2]
    elif rs.family == "D":
        coeffs = [n, n - 3, math.comb(n, 2) + math.comb(n - 3, 2), n - 3]
    else:
        coeffs = _expected_counts()["delta_covering"][f"{rs.family}{n}"]
    return IntPolynomial(coeffs)


def max_orthogonal_simple_count(rs: RootSystem) -> int:
    """Largest set of pairwise orthogonal simple roots (Dynkin independent set)."""
    n = rs.rank
    edges = rs.dynkin_edges()
    best = 0
    for mask in range(1 << n):
        if any(mask >> a & 1 and mask >> b & 1 for a, b in edges):
            continue
        best = max(best, mask.bit_count())
    return best


def boolean_lattice_covering_polynomial(n: int) -> IntPolynomial:
    """Sanity anchor: the covering polynomial of the Boolean lattice is (1+q)^n."""
    subsets = list(range(1 << n))
    poset = FinitePoset(subsets, lambda a, b: a & ~b == 0, validate=False)
    return poset.covering_polynomial()

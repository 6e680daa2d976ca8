"""Upper ideals of the positive roots, their minimal affine Weyl elements,
and the typed Hasse edges of the ideal poset.

An upper ideal is upward-closed in the root order and is identified by its
generating antichain (its minimal roots).  Each ideal I determines a unique
affine Weyl element w with inversion set {k*delta - gamma : gamma in I^k},
where I^(k+1) = (I^k + I) cap positive roots; the element is recovered by
peeling that inversion set (array kernels in `_kernels`), and every
construction re-verifies the defining conditions:

  (containment)  gamma in I  iff  w(delta - gamma) < 0
  (dominance)    w(alpha) > 0 for every finite simple alpha
  (minimality)   w^{-1}(alpha_i) = k_i*delta + mu_i with k_i >= -1

Hasse edges of the ideal poset carry a type in {0..n}: removing a generator
gamma from I yields an edge whose type is the affine simple root w(gamma -
delta).  The same multiset of types is recovered three more ways (facets of
the integral point z, separating walls of w^{-1}*A, left descents of w).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .affine import (
    AffineRoot,
    AffineWeylElement,
    Wall,
    affine_simple_roots,
    fundamental_alcove_vertices,
    fundamental_alcove_walls,
    is_positive_affine,
)
from .posets import FinitePoset, IntPolynomial
from .rootsystem import Root, RootSystem, RootSystemError, invert_exact


@dataclass(frozen=True)
class UpperIdeal:
    """An upward-closed subset of the positive roots."""

    rs: RootSystem = field(repr=False, compare=False)
    mask: int
    generators: tuple[Root, ...]

    def roots(self) -> list[Root]:
        pos = self.rs.positive_roots
        return [pos[i] for i in _bits(self.mask)]

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, root: Root) -> bool:
        i = self.rs.root_index.get(root)
        return i is not None and self.mask >> i & 1

    def without_generator(self, gamma: Root) -> "UpperIdeal":
        if gamma not in self.generators:
            raise RootSystemError(f"{gamma} is not a generator")
        mask = self.mask & ~(1 << self.rs.root_index[gamma])
        return ideal_from_mask(self.rs, mask)

    def is_abelian(self) -> bool:
        return not _power_mask(self.rs, self.mask, self.mask)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def _order_masks(rs: RootSystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(up, comp): up[i] = indices above root i; comp[i] = indices comparable to i."""
    pos = rs.positive_roots
    m = len(pos)
    up = [0] * m
    for i in range(m):
        for j in range(m):
            if rs.root_leq(pos[i], pos[j]):
                up[i] |= 1 << j
    comp = list(up)
    for i in range(m):
        for j in _bits(up[i]):
            comp[j] |= 1 << i
    return tuple(up), tuple(comp)


@lru_cache(maxsize=None)
def _sum_table(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """sum_table[i][j] = index of pos[i]+pos[j] among positive roots, or -1."""
    pos = rs.positive_roots
    idx = rs.root_index
    table = []
    for a in pos:
        row = [idx.get(tuple(x + y for x, y in zip(a, b)), -1) for b in pos]
        table.append(tuple(row))
    return tuple(table)


def _power_mask(rs: RootSystem, mask_a: int, mask_b: int) -> int:
    """Bitmask of (A + B) cap positive roots."""
    table = _sum_table(rs)
    b_idx = list(_bits(mask_b))
    out = 0
    for i in _bits(mask_a):
        row = table[i]
        for j in b_idx:
            k = row[j]
            if k >= 0:
                out |= 1 << k
    return out


def ideal_from_mask(rs: RootSystem, mask: int) -> UpperIdeal:
    """Build an ideal from a root bitmask, recomputing its generator antichain."""
    up, comp = _order_masks(rs)
    pos = rs.positive_roots
    for i in _bits(mask):
        if up[i] & ~mask:
            raise RootSystemError("root set is not upward closed")
    gens = [pos[i] for i in _bits(mask) if not (comp[i] & ~up[i]) & mask]
    return UpperIdeal(rs, mask, tuple(sorted(gens)))


def ideal_from_roots(rs: RootSystem, roots: Sequence[Root]) -> UpperIdeal:
    mask = 0
    for r in roots:
        if r not in rs.root_index:
            raise RootSystemError(f"{r} is not a positive root")
        mask |= 1 << rs.root_index[r]
    return ideal_from_mask(rs, mask)


def principal_ideal(rs: RootSystem, gamma: Root) -> UpperIdeal:
    up, _ = _order_masks(rs)
    return UpperIdeal(rs, up[rs.root_index[gamma]], (gamma,))


def full_ideal(rs: RootSystem) -> UpperIdeal:
    return ideal_from_mask(rs, (1 << len(rs.positive_roots)) - 1)


def empty_ideal(rs: RootSystem) -> UpperIdeal:
    return UpperIdeal(rs, 0, ())


@lru_cache(maxsize=None)
def enumerate_upper_ideals(rs: RootSystem) -> tuple[UpperIdeal, ...]:
    """All upper ideals, one per antichain, sorted by size then generators."""
    pos = rs.positive_roots
    up, comp = _order_masks(rs)
    m = len(pos)
    out: list[UpperIdeal] = []

    def descend(start: int, gens: tuple[int, ...], mask: int, blocked: int) -> None:
        out.append(UpperIdeal(rs, mask, tuple(sorted(pos[g] for g in gens))))
        for i in range(start, m):
            if not blocked >> i & 1:
                descend(i + 1, gens + (i,), mask | up[i], blocked | comp[i])

    descend(0, (), 0, 0)
    out.sort(key=lambda ideal: (len(ideal), ideal.generators))
    return tuple(out)


def expected_ideal_count(rs: RootSystem) -> int:
    """Product formula over the exponents: prod (h + e_i + 1)/(e_i + 1)."""
    value = Q(1)
    for e in rs.exponents:
        value *= Q(rs.h + e + 1, e + 1)
    assert value.denominator == 1
    return int(value)


def ideal_count_closed_form(rs: RootSystem) -> int:
    """The per-family closed forms for the number of upper ideals."""
    n = rs.rank
    if rs.family == "A":
        return math.comb(2 * n + 2, n + 1) // (n + 2)
    if rs.family in ("B", "C"):
        return math.comb(2 * n, n)
    if rs.family == "D":
        return math.comb(2 * n, n) - math.comb(2 * n - 2, n - 1)
    return {("E", 6): 833, ("E", 7): 4160, ("E", 8): 25080, ("F", 4): 105, ("G", 2): 8}[
        (rs.family, n)
    ]


def expected_edge_count(rs: RootSystem) -> int:
    """#edges of the ideal poset = (n/2) * #ideals."""
    two_edges = rs.rank * expected_ideal_count(rs)
    assert two_edges % 2 == 0
    return two_edges // 2


def ideal_powers(ideal: UpperIdeal) -> list[int]:
    """Masks of I = I^1, I^2, ... down to the last nonempty power."""
    rs = ideal.rs
    powers = []
    cur = ideal.mask
    while cur:
        powers.append(cur)
        cur = _power_mask(rs, cur, ideal.mask)
    return powers


# -- minimal elements -----------------------------------------------------------


class MinimalElement(NamedTuple):
    ideal: UpperIdeal
    element: AffineWeylElement
    word: tuple[int, ...]


@lru_cache(maxsize=None)
def _peel_tables(rs: RootSystem) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return _kernels.peel_tables(rs)


def target_inversion_rows(ideal: UpperIdeal) -> np.ndarray:
    """Rows (-gamma, k) for gamma in I^k: the inversion set of w as an array."""
    rs = ideal.rs
    pos = rs.positive_roots
    rows = []
    for k, mask in enumerate(ideal_powers(ideal), start=1):
        for i in _bits(mask):
            rows.append([-c for c in pos[i]] + [k])
    return np.array(rows, dtype=np.int64).reshape(len(rows), rs.rank + 1)


def minimal_element(ideal: UpperIdeal) -> MinimalElement:
    rs = ideal.rs
    rows = target_inversion_rows(ideal)
    if rows.shape[0] == 0:
        return MinimalElement(ideal, AffineWeylElement.identity(rs), ())
    try:
        peeled = _kernels.peel(rows, *_peel_tables(rs))
    except _kernels.PeelError as exc:  # should be impossible for an upper ideal
        raise RootSystemError(f"peeling failed for {ideal.generators}: {exc}") from exc
    word = tuple(int(x) for x in peeled.tolist()[::-1])
    if word[-1] != 0:
        raise RootSystemError("nonempty ideal must end its reduced word with s_0")
    return MinimalElement(ideal, AffineWeylElement.from_word(rs, word), word)


def check_minimal_element(me: MinimalElement) -> tuple[int, ...]:
    """Re-verify the defining conditions; returns the levels k_0..k_n.

    Checks, by direct evaluation on the constructed element:
    containment (gamma in I iff w(delta-gamma) < 0, over all positive roots),
    dominance (w(alpha) > 0 on finite simples), minimality (all k_i >= -1),
    and length (the word length equals sum of the power sizes and l(w)).
    """
    rs = me.ideal.rs
    w = me.element
    for gamma in rs.positive_roots:
        delta_minus = AffineRoot(tuple(-c for c in gamma), 1)
        if (gamma in me.ideal) != (not is_positive_affine(w.act(delta_minus))):
            raise RootSystemError(f"containment condition fails at {gamma}")
    simples = affine_simple_roots(rs)
    for i in range(1, rs.rank + 1):
        if not is_positive_affine(w.act(simples[i])):
            raise RootSystemError(f"dominance fails at alpha_{i}")
    w_inv = w.inverse()
    levels = tuple(w_inv.act(simples[i]).level for i in range(rs.rank + 1))
    if any(k < -1 for k in levels):
        raise RootSystemError(f"minimality fails: levels {levels}")
    expected_length = sum(m.bit_count() for m in ideal_powers(me.ideal))
    if len(me.word) != expected_length or w.length() != expected_length:
        raise RootSystemError("length does not match the sum of ideal power sizes")
    return levels


# -- typed edges, four ways -------------------------------------------------------


class IdealEdge(NamedTuple):
    upper: UpperIdeal
    lower: UpperIdeal
    type_index: int


def generator_edge_types(me: MinimalElement) -> dict[Root, int]:
    """Type of the edge I -> I \\ {gamma} for each generator: w(gamma - delta)."""
    rs = me.ideal.rs
    simples = affine_simple_roots(rs)
    out = {}
    for gamma in me.ideal.generators:
        image = me.element.act(AffineRoot(gamma, -1))
        try:
            out[gamma] = simples.index(image)
        except ValueError:
            raise RootSystemError(
                f"edge image {image} of generator {gamma} is not an affine simple root"
            ) from None
    if len(set(out.values())) != len(out):
        raise RootSystemError("two generators of one ideal received the same type")
    return out


def ad_typed_edges(rs: RootSystem) -> list[IdealEdge]:
    edges = []
    for ideal in enumerate_upper_ideals(rs):
        me = minimal_element(ideal)
        for gamma, t in generator_edge_types(me).items():
            edges.append(IdealEdge(ideal, ideal.without_generator(gamma), t))
    return edges


def ad_edge_type_counts(rs: RootSystem) -> list[int]:
    counts = [0] * (rs.rank + 1)
    for e in ad_typed_edges(rs):
        counts[e.type_index] += 1
    return counts


def z_point(me: MinimalElement) -> tuple[int, ...]:
    """The integral coweight z with (alpha_i, z) = k_i, in coroot coordinates."""
    rs = me.ideal.rs
    levels = check_minimal_element(me)
    n = rs.rank
    cartan_t = [[Q(rs.cartan[j][i]) for j in range(n)] for i in range(n)]
    inv = invert_exact(cartan_t)
    z = []
    for i in range(n):
        val = sum(inv[i][j] * levels[1 + j] for j in range(n))
        if val.denominator != 1:
            raise RootSystemError(f"z-point is not integral: {val} in row {i}")
        z.append(int(val))
    theta_pairing = sum(z[j] * rs.pairing(rs.theta, j) for j in range(n))
    if theta_pairing != 1 - levels[0]:
        raise RootSystemError("z-point fails the level-0 consistency equation")
    return tuple(z)


def facet_types(me: MinimalElement) -> set[int]:
    """Facets of {x : (x, alpha) >= -1, (x, theta) <= 2} that contain z."""
    rs = me.ideal.rs
    z = z_point(me)
    n = rs.rank
    values = [sum(z[j] * rs.cartan[j][i] for j in range(n)) for i in range(n)]
    theta_value = sum(z[j] * rs.pairing(rs.theta, j) for j in range(n))
    if any(v < -1 for v in values) or theta_value > 2:
        raise RootSystemError("z-point lies outside the minimal-element region")
    out = {0} if theta_value == 2 else set()
    out.update(i + 1 for i in range(n) if values[i] == -1)
    return out


def alcove_wall_types(me: MinimalElement) -> list[int]:
    """Types of the walls of w^{-1} * A separating that alcove from the origin."""
    rs = me.ideal.rs
    g = me.element.inverse()
    verts = [g.act_point(v) for v in fundamental_alcove_vertices(rs)]
    types = []
    for t, wall in enumerate(fundamental_alcove_walls(rs)):
        image = g.act_wall(wall)
        side_values = [image.evaluate(rs, v) for v in verts]
        nonzero = [v for v in side_values if v != 0]
        assert len(nonzero) == 1, "an alcove wall must contain all vertices but one"
        at_origin = -image.offset
        if at_origin != 0 and (nonzero[0] > 0) != (at_origin > 0):
            norm = image.normalized()
            if norm.offset != 1 or not rs.is_positive_root(norm.normal):
                raise RootSystemError(f"separating wall {norm} is not at level one")
            types.append(t)
    return sorted(types)


def descent_types(me: MinimalElement) -> set[int]:
    """{i : some reduced word of w starts with s_i} = {i : w^{-1}(alpha_i) < 0}."""
    return me.element.inverse().right_descents()


def narayana_polynomial(rs: RootSystem) -> IntPolynomial:
    """Generator-count generating function of the ideal poset."""
    from collections import Counter

    counts = Counter(len(ideal.generators) for ideal in enumerate_upper_ideals(rs))
    return IntPolynomial.from_counts(counts)


def ideal_poset(rs: RootSystem) -> FinitePoset:
    ideals = enumerate_upper_ideals(rs)
    return FinitePoset(ideals, lambda a, b: a.mask & ~b.mask == 0, validate=False)


def sample_ideals(rs: RootSystem, count: int, seed: int = 2004) -> list[UpperIdeal]:
    """A deterministic sample always containing the empty, full and principal ideals."""
    ideals = enumerate_upper_ideals(rs)
    if len(ideals) <= count:
        return list(ideals)
    forced_masks = {0, full_ideal(rs).mask}
    forced_masks.update(principal_ideal(rs, g).mask for g in rs.positive_roots)
    forced = [ideal for ideal in ideals if ideal.mask in forced_masks]
    rest = [ideal for ideal in ideals if ideal.mask not in forced_masks]
    rng = random.Random(seed)
    extra = max(0, count - len(forced))
    return forced + (rng.sample(rest, extra) if extra else [])

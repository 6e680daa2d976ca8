"""Affine Weyl group elements, affine roots, and alcove geometry.

An affine root is a pair (finite part, level) standing for ``mu + level*delta``
with ``mu`` in simple-root coordinates.  Group elements are stored as an
integer matrix (the linear part, acting on root coordinates) together with an
integer translation vector in the *coroot* basis, with the convention
``w = linear_part o t_trans``.  All derived quantities (inverses, coroot
matrices, wall images) are computed exactly and asserted integral where the
theory says they must be.

The fundamental alcove is the open simplex cut out by (x, alpha_i) > 0 and
(x, theta) < 1; its vertices are 0 and the fundamental coweights divided by
the marks of theta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .rootsystem import Root, RootSystem, RootSystemError, invert_exact

Vector = tuple[Q, ...]


class AffineRoot(NamedTuple):
    finite: Root
    level: int

    def negate(self) -> "AffineRoot":
        return AffineRoot(tuple(-c for c in self.finite), -self.level)


def is_positive_affine(ar: AffineRoot) -> bool:
    if ar.level != 0:
        return ar.level > 0
    return all(c >= 0 for c in ar.finite) and any(ar.finite)


def affine_simple_roots(rs: RootSystem) -> tuple[AffineRoot, ...]:
    """Index 0 is delta - theta; index i >= 1 is the finite simple alpha_i."""
    zero = (0,) * rs.rank
    out = [AffineRoot(tuple(-c for c in rs.theta), 1)]
    for i in range(rs.rank):
        out.append(AffineRoot(tuple(1 if j == i else 0 for j in range(rs.rank)), 0))
    return tuple(out)


@lru_cache(maxsize=None)
def _theta_pairing_row(rs: RootSystem) -> tuple[int, ...]:
    """Row vector g with g . x = <x, theta_coroot> for x in root coordinates."""
    cm = rs.coroot_marks
    return tuple(sum(rs.cartan[j][i] * cm[j] for j in range(rs.rank)) for i in range(rs.rank))


def _identity_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _simple_reflection_matrix(rs: RootSystem, i: int) -> tuple[tuple[int, ...], ...]:
    n = rs.rank
    return tuple(
        tuple((1 if r == c else 0) - (rs.cartan[i][c] if r == i else 0) for c in range(n))
        for r in range(n)
    )


def _theta_reflection_matrix(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    n = rs.rank
    g = _theta_pairing_row(rs)
    return tuple(
        tuple((1 if r == c else 0) - rs.theta[r] * g[c] for c in range(n)) for r in range(n)
    )


def _mat_mul(a, b) -> tuple[tuple[int, ...], ...]:
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n)
    )


def _mat_vec(m, v) -> tuple:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _coroot_matrix(rs: RootSystem, m) -> tuple[tuple[int, ...], ...]:
    """Conjugate a root-coordinate matrix into the coroot basis: D m D^{-1}."""
    n = rs.rank
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            entry = rs.d[r] * m[r][c] / rs.d[c]
            assert entry.denominator == 1, "coroot lattice is not preserved"
            row.append(int(entry))
        out.append(tuple(row))
    return tuple(out)


def _invert_integer_matrix(m) -> tuple[tuple[int, ...], ...]:
    inv = invert_exact([[Q(x) for x in row] for row in m])
    out = []
    for row in inv:
        assert all(x.denominator == 1 for x in row), "matrix inverse is not integral"
        out.append(tuple(int(x) for x in row))
    return tuple(out)


@dataclass(frozen=True)
class AffineWeylElement:
    """w = linear_part o t_trans with trans in coroot coordinates."""

    rs: RootSystem = field(repr=False)
    matrix: tuple[tuple[int, ...], ...]
    trans: tuple[int, ...]

    # -- construction ---------------------------------------------------------

    @staticmethod
    def identity(rs: RootSystem) -> "AffineWeylElement":
        return AffineWeylElement(rs, _identity_matrix(rs.rank), (0,) * rs.rank)

    @staticmethod
    def simple_reflection(rs: RootSystem, i: int) -> "AffineWeylElement":
        if i == 0:
            trans = tuple(-c for c in rs.coroot_marks)
            return AffineWeylElement(rs, _theta_reflection_matrix(rs), trans)
        if not 1 <= i <= rs.rank:
            raise RootSystemError(f"affine generator index {i} out of range 0..{rs.rank}")
        zero = (0,) * rs.rank
        return AffineWeylElement(rs, _simple_reflection_matrix(rs, i - 1), zero)

    @staticmethod
    def from_word(rs: RootSystem, word: Sequence[int]) -> "AffineWeylElement":
        w = AffineWeylElement.identity(rs)
        for i in word:
            w = w.right_multiply(i)
        return w

    # -- group structure ------------------------------------------------------

    def right_multiply(self, i: int) -> "AffineWeylElement":
        """w * s_i, using that the generators are involutions."""
        s = AffineWeylElement.simple_reflection(self.rs, i)
        s_co = _coroot_matrix(self.rs, s.matrix)
        trans = tuple(a + b for a, b in zip(s.trans, _mat_vec(s_co, self.trans)))
        return AffineWeylElement(self.rs, _mat_mul(self.matrix, s.matrix), trans)

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        if self.rs is not other.rs:
            raise RootSystemError("cannot compose elements of different systems")
        inv_lin = _invert_integer_matrix(other.matrix)
        inv_co = _coroot_matrix(self.rs, inv_lin)
        trans = tuple(a + b for a, b in zip(other.trans, _mat_vec(inv_co, self.trans)))
        return AffineWeylElement(self.rs, _mat_mul(self.matrix, other.matrix), trans)

    def inverse(self) -> "AffineWeylElement":
        inv_lin = _invert_integer_matrix(self.matrix)
        lin_co = _coroot_matrix(self.rs, self.matrix)
        trans = tuple(-c for c in _mat_vec(lin_co, self.trans))
        return AffineWeylElement(self.rs, inv_lin, trans)

    @property
    def is_identity(self) -> bool:
        return self.matrix == _identity_matrix(self.rs.rank) and not any(self.trans)

    # -- actions ---------------------------------------------------------------

    def _level_shift(self, finite: Root) -> int:
        """(mu, trans) for mu in root coordinates, trans in coroot coordinates."""
        return sum(z * self.rs.pairing(finite, j) for j, z in enumerate(self.trans))

    def act(self, ar: AffineRoot) -> AffineRoot:
        return AffineRoot(_mat_vec(self.matrix, ar.finite), ar.level - self._level_shift(ar.finite))

    def act_point(self, x: Sequence[Q]) -> Vector:
        """Affine action on the ambient space, x in root coordinates."""
        t = self.translation_root_coords()
        return tuple(Q(c) for c in _mat_vec(self.matrix, [Q(a) + b for a, b in zip(x, t)]))

    def translation_root_coords(self) -> Vector:
        return tuple(Q(z) / self.rs.d[j] for j, z in enumerate(self.trans))

    def act_wall(self, wall: "Wall") -> "Wall":
        """Image of a hyperplane under the affine action."""
        normal = _mat_vec(self.matrix, wall.normal)
        offset = wall.offset + sum(
            z * self.rs.pairing(wall.normal, j) for j, z in enumerate(self.trans)
        )
        return Wall(normal, offset)

    # -- length and inversions --------------------------------------------------

    def inversion_set(self) -> list[AffineRoot]:
        """All positive affine roots sent to negative ones."""
        out = []
        for mu in self.rs.all_roots():
            k_min = 0 if self.rs.is_positive_root(mu) else 1
            c = self._level_shift(mu)
            image_neg = not is_positive_affine(AffineRoot(_mat_vec(self.matrix, mu), 0))
            top = c if image_neg else c - 1
            out.extend(AffineRoot(mu, k) for k in range(k_min, top + 1))
        out.sort(key=lambda ar: (ar.level, ar.finite))
        return out

    def length(self) -> int:
        total = 0
        for mu in self.rs.all_roots():
            k_min = 0 if self.rs.is_positive_root(mu) else 1
            c = self._level_shift(mu)
            image_neg = not is_positive_affine(AffineRoot(_mat_vec(self.matrix, mu), 0))
            top = c if image_neg else c - 1
            total += max(0, top - k_min + 1)
        return total

    def right_descents(self) -> set[int]:
        """{i : l(w s_i) < l(w)}, i.e. simple affine roots made negative by w."""
        return {
            i
            for i, a in enumerate(affine_simple_roots(self.rs))
            if not is_positive_affine(self.act(a))
        }


def word_from_inversion_set(
    rs: RootSystem, roots: Iterable[AffineRoot]
) -> tuple[int, ...]:
    """Recover a reduced word for the element whose inversion set is given.

    Peels one simple affine root per step (preferring index 0), reflecting the
    remainder; the letters are collected in peel order and reversed, so the
    first peeled generator becomes the final letter of the word.  Raises if
    the set is not an inversion set.  This is the pure-Python reference; the
    array kernels in `_kernels` implement the same loop.
    """
    simples = affine_simple_roots(rs)
    gens = [AffineWeylElement.simple_reflection(rs, i) for i in range(rs.rank + 1)]
    root_list = list(roots)
    active = set(root_list)
    if len(active) != len(root_list):
        raise RootSystemError("inversion set contains duplicates")
    peeled: list[int] = []
    while active:
        for i, a in enumerate(simples):
            if a in active:
                break
        else:
            raise RootSystemError("not an inversion set: no simple affine root present")
        active.discard(simples[i])
        active = {gens[i].act(ar) for ar in active}
        if any(not is_positive_affine(ar) for ar in active):
            raise RootSystemError("not an inversion set: reflection produced a negative root")
        peeled.append(i)
    return tuple(reversed(peeled))


# -- alcove geometry ------------------------------------------------------------


class Wall(NamedTuple):
    """The affine hyperplane {x : (x, normal) = offset}."""

    normal: Root
    offset: int

    def normalized(self) -> "Wall":
        """Flip signs so the normal has positive leading nonzero coordinate."""
        lead = next((c for c in self.normal if c != 0), 0)
        if lead < 0:
            return Wall(tuple(-c for c in self.normal), -self.offset)
        return self

    def evaluate(self, rs: RootSystem, x: Sequence[Q]) -> Q:
        return rs.form(x, self.normal) - self.offset


def fundamental_alcove_walls(rs: RootSystem) -> tuple[Wall, ...]:
    """Wall 0 is (theta, 1); wall i >= 1 is (alpha_i, 0)."""
    walls = [Wall(rs.theta, 1)]
    for i in range(rs.rank):
        walls.append(Wall(tuple(1 if j == i else 0 for j in range(rs.rank)), 0))
    return tuple(walls)


@lru_cache(maxsize=None)
def fundamental_alcove_vertices(rs: RootSystem) -> tuple[Vector, ...]:
    """0 together with the fundamental coweights scaled by 1/mark."""
    verts = [tuple(Q(0) for _ in range(rs.rank))]
    coweights = rs.fundamental_coweights()
    for i in range(rs.rank):
        verts.append(tuple(c / rs.theta[i] for c in coweights[i]))
    return tuple(verts)


def is_in_closed_dilated_alcove(rs: RootSystem, x: Sequence[Q], factor: int) -> bool:
    """Membership in the closure of factor * (fundamental alcove)."""
    if any(rs.form(x, a) < 0 for a in rs.simple_roots):
        return False
    return rs.form(x, rs.theta) <= factor

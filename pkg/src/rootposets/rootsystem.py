"""Finite irreducible root systems in the simple-root basis.

Everything is exact: roots are integer coordinate tuples with respect to the
simple roots, the invariant bilinear form is rational and normalized so that
long roots have squared length 2.  The simple-root numbering follows the
convention where the E-series is a chain 1..(rank-1) with the last node
attached to the chain (E6 at node 3, E7 at node 4, E8 at node 5) and F4 is
1-2<=3-4 with alpha_1, alpha_2 short.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterable, Sequence

Root = tuple[int, ...]

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class RootSystemError(ValueError):
    """Raised for inadmissible systems or arguments outside the domain."""


@dataclass(frozen=True, order=True)
class RootSystemId:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_RANGE:
            raise RootSystemError(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise RootSystemError(f"inadmissible rank {self.rank} for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_system_id(spec: str | RootSystemId | tuple[str, int]) -> RootSystemId:
    """Accept 'F4', ('A', 3) or an id and return a validated RootSystemId."""
    if isinstance(spec, RootSystemId):
        return spec
    if isinstance(spec, tuple):
        return RootSystemId(spec[0], int(spec[1]))
    spec = spec.strip()
    if len(spec) < 2 or not spec[0].isalpha():
        raise RootSystemError(f"cannot parse system id {spec!r}")
    family, rank = spec[0].upper(), spec[1:]
    if not rank.isdigit():
        raise RootSystemError(f"cannot parse system id {spec!r}")
    return RootSystemId(family, int(rank))


def _chain_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def _dynkin_edges(family: str, n: int) -> list[tuple[int, int]]:
    """Undirected Dynkin-diagram edges, 0-indexed."""
    if family in "ABCFG":
        return _chain_edges(n)
    if family == "D":
        # chain on 0..n-2, extra node n-1 attached to n-3
        return _chain_edges(n - 1) + [(n - 3, n - 1)]
    # E-series: chain on 0..n-2, last node attached to the branch point
    branch = {6: 2, 7: 3, 8: 4}[n]
    return _chain_edges(n - 1) + [(branch, n - 1)]


def _length_numbers(family: str, n: int) -> tuple[Q, ...]:
    """d_i = (alpha_i, alpha_i)/2 with long roots normalized to length^2 = 2."""
    if family in "ADE":
        return (Q(1),) * n
    if family == "B":
        return (Q(1),) * (n - 1) + (Q(1, 2),)
    if family == "C":
        return (Q(1, 2),) * (n - 1) + (Q(1),)
    if family == "F":
        return (Q(1, 2), Q(1, 2), Q(1), Q(1))
    return (Q(1), Q(1, 3))  # G2: alpha_1 long, alpha_2 short


def cartan_matrix(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry [i][j] = <alpha_j, alpha_i^vee>."""
    d = _length_numbers(family, n)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i, j in _dynkin_edges(family, n):
        # Adjacent simple roots always satisfy (alpha_i, alpha_j) = -max(d_i, d_j):
        # -1 across a long end of a multiple bond, -d for an equal-length bond.
        form = -max(d[i], d[j])
        aij = form / d[i]  # <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)
        aji = form / d[j]
        assert aij.denominator == 1 and aji.denominator == 1
        a[i][j] = int(aij)
        a[j][i] = int(aji)
    return tuple(tuple(row) for row in a)


def _solve_exact(matrix: Sequence[Sequence[Q]], rhs: Sequence[Sequence[Q]]) -> list[list[Q]]:
    """Solve matrix @ X = rhs by fraction-exact Gaussian elimination."""
    n = len(matrix)
    aug = [[Q(x) for x in row] + [Q(x) for x in rrow] for row, rrow in zip(matrix, rhs)]
    width = len(aug[0])
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:width] for row in aug]


def invert_exact(matrix: Sequence[Sequence[Q]]) -> list[list[Q]]:
    n = len(matrix)
    eye = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
    return _solve_exact(matrix, eye)


class RootSystem:
    """A finite irreducible root system, built once and treated as immutable."""

    def __init__(self, system_id: RootSystemId):
        self.id = system_id
        self.family = system_id.family
        self.rank = system_id.rank
        n = self.rank
        self.cartan = cartan_matrix(self.family, n)
        self.d = _length_numbers(self.family, n)
        # Gram matrix (alpha_i, alpha_j) = d_i * cartan[i][j]; must be symmetric.
        self.gram = tuple(
            tuple(self.d[i] * self.cartan[i][j] for j in range(n)) for i in range(n)
        )
        for i in range(n):
            for j in range(n):
                assert self.gram[i][j] == self.gram[j][i], "inconsistent Cartan data"
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
        )
        self.positive_roots = self._generate_positive_roots()
        self.root_index = {r: k for k, r in enumerate(self.positive_roots)}
        assert len(self.root_index) == len(self.positive_roots)

        self.theta = self.positive_roots[-1]
        top_height = self.height(self.theta)
        assert sum(1 for r in self.positive_roots if self.height(r) == top_height) == 1
        assert self.is_dominant(self.theta)
        assert self.norm2(self.theta) == 2

        self.h = top_height + 1
        assert 2 * len(self.positive_roots) == n * self.h

        self.exponents = self._exponents()
        # theta^vee = theta in coroot coordinates: coefficients c_i^vee = d_i c_i.
        marks = [self.d[i] * self.theta[i] for i in range(n)]
        assert all(m.denominator == 1 for m in marks)
        self.coroot_marks = tuple(int(m) for m in marks)
        self.dual_h = 1 + sum(self.coroot_marks)

        self.theta_short = self._dominant_short_root()

    # -- construction -----------------------------------------------------

    def _generate_positive_roots(self) -> tuple[Root, ...]:
        """Closure of the simple roots under root strings, height by height."""
        n = self.rank
        found: set[Root] = set(self.simple_roots)
        layers: list[list[Root]] = [list(self.simple_roots)]
        while layers[-1]:
            nxt: list[Root] = []
            for beta in layers[-1]:
                for i in range(n):
                    down = list(beta)
                    p = 0
                    while True:
                        down[i] -= 1
                        if tuple(down) in found:
                            p += 1
                        else:
                            break
                    if p - self.pairing(beta, i) >= 1:
                        up = list(beta)
                        up[i] += 1
                        cand = tuple(up)
                        if cand not in found:
                            found.add(cand)
                            nxt.append(cand)
            layers.append(nxt)
        return tuple(sorted(found, key=lambda r: (sum(r), r)))

    def _exponents(self) -> tuple[int, ...]:
        """Exponents via the conjugate of the height partition of Δ⁺."""
        counts = [0] * self.h
        for r in self.positive_roots:
            counts[self.height(r)] += 1
        exps = tuple(
            sorted(sum(1 for k in range(1, self.h) if counts[k] >= j) for j in range(1, self.rank + 1))
        )
        assert sum(exps) == len(self.positive_roots)
        return exps

    def _dominant_short_root(self) -> Root:
        shorts = [r for r in self.positive_roots if self.is_dominant(r) and not self.is_long(r)]
        if not shorts:  # simply laced: every root is long and theta_s = theta
            return self.theta
        assert len(shorts) == 1
        return shorts[0]

    # -- pairings ----------------------------------------------------------

    def pairing(self, x: Sequence, i: int):
        """<x, alpha_i^vee> for x in simple-root coordinates."""
        return sum(self.cartan[i][j] * x[j] for j in range(self.rank))

    def form(self, x: Sequence, y: Sequence) -> Q:
        """Invariant bilinear form (x, y), exact."""
        return sum(
            (Q(x[i]) * self.gram[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)),
            Q(0),
        )

    def norm2(self, x: Sequence) -> Q:
        return self.form(x, x)

    def is_long(self, root: Root) -> bool:
        return self.norm2(root) == 2

    def height(self, root: Root) -> int:
        return sum(root)

    def reflect(self, x: Sequence, i: int):
        """Simple reflection s_i(x) = x - <x, alpha_i^vee> alpha_i."""
        if not 0 <= i < self.rank:
            raise RootSystemError(f"simple root index {i} out of range")
        c = self.pairing(x, i)
        return tuple(x[j] - c if j == i else x[j] for j in range(self.rank))

    def is_dominant(self, x: Sequence) -> bool:
        return all(self.pairing(x, i) >= 0 for i in range(self.rank))

    def is_positive_root(self, x: Sequence) -> bool:
        return tuple(x) in self.root_index

    def is_root(self, x: Sequence) -> bool:
        t = tuple(x)
        return t in self.root_index or tuple(-c for c in t) in self.root_index

    def all_roots(self) -> list[Root]:
        return list(self.positive_roots) + [tuple(-c for c in r) for r in self.positive_roots]

    # -- order and ideals helpers ------------------------------------------

    def root_leq(self, beta: Root, gamma: Root) -> bool:
        """beta ⪯ gamma iff gamma - beta has nonnegative integer coordinates."""
        return all(g >= b for b, g in zip(beta, gamma))

    def half_floor(self, gamma: Root) -> Root:
        """Coordinatewise floor of gamma/2; lands in Δ⁺ ∪ {0} for gamma ∈ Δ⁺."""
        if not self.is_positive_root(gamma):
            raise RootSystemError(f"{gamma} is not a positive root")
        half = tuple(c // 2 for c in gamma)
        assert half == (0,) * self.rank or self.is_positive_root(half)
        return half

    # -- diagram data --------------------------------------------------------

    def dynkin_edges(self) -> list[tuple[int, int]]:
        return _dynkin_edges(self.family, self.rank)

    def extended_edges(self) -> list[tuple[int, int]]:
        """Extended diagram on 0..n; node 0 is alpha_0 = delta - theta."""
        edges = [(i + 1, j + 1) for i, j in self.dynkin_edges()]
        for j in range(self.rank):
            if self.form(self.theta, self.simple_roots[j]) != 0:
                edges.append((0, j + 1))
        return sorted(tuple(sorted(e)) for e in edges)

    def extended_form(self, i: int, j: int) -> Q:
        """(alpha_i, alpha_j) on extended indices 0..n (level parts drop out)."""
        vi = tuple(-c for c in self.theta) if i == 0 else self.simple_roots[i - 1]
        vj = tuple(-c for c in self.theta) if j == 0 else self.simple_roots[j - 1]
        return self.form(vi, vj)

    @property
    def short_simple_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.d[i] != 1)

    def fundamental_coweights(self) -> tuple[tuple[Q, ...], ...]:
        """Root coordinates of the fundamental coweights; (pi_i^vee, alpha_j) = delta_ij."""
        inv = invert_exact(self.gram)
        return tuple(tuple(inv[j][i] for j in range(self.rank)) for i in range(self.rank))

    def __repr__(self) -> str:
        return f"RootSystem({self.id})"


@lru_cache(maxsize=None)
def _cached(system_id: RootSystemId) -> RootSystem:
    return RootSystem(system_id)


def root_system(spec: str | RootSystemId | tuple[str, int], rank: int | None = None) -> RootSystem:
    """Factory with caching: root_system('F4'), root_system('A', 3)."""
    if rank is not None:
        if not isinstance(spec, str):
            raise RootSystemError("rank may only be given with a family letter")
        return _cached(RootSystemId(spec.upper(), rank))
    return _cached(parse_system_id(spec))


def admissible_systems(max_rank: int) -> list[RootSystemId]:
    """All admissible systems of rank ≤ max_rank, in deterministic order."""
    out: list[RootSystemId] = []
    for family, (lo, hi) in _RANK_RANGE.items():
        top = min(max_rank, hi) if hi is not None else max_rank
        out.extend(RootSystemId(family, r) for r in range(lo, top + 1))
    return sorted(out)

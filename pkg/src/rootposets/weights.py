"""Weight systems of highest-weight modules and their weight diagrams.

Weights live in fundamental-weight coordinates (integer tuples).  The
multiplicity function comes from the Freudenthal recursion in exact rational
arithmetic; the total dimension is asserted against the Weyl dimension
formula on every construction, so a silently incomplete weight set cannot
survive.  Weight-diagram edges join weights differing by a simple root and
carry multiplicity min of the endpoint multiplicities; the per-type counts
can be recomputed independently through restriction to the sl2 of that
simple root (`sl2_edge_count`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .rootsystem import Root, RootSystem, RootSystemError, invert_exact

Weight = tuple[int, ...]


class WeightEdge(NamedTuple):
    upper: Weight
    lower: Weight
    type_index: int
    multiplicity: int


@lru_cache(maxsize=None)
def _cartan_inverse(rs: RootSystem) -> tuple[tuple[Q, ...], ...]:
    return tuple(tuple(row) for row in invert_exact([[Q(c) for c in row] for row in rs.cartan]))


def _alpha_in_weight_coords(rs: RootSystem, i: int) -> Weight:
    """Fundamental-weight coordinates of alpha_i: column i of the Cartan matrix."""
    return tuple(rs.cartan[j][i] for j in range(rs.rank))


def _to_root_coords(rs: RootSystem, weight: Sequence[int]) -> tuple[Q, ...]:
    inv = _cartan_inverse(rs)
    return tuple(sum(inv[i][j] * weight[j] for j in range(rs.rank)) for i in range(rs.rank))


def _form_weight_root(rs: RootSystem, weight: Sequence, root_coords: Sequence) -> Q:
    """(x, gamma) for x in fundamental-weight and gamma in root coordinates."""
    return sum((Q(weight[j]) * rs.d[j] * root_coords[j] for j in range(rs.rank)), Q(0))


def root_to_weight_coords(rs: RootSystem, root: Root) -> Weight:
    return tuple(rs.pairing(root, i) for i in range(rs.rank))


def dominant_representative(rs: RootSystem, weight: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit."""
    w = weight
    while True:
        neg = next((i for i, c in enumerate(w) if c < 0), None)
        if neg is None:
            return w
        alpha = _alpha_in_weight_coords(rs, neg)
        c = w[neg]
        w = tuple(x - c * a for x, a in zip(w, alpha))


def weyl_dimension(rs: RootSystem, highest: Weight) -> int:
    """Weyl dimension formula, exact."""
    rho = (1,) * rs.rank
    num = Q(1)
    for gamma in rs.positive_roots:
        lam_rho = tuple(h + r for h, r in zip(highest, rho))
        num *= _form_weight_root(rs, lam_rho, gamma) / _form_weight_root(rs, rho, gamma)
    assert num.denominator == 1
    return int(num)


@dataclass(frozen=True)
class WeightSystem:
    rs: RootSystem = field(compare=False, repr=False)
    highest: Weight
    multiplicity: dict[Weight, int] = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return sum(self.multiplicity.values())

    @property
    def weights(self) -> list[Weight]:
        return sorted(self.multiplicity)

    def __contains__(self, weight: Weight) -> bool:
        return weight in self.multiplicity


def weight_system(rs: RootSystem, highest: Weight) -> WeightSystem:
    """All weights of the irreducible module with the given highest weight."""
    highest = tuple(int(c) for c in highest)
    if len(highest) != rs.rank:
        raise RootSystemError("weight has the wrong rank")
    if any(c < 0 for c in highest):
        raise RootSystemError(f"{highest} is not dominant")

    weights = _saturate(rs, highest)
    dominants = sorted(
        (w for w in weights if all(c >= 0 for c in w)),
        key=lambda w: _depth(rs, highest, w),
    )
    mult = _freudenthal(rs, highest, set(weights), dominants)
    full = {w: mult[dominant_representative(rs, w)] for w in weights}
    ws = WeightSystem(rs, highest, full)
    assert ws.dim == weyl_dimension(rs, highest), "multiplicities disagree with Weyl dimension"
    return ws


def _depth(rs: RootSystem, highest: Weight, weight: Weight) -> int:
    """Height of highest - weight as a nonnegative root-lattice element."""
    diff = _to_root_coords(rs, [h - w for h, w in zip(highest, weight)])
    assert all(c.denominator == 1 and c >= 0 for c in diff)
    return int(sum(diff))


def _saturate(rs: RootSystem, highest: Weight) -> set[Weight]:
    """Close {highest} under full alpha_i-strings toward each reflection."""
    alphas = [_alpha_in_weight_coords(rs, i) for i in range(rs.rank)]
    seen = {highest}
    stack = [highest]
    while stack:
        mu = stack.pop()
        for i in range(rs.rank):
            c = mu[i]
            step = -1 if c > 0 else 1
            for k in range(1, abs(c) + 1):
                nu = tuple(x + step * k * a for x, a in zip(mu, alphas[i]))
                if nu not in seen:
                    seen.add(nu)
                    stack.append(nu)
    return seen


def _freudenthal(
    rs: RootSystem, highest: Weight, weights: set[Weight], dominants: list[Weight]
) -> dict[Weight, int]:
    rho = (1,) * rs.rank
    mult: dict[Weight, int] = {highest: 1}
    alphas = [_alpha_in_weight_coords(rs, i) for i in range(rs.rank)]
    gamma_fw = {g: root_to_weight_coords(rs, g) for g in rs.positive_roots}
    for mu in dominants:
        if mu == highest:
            continue
        acc = Q(0)
        for gamma in rs.positive_roots:
            gfw = gamma_fw[gamma]
            k = 1
            while True:
                up = tuple(m + k * a for m, a in zip(mu, gfw))
                if up not in weights:
                    break
                acc += mult[dominant_representative(rs, up)] * _form_weight_root(rs, up, gamma)
                k += 1
        lam_mu = [h - m for h, m in zip(highest, mu)]
        lam_mu_root = _to_root_coords(rs, lam_mu)
        lam_mu_rho = [h + m + 2 for h, m in zip(highest, mu)]
        denom = _form_weight_root(rs, lam_mu_rho, lam_mu_root)
        assert denom > 0, "Freudenthal denominator must be positive below the highest weight"
        value = 2 * acc / denom
        assert value.denominator == 1 and value >= 1
        mult[mu] = int(value)
    return mult


# -- weight diagram -----------------------------------------------------------


def weight_diagram_edges(ws: WeightSystem) -> list[WeightEdge]:
    """Edges (nu+alpha_i, nu) with multiplicity min of endpoint multiplicities."""
    rs = ws.rs
    alphas = [_alpha_in_weight_coords(rs, i) for i in range(rs.rank)]
    edges = []
    for lower in ws.weights:
        for i in range(rs.rank):
            upper = tuple(x + a for x, a in zip(lower, alphas[i]))
            if upper in ws.multiplicity:
                m = min(ws.multiplicity[upper], ws.multiplicity[lower])
                edges.append(WeightEdge(upper, lower, i, m))
    return edges


def edge_type_counts(ws: WeightSystem) -> list[int]:
    """Per-type edge counts, multiplicities included."""
    counts = [0] * ws.rs.rank
    for e in weight_diagram_edges(ws):
        counts[e.type_index] += e.multiplicity
    return counts


def sl2_edge_count(ws: WeightSystem, i: int) -> int:
    """Independent count of type-i edges via restriction to the i-th sl2.

    If the module restricts to sum of n_d copies of the (d+1)-dimensional
    sl2-module, the diagram has sum n_d * d edges of type alpha_i.
    """
    level: Counter[int] = Counter()
    for w, m in ws.multiplicity.items():
        level[w[i]] += m
    total = 0
    top = max(level) if level else 0
    for d in range(1, top + 1):
        n_d = level.get(d, 0) - level.get(d + 2, 0)
        assert n_d >= 0
        total += n_d * d
    return total


def zero_deleted_type_counts(ws: WeightSystem) -> list[int]:
    """Per-type edge counts after deleting the zero weight from the diagram."""
    zero = (0,) * ws.rs.rank
    counts = [0] * ws.rs.rank
    for e in weight_diagram_edges(ws):
        if e.upper != zero and e.lower != zero:
            counts[e.type_index] += e.multiplicity
    return counts


# -- standard modules of interest ---------------------------------------------


def adjoint_weight(rs: RootSystem) -> Weight:
    return root_to_weight_coords(rs, rs.theta)


def short_dominant_weight(rs: RootSystem) -> Weight:
    return root_to_weight_coords(rs, rs.theta_short)


def spin_weight(rs: RootSystem) -> Weight:
    """The B_n spin module: the fundamental weight at the short simple root."""
    if rs.family != "B":
        raise RootSystemError("spin module is a B-family construction")
    return tuple(1 if i == rs.rank - 1 else 0 for i in range(rs.rank))


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    return tuple(1 if j == i else 0 for j in range(rs.rank))

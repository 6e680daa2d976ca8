"""Array kernels for inversion-set peeling.

Peeling is the hot loop of minimal-element computation: the inversion set is
an (m, n+1) int64 array of rows (root coordinates..., level), and each step
removes one simple affine root and reflects the rest.  Generator j acts on a
row r as ``r -= (g[j] . r) * u[j]`` for precomputed integer vectors g, u, so
a step is one mat-vec plus a rank-one update.

Two implementations of the same loop are provided: a numba-compiled one and a
pure-NumPy one.  `peel` dispatches to numba when it is importable and the
environment variable ROOTPOSETS_PURE_NUMPY is unset/"0", and to NumPy
otherwise.  Both return the peeled generator indices in peel order (callers
reverse to obtain the reduced word).
"""

from __future__ import annotations

import os

import numpy as np

from .rootsystem import RootSystem

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    njit = None
    HAS_NUMBA = False


class PeelError(ValueError):
    """The given rows do not form the inversion set of any element."""


def kernel_backend() -> str:
    if HAS_NUMBA and os.environ.get("ROOTPOSETS_PURE_NUMPY", "0") in ("", "0"):
        return "numba"
    return "numpy"


def peel_tables(rs: RootSystem) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(gvecs, uvecs, simples) for the n+1 affine generators, shape (n+1, n+1).

    Generator j >= 1 has g = (row j of the Cartan matrix, 0) and u = e_j;
    generator 0 reflects in theta and shifts the level: g = (theta pairing
    row, 0), u = (theta, -1).
    """
    n = rs.rank
    gvecs = np.zeros((n + 1, n + 1), dtype=np.int64)
    uvecs = np.zeros((n + 1, n + 1), dtype=np.int64)
    simples = np.zeros((n + 1, n + 1), dtype=np.int64)
    cm = rs.coroot_marks
    for c in range(n):
        gvecs[0, c] = sum(rs.cartan[j][c] * cm[j] for j in range(n))
        uvecs[0, c] = rs.theta[c]
        simples[0, c] = -rs.theta[c]
    uvecs[0, n] = -1
    simples[0, n] = 1
    for j in range(1, n + 1):
        gvecs[j, :n] = rs.cartan[j - 1]
        uvecs[j, j - 1] = 1
        simples[j, j - 1] = 1
    return gvecs, uvecs, simples


def peel_numpy(rows: np.ndarray, gvecs: np.ndarray, uvecs: np.ndarray, simples: np.ndarray) -> np.ndarray:
    m, width = rows.shape
    n_gen = simples.shape[0]
    word = np.empty(m, dtype=np.int64)
    active = rows.astype(np.int64, copy=True)
    for step in range(m):
        for j in range(n_gen):
            hits = np.nonzero((active == simples[j]).all(axis=1))[0]
            if hits.size:
                break
        else:
            raise PeelError("no simple affine root in the remaining set")
        word[step] = j
        active[hits[0]] = active[-1]
        active = active[:-1]
        if active.size:
            dots = active @ gvecs[j]
            active = active - dots[:, None] * uvecs[j][None, :]
    return word


def _peel_loop(rows, gvecs, uvecs, simples, word):
    m, width = rows.shape
    n_gen = simples.shape[0]
    count = m
    for step in range(m):
        found = -1
        hit = -1
        for j in range(n_gen):
            for r in range(count):
                ok = True
                for c in range(width):
                    if rows[r, c] != simples[j, c]:
                        ok = False
                        break
                if ok:
                    found = j
                    hit = r
                    break
            if found >= 0:
                break
        if found < 0:
            return step
        word[step] = found
        count -= 1
        for c in range(width):
            rows[hit, c] = rows[count, c]
        for r in range(count):
            dot = 0
            for c in range(width):
                dot += gvecs[found, c] * rows[r, c]
            if dot != 0:
                for c in range(width):
                    rows[r, c] -= dot * uvecs[found, c]
    return m


if HAS_NUMBA:
    _peel_loop_numba = njit(cache=True)(_peel_loop)


def peel_numba(rows: np.ndarray, gvecs: np.ndarray, uvecs: np.ndarray, simples: np.ndarray) -> np.ndarray:
    if not HAS_NUMBA:  # pragma: no cover - depends on environment
        raise RuntimeError("numba is not available")
    work = rows.astype(np.int64, copy=True)
    word = np.empty(work.shape[0], dtype=np.int64)
    done = _peel_loop_numba(work, np.ascontiguousarray(gvecs), np.ascontiguousarray(uvecs), np.ascontiguousarray(simples), word)
    if done != work.shape[0]:
        raise PeelError("no simple affine root in the remaining set")
    return word


def peel(rows: np.ndarray, gvecs: np.ndarray, uvecs: np.ndarray, simples: np.ndarray) -> np.ndarray:
    if kernel_backend() == "numba":
        return peel_numba(rows, gvecs, uvecs, simples)
    return peel_numpy(rows, gvecs, uvecs, simples)

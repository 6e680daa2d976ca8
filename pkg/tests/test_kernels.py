import numpy as np
import pytest

from rootposets import _kernels
from rootposets.affine import AffineWeylElement, word_from_inversion_set
from rootposets.ideals import (
    enumerate_upper_ideals,
    sample_ideals,
    target_inversion_rows,
)
from rootposets.rootsystem import root_system

BACKENDS = ["numpy"] + (["numba"] if _kernels.HAS_NUMBA else [])


def peel_fn(backend):
    return _kernels.peel_numba if backend == "numba" else _kernels.peel_numpy


def test_backend_dispatch_env_flag(monkeypatch):
    monkeypatch.setenv("ROOTPOSETS_PURE_NUMPY", "1")
    assert _kernels.kernel_backend() == "numpy"
    monkeypatch.setenv("ROOTPOSETS_PURE_NUMPY", "0")
    assert _kernels.kernel_backend() == ("numba" if _kernels.HAS_NUMBA else "numpy")
    monkeypatch.delenv("ROOTPOSETS_PURE_NUMPY")
    assert _kernels.kernel_backend() == ("numba" if _kernels.HAS_NUMBA else "numpy")


def test_peel_tables_shapes(small_system):
    n = small_system.rank
    gvecs, uvecs, simples = _kernels.peel_tables(small_system)
    for arr in (gvecs, uvecs, simples):
        assert arr.shape == (n + 1, n + 1)
        assert arr.dtype == np.int64
    # finite generators carry Cartan rows and unit vectors
    for j in range(1, n + 1):
        assert list(gvecs[j, :n]) == list(small_system.cartan[j - 1])
        assert uvecs[j, j - 1] == 1 and uvecs[j].sum() == 1
    assert simples[0, n] == 1


@pytest.mark.parametrize("backend", BACKENDS)
def test_peel_matches_reference_word(backend, small_system):
    rs = small_system
    tables = _kernels.peel_tables(rs)
    fn = peel_fn(backend)
    for ideal in enumerate_upper_ideals(rs):
        rows = target_inversion_rows(ideal)
        peeled = fn(rows, *tables)
        word = tuple(int(x) for x in peeled.tolist()[::-1])
        element = AffineWeylElement.from_word(rs, word)
        inv = element.inversion_set()
        assert len(inv) == rows.shape[0]
        got = sorted(tuple(r) for r in rows.tolist())
        want = sorted(tuple(ar.finite) + (ar.level,) for ar in inv)
        assert got == want


@pytest.mark.skipif(not _kernels.HAS_NUMBA, reason="numba unavailable")
def test_backends_agree_on_samples():
    for name in ("D4", "F4", "E6"):
        rs = root_system(name)
        tables = _kernels.peel_tables(rs)
        for ideal in sample_ideals(rs, 40):
            rows = target_inversion_rows(ideal)
            a = _kernels.peel_numpy(rows, *tables)
            b = _kernels.peel_numba(rows, *tables)
            assert a.tolist() == b.tolist()


@pytest.mark.parametrize("backend", BACKENDS)
def test_peel_rejects_non_inversion_set(backend):
    rs = root_system("A2")
    tables = _kernels.peel_tables(rs)
    # theta alone at level 0: no simple affine root ever appears
    rows = np.array([[1, 1, 0]], dtype=np.int64)
    with pytest.raises(_kernels.PeelError):
        peel_fn(backend)(rows, *tables)


@pytest.mark.parametrize("backend", BACKENDS)
def test_peel_does_not_mutate_input(backend):
    rs = root_system("B3")
    ideal = enumerate_upper_ideals(rs)[5]
    rows = target_inversion_rows(ideal)
    before = rows.copy()
    peel_fn(backend)(rows, *_kernels.peel_tables(rs))
    assert np.array_equal(rows, before)


def test_peel_word_matches_pure_python_reference():
    rs = root_system("C3")
    tables = _kernels.peel_tables(rs)
    for ideal in sample_ideals(rs, 20):
        rows = target_inversion_rows(ideal)
        word = tuple(int(x) for x in _kernels.peel(rows, *tables).tolist()[::-1])
        element = AffineWeylElement.from_word(rs, word)
        reference = word_from_inversion_set(rs, element.inversion_set())
        assert AffineWeylElement.from_word(rs, reference) == element
        assert len(reference) == len(word)

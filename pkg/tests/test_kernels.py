"""Both kernel backends against numpy.linalg and against each other."""

import numpy as np
import pytest

from compoundnorms import available_backends
from compoundnorms.compound import subset_table
from compoundnorms.config import DEFAULTS

from conftest import random_complex

BACKENDS = available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def K(request):
    return BACKENDS[request.param]


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


def test_backend_names():
    for name, mod in BACKENDS.items():
        assert mod.NAME == name


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 20])
def test_lu_det_matches_numpy(K, rng, n):
    a = random_complex(rng, n)
    assert rel(K.lu_det(a), np.linalg.det(a)) < 1e-12 * max(1, abs(np.linalg.det(a)))


def test_lu_det_singular_and_pivoting(K):
    assert K.lu_det(np.zeros((3, 3), complex)) == 0
    # zero leading pivot forces a row swap
    a = np.array([[0, 1], [1, 0]], dtype=complex)
    assert K.lu_det(a) == -1


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 2), (7, 4)])
def test_minors_match_numpy(K, rng, n, k):
    a = random_complex(rng, n)
    t = subset_table(n, k)
    got = K.minors(a, t, t)
    want = np.array([[np.linalg.det(a[np.ix_(r, c)]) for c in t] for r in t])
    assert np.abs(got - want).max() < 1e-12 * max(1, np.abs(want).max())


def test_minors_rectangular_tables(K, rng):
    a = random_complex(rng, 5)
    rows, cols = subset_table(5, 2)[:3], subset_table(5, 2)[4:]
    got = K.minors(a, rows, cols)
    assert got.shape == (3, len(cols))
    assert abs(got[1, 2] - np.linalg.det(a[np.ix_(rows[1], cols[2])])) < 1e-13


def test_hessenberg_form(K, rng):
    a = random_complex(rng, 7)
    h = K.hessenberg(a)
    assert np.abs(np.tril(h, -2)).max() == 0
    np.testing.assert_allclose(np.sort_complex(np.linalg.eigvals(h)), np.sort_complex(np.linalg.eigvals(a)), atol=1e-10)


@pytest.mark.parametrize("n", [1, 2, 3, 6, 10, 35])
def test_qr_eigenvalues_match_numpy(K, rng, n):
    a = random_complex(rng, n)
    vals, iters, ok = K.hessenberg_eigvals(a, DEFAULTS.deflation, DEFAULTS.qr_sweeps_per_n)
    assert ok and iters <= DEFAULTS.qr_sweeps_per_n * n
    want = np.linalg.eigvals(a)
    # match each computed eigenvalue to its nearest reference value
    for z in want:
        assert np.min(np.abs(vals - z)) < 1e-10 * max(1, abs(z))


def test_qr_cyclic_permutation_converges(K):
    # the Wilkinson shift alone stalls on a cyclic shift; exceptional shifts rescue it
    n = 6
    p = np.roll(np.eye(n), 1, axis=0).astype(complex)
    vals, _, ok = K.hessenberg_eigvals(p, DEFAULTS.deflation, DEFAULTS.qr_sweeps_per_n)
    assert ok
    np.testing.assert_allclose(np.abs(vals), 1, atol=1e-12)
    np.testing.assert_allclose(np.prod(vals), np.linalg.det(p), atol=1e-12)


def test_qr_zero_matrix(K):
    vals, _, ok = K.hessenberg_eigvals(np.zeros((4, 4), complex), DEFAULTS.deflation, DEFAULTS.qr_sweeps_per_n)
    assert ok and np.all(vals == 0)


@pytest.mark.parametrize("n", [1, 2, 5, 21, 35])
def test_jacobi_matches_numpy(K, rng, n):
    g = random_complex(rng, n)
    b = g.conj().T @ g
    w, v, sweeps, ok = K.jacobi_eigh(b, DEFAULTS.jacobi, DEFAULTS.jacobi_max_sweeps)
    assert ok
    np.testing.assert_allclose(np.sort(w), np.linalg.eigvalsh(b), rtol=0, atol=1e-11 * np.abs(b).max())
    np.testing.assert_allclose(v.conj().T @ v, np.eye(n), atol=1e-12)
    np.testing.assert_allclose((v * w) @ v.conj().T, b, atol=1e-11 * np.abs(b).max())


def test_backends_agree(rng):
    if len(BACKENDS) < 2:
        pytest.skip("compiled extension not built")
    c, p = BACKENDS["cython"], BACKENDS["python"]
    a = random_complex(rng, 6)
    t = subset_table(6, 3)
    np.testing.assert_allclose(c.minors(a, t, t), p.minors(a, t, t), rtol=0, atol=1e-12)
    assert abs(c.lu_det(a) - p.lu_det(a)) <= 1e-13 * abs(p.lu_det(a))
    big = random_complex(rng, 35)
    d1, d2 = c.lu_det(big), p.lu_det(big)
    assert abs(d1 - d2) <= 1e-11 * abs(d2)

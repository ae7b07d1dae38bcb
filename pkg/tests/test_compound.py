from math import comb

import numpy as np
import pytest

from compoundnorms import DomainError, ResourceError
from compoundnorms.compound import (
    SubsetLex,
    adjugate,
    compound,
    compound_l2_norm_fast,
    exchange_matrix,
    sign_matrix,
    submatrix,
    subset_table,
    subsets_lex,
)
from compoundnorms.extremal import fourier
from compoundnorms.linalg import NormKind, determinant, eigenvalues, op_norm

from conftest import random_complex

# integer matrix whose minors were computed with numpy.linalg.det (frozen)
A3 = np.array([[2, -1, 0], [1, 3, 4], [0, 5, -2]], dtype=complex)
C2_A3 = [[7, 8, -4], [10, -4, 2], [5, -2, -26]]
ADJ_A3 = [[-26, -2, -4], [2, -4, -8], [5, -10, 7]]


def test_subsets_lex_examples():
    assert [s.members for s in subsets_lex(3, 2)] == [(1, 2), (1, 3), (2, 3)]
    assert [s.members for s in subsets_lex(4, 1)] == [(1,), (2,), (3,), (4,)]
    assert len(subsets_lex(5, 3)) == 10
    for bad in [(3, 0), (3, 4)]:
        with pytest.raises(DomainError):
            subsets_lex(*bad)


@pytest.mark.parametrize("n", range(1, 9))
def test_rank_unrank_roundtrip(n):
    for k in range(1, n + 1):
        for r, s in enumerate(subsets_lex(n, k)):
            assert s.rank() == r
            assert SubsetLex.unrank(n, k, r) == s


def test_subset_validation_and_str():
    with pytest.raises(DomainError):
        SubsetLex(3, (2, 1))
    with pytest.raises(DomainError):
        SubsetLex(3, (1, 4))
    with pytest.raises(DomainError):
        SubsetLex.unrank(4, 2, 6)
    assert str(SubsetLex(5, (1, 3))) == "{1,3}"
    assert SubsetLex(5, (2, 4)).indices.tolist() == [1, 3]


def test_subset_table_matches_subsets():
    t = subset_table(5, 3)
    assert not t.flags.writeable
    assert [tuple(r + 1) for r in t] == [s.members for s in subsets_lex(5, 3)]


def test_submatrix_examples(rng):
    s13 = SubsetLex(3, (1, 3))
    np.testing.assert_array_equal(submatrix(np.eye(3), s13, s13), np.eye(2))
    a = np.arange(9).reshape(3, 3)
    np.testing.assert_array_equal(submatrix(a, SubsetLex(3, (1, 2)), SubsetLex(3, (2, 3))), [[1, 2], [4, 5]])
    b = random_complex(rng, 4)
    full = SubsetLex(4, (1, 2, 3, 4))
    np.testing.assert_array_equal(submatrix(b, full, full), b)
    with pytest.raises(DomainError):
        submatrix(np.eye(2), SubsetLex(3, (1, 3)), SubsetLex(3, (1, 2)))


def test_compound_examples(rng):
    np.testing.assert_allclose(compound(np.eye(3), 2).matrix, np.eye(3))
    np.testing.assert_allclose(compound(np.array([[1, 1], [1, -1]]), 2).matrix, [[-2]])
    np.testing.assert_allclose(compound(A3, 2).matrix, C2_A3, atol=1e-13)
    a = random_complex(rng, 5)
    c = compound(a, 5)
    assert c.matrix.shape == (1, 1) and c.matrix[0, 0] == determinant(a)
    np.testing.assert_array_equal(compound(a, 1).matrix, a)
    cm = compound(a, 3)
    assert cm.size == 10 and cm.base_n == 5
    alpha, beta = SubsetLex(5, (1, 2, 4)), SubsetLex(5, (2, 3, 5))
    assert abs(cm.entry(alpha, beta) - np.linalg.det(a[np.ix_(alpha.indices, beta.indices)])) < 1e-13
    np.testing.assert_array_equal(np.asarray(cm), cm.matrix)


def test_compound_errors(monkeypatch):
    with pytest.raises(DomainError):
        compound(np.eye(3), 0)
    with pytest.raises(DomainError):
        compound(np.eye(3), 4)
    with pytest.raises(ResourceError, match="C\\(16,8\\)=12870"):
        compound(np.eye(16), 8)
    monkeypatch.setenv("COMPOUNDNORMS_MAX_COMPOUND", "5")
    with pytest.raises(ResourceError):
        compound(np.eye(4), 2)
    monkeypatch.setenv("COMPOUNDNORMS_MAX_COMPOUND", "6")
    assert compound(np.eye(4), 2).size == 6


def test_diagonal_compound(rng):
    r = rng.uniform(0.5, 2, size=5)
    c = compound(np.diag(r), 3).matrix
    want = [np.prod(r[list(s.indices)]) for s in subsets_lex(5, 3)]
    np.testing.assert_allclose(c, np.diag(want), atol=1e-14)


def test_cauchy_binet(rng):
    for n in range(1, 7):
        a, b = random_complex(rng, n), random_complex(rng, n)
        for k in range(1, n + 1):
            lhs = compound(a @ b, k).matrix
            rhs = compound(a, k).matrix @ compound(b, k).matrix
            assert np.linalg.norm(lhs - rhs) <= 1e-8 * max(1, np.linalg.norm(rhs))


def test_compound_l2_fast(rng):
    u, _ = np.linalg.qr(random_complex(rng, 3))
    v, _ = np.linalg.qr(random_complex(rng, 3))
    a = u @ np.diag([3.0, 2.0, 1.0]) @ v.conj().T
    assert abs(compound_l2_norm_fast(a, 2) - 6) < 1e-12
    assert abs(compound_l2_norm_fast(np.eye(4), 2) - 1) < 1e-14
    b = random_complex(rng, 5)
    assert abs(compound_l2_norm_fast(b, 5) - abs(determinant(b))) < 1e-12 * abs(determinant(b))
    for k in range(1, 6):
        assert abs(compound_l2_norm_fast(b, k) - op_norm(compound(b, k).matrix, NormKind.L2)) < 1e-10


def test_spectral_correspondence(rng):
    for n in range(2, 7):
        a = random_complex(rng, n)
        lam = eigenvalues(a)
        for k in range(1, n + 1):
            rho = abs(eigenvalues(compound(a, k).matrix)[0])
            want = abs(np.prod(lam[:k]))
            assert abs(rho - want) <= 1e-7 * max(1, want)


def test_sign_and_exchange():
    np.testing.assert_array_equal(sign_matrix(3), np.diag([1, -1, 1]))
    np.testing.assert_array_equal(exchange_matrix(3) @ np.arange(3), [2, 1, 0])


def test_adjugate_examples(rng):
    np.testing.assert_allclose(adjugate(np.diag([2.0, 3.0])), np.diag([3.0, 2.0]))
    np.testing.assert_allclose(adjugate(np.eye(4)), np.eye(4), atol=1e-15)
    np.testing.assert_allclose(adjugate(A3), ADJ_A3, atol=1e-12)
    a = random_complex(rng, 4)
    d = determinant(a)
    assert np.linalg.norm(adjugate(a) @ a - d * np.eye(4)) < 1e-8 * abs(d)
    with pytest.raises(DomainError):
        adjugate(np.eye(1))


@pytest.mark.parametrize("n", range(2, 8))
def test_unimodular_compound_identity(n):
    # lexicographic order reverses the (n-1)-subsets, hence the exchange matrix J
    a = fourier(n)
    d, j = sign_matrix(n), exchange_matrix(n)
    want = (determinant(a) / n) * j @ d @ a.conj() @ d @ j
    got = compound(a, n - 1).matrix
    assert np.linalg.norm(got - want) <= 1e-8 * max(1, np.linalg.norm(want))
    assert comb(n, n - 1) == got.shape[0]

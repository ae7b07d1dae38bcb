import math
from math import comb

import numpy as np
import pytest

from compoundnorms import DimensionError, DomainError
from compoundnorms.bounds import (
    Side,
    ThetaKind,
    ThetaValue,
    column_compound_l1_bound,
    compound_norm_bound,
    eig_coefficient,
    eig_product_lower,
    eig_product_upper,
    h,
    is_singular,
    max_subset_norm_product,
    theta,
    theta_dominance_check,
)
from compoundnorms.compound import SubsetLex, compound
from compoundnorms.extremal import fourier, random_monomial, theta2_extremal
from compoundnorms.linalg import ALL_NORMS, NormKind, eigenvalues
from compoundnorms.verify import oracle_subset_max

from conftest import random_complex

L1, L2, LI = NormKind.L1, NormKind.L2, NormKind.LINF


def test_theta_examples():
    assert theta(L1, L1, 5, 3) == ThetaValue(ThetaKind.EXACT, 1.0)
    assert theta(L2, L2, 4, 2) == ThetaValue(ThetaKind.EXACT, 2.0)
    t = theta(LI, LI, 3, 2)
    assert t.kind is ThetaKind.EXACT and abs(t.value - 3**1.5) < 1e-14
    t = theta(LI, LI, 5, 2)
    assert t.kind is ThetaKind.UPPER_BOUND and abs(t.value - 10 * math.sqrt(3)) < 1e-13


def test_theta_linf_k1_and_n2_agree():
    for n in range(2, 8):
        assert theta(LI, LI, n, 1).value == n
    # n=2, k=1=n-1: both closed forms give 2
    assert theta(LI, LI, 2, 1).value == 2 == 2 ** (2 / 2)


def test_theta_cells():
    n, k = 6, 3
    assert theta(L1, L2, n, k) == ThetaValue(ThetaKind.UPPER_BOUND, n ** (k / 2))
    assert theta(L1, LI, n, k).value == n**k
    assert theta(L2, L1, n, k).value == (n / k) ** (k / 2)
    assert abs(theta(L2, LI, n, k).value - (n / k) ** (k / 2) * n ** (k / 2)) < 1e-12
    assert abs(theta(LI, L1, n, k).value - comb(n, k) * (k + 1)) < 1e-12
    assert theta(LI, L2, n, n).value == n ** (n / 2)
    for mu in ALL_NORMS:
        for nu in ALL_NORMS:
            if (mu, nu) not in [(L1, L1), (L2, L2), (LI, LI)]:
                assert not theta(mu, nu, n, 2).exact


def test_theta_errors():
    for n, k in [(3, 0), (3, 4), (0, 0)]:
        with pytest.raises(DomainError):
            theta(L1, L1, n, k)
    with pytest.raises(DomainError):
        ThetaValue(ThetaKind.EXACT, 0.0)
    with pytest.raises(DomainError):
        ThetaValue(ThetaKind.EXACT, math.inf)


def test_max_subset_examples():
    d = np.diag([3.0, 2.0, 1.0])
    assert max_subset_norm_product(d, 2, L1, Side.COLUMNS) == 6
    for nu in ALL_NORMS:
        for side in (Side.COLUMNS, Side.ROWS):
            assert max_subset_norm_product(np.eye(4), 2, nu, side) == 1
    assert abs(max_subset_norm_product(np.ones((2, 2)), 2, L2) - 2) < 1e-15
    with pytest.raises(DomainError):
        max_subset_norm_product(d, 2, L1, Side.MIN_OF_BOTH)


def test_subset_oracle_bitwise(rng):
    tied = np.array([[1, 1, 1], [2, 2, 2], [0.5, 0.5, 0.5]], dtype=complex)
    for nu in ALL_NORMS:
        assert max_subset_norm_product(tied, 2, nu) == oracle_subset_max(tied, 2, nu)
    for _ in range(10):
        a = random_complex(rng, 6)
        for k in range(1, 7):
            for nu in ALL_NORMS:
                for side in (Side.COLUMNS, Side.ROWS):
                    assert max_subset_norm_product(a, k, nu, side) == oracle_subset_max(a, k, nu, side)


def test_compound_norm_bound_monomial_tight(rng):
    for n in range(2, 7):
        a = random_monomial(n, rng)
        for k in range(1, n + 1):
            r = compound_norm_bound(a, k, L1, L1)
            assert r.tight and abs(r.ratio - 1) < 1e-10


def test_compound_norm_bound_psd_extremal():
    r = compound_norm_bound(theta2_extremal(4, 2), 2, L2, L2)
    assert abs(r.quantity - 2) < 1e-10 and abs(r.bound - 2) < 1e-10 and r.tight


def test_compound_norm_bound_strict_l2(rng):
    for n in range(2, 7):
        a = random_complex(rng, n)
        for k in range(1, n):
            assert compound_norm_bound(a, k, L2, L2).ratio < 1 - 1e-10


def test_compound_norm_bound_sound(rng):
    for n in range(2, 6):
        for _ in range(5):
            a = random_complex(rng, n)
            for k in range(1, n + 1):
                for mu in ALL_NORMS:
                    for nu in ALL_NORMS:
                        assert compound_norm_bound(a, k, mu, nu).holds(1e-8)


def test_zero_column_still_holds(rng):
    a = random_complex(rng, 4)
    a[:, 2] = 0
    for k in range(1, 5):
        for mu in ALL_NORMS:
            for nu in ALL_NORMS:
                assert compound_norm_bound(a, k, mu, nu).holds(1e-8)


def test_bound_report_dict():
    r = compound_norm_bound(fourier(4), 3, LI, LI)
    d = r.to_dict()
    assert d["quantity"] == 16 or abs(d["quantity"] - 16) < 1e-12
    assert abs(d["bound"] - 16) < 1e-12 and d["theta"] == {"kind": "Exact", "value": 16.0}
    assert d["side"] == "Columns" and d["rows"] is None and d["tight"] is True
    zero = compound_norm_bound(np.zeros((2, 2)), 2, L1, L1)
    assert zero.ratio is None and zero.holds(1e-8)


def test_column_compound_l1_examples():
    p = np.eye(4)[:, [2, 0, 3, 1]]
    for beta in [SubsetLex(4, (1, 2)), SubsetLex(4, (2, 4))]:
        lhs, rhs, eq, disjoint = column_compound_l1_bound(p, 2, beta)
        assert eq and disjoint and lhs == rhs == 1
    assert column_compound_l1_bound(np.ones((3, 3)), 2, SubsetLex(3, (1, 2))) == (0.0, 9.0, False, False)
    lhs, rhs, eq, _ = column_compound_l1_bound(np.eye(3), 2, SubsetLex(3, (1, 2)))
    assert lhs == rhs == 1 and eq
    with pytest.raises(DimensionError):
        column_compound_l1_bound(np.eye(3), 2, SubsetLex(4, (1, 2)))


def test_eig_upper_examples():
    r = eig_product_upper(np.diag([3.0, 2.0]), 1, L1)
    assert r.quantity == 3 and r.bound == 3 and r.tight
    f = fourier(4)
    assert abs(eig_product_upper(f, 2, L1).bound - 16) < 1e-9
    r2 = eig_product_upper(f, 2, L2)
    assert abs(r2.bound - 8) < 1e-9 and abs(r2.quantity - 4) < 1e-9
    for n in range(2, 6):
        for k in range(1, n + 1):
            r = eig_product_upper(theta2_extremal(n, k), k, L2)
            assert abs(r.quantity - (n / k) ** (k / 2)) < 1e-8 and abs(r.bound - (n / k) ** (k / 2)) < 1e-8


def test_eig_upper_winner_rows():
    a = np.array([[1, 0], [5, 1]], dtype=complex)
    r = eig_product_upper(a, 1, L1)
    # column sums (6, 1), row sums (1, 6): tie goes to columns
    assert r.columns == r.rows == 6 and r.winner is Side.COLUMNS
    b = np.array([[1, 3], [1, 3]], dtype=complex)
    r = eig_product_upper(b, 1, L1)
    assert r.rows < r.columns and r.winner is Side.ROWS


def test_eig_coefficients():
    n, k = 5, 2
    assert eig_coefficient(L1, n, k).value == 1
    assert abs(eig_coefficient(L2, n, k).value - (n / k) ** (k / 2)) < 1e-14
    assert abs(eig_coefficient(LI, n, k).value - (n / k) ** (k / 2) * n ** (k / 2)) < 1e-12


def test_eig_lower_examples(rng):
    assert abs(eig_product_lower(np.diag([3.0, 2.0, 1.0]), 1, L1) - 2) < 1e-14
    for k in range(1, 4):
        assert abs(eig_product_lower(np.eye(4), k, L1) - 1) < 1e-14
    a = random_complex(rng, 5)
    lam = eigenvalues(a)
    assert eig_product_lower(a, 2, L2) <= abs(np.prod(lam[2:])) * (1 + 1e-7)
    with pytest.raises(DomainError, match="nonsingular"):
        eig_product_lower(np.ones((3, 3)), 1, L1)
    with pytest.raises(DomainError):
        eig_product_lower(np.eye(3), 3, L1)
    assert is_singular(np.ones((3, 3))) and not is_singular(a)


def test_transpose_symmetry(rng):
    a = random_complex(rng, 5)
    for k in range(1, 6):
        for norm in ALL_NORMS:
            q, qt = eig_product_upper(a, k, norm).quantity, eig_product_upper(a.T, k, norm).quantity
            assert abs(q - qt) <= 1e-8 * max(1, q)


def test_h_examples():
    for n in range(2, 65):
        assert abs(h(1, n) - 1) <= 1e-15
    assert abs(h(2, 3) - 0.8660254037844386) < 1e-15
    for n in range(2, 13):
        for k in range(1, n):
            assert h(k, n) <= 1 + 1e-12
            if k + 1 < n + 1:
                ratio = (n * math.sqrt(k + 2) / (math.sqrt(k) * (n + 1))) ** k
                assert abs(h(k, n) / h(k + 1, n + 1) - ratio) <= 1e-12 * ratio
    for k, n in [(3, 3), (0, 3), (4, 3)]:
        with pytest.raises(DomainError):
            h(k, n)


def test_theta_dominance():
    assert theta_dominance_check(3, 2)
    assert theta_dominance_check(10, 1)
    assert all(theta_dominance_check(n, k) for n in range(2, 13) for k in range(1, n))
    with pytest.raises(DomainError):
        theta_dominance_check(3, 3)


@pytest.mark.slow
def test_soundness_200_per_n():
    from compoundnorms.verify import MatrixClass, sample_matrix, sample_rng

    g = MatrixClass.GAUSSIAN_COMPLEX
    for n in range(2, 8):
        for i in range(200):
            a = sample_matrix(g, n, sample_rng(99, g, n, i))
            spec = eigenvalues(a)
            for k in range(1, n + 1):
                c = compound(a, k).matrix
                for mu in ALL_NORMS:
                    for nu in ALL_NORMS:
                        assert compound_norm_bound(a, k, mu, nu, _compound=c).holds(1e-8)
                for norm in ALL_NORMS:
                    assert eig_product_upper(a, k, norm, _spectrum=spec).holds(1e-7)
                    if k < n:
                        low = eig_product_lower(a, k, norm, _spectrum=spec)
                        assert low <= abs(np.prod(spec[k:])) + 1e-7

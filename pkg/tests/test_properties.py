"""Property-based checks: hypothesis draws sizes and seeds, numpy draws the matrices."""

import numpy as np
from hypothesis import given, settings, strategies as st

from compoundnorms.bounds import Side, compound_norm_bound, eig_product_upper, max_subset_norm_product
from compoundnorms.compound import SubsetLex, adjugate, compound
from compoundnorms.linalg import ALL_NORMS, NormKind, determinant, eigenvalues, op_norm, vec_norm
from compoundnorms.verify import oracle_subset_max

from conftest import random_complex

seeds = st.integers(min_value=0, max_value=2**32 - 1)
sizes = st.integers(min_value=2, max_value=6)


def matrix(n, seed):
    return random_complex(np.random.default_rng(seed), n)


@st.composite
def subsets(draw, n):
    k = draw(st.integers(1, n))
    return SubsetLex(n, sorted(draw(st.sets(st.integers(1, n), min_size=k, max_size=k))))


@settings(max_examples=40, deadline=None)
@given(sizes, seeds, st.data())
def test_rank_roundtrip(n, seed, data):
    s = data.draw(subsets(n))
    assert SubsetLex.unrank(n, s.k, s.rank()) == s


@settings(max_examples=40, deadline=None)
@given(sizes, seeds, st.data())
def test_compound_bound_sound(n, seed, data):
    a = matrix(n, seed)
    k = data.draw(st.integers(1, n))
    mu, nu = data.draw(st.sampled_from(ALL_NORMS)), data.draw(st.sampled_from(ALL_NORMS))
    assert compound_norm_bound(a, k, mu, nu).holds(1e-8)


@settings(max_examples=40, deadline=None)
@given(sizes, seeds, st.data())
def test_eig_bounds_ordered_and_sound(n, seed, data):
    a = matrix(n, seed)
    k = data.draw(st.integers(1, n))
    spec = eigenvalues(a)
    reports = {p: eig_product_upper(a, k, p, _spectrum=spec) for p in ALL_NORMS}
    assert all(r.holds(1e-7) for r in reports.values())
    assert reports[NormKind.LINF].bound >= reports[NormKind.L2].bound * (1 - 1e-12)


@settings(max_examples=30, deadline=None)
@given(sizes, seeds, seeds, st.data())
def test_cauchy_binet(n, s1, s2, data):
    a, b = matrix(n, s1), matrix(n, s2)
    k = data.draw(st.integers(1, n))
    lhs = compound(a @ b, k).matrix
    rhs = compound(a, k).matrix @ compound(b, k).matrix
    assert np.linalg.norm(lhs - rhs) <= 1e-8 * max(1, np.linalg.norm(rhs))


@settings(max_examples=30, deadline=None)
@given(sizes, seeds)
def test_adjugate_identity(n, seed):
    a = matrix(n, seed)
    d = determinant(a)
    assert np.linalg.norm(adjugate(a) @ a - d * np.eye(n)) <= 1e-8 * max(1, abs(d))


@settings(max_examples=40, deadline=None)
@given(sizes, seeds, st.data())
def test_subset_max_bitwise(n, seed, data):
    a = matrix(n, seed)
    k = data.draw(st.integers(1, n))
    nu = data.draw(st.sampled_from(ALL_NORMS))
    side = data.draw(st.sampled_from([Side.COLUMNS, Side.ROWS]))
    assert max_subset_norm_product(a, k, nu, side) == oracle_subset_max(a, k, nu, side)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 20), seeds)
def test_vector_norm_comparison(n, seed):
    v = random_complex(np.random.default_rng(seed), n, 1)[:, 0]
    for r in ALL_NORMS:
        for p in ALL_NORMS:
            expo = max(r.reciprocal - p.reciprocal, 0.0)
            assert vec_norm(v, r) <= n**expo * vec_norm(v, p) + 1e-12


@settings(max_examples=30, deadline=None)
@given(sizes, seeds)
def test_duality_and_radius(n, seed):
    a = matrix(n, seed)
    assert op_norm(a, NormKind.L1) == op_norm(a.conj().T, NormKind.LINF)
    rho = abs(eigenvalues(a)[0])
    assert all(rho <= op_norm(a, p) + 1e-8 for p in ALL_NORMS)

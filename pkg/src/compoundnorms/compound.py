"""k-subsets in lexicographic order and kth compound matrices.

Subsets are 1-based, as are the row/column labels of a compound; numpy
indexing goes through :attr:`SubsetLex.indices`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod

import numpy as np

from ._backend import kernels
from .config import DEFAULTS, Tolerances, compound_size_guard
from .errors import DimensionError, DomainError, ResourceError
from .linalg import as_matrix, determinant, singular_values


@dataclass(frozen=True, order=True)
class SubsetLex:
    """A k-subset of {1, ..., n}, ranked in lexicographic order."""

    n: int
    members: tuple

    def __post_init__(self):
        members = tuple(int(i) for i in self.members)
        object.__setattr__(self, "members", members)
        if self.n < 1:
            raise DomainError(f"ambient size must be positive, got {self.n}")
        if not members:
            raise DomainError("subset must be nonempty")
        if any(b <= a for a, b in zip(members, members[1:])):
            raise DomainError(f"members must be strictly increasing: {members}")
        if members[0] < 1 or members[-1] > self.n:
            raise DomainError(f"members {members} out of range 1..{self.n}")

    @property
    def k(self) -> int:
        return len(self.members)

    @property
    def indices(self) -> np.ndarray:
        """0-based indices for array access."""
        return np.asarray(self.members, dtype=np.intp) - 1

    def rank(self) -> int:
        """0-based lexicographic rank among all k-subsets of {1..n}."""
        n, k = self.n, self.k
        total = comb(n, k)
        # Complements c_i = n - s_i form a combinadic of total - 1 - rank.
        return total - 1 - sum(comb(n - s, k - i) for i, s in enumerate(self.members))

    @classmethod
    def unrank(cls, n: int, k: int, r: int) -> "SubsetLex":
        _check_nk(n, k)
        total = comb(n, k)
        if not 0 <= r < total:
            raise DomainError(f"rank {r} out of range for C({n},{k})={total}")
        x = total - 1 - r
        members = []
        c = n
        for j in range(k, 0, -1):
            c -= 1
            while comb(c, j) > x:
                c -= 1
            x -= comb(c, j)
            members.append(n - c)
        return cls(n, tuple(members))

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def _check_nk(n, k):
    if n < 1 or k < 1 or k > n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")


def subsets_lex(n: int, k: int) -> list:
    """All k-subsets of {1..n}; position i holds ``SubsetLex.unrank(n, k, i)``."""
    _check_nk(n, k)
    return [SubsetLex(n, c) for c in itertools.combinations(range(1, n + 1), k)]


@lru_cache(maxsize=256)
def _subset_table(n: int, k: int) -> np.ndarray:
    table = np.array(list(itertools.combinations(range(n), k)), dtype=np.intp)
    table.setflags(write=False)
    return table


def subset_table(n: int, k: int) -> np.ndarray:
    """(C(n,k), k) array of 0-based members in lexicographic order."""
    _check_nk(n, k)
    return _subset_table(n, k)


def submatrix(a, alpha: SubsetLex, beta: SubsetLex) -> np.ndarray:
    """``A(alpha|beta)``: rows alpha, columns beta, in natural order."""
    a = as_matrix(a)
    if alpha.members[-1] > a.shape[0] or beta.members[-1] > a.shape[1]:
        raise DomainError(f"subsets {alpha}, {beta} out of range for shape {a.shape}")
    return a[np.ix_(alpha.indices, beta.indices)]


@dataclass(frozen=True)
class CompoundMatrix:
    base_n: int
    k: int
    matrix: np.ndarray

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def entry(self, alpha: SubsetLex, beta: SubsetLex) -> complex:
        return complex(self.matrix[alpha.rank(), beta.rank()])

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)


def compound(a, k: int, *, max_size=None) -> CompoundMatrix:
    """The kth compound ``C_k(A)``: all k x k minors, lexicographically indexed.

    Each minor is an independent LU factorization, so the result does not
    depend on evaluation order.

    Raises
    ------
    ResourceError
        If ``C(n, k)`` exceeds the compound size guard (default 10000,
        overridable with ``COMPOUNDNORMS_MAX_COMPOUND``).
    """
    a = as_matrix(a, square=True)
    n = a.shape[0]
    _check_nk(n, k)
    m = comb(n, k)
    limit = compound_size_guard() if max_size is None else max_size
    if m > limit:
        raise ResourceError(f"compound size C({n},{k})={m} exceeds guard {limit}")
    if k == n:
        mat = np.array([[determinant(a)]], dtype=np.complex128)
    elif k == 1:
        mat = a.copy()
    else:
        table = subset_table(n, k)
        mat = kernels.minors(a, table, table)
    return CompoundMatrix(n, k, mat)


def compound_l2_norm_fast(a, k: int, *, tol: Tolerances = DEFAULTS) -> float:
    """``||C_k(A)||_2`` as the product of the k largest singular values of A."""
    a = as_matrix(a, square=True)
    _check_nk(a.shape[0], k)
    sv = singular_values(a, tol=tol)
    return float(prod(sv[:k]))


def sign_matrix(n: int) -> np.ndarray:
    """diag(1, -1, 1, ...)."""
    return np.diag([(-1.0) ** i for i in range(n)]).astype(np.complex128)


def exchange_matrix(n: int) -> np.ndarray:
    """Anti-diagonal permutation; reverses index order."""
    return np.eye(n, dtype=np.complex128)[::-1]


def adjugate(a) -> np.ndarray:
    """Classical adjugate, read off the (n-1)th compound of the transpose.

    In lexicographic order the (n-1)-subset of rank r omits element n - r,
    so the sign-matrix identity picks up an index reversal:
    ``adj(A) = J D C_{n-1}(A^T) D J``.
    """
    a = as_matrix(a, square=True)
    n = a.shape[0]
    if n < 2:
        raise DomainError("adjugate is not defined here for 1 x 1 matrices")
    c = compound(a.T, n - 1).matrix
    d = np.array([(-1.0) ** i for i in range(n)])
    # J D C J  == reversed rows and columns of D C D, with the same D
    return (d[:, None] * c * d[None, :])[::-1, ::-1].copy()

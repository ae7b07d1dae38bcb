"""Matrices attaining (or certifying) equality in the bounds."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULTS, Tolerances
from .errors import DomainError, NumericalFailure, ResourceError
from .linalg import psd_sqrt


@dataclass(frozen=True)
class MonomialSpec:
    """A = P D: column j of A is ``diagonal[j]`` times e_{permutation[j]}.

    ``permutation`` lists the 1-based images sigma(1), ..., sigma(n).
    """

    permutation: tuple
    diagonal: tuple

    def __post_init__(self):
        perm = tuple(int(i) for i in self.permutation)
        object.__setattr__(self, "permutation", perm)
        object.__setattr__(self, "diagonal", tuple(complex(d) for d in self.diagonal))
        n = len(perm)
        if n == 0 or sorted(perm) != list(range(1, n + 1)):
            raise DomainError(f"not a permutation of 1..{n}: {perm}")
        if len(self.diagonal) != n:
            raise DomainError("permutation and diagonal lengths differ")

    @property
    def n(self):
        return len(self.permutation)


def monomial(spec: MonomialSpec) -> np.ndarray:
    n = spec.n
    a = np.zeros((n, n), dtype=np.complex128)
    for j, (i, d) in enumerate(zip(spec.permutation, spec.diagonal)):
        a[i - 1, j] = d
    return a


def random_monomial(n: int, rng, log_range=(-math.log(4.0), math.log(4.0))) -> np.ndarray:
    """Random permutation, log-uniform magnitudes, uniform phases."""
    perm = tuple(int(i) + 1 for i in rng.permutation(n))
    mags = np.exp(rng.uniform(*log_range, size=n))
    phases = np.exp(2j * np.pi * rng.uniform(size=n))
    return monomial(MonomialSpec(perm, tuple(mags * phases)))


_QUARTER = (1.0 + 0j, 1j, -1.0 + 0j, -1j)


def _root_of_unity(e, n):
    if (4 * e) % n == 0:
        return _QUARTER[(4 * e) // n]
    return cmath.exp(2j * math.pi * e / n)


def fourier(n: int) -> np.ndarray:
    """Vandermonde matrix of the nth roots of unity: entries w^((i-1)(j-1)).

    Unimodular with ``A A^H = n I``.  Exponents are reduced mod n, and the
    quarter turns are exact.
    """
    if n < 1:
        raise DomainError(f"fourier needs n >= 1, got {n}")
    table = [_root_of_unity(e, n) for e in range(n)]
    idx = np.outer(np.arange(n), np.arange(n)) % n
    return np.array(table, dtype=np.complex128)[idx]


def hadamard_sylvester(m: int, *, tol: Tolerances = DEFAULTS) -> np.ndarray:
    """Sylvester Hadamard matrix of order 2**m, by H -> [[H, H], [H, -H]]."""
    if m < 0:
        raise DomainError(f"hadamard order exponent must be >= 0, got {m}")
    if 2**m > tol.max_matrix_size:
        raise ResourceError(f"hadamard order 2**{m} exceeds size guard {tol.max_matrix_size}")
    hm = np.ones((1, 1), dtype=np.int64)
    for _ in range(m):
        hm = np.block([[hm, hm], [hm, -hm]])
    return hm.astype(np.complex128)


def hadamard_order_exponent(n: int) -> int:
    """m with 2**m == n, or DomainError."""
    if n < 1 or n & (n - 1):
        raise DomainError(f"Sylvester Hadamard matrices exist only for powers of two, got {n}")
    return n.bit_length() - 1


def first_row_ones(n: int) -> np.ndarray:
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    a = np.zeros((n, n), dtype=np.complex128)
    a[0, :] = 1.0
    return a


def unit_diag_psd(n: int, k: int, *, eq_tol: float = 1e-14) -> np.ndarray:
    """PSD matrix with unit diagonal and spectrum {n/k (k times), 0 (n-k times)}.

    Starts from the diagonal spectrum and applies plane rotations
    ``B <- G^T B G`` on the pair (smallest, largest) diagonal entry, choosing
    the angle in closed form so the smallest becomes exactly 1.  Every
    rotation fixes at least one more entry, so at most n-1 are needed.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    b = np.diag([n / k] * k + [0.0] * (n - k))
    for _ in range(n + 1):
        d = np.diag(b)
        i, j = int(np.argmin(d)), int(np.argmax(d))
        if 1.0 - d[i] <= eq_tol and d[j] - 1.0 <= eq_tol:
            return b.astype(np.complex128)
        aii, ajj, aij = d[i], d[j], b[i, j]
        # t = tan(angle) solves (aii - 2 t aij + t^2 ajj) / (1 + t^2) = 1
        disc = aij * aij - (aii - 1.0) * (ajj - 1.0)
        sgn = 1.0 if aij >= 0 else -1.0
        t = (aij + sgn * math.sqrt(disc)) / (ajj - 1.0)
        c = 1.0 / math.sqrt(1.0 + t * t)
        s = t * c
        ci, cj = b[:, i].copy(), b[:, j].copy()
        b[:, i] = c * ci - s * cj
        b[:, j] = s * ci + c * cj
        ri, rj = b[i, :].copy(), b[j, :].copy()
        b[i, :] = c * ri - s * rj
        b[j, :] = s * ri + c * rj
        b[i, i] = 1.0
        b = 0.5 * (b + b.T)
    raise NumericalFailure(f"diagonal equalization did not finish in {n + 1} rotations", iterations=n + 1)


def theta2_extremal(n: int, k: int, *, tol: Tolerances = DEFAULTS) -> np.ndarray:
    """PSD square root of :func:`unit_diag_psd`: unit l2 columns, ``||C_k(A)||_2 = (n/k)^(k/2)``."""
    return psd_sqrt(unit_diag_psd(n, k), tol=tol)


def disjoint_support_example(n: int, k: int) -> np.ndarray:
    """Matrix whose first k columns have disjoint supports and the largest l1 norms.

    Rows are split into k contiguous blocks; column j < k is unimodular on
    block j and zero elsewhere.  The remaining columns are dense with l1
    norm 1/2, below every block column, so beta = {1..k} attains the max.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    a = np.zeros((n, n), dtype=np.complex128)
    bounds = np.linspace(0, n, k + 1).round().astype(int)
    for j in range(k):
        rows = np.arange(bounds[j], bounds[j + 1])
        a[rows, j] = np.exp(2j * np.pi * (rows + 1) / (n + 1))
    for j in range(k, n):
        rows = np.arange(n)
        a[:, j] = np.exp(2j * np.pi * (rows * (j + 1)) / (n + 2)) / (2 * n)
    return a

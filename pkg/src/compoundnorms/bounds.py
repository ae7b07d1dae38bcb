"""Theta constants, compound-norm bounds and eigenvalue-product bounds.

``theta(mu, nu, n, k)`` bounds ``mu(C_k(B))`` over matrices B whose columns
all have unit nu-norm.  Combined with column scaling this gives

    mu(C_k(A)) <= theta * max_{|alpha|=k} prod_{i in alpha} nu(col_i(A)),

and, since ``rho(C_k(A)) = |lambda_1 ... lambda_k|``, bounds on products of
the k largest eigenvalue moduli.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .compound import SubsetLex, compound
from .config import DEFAULTS, Tolerances
from .errors import DimensionError, DomainError
from .linalg import NormKind, as_matrix, determinant, eigenvalues, op_norm, vec_norm


class ThetaKind(enum.Enum):
    EXACT = "Exact"
    UPPER_BOUND = "UpperBound"


@dataclass(frozen=True)
class ThetaValue:
    kind: ThetaKind
    value: float

    def __post_init__(self):
        if not (self.value > 0 and math.isfinite(self.value)):
            raise DomainError(f"theta must be positive and finite, got {self.value}")

    @property
    def exact(self) -> bool:
        return self.kind is ThetaKind.EXACT

    def to_dict(self):
        return {"kind": self.kind.value, "value": self.value}


class Side(enum.Enum):
    COLUMNS = "Columns"
    ROWS = "Rows"
    MIN_OF_BOTH = "MinOfBoth"


@dataclass(frozen=True)
class BoundReport:
    """One evaluation of ``quantity <= bound``.

    ``columns`` and ``rows`` hold the two max-subset products that entered
    the bound (``rows`` is None for column-only bounds).
    """

    quantity: float
    bound: float
    theta: ThetaValue
    side: Side
    tight: bool
    columns: float
    rows: float | None = None
    meta: dict = field(default_factory=dict)

    @property
    def ratio(self) -> float | None:
        """quantity / bound; None when the bound is zero."""
        if self.bound == 0.0:
            return None
        return self.quantity / self.bound

    @property
    def winner(self) -> Side:
        """Which side attained the min (columns on ties)."""
        if self.rows is None or self.columns <= self.rows:
            return Side.COLUMNS
        return Side.ROWS

    def holds(self, rtol: float) -> bool:
        return self.quantity <= self.bound + rtol * max(1.0, self.bound)

    def to_dict(self):
        return {
            "quantity": self.quantity,
            "bound": self.bound,
            "ratio": self.ratio,
            "theta": self.theta.to_dict(),
            "side": self.side.value,
            "winner": self.winner.value,
            "tight": self.tight,
            "columns": self.columns,
            "rows": self.rows,
            **self.meta,
        }


def _check(n, k):
    if n < 1 or k < 1 or k > n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")


def _linf_cell(n, k):
    return comb(n, k) * (k + 1) ** ((k - 1) / 2)


def theta(mu, nu, n: int, k: int) -> ThetaValue:
    """The tightest proven value of theta_k(mu, nu) for n x n matrices.

    Cells known to be attained are tagged EXACT; the mixed-norm cells and
    the (LInf, LInf) cells for 1 < k < n-1 are UPPER_BOUND.
    """
    mu, nu = NormKind.parse(mu), NormKind.parse(nu)
    _check(n, k)
    L1, L2, LI = NormKind.L1, NormKind.L2, NormKind.LINF
    exact, upper = ThetaKind.EXACT, ThetaKind.UPPER_BOUND
    l2 = (n / k) ** (k / 2)
    if (mu, nu) == (L1, L1):
        return ThetaValue(exact, 1.0)
    if (mu, nu) == (L2, L2):
        return ThetaValue(exact, l2)
    if (mu, nu) == (LI, LI):
        if k == n or k == n - 1:
            return ThetaValue(exact, n ** (n / 2))
        if k == 1:
            return ThetaValue(exact, float(n))
        return ThetaValue(upper, _linf_cell(n, k))
    if (mu, nu) == (L1, L2):
        return ThetaValue(upper, n ** (k / 2))
    if (mu, nu) == (L1, LI):
        return ThetaValue(upper, float(n) ** k)
    if (mu, nu) == (L2, L1):
        return ThetaValue(upper, l2)
    if (mu, nu) == (L2, LI):
        return ThetaValue(upper, l2 * n ** (k / 2))
    # (LInf, L1) and (LInf, L2)
    if k == n:
        return ThetaValue(upper, n ** (n / 2))
    return ThetaValue(upper, _linf_cell(n, k))


def line_norms(a, nu, side: Side) -> np.ndarray:
    """nu-norms of the columns (or of the transposed rows) of A."""
    a = as_matrix(a)
    nu = NormKind.parse(nu)
    lines = a.T if side is Side.COLUMNS else a
    return np.array([vec_norm(v, nu) for v in lines])


def top_k_product(norms, k: int) -> float:
    """Product of the k largest values, multiplied in descending order."""
    out = 1.0
    for x in sorted((float(v) for v in norms), reverse=True)[:k]:
        out *= x
    return out


def max_subset_norm_product(a, k: int, nu, side=Side.COLUMNS) -> float:
    """max over k-subsets alpha of prod_{i in alpha} nu(line_i(A))."""
    a = as_matrix(a, square=True)
    _check(a.shape[0], k)
    side = Side(side) if not isinstance(side, Side) else side
    if side is Side.MIN_OF_BOTH:
        raise DomainError("side must be Columns or Rows")
    return top_k_product(line_norms(a, nu, side), k)


def compound_norm_bound(a, k: int, mu, nu, *, tol: Tolerances = DEFAULTS, _compound=None) -> BoundReport:
    """Evaluate ``mu(C_k(A)) <= theta_k(mu, nu) * max_alpha prod nu(col_i(A))``."""
    a = as_matrix(a, square=True)
    n = a.shape[0]
    mu, nu = NormKind.parse(mu), NormKind.parse(nu)
    th = theta(mu, nu, n, k)
    c = compound(a, k).matrix if _compound is None else _compound
    quantity = op_norm(c, mu, tol=tol)
    cols = max_subset_norm_product(a, k, nu, Side.COLUMNS)
    bound = th.value * cols
    return BoundReport(
        quantity=quantity,
        bound=bound,
        theta=th,
        side=Side.COLUMNS,
        tight=quantity >= bound * (1 - tol.tight),
        columns=cols,
        meta={"n": n, "k": k, "mu": mu.value, "nu": nu.value},
    )


def column_compound_l1_bound(a, k: int, beta: SubsetLex, *, tol: Tolerances = DEFAULTS):
    """l1 norm of column beta of C_k(A) against the max subset l1 product.

    Returns ``(lhs, rhs, equality, disjoint_supports)``.  ``disjoint_supports``
    is the full equality condition: the beta-columns of A have pairwise
    disjoint supports and their l1 norms attain the max product.
    """
    a = as_matrix(a, square=True)
    n = a.shape[0]
    if beta.n != n or beta.k != k:
        raise DimensionError(f"beta={beta} is not a {k}-subset of 1..{n}")
    c = compound(a, k).matrix
    lhs = float(np.abs(c[:, beta.rank()]).sum())
    norms = line_norms(a, NormKind.L1, Side.COLUMNS)
    rhs = top_k_product(norms, k)
    scale = max(1.0, rhs)
    equality = abs(lhs - rhs) <= tol.equality * scale
    cols = a[:, beta.indices] != 0
    pairwise = bool(np.all(cols.sum(axis=1) <= 1))
    attains = abs(top_k_product(norms[beta.indices], k) - rhs) <= tol.equality * scale
    return lhs, rhs, bool(equality), pairwise and attains


# mu and nu realising the best eigenvalue bound for each norm of rows/columns
_EIG_THETA = {
    NormKind.L1: (NormKind.L1, NormKind.L1),
    NormKind.L2: (NormKind.L2, NormKind.L2),
    NormKind.LINF: (NormKind.L2, NormKind.LINF),
}


def eig_coefficient(norm, n: int, k: int) -> ThetaValue:
    """Coefficient of the eigenvalue-product bound: 1, (n/k)^(k/2), (n/k)^(k/2) n^(k/2)."""
    mu, nu = _EIG_THETA[NormKind.parse(norm)]
    return theta(mu, nu, n, k)


def eig_product_upper(a, k: int, norm, *, tol: Tolerances = DEFAULTS, _spectrum=None) -> BoundReport:
    """Bound ``|lambda_1 ... lambda_k|`` by row and column norm products."""
    a = as_matrix(a, square=True)
    n = a.shape[0]
    norm = NormKind.parse(norm)
    _check(n, k)
    lam = eigenvalues(a, tol=tol) if _spectrum is None else _spectrum
    quantity = float(np.prod(np.abs(lam[:k])))
    th = eig_coefficient(norm, n, k)
    cols = max_subset_norm_product(a, k, norm, Side.COLUMNS)
    rows = max_subset_norm_product(a, k, norm, Side.ROWS)
    bound = th.value * min(cols, rows)
    return BoundReport(
        quantity=quantity,
        bound=bound,
        theta=th,
        side=Side.MIN_OF_BOTH,
        tight=quantity >= bound * (1 - tol.tight),
        columns=cols,
        rows=rows,
        meta={"n": n, "k": k, "norm": norm.value},
    )


def is_singular(a, *, tol: Tolerances = DEFAULTS) -> bool:
    """|det A| <= tol.singular * prod ||col_i||_2 (the Hadamard scale)."""
    a = as_matrix(a, square=True)
    scale = float(np.prod(line_norms(a, NormKind.L2, Side.COLUMNS)))
    return abs(determinant(a)) <= tol.singular * scale


def eig_product_lower(a, k: int, norm, *, tol: Tolerances = DEFAULTS, _spectrum=None) -> float:
    """Lower bound on ``|lambda_{k+1} ... lambda_n|`` as ``|det A| / upper bound``."""
    a = as_matrix(a, square=True)
    n = a.shape[0]
    if not 1 <= k < n:
        raise DomainError(f"need 1 <= k < n, got n={n}, k={k}")
    if is_singular(a, tol=tol):
        raise DomainError("lower bound on smallest eigenvalues requires a nonsingular matrix")
    upper = eig_product_upper(a, k, norm, tol=tol, _spectrum=_spectrum)
    return abs(determinant(a)) / upper.bound


def h(k: int, n: int) -> float:
    """Ratio of the LInf eigenvalue-bound coefficient to C(n,k) (k+1)^((k-1)/2).

    Equals n^k / (k^(k/2) (k+1)^((k-1)/2) C(n,k)); never exceeds 1.
    """
    if not 1 <= k < n:
        raise DomainError(f"h(k, n) needs 1 <= k < n, got k={k}, n={n}")
    return n**k / (k ** (k / 2) * (k + 1) ** ((k - 1) / 2) * comb(n, k))


def theta_dominance_check(n: int, k: int, rtol: float = 1e-12) -> bool:
    """Both (n/k)^(k/2) and (n/k)^(k/2) n^(k/2) are at most C(n,k)(k+1)^((k-1)/2)."""
    if not 1 <= k < n:
        raise DomainError(f"need 1 <= k < n, got n={n}, k={k}")
    cell = _linf_cell(n, k)
    l2 = (n / k) ** (k / 2)
    slack = 1 + rtol
    return l2 <= cell * slack and l2 * n ** (k / 2) <= cell * slack

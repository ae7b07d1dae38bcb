"""Central tolerances and size guards."""

import os
from dataclasses import dataclass

#: Environment variable overriding the compound size guard.
MAX_COMPOUND_ENV = "COMPOUNDNORMS_MAX_COMPOUND"


@dataclass(frozen=True)
class Tolerances:
    # shifted QR: |h[i+1,i]| < deflation * (|h[i,i]| + |h[i+1,i+1]|)
    deflation: float = 1e-14
    qr_sweeps_per_n: int = 100
    # cyclic Jacobi: skip (p, q) when |b_pq| <= jacobi * sqrt(|b_pp b_qq|)
    jacobi: float = 1e-15
    jacobi_max_sweeps: int = 100
    hermitian: float = 1e-10
    psd_negative: float = 1e-10
    # BoundReport.tight: quantity >= bound * (1 - tight)
    tight: float = 1e-8
    # compound-norm bound soundness slack, relative to max(1, bound)
    bound: float = 1e-8
    # eigenvalue-product bound soundness slack, relative to max(1, bound)
    eig_bound: float = 1e-7
    equality: float = 1e-10
    # |det A| <= singular * prod ||col_i||_2 counts as singular
    singular: float = 1e-12
    max_matrix_size: int = 500
    max_compound_size: int = 10_000
    max_oracle_minor: int = 8


DEFAULTS = Tolerances()


def compound_size_guard(tol=DEFAULTS):
    """Return the active compound size guard, honouring the environment override."""
    raw = os.environ.get(MAX_COMPOUND_ENV)
    if raw is None or raw.strip() == "":
        return tol.max_compound_size
    try:
        value = int(raw)
    except ValueError:
        return tol.max_compound_size
    return value if value > 0 else tol.max_compound_size


def rel_close(a, b, rtol):
    """``|a - b| <= rtol * max(1, |a|, |b|)``."""
    return abs(a - b) <= rtol * max(1.0, abs(a), abs(b))

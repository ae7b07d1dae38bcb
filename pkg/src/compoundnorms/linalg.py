"""Dense complex matrix core: norms, determinants, spectra, PSD square roots.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; :func:`as_matrix`
is the single validation point. Routines never modify their inputs.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from ._backend import kernels
from .config import DEFAULTS, Tolerances
from .errors import DimensionError, DomainError, NumericalFailure, ResourceError


class NormKind(enum.Enum):
    """The three l_p norms, used both as vector norms and induced operator norms."""

    L1 = "L1"
    L2 = "L2"
    LINF = "LInf"

    @property
    def p(self) -> float:
        return {NormKind.L1: 1.0, NormKind.L2: 2.0, NormKind.LINF: math.inf}[self]

    @property
    def reciprocal(self) -> float:
        """1/p, with 1/inf = 0."""
        return {NormKind.L1: 1.0, NormKind.L2: 0.5, NormKind.LINF: 0.0}[self]

    @classmethod
    def parse(cls, text: "str | NormKind") -> "NormKind":
        if isinstance(text, NormKind):
            return text
        key = str(text).strip().lower().replace("_", "").replace("ell", "l")
        aliases = {
            "l1": cls.L1, "1": cls.L1,
            "l2": cls.L2, "2": cls.L2,
            "linf": cls.LINF, "inf": cls.LINF, "li": cls.LINF, "infinity": cls.LINF,
        }
        try:
            return aliases[key]
        except KeyError:
            raise DomainError(f"unknown norm {text!r}; expected L1, L2 or LInf") from None

    def __str__(self):
        return self.value


ALL_NORMS = (NormKind.L1, NormKind.L2, NormKind.LINF)


def as_matrix(m, *, square=False) -> np.ndarray:
    """Validate and convert to a 2-D complex128 array with finite entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise DimensionError(f"expected a nonempty 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix entries must be finite")
    if square and a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def conj_t(m) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def vec_norm(v, p) -> float:
    """l1, l2 or l-infinity norm of a complex vector."""
    p = NormKind.parse(p)
    x = np.asarray(v, dtype=np.complex128).ravel()
    if x.size == 0:
        raise DimensionError("norm of an empty vector")
    mods = np.abs(x)
    if p is NormKind.L1:
        return float(mods.sum())
    if p is NormKind.LINF:
        return float(mods.max())
    scale = float(mods.max())
    if scale == 0.0:
        return 0.0
    return scale * math.sqrt(float(np.sum((mods / scale) ** 2)))


def op_norm(m, p, *, tol: Tolerances = DEFAULTS) -> float:
    """Operator norm induced by the l_p vector norm.

    L1 is the maximal column sum of moduli, LInf the maximal row sum, and L2
    the largest singular value, taken from the Jacobi spectrum of ``M^H M``.
    """
    p = NormKind.parse(p)
    a = as_matrix(m)
    if p is NormKind.L1:
        return float(np.abs(a).sum(axis=0).max())
    if p is NormKind.LINF:
        return float(np.abs(a).sum(axis=1).max())
    return float(singular_values(a, tol=tol)[0])


def determinant(m) -> complex:
    """Determinant via LU with partial pivoting."""
    a = as_matrix(m, square=True)
    return kernels.lu_det(a)


def sort_spectrum(values, rel=1e-12) -> np.ndarray:
    """Sort by non-increasing modulus.

    Values whose moduli agree to ``rel`` are treated as tied and ordered by
    real part, then imaginary part, both descending.
    """
    vals = np.asarray(values, dtype=np.complex128).ravel()
    if vals.size == 0:
        return vals
    order = sorted(range(vals.size), key=lambda i: -abs(vals[i]))
    out = []
    i = 0
    while i < len(order):
        j = i + 1
        head = abs(vals[order[i]])
        while j < len(order) and head - abs(vals[order[j]]) <= rel * max(head, 1e-300):
            j += 1
        group = sorted(order[i:j], key=lambda t: (-vals[t].real, -vals[t].imag))
        out.extend(group)
        i = j
    return vals[out]


def eigenvalues(m, *, max_size=None, tol: Tolerances = DEFAULTS) -> np.ndarray:
    """All eigenvalues, sorted by non-increasing modulus.

    Hessenberg reduction followed by Wilkinson-shifted complex QR with
    deflation.

    Raises
    ------
    ResourceError
        If the matrix exceeds ``max_size`` (default ``tol.max_matrix_size``).
    NumericalFailure
        If QR does not converge within ``tol.qr_sweeps_per_n * n`` steps.
    """
    a = as_matrix(m, square=True)
    limit = tol.max_matrix_size if max_size is None else max_size
    if a.shape[0] > limit:
        raise ResourceError(f"eigenvalues: n={a.shape[0]} exceeds size guard {limit}")
    vals, iterations, ok = kernels.hessenberg_eigvals(a, tol.deflation, tol.qr_sweeps_per_n)
    if not ok:
        raise NumericalFailure(
            f"shifted QR did not converge after {iterations} iterations", iterations=iterations
        )
    return sort_spectrum(vals)


def spectral_radius(m, **kw) -> float:
    return float(abs(eigenvalues(m, **kw)[0]))


def is_hermitian(m, rtol=1e-10) -> bool:
    a = np.asarray(m)
    scale = max(1.0, float(np.abs(a).max()))
    return bool(np.abs(a - a.conj().T).max() <= rtol * scale)


def eigh(b, *, tol: Tolerances = DEFAULTS):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi.

    Returns ``(w, v)`` with ``w`` non-increasing and ``b = v diag(w) v^H``.
    """
    a = as_matrix(b, square=True)
    hermitian_part = 0.5 * (a + a.conj().T)
    w, v, sweeps, ok = kernels.jacobi_eigh(hermitian_part, tol.jacobi, tol.jacobi_max_sweeps)
    if not ok:
        raise NumericalFailure(f"Jacobi did not converge after {sweeps} sweeps", iterations=sweeps)
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def singular_values(m, *, tol: Tolerances = DEFAULTS) -> np.ndarray:
    """Singular values, non-increasing: square roots of the spectrum of ``M^H M``."""
    a = as_matrix(m)
    w, _ = eigh(a.conj().T @ a, tol=tol)
    return np.sqrt(np.clip(w, 0.0, None))


def psd_sqrt(b, *, tol: Tolerances = DEFAULTS) -> np.ndarray:
    """Hermitian positive semidefinite square root.

    Eigenvalues within ``tol.psd_negative`` (relative to ``max(1, ||B||)``)
    below zero are clamped to zero, as are positive eigenvalues at rounding
    level (``<= 8 n eps ||B||``), whose square roots would otherwise inject
    errors of order sqrt(eps) into the root.

    Raises
    ------
    DomainError
        If ``b`` is not Hermitian or has a significantly negative eigenvalue.
    """
    a = as_matrix(b, square=True)
    if not is_hermitian(a, tol.hermitian):
        raise DomainError("psd_sqrt: matrix is not Hermitian")
    w, v = eigh(a, tol=tol)
    scale = max(1.0, float(np.abs(w).max()))
    if w[-1] < -tol.psd_negative * scale:
        raise DomainError(f"psd_sqrt: matrix is indefinite (eigenvalue {w[-1]:.3g})")
    noise = 8 * a.shape[0] * np.finfo(float).eps * float(np.abs(w).max())
    w = np.where(w <= noise, 0.0, w)
    root = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (root + root.conj().T)

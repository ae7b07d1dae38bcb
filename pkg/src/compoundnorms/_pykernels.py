"""Pure numpy implementations of the hot kernels.

Same algorithms and calling conventions as the compiled ``_ckernels``
extension; selected automatically when the extension is not built.
"""

import cmath
import math

import numpy as np

NAME = "python"


def lu_det(a):
    """Determinant of a square matrix by LU with partial (modulus) pivoting."""
    w = np.array(a, dtype=np.complex128, copy=True)
    return complex(_batched_lu_det(w[None, :, :])[0])


def minors(a, rows, cols):
    """All minors ``det a[rows[i]][:, cols[j]]``.

    Parameters
    ----------
    a : (n, n) complex array
    rows : (m, k) int array of 0-based row index tuples
    cols : (p, k) int array of 0-based column index tuples

    Returns
    -------
    (m, p) complex array
    """
    a = np.asarray(a, dtype=np.complex128)
    rows = np.asarray(rows, dtype=np.intp)
    cols = np.asarray(cols, dtype=np.intp)
    m, k = rows.shape
    p = cols.shape[0]
    stack = a[rows[:, None, :, None], cols[None, :, None, :]]
    stack = stack.reshape(m * p, k, k).copy()
    return _batched_lu_det(stack).reshape(m, p)


def _batched_lu_det(s):
    # s: (batch, k, k), overwritten
    batch, k, _ = s.shape
    det = np.ones(batch, dtype=np.complex128)
    idx = np.arange(batch)
    for j in range(k):
        piv_row = j + np.argmax(np.abs(s[:, j:, j]), axis=1)
        swap = piv_row != j
        if swap.any():
            b = idx[swap]
            r = piv_row[swap]
            top = s[b, j, j:].copy()
            s[b, j, j:] = s[b, r, j:]
            s[b, r, j:] = top
            det[swap] = -det[swap]
        piv = s[:, j, j].copy()
        zero = piv == 0
        det *= piv
        if j + 1 < k:
            piv[zero] = 1.0
            f = s[:, j + 1:, j] / piv[:, None]
            s[:, j + 1:, j + 1:] -= f[:, :, None] * s[:, j, None, j + 1:]
    return det


def _givens(a, b):
    # G = [[c, s], [-conj(s), c]] with G @ [a, b] = [r, 0]
    if b == 0:
        return 1.0, 0j
    if a == 0:
        return 0.0, b.conjugate() / abs(b)
    aa = abs(a)
    r = math.hypot(aa, abs(b))
    return aa / r, (a / aa) * b.conjugate() / r


def _wilkinson(a, b, c, d):
    # eigenvalue of [[a, b], [c, d]] closest to d
    p = 0.5 * (a - d)
    bc = b * c
    disc = cmath.sqrt(p * p + bc)
    den = p + disc
    alt = p - disc
    if abs(alt) > abs(den):
        den = alt
    if den == 0:
        return d
    return d - bc / den


def hessenberg(a):
    """Unitary similarity to upper Hessenberg form via Householder reflectors."""
    h = np.array(a, dtype=np.complex128, copy=True)
    n = h.shape[0]
    for j in range(n - 2):
        x = h[j + 1:, j]
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        x0 = x[0]
        phase = x0 / abs(x0) if x0 != 0 else 1.0 + 0j
        v = x.copy()
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[j + 1:, j:] -= 2.0 * np.outer(v, v.conj() @ h[j + 1:, j:])
        h[:, j + 1:] -= 2.0 * np.outer(h[:, j + 1:] @ v, v.conj())
        h[j + 2:, j] = 0.0
    return h


def hessenberg_eigvals(a, deflation, sweeps_per_n):
    """Eigenvalues by Hessenberg reduction and Wilkinson-shifted QR.

    Returns ``(values, iterations, converged)``; values are unsorted.
    """
    h = hessenberg(a)
    n = h.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    hnorm = float(np.linalg.norm(h))
    max_iter = sweeps_per_n * max(n, 1)
    iterations = 0
    hi = n - 1
    its = 0
    while hi >= 0:
        l = hi
        while l > 0:
            s = abs(h[l - 1, l - 1]) + abs(h[l, l])
            if s == 0.0:
                s = hnorm
            if abs(h[l, l - 1]) <= deflation * s:
                h[l, l - 1] = 0.0
                break
            l -= 1
        if l == hi:
            out[hi] = h[hi, hi]
            hi -= 1
            its = 0
            continue
        if iterations >= max_iter:
            return out, iterations, False
        iterations += 1
        its += 1
        if its % 10 == 0:
            sigma = h[hi, hi] + 0.75 * abs(h[hi, hi - 1])
        else:
            sigma = _wilkinson(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
        _qr_step(h, l, hi, sigma)
    return out, iterations, True


def _qr_step(h, l, hi, sigma):
    end = hi + 1
    for i in range(l, end):
        h[i, i] -= sigma
    rot = []
    for j in range(l, hi):
        c, s = _givens(complex(h[j, j]), complex(h[j + 1, j]))
        rj = h[j, j:end].copy()
        rj1 = h[j + 1, j:end].copy()
        h[j, j:end] = c * rj + s * rj1
        h[j + 1, j:end] = -s.conjugate() * rj + c * rj1
        rot.append((c, s))
    for j in range(l, hi):
        c, s = rot[j - l]
        top = min(j + 2, hi) + 1
        cj = h[l:top, j].copy()
        cj1 = h[l:top, j + 1].copy()
        h[l:top, j] = c * cj + s.conjugate() * cj1
        h[l:top, j + 1] = -s * cj + c * cj1
    for i in range(l, end):
        h[i, i] += sigma


def jacobi_eigh(b, tol, max_sweeps):
    """Cyclic Jacobi eigendecomposition of a Hermitian matrix.

    Returns ``(w, v, sweeps, converged)`` with ``b ~= v @ diag(w) @ v^H``;
    ``w`` is unsorted.
    """
    a = np.array(b, dtype=np.complex128, copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    floor = 1e-17 * float(np.linalg.norm(a))
    for sweep in range(1, max_sweeps + 1):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = complex(a[p, q])
                mag = abs(apq)
                app = a[p, p].real
                aqq = a[q, q].real
                if mag <= floor or mag <= tol * math.sqrt(abs(app * aqq)):
                    continue
                rotated = True
                e = apq / mag
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                se = s * e
                sec = se.conjugate()
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - sec * cq
                a[:, q] = se * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - se * rq
                a[q, :] = sec * rp + c * rq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - sec * vq
                v[:, q] = se * vp + c * vq
        if not rotated:
            return np.diag(a).real.copy(), v, sweep, True
    return np.diag(a).real.copy(), v, max_sweeps, False

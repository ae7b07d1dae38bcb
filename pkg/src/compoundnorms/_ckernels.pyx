# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled hot kernels.

Mirrors :mod:`compoundnorms._pykernels` function for function.
"""

import numpy as np

from libc.math cimport sqrt, hypot, fabs, copysign

NAME = "cython"

ctypedef double complex cplx


cdef inline double cabs_(cplx z) nogil:
    return hypot(z.real, z.imag)


cdef inline cplx conj_(cplx z) nogil:
    return z.real - 1j * z.imag


cdef inline cplx csqrt_(cplx z) nogil:
    cdef double x = z.real, y = z.imag, r, t
    if x == 0.0 and y == 0.0:
        return 0.0
    r = hypot(x, y)
    t = sqrt(0.5 * (r + fabs(x)))
    if x >= 0.0:
        return t + 1j * (y / (2.0 * t))
    return fabs(y) / (2.0 * t) + 1j * copysign(t, y)


cdef cplx _lu_det_inplace(cplx[:, ::1] w, Py_ssize_t k) nogil:
    cdef Py_ssize_t i, j, r, p
    cdef cplx det = 1.0, piv, f, tmp
    cdef double best, mag
    for j in range(k):
        p = j
        best = cabs_(w[j, j])
        for r in range(j + 1, k):
            mag = cabs_(w[r, j])
            if mag > best:
                best = mag
                p = r
        if best == 0.0:
            return 0.0
        if p != j:
            for i in range(j, k):
                tmp = w[j, i]
                w[j, i] = w[p, i]
                w[p, i] = tmp
            det = -det
        piv = w[j, j]
        det = det * piv
        for r in range(j + 1, k):
            f = w[r, j] / piv
            if f != 0:
                for i in range(j + 1, k):
                    w[r, i] = w[r, i] - f * w[j, i]
    return det


def lu_det(a):
    """Determinant of a square matrix by LU with partial (modulus) pivoting."""
    cdef cplx[:, ::1] w = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef cplx d
    with nogil:
        d = _lu_det_inplace(w, w.shape[0])
    return complex(d)


def minors(a, rows, cols):
    """All minors ``det a[rows[i]][:, cols[j]]`` as an (m, p) array."""
    cdef const cplx[:, ::1] av = np.ascontiguousarray(a, dtype=np.complex128)
    cdef const Py_ssize_t[:, ::1] rv = np.ascontiguousarray(rows, dtype=np.intp)
    cdef const Py_ssize_t[:, ::1] cv = np.ascontiguousarray(cols, dtype=np.intp)
    cdef Py_ssize_t m = rv.shape[0], k = rv.shape[1], p = cv.shape[0]
    out_arr = np.empty((m, p), dtype=np.complex128)
    cdef cplx[:, ::1] out = out_arr
    cdef cplx[:, ::1] w = np.empty((max(k, 1), max(k, 1)), dtype=np.complex128)
    cdef Py_ssize_t i, j, r, c
    with nogil:
        for i in range(m):
            for j in range(p):
                for r in range(k):
                    for c in range(k):
                        w[r, c] = av[rv[i, r], cv[j, c]]
                out[i, j] = _lu_det_inplace(w, k)
    return out_arr


cdef void _hessenberg_inplace(cplx[:, ::1] h, cplx[::1] v, cplx[::1] tmp) nogil:
    cdef Py_ssize_t n = h.shape[0], j, i, c, r
    cdef double alpha, vn, ax0
    cdef cplx phase, acc
    for j in range(n - 2):
        alpha = 0.0
        for i in range(j + 1, n):
            alpha = hypot(alpha, cabs_(h[i, j]))
        if alpha == 0.0:
            continue
        ax0 = cabs_(h[j + 1, j])
        if ax0 != 0.0:
            phase = h[j + 1, j] / ax0
        else:
            phase = 1.0
        for i in range(j + 1, n):
            v[i] = h[i, j]
        v[j + 1] = v[j + 1] + phase * alpha
        vn = 0.0
        for i in range(j + 1, n):
            vn = hypot(vn, cabs_(v[i]))
        for i in range(j + 1, n):
            v[i] = v[i] / vn
        # h[j+1:, j:] -= 2 v (v^H h[j+1:, j:])
        for c in range(j, n):
            acc = 0.0
            for i in range(j + 1, n):
                acc = acc + conj_(v[i]) * h[i, c]
            tmp[c] = 2.0 * acc
        for i in range(j + 1, n):
            for c in range(j, n):
                h[i, c] = h[i, c] - v[i] * tmp[c]
        # h[:, j+1:] -= 2 (h[:, j+1:] v) v^H
        for r in range(n):
            acc = 0.0
            for i in range(j + 1, n):
                acc = acc + h[r, i] * v[i]
            tmp[r] = 2.0 * acc
        for r in range(n):
            for i in range(j + 1, n):
                h[r, i] = h[r, i] - tmp[r] * conj_(v[i])
        for i in range(j + 2, n):
            h[i, j] = 0.0


cdef inline cplx _wilkinson(cplx a, cplx b, cplx c, cplx d) nogil:
    cdef cplx p = 0.5 * (a - d)
    cdef cplx bc = b * c
    cdef cplx disc = csqrt_(p * p + bc)
    cdef cplx den = p + disc
    cdef cplx alt = p - disc
    if cabs_(alt) > cabs_(den):
        den = alt
    if den == 0:
        return d
    return d - bc / den


cdef inline void _givens(cplx a, cplx b, double* c, cplx* s) nogil:
    cdef double aa, r
    if b == 0:
        c[0] = 1.0
        s[0] = 0.0
        return
    if a == 0:
        c[0] = 0.0
        s[0] = conj_(b) / cabs_(b)
        return
    aa = cabs_(a)
    r = hypot(aa, cabs_(b))
    c[0] = aa / r
    s[0] = (a / aa) * conj_(b) / r


cdef void _qr_step(cplx[:, ::1] h, Py_ssize_t l, Py_ssize_t hi, cplx sigma,
                   double[::1] cs, cplx[::1] ss) nogil:
    cdef Py_ssize_t i, j, col, top, row
    cdef double c
    cdef cplx s, x, y
    for i in range(l, hi + 1):
        h[i, i] = h[i, i] - sigma
    for j in range(l, hi):
        _givens(h[j, j], h[j + 1, j], &c, &s)
        cs[j] = c
        ss[j] = s
        for col in range(j, hi + 1):
            x = h[j, col]
            y = h[j + 1, col]
            h[j, col] = c * x + s * y
            h[j + 1, col] = -conj_(s) * x + c * y
    for j in range(l, hi):
        c = cs[j]
        s = ss[j]
        top = j + 2
        if top > hi:
            top = hi
        for row in range(l, top + 1):
            x = h[row, j]
            y = h[row, j + 1]
            h[row, j] = c * x + conj_(s) * y
            h[row, j + 1] = -s * x + c * y
    for i in range(l, hi + 1):
        h[i, i] = h[i, i] + sigma


def hessenberg(a):
    """Unitary similarity to upper Hessenberg form via Householder reflectors."""
    h_arr = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef cplx[:, ::1] h = h_arr
    cdef Py_ssize_t n = h.shape[0]
    cdef cplx[::1] v = np.zeros(max(n, 1), dtype=np.complex128)
    cdef cplx[::1] tmp = np.zeros(max(n, 1), dtype=np.complex128)
    with nogil:
        _hessenberg_inplace(h, v, tmp)
    return h_arr


def hessenberg_eigvals(a, double deflation, long sweeps_per_n):
    """Eigenvalues by Hessenberg reduction and Wilkinson-shifted QR.

    Returns ``(values, iterations, converged)``; values are unsorted.
    """
    h_arr = hessenberg(a)
    cdef cplx[:, ::1] h = h_arr
    cdef Py_ssize_t n = h.shape[0]
    out_arr = np.zeros(n, dtype=np.complex128)
    cdef cplx[::1] out = out_arr
    cdef double[::1] cs = np.zeros(max(n, 1), dtype=np.float64)
    cdef cplx[::1] ss = np.zeros(max(n, 1), dtype=np.complex128)
    cdef double hnorm = float(np.linalg.norm(h_arr)), s
    cdef long max_iter = sweeps_per_n * (n if n > 1 else 1)
    cdef long iterations = 0, its = 0
    cdef Py_ssize_t hi = n - 1, l
    cdef cplx sigma
    cdef bint converged = True
    with nogil:
        while hi >= 0:
            l = hi
            while l > 0:
                s = cabs_(h[l - 1, l - 1]) + cabs_(h[l, l])
                if s == 0.0:
                    s = hnorm
                if cabs_(h[l, l - 1]) <= deflation * s:
                    h[l, l - 1] = 0.0
                    break
                l -= 1
            if l == hi:
                out[hi] = h[hi, hi]
                hi -= 1
                its = 0
                continue
            if iterations >= max_iter:
                converged = False
                break
            iterations += 1
            its += 1
            if its % 10 == 0:
                sigma = h[hi, hi] + 0.75 * cabs_(h[hi, hi - 1])
            else:
                sigma = _wilkinson(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
            _qr_step(h, l, hi, sigma, cs, ss)
    return out_arr, iterations, bool(converged)


def jacobi_eigh(b, double tol, long max_sweeps):
    """Cyclic Jacobi eigendecomposition of a Hermitian matrix.

    Returns ``(w, v, sweeps, converged)`` with ``b ~= v @ diag(w) @ v^H``;
    ``w`` is unsorted.
    """
    a_arr = np.array(b, dtype=np.complex128, order="C", copy=True)
    cdef cplx[:, ::1] a = a_arr
    cdef Py_ssize_t n = a.shape[0], p, q, i
    v_arr = np.eye(n, dtype=np.complex128)
    cdef cplx[:, ::1] v = v_arr
    cdef double floor = 1e-17 * float(np.linalg.norm(a_arr))
    cdef double mag, app, aqq, tau, t, c, s
    cdef cplx apq, e, se, sec, x, y
    cdef long sweep, done = 0
    cdef bint rotated, converged = False
    with nogil:
        for sweep in range(1, max_sweeps + 1):
            done = sweep
            rotated = False
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    mag = cabs_(apq)
                    app = a[p, p].real
                    aqq = a[q, q].real
                    if mag <= floor or mag <= tol * sqrt(fabs(app * aqq)):
                        continue
                    rotated = True
                    e = apq / mag
                    tau = (aqq - app) / (2.0 * mag)
                    if tau >= 0:
                        t = 1.0 / (fabs(tau) + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (fabs(tau) + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    se = s * e
                    sec = conj_(se)
                    for i in range(n):
                        x = a[i, p]
                        y = a[i, q]
                        a[i, p] = c * x - sec * y
                        a[i, q] = se * x + c * y
                    for i in range(n):
                        x = a[p, i]
                        y = a[q, i]
                        a[p, i] = c * x - se * y
                        a[q, i] = sec * x + c * y
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    a[p, p] = a[p, p].real
                    a[q, q] = a[q, q].real
                    for i in range(n):
                        x = v[i, p]
                        y = v[i, q]
                        v[i, p] = c * x - sec * y
                        v[i, q] = se * x + c * y
            if not rotated:
                converged = True
                break
    return np.diag(a_arr).real.copy(), v_arr, done, bool(converged)

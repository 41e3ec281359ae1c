# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Fixed-width Smith normal form kernel.

Mirrors the pure-Python reduction in :mod:`towercalc.snf` over int64, with
every add/multiply/negate overflow-checked. On the first operation that
would leave the 64-bit range the kernel raises :class:`KernelOverflow` so
the caller can redo the computation in arbitrary precision. Values are
never wrapped.
"""

import numpy as np

cdef extern from *:
    """
    #include <stdint.h>
    static int tc_add_ovf(int64_t a, int64_t b, int64_t *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static int tc_mul_ovf(int64_t a, int64_t b, int64_t *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    """
    int tc_add_ovf(long long a, long long b, long long *r) nogil
    int tc_mul_ovf(long long a, long long b, long long *r) nogil

cdef long long INT64_MIN = <long long>(-9223372036854775807LL - 1LL)


class KernelOverflow(ArithmeticError):
    """An intermediate value left the 64-bit range; retry in exact arithmetic."""


cdef int _axpy_row(long long[:, ::1] m, Py_ssize_t dst, Py_ssize_t src,
                   long long k, Py_ssize_t ncols) except -1:
    cdef Py_ssize_t x
    cdef long long p, s
    for x in range(ncols):
        if tc_mul_ovf(k, m[src, x], &p) or tc_add_ovf(m[dst, x], p, &s):
            raise KernelOverflow()
        m[dst, x] = s
    return 0


cdef int _axpy_col(long long[:, ::1] m, Py_ssize_t dst, Py_ssize_t src,
                   long long k, Py_ssize_t nrows) except -1:
    cdef Py_ssize_t x
    cdef long long p, s
    for x in range(nrows):
        if tc_mul_ovf(k, m[x, src], &p) or tc_add_ovf(m[x, dst], p, &s):
            raise KernelOverflow()
        m[x, dst] = s
    return 0


cdef int _negate_row(long long[:, ::1] m, Py_ssize_t i, Py_ssize_t ncols) except -1:
    cdef Py_ssize_t x
    for x in range(ncols):
        if m[i, x] == INT64_MIN:
            raise KernelOverflow()
        m[i, x] = -m[i, x]
    return 0


cdef void _swap_rows(long long[:, ::1] m, Py_ssize_t i, Py_ssize_t j, Py_ssize_t ncols):
    cdef Py_ssize_t x
    cdef long long tmp
    for x in range(ncols):
        tmp = m[i, x]
        m[i, x] = m[j, x]
        m[j, x] = tmp


cdef void _swap_cols(long long[:, ::1] m, Py_ssize_t i, Py_ssize_t j, Py_ssize_t nrows):
    cdef Py_ssize_t x
    cdef long long tmp
    for x in range(nrows):
        tmp = m[x, i]
        m[x, i] = m[x, j]
        m[x, j] = tmp


cdef long long _checked_div(long long num, long long den) except? -2:
    if num == INT64_MIN and den == -1:
        raise KernelOverflow()
    return num / den


def snf_i64(a_in, bint want_transforms=True):
    """Return ``(diag, u, v)`` with ``u @ a_in @ v`` diagonal.

    ``a_in`` is a 2-d int64 array (not modified). ``diag`` is a Python list
    of the min(m,n) diagonal entries, nonnegative, each dividing the next.
    With ``want_transforms=False`` the returned u and v are untouched
    identities; skipping their updates keeps intermediate values smaller, so
    the 64-bit path reaches further before falling back.
    """
    a_np = np.array(a_in, dtype=np.int64, order="C", copy=True)
    if a_np.ndim != 2:
        raise ValueError("expected a 2-d array")
    cdef Py_ssize_t m = a_np.shape[0]
    cdef Py_ssize_t n = a_np.shape[1]
    u_np = np.eye(m, dtype=np.int64)
    v_np = np.eye(n, dtype=np.int64)
    if m == 0 or n == 0:
        return [], u_np, v_np

    cdef long long[:, ::1] a = a_np
    cdef long long[:, ::1] u = u_np
    cdef long long[:, ::1] v = v_np
    cdef Py_ssize_t t = 0, i, j, pi, pj, bad_i
    cdef Py_ssize_t rmin = m if m < n else n
    cdef long long best, ax, q, piv, cost, best_cost
    cdef bint found, dirty

    row_nnz_np = np.zeros(m, dtype=np.int64)
    col_nnz_np = np.zeros(n, dtype=np.int64)
    cdef long long[::1] row_nnz = row_nnz_np
    cdef long long[::1] col_nnz = col_nnz_np

    while t < rmin:
        # pivot: smallest |entry|, ties broken by least Markowitz fill-in
        found = False
        best = 0
        pi = pj = t
        for i in range(m):
            row_nnz[i] = 0
        for j in range(n):
            col_nnz[j] = 0
        for i in range(t, m):
            for j in range(t, n):
                ax = a[i, j]
                if ax != 0:
                    row_nnz[i] += 1
                    col_nnz[j] += 1
                    if ax < 0:
                        if ax == INT64_MIN:
                            raise KernelOverflow()
                        ax = -ax
                    if not found or ax < best:
                        found = True
                        best = ax
        if not found:
            break
        best_cost = -1
        for i in range(t, m):
            for j in range(t, n):
                ax = a[i, j]
                if ax != 0:
                    if ax < 0:
                        ax = -ax
                    if ax == best:
                        cost = (row_nnz[i] - 1) * (col_nnz[j] - 1)
                        if best_cost < 0 or cost < best_cost:
                            best_cost = cost
                            pi = i
                            pj = j
        if pi != t:
            _swap_rows(a, t, pi, n)
            if want_transforms:
                _swap_rows(u, t, pi, m)
        if pj != t:
            _swap_cols(a, t, pj, m)
            if want_transforms:
                _swap_cols(v, t, pj, n)

        while True:
            dirty = False
            for i in range(t + 1, m):
                if a[i, t] != 0:
                    q = _checked_div(a[i, t], a[t, t])
                    if q == INT64_MIN:
                        raise KernelOverflow()
                    if q != 0:
                        _axpy_row(a, i, t, -q, n)
                        if want_transforms:
                            _axpy_row(u, i, t, -q, m)
                    if a[i, t] != 0:
                        _swap_rows(a, t, i, n)
                        if want_transforms:
                            _swap_rows(u, t, i, m)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if a[t, j] != 0:
                    q = _checked_div(a[t, j], a[t, t])
                    if q == INT64_MIN:
                        raise KernelOverflow()
                    if q != 0:
                        _axpy_col(a, j, t, -q, m)
                        if want_transforms:
                            _axpy_col(v, j, t, -q, n)
                    if a[t, j] != 0:
                        _swap_cols(a, t, j, m)
                        if want_transforms:
                            _swap_cols(v, t, j, n)
                        dirty = True
                        break
            if dirty:
                continue
            # cross is clear; enforce divisibility of the remaining block
            piv = a[t, t]
            bad_i = -1
            if piv != 1 and piv != -1:
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i, j] % piv != 0:
                            bad_i = i
                            break
                    if bad_i >= 0:
                        break
            if bad_i < 0:
                break
            _axpy_row(a, t, bad_i, 1, n)
            if want_transforms:
                _axpy_row(u, t, bad_i, 1, m)
        if a[t, t] < 0:
            _negate_row(a, t, n)
            if want_transforms:
                _negate_row(u, t, m)
        t += 1

    diag = [int(a[i, i]) for i in range(rmin)]
    return diag, u_np, v_np

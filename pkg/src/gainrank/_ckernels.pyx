# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact inertia kernel (int64 Gaussian integers, overflow-checked).

Same elimination and pivot order as ``gainrank._pykernels.gaussian_inertia``.
Raises OverflowError when an intermediate leaves int64; the caller then
retries with the arbitrary-precision Python kernel.
"""

import numpy as np
from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int gr_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int gr_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int gr_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int gr_mul(long long a, long long b, long long *r) nogil
    int gr_add(long long a, long long b, long long *r) nogil
    int gr_sub(long long a, long long b, long long *r) nogil


cdef inline int64_t _abs(int64_t x) nogil:
    return -x if x < 0 else x


cdef int64_t _gcd(int64_t a, int64_t b) nogil:
    a = _abs(a)
    b = _abs(b)
    while b:
        a, b = b, a % b
    return a


# complex multiply (ar + i ai)(br + i bi) with overflow flag
cdef inline int _cmul(long long ar, long long ai, long long br, long long bi,
                      long long *cr, long long *ci) nogil:
    cdef long long p, q
    if gr_mul(ar, br, &p) or gr_mul(ai, bi, &q) or gr_sub(p, q, cr):
        return 1
    if gr_mul(ar, bi, &p) or gr_mul(ai, br, &q) or gr_add(p, q, ci):
        return 1
    return 0


cdef int _eliminate(int64_t[:, ::1] R, int64_t[:, ::1] I, int n,
                    int *pos_out, int *neg_out) nogil:
    cdef char *alive
    cdef int remaining = n, pos = 0, neg = 0
    cdef int i, j, a, b, k, l
    cdef long long d, ad, s, m, pr, pi, t, u, v
    cdef long long xr, xi, yr, yi, t1r, t1i, u1r, u1i, t2r, t2i, u2r, u2i
    cdef int64_t g
    cdef int64_t best
    alive = <char *> malloc(n)
    for i in range(n):
        alive[i] = 1

    while remaining > 0:
        k = -1
        best = 0
        for i in range(n):
            if alive[i] and R[i, i] != 0:
                if k < 0 or _abs(R[i, i]) < best:
                    k = i
                    best = _abs(R[i, i])
        if k >= 0:
            d = R[k, k]
            s = 1 if d > 0 else -1
            ad = _abs(d)
            alive[k] = 0
            remaining -= 1
            for a in range(n):
                if not alive[a]:
                    continue
                for b in range(a, n):
                    if not alive[b]:
                        continue
                    # b_a * conj(b_b) = (R[a,k] + i I[a,k]) (R[b,k] - i I[b,k])
                    if _cmul(R[a, k], I[a, k], R[b, k], -I[b, k], &pr, &pi):
                        free(alive)
                        return 1
                    if gr_mul(ad, R[a, b], &t) or gr_mul(s, pr, &u) or gr_sub(t, u, &v):
                        free(alive)
                        return 1
                    R[a, b] = v
                    if gr_mul(ad, I[a, b], &t) or gr_mul(s, pi, &u) or gr_sub(t, u, &v):
                        free(alive)
                        return 1
                    I[a, b] = v
                    R[b, a] = R[a, b]
                    I[b, a] = -I[a, b]
            if s > 0:
                pos += 1
            else:
                neg += 1
        else:
            k = -1
            l = -1
            for i in range(n):
                if not alive[i]:
                    continue
                for j in range(i + 1, n):
                    if alive[j] and (R[i, j] != 0 or I[i, j] != 0):
                        k = i
                        l = j
                        break
                if k >= 0:
                    break
            if k < 0:
                break
            xr = R[k, l]
            xi = I[k, l]
            if gr_mul(xr, xr, &t) or gr_mul(xi, xi, &u) or gr_add(t, u, &m):
                free(alive)
                return 1
            alive[k] = 0
            alive[l] = 0
            remaining -= 2
            for a in range(n):
                if not alive[a]:
                    continue
                for b in range(a, n):
                    if not alive[b]:
                        continue
                    # A[a,k] * x * conj(A[b,l]) + A[a,l] * conj(x) * conj(A[b,k])
                    if _cmul(R[a, k], I[a, k], xr, xi, &t1r, &t1i):
                        free(alive)
                        return 1
                    if _cmul(t1r, t1i, R[b, l], -I[b, l], &u1r, &u1i):
                        free(alive)
                        return 1
                    if _cmul(R[a, l], I[a, l], xr, -xi, &t2r, &t2i):
                        free(alive)
                        return 1
                    if _cmul(t2r, t2i, R[b, k], -I[b, k], &u2r, &u2i):
                        free(alive)
                        return 1
                    if gr_add(u1r, u2r, &pr) or gr_add(u1i, u2i, &pi):
                        free(alive)
                        return 1
                    if gr_mul(m, R[a, b], &t) or gr_sub(t, pr, &v):
                        free(alive)
                        return 1
                    R[a, b] = v
                    if gr_mul(m, I[a, b], &t) or gr_sub(t, pi, &v):
                        free(alive)
                        return 1
                    I[a, b] = v
                    R[b, a] = R[a, b]
                    I[b, a] = -I[a, b]
            pos += 1
            neg += 1

        g = 0
        for a in range(n):
            if not alive[a]:
                continue
            for b in range(a, n):
                if alive[b]:
                    g = _gcd(g, R[a, b])
                    g = _gcd(g, I[a, b])
        if g > 1:
            for a in range(n):
                if not alive[a]:
                    continue
                for b in range(n):
                    if alive[b]:
                        R[a, b] = R[a, b] // g
                        I[a, b] = I[a, b] // g

    free(alive)
    pos_out[0] = pos
    neg_out[0] = neg
    return 0


def gaussian_inertia(re, im):
    """Return ``(i_plus, i_minus, i_zero)`` of the Hermitian matrix ``re + i*im``."""
    if len(re) == 0:
        return 0, 0, 0
    cdef int64_t[:, ::1] R = np.array(re, dtype=np.int64, order="C", copy=True)
    cdef int64_t[:, ::1] I = np.array(im, dtype=np.int64, order="C", copy=True)
    cdef int n = R.shape[0]
    cdef int pos = 0, neg = 0
    if _eliminate(R, I, n, &pos, &neg):
        raise OverflowError("int64 overflow in exact inertia kernel")
    return pos, neg, n - pos - neg

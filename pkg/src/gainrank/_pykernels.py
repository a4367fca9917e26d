"""Pure-Python exact inertia of Hermitian matrices over the Gaussian integers.

Congruence elimination with 1x1 pivots on non-zero (real) diagonal entries
and 2x2 pivots ``[[0, a], [conj(a), 0]]`` when the diagonal is zero. Each
Schur complement is multiplied by a positive integer to stay integral, then
divided by the content (gcd of all real and imaginary parts). Positive scaling
is a congruence, so the inertia is unchanged.
"""

from __future__ import annotations

from math import gcd


def gaussian_inertia(re: list[list[int]], im: list[list[int]]) -> tuple[int, int, int]:
    """Return ``(i_plus, i_minus, i_zero)`` of the Hermitian matrix ``re + i*im``.

    The caller guarantees ``re`` symmetric, ``im`` antisymmetric. Inputs are
    not modified.
    """
    n = len(re)
    R = [row[:] for row in re]
    I = [row[:] for row in im]
    active = list(range(n))
    pos = neg = 0

    while active:
        diag = [i for i in active if R[i][i] != 0]
        if diag:
            k = min(diag, key=lambda i: abs(R[i][i]))
            d = R[k][k]
            rest = [i for i in active if i != k]
            s = 1 if d > 0 else -1
            ad = abs(d)
            for a in rest:
                bar, bai = R[a][k], I[a][k]
                for b in rest:
                    if b < a:
                        continue
                    bbr, bbi = R[b][k], I[b][k]
                    # b_a * conj(b_b)
                    pr = bar * bbr + bai * bbi
                    pi = bai * bbr - bar * bbi
                    R[a][b] = ad * R[a][b] - s * pr
                    I[a][b] = ad * I[a][b] - s * pi
                    R[b][a] = R[a][b]
                    I[b][a] = -I[a][b]
            if s > 0:
                pos += 1
            else:
                neg += 1
            active = rest
        else:
            pair = next(((i, j) for i in active for j in active
                         if i < j and (R[i][j] != 0 or I[i][j] != 0)), None)
            if pair is None:
                break
            k, l = pair
            ar, ai = R[k][l], I[k][l]
            m = ar * ar + ai * ai
            rest = [i for i in active if i != k and i != l]
            for a in rest:
                xr, xi = R[a][k], I[a][k]
                yr, yi = R[a][l], I[a][l]
                for b in rest:
                    if b < a:
                        continue
                    zr, zi = R[b][k], -I[b][k]  # conj(A[b][k])
                    wr, wi = R[b][l], -I[b][l]  # conj(A[b][l])
                    # A[a][k] * a * conj(A[b][l])
                    t1r = xr * ar - xi * ai
                    t1i = xr * ai + xi * ar
                    u1r = t1r * wr - t1i * wi
                    u1i = t1r * wi + t1i * wr
                    # A[a][l] * conj(a) * conj(A[b][k])
                    t2r = yr * ar + yi * ai
                    t2i = yi * ar - yr * ai
                    u2r = t2r * zr - t2i * zi
                    u2i = t2r * zi + t2i * zr
                    R[a][b] = m * R[a][b] - (u1r + u2r)
                    I[a][b] = m * I[a][b] - (u1i + u2i)
                    R[b][a] = R[a][b]
                    I[b][a] = -I[a][b]
            pos += 1
            neg += 1
            active = rest

        g = 0
        for a in active:
            for b in active:
                if b >= a:
                    g = gcd(g, R[a][b], I[a][b])
        if g > 1:
            for a in active:
                for b in active:
                    R[a][b] //= g
                    I[a][b] //= g

    return pos, neg, n - pos - neg

"""Numba kernel backend: explicit loops, jit compiled on first use."""

import numpy as np
from numba import njit


@njit(cache=True)
def mat_mul(a, b, mul_t, add_t):
    m, n, _ = a.shape
    out = np.empty_like(a)
    for s in range(m):
        for i in range(n):
            for j in range(n):
                acc = mul_t[a[s, i, 0], b[s, 0, j]]
                for k in range(1, n):
                    acc = add_t[acc, mul_t[a[s, i, k], b[s, k, j]]]
                out[s, i, j] = acc
    return out


@njit(cache=True)
def mat_inv(a, mul_t, add_t, neg_t, inv_t):
    m, n, _ = a.shape
    out = np.empty_like(a)
    aug = np.zeros((n, 2 * n), dtype=a.dtype)
    for s in range(m):
        aug[:, :] = 0
        aug[:, :n] = a[s]
        for i in range(n):
            aug[i, n + i] = 1
        for j in range(n):
            piv = j
            while aug[piv, j] == 0:
                piv += 1
            if piv != j:
                for k in range(2 * n):
                    t = aug[j, k]
                    aug[j, k] = aug[piv, k]
                    aug[piv, k] = t
            scale = inv_t[aug[j, j]]
            for k in range(2 * n):
                aug[j, k] = mul_t[scale, aug[j, k]]
            for i in range(n):
                if i == j or aug[i, j] == 0:
                    continue
                f = neg_t[aug[i, j]]
                for k in range(2 * n):
                    aug[i, k] = add_t[aug[i, k], mul_t[f, aug[j, k]]]
        out[s] = aug[:, n:]
    return out


@njit(cache=True)
def mat_det(a, mul_t, add_t, neg_t):
    m, n, _ = a.shape
    out = np.empty(m, dtype=a.dtype)
    work = np.zeros((n, n), dtype=a.dtype)
    for s in range(m):
        work[:, :] = a[s]
        det = np.int16(1)
        sign_flip = False
        for j in range(n):
            piv = -1
            for i in range(j, n):
                if work[i, j] != 0:
                    piv = i
                    break
            if piv < 0:
                det = np.int16(0)
                break
            if piv != j:
                for k in range(n):
                    t = work[j, k]
                    work[j, k] = work[piv, k]
                    work[piv, k] = t
                sign_flip = not sign_flip
            det = mul_t[det, work[j, j]]
            factor = inv_from_row(work[j, j], mul_t)
            for i in range(j + 1, n):
                if work[i, j] == 0:
                    continue
                f = neg_t[mul_t[work[i, j], factor]]
                for k in range(j, n):
                    work[i, k] = add_t[work[i, k], mul_t[f, work[j, k]]]
        if sign_flip and det != 0:
            det = neg_t[det]
        out[s] = det
    return out


@njit(cache=True)
def inv_from_row(x, mul_t):
    # pivot inverse by row scan; Q is small and this runs once per pivot
    for y in range(mul_t.shape[0]):
        if mul_t[x, y] == 1:
            return np.int16(y)
    return np.int16(0)


@njit(cache=True)
def commute_mask(a, g, mul_t, add_t):
    m, n, _ = a.shape
    out = np.empty(m, dtype=np.bool_)
    for s in range(m):
        ok = True
        for i in range(n):
            if not ok:
                break
            for j in range(n):
                acc1 = mul_t[a[s, i, 0], g[0, j]]
                acc2 = mul_t[g[i, 0], a[s, 0, j]]
                for k in range(1, n):
                    acc1 = add_t[acc1, mul_t[a[s, i, k], g[k, j]]]
                    acc2 = add_t[acc2, mul_t[g[i, k], a[s, k, j]]]
                if acc1 != acc2:
                    ok = False
                    break
        out[s] = ok
    return out

"""Single-matrix helpers over a FieldSpec: exact, plain loops, small n."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import kernels
from .ff import FieldSpec


def identity(n: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.int16)
    np.fill_diagonal(m, 1)
    return m


def scalar_matrix(n: int, c: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.int16)
    np.fill_diagonal(m, c)
    return m


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.int16)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    return m


def _tables(spec: FieldSpec):
    return spec.mul_t, spec.add_t, spec.neg_t, spec.inv_t


def mat_mul_s(spec: FieldSpec, a, b) -> np.ndarray:
    return kernels.mat_mul(a[None], b[None], spec.mul_t, spec.add_t)[0]


def mat_inv_s(spec: FieldSpec, a) -> np.ndarray:
    return kernels.mat_inv(a[None], *_tables(spec))[0]


def mat_det_s(spec: FieldSpec, a) -> int:
    return int(kernels.mat_det(a[None], spec.mul_t, spec.add_t, spec.neg_t)[0])


def mat_sub(spec: FieldSpec, a, b) -> np.ndarray:
    return spec.add_t[a, spec.neg_t[b]]


def mat_vec(spec: FieldSpec, a, v) -> np.ndarray:
    n = a.shape[0]
    out = np.zeros(n, dtype=np.int16)
    for i in range(n):
        acc = 0
        for k in range(n):
            acc = spec.add_t[acc, spec.mul_t[a[i, k], v[k]]]
        out[i] = acc
    return out


def conj_transpose(spec: FieldSpec, a) -> np.ndarray:
    return spec.conj_t[a].T.copy()


def mat_pow(spec: FieldSpec, a, k: int) -> np.ndarray:
    if k < 0:
        return mat_pow(spec, mat_inv_s(spec, a), -k)
    result = identity(a.shape[0])
    base = a.copy()
    while k:
        if k & 1:
            result = mat_mul_s(spec, result, base)
        base = mat_mul_s(spec, base, base)
        k >>= 1
    return result


def mat_rank(spec: FieldSpec, a) -> int:
    m = a.astype(np.int16).copy()
    rows, cols = m.shape
    rank = 0
    for j in range(cols):
        piv = -1
        for i in range(rank, rows):
            if m[i, j] != 0:
                piv = i
                break
        if piv < 0:
            continue
        m[[rank, piv]] = m[[piv, rank]]
        s = spec.inv_t[m[rank, j]]
        m[rank] = spec.mul_t[s, m[rank]]
        for i in range(rows):
            if i != rank and m[i, j] != 0:
                f = spec.neg_t[m[i, j]]
                m[i] = spec.add_t[m[i], spec.mul_t[f, m[rank]]]
        rank += 1
        if rank == rows:
            break
    return rank


def nullspace(spec: FieldSpec, a) -> list[np.ndarray]:
    """Basis of the right kernel, echelon-built, over F_{q^2}."""
    m = a.astype(np.int16).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for j in range(cols):
        piv = -1
        for i in range(r, rows):
            if m[i, j] != 0:
                piv = i
                break
        if piv < 0:
            continue
        m[[r, piv]] = m[[piv, r]]
        s = spec.inv_t[m[r, j]]
        m[r] = spec.mul_t[s, m[r]]
        for i in range(rows):
            if i != r and m[i, j] != 0:
                f = spec.neg_t[m[i, j]]
                m[i] = spec.add_t[m[i], spec.mul_t[f, m[r]]]
        pivots.append(j)
        r += 1
        if r == rows:
            break
    basis = []
    free = [j for j in range(cols) if j not in pivots]
    for j in free:
        v = np.zeros(cols, dtype=np.int16)
        v[j] = 1
        for ri, pj in enumerate(pivots):
            v[pj] = spec.neg_t[m[ri, j]]
        basis.append(v)
    return basis


def charpoly(spec: FieldSpec, a) -> tuple[int, ...]:
    """Characteristic polynomial det(xI - a), coefficients constant first, monic.

    Coefficient of x^(n-k) is (-1)^k times the sum of the k x k principal
    minors; exact over the field tables.
    """
    n = a.shape[0]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k in range(1, n + 1):
        total = 0
        for rows in combinations(range(n), k):
            sub = a[np.ix_(rows, rows)]
            total = spec.add_t[total, mat_det_s(spec, sub)]
        if k % 2:
            total = spec.neg_t[total]
        coeffs[n - k] = int(total)
    return tuple(coeffs)


def poly_at_matrix(spec: FieldSpec, coeffs, a) -> np.ndarray:
    """Evaluate a polynomial (constant first) at a square matrix, by Horner."""
    n = a.shape[0]
    acc = scalar_matrix(n, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = mat_mul_s(spec, acc, a)
        acc = spec.add_t[acc, scalar_matrix(n, c)]
    return acc

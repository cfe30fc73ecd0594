"""Pure numpy kernel backend: everything is fancy indexing on the tables."""

from itertools import permutations

import numpy as np


def mat_mul(a, b, mul_t, add_t):
    m, n, _ = a.shape
    if m == 0:
        return a.copy()
    acc = mul_t[a[:, :, 0][:, :, None], b[:, 0, :][:, None, :]]
    for k in range(1, n):
        term = mul_t[a[:, :, k][:, :, None], b[:, k, :][:, None, :]]
        acc = add_t[acc, term]
    return acc


def mat_inv(a, mul_t, add_t, neg_t, inv_t):
    m, n, _ = a.shape
    if m == 0:
        return a.copy()
    aug = np.zeros((m, n, 2 * n), dtype=a.dtype)
    aug[:, :, :n] = a
    aug[:, np.arange(n), n + np.arange(n)] = 1
    rows = np.arange(m)
    for j in range(n):
        piv = j + np.argmax(aug[:, j:, j] != 0, axis=1)
        tmp = aug[rows, j].copy()
        aug[rows, j] = aug[rows, piv]
        aug[rows, piv] = tmp
        scale = inv_t[aug[:, j, j]]
        aug[:, j, :] = mul_t[scale[:, None], aug[:, j, :]]
        for i in range(n):
            if i == j:
                continue
            f = neg_t[aug[:, i, j]]
            aug[:, i, :] = add_t[aug[:, i, :], mul_t[f[:, None], aug[:, j, :]]]
    return aug[:, :, n:].copy()


def mat_det(a, mul_t, add_t, neg_t):
    m, n, _ = a.shape
    if m == 0:
        return np.zeros(0, dtype=a.dtype)
    if n == 1:
        return a[:, 0, 0].copy()
    # Leibniz sum; n stays tiny here so n! terms are fine
    acc = np.zeros(m, dtype=a.dtype)
    for perm in permutations(range(n)):
        term = a[:, 0, perm[0]]
        for i in range(1, n):
            term = mul_t[term, a[:, i, perm[i]]]
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        if inversions % 2:
            term = neg_t[term]
        acc = add_t[acc, term]
    return acc


def commute_mask(a, g, mul_t, add_t):
    m, n, _ = a.shape
    if m == 0:
        return np.zeros(0, dtype=bool)
    gb = np.broadcast_to(g, (m, n, n))
    left = mat_mul(a, gb, mul_t, add_t)
    right = mat_mul(gb, a, mul_t, add_t)
    return (left == right).all(axis=(1, 2))

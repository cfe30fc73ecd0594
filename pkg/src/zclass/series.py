"""Exact truncated integer power series and the z-class generating functions.

A series of order N holds coefficients c_0..c_N of x^0..x^N; every operation
truncates to the shorter operand.  Coefficients are exact Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .combinatorics import enumerate_partitions, partition_counts_upto


@dataclass(frozen=True)
class IntSeries:
    """Truncated power series with exact integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("series needs at least the constant coefficient")
        for c in self.coeffs:
            if not isinstance(c, int):
                raise ValueError("coefficients must be ints")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]


def series_one(order: int) -> IntSeries:
    """The constant series 1, truncated at the given order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return IntSeries((1,) + (0,) * order)


def series_product(a: IntSeries, b: IntSeries) -> IntSeries:
    """Cauchy product, truncated to min(a.order, b.order)."""
    order = min(a.order, b.order)
    out = [0] * (order + 1)
    for i in range(order + 1):
        ai = a.coeffs[i]
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return IntSeries(tuple(out))


def substitute_power(a: IntSeries, i: int, order: int) -> IntSeries:
    """a(x^i) truncated at the given order."""
    if i < 1:
        raise ValueError("i must be >= 1")
    out = [0] * (order + 1)
    for k, c in enumerate(a.coeffs):
        if k * i > order:
            break
        out[k * i] = c
    return IntSeries(tuple(out))


def geometric_power(i: int, k: int, order: int) -> IntSeries:
    """1 / (1 - x^i)^k truncated at the given order.

    Coefficient of x^(i*m) is binom(k + m - 1, m); zero elsewhere.
    """
    if i < 1 or k < 0:
        raise ValueError("need i >= 1 and k >= 0")
    out = [0] * (order + 1)
    for m in range(order // i + 1):
        out[i * m] = math.comb(k + m - 1, m) if k > 0 else (1 if m == 0 else 0)
    return IntSeries(tuple(out))


def z_series(order: int) -> IntSeries:
    """Generating function for z-classes in GL_n(C): prod_i 1/(1-x^i)^p(i)."""
    pc = partition_counts_upto(max(order, 1))
    acc = series_one(order)
    for i in range(1, order + 1):
        acc = series_product(acc, geometric_power(i, pc[i], order))
    return acc


def z_real_series(order: int) -> IntSeries:
    """Real form: z(x) * z(x^2)."""
    z = z_series(order)
    return series_product(z, substitute_power(z, 2, order))


def z_fq_series(order: int) -> IntSeries:
    """Finite-field form: prod_{i >= 1} z(x^i); factors with i > order are trivial."""
    z = z_series(order)
    acc = series_one(order)
    for i in range(1, order + 1):
        acc = series_product(acc, substitute_power(z, i, order))
    return acc


def z_closed_form(n: int) -> int:
    """Coefficient of x^n in z(x) as a finite sum over partitions of n.

    For a partition with k_i parts equal to i the contribution is
    prod_i binom(p(i) + k_i - 1, k_i).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    pc = partition_counts_upto(max(n, 1))
    total = 0
    for lam in enumerate_partitions(n):
        term = 1
        for i, k in lam.multiplicities().items():
            term *= math.comb(pc[i] + k - 1, k)
        total += term
    return total

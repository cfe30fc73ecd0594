"""Polynomials over F_{q^2}: the U-reciprocal transform, irreducibility,
enumeration, and factorization into self-U-reciprocal blocks.

A polynomial is a Poly wrapping a coefficient tuple of element indices,
constant term first, highest nonzero coefficient last.  The canonical order
on polynomials is by degree, then by the coefficient tuple compared from the
constant term up; enumeration emits candidates in exactly that order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundExceededError
from .ff import FieldSpec

DEFAULT_POLY_BOUND = 5_000_000  # cap on Q^d candidate scans


@dataclass(frozen=True)
class Poly:
    """Coefficient indices, constant first; zero polynomial is (0,)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __repr__(self):
        return f"Poly({','.join(str(c) for c in self.coeffs)})"


def poly_make(coeffs) -> Poly:
    coeffs = [int(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        coeffs = [0]
    return Poly(tuple(coeffs))


def is_zero(f: Poly) -> bool:
    return f.coeffs == (0,)


def poly_mul(spec: FieldSpec, f: Poly, g: Poly) -> Poly:
    if is_zero(f) or is_zero(g):
        return Poly((0,))
    out = [0] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = int(spec.add_t[out[i + j], spec.mul_t[a, b]])
    return poly_make(out)


def poly_divmod(spec: FieldSpec, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if is_zero(g):
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = g.degree
    quo = [0] * max(len(rem) - dg, 1)
    lead_inv = int(spec.inv_t[g.coeffs[-1]])
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        factor = int(spec.mul_t[c, lead_inv])
        quo[i - dg] = factor
        nf = int(spec.neg_t[factor])
        for j, b in enumerate(g.coeffs):
            rem[i - dg + j] = int(spec.add_t[rem[i - dg + j], spec.mul_t[nf, b]])
    return poly_make(quo), poly_make(rem)


def poly_gcd(spec: FieldSpec, f: Poly, g: Poly) -> Poly:
    """Monic gcd."""
    while not is_zero(g):
        f, g = g, poly_divmod(spec, f, g)[1]
    if is_zero(f):
        return f
    lead_inv = int(spec.inv_t[f.coeffs[-1]])
    return poly_make([int(spec.mul_t[c, lead_inv]) for c in f.coeffs])


def poly_powmod(spec: FieldSpec, base: Poly, exp: int, mod: Poly) -> Poly:
    result = Poly((1,))
    base = poly_divmod(spec, base, mod)[1]
    while exp:
        if exp & 1:
            result = poly_divmod(spec, poly_mul(spec, result, base), mod)[1]
        base = poly_divmod(spec, poly_mul(spec, base, base), mod)[1]
        exp >>= 1
    return result


def poly_eval(spec: FieldSpec, f: Poly, a: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = int(spec.add_t[spec.mul_t[acc, a], c])
    return acc


def u_reciprocal(spec: FieldSpec, f: Poly) -> Poly:
    """The transform f~(x) = conj(f(0))^-1 x^d conj(f)(1/x); always monic.

    Coefficient j of the result is conj(f_0)^-1 * conj(f_{d-j}).
    Requires f nonzero with nonzero constant term.
    """
    if is_zero(f) or f.coeffs[0] == 0:
        raise ValueError("u_reciprocal needs a nonzero constant term")
    c0inv = int(spec.inv_t[spec.conj_t[f.coeffs[0]]])
    d = f.degree
    out = [int(spec.mul_t[c0inv, spec.conj_t[f.coeffs[d - j]]]) for j in range(d + 1)]
    return Poly(tuple(out))


def is_self_u_reciprocal(spec: FieldSpec, f: Poly) -> bool:
    if not f.is_monic:
        raise ValueError("defined for monic polynomials")
    if f.coeffs[0] == 0:
        raise ValueError("needs a nonzero constant term")
    return u_reciprocal(spec, f) == f


def is_irreducible(spec: FieldSpec, f: Poly, field: str = "extension") -> bool:
    """Irreducibility over F_{q^2}, or over F_q with field="base".

    Tests that gcd(x^(Q^k) - x mod f, f) is constant for k = 1..deg//2, i.e.
    that f has no factor of degree at most deg/2.
    """
    if field == "extension":
        size = spec.order
    elif field == "base":
        size = spec.q
        sub = set(int(a) for a in spec.subfield)
        if any(c not in sub for c in f.coeffs):
            raise ValueError("base-field test needs subfield coefficients")
    else:
        raise ValueError(f"field must be extension or base, got {field!r}")
    if f.degree < 1:
        raise ValueError("constants are neither reducible nor irreducible")
    if not f.is_monic:
        raise ValueError("defined for monic polynomials")
    if f.degree == 1:
        return True
    x = Poly((0, 1))
    for k in range(1, f.degree // 2 + 1):
        xq = poly_powmod(spec, x, size ** k, f)
        diff = poly_make([int(spec.add_t[c, spec.neg_t[d]]) for c, d in
                          zip(list(xq.coeffs) + [0] * 2, [0, 1] + [0] * len(xq.coeffs))])
        g = poly_gcd(spec, f, diff)
        if g.degree > 0:
            return False
    return True


def _coeff_grid(Q: int, d: int, lo: int, hi: int) -> np.ndarray:
    """Rows lo..hi of the canonical scan of monic degree-d coefficient vectors.

    Row r encodes the low coefficients (c_0..c_{d-1}) with c_0 as the most
    significant digit, so ascending row order is the canonical poly order.
    """
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((hi - lo, d), dtype=np.int16)
    for j in range(d):
        out[:, j] = (idx // Q ** (d - 1 - j)) % Q
    return out


def enumerate_irreducibles(spec: FieldSpec, d: int, filter: str = "all",
                           bound: int = DEFAULT_POLY_BOUND):
    """Monic irreducibles of degree d over F_{q^2}, in canonical order.

    filter="all": every irreducible.
    filter="self_u_reciprocal": only those equal to their own transform.
    filter="non_self_u_reciprocal_pairs": (g, g~) pairs with g canonically
    smaller, each pair listed once.
    Raises BoundExceededError when Q^d exceeds the scan bound.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    Q = spec.order
    total = Q ** d
    if total > bound:
        raise BoundExceededError(
            f"degree-{d} scan over F_{Q} has {total} candidates, over bound {bound}",
            projected=total, bound=bound)

    if filter == "self_u_reciprocal":
        cands = _self_urec_candidates(spec, d, total)
        return [f for f in cands if is_irreducible(spec, f)]

    out = []
    step = 1 << 16
    for lo in range(0, total, step):
        hi = min(lo + step, total)
        grid = _coeff_grid(Q, d, lo, hi)
        for row in grid:
            if row[0] == 0:
                continue  # zero constant term is never irreducible for d >= 2
            f = Poly(tuple(int(c) for c in row) + (1,))
            if d == 1 or is_irreducible(spec, f):
                out.append(f)
        if d == 1 and lo == 0:
            # x itself: constant term 0 but degree 1 is irreducible
            out.insert(0, Poly((0, 1)))
    if filter == "all":
        return out
    if filter == "non_self_u_reciprocal_pairs":
        have = {f.coeffs for f in out}
        pairs = []
        for f in out:
            if f.coeffs[0] == 0:
                continue  # x has no transform
            g = u_reciprocal(spec, f)
            if g == f:
                continue
            if f.coeffs < g.coeffs:
                if g.coeffs not in have:
                    raise RuntimeError("transform of an irreducible not irreducible")
                pairs.append((f, g))
        return pairs
    raise ValueError(f"unknown filter {filter!r}")


def _self_urec_candidates(spec: FieldSpec, d: int, total: int) -> list[Poly]:
    """Vectorized scan for monic f with f = f~, before any irreducibility test."""
    Q = spec.order
    conj_t = spec.conj_t.astype(np.int64)
    mul_t = spec.mul_t
    inv_t = spec.inv_t
    out = []
    step = 1 << 18
    for lo in range(0, total, step):
        hi = min(lo + step, total)
        grid = _coeff_grid(Q, d, lo, hi)
        c0 = grid[:, 0].astype(np.int64)
        mask = c0 != 0
        # constant term must have norm one: conj(c0)^-1 * conj(1) = c0 condition at j = 0
        c0inv_conj = inv_t[conj_t[c0]]
        mask &= mul_t[c0, conj_t[c0]] == 1
        # full check f_j = conj(c0)^-1 conj(f_{d-j}) for 1 <= j <= d - 1
        full = np.concatenate([grid, np.ones((hi - lo, 1), dtype=np.int16)], axis=1)
        for j in range(1, d):
            want = mul_t[c0inv_conj, conj_t[full[:, d - j].astype(np.int64)]]
            mask &= full[:, j] == want
        for row in full[mask]:
            out.append(Poly(tuple(int(c) for c in row)))
    return out


@dataclass(frozen=True)
class SelfURecFactorization:
    """f = prod p_i^{m_i} * prod (q_j q_j~)^{n_j} with p_i self-U-reciprocal."""

    self_factors: tuple[tuple[Poly, int], ...]
    pair_factors: tuple[tuple[Poly, Poly, int], ...]


def self_urec_factorize(spec: FieldSpec, f: Poly,
                        bound: int = DEFAULT_POLY_BOUND) -> SelfURecFactorization:
    """Factor a monic self-U-reciprocal f with f(0) != 0 into irreducible
    self-U-reciprocal blocks and transform pairs."""
    if not f.is_monic:
        raise ValueError("input must be monic")
    if f.coeffs[0] == 0:
        raise ValueError("input needs a nonzero constant term")
    if not is_self_u_reciprocal(spec, f):
        raise ValueError("input is not self-U-reciprocal")
    selfs: list[tuple[Poly, int]] = []
    pairs: list[tuple[Poly, Poly, int]] = []
    rem = f
    d = 1
    while rem.degree > 0:
        if d > rem.degree:
            raise RuntimeError("trial division ran past the degree")
        for g in enumerate_irreducibles(spec, d, bound=bound):
            if g.coeffs[0] == 0:
                continue
            m = 0
            while True:
                quo, r = poly_divmod(spec, rem, g)
                if not is_zero(r):
                    break
                rem = quo
                m += 1
            if m == 0:
                continue
            gt = u_reciprocal(spec, g)
            if gt == g:
                selfs.append((g, m))
            elif g.coeffs < gt.coeffs:
                mt = 0
                while True:
                    quo, r = poly_divmod(spec, rem, gt)
                    if not is_zero(r):
                        break
                    rem = quo
                    mt += 1
                if mt != m:
                    raise RuntimeError("pair multiplicities disagree")
                pairs.append((g, gt, m))
            else:
                raise RuntimeError("transform seen before its partner")
        d += 1
    return SelfURecFactorization(tuple(selfs), tuple(pairs))


def factorization_product(spec: FieldSpec, fact: SelfURecFactorization) -> Poly:
    """Multiply a factorization back out."""
    acc = Poly((1,))
    for g, m in fact.self_factors:
        for _ in range(m):
            acc = poly_mul(spec, acc, g)
    for g, gt, m in fact.pair_factors:
        for _ in range(m):
            acc = poly_mul(spec, acc, poly_mul(spec, g, gt))
    return acc


def mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def necklace_count(size: int, d: int) -> int:
    """Number of monic irreducibles of degree d over a field of that size."""
    total = 0
    e = 1
    while e <= d:
        if d % e == 0:
            total += mobius(e) * size ** (d // e)
        e += 1
    return total // d

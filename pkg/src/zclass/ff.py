"""The field tower F_p <= F_q <= F_{q^2} with its order-2 Frobenius involution.

F_{q^2} (q = p^e) is realized once as F_p[t] / (m(t)) where m is the first
irreducible monic polynomial of degree 2e in the canonical scan order below.
Elements are canonical integer indices

    index(a_0 + a_1 t + ... + a_{2e-1} t^{2e-1}) = sum_i a_i p^i,

so the scan order on polynomials of a fixed degree is just ascending index of
the coefficient vector.  The index encoding is also the wire format used by
the CLI and the matrix file format.

All arithmetic is table driven: a FieldSpec carries dense numpy lookup tables
for add, mul, neg, inv and the involution, so batch code can run entirely on
integer index arrays.
"""

from __future__ import annotations

import numpy as np

from .errors import BoundExceededError

DEFAULT_FIELD_BOUND = 4096  # cap on p^(2e); tables are O(p^(4e)) entries


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p on plain int tuples, used only to pick and
# certify the modulus before any tables exist


def _pp_trim(f):
    i = len(f)
    while i > 1 and f[i - 1] == 0:
        i -= 1
    return tuple(f[:i])


def _pp_mulmod(f, g, mod, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pp_divmod(out, mod, p)[1]


def _pp_divmod(f, g, p):
    f = list(f)
    dg = len(_pp_trim(g)) - 1
    g = _pp_trim(g)
    inv_lead = pow(g[-1], p - 2, p)
    quo = [0] * max(len(f) - dg, 1)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] % p
        if c == 0:
            continue
        factor = (c * inv_lead) % p
        quo[i - dg] = factor
        for j, b in enumerate(g):
            f[i - dg + j] = (f[i - dg + j] - factor * b) % p
    return _pp_trim(quo), _pp_trim(f)


def _pp_gcd(f, g, p):
    f, g = _pp_trim(f), _pp_trim(g)
    while g != (0,):
        f, g = g, _pp_divmod(f, g, p)[1]
    return f


def _pp_powmod(base, exp, mod, p):
    result = (1,)
    base = _pp_divmod(base, mod, p)[1]
    while exp:
        if exp & 1:
            result = _pp_mulmod(result, base, mod, p)
        base = _pp_mulmod(base, base, mod, p)
        exp >>= 1
    return result


def _pp_irreducible(f, p) -> bool:
    """Monic f over F_p is irreducible iff it has no factor of degree <= deg/2.

    Checked as gcd(x^(p^k) - x mod f, f) = const for k = 1..deg//2.
    """
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = (0, 1)
    for k in range(1, d // 2 + 1):
        xqk = _pp_powmod(x, p ** k, f, p)
        diff = list(xqk) + [0] * (2 - len(xqk))
        diff[1] = (diff[1] - 1) % p
        g = _pp_gcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


def _find_modulus(p: int, e: int) -> tuple[int, ...]:
    """First irreducible monic degree-2e polynomial over F_p in index order.

    Candidates m = 0, 1, 2, ... encode the low coefficients c_i = digit i of m
    base p, mirroring the element index encoding.
    """
    deg = 2 * e
    for m in range(p ** deg):
        coeffs = tuple((m // p ** i) % p for i in range(deg)) + (1,)
        if _pp_irreducible(coeffs, p):
            return coeffs
    raise RuntimeError("no irreducible modulus found")  # unreachable


def _pp_invmod(f, mod, p):
    """Inverse of f modulo mod over F_p by the extended Euclidean algorithm."""
    r0, r1 = _pp_trim(mod), _pp_trim(f)
    s0, s1 = (0,), (1,)
    while r1 != (0,):
        q, r = _pp_divmod(r0, r1, p)
        r0, r1 = r1, r
        qs = [0] * (len(q) + len(s1) - 1)
        for i, a in enumerate(q):
            for j, b in enumerate(s1):
                qs[i + j] = (qs[i + j] + a * b) % p
        news = [(a - b) % p for a, b in
                zip(list(s0) + [0] * len(qs), list(qs) + [0] * len(s0))]
        s0, s1 = s1, _pp_trim(news)
    if len(r0) != 1 or r0[0] == 0:
        raise ZeroDivisionError("element not invertible")
    lead_inv = pow(r0[0], p - 2, p)
    return tuple((c * lead_inv) % p for c in s0)


# ---------------------------------------------------------------------------


class FieldSpec:
    """Tables and parameters for one realization of F_{q^2} over F_p.

    Attributes of interest: p, e, q, order (= q^2), modulus (coefficient
    tuple, constant first, monic), and int16 numpy tables add_t, mul_t
    (order x order), neg_t, inv_t, conj_t, norm_t (length order), plus the
    sorted index array `subfield` of the fixed field F_q.  inv_t[0] is 0 by
    convention and must never be consumed.
    """

    def __init__(self, p: int, e: int, bound: int = DEFAULT_FIELD_BOUND):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError("e must be >= 1")
        order = p ** (2 * e)
        if order > bound:
            raise BoundExceededError(
                f"field F_{p}^{2 * e} has {order} elements, over bound {bound}",
                projected=order, bound=bound)
        self.p = p
        self.e = e
        self.q = p ** e
        self.order = order
        self.modulus = _find_modulus(p, e)
        self._build_tables()
        self._norm_reps: dict[int, int] | None = None

    # construction -----------------------------------------------------

    def _build_tables(self):
        p, e, Q = self.p, self.e, self.order
        deg = 2 * e
        pows = p ** np.arange(deg, dtype=np.int64)
        idx = np.arange(Q, dtype=np.int64)
        digits = (idx[:, None] // pows[None, :]) % p  # (Q, deg)

        # addition is digitwise mod p; chunk rows to bound temporaries
        add_t = np.empty((Q, Q), dtype=np.int16)
        step = max(1, (1 << 22) // (Q * deg))
        for lo in range(0, Q, step):
            hi = min(lo + step, Q)
            s = (digits[lo:hi, None, :] + digits[None, :, :]) % p
            add_t[lo:hi] = s @ pows
        self.add_t = add_t

        # scalar multiples c * b for c in F_p, as index maps
        smul = np.empty((p, Q), dtype=np.int64)
        for c in range(p):
            smul[c] = ((digits * c) % p) @ pows

        # multiplication by t: shift digits, reduce t^deg = -modulus_low
        mod_low = np.array(self.modulus[:deg], dtype=np.int64)
        shifted = np.zeros_like(digits)
        shifted[:, 1:] = digits[:, :deg - 1]
        carry = digits[:, deg - 1]
        times_t = ((shifted - carry[:, None] * mod_low[None, :]) % p) @ pows

        # mul_t[a, b] = sum_i a_i * (t^i * b), folded through the add table
        ladders = np.empty((deg, Q), dtype=np.int64)
        ladders[0] = idx
        for i in range(1, deg):
            ladders[i] = times_t[ladders[i - 1]]
        mul_t = np.empty((Q, Q), dtype=np.int16)
        for a in range(Q):
            acc = smul[digits[a, 0]][ladders[0]]
            for i in range(1, deg):
                acc = add_t[acc, smul[digits[a, i]][ladders[i]]]
            mul_t[a] = acc
        self.mul_t = mul_t

        self.neg_t = smul[p - 1].astype(np.int16)

        inv_t = np.zeros(Q, dtype=np.int16)
        for a in range(1, Q):
            coeffs = _pp_invmod(tuple(int(d) for d in digits[a]), self.modulus, p)
            inv_t[a] = sum(c * p ** i for i, c in enumerate(coeffs))
        self.inv_t = inv_t

        # involution a -> a^q, computed by square and multiply on index arrays
        r = np.ones(Q, dtype=np.int64)
        base = idx.copy()
        k = self.q
        while k:
            if k & 1:
                r = mul_t[r, base].astype(np.int64)
            base = mul_t[base, base].astype(np.int64)
            k >>= 1
        self.conj_t = r.astype(np.int16)
        self.norm_t = mul_t[idx, self.conj_t].astype(np.int16)
        self.subfield = np.nonzero(self.conj_t == idx)[0].astype(np.int16)

        # construction self-checks, all cheap
        if len(self.subfield) != self.q:
            raise RuntimeError("fixed field of the involution has wrong size")
        if not np.array_equal(self.conj_t[self.conj_t], np.arange(Q)):
            raise RuntimeError("involution is not an involution")
        if not np.all(mul_t[idx[1:], inv_t[1:]] == 1):
            raise RuntimeError("inverse table inconsistent with mul table")

    # element helpers ----------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Index -> coefficient tuple over the power basis (length 2e)."""
        if not 0 <= a < self.order:
            raise ValueError(f"index {a} out of range")
        return tuple((a // self.p ** i) % self.p for i in range(2 * self.e))

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) > 2 * self.e:
            raise ValueError("too many coefficients")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError("coefficients must be reduced mod p")
        return sum(int(c) * self.p ** i for i, c in enumerate(coeffs))

    def norm_rep(self, d: int) -> int:
        """Smallest index with norm d; exists for every d in the subfield."""
        if self._norm_reps is None:
            reps: dict[int, int] = {}
            for a in range(self.order):
                n = int(self.norm_t[a])
                if n not in reps:
                    reps[n] = a
            self._norm_reps = reps
        return self._norm_reps[d]

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, q={self.q})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))


_FIELD_CACHE: dict[tuple[int, int], FieldSpec] = {}


def field_make(p: int, e: int = 1, bound: int = DEFAULT_FIELD_BOUND) -> FieldSpec:
    """Build (or fetch from cache) the canonical F_{q^2} tower for q = p^e."""
    key = (p, e)
    spec = _FIELD_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(p, e, bound=bound)
        _FIELD_CACHE[key] = spec
    return spec


def conj(spec: FieldSpec, a: int) -> int:
    """The involution a -> a^q."""
    return int(spec.conj_t[a])


def norm(spec: FieldSpec, a: int) -> int:
    """Norm onto the fixed field: a * conj(a)."""
    return int(spec.norm_t[a])


def add(spec: FieldSpec, a: int, b: int) -> int:
    return int(spec.add_t[a, b])


def mul(spec: FieldSpec, a: int, b: int) -> int:
    return int(spec.mul_t[a, b])


def neg(spec: FieldSpec, a: int) -> int:
    return int(spec.neg_t[a])


def sub(spec: FieldSpec, a: int, b: int) -> int:
    return int(spec.add_t[a, spec.neg_t[b]])


def inv(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return int(spec.inv_t[a])


def enumerate_field(spec: FieldSpec, subfield_only: bool = False) -> list[int]:
    """All element indices in ascending order; optionally just the fixed field."""
    if subfield_only:
        return [int(a) for a in spec.subfield]
    return list(range(spec.order))


def norm_one_elements(spec: FieldSpec) -> list[int]:
    """Indices of the norm-one subgroup, ascending; it has q + 1 elements."""
    return [a for a in range(spec.order) if spec.norm_t[a] == 1]

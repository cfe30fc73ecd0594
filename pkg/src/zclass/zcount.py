"""Type-level z-class counting and its realizable refinement.

A z-class in GL_n corresponds to a multiset of slots (d, lambda): d the
degree of an irreducible factor of the characteristic polynomial, lambda the
partition attached to it, with total weight sum d*|lambda| = n.  The unitary
grammar differs: odd-degree slots carry self-U-reciprocal irreducibles and
pair slots (l, lambda) carry factor pairs (g, g~) of degree l each, weighing
2*l*|lambda|.  The two grammars are enumerated independently; the pairing
bijection between them is exposed for testing, not used for counting.

"Realizable" filters types by how many distinct irreducibles of each degree
the field actually supplies.  GL supplies come from the necklace formula, the
unitary odd-degree supplies from explicit enumeration (no closed form is
asserted for them), and pair supplies by halving the complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import ff, poly
from .combinatorics import Partition, enumerate_partitions, partition_count
from .group import gl_order, u_order, _ru_exponent

Slot = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class ZType:
    """GL type: multiset of (degree, partition) slots, canonically sorted."""

    slots: tuple[Slot, ...]

    @property
    def weight(self) -> int:
        return sum(d * sum(lam) for d, lam in self.slots)

    def text(self) -> str:
        return " ".join(f"d{d}:[{','.join(str(x) for x in lam)}]"
                        for d, lam in self.slots)


@dataclass(frozen=True)
class UZType:
    """Unitary type: odd-degree slots plus pair slots, canonically sorted."""

    odd_slots: tuple[Slot, ...]
    pair_slots: tuple[Slot, ...]

    @property
    def weight(self) -> int:
        return (sum(d * sum(lam) for d, lam in self.odd_slots)
                + sum(2 * l * sum(lam) for l, lam in self.pair_slots))

    def text(self) -> str:
        odd = [f"o{d}:[{','.join(str(x) for x in lam)}]" for d, lam in self.odd_slots]
        pair = [f"p{l}:[{','.join(str(x) for x in lam)}]" for l, lam in self.pair_slots]
        return " ".join(odd + pair)


def _slot_sort(slots) -> tuple[Slot, ...]:
    return tuple(sorted(slots, key=lambda s: (s[0], tuple(-x for x in s[1]))))


@lru_cache(maxsize=None)
def _partition_multisets(weight: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All multisets of nonempty partitions with total weight `weight`."""
    pool: list[tuple[int, ...]] = []
    for w in range(1, weight + 1):
        pool.extend(lam.parts for lam in enumerate_partitions(w))
    out: list[tuple[tuple[int, ...], ...]] = []

    def descend(remaining: int, start: int, prefix: list[tuple[int, ...]]):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for i in range(start, len(pool)):
            lam = pool[i]
            if sum(lam) > remaining:
                continue
            prefix.append(lam)
            descend(remaining - sum(lam), i, prefix)
            prefix.pop()

    descend(weight, 0, [])
    return tuple(out)


def enumerate_types_gl(n: int) -> list[ZType]:
    """All GL types of weight n, distinct slots within a degree."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[ZType] = []

    def over_degrees(d: int, remaining: int, slots: list[Slot]):
        if remaining == 0:
            out.append(ZType(_slot_sort(slots)))
            return
        if d > remaining:
            return
        for spent in range(0, remaining + 1, d):
            if spent == 0:
                over_degrees(d + 1, remaining, slots)
            else:
                for multiset in _partition_multisets(spent // d):
                    added = [(d, lam) for lam in multiset]
                    over_degrees(d + 1, remaining - spent, slots + added)

    over_degrees(1, n, [])
    return out


def enumerate_types_u(n: int) -> list[UZType]:
    """All unitary types of weight n: odd slots plus pair slots."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[UZType] = []

    def over_pairs(l: int, remaining: int, pairs: list[Slot]):
        if remaining == 0:
            out.append(UZType(_slot_sort([]), _slot_sort(pairs)))
            return
        if 2 * l > remaining:
            return
        for spent in range(0, remaining + 1, 2 * l):
            if spent == 0:
                over_pairs(l + 1, remaining, pairs)
            else:
                for multiset in _partition_multisets(spent // (2 * l)):
                    over_pairs(l + 1, remaining - spent,
                               pairs + [(l, lam) for lam in multiset])

    def over_odd(d: int, remaining: int, odds: list[Slot]):
        if d > remaining:
            base = len(out)
            over_pairs(1, remaining, [])
            for i in range(base, len(out)):
                out[i] = UZType(_slot_sort(odds), out[i].pair_slots)
            return
        for spent in range(0, remaining + 1, d):
            if spent == 0:
                over_odd(d + 2, remaining, odds)
            else:
                for multiset in _partition_multisets(spent // d):
                    over_odd(d + 2, remaining - spent,
                             odds + [(d, lam) for lam in multiset])

    over_odd(1, n, [])
    return out


def pair_u_type_with_gl(t: UZType) -> ZType:
    """The degree-doubling bijection onto GL types: odd (d, lam) -> (d, lam),
    pair (l, lam) -> (2l, lam)."""
    slots = [(d, lam) for d, lam in t.odd_slots]
    slots += [(2 * l, lam) for l, lam in t.pair_slots]
    return ZType(_slot_sort(slots))


def count_semisimple(n: int) -> int:
    """Semisimple types: multisets of (degree, multiplicity) pairs with
    total weight n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    pairs = [(e, f) for e in range(1, n + 1) for f in range(1, n + 1) if e * f <= n]

    def descend(remaining: int, start: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for i in range(start, len(pairs)):
            e, f = pairs[i]
            if e * f <= remaining:
                total += descend(remaining - e * f, i)
        return total

    return descend(n, 0)


def count_unipotent(n: int) -> int:
    """Unipotent z-classes are Jordan shapes: p(n), for either group kind."""
    return partition_count(n)


def total_z_count(n: int) -> int:
    """Total z-class count as a sum over semisimple types of the number of
    unipotent refinements inside each centralizer shape.

    A group of k identical slots of multiplicity m refines to a multiset of k
    partitions of m, binom(p(m) + k - 1, k) ways; the product over slot
    groups, summed over semisimple types, equals the coefficient of x^n in
    the finite-field generating function.
    """
    import math

    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    for t in enumerate_types_u(n):
        if not _is_semisimple_type(t.odd_slots) or not _is_semisimple_type(t.pair_slots):
            continue
        groups: dict[tuple[str, int, int], int] = {}
        for d, lam in t.odd_slots:
            key = ("o", d, len(lam))
            groups[key] = groups.get(key, 0) + 1
        for l, lam in t.pair_slots:
            key = ("p", l, len(lam))
            groups[key] = groups.get(key, 0) + 1
        term = 1
        for (_, _, m), k in groups.items():
            term *= math.comb(partition_count(m) + k - 1, k)
        total += term
    return total


def _is_semisimple_type(slots) -> bool:
    return all(set(lam) == {1} for _, lam in slots)


# ---------------------------------------------------------------------------
# realizable refinement


@lru_cache(maxsize=None)
def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if q % p != 0:
        p = q
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"q = {q} is not a prime power")
    return p, e


def gl_supply(q: int, d: int) -> int:
    """Distinct monic irreducibles of degree d over F_q, excluding x."""
    if d == 1:
        return q - 1
    return poly.necklace_count(q, d)


@lru_cache(maxsize=None)
def u_odd_supply(q: int, d: int) -> int:
    """Distinct self-U-reciprocal monic irreducibles of degree d over F_{q^2},
    counted by enumeration."""
    p, e = _prime_power(q)
    spec = ff.field_make(p, e)
    return len(poly.enumerate_irreducibles(spec, d, filter="self_u_reciprocal"))


def u_pair_supply(q: int, l: int) -> int:
    """Distinct unordered pairs (g, g~) of non-self-U-reciprocal irreducibles
    of degree l over F_{q^2}; x is excluded at degree 1."""
    total = poly.necklace_count(q * q, l)
    if l == 1:
        total -= 1
    return (total - u_odd_supply(q, l)) // 2


def _gl_realizable(t: ZType, q: int) -> bool:
    need: dict[int, int] = {}
    for d, _ in t.slots:
        need[d] = need.get(d, 0) + 1
    return all(cnt <= gl_supply(q, d) for d, cnt in need.items())


def _u_realizable(t: UZType, q: int) -> bool:
    need_odd: dict[int, int] = {}
    for d, _ in t.odd_slots:
        need_odd[d] = need_odd.get(d, 0) + 1
    if not all(cnt <= u_odd_supply(q, d) for d, cnt in need_odd.items()):
        return False
    need_pair: dict[int, int] = {}
    for l, _ in t.pair_slots:
        need_pair[l] = need_pair.get(l, 0) + 1
    return all(cnt <= u_pair_supply(q, l) for l, cnt in need_pair.items())


def _restrict_type(slots, restrict: str) -> bool:
    if restrict == "all":
        return True
    if restrict == "semisimple":
        return _is_semisimple_type(slots)
    raise ValueError(f"unknown restrict {restrict!r}")


def count_realizable(n: int, q: int, kind: str, restrict: str = "all") -> int:
    """Types of weight n that the field F_q actually realizes.

    kind is "general_linear" or "unitary"; restrict narrows to "semisimple"
    or "unipotent" types.  Unipotent types need only the unit eigenvalue, so
    that count is p(n) for both kinds.
    """
    _prime_power(q)
    if restrict == "unipotent":
        return partition_count(n)
    if kind == "general_linear":
        types = [t for t in enumerate_types_gl(n) if _restrict_type(t.slots, restrict)]
        return sum(1 for t in types if _gl_realizable(t, q))
    if kind == "unitary":
        if _prime_power(q)[0] == 2:
            raise ValueError("unitary counting requires odd characteristic")
        utypes = [t for t in enumerate_types_u(n)
                  if _restrict_type(t.odd_slots + t.pair_slots, restrict)]
        return sum(1 for t in utypes if _u_realizable(t, q))
    raise ValueError(f"kind must be general_linear or unitary, got {kind!r}")


def centralizer_order_from_type(t, q: int) -> int:
    """Group order of the centralizer of an element with this type.

    GL slots (d, lam) contribute over F_{q^d}; unitary odd slots (d, lam)
    contribute unitary factors over the degree-d tower and pair slots (l, lam)
    contribute GL factors over F_{q^{2l}}.
    """
    if isinstance(t, ZType):
        total = 1
        for d, lam in t.slots:
            total *= _gl_block(q ** d, lam)
        return total
    if isinstance(t, UZType):
        total = 1
        for d, lam in t.odd_slots:
            total *= _u_block(q ** d, lam)
        for l, lam in t.pair_slots:
            total *= _gl_block(q ** (2 * l), lam)
        return total
    raise TypeError("expected a ZType or UZType")


def _gl_block(size: int, lam) -> int:
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    total = size ** _ru_exponent(tuple(lam))
    for a in mult.values():
        total *= gl_order(size, a)
    return total


def _u_block(size: int, lam) -> int:
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    total = size ** _ru_exponent(tuple(lam))
    for a in mult.values():
        total *= u_order(size, a)
    return total


@lru_cache(maxsize=None)
def _base_irreducibles(p: int, e: int, d: int) -> tuple:
    """Monic irreducibles of degree d over F_q (subfield coefficients)."""
    spec = ff.field_make(p, e)
    sub = [int(a) for a in spec.subfield]
    out = []

    def fill(prefix):
        if len(prefix) == d:
            f = poly.Poly(tuple(prefix) + (1,))
            if d == 1 or poly.is_irreducible(spec, f, field="base"):
                out.append(f)
            return
        for c in sub:
            fill(prefix + [c])

    fill([])
    return tuple(out)


def type_of_semisimple_gl(spec, g) -> ZType:
    """Type of a semisimple base-field GL element: its characteristic
    polynomial is factored over F_q, each factor of degree d with
    multiplicity m giving a slot (d, (1^m))."""
    from . import linalg

    cp = poly.Poly(linalg.charpoly(spec, g))
    n = cp.degree
    slots: list[Slot] = []
    rem = cp
    d = 1
    while rem.degree > 0 and d <= n:
        for cand in _base_irreducibles(spec.p, spec.e, d):
            m = 0
            while True:
                quo, r = poly.poly_divmod(spec, rem, cand)
                if not poly.is_zero(r):
                    break
                rem, m = quo, m + 1
            if m:
                slots.append((d, (1,) * m))
        d += 1
    if rem.degree > 0:
        raise ValueError("characteristic polynomial did not factor over F_q")
    return ZType(_slot_sort(slots))


def type_of_semisimple_u(spec, g) -> UZType:
    """Unitary type of a semisimple unitary element: self-U-reciprocal factors
    become odd slots, transform pairs become pair slots."""
    from . import linalg

    cp = poly.Poly(linalg.charpoly(spec, g))
    fact = poly.self_urec_factorize(spec, cp)
    odd = [(f.degree, (1,) * m) for f, m in fact.self_factors]
    pairs = [(a.degree, (1,) * m) for a, _b, m in fact.pair_factors]
    return UZType(_slot_sort(odd), _slot_sort(pairs))


# ---------------------------------------------------------------------------
# rank-one real forms and the compact case


def hyperbolic_counts(n: int) -> dict:
    """z-class counts in the isometry group of complex hyperbolic n-space:
    elliptic, hyperbolic, and (for n >= 2) parabolic elements."""
    if n < 1:
        raise ValueError("n must be >= 1")
    elliptic = sum(partition_count(n + 1 - m) for m in range(1, n + 2))
    hyperbolic = partition_count(n - 1)
    out = {"elliptic": elliptic, "hyperbolic": hyperbolic}
    if n >= 2:
        out["parabolic"] = 2 + partition_count(n - 1) + partition_count(n - 2)
    return out


def compact_unitary_count(m: int) -> int:
    """z-classes in the rank-m compact unitary group: p(m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return partition_count(m)

"""Brute-force finite matrix groups: GL_n and U_n over the field tower,
conjugacy, centralizers, subgroup conjugacy, z-classes.

Groups are flat tables: an (N, n, n) int16 array of element matrices sorted
by an int64 key (row-major entry indices, first entry most significant), the
matching inverses, and numpy membership via searchsorted on the keys.  All
group-scale loops run through the batch kernels.

GL_n is enumerated directly when its order fits the bound.  U_n is filtered
out of GL_n(q^2) when that fits, and otherwise generated by quasi-reflections
and certified against the closed-form group order.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from . import kernels, linalg
from .errors import BoundExceededError
from .ff import FieldSpec
from .hermitian import HermitianForm, hermitian_validate, identity_form
from .poly import necklace_count  # noqa: F401  (re-exported for callers)

DEFAULT_GROUP_BOUND = 200_000


def group_bound(override: int | None = None) -> int:
    """Effective enumeration bound: explicit arg, else ZCLASS_MAX_GROUP, else default."""
    if override is not None:
        return override
    env = os.environ.get("ZCLASS_MAX_GROUP")
    return int(env) if env else DEFAULT_GROUP_BOUND


def gl_order(size: int, n: int) -> int:
    """|GL_n| over a field with `size` elements."""
    total = 1
    for i in range(n):
        total *= size ** n - size ** i
    return total


def u_order(q: int, n: int) -> int:
    """|U_n(q)|, the unitary group inside GL_n(q^2)."""
    total = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        total *= q ** i - (-1) ** i
    return total


def _ru_exponent(shape: tuple[int, ...]) -> int:
    """Exponent of the unipotent-radical factor for a Jordan shape.

    With a_i parts of size i: sum_{i>=2} (i-1) a_i^2 + 2 sum_{i<j} i a_i a_j.
    """
    mult: dict[int, int] = {}
    for part in shape:
        mult[part] = mult.get(part, 0) + 1
    sizes = sorted(mult)
    total = sum((i - 1) * mult[i] ** 2 for i in sizes if i >= 2)
    for xi, i in enumerate(sizes):
        for j in sizes[xi + 1:]:
            total += 2 * i * mult[i] * mult[j]
    return total


def unipotent_centralizer_order(q: int, shape, kind: str = "unitary") -> int:
    """Centralizer order of a unipotent element with the given Jordan shape.

    kind="unitary": q^e * prod |U_{a_i}(q)|; kind="general_linear" uses GL
    factor orders over the same field size instead.
    """
    parts = tuple(int(x) for x in getattr(shape, "parts", shape))
    if any(x < 1 for x in parts):
        raise ValueError("shape parts must be positive")
    mult: dict[int, int] = {}
    for part in parts:
        mult[part] = mult.get(part, 0) + 1
    total = q ** _ru_exponent(parts)
    for a in mult.values():
        total *= u_order(q, a) if kind == "unitary" else gl_order(q, a)
    return total


# ---------------------------------------------------------------------------


@dataclass
class GroupTable:
    """A fully enumerated matrix group, sorted by canonical element key."""

    kind: str                      # "general_linear" or "unitary"
    n: int
    spec: FieldSpec
    elems: np.ndarray              # (N, n, n) int16, ascending key order
    keys: np.ndarray               # (N,) int64
    invs: np.ndarray               # (N, n, n) int16
    form: HermitianForm | None = None
    _classes: "ConjugacyClasses | None" = field(default=None, repr=False)
    _cents: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.keys)

    def key_of(self, m) -> int:
        return int(_encode_keys(m[None], self.spec.order)[0])

    def lookup(self, keys) -> np.ndarray:
        """Positions of the given keys; raises if any key is not a member."""
        pos = np.searchsorted(self.keys, keys)
        pos = np.minimum(pos, self.order - 1)
        if not np.all(self.keys[pos] == keys):
            raise ValueError("matrix is not a member of this group")
        return pos

    def contains(self, m) -> bool:
        k = self.key_of(m)
        i = int(np.searchsorted(self.keys, k))
        return i < self.order and int(self.keys[i]) == k

    def index_of(self, m) -> int:
        return int(self.lookup(np.array([self.key_of(m)], dtype=np.int64))[0])


def _encode_keys(elems: np.ndarray, Q: int) -> np.ndarray:
    m, n, _ = elems.shape
    cells = n * n
    if cells * math.log2(Q) >= 63:
        raise BoundExceededError(
            f"{n} x {n} matrices over {Q} elements overflow the int64 key",
            projected=Q ** cells, bound=2 ** 63)
    pows = Q ** np.arange(cells - 1, -1, -1, dtype=np.int64)
    return elems.reshape(m, cells).astype(np.int64) @ pows


def _tables(spec: FieldSpec):
    return spec.mul_t, spec.add_t, spec.neg_t, spec.inv_t


def _finish_table(kind, n, spec, elems, form=None) -> GroupTable:
    keys = _encode_keys(elems, spec.order)
    order = np.argsort(keys)
    elems = np.ascontiguousarray(elems[order])
    keys = keys[order]
    invs = kernels.mat_inv(elems, *_tables(spec))
    table = GroupTable(kind, n, spec, elems, keys, invs, form)
    _closure_spot_check(table)
    return table


def _closure_spot_check(table: GroupTable, samples: int = 32):
    rng = np.random.default_rng(0)
    n = table.order
    a = rng.integers(0, n, size=min(samples, n))
    b = rng.integers(0, n, size=min(samples, n))
    prod = kernels.mat_mul(table.elems[a], table.elems[b],
                           table.spec.mul_t, table.spec.add_t)
    table.lookup(_encode_keys(prod, table.spec.order))
    table.lookup(_encode_keys(table.invs[a], table.spec.order))


def build_general_linear(n: int, spec: FieldSpec, over_extension: bool = False,
                         bound: int | None = None) -> GroupTable:
    """Enumerate GL_n over F_q (default) or over F_{q^2} (over_extension)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = spec.order if over_extension else spec.q
    limit = group_bound(bound)
    projected = gl_order(size, n)
    if projected > limit:
        raise BoundExceededError(
            f"GL_{n} over {size} elements has order {projected}, over bound {limit}",
            projected=projected, bound=limit)
    alphabet = (np.arange(spec.order, dtype=np.int16) if over_extension
                else spec.subfield.astype(np.int16))
    cells = n * n
    total = len(alphabet) ** cells
    grids = np.empty((total, cells), dtype=np.int16)
    idx = np.arange(total, dtype=np.int64)
    L = len(alphabet)
    for c in range(cells):
        grids[:, c] = alphabet[(idx // L ** (cells - 1 - c)) % L]
    mats = grids.reshape(total, n, n)
    dets = kernels.mat_det(mats, spec.mul_t, spec.add_t, spec.neg_t)
    mats = np.ascontiguousarray(mats[dets != 0])
    if len(mats) != projected:
        raise RuntimeError("enumerated order disagrees with the closed form")
    return _finish_table("general_linear", n, spec, mats)


def _unitary_mask(spec: FieldSpec, elems: np.ndarray, gram: np.ndarray) -> np.ndarray:
    m = len(elems)
    if m == 0:
        return np.zeros(0, dtype=bool)
    gb = np.broadcast_to(gram, elems.shape)
    left = kernels.mat_mul(elems.transpose(0, 2, 1).copy(), gb,
                           spec.mul_t, spec.add_t)
    left = kernels.mat_mul(left, spec.conj_t[elems].astype(np.int16),
                           spec.mul_t, spec.add_t)
    return (left == gram).all(axis=(1, 2))


def _norm_one(spec: FieldSpec) -> list[int]:
    return [a for a in range(1, spec.order) if spec.norm_t[a] == 1]


def _reflection_seeds(spec: FieldSpec, n: int, gram: np.ndarray):
    """Quasi-reflections fixing the form: R = I + ((a-1)/b) v (H conj(v))^T
    for anisotropic v with b = B(v, v) and norm-one a != 1."""
    alphas = [a for a in _norm_one(spec) if a != 1]
    Q = spec.order
    ident = linalg.identity(n)
    for vid in range(1, Q ** n):
        v = np.array([(vid // Q ** (n - 1 - i)) % Q for i in range(n)],
                     dtype=np.int16)
        hv = linalg.mat_vec(spec, gram, spec.conj_t[v])
        beta = 0
        for ui, wi in zip(v, hv):
            beta = spec.add_t[beta, spec.mul_t[ui, wi]]
        if beta == 0:
            continue
        binv = int(spec.inv_t[beta])
        for a in alphas:
            coef = int(spec.mul_t[spec.add_t[a, spec.neg_t[1]], binv])
            outer = spec.mul_t[np.asarray(v, dtype=np.int16)[:, None],
                               hv[None, :]]
            r = spec.add_t[ident, spec.mul_t[coef, outer]].astype(np.int16)
            yield r


def _close_under_products(spec: FieldSpec, elems, keys, gens, limit):
    """Close a set under right multiplication by `gens` (all generators).

    elems/keys may be None (start from the identity alone).  The first round
    multiplies the whole current set, so previously closed sets may be grown
    by fresh generators.  Returns new sorted (elems, keys); raises
    BoundExceededError past `limit`.
    """
    n = gens[0].shape[0]
    if elems is None:
        elems = linalg.identity(n)[None]
        keys = _encode_keys(elems, spec.order)
    gen_stack = np.stack(gens)
    frontier = elems
    while len(frontier):
        m, g = len(frontier), len(gen_stack)
        left = np.repeat(frontier, g, axis=0)
        right = np.tile(gen_stack, (m, 1, 1))
        prod = kernels.mat_mul(left, right, spec.mul_t, spec.add_t)
        pkeys = _encode_keys(prod, spec.order)
        pkeys, first = np.unique(pkeys, return_index=True)
        prod = prod[first]
        pos = np.searchsorted(keys, pkeys)
        pos = np.minimum(pos, len(keys) - 1)
        fresh = keys[pos] != pkeys
        if not np.any(fresh):
            break
        frontier = np.ascontiguousarray(prod[fresh])
        keys = np.concatenate([keys, pkeys[fresh]])
        elems = np.concatenate([elems, frontier])
        if len(keys) > limit:
            raise BoundExceededError(
                f"closure exceeded bound {limit}", projected=len(keys), bound=limit)
        order = np.argsort(keys)
        keys = keys[order]
        elems = np.ascontiguousarray(elems[order])
    return elems, keys


def build_unitary(n: int, spec: FieldSpec, form: HermitianForm | None = None,
                  bound: int | None = None) -> GroupTable:
    """Enumerate U_n(q) for the given hermitian form (identity by default)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if spec.p == 2:
        raise ValueError("unitary enumeration requires odd characteristic")
    if form is None:
        form = identity_form(spec, n)
    else:
        form = hermitian_validate(spec, form.gram)
        if form.n != n:
            raise ValueError("form dimension disagrees with n")
    limit = group_bound(bound)
    target = u_order(spec.q, n)
    if target > limit:
        raise BoundExceededError(
            f"U_{n}({spec.q}) has order {target}, over bound {limit}",
            projected=target, bound=limit)

    ambient = gl_order(spec.order, n)
    if ambient <= limit:
        gl = build_general_linear(n, spec, over_extension=True, bound=bound)
        mask = _unitary_mask(spec, gl.elems, form.gram)
        elems = np.ascontiguousarray(gl.elems[mask])
    else:
        elems = _generate_unitary(spec, n, form, target, limit)
    if len(elems) != target:
        raise RuntimeError("unitary enumeration disagrees with the group order")
    table = _finish_table("unitary", n, spec, elems, form)
    if not np.all(_unitary_mask(spec, table.elems, form.gram)):
        raise RuntimeError("an enumerated element does not preserve the form")
    return table


def _generate_unitary(spec, n, form, target, limit):
    elems, keys, gens = None, None, []
    pool = _reflection_seeds(spec, n, form.gram)
    for seed in pool:
        if not np.all(_unitary_mask(spec, seed[None], form.gram)):
            raise RuntimeError("reflection seed does not preserve the form")
        if keys is not None:
            k = _encode_keys(seed[None], spec.order)[0]
            at = int(np.searchsorted(keys, k))
            if at < len(keys) and keys[at] == k:
                continue
        gens.append(seed)
        elems, keys = _close_under_products(spec, elems, keys, gens, limit)
        if len(keys) == target:
            return elems
        if len(keys) > target:
            raise RuntimeError("closure overshot the group order")
    raise RuntimeError("reflections did not generate the whole group")


# ---------------------------------------------------------------------------


@dataclass
class ConjugacyClasses:
    class_id: np.ndarray     # (N,) int32
    reps: np.ndarray         # (k,) element positions, each the class minimum

    @property
    def count(self) -> int:
        return len(self.reps)

    def sizes(self) -> np.ndarray:
        return np.bincount(self.class_id, minlength=self.count)


def conjugacy_classes(table: GroupTable) -> ConjugacyClasses:
    """Orbit partition under conjugation; cached on the table."""
    if table._classes is not None:
        return table._classes
    N = table.order
    spec = table.spec
    class_id = np.full(N, -1, dtype=np.int32)
    reps = []
    for i in range(N):
        if class_id[i] >= 0:
            continue
        cid = len(reps)
        x = np.broadcast_to(table.elems[i], table.elems.shape)
        gx = kernels.mat_mul(table.elems, x, spec.mul_t, spec.add_t)
        orbit = kernels.mat_mul(gx, table.invs, spec.mul_t, spec.add_t)
        pos = table.lookup(_encode_keys(orbit, spec.order))
        class_id[pos] = cid
        reps.append(i)
    out = ConjugacyClasses(class_id, np.array(reps, dtype=np.int64))
    table._classes = out
    return out


def centralizer_positions(table: GroupTable, pos: int) -> np.ndarray:
    """Positions of elements commuting with the element at `pos`; cached."""
    cached = table._cents.get(pos)
    if cached is not None:
        return cached
    mask = kernels.commute_mask(table.elems, table.elems[pos],
                                table.spec.mul_t, table.spec.add_t)
    out = np.nonzero(mask)[0]
    table._cents[pos] = out
    return out


def centralizer(table: GroupTable, g) -> np.ndarray:
    """Centralizer of a member matrix, as a key-sorted (m, n, n) batch."""
    g = linalg.as_matrix(g)
    return table.elems[centralizer_positions(table, table.index_of(g))]


def _subgroup_generators(table: GroupTable, positions: np.ndarray) -> list[int]:
    """Small generating set (positions) for a subgroup given as positions."""
    spec = table.spec
    member = set(int(k) for k in table.keys[positions])
    have = {table.key_of(linalg.identity(table.n))}
    gens: list[int] = []
    gen_mats: list[np.ndarray] = []
    closed_elems, closed_keys = None, None
    for pos in positions:
        k = int(table.keys[pos])
        if k in have:
            continue
        gens.append(int(pos))
        gen_mats.append(table.elems[pos])
        try:
            closed_elems, closed_keys = _close_under_products(
                spec, closed_elems, closed_keys, gen_mats, len(member))
        except BoundExceededError:
            raise ValueError("input positions do not form a subgroup") from None
        have = set(int(x) for x in closed_keys)
        if len(have) == len(member):
            break
    if len(have) != len(member) or not have <= member:
        raise ValueError("input positions do not form a subgroup")
    return gens


def _as_positions(table: GroupTable, sub) -> np.ndarray:
    """Accept a subgroup as positions or as an (m, n, n) matrix batch."""
    arr = np.asarray(sub)
    if arr.ndim == 3:
        keys = _encode_keys(arr.astype(np.int16), table.spec.order)
        pos = table.lookup(np.sort(keys))
        return np.sort(pos)
    if arr.ndim != 1:
        raise ValueError("subgroup must be positions or a matrix batch")
    if len(arr) and (arr.min() < 0 or arr.max() >= table.order):
        raise ValueError("position out of range")
    return np.sort(arr.astype(np.int64))


def subgroups_conjugate(table: GroupTable, sub_a, sub_b):
    """A witness g with g A g^-1 = B, or None.

    Scans candidates by intersecting, per generator of A, the set of g that
    map that generator into B; every surviving candidate is verified fully.
    """
    spec = table.spec
    a_pos = _as_positions(table, sub_a)
    b_pos = _as_positions(table, sub_b)
    if len(a_pos) != len(b_pos):
        return None
    if np.array_equal(a_pos, b_pos):
        return linalg.identity(table.n)
    b_keys = table.keys[b_pos]
    cand = np.ones(table.order, dtype=bool)
    for gpos in _subgroup_generators(table, a_pos):
        x = np.broadcast_to(table.elems[gpos], table.elems.shape)
        gx = kernels.mat_mul(table.elems, x, spec.mul_t, spec.add_t)
        conj = kernels.mat_mul(gx, table.invs, spec.mul_t, spec.add_t)
        ck = _encode_keys(conj, spec.order)
        at = np.searchsorted(b_keys, ck)
        at = np.minimum(at, len(b_keys) - 1)
        cand &= b_keys[at] == ck
        if not np.any(cand):
            return None
    a_keys = table.keys[a_pos]
    for g in np.nonzero(cand)[0]:
        gm = table.elems[g]
        gi = table.invs[g]
        moved = kernels.mat_mul(
            kernels.mat_mul(np.broadcast_to(gm, (len(a_pos), table.n, table.n)),
                            table.elems[a_pos], spec.mul_t, spec.add_t),
            np.broadcast_to(gi, (len(a_pos), table.n, table.n)),
            spec.mul_t, spec.add_t)
        mk = np.sort(_encode_keys(moved, spec.order))
        if np.array_equal(mk, b_keys):
            return gm.copy()
    return None


# ---------------------------------------------------------------------------
# element structure


def element_order(spec: FieldSpec, g) -> int:
    """Multiplicative order, via the coprime part and the p-part separately."""
    g = linalg.as_matrix(g)
    n = g.shape[0]
    if linalg.mat_det_s(spec, g) == 0:
        raise ValueError("element is singular")
    p = spec.p
    m = 0
    while p ** m < n:
        m += 1
    h = linalg.mat_pow(spec, g, p ** m)     # semisimple part power
    L = math.lcm(*(spec.order ** d - 1 for d in range(1, n + 1)))
    s = L
    for r in _prime_factors(L):
        while s % r == 0 and np.array_equal(
                linalg.mat_pow(spec, h, s // r), linalg.identity(n)):
            s //= r
    for j in range(m + 1):
        if np.array_equal(linalg.mat_pow(spec, g, s * p ** j), linalg.identity(n)):
            return s * p ** j
    raise RuntimeError("order computation failed")


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def jordan_decompose(spec: FieldSpec, g) -> tuple[np.ndarray, np.ndarray]:
    """Commuting (semisimple, unipotent) pair with product g, both powers of g."""
    g = linalg.as_matrix(g)
    o = element_order(spec, g)
    p = spec.p
    pk = 1
    while o % (pk * p) == 0:
        pk *= p
    s = o // pk
    if pk == 1:
        return g.copy(), linalg.identity(g.shape[0])
    if s == 1:
        return linalg.identity(g.shape[0]), g.copy()
    # alpha = 1 mod s, 0 mod pk; then g^alpha and g^(1 - alpha) split g
    alpha = (pk * pow(pk, -1, s)) % o
    gs = linalg.mat_pow(spec, g, alpha)
    gu = linalg.mat_pow(spec, g, (o + 1 - alpha) % o)
    return gs, gu


def is_unipotent(spec: FieldSpec, g) -> bool:
    g = linalg.as_matrix(g)
    n = g.shape[0]
    diff = linalg.mat_sub(spec, g, linalg.identity(n))
    power = diff
    for _ in range(n - 1):
        power = linalg.mat_mul_s(spec, power, diff)
    return not power.any()


def is_semisimple(spec: FieldSpec, g) -> bool:
    _, gu = jordan_decompose(spec, g)
    return np.array_equal(gu, linalg.identity(g.shape[0]))


def element_kind(spec: FieldSpec, g) -> str:
    """"central", "unipotent", "semisimple" or "mixed" (exclusive labels)."""
    g = linalg.as_matrix(g)
    n = g.shape[0]
    if linalg.mat_det_s(spec, g) == 0:
        raise ValueError("element is singular")
    diag = g[0, 0]
    if np.array_equal(g, linalg.scalar_matrix(n, int(diag))):
        return "central"
    if is_unipotent(spec, g):
        return "unipotent"
    if is_semisimple(spec, g):
        return "semisimple"
    return "mixed"


def unipotent_shape(spec: FieldSpec, g) -> tuple[int, ...]:
    """Jordan partition of a unipotent element, largest part first."""
    if not is_unipotent(spec, g):
        raise ValueError("element is not unipotent")
    n = g.shape[0]
    diff = linalg.mat_sub(spec, g, linalg.identity(n))
    ranks = [n]
    power = linalg.identity(n)
    for _ in range(n):
        power = linalg.mat_mul_s(spec, power, diff)
        ranks.append(linalg.mat_rank(spec, power))
    # number of blocks of size >= k is rank((g-I)^(k-1)) - rank((g-I)^k)
    blocks = []
    for k in range(1, n + 1):
        count_ge_k = ranks[k - 1] - ranks[k]
        blocks.append(count_ge_k)
    shape = []
    for k in range(n, 0, -1):
        exactly = blocks[k - 1] - (blocks[k] if k < n else 0)
        shape.extend([k] * exactly)
    return tuple(shape)


# ---------------------------------------------------------------------------
# z-classes


def _restrict_mask(table: GroupTable, restrict: str, reps: np.ndarray) -> list[int]:
    spec = table.spec
    if restrict == "all":
        return [int(r) for r in reps]
    if restrict == "unipotent":
        return [int(r) for r in reps if is_unipotent(spec, table.elems[r])]
    if restrict == "semisimple":
        return [int(r) for r in reps if is_semisimple(spec, table.elems[r])]
    raise ValueError(f"restrict must be all, semisimple or unipotent, got {restrict!r}")


def z_classes(table: GroupTable, restrict: str = "all") -> list[list[int]]:
    """Partition of the (restricted) conjugacy classes into z-classes.

    Two classes merge when their representatives' centralizers are conjugate
    subgroups.  Returns class-representative positions grouped by z-class,
    ordered by smallest representative.
    """
    classes = conjugacy_classes(table)
    reps = _restrict_mask(table, restrict, classes.reps)
    cents = {r: centralizer_positions(table, r) for r in reps}
    parent = {r: r for r in reps}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_size: dict[int, list[int]] = {}
    for r in reps:
        by_size.setdefault(len(cents[r]), []).append(r)
    for bucket in by_size.values():
        for i, a in enumerate(bucket):
            for b in bucket[i + 1:]:
                if find(a) == find(b):
                    continue
                if subgroups_conjugate(table, cents[a], cents[b]) is not None:
                    parent[find(b)] = find(a)
    groups: dict[int, list[int]] = {}
    for r in reps:
        groups.setdefault(find(r), []).append(r)
    return sorted((sorted(v) for v in groups.values()), key=lambda v: v[0])


def z_class_count(table: GroupTable, restrict: str = "all") -> int:
    return len(z_classes(table, restrict))


# ---------------------------------------------------------------------------
# Wall's conjugacy-into-U criterion


_GL_CACHE: dict[tuple[int, int, int], GroupTable] = {}


def _gl_extension_table(spec: FieldSpec, n: int, bound=None) -> GroupTable:
    key = (spec.p, spec.e, n)
    tab = _GL_CACHE.get(key)
    if tab is None:
        tab = build_general_linear(n, spec, over_extension=True, bound=bound)
        _GL_CACHE[key] = tab
    return tab


def conj_transpose_inverse(spec: FieldSpec, a) -> np.ndarray:
    return linalg.mat_inv_s(spec, linalg.conj_transpose(spec, a))


def wall_membership(spec: FieldSpec, n: int, a, bound: int | None = None) -> bool:
    """Is `a` in GL_n(q^2) conjugate to an element of U_n(q)?

    True exactly when a is GL_n(q^2)-conjugate to the inverse of its
    conjugate transpose.
    """
    a = linalg.as_matrix(a)
    if a.shape[0] != n:
        raise ValueError("dimension mismatch")
    if linalg.mat_det_s(spec, a) == 0:
        raise ValueError("element is singular")
    table = _gl_extension_table(spec, n, bound)
    classes = conjugacy_classes(table)
    twisted = conj_transpose_inverse(spec, a)
    ia = table.index_of(a)
    it = table.index_of(twisted)
    return int(classes.class_id[ia]) == int(classes.class_id[it])

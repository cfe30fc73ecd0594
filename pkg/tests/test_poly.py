import pytest

from zclass import ff, poly
from zclass.poly import (Poly, enumerate_irreducibles, factorization_product,
                         is_irreducible, is_self_u_reciprocal, necklace_count,
                         poly_divmod, poly_gcd, poly_make, poly_mul,
                         self_urec_factorize, u_reciprocal)


def lin(spec, root):
    # x - root, monic
    return poly_make([ff.neg(spec, root), 1])


def test_poly_make_normalizes():
    assert poly_make([1, 2, 0, 0]).coeffs == (1, 2)
    assert poly_make([0]).coeffs == (0,)
    assert poly_make([]).coeffs == (0,)


def test_degree_and_monic():
    f = poly_make([2, 0, 1])
    assert f.degree == 2
    assert f.is_monic


def test_divmod_roundtrip(f9):
    f = poly_make([2, 1, 0, 1])
    g = poly_make([1, 1])
    q, r = poly_divmod(f9, f, g)
    prod = list(poly_mul(f9, q, g).coeffs) + [0] * len(f.coeffs)
    for i, c in enumerate(r.coeffs):
        prod[i] = ff.add(f9, prod[i], c)
    assert poly_make(prod).coeffs == f.coeffs
    assert r.degree < g.degree


def test_gcd_of_multiple(f9):
    f = poly_mul(f9, poly_make([1, 1]), poly_make([2, 1]))
    g = poly_mul(f9, poly_make([1, 1]), poly_make([1, 0, 1]))
    assert poly_gcd(f9, f, g).coeffs == (1, 1)


def test_u_reciprocal_linear(f9):
    # x - lam goes to x - conj(lam)^(-1)
    lam = 5
    f = lin(f9, lam)
    ft = u_reciprocal(f9, f)
    expected_root = ff.inv(f9, ff.conj(f9, lam))
    assert ft.coeffs == lin(f9, expected_root).coeffs


def test_u_reciprocal_involution(f9):
    f = poly_make([1, 3, 1])  # x^2 + t*x + 1 over F_9
    assert u_reciprocal(f9, u_reciprocal(f9, f)).coeffs == f.coeffs
    for coeffs in [(2, 1), (5, 0, 1), (7, 3, 2, 1)]:
        g = poly_make(list(coeffs))
        assert u_reciprocal(f9, u_reciprocal(f9, g)).coeffs == g.coeffs


def test_u_reciprocal_zero_constant(f9):
    with pytest.raises(ValueError):
        u_reciprocal(f9, poly_make([0, 1]))


def test_self_u_reciprocal_norm_one_root(f9):
    # norm(t) = 1, so x - t is self-U-reciprocal
    assert is_self_u_reciprocal(f9, lin(f9, 3))
    # norm(2) = 4 = 1 mod 3 as well; a non-norm-one root fails
    bad = [a for a in range(1, 9) if ff.norm(f9, a) != 1][0]
    assert not is_self_u_reciprocal(f9, lin(f9, bad))


def test_is_irreducible(f9):
    assert is_irreducible(f9, poly_make([1, 0, 1]), field="base")
    assert not is_irreducible(f9, poly_make([1, 0, 1]))  # splits over F_9
    assert not is_irreducible(f9, poly_make([2, 0, 1]))  # x^2 - 1
    assert is_irreducible(f9, poly_make([3, 1]))


def test_irreducible_counts_match_necklace(f9):
    for d in [1, 2, 3]:
        polys = enumerate_irreducibles(f9, d)
        assert len(polys) == necklace_count(9, d)
    assert len(enumerate_irreducibles(f9, 3)) == 240  # (9^3 - 9)/3


def test_enumerate_canonical_order(f9):
    polys = enumerate_irreducibles(f9, 1)
    assert polys[0].coeffs == (0, 1)  # x comes first
    assert [f.coeffs for f in polys[:3]] == [(0, 1), (1, 1), (2, 1)]


def test_selfurec_degree_one(f9):
    polys = enumerate_irreducibles(f9, 1, filter="self_u_reciprocal")
    assert len(polys) == 4  # q + 1 norm-one roots
    for f in polys:
        assert is_self_u_reciprocal(f9, f)


def test_selfurec_even_degrees_empty(f9, f25):
    for spec in (f9, f25):
        assert enumerate_irreducibles(spec, 2, filter="self_u_reciprocal") == []
        assert enumerate_irreducibles(spec, 4, filter="self_u_reciprocal") == []


def test_selfurec_degree_three_count(f9):
    polys = enumerate_irreducibles(f9, 3, filter="self_u_reciprocal")
    assert len(polys) == 8
    for f in polys:
        assert is_irreducible(f9, f)
        assert is_self_u_reciprocal(f9, f)


def test_pair_filter(f9):
    pairs = enumerate_irreducibles(f9, 1, filter="non_self_u_reciprocal_pairs")
    assert len(pairs) == 2
    for f, ft in pairs:
        assert u_reciprocal(f9, f).coeffs == ft.coeffs
        assert f.coeffs != ft.coeffs
        assert f.coeffs < ft.coeffs


def test_factorize_unipotent_cube(f9):
    # (x - 1)^3
    f = poly_make([2, 0, 0, 1])
    fact = self_urec_factorize(f9, f)
    assert fact.pair_factors == ()
    assert len(fact.self_factors) == 1
    g, m = fact.self_factors[0]
    assert g.coeffs == (2, 1)
    assert m == 3


def test_factorize_pair_product(f9):
    # pick a monic linear with non-norm-one root, multiply by its transform
    root = [a for a in range(1, 9) if ff.norm(f9, a) != 1][0]
    g = lin(f9, root)
    gt = u_reciprocal(f9, g)
    f = poly_mul(f9, g, gt)
    fact = self_urec_factorize(f9, f)
    assert fact.self_factors == ()
    assert len(fact.pair_factors) == 1
    a, b, m = fact.pair_factors[0]
    assert m == 1
    assert {a.coeffs, b.coeffs} == {g.coeffs, gt.coeffs}


def test_factorize_rejects_non_selfurec(f9):
    root = [a for a in range(1, 9) if ff.norm(f9, a) != 1][0]
    with pytest.raises(ValueError):
        self_urec_factorize(f9, lin(f9, root))


def test_factorization_product_roundtrip(f9):
    f = poly_make([1, 0, 0, 0, 0, 0, 1])  # x^6 + 1 over F_9
    if is_self_u_reciprocal(f9, f):
        fact = self_urec_factorize(f9, f)
        assert factorization_product(f9, fact).coeffs == f.coeffs


def test_factorize_mixed(f9):
    # (x - t)^2 * (x - 1) with t of norm one
    f = poly_mul(f9, poly_mul(f9, lin(f9, 3), lin(f9, 3)), lin(f9, 1))
    fact = self_urec_factorize(f9, f)
    got = {(g.coeffs, m) for g, m in fact.self_factors}
    assert got == {(lin(f9, 3).coeffs, 2), (lin(f9, 1).coeffs, 1)}
    assert factorization_product(f9, fact).coeffs == f.coeffs


def test_necklace_values():
    assert necklace_count(9, 1) == 9
    assert necklace_count(9, 2) == 36
    assert necklace_count(9, 3) == 240
    assert necklace_count(3, 2) == 3
    assert necklace_count(2, 3) == 2

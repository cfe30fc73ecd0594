import numpy as np
import pytest

from zclass import ff, group, hermitian, linalg
from zclass.errors import BoundExceededError
from zclass.group import (build_general_linear, build_unitary, centralizer,
                          centralizer_positions, conjugacy_classes,
                          element_kind, element_order, gl_order,
                          jordan_decompose, is_semisimple, is_unipotent,
                          subgroups_conjugate, u_order,
                          unipotent_centralizer_order, unipotent_shape,
                          wall_membership, z_class_count, z_classes)


def test_order_formulas():
    assert gl_order(3, 2) == 48
    assert gl_order(9, 2) == 5760
    assert gl_order(3, 3) == 11232
    assert u_order(3, 2) == 96
    assert u_order(3, 3) == 24192
    assert u_order(5, 2) == 720


def test_gl23_table(gl23):
    assert gl23.order == 48
    assert gl23.kind == "general_linear"
    assert gl23.contains(linalg.identity(2))
    # keys strictly ascending gives binary-search membership
    assert np.all(np.diff(gl23.keys) > 0)


def test_gl23_membership(gl23):
    sing = np.array([[1, 1], [1, 1]], dtype=np.int16)
    assert not gl23.contains(sing)
    ext = np.array([[3, 0], [0, 1]], dtype=np.int16)  # entry outside F_3
    assert not gl23.contains(ext)


def test_gl23_inverses(gl23):
    prods = group.kernels.mat_mul(gl23.elems, gl23.invs,
                                  gl23.spec.mul_t, gl23.spec.add_t)
    assert np.all(prods == linalg.identity(2))


def test_u23_table(u23, f9):
    assert u23.order == 96
    gram = u23.form.gram
    assert np.array_equal(gram, linalg.identity(2))
    tgm = group._unitary_mask(f9, u23.elems, gram)
    assert tgm.all()


def test_unitary_closure_path(f9):
    f25 = ff.field_make(5)
    # GL_2(25) has 360000 elements, over the 200000 default bound, so the
    # reflection closure is the only route
    u = build_unitary(2, f25)
    assert u.order == 720


def test_unitary_rejects_char_two(f4):
    with pytest.raises(ValueError):
        build_unitary(2, f4)


def test_bound_exceeded_carries_projection(f9):
    with pytest.raises(BoundExceededError) as exc:
        build_general_linear(3, f9, over_extension=True)
    assert exc.value.projected == gl_order(9, 3)
    with pytest.raises(BoundExceededError):
        build_unitary(2, f9, bound=50)


def test_conjugacy_classes_gl23(gl23):
    classes = conjugacy_classes(gl23)
    assert classes.count == 8
    sizes = [int((classes.class_id == c).sum()) for c in range(classes.count)]
    assert sum(sizes) == 48
    for rep, size in zip(classes.reps, sizes):
        cent = centralizer_positions(gl23, int(rep))
        assert len(cent) * size == 48


def test_centralizer_identity_is_group(gl23):
    cent = centralizer(gl23, linalg.identity(2))
    assert len(cent) == gl23.order


def test_centralizer_split_torus(gl23):
    g = np.array([[1, 0], [0, 2]], dtype=np.int16)
    assert len(centralizer(gl23, g)) == 4


def test_centralizer_unipotent_u23(u23):
    for pos in range(u23.order):
        g = u23.elems[pos]
        if is_unipotent(u23.spec, g) and not np.array_equal(g, linalg.identity(2)):
            assert len(centralizer_positions(u23, pos)) == 12
            break
    else:
        pytest.fail("no nontrivial unipotent found")


def test_subgroups_conjugate_trivial(gl23):
    sub = centralizer(gl23, np.array([[1, 0], [0, 2]], dtype=np.int16))
    witness = subgroups_conjugate(gl23, sub, sub)
    assert np.array_equal(witness, linalg.identity(2))


def test_subgroups_conjugate_size_mismatch(gl23):
    a = centralizer(gl23, np.array([[1, 0], [0, 2]], dtype=np.int16))
    b = centralizer(gl23, linalg.identity(2))
    assert subgroups_conjugate(gl23, a, b) is None


def test_subgroups_conjugate_nonsplit_tori(gl23):
    # centralizers of two distinct irreducible elements: order 8 each,
    # conjugate by some witness
    spec = gl23.spec
    tori = []
    for pos in range(gl23.order):
        g = gl23.elems[pos]
        cp = linalg.charpoly(spec, g)
        from zclass.poly import is_irreducible, poly_make
        if is_irreducible(spec, poly_make(list(cp)), field="base"):
            cent = centralizer_positions(gl23, pos)
            if len(cent) == 8:
                tori.append(cent)
        if len(tori) == 2 and not np.array_equal(tori[0], tori[1]):
            break
    witness = subgroups_conjugate(gl23, tori[0], tori[1])
    assert witness is not None


def test_element_order(gl23):
    assert element_order(gl23.spec, linalg.identity(2)) == 1
    g = np.array([[1, 1], [0, 1]], dtype=np.int16)
    assert element_order(gl23.spec, g) == 3
    h = np.array([[0, 1], [2, 0]], dtype=np.int16)
    orders = {element_order(gl23.spec, gl23.elems[i]) for i in range(48)}
    assert max(orders) == 8  # GL_2(3) has elements of order 8
    assert element_order(gl23.spec, h) in orders


def test_jordan_decompose_pure_cases(gl23):
    spec = gl23.spec
    uni = np.array([[1, 1], [0, 1]], dtype=np.int16)
    gs, gu = jordan_decompose(spec, uni)
    assert np.array_equal(gs, linalg.identity(2))
    assert np.array_equal(gu, uni)
    semi = np.array([[0, 1], [2, 0]], dtype=np.int16)  # order coprime to 3
    assert element_order(spec, semi) % 3 != 0
    gs, gu = jordan_decompose(spec, semi)
    assert np.array_equal(gs, semi)
    assert np.array_equal(gu, linalg.identity(2))


def test_jordan_decompose_order_six(gl23):
    spec = gl23.spec
    for pos in range(gl23.order):
        g = gl23.elems[pos]
        if element_order(spec, g) == 6:
            break
    gs, gu = jordan_decompose(spec, g)
    assert element_order(spec, gs) == 2
    assert element_order(spec, gu) == 3
    assert np.array_equal(linalg.mat_mul_s(spec, gs, gu), g)
    assert np.array_equal(linalg.mat_mul_s(spec, gu, gs), g)
    assert is_semisimple(spec, gs)
    assert is_unipotent(spec, gu)


def test_element_kind_labels(gl23):
    spec = gl23.spec
    assert element_kind(spec, linalg.identity(2)) == "central"
    assert element_kind(spec, np.array([[1, 1], [0, 1]], dtype=np.int16)) == "unipotent"
    assert element_kind(spec, np.array([[1, 0], [0, 2]], dtype=np.int16)) == "semisimple"
    for pos in range(gl23.order):
        g = gl23.elems[pos]
        if element_order(spec, g) == 6:
            assert element_kind(spec, g) == "mixed"
            break


def test_unipotent_shape(u33, f9):
    shapes = set()
    for pos in range(u33.order):
        g = u33.elems[pos]
        if is_unipotent(f9, g):
            shapes.add(unipotent_shape(f9, g))
    assert shapes == {(1, 1, 1), (2, 1), (3,)}


def test_unipotent_centralizer_order_values():
    assert unipotent_centralizer_order(3, (2,)) == 12
    assert unipotent_centralizer_order(3, (1, 1)) == 96
    assert unipotent_centralizer_order(3, (2,), kind="general_linear") == 6


def test_z_classes_gl23(gl23):
    assert z_class_count(gl23) == 4
    cover = sorted(r for zc in z_classes(gl23) for r in zc)
    classes = conjugacy_classes(gl23)
    assert cover == sorted(int(r) for r in classes.reps)


def test_z_classes_u23(u23):
    assert z_class_count(u23) == 4


def test_z_classes_gl22(f4):
    gl22 = build_general_linear(2, f4)
    assert gl22.order == 6
    assert z_class_count(gl22) == 3


def test_z_classes_restricted(u23):
    assert z_class_count(u23, restrict="unipotent") == 2
    assert z_class_count(u23, restrict="semisimple") == 3


def test_wall_membership_dimension_one(f9):
    for lam in range(1, 9):
        a = np.array([[lam]], dtype=np.int16)
        expected = ff.norm(f9, lam) == 1
        assert wall_membership(f9, 1, a) == expected


def test_wall_membership_unipotent(f9):
    a = np.array([[1, 1], [0, 1]], dtype=np.int16)
    assert wall_membership(f9, 2, a)
    assert wall_membership(f9, 2, linalg.identity(2))


def test_primary_components_orthogonal(u23, f9):
    # semisimple g: eigen-kernels of distinct irreducible factors of the
    # characteristic polynomial are orthogonal for the unitary form
    from zclass.poly import poly_make, self_urec_factorize
    gram = u23.form.gram
    checked = 0
    for pos in range(u23.order):
        g = u23.elems[pos]
        if not is_semisimple(f9, g):
            continue
        cp = poly_make(list(linalg.charpoly(f9, g)))
        fact = self_urec_factorize(f9, cp)
        blocks = [f for f, _ in fact.self_factors]
        if len(blocks) < 2:
            continue
        kernels = [linalg.nullspace(f9, linalg.poly_at_matrix(f9, f.coeffs, g))
                   for f in blocks]
        assert sum(len(k) for k in kernels) == 2
        u, v = kernels[0][0], kernels[1][0]
        assert hermitian.evaluate(f9, u23.form, u, v) == 0
        checked += 1
        if checked >= 6:
            break
    assert checked > 0

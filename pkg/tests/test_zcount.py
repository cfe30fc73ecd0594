import numpy as np
import pytest

from zclass import linalg, zcount
from zclass.series import z_fq_series
from zclass.zcount import (UZType, ZType, centralizer_order_from_type,
                           compact_unitary_count, count_realizable,
                           count_semisimple, count_unipotent,
                           enumerate_types_gl, enumerate_types_u, gl_supply,
                           hyperbolic_counts, pair_u_type_with_gl,
                           total_z_count, type_of_semisimple_gl,
                           type_of_semisimple_u, u_odd_supply, u_pair_supply)

FQ_ROW = [1, 4, 8, 22, 42, 103, 199, 441, 859, 1784]


def test_type_counts_match_series():
    for n in range(1, 11):
        assert len(enumerate_types_gl(n)) == FQ_ROW[n - 1]
        assert len(enumerate_types_u(n)) == FQ_ROW[n - 1]


def test_total_z_count_matches_series():
    s = z_fq_series(12)
    for n in range(13):
        assert total_z_count(n) == s.coefficient(n)


def test_n1_single_odd_slot():
    types = enumerate_types_u(1)
    assert len(types) == 1
    t = types[0]
    assert t.odd_slots == ((1, (1,)),)
    assert t.pair_slots == ()


def test_types_unique():
    for n in range(1, 9):
        gl = enumerate_types_gl(n)
        assert len(set(gl)) == len(gl)
        u = enumerate_types_u(n)
        assert len(set(u)) == len(u)


def test_pairing_bijection():
    for n in range(1, 9):
        gl = set(enumerate_types_gl(n))
        images = [pair_u_type_with_gl(t) for t in enumerate_types_u(n)]
        assert len(set(images)) == len(images)
        assert set(images) == gl


def test_pairing_doubles_pair_degree():
    t = UZType(odd_slots=((1, (1,)),),
               pair_slots=((1, (1,)),))
    g = pair_u_type_with_gl(t)
    assert g.slots == ((1, (1,)), (2, (1,)))


def test_count_semisimple():
    assert count_semisimple(2) == 3
    assert count_semisimple(3) == 5
    assert count_semisimple(1) == 1


def test_count_unipotent():
    assert count_unipotent(3) == 3
    assert count_unipotent(5) == 7


def test_total_examples():
    assert total_z_count(1) == 1
    assert total_z_count(2) == 4
    assert total_z_count(5) == 42
    assert total_z_count(9) == 859


def test_supplies_q3():
    assert [gl_supply(3, d) for d in (1, 2, 3)] == [2, 3, 8]
    assert [u_odd_supply(3, d) for d in (1, 2, 3)] == [4, 0, 8]
    assert u_pair_supply(3, 1) == 2


def test_gl_supply_matches_enumeration(f9):
    # monic irreducibles over the base field, x excluded
    for d in (1, 2, 3):
        polys = zcount._base_irreducibles(3, 1, d)
        sans_x = [f for f in polys if f.coeffs[0] != 0]
        assert gl_supply(3, d) == len(sans_x)


def test_u_odd_supply_even_degree_zero():
    assert u_odd_supply(3, 2) == 0
    assert u_odd_supply(5, 2) == 0
    assert u_odd_supply(5, 4) == 0


def test_realizable_counts():
    assert count_realizable(2, 3, "general_linear") == 4
    assert count_realizable(2, 2, "general_linear") == 3
    assert count_realizable(3, 3, "general_linear") == 7
    assert count_realizable(3, 3, "unitary") == 8
    assert count_realizable(3, 5, "general_linear") == 8
    assert count_realizable(3, 5, "unitary") == 8
    assert count_realizable(3, 3, "general_linear", "semisimple") == 4
    assert count_realizable(3, 3, "unitary", "semisimple") == 5
    assert count_realizable(3, 3, "unitary", "unipotent") == 3


def test_realizable_large_q_saturates():
    # big fields realize every type
    for n in range(1, 7):
        assert count_realizable(n, 101, "general_linear") == total_z_count(n)


def test_realizable_rejects_bad_input():
    with pytest.raises(ValueError):
        count_realizable(2, 6, "general_linear")
    with pytest.raises(ValueError):
        count_realizable(2, 2, "unitary")
    with pytest.raises(ValueError):
        count_realizable(2, 3, "orthogonal")


def test_centralizer_order_from_type_split_torus():
    t = ZType(slots=((1, (1,)), (1, (1,))))
    assert centralizer_order_from_type(t, 3) == 4


def test_centralizer_order_from_type_unitary():
    t = UZType(odd_slots=((1, (1,)), (1, (1,))),
               pair_slots=())
    assert centralizer_order_from_type(t, 3) == 16  # U_1(3) x U_1(3)
    t2 = UZType(odd_slots=(), pair_slots=((1, (1,)),))
    assert centralizer_order_from_type(t2, 3) == 8  # GL_1(9)


def test_type_of_semisimple_gl(gl23, f9):
    g = np.array([[1, 0], [0, 2]], dtype=np.int16)
    t = type_of_semisimple_gl(f9, g)
    assert t.slots == ((1, (1,)), (1, (1,)))
    assert centralizer_order_from_type(t, 3) == 4
    central = type_of_semisimple_gl(f9, linalg.scalar_matrix(2, 2))
    assert central.slots == ((1, (1, 1)),)


def test_type_of_semisimple_u(u23, f9):
    t = type_of_semisimple_u(f9, linalg.identity(2))
    assert t.odd_slots == ((1, (1, 1)),)
    assert centralizer_order_from_type(t, 3) == 96


def test_type_serialization():
    t = ZType(slots=((1, (2, 1)), (1, (1,)),
                     (3, (1,))))
    assert t.text() == "d1:[2,1] d1:[1] d3:[1]"
    u = UZType(odd_slots=((1, (2,)),),
               pair_slots=((1, (1,)),))
    assert u.text() == "o1:[2] p1:[1]"


def test_hyperbolic_counts():
    c = hyperbolic_counts(2)
    assert c == {"elliptic": 4, "hyperbolic": 1, "parabolic": 4}
    c1 = hyperbolic_counts(1)
    assert c1 == {"elliptic": 2, "hyperbolic": 1}


def test_compact_unitary_count():
    assert compact_unitary_count(1) == 1
    assert compact_unitary_count(4) == 5
    assert compact_unitary_count(10) == 42


def test_prime_power_helper():
    assert zcount._prime_power(3) == (3, 1)
    assert zcount._prime_power(9) == (3, 2)
    assert zcount._prime_power(8) == (2, 3)
    with pytest.raises(ValueError):
        zcount._prime_power(6)
    with pytest.raises(ValueError):
        zcount._prime_power(1)

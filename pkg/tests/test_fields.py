import random

import numpy as np
import pytest

from modplab.fields import FiniteField, is_prime, smallest_irreducible


def test_is_prime_small():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(0)


def test_smallest_irreducible_frozen():
    # lex-least monic irreducibles, checked by hand against root/factor scans
    assert smallest_irreducible(2, 2) == (1, 1, 1)  # x^2 + x + 1
    assert smallest_irreducible(3, 2) == (1, 0, 1)  # x^2 + 1
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)


def test_constructor_rejects_bad_parameters():
    with pytest.raises(ValueError):
        FiniteField(4, 1)
    with pytest.raises(ValueError):
        FiniteField(2, 0)
    with pytest.raises(ValueError):
        FiniteField(2, 2, modulus=(0, 0, 1))  # x^2 is reducible
    with pytest.raises(ValueError):
        FiniteField(2, 2, modulus=(1, 1))  # wrong degree


def test_prime_field_arithmetic():
    F3 = FiniteField(3)
    assert F3.add(2, 2) == 1
    assert F3.sub(0, 1) == 2
    assert F3.mul(2, 2) == 1
    assert F3.inv(2) == 2
    assert F3.div(1, 2) == 2
    assert F3.neg(1) == 2
    assert F3.pow(2, 5) == 2
    with pytest.raises(ZeroDivisionError):
        F3.inv(0)


def test_f4_table_arithmetic():
    # elements coded 0,1,w,w+1 as 0,1,2,3 with w^2 = w + 1
    F4 = FiniteField(2, 2)
    assert F4.modulus == (1, 1, 1)
    assert F4.mul(2, 2) == 3
    assert F4.mul(2, 3) == 1
    assert F4.add(2, 3) == 1
    assert F4.inv(2) == 3
    assert [F4.element_order(a) for a in (1, 2, 3)] == [1, 3, 3]
    assert F4.coeffs(3) == (1, 1)
    assert F4.from_coeffs((1, 1)) == 3


def test_f9_arithmetic():
    F9 = FiniteField(3, 2)
    assert F9.order == 9
    # 3 codes x, and x^2 = -1 = 2 under the modulus x^2 + 1
    assert F9.mul(3, 3) == 2
    # multiplicative group is cyclic of order 8
    orders = {F9.element_order(a) for a in range(1, 9)}
    assert max(orders) == 8
    assert all(8 % o == 0 for o in orders)


def test_field_axioms_random():
    rng = random.Random(20260814)
    for F in (FiniteField(2), FiniteField(5), FiniteField(2, 2), FiniteField(3, 2)):
        elems = list(F.elements())
        for _ in range(200):
            a, b, c = (rng.choice(elems) for _ in range(3))
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1


def test_vectorized_ops_match_scalar():
    rng = np.random.default_rng(7)
    for F in (FiniteField(2), FiniteField(3), FiniteField(2, 2), FiniteField(3, 2)):
        A = rng.integers(0, F.order, size=(6, 6), dtype=np.int16)
        B = rng.integers(0, F.order, size=(6, 6), dtype=np.int16)
        for name, axop, op in (
            ("add", F.ax_add, F.add),
            ("sub", F.ax_sub, F.sub),
            ("mul", F.ax_mul, F.mul),
        ):
            got = axop(A, B)
            want = np.array([[op(int(x), int(y)) for x, y in zip(r, s)] for r, s in zip(A, B)])
            assert np.array_equal(got, want), name
        assert np.array_equal(F.ax_neg(A), np.vectorize(F.neg)(A))
        C = F.ax_matmul(A, B)
        for i in range(6):
            for j in range(6):
                acc = 0
                for k in range(6):
                    acc = F.add(acc, F.mul(int(A[i, k]), int(B[k, j])))
                assert int(C[i, j]) == acc


def test_descriptor_and_key():
    F4 = FiniteField(2, 2)
    assert F4.descriptor() == {"p": 2, "k": 2, "modulus": [1, 1, 1]}
    assert FiniteField(2, 2).key() == F4.key()
    assert FiniteField(2).key() != F4.key()

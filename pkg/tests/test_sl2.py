import pytest

from modplab.sl2 import sl2_order, sl2_quotient_group


def test_order_formula_frozen():
    # |SL2(Z/p^N)| = p^(3N-2) (p^2 - 1)
    assert sl2_order(2, 1) == 6
    assert sl2_order(3, 1) == 24
    assert sl2_order(2, 2) == 48
    assert sl2_order(3, 2) == 648


def test_quotient_level_one():
    q = sl2_quotient_group(3, 1)
    assert q.group.order == 24
    assert q.congruence == {}
    assert q.tuples[q.group.identity] == (1, 0, 0, 1)


def test_quotient_level_two():
    q = sl2_quotient_group(2, 2)
    G = q.group
    assert G.order == 48
    assert sorted(q.congruence) == [1]
    K1 = q.congruence[1]
    assert K1.order == 8  # kernel of reduction mod 2 has order p^3
    assert all((q.tuples[g][0] - 1) % 2 == 0 and q.tuples[g][1] % 2 == 0 for g in K1.members)
    assert K1.is_normal()


def test_multiplication_matches_matrices():
    q = sl2_quotient_group(2, 2)
    G, tup = q.group, q.tuples
    for g in (1, 5, 17):
        for h in (2, 9, 30):
            a1, b1, c1, d1 = tup[g]
            a2, b2, c2, d2 = tup[h]
            want = (
                (a1 * a2 + b1 * c2) % 4,
                (a1 * b2 + b1 * d2) % 4,
                (c1 * a2 + d1 * c2) % 4,
                (c1 * b2 + d1 * d2) % 4,
            )
            assert tup[G.mul(g, h)] == want


def test_quotient_rejects_bad_input():
    with pytest.raises(ValueError):
        sl2_quotient_group(4, 1)
    with pytest.raises(ValueError):
        sl2_quotient_group(2, 0)
    with pytest.raises(ValueError):
        sl2_quotient_group(2, 5)  # order 24576 over the default cap

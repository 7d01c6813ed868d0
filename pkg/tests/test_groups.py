import pytest

from modplab.catalog import alt4, cyclic_group, dihedral4, klein_group, quaternion8, sym3
from modplab.groups import (
    FinGroup,
    Subgroup,
    all_subgroups,
    conjugate_intersect,
    coset_lookup,
    coset_reps,
    group_from_table,
    group_invariants,
)


def test_table_validation():
    with pytest.raises(ValueError):
        group_from_table([[0, 1], [1, 1]])  # not a latin square
    with pytest.raises(ValueError):
        group_from_table([[0, 1, 2], [1, 2, 0], [2, 1, 0]])  # not associative
    G = group_from_table([[0, 1], [1, 0]], labels=["e", "g"])
    assert G.order == 2 and G.label(1) == "g"


def test_cyclic_group_basics():
    C4 = cyclic_group(4)
    assert C4.order == 4
    assert C4.is_abelian()
    assert [C4.element_order(g) for g in range(4)] == [1, 4, 2, 4]
    assert C4.inv(1) == 3
    assert C4.center_members() == (0, 1, 2, 3)


def test_sym3_structure():
    S3 = sym3()
    assert S3.order == 6
    assert not S3.is_abelian()
    assert [S3.label(i) for i in range(6)] == ["e", "(012)", "(021)", "(01)", "(02)", "(12)"]
    assert S3.center_members() == (0,)
    assert S3.conj(3, 1) != 3  # transpositions are not central
    assert S3.mul(1, 1) == 2 and S3.mul(1, 2) == 0


def test_from_elements_and_direct_product():
    pairs = FinGroup.direct_product(cyclic_group(2), cyclic_group(3))
    assert pairs.order == 6
    assert pairs.is_abelian()
    assert sorted(pairs.element_order(g) for g in range(6)) == [1, 2, 3, 3, 6, 6]
    perms = FinGroup.from_elements(
        [(0, 1), (1, 0)], lambda a, b: tuple(a[b[i]] for i in range(2))
    )
    assert perms.order == 2


def test_subgroup_constructor_validates():
    S3 = sym3()
    with pytest.raises(ValueError):
        Subgroup(S3, [0, 1])  # not closed: (012)^2 = (021) missing
    with pytest.raises(ValueError):
        Subgroup(S3, [1, 2])  # missing identity
    U = Subgroup(S3, [0, 3])
    assert U.order == 2 and U.index == 3
    assert U.contains(3) and not U.contains(1)


def test_subgroup_generate_frozen():
    S3 = sym3()
    assert Subgroup.generate(S3, [1]).members == (0, 1, 2)
    assert Subgroup.generate(S3, [3, 1]).members == (0, 1, 2, 3, 4, 5)
    assert Subgroup.trivial(S3).members == (0,)
    assert Subgroup.full(S3).order == 6


def test_subgroup_as_group_local():
    S3 = sym3()
    U = Subgroup(S3, [0, 1, 2])
    H = U.as_group()
    assert H.order == 3
    assert H.mul(U.local(1), U.local(2)) == U.local(0)
    assert U.generators() and all(U.contains(g) for g in U.generators())


def test_subgroup_lattice_ops():
    S3 = sym3()
    A = Subgroup(S3, [0, 3])
    B = Subgroup(S3, [0, 1, 2])
    assert A.intersect(B).members == (0,)
    assert A.join(B).order == 6
    assert B.is_normal() and not A.is_normal()
    assert not A.is_central()
    assert A.conjugate(1).members != A.members


def test_all_subgroups_sorted():
    C4 = cyclic_group(4)
    assert [s.members for s in all_subgroups(C4)] == [(0,), (0, 2), (0, 1, 2, 3)]
    S3 = sym3()
    subs = [s.members for s in all_subgroups(S3)]
    assert subs == [(0,), (0, 3), (0, 4), (0, 5), (0, 1, 2), (0, 1, 2, 3, 4, 5)]
    V4 = klein_group()
    assert len(all_subgroups(V4)) == 5  # trivial, three C2s, full


def test_cosets_frozen():
    S3 = sym3()
    U = Subgroup(S3, [0, 3])
    reps, pos = coset_lookup(S3, U)
    assert reps == (0, 1, 2)
    assert pos == {0: 0, 3: 0, 1: 1, 5: 1, 2: 2, 4: 2}
    assert coset_reps(S3, Subgroup.full(S3)) == (0,)
    C3 = Subgroup(S3, [0, 1, 2])
    assert coset_reps(S3, C3, C3) == (0, 3)  # two double cosets


def test_conjugate_intersect_frozen():
    S3 = sym3()
    H = Subgroup(S3, [0, 3])
    assert conjugate_intersect(H, H, 0).members == (0, 3)
    assert conjugate_intersect(H, H, 1).members == (0,)
    C3 = Subgroup(S3, [0, 1, 2])
    for g in range(6):
        assert conjugate_intersect(C3, C3, g).members == (0, 1, 2)  # normal


def test_group_invariants():
    C4 = cyclic_group(4)
    inv = group_invariants(C4, p=2)
    assert inv.center.order == 4
    assert inv.is_p_group
    assert len(inv.subgroups) == 3
    S3inv = group_invariants(sym3(), p=3)
    assert S3inv.center.order == 1
    assert S3inv.sylow.members == (0, 1, 2)
    assert not S3inv.is_p_group


def test_named_groups_shape():
    assert quaternion8().order == 8
    assert sum(1 for g in range(8) if quaternion8().element_order(g) == 2) == 1
    assert dihedral4().order == 8 and not dihedral4().is_abelian()
    A4 = alt4()
    assert A4.order == 12
    assert sorted({s.order for s in all_subgroups(A4)}) == [1, 2, 3, 4, 12]  # no order 6


def test_json_roundtrip_equality():
    S3 = sym3()
    assert FinGroup(S3.table) == S3  # labels do not affect equality
    data = S3.to_json()
    assert set(data) == {"order", "table", "labels"}

import pytest

from modplab.catalog import cyclic_group, sym3
from modplab.covers import (
    CoverageError,
    assemble_cover,
    character_eigenspace,
    cover_map,
    extend_by_central_character,
    fixed_cover_subspace,
    frobenius_transport,
    induced_trivial,
    qualifying_subgroups,
)
from modplab.fields import FiniteField
from modplab.linalg import Matrix, Subspace, row_reduce
from modplab.groups import FinGroup, Subgroup
from modplab.reps import (
    RepMap,
    characters_of,
    fixed_points,
    hom_space,
    regular_rep,
    restrict,
    trivial_rep,
)

F2 = FiniteField(2)
F3 = FiniteField(3)
F4 = FiniteField(2, 2)


def test_induced_trivial_fixed_constants():
    S3 = sym3()
    for members in ((0,), (0, 3), (0, 1, 2)):
        U = Subgroup(S3, members)
        ind = induced_trivial(U, F3)
        fp = fixed_points(ind)
        assert fp.dim == 1
        assert fp.basis.tolist() == [[1] * ind.dim]


def test_qualifying_subgroups_frozen():
    C4 = cyclic_group(4)
    got = qualifying_subgroups(trivial_rep(C4, F2), (1,))
    assert [u.members for u in got] == [(0,), (0, 2)]  # K itself fails the bound
    C2 = cyclic_group(2)
    assert qualifying_subgroups(regular_rep(C2, F2), (1, 0)) == []
    with pytest.raises(ValueError):
        qualifying_subgroups(trivial_rep(C4, F2), (0,))  # zero vector excluded


def test_qualifying_subgroups_with_central():
    G = FinGroup.direct_product(cyclic_group(2), cyclic_group(3))
    C = Subgroup(G, [g for g in range(6) if G.element_order(g) in (1, 3)])
    V = trivial_rep(G, F4)
    plain = qualifying_subgroups(V, (1,))
    with_c = qualifying_subgroups(V, (1,), C)
    # joining with C shrinks the coset space, so the C-filtered list is smaller
    assert {u.members for u in with_c} <= {u.members for u in plain}
    with pytest.raises(ValueError):
        K2 = Subgroup(G, [g for g in range(6) if G.element_order(g) in (1, 2)])
        nontriv = [c for c in characters_of(C, F4) if not c.is_trivial()][0]
        W = extend_by_central_character(trivial_rep(K2.as_group(), F4), K2, C, nontriv)
        qualifying_subgroups(W, (1,), C)  # C acts nontrivially here


def test_cover_map_frozen_augmentation():
    C2 = cyclic_group(2)
    phi = cover_map(Subgroup.trivial(C2), trivial_rep(C2, F2), (1,))
    assert phi.matrix.tolist() == [[1, 1]]
    assert row_reduce(phi.matrix).kernel.dim == 1
    with pytest.raises(ValueError):
        cover_map(Subgroup.full(C2), regular_rep(C2, F2), (1, 0))  # not fixed


def test_cover_map_kernel_nonzero_on_qualifying():
    C4 = cyclic_group(4)
    V = trivial_rep(C4, F2)
    for U in qualifying_subgroups(V, (1,)):
        phi = cover_map(U, V, (1,))
        assert row_reduce(phi.matrix).kernel.dim > 0
        # the indicator of the trivial coset maps to the vector itself
        assert phi.matrix.col(0) == (1,)


def test_assemble_cover_frozen():
    C2 = cyclic_group(2)
    asm = assemble_cover(trivial_rep(C2, F2))
    assert asm.source.dim == 2
    assert [(b.vector, b.subgroup.members) for b in asm.blocks] == [((1,), (0,))]
    assert asm.onto.matrix.tolist() == [[1, 1]]
    assert asm.dropped == ()
    assert asm.onto.rank() == 1


def test_assemble_cover_uncoverable():
    C2 = cyclic_group(2)
    with pytest.raises(CoverageError):
        assemble_cover(regular_rep(C2, F2))  # free module: no vector qualifies


def test_assemble_cover_zero_rep():
    C2 = cyclic_group(2)
    asm = assemble_cover(trivial_rep(C2, F2, 0))
    assert asm.source.dim == 0 and asm.blocks == ()


def test_assemble_cover_spanning_subset():
    C4 = cyclic_group(4)
    V = trivial_rep(C4, F2)
    asm = assemble_cover(V, vectors=[(1,)])
    assert asm.onto.rank() == 1
    with pytest.raises(ValueError):
        assemble_cover(V, vectors=[(0,)])  # does not span


def test_fixed_cover_subspace_dies_under_phi():
    # p-group: the assembled map vanishes on full-group fixed points of S
    C4 = cyclic_group(4)
    asm = assemble_cover(trivial_rep(C4, F2))
    sk = fixed_cover_subspace(asm)
    assert sk.dim == len(asm.blocks)
    assert sk == fixed_points(asm.source)
    for i in range(sk.basis.rows):
        image = asm.onto.matrix.apply(sk.basis.row(i))
        assert all(x == 0 for x in image)


def test_frobenius_transport_round_trip():
    S3 = sym3()
    U = Subgroup(S3, [0, 3])
    W = trivial_rep(U.as_group(), F3)
    V = trivial_rep(S3, F3)
    ind = induced_trivial(U, F3)
    assert hom_space(ind, V).dim == hom_space(W, restrict(V, U)).dim == 1
    t = RepMap(W, restrict(V, U), Matrix.identity(F3, 1))
    big = frobenius_transport(U, W, V, "lower", t)
    assert big.source.dim == 3 and big.target is V
    back = frobenius_transport(U, W, V, "lower", big)
    assert back.matrix == t.matrix
    up = RepMap(restrict(V, U), W, Matrix.identity(F3, 1))
    lifted = frobenius_transport(U, W, V, "upper", up)
    assert lifted.source is V and lifted.target.dim == 3
    assert frobenius_transport(U, W, V, "upper", lifted).matrix == up.matrix


def test_frobenius_transport_rejects_mismatch():
    S3 = sym3()
    U = Subgroup(S3, [0, 3])
    W = trivial_rep(U.as_group(), F3)
    V = trivial_rep(S3, F3)
    t = RepMap(W, restrict(V, U), Matrix.identity(F3, 1))
    with pytest.raises(ValueError):
        frobenius_transport(U, W, V, "sideways", t)
    with pytest.raises(ValueError):
        frobenius_transport(U, W, trivial_rep(S3, F2), "lower", t)


def test_character_eigenspace_frozen():
    C3 = cyclic_group(3)
    reg = regular_rep(C3, F4)
    full = Subgroup.full(C3)
    for chi in characters_of(full, F4):
        space, P = character_eigenspace(reg, full, chi)
        assert space.dim == 1
        assert P is not None and P @ P == P
        assert row_reduce(P).image == space
        # projector restricts to the identity on its eigenspace
        assert P.apply(space.basis.row(0)) == space.basis.row(0)
    triv = trivial_rep(C3, F4)
    space, P = character_eigenspace(triv, Subgroup.trivial(C3), characters_of(Subgroup.trivial(C3), F4)[0])
    assert space == Subspace.full(F4, 1) and P.is_identity()


def test_character_eigenspace_projector_gate():
    # p-part acting nontrivially blocks the averaging projector
    C2 = cyclic_group(2)
    reg = regular_rep(C2, F2)
    chi = characters_of(Subgroup.full(C2), F2)[0]
    space, P = character_eigenspace(reg, Subgroup.full(C2), chi)
    assert space.dim == 1 and P is None


def test_eigenspace_surjection_compatibility():
    # an equivariant surjection stays surjective on each eigenspace
    C3 = cyclic_group(3)
    reg = regular_rep(C3, F4)
    triv = trivial_rep(C3, F4)
    gamma = RepMap(reg, triv, Matrix.from_rows(F4, [[1, 1, 1]]))
    full = Subgroup.full(C3)
    for chi in characters_of(full, F4):
        s1, _ = character_eigenspace(reg, full, chi)
        s2, _ = character_eigenspace(triv, full, chi)
        image_rows = [gamma.matrix.apply(s1.basis.row(i)) for i in range(s1.basis.rows)]
        assert Subspace.from_rows(F4, 1, image_rows) == s2


def test_extend_by_central_character_frozen():
    G = FinGroup.direct_product(cyclic_group(2), cyclic_group(3))
    K = Subgroup(G, [g for g in range(6) if G.element_order(g) in (1, 2)])
    C = Subgroup(G, [g for g in range(6) if G.element_order(g) in (1, 3)])
    assert C.is_central()
    chi = [c for c in characters_of(C, F4) if not c.is_trivial()][0]
    V = trivial_rep(K.as_group(), F4)
    W = extend_by_central_character(V, K, C, chi)
    assert W.group.order == 6 and W.dim == 1
    KC = K.join(C)
    for z in C.members:
        assert W.mat(KC.local(z)).tolist() == [[chi.value(z)]]
    for k in K.members:
        assert W.mat(KC.local(k)) == V.mat(K.local(k))


def test_extend_identity_when_central_trivial():
    C3 = cyclic_group(3)
    full = Subgroup.full(C3)
    E = Subgroup.trivial(C3)
    chi = characters_of(E, F4)[0]
    V = trivial_rep(C3, F4, 2)
    W = extend_by_central_character(V, full, E, chi)
    assert W.matrices == V.matrices


def test_extend_rejects_incompatible_overlap():
    C3 = cyclic_group(3)
    full = Subgroup.full(C3)
    chi = [c for c in characters_of(full, F4) if not c.is_trivial()][0]
    with pytest.raises(ValueError):
        extend_by_central_character(trivial_rep(C3, F4), full, full, chi)

import pytest

from modplab.catalog import catalog_reps, cyclic_group, klein_group, sym3
from modplab.fields import FiniteField
from modplab.linalg import Matrix
from modplab.groups import Subgroup
from modplab.reps import (
    Character,
    Rep,
    RepMap,
    ShortExactSeq,
    character_rep,
    characters_of,
    cyclic_span_dim,
    direct_sum,
    fixed_points,
    hom_basis_maps,
    hom_space,
    induce,
    regular_rep,
    rep_from_generators,
    restrict,
    trivial_rep,
)

F2 = FiniteField(2)
F3 = FiniteField(3)
F4 = FiniteField(2, 2)


def test_rep_validation():
    C2 = cyclic_group(2)
    I = Matrix.identity(F2, 1)
    with pytest.raises(ValueError):
        Rep(C2, F2, [I])  # one matrix per element required
    with pytest.raises(ValueError):
        Rep(C2, F2, [Matrix.zeros(F2, 1, 1), I])  # identity must act as identity


def test_builders_frozen():
    C2 = cyclic_group(2)
    assert trivial_rep(C2, F2).dim == 1
    reg = regular_rep(C2, F2)
    assert reg.dim == 2
    assert reg.mat(1).tolist() == [[0, 1], [1, 0]]
    # order-2 scalar 2 over F_3: 2^2 = 1
    tw = character_rep(C2, F3, [1, 2])
    assert tw.mat(1).tolist() == [[2]]
    with pytest.raises(ValueError):
        character_rep(C2, F3, [1, 0])


def test_rep_from_generators():
    S3 = sym3()
    images = {g: Matrix.identity(F2, 1) for g in S3.generators()}
    triv = rep_from_generators(S3, F2, images)
    assert triv == trivial_rep(S3, F2)
    bad = {g: Matrix.from_rows(F3, [[2]]) for g in sym3().generators()}
    with pytest.raises(ValueError):
        rep_from_generators(sym3(), F3, bad)  # (012) would need order dividing 2


def test_restrict():
    S3 = sym3()
    reg = regular_rep(S3, F3)
    assert restrict(reg, Subgroup.full(S3)).matrices == reg.matrices
    C3 = Subgroup(S3, [0, 1, 2])
    down = restrict(reg, C3)
    assert down.dim == 6 and down.group.order == 3
    triv_part = restrict(reg, Subgroup.trivial(S3))
    assert all(M.is_identity() for M in triv_part.matrices)


def test_induce_frozen():
    C2 = cyclic_group(2)
    E = Subgroup.trivial(C2)
    ind = induce(E, trivial_rep(E.as_group(), F2))
    assert ind.matrices == regular_rep(C2, F2).matrices
    S3 = sym3()
    U = Subgroup(S3, [0, 3])
    ind3 = induce(U, trivial_rep(U.as_group(), F3))
    assert ind3.dim == 3  # index of U
    full = induce(Subgroup.full(S3), trivial_rep(S3, F3))
    assert full.matrices == trivial_rep(S3, F3).matrices


def test_induce_dimension_formula():
    S3 = sym3()
    for members in ((0,), (0, 3), (0, 1, 2)):
        U = Subgroup(S3, members)
        W = regular_rep(U.as_group(), F2)
        assert induce(U, W).dim == U.index * W.dim


def test_hom_space_frozen():
    C2 = cyclic_group(2)
    triv = trivial_rep(C2, F2)
    assert hom_space(triv, triv).dim == 1
    assert hom_space(triv, regular_rep(C2, F2)).dim == 1  # socle of F[C2]
    S3 = sym3()
    sign_in_char2 = character_rep(S3, F2, [1] * 6)
    assert hom_space(trivial_rep(S3, F2), sign_in_char2).dim == 1


def test_hom_basis_maps_are_equivariant():
    C3 = cyclic_group(3)
    reg = regular_rep(C3, F3)
    maps = hom_basis_maps(reg, reg)
    assert len(maps) == hom_space(reg, reg).dim == 3
    for f in maps:
        assert isinstance(f, RepMap)  # RepMap construction re-validates


def test_fixed_points_frozen():
    C2 = cyclic_group(2)
    reg = regular_rep(C2, F2)
    assert fixed_points(reg, Subgroup.trivial(C2)).dim == 2
    fp = fixed_points(reg)
    assert fp.dim == 1 and fp.basis.tolist() == [[1, 1]]
    # char-p fixed points of a p-group are never zero on nonzero reps
    for name, V in catalog_reps(C2, F2).items():
        if V.dim:
            assert fixed_points(V).dim > 0, name


def test_cyclic_span_dim_frozen():
    C2 = cyclic_group(2)
    reg = regular_rep(C2, F2)
    assert cyclic_span_dim(reg, (0, 0)) == 0
    assert cyclic_span_dim(trivial_rep(C2, F2), (1,)) == 1
    assert cyclic_span_dim(reg, (1, 0)) == 2


def test_direct_sum():
    C2 = cyclic_group(2)
    s = direct_sum([trivial_rep(C2, F2), regular_rep(C2, F2)])
    assert s.dim == 3
    assert s.mat(1).tolist() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]


def test_repmap_validation():
    C2 = cyclic_group(2)
    triv, reg = trivial_rep(C2, F2), regular_rep(C2, F2)
    RepMap(triv, reg, Matrix.from_rows(F2, [[1], [1]]))  # the diagonal is fixed
    with pytest.raises(ValueError):
        RepMap(triv, reg, Matrix.from_rows(F2, [[1], [0]]))  # not equivariant
    with pytest.raises(ValueError):
        RepMap(triv, reg, Matrix.identity(F2, 2))  # shape mismatch


def test_short_exact_seq_validation():
    C2 = cyclic_group(2)
    triv, reg = trivial_rep(C2, F2), regular_rep(C2, F2)
    left = RepMap(triv, reg, Matrix.from_rows(F2, [[1], [1]]))
    right = RepMap(reg, triv, Matrix.from_rows(F2, [[1, 1]]))
    ses = ShortExactSeq(left, right)
    assert ses.left is left and ses.right is right
    bad_right = RepMap(reg, reg, Matrix.zeros(F2, 2, 2))
    with pytest.raises(ValueError):
        ShortExactSeq(left, bad_right)  # not surjective


def test_characters_of_counts():
    C2, C3 = cyclic_group(2), cyclic_group(3)
    assert len(characters_of(Subgroup.full(C2), F2)) == 1  # p-group forces triviality
    assert len(characters_of(Subgroup.full(C3), F2)) == 1  # no cube roots of 1 in F2
    chars = characters_of(Subgroup.full(C3), F4)
    assert len(chars) == 3
    assert sorted(c.values for c in chars) == [(1, 1, 1), (1, 2, 3), (1, 3, 2)]
    assert len(characters_of(Subgroup.full(klein_group()), F3)) == 4


def test_character_validation():
    C3 = cyclic_group(3)
    full = Subgroup.full(C3)
    chi = Character(full, F4, (1, 2, 3))
    assert chi.value(1) == 2 and not chi.is_trivial()
    with pytest.raises(ValueError):
        Character(full, F4, (1, 2, 2))  # not multiplicative
    with pytest.raises(ValueError):
        Character(full, F4, (1, 0, 0))  # zero values
    with pytest.raises(ValueError):
        Character(Subgroup.full(cyclic_group(2)), F2, (1, 1, 1))  # length mismatch
    with pytest.raises(ValueError):
        # order-3 element in characteristic 3 must map to 1
        Character(full, F3, (1, 2, 2))

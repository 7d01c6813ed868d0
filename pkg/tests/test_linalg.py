import random

import pytest

from modplab.fields import FiniteField
from modplab.linalg import Matrix, Subspace, block_diag, hstack, row_reduce, solve, vstack

F2 = FiniteField(2)
F3 = FiniteField(3)
F4 = FiniteField(2, 2)


def _random_matrix(F, rows, cols, rng):
    return Matrix.from_rows(F, [[rng.randrange(F.order) for _ in range(cols)] for _ in range(rows)])


def test_constructors_and_shape():
    I = Matrix.identity(F2, 3)
    assert I.rows == I.cols == 3
    assert I.is_identity()
    Z = Matrix.zeros(F3, 2, 4)
    assert Z.is_zero()
    col = Matrix.column(F3, (1, 2))
    assert col.rows == 2 and col.cols == 1
    with pytest.raises(ValueError):
        Matrix.from_rows(F2, [[1, 0], [1]])


def test_arithmetic_small():
    A = Matrix.from_rows(F3, [[1, 2], [0, 1]])
    B = Matrix.from_rows(F3, [[2, 0], [1, 1]])
    assert (A + B).tolist() == [[0, 2], [1, 2]]
    assert (A - B).tolist() == [[2, 2], [2, 0]]
    assert (-A).tolist() == [[2, 1], [0, 2]]
    assert (A @ B).tolist() == [[1, 2], [1, 1]]
    assert A.scale(2).tolist() == [[2, 4 % 3], [0, 2]]
    assert A.transpose().tolist() == [[1, 0], [2, 1]]
    assert A.apply((1, 1)) == (0, 1)


def test_matmul_f4():
    w = 2  # generator, w^2 = w + 1
    A = Matrix.from_rows(F4, [[w, 1], [0, w]])
    # (A^2)[0][0] = w*w = w+1 = 3; [0][1] = w*1 + 1*w = 0; [1][1] = 3
    assert (A @ A).tolist() == [[3, 0], [0, 3]]


def test_kron_shape_and_values():
    A = Matrix.from_rows(F2, [[1, 1]])
    B = Matrix.identity(F2, 2)
    K = A.kron(B)
    assert (K.rows, K.cols) == (2, 4)
    assert K.tolist() == [[1, 0, 1, 0], [0, 1, 0, 1]]


def test_row_reduce_frozen_examples():
    assert Matrix.identity(F2, 3).rank() == 3
    ech = row_reduce(Matrix.zeros(F3, 2, 2))
    assert ech.rank == 0
    assert ech.kernel.dim == 2
    ech2 = row_reduce(Matrix.from_rows(F2, [[1, 1], [1, 1]]))
    assert ech2.rank == 1
    assert ech2.kernel.basis.tolist() == [[1, 1]]
    assert ech2.image.basis.tolist() == [[1, 1]]


def test_rank_nullity_random():
    rng = random.Random(3)
    for F in (F2, F3, F4):
        for _ in range(25):
            rows, cols = rng.randrange(1, 6), rng.randrange(1, 6)
            M = _random_matrix(F, rows, cols, rng)
            ech = row_reduce(M)
            assert ech.rank + ech.kernel.dim == cols
            assert ech.image.dim == ech.rank
            for i in range(ech.kernel.basis.rows):
                v = ech.kernel.basis.row(i)
                assert all(x == 0 for x in M.apply(v))


def test_solve_frozen_examples():
    B = Matrix.from_rows(F2, [[1], [0]])
    assert solve(Matrix.identity(F2, 2), B) == B
    assert solve(Matrix.zeros(F2, 2, 2), B) is None
    assert solve(Matrix.zeros(F2, 2, 2), Matrix.zeros(F2, 2, 1)).is_zero()
    A = Matrix.from_rows(F2, [[1, 1], [0, 0]])
    X = solve(A, B)
    assert X.tolist() == [[1], [0]]  # free variables pinned to zero
    assert A @ X == B


def test_solve_random_consistency():
    rng = random.Random(11)
    for F in (F2, F3, F4):
        for _ in range(25):
            A = _random_matrix(F, rng.randrange(1, 5), rng.randrange(1, 5), rng)
            X0 = _random_matrix(F, A.cols, 2, rng)
            B = A @ X0
            X = solve(A, B)
            assert X is not None
            assert A @ X == B


def test_stacking():
    A = Matrix.from_rows(F2, [[1, 0]])
    B = Matrix.from_rows(F2, [[0, 1]])
    assert hstack([A, B]).tolist() == [[1, 0, 0, 1]]
    assert vstack([A, B]).tolist() == [[1, 0], [0, 1]]
    D = block_diag(F2, [Matrix.identity(F2, 1), Matrix.from_rows(F2, [[1, 1]])])
    assert D.tolist() == [[1, 0, 0], [0, 1, 1]]


def test_subspace_canonical_and_membership():
    S = Subspace.from_rows(F3, 3, [[1, 2, 0], [2, 1, 0]])
    assert S.dim == 1
    T = Subspace.from_rows(F3, 3, [[2, 1, 0], [0, 1, 1], [1, 2, 0], [0, 2, 2]])
    assert T.dim == 2
    assert T.contains_space(S)
    assert not S.contains_space(T)
    assert S.reduce((1, 2, 0)) == (0, 0, 0)
    assert not S.contains((1, 1, 1))
    # canonical basis is independent of the generating list
    S2 = Subspace.from_rows(F3, 3, [[2, 1, 0]])
    assert S == S2 and hash(S) == hash(S2)


def test_subspace_sum_and_extremes():
    S = Subspace.from_rows(F2, 2, [[1, 0]])
    T = Subspace.from_rows(F2, 2, [[0, 1]])
    assert S.sum_with(T) == Subspace.full(F2, 2)
    assert Subspace.zero(F2, 2).dim == 0
    assert Subspace.full(F2, 2).contains((1, 1))
    assert S.to_json() == {
        "ambient_dim": 2,
        "basis": [[1, 0]],
        "field": {"p": 2, "k": 1, "modulus": [0, 1]},
    }


def test_matrix_immutability_surface():
    A = Matrix.from_rows(F2, [[1, 0], [0, 1]])
    assert A.entry(0, 0) == 1
    assert A.row(0) == (1, 0)
    assert A.col(1) == (0, 1)
    assert A.flatten() == (1, 0, 0, 1)
    assert A == Matrix.identity(F2, 2)
    assert hash(A) == hash(Matrix.identity(F2, 2))

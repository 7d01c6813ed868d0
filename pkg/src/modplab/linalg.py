"""Dense exact linear algebra over a FiniteField.

Matrices are immutable, row major, with entries stored as element codes in
a numpy int16 array.  Reduction is classical Gauss-Jordan with the first
nonzero pivot in column order, so echelon forms (and everything derived
from them: ranks, kernels, solutions) are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .fields import FiniteField


class Matrix:
    __slots__ = ("field", "a")

    def __init__(self, field: FiniteField, data, copy: bool = True):
        a = np.array(data, dtype=np.int16, copy=copy)
        if a.ndim != 2:
            raise ValueError("matrix data must be two dimensional")
        if a.size and (a.min() < 0 or a.max() >= field.order):
            raise ValueError("entry out of field range")
        a.flags.writeable = False
        self.field = field
        self.a = a

    # ---- constructors ----

    @staticmethod
    def zeros(field: FiniteField, rows: int, cols: int) -> "Matrix":
        return Matrix(field, np.zeros((rows, cols), dtype=np.int16), copy=False)

    @staticmethod
    def identity(field: FiniteField, n: int) -> "Matrix":
        return Matrix(field, np.eye(n, dtype=np.int16), copy=False)

    @staticmethod
    def from_rows(field: FiniteField, rows: Sequence[Sequence[int]], cols: int | None = None) -> "Matrix":
        if len(rows) == 0:
            return Matrix.zeros(field, 0, 0 if cols is None else cols)
        return Matrix(field, [list(r) for r in rows])

    @staticmethod
    def column(field: FiniteField, vec: Sequence[int]) -> "Matrix":
        return Matrix(field, [[v] for v in vec])

    # ---- shape ----

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    # ---- arithmetic ----

    def _need_same(self, other: "Matrix"):
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._need_same(other)
        return Matrix(self.field, self.field.ax_add(self.a, other.a), copy=False)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._need_same(other)
        return Matrix(self.field, self.field.ax_sub(self.a, other.a), copy=False)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.field.ax_neg(self.a), copy=False)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._need_same(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.a.shape} @ {other.a.shape}")
        return Matrix(self.field, self.field.ax_matmul(self.a, other.a), copy=False)

    def scale(self, s: int) -> "Matrix":
        return Matrix(self.field, self.field.ax_scale(self.a, s), copy=False)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.a.T.copy(), copy=False)

    def kron(self, other: "Matrix") -> "Matrix":
        self._need_same(other)
        return Matrix(self.field, self.field.ax_kron(self.a, other.a), copy=False)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """The image of a coordinate vector, M @ v."""
        v = np.asarray(vec, dtype=np.int16).reshape(-1, 1)
        if v.shape[0] != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(int(x) for x in self.field.ax_matmul(self.a, v)[:, 0])

    # ---- access ----

    def entry(self, i: int, j: int) -> int:
        return int(self.a[i, j])

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.a[i])

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.a[:, j])

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.a]

    def flatten(self) -> tuple[int, ...]:
        """Row-major flattening."""
        return tuple(int(x) for x in self.a.reshape(-1))

    # ---- predicates ----

    def is_zero(self) -> bool:
        return not self.a.any()

    def is_identity(self) -> bool:
        return self.rows == self.cols and bool(np.array_equal(self.a, np.eye(self.rows, dtype=np.int16)))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self):
        return hash((self.field.key(), self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.tolist()})"

    # ---- reduction ----

    def rank(self) -> int:
        _, piv = _rref(self.field, self.a)
        return len(piv)


def _rref(field: FiniteField, arr: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a copy of arr, plus pivot columns."""
    M = arr.astype(np.int16, copy=True)
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hits = np.nonzero(M[r:, c])[0]
        if len(hits) == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        pv = int(M[r, c])
        if pv != 1:
            M[r] = field.ax_scale(M[r], field.inv(pv))
        factors = M[:, c].copy()
        factors[r] = 0
        if factors.any():
            M = field.ax_sub(M, field.ax_mul(factors[:, None], M[r][None, :]))
        pivots.append(c)
        r += 1
    return M, pivots


class Subspace:
    """A subspace of F^n held as its unique reduced-echelon row basis."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field: FiniteField, ambient_dim: int, basis: Matrix):
        if basis.cols != ambient_dim:
            raise ValueError("basis width != ambient dimension")
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis

    @staticmethod
    def from_rows(field: FiniteField, ambient_dim: int, rows) -> "Subspace":
        if isinstance(rows, Matrix):
            arr = rows.a
        else:
            rows = list(rows)
            arr = (
                np.array(rows, dtype=np.int16)
                if rows
                else np.zeros((0, ambient_dim), dtype=np.int16)
            )
        if arr.shape[0] == 0:
            return Subspace(field, ambient_dim, Matrix.zeros(field, 0, ambient_dim))
        R, piv = _rref(field, arr)
        return Subspace(field, ambient_dim, Matrix(field, R[: len(piv)], copy=True))

    @staticmethod
    def full(field: FiniteField, n: int) -> "Subspace":
        return Subspace(field, n, Matrix.identity(field, n))

    @staticmethod
    def zero(field: FiniteField, n: int) -> "Subspace":
        return Subspace(field, n, Matrix.zeros(field, 0, n))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Remainder of vec after eliminating against the echelon basis."""
        f = self.field
        v = np.asarray(vec, dtype=np.int16).copy()
        if v.shape != (self.ambient_dim,):
            raise ValueError("vector length mismatch")
        B = self.basis.a
        for i in range(B.shape[0]):
            c = int(np.nonzero(B[i])[0][0])
            if v[c]:
                v = f.ax_sub(v, f.ax_scale(B[i], int(v[c])))
        return tuple(int(x) for x in v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(other.basis.row(i)) for i in range(other.dim))

    def sum_with(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient mismatch")
        stacked = np.vstack([self.basis.a, other.basis.a])
        return Subspace.from_rows(self.field, self.ambient_dim, Matrix(self.field, stacked, copy=True))

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "basis": self.basis.tolist(),
            "field": self.field.descriptor(),
        }

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field.key(), self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


@dataclass(frozen=True)
class EchelonForm:
    rref: Matrix
    pivots: tuple[int, ...]
    rank: int
    kernel: Subspace
    image: Subspace


def row_reduce(M: Matrix) -> EchelonForm:
    """RREF plus rank, right kernel and column space of M."""
    f = M.field
    R, piv = _rref(f, M.a)
    rank = len(piv)
    # kernel: one vector per free column, then re-echelon for canonical form
    free = [c for c in range(M.cols) if c not in piv]
    krows = np.zeros((len(free), M.cols), dtype=np.int16)
    for t, c in enumerate(free):
        krows[t, c] = 1
        for r_i, pc in enumerate(piv):
            krows[t, pc] = f.neg(int(R[r_i, c]))
    kernel = Subspace.from_rows(f, M.cols, Matrix(f, krows, copy=True))
    image = Subspace.from_rows(f, M.rows, M.transpose())
    return EchelonForm(Matrix(f, R, copy=True), tuple(piv), rank, kernel, image)


def solve(A: Matrix, B: Matrix) -> Matrix | None:
    """The canonical X with A @ X = B (free variables zero), or None."""
    if A.field != B.field:
        raise ValueError("field mismatch")
    if A.rows != B.rows:
        raise ValueError("row count mismatch")
    f = A.field
    aug = np.hstack([A.a, B.a])
    R, piv = _rref(f, aug)
    apiv = [c for c in piv if c < A.cols]
    if len(apiv) != len(piv):
        return None  # a pivot landed in the augmented block: inconsistent
    X = np.zeros((A.cols, B.cols), dtype=np.int16)
    for r_i, c in enumerate(apiv):
        X[c] = R[r_i, A.cols:]
    return Matrix(f, X, copy=True)


def hstack(mats: Sequence[Matrix]) -> Matrix:
    f = mats[0].field
    return Matrix(f, np.hstack([m.a for m in mats]), copy=True)


def vstack(mats: Sequence[Matrix]) -> Matrix:
    f = mats[0].field
    return Matrix(f, np.vstack([m.a for m in mats]), copy=True)


def block_diag(field: FiniteField, mats: Sequence[Matrix]) -> Matrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = np.zeros((rows, cols), dtype=np.int16)
    r = c = 0
    for m in mats:
        out[r : r + m.rows, c : c + m.cols] = m.a
        r += m.rows
        c += m.cols
    return Matrix(field, out, copy=False)

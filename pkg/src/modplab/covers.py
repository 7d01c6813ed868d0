"""Covering maps onto a representation from sums of induced trivial
representations, plus the adjunction transports and central-character
functors that move morphisms between levels.

For a subgroup U fixing a vector v, the map sending a function f on the
coset space to sum_{cosets} f(r) r^{-1} v is equivariant and hits v at the
indicator of the trivial coset; its image is the span of the orbit of v.
Summing such blocks over qualifying subgroups of many vectors produces a
surjection onto the representation, when enough vectors qualify.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .fields import FiniteField
from .groups import SUBGROUP_ENUM_CAP, Subgroup, all_subgroups, coset_lookup
from .linalg import Matrix, Subspace, block_diag, hstack, row_reduce, vstack
from .reps import Character, Rep, RepMap, cyclic_span_dim, trivial_rep

__all__ = [
    "CoverageError",
    "CoverBlock",
    "CoverAssembly",
    "induced_trivial",
    "cover_map",
    "qualifying_subgroups",
    "assemble_cover",
    "fixed_cover_subspace",
    "frobenius_transport",
    "character_eigenspace",
    "extend_by_central_character",
]

ENUM_VECTOR_LIMIT = 256


class CoverageError(RuntimeError):
    """Raised when the qualifying vectors fail to span the target."""

    def __init__(self, message: str, dropped=()):
        super().__init__(message)
        self.dropped = tuple(dropped)


_IND_CACHE: dict = {}


def induced_trivial(U: Subgroup, field: FiniteField) -> Rep:
    """ind of the one-dimensional trivial rep, cached per (subgroup, field)."""
    from .reps import induce

    key = (U.members, field.key())
    store = _IND_CACHE.setdefault(U.parent, {})
    if key not in store:
        store[key] = induce(U, trivial_rep(U.as_group(), field))
    return store[key]


def _is_fixed(V: Rep, U: Subgroup, v: tuple) -> bool:
    return all(V.act(u, v) == v for u in U.generators())


def cover_map(U: Subgroup, V: Rep, v, ind: Rep | None = None) -> RepMap:
    """The equivariant map from induced_trivial(U) sending the indicator of
    the trivial coset to v; column i is the action of the i-th coset
    representative's inverse on v."""
    G = U.parent
    if V.group != G:
        raise ValueError("subgroup and representation have different groups")
    vec = tuple(int(x) for x in v)
    if len(vec) != V.dim:
        raise ValueError("vector length differs from the representation dimension")
    if not _is_fixed(V, U, vec):
        raise ValueError("vector is not fixed by the subgroup")
    if ind is None:
        ind = induced_trivial(U, V.field)
    reps, _ = coset_lookup(G, U)
    cols = np.zeros((V.dim, len(reps)), dtype=np.int16)
    for i, r in enumerate(reps):
        cols[:, i] = V.act(G.inv(r), vec)
    return RepMap(ind, V, Matrix(V.field, cols, copy=False), validate=True)


def qualifying_subgroups(
    V: Rep,
    v,
    C: Subgroup | None = None,
    cap: int = SUBGROUP_ENUM_CAP,
) -> list[Subgroup]:
    """Subgroups U fixing v whose coset space is strictly larger than the
    orbit span of v; with a central C, the coset space of U joined with C.

    The zero vector is rejected: every subgroup would qualify vacuously.
    """
    G = V.group
    vec = tuple(int(x) for x in v)
    if all(x == 0 for x in vec):
        raise ValueError("zero vector is excluded")
    if C is not None:
        if C.parent != G or not C.is_central():
            raise ValueError("C must be a central subgroup of the acting group")
        if not _is_fixed(V, C, vec):
            raise ValueError("central subgroup must act trivially on the vector")
    d = cyclic_span_dim(V, vec)
    out = []
    for U in all_subgroups(G, cap):
        if not _is_fixed(V, U, vec):
            continue
        J = U.join(C) if C is not None else U
        if G.order // J.order > d:
            out.append(U)
    return out


@dataclass(frozen=True)
class CoverBlock:
    vector: tuple
    subgroup: Subgroup  # the qualifying U
    induced_from: Subgroup  # U, or U joined with the central subgroup
    offset: int
    size: int


@dataclass(frozen=True)
class CoverAssembly:
    source: Rep
    onto: RepMap
    blocks: tuple[CoverBlock, ...]
    dropped: tuple[tuple, ...]  # vectors with no qualifying subgroup


def _default_vectors(V: Rep) -> list[tuple]:
    q, d = V.field.order, V.dim
    if q**d <= ENUM_VECTOR_LIMIT:
        return [
            vec
            for vec in itertools.product(range(q), repeat=d)
            if any(x != 0 for x in vec)
        ]
    # orbit of the standard basis: spans, stays group-stable, and avoids
    # enumerating all q^d vectors
    seen = set()
    basis = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    for e in basis:
        for g in range(V.group.order):
            seen.add(V.act(g, e))
    return sorted(seen)


def assemble_cover(
    V: Rep,
    C: Subgroup | None = None,
    vectors=None,
    cap: int = SUBGROUP_ENUM_CAP,
) -> CoverAssembly:
    """Build the direct sum of induced trivial blocks over qualifying
    (vector, subgroup) pairs together with the combined map onto V.

    Raises CoverageError when the vectors admitting at least one qualifying
    subgroup do not span V; vectors with an empty qualifying set are
    recorded as dropped, never silently ignored.
    """
    G, field = V.group, V.field
    if C is not None:
        if C.parent != G or not C.is_central():
            raise ValueError("C must be a central subgroup of the acting group")
        for z in C.generators():
            if not V.mat(z).is_identity():
                raise ValueError("central subgroup must act trivially on V")
    if V.dim == 0:
        zero = Rep(G, field, [Matrix.zeros(field, 0, 0)] * G.order, validate=False)
        onto = RepMap(zero, V, Matrix.zeros(field, 0, 0), validate=False)
        return CoverAssembly(zero, onto, (), ())
    if vectors is None:
        chosen = _default_vectors(V)
    else:
        chosen = [tuple(int(x) for x in v) for v in vectors]
        if Subspace.from_rows(field, V.dim, chosen).dim != V.dim:
            raise ValueError("chosen vectors must span the representation")
    blocks: list[CoverBlock] = []
    block_reps: list[Rep] = []
    block_cols: list[Matrix] = []
    dropped: list[tuple] = []
    covered: list[tuple] = []
    offset = 0
    for vec in chosen:
        omega = qualifying_subgroups(V, vec, C, cap)
        if not omega:
            dropped.append(vec)
            continue
        covered.append(vec)
        for U in omega:
            J = U.join(C) if C is not None else U
            ind = induced_trivial(J, field)
            phi = cover_map(J, V, vec, ind)
            blocks.append(CoverBlock(vec, U, J, offset, ind.dim))
            block_reps.append(ind)
            block_cols.append(phi.matrix)
            offset += ind.dim
    if Subspace.from_rows(field, V.dim, covered).dim != V.dim:
        raise CoverageError(
            "vectors with a qualifying subgroup do not span the target "
            f"({len(dropped)} of {len(chosen)} candidate vectors dropped)",
            dropped,
        )
    mats = [
        block_diag(field, [B.mat(g) for B in block_reps]) for g in range(G.order)
    ]
    S = Rep(G, field, mats, validate=False)  # each block is a verified rep
    # equivariance holds blockwise: every cover_map above was validated
    onto = RepMap(S, V, hstack(block_cols), validate=False)
    if onto.rank() != V.dim:
        raise CoverageError("assembled map is not surjective", dropped)
    return CoverAssembly(S, onto, tuple(blocks), tuple(dropped))


def fixed_cover_subspace(asm: CoverAssembly) -> Subspace:
    """The full-group fixed points of the assembled source, one constant
    function per block."""
    S = asm.source
    rows = []
    for blk in asm.blocks:
        row = [0] * S.dim
        for i in range(blk.offset, blk.offset + blk.size):
            row[i] = 1
        rows.append(row)
    return Subspace.from_rows(S.field, S.dim, rows)


# ---------------------------------------------------------------------------
# adjunction transports


def frobenius_transport(
    U: Subgroup,
    W: Rep,
    V: Rep,
    flavor: str,
    f: RepMap,
    ind: Rep | None = None,
) -> RepMap:
    """Move a morphism across the induction/restriction adjunction.

    flavor "lower": between maps W -> V|_U and induced(W) -> V.
    flavor "upper": between maps V|_U -> W and V -> induced(W).
    The direction is read off from which side f lives on; transporting
    twice returns the original map.
    """
    G = U.parent
    if V.group != G or W.group != U.as_group():
        raise ValueError("W must be a rep of the subgroup, V of the parent group")
    if flavor not in ("lower", "upper"):
        raise ValueError("flavor must be 'lower' or 'upper'")
    from .reps import induce

    if ind is None:
        key = (U.members, W.field.key(), W.matrices)
        store = _IND_CACHE.setdefault(G, {})
        if key not in store:
            store[key] = induce(U, W)
        ind = store[key]
    reps, pos = coset_lookup(G, U)
    dW = W.dim
    i0 = pos[G.identity]
    r0 = reps[i0]  # representative of the coset U itself, a member of U
    down = _restr(V, U)
    if flavor == "lower":
        if f.source == ind and f.target == V:
            sub = Matrix(V.field, f.matrix.a[:, i0 * dW : (i0 + 1) * dW])
            return RepMap(W, down, sub @ W.mat(U.local(r0)), validate=True)
        if f.source == W and f.target == down:
            mat = hstack([V.mat(G.inv(r)) @ f.matrix for r in reps])
            return RepMap(ind, V, mat, validate=True)
        raise ValueError("map matches neither side of the lower adjunction")
    if f.source == V and f.target == ind:
        sub = Matrix(V.field, f.matrix.a[i0 * dW : (i0 + 1) * dW, :])
        return RepMap(down, W, W.mat(U.local(G.inv(r0))) @ sub, validate=True)
    if f.source == down and f.target == W:
        mat = vstack([f.matrix @ V.mat(r) for r in reps])
        return RepMap(V, ind, mat, validate=True)
    raise ValueError("map matches neither side of the upper adjunction")


def _restr(V: Rep, U: Subgroup) -> Rep:
    from .reps import restrict

    return restrict(V, U)


# ---------------------------------------------------------------------------
# central characters


def character_eigenspace(
    V: Rep, C: Subgroup, chi: Character
) -> tuple[Subspace, Matrix | None]:
    """Vectors on which C acts through chi, plus the averaging projector.

    The projector averages chi(z^{-1}) times the action of z over the
    part of C of order prime to the characteristic.  It is returned only
    when the p-power-order part of C acts trivially on V; then its image
    is exactly the eigenspace and it is idempotent.
    """
    G = V.group
    if chi.domain != C or C.parent != G or chi.field != V.field:
        raise ValueError("character does not match the subgroup and field")
    field = V.field
    gens = C.generators()
    if not gens or V.dim == 0:
        space = Subspace.full(field, V.dim)
    else:
        I = Matrix.identity(field, V.dim)
        stacked = vstack([V.mat(z) - I.scale(chi.value(z)) for z in gens])
        space = row_reduce(stacked).kernel
    prime_to_p = []
    p_part_trivial = True
    for z in C.members:
        o = G.element_order(z)
        if o % field.p:
            prime_to_p.append(z)
            continue
        reduced = o
        while reduced % field.p == 0:
            reduced //= field.p
        # only pure p-power-order elements decide availability; mixed orders
        # factor through them inside the abelian C
        if reduced == 1 and not V.mat(z).is_identity():
            p_part_trivial = False
    if not p_part_trivial:
        return space, None
    coeff = field.inv(len(prime_to_p) % field.p)
    acc = Matrix.zeros(field, V.dim, V.dim)
    for z in prime_to_p:
        acc = acc + V.mat(z).scale(chi.value(G.inv(z)))
    P = acc.scale(coeff)
    if P @ P != P:
        raise AssertionError("averaging operator failed to be idempotent")
    return space, P


def extend_by_central_character(
    V: Rep,
    K: Subgroup,
    C: Subgroup,
    chi: Character,
    KC: Subgroup | None = None,
) -> Rep:
    """Extend a representation of K to K joined with a central C, letting C
    act through chi.  Requires chi to agree with the existing action on the
    overlap; restriction back to K returns the original action.
    """
    G = K.parent
    if C.parent != G or not C.is_central():
        raise ValueError("C must be a central subgroup of the ambient group")
    if chi.domain != C or chi.field != V.field:
        raise ValueError("character must live on C over the same field")
    if V.group != K.as_group():
        raise ValueError("V must be a representation of K")
    overlap = C.intersect(K)
    I = Matrix.identity(V.field, V.dim)
    for z in overlap.members:
        if V.mat(K.local(z)) != I.scale(chi.value(z)):
            raise ValueError("character disagrees with the action on the overlap")
    join = K.join(C)
    if KC is None:
        KC = join
    elif KC != join:
        raise ValueError("KC must be the join of K and C")
    mats: list[Matrix | None] = [None] * KC.order
    cm = set(C.members)
    for x in KC.members:
        for c in C.members:
            k = G.mul(x, G.inv(c))
            if K.contains(k):
                mats[KC.local(x)] = V.mat(K.local(k)).scale(chi.value(c))
                break
        else:
            raise ValueError("element of the join has no K*C factorization")
    return Rep(KC.as_group(), V.field, mats, validate=True)  # type: ignore[arg-type]

"""SL2 over Z/p^N as an explicit FinGroup, with its congruence filtration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import is_prime
from .groups import FinGroup, Subgroup

SL2_CAP = 5000


def sl2_order(p: int, N: int) -> int:
    """p^(3N) * (1 - p^-2)."""
    return p ** (3 * N - 2) * (p * p - 1)


@dataclass(frozen=True)
class Sl2Quotient:
    p: int
    N: int
    group: FinGroup
    tuples: tuple[tuple[int, int, int, int], ...]
    congruence: dict[int, Subgroup]  # m -> K_m = {M = 1 mod p^m}, 1 <= m < N


def sl2_quotient_group(p: int, N: int, cap: int = SL2_CAP) -> Sl2Quotient:
    """SL2(Z/p^N) with elements sorted by their (a, b, c, d) residue tuple."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if N < 1:
        raise ValueError("N must be >= 1")
    n = sl2_order(p, N)
    if n > cap:
        raise ValueError(f"group order {n} exceeds cap {cap}")
    q = p**N
    grid = np.indices((q, q, q, q)).reshape(4, -1)
    a, b, c, d = grid
    mask = (a * d - b * c) % q == 1
    elems = grid[:, mask].T  # sorted lexicographically by construction
    assert elems.shape[0] == n
    a, b, c, d = elems.T

    code = ((a.astype(np.int64) * q + b) * q + c) * q + d
    lookup = np.full(q**4, -1, dtype=np.int32)
    lookup[code] = np.arange(n)

    T = np.empty((n, n), dtype=np.int16)
    for i in range(n):
        ai, bi, ci, di = (int(x) for x in elems[i])
        ra = (ai * a + bi * c) % q
        rb = (ai * b + bi * d) % q
        rc = (ci * a + di * c) % q
        rd = (ci * b + di * d) % q
        T[i] = lookup[((ra.astype(np.int64) * q + rb) * q + rc) * q + rd]

    labels = [f"{ai},{bi};{ci},{di}" for ai, bi, ci, di in elems]
    G = FinGroup(T, labels=labels, validate=False)

    congruence: dict[int, Subgroup] = {}
    for m in range(1, N):
        s = p**m
        members = [
            i
            for i, (ai, bi, ci, di) in enumerate(elems)
            if ai % s == 1 and di % s == 1 and bi % s == 0 and ci % s == 0
        ]
        congruence[m] = G._subgroup(members)

    return Sl2Quotient(p, N, G, tuple(tuple(int(x) for x in e) for e in elems), congruence)

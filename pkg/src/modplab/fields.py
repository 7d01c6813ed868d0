"""Exact arithmetic in finite fields F_{p^k}.

A field element is a plain int in ``[0, p**k)``: the integer ``a`` encodes
the residue polynomial ``sum(d_i * x**i)`` where ``d_0, d_1, ...`` are the
base-p digits of ``a``.  Prime fields compute with modular arithmetic
directly; extension fields go through small precomputed operation tables.
Everything is exact, no floats anywhere.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

# largest extension-field order we materialize q x q tables for
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _poly_rem(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a mod b with b monic."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - db
            for i in range(db + 1):
                a[shift + i] = (a[shift + i] - lead * b[i]) % p
        a.pop()
    return _poly_trim(tuple(x % p for x in a))


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(modulus) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for m in range(p**d):
            digits = []
            mm = m
            for _ in range(d):
                digits.append(mm % p)
                mm //= p
            cand = tuple(digits) + (1,)
            if not _poly_rem(modulus, cand, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over Z/p.

    Candidates are scanned in increasing order of their base-p digit
    encoding (constant coefficient least significant).
    """
    if k == 1:
        return (0, 1)
    for m in range(p**k):
        digits = []
        mm = m
        for _ in range(k):
            digits.append(mm % p)
            mm //= p
        cand = tuple(digits) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible of degree {k} over F_{p}")  # unreachable


class FiniteField:
    """The field with p**k elements under a fixed monic irreducible modulus."""

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if k < 1:
            raise ValueError("k must be >= 1")
        self.p = p
        self.k = k
        self.order = p**k
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if k > 1 and not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        if k > 1:
            if self.order > TABLE_LIMIT:
                raise ValueError(f"extension order {self.order} exceeds table limit {TABLE_LIMIT}")
            self._build_tables()

    # ---- encoding -------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Residue list (c_0, ..., c_{k-1}) of the element a."""
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) != self.k:
            raise ValueError(f"expected {self.k} residues")
        a = 0
        for c in reversed(cs):
            if not 0 <= c < self.p:
                raise ValueError(f"residue {c} out of range [0, {self.p})")
            a = a * self.p + c
        return a

    def from_int(self, n: int) -> int:
        """Image of the rational integer n under Z -> F."""
        return n % self.p

    def elements(self) -> range:
        return range(self.order)

    def descriptor(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    # ---- tables ---------------------------------------------------------

    def _build_tables(self):
        p, k, q = self.p, self.k, self.order
        codes = np.arange(q)
        digits = np.empty((q, k), dtype=np.int64)
        rest = codes.copy()
        for i in range(k):
            digits[:, i] = rest % p
            rest //= p
        pw = p ** np.arange(k)

        self.ADD = ((digits[:, None, :] + digits[None, :, :]) % p @ pw).astype(np.int16)
        self.NEG = (((-digits) % p) @ pw).astype(np.int16)
        self.SUB = self.ADD[:, self.NEG]

        # reduction of x^t mod modulus for t < 2k-1
        red = np.zeros((2 * k - 1, k), dtype=np.int64)
        for t in range(2 * k - 1):
            r = _poly_rem((0,) * t + (1,), self.modulus, p)
            red[t, : len(r)] = r
        conv = np.zeros((k, k, 2 * k - 1), dtype=np.int64)
        for r in range(k):
            for s in range(k):
                conv[r, s, r + s] = 1
        prod = np.einsum("ar,bs,rst->abt", digits, digits, conv) % p
        self.MUL = ((prod @ red % p) @ pw).astype(np.int16)

        inv = np.zeros(q, dtype=np.int16)
        for a in range(1, q):
            hits = np.nonzero(self.MUL[a] == 1)[0]
            if len(hits) != 1:
                raise ValueError("modulus is not irreducible")  # defensive
            inv[a] = hits[0]
        self.INV = inv

    # ---- scalar operations ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return int(self.ADD[a, b])

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        return int(self.SUB[a, b])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return int(self.NEG[a])

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        return int(self.MUL[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return int(self.INV[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    # ---- vectorized kernels (arrays of element codes) ---------------------

    def ax_add(self, A, B):
        if self.p == 2:
            return np.bitwise_xor(A, B)  # codes are bit vectors in char 2
        if self.k == 1:
            return ((A.astype(np.int64) + B) % self.p).astype(np.int16)
        return self.ADD[A, B]

    def ax_sub(self, A, B):
        if self.p == 2:
            return np.bitwise_xor(A, B)
        if self.k == 1:
            return ((A.astype(np.int64) - B) % self.p).astype(np.int16)
        return self.SUB[A, B]

    def ax_neg(self, A):
        if self.p == 2:
            return A.copy()
        if self.k == 1:
            return ((-A.astype(np.int64)) % self.p).astype(np.int16)
        return self.NEG[A]

    def ax_mul(self, A, B):
        """Elementwise product, broadcasting like numpy."""
        if self.k == 1:
            return ((A.astype(np.int64) * B) % self.p).astype(np.int16)
        return self.MUL[A, B]

    def ax_scale(self, A, s: int):
        if s == 1:
            return A.copy()
        if self.k == 1:
            return ((A.astype(np.int64) * s) % self.p).astype(np.int16)
        return self.MUL[A, s]

    def ax_matmul(self, A, B):
        n, m = A.shape
        m2, r = B.shape
        assert m == m2
        if m == 0 or n == 0 or r == 0:
            return np.zeros((n, r), dtype=np.int16)
        if self.k == 1:
            return ((A.astype(np.int64) @ B.astype(np.int64)) % self.p).astype(np.int16)
        acc = np.zeros((n, r), dtype=np.int16)
        for t in range(m):
            acc = self.ADD[acc, self.MUL[A[:, t][:, None], B[t][None, :]]]
        return acc

    def ax_kron(self, A, B):
        r1, c1 = A.shape
        r2, c2 = B.shape
        if self.k == 1:
            T = (A.astype(np.int64)[:, :, None, None] * B[None, None, :, :]) % self.p
        else:
            T = self.MUL[A[:, :, None, None], B[None, None, :, :]]
        return T.transpose(0, 2, 1, 3).reshape(r1 * r2, c1 * c2).astype(np.int16)

    # ---- misc -------------------------------------------------------------

    def key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.k == 1:
            return f"F{self.p}"
        return f"F{self.order}(mod={list(self.modulus)})"

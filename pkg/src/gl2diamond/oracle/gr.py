"""The degree-f Galois ring of characteristic p^2 and its 2x2 matrices.

Elements are coefficient vectors of length f with entries mod p^2, for the
monic lift of the same defining polynomial as the residue field; reduction
mod p recovers the F_q encoding of gf.py.  The Teichmueller section is one
q-th power of any lift.  Matrices are arrays of shape (2, 2, f); the only
inverses ever needed are of matrices invertible mod p, obtained from the
adjugate and a Newton step for the determinant.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .gf import GF, get_gf


class GR:
    def __init__(self, gf: GF):
        self.gf = gf
        self.p, self.f = gf.p, gf.f
        self.p2 = gf.p ** 2
        self.q = gf.q

        # reduction rows of x^(f+k) mod the lifted monic polynomial, mod p^2
        f, p2 = self.f, self.p2
        top = [(-c) % p2 for c in gf.poly]
        red = []
        row = list(top)
        for _ in range(max(f - 1, 0)):
            red.append(list(row))
            carry = row[f - 1]
            row = [0] + row[: f - 1]
            row = [(row[j] + carry * top[j]) % p2 for j in range(f)]
        self._red = np.array(red, dtype=np.int64).reshape(max(f - 1, 0), f)

        # Teichmueller representatives for every residue-field element
        teich = np.zeros((self.q, f), dtype=np.int64)
        for e in range(self.q):
            teich[e] = self.pow(gf.dig[e].astype(np.int64), self.q)
        self.teich = teich

    # -- element arithmetic; elements are int64 arrays (..., f) mod p^2 --

    def zero(self):
        return np.zeros(self.f, dtype=np.int64)

    def one(self):
        v = self.zero()
        v[0] = 1
        return v

    def from_int(self, n: int):
        v = self.zero()
        v[0] = n % self.p2
        return v

    def add(self, a, b):
        return (a + b) % self.p2

    def sub(self, a, b):
        return (a - b) % self.p2

    def mul(self, a, b):
        f = self.f
        a = np.asarray(a)
        b = np.asarray(b)
        conv = np.zeros(2 * f - 1, dtype=np.int64)
        for i in range(f):
            conv[i : i + f] += a[i] * b % self.p2
            conv %= self.p2
        out = conv[:f].copy()
        for k in range(f, 2 * f - 1):
            out = (out + conv[k] * self._red[k - f]) % self.p2
        return out

    def pow(self, a, e: int):
        result = self.one()
        base = np.asarray(a) % self.p2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def reduce_p(self, a) -> int:
        """Image in the residue field, in the gf.py integer encoding."""
        return int((np.asarray(a) % self.p) @ self.gf.pows)

    def divide_p(self, a):
        """a/p for a in p*R, as the canonical lift with coefficients below p."""
        a = np.asarray(a)
        if (a % self.p).any():
            raise ValueError("element is not divisible by p")
        return (a // self.p) % self.p

    def unit_inverse(self, a):
        """Inverse of a unit (nonzero mod p), by lifting the residue inverse."""
        r = self.reduce_p(a)
        if r == 0:
            raise ZeroDivisionError("not a unit")
        y = self.gf.dig[self.gf.inv_t[r]].astype(np.int64)
        # one Newton step: y <- y (2 - a y) mod p^2
        t = self.sub(self.from_int(2), self.mul(a, y))
        return self.mul(y, t)

    def teichmuller(self, e: int):
        return self.teich[e].copy()

    # -- 2x2 matrices: arrays of shape (2, 2, f) --

    def mat(self, a, b, c, d):
        return np.stack([np.stack([a, b]), np.stack([c, d])])

    def mat_from_ints(self, a, b, c, d):
        return self.mat(self.from_int(a), self.from_int(b), self.from_int(c), self.from_int(d))

    def mat_eye(self):
        return self.mat(self.one(), self.zero(), self.zero(), self.one())

    def mat_mul(self, A, B):
        out = np.zeros((2, 2, self.f), dtype=np.int64)
        for i in range(2):
            for j in range(2):
                out[i, j] = self.add(self.mul(A[i, 0], B[0, j]), self.mul(A[i, 1], B[1, j]))
        return out

    def mat_det(self, A):
        return self.sub(self.mul(A[0, 0], A[1, 1]), self.mul(A[0, 1], A[1, 0]))

    def mat_inv(self, A):
        dinv = self.unit_inverse(self.mat_det(A))
        adj = self.mat(A[1, 1], (-A[0, 1]) % self.p2, (-A[1, 0]) % self.p2, A[0, 0])
        return np.stack([
            np.stack([self.mul(dinv, adj[0, 0]), self.mul(dinv, adj[0, 1])]),
            np.stack([self.mul(dinv, adj[1, 0]), self.mul(dinv, adj[1, 1])]),
        ])

    def mat_scalar_p(self):
        """The matrix (0, 1; p, 0) normalizing the Iwahori subgroup."""
        return self.mat(self.zero(), self.one(), self.from_int(self.p), self.zero())

    def swap_conjugate(self, A):
        """(a, b; pc, d) -> (d, c; pb, a), conjugation by (0, 1; p, 0)."""
        c = self.divide_p(A[1, 0])
        pb = (self.p * A[0, 1]) % self.p2
        return self.mat(A[1, 1], c, pb, A[0, 0])

    def mat_is_unit(self, A) -> bool:
        return self.reduce_p(self.mat_det(A)) != 0

    def mat_in_I(self, A) -> bool:
        return self.mat_is_unit(A) and not (A[1, 0] % self.p).any()

    def mat_key(self, A) -> bytes:
        return np.ascontiguousarray(A % self.p2).tobytes()


@lru_cache(maxsize=None)
def get_gr(p: int, f: int) -> GR:
    return GR(get_gf(p, f))

"""Exact arithmetic and dense linear algebra over F_q = F_p[x]/(m(x)).

Field elements are integers in [0, q) whose base-p digits are the polynomial
coefficients (constant term first).  All arithmetic goes through lookup
tables, so numpy gathers give exact vectorized operations; sums of products
are accumulated digitwise mod p.  The defining polynomial is the monic
irreducible of degree f whose encoded coefficient vector is smallest, which
makes every run reproducible.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    dm = len(m) - 1
    for k in range(len(out) - 1, dm - 1, -1):
        c = out[k]
        if c:
            for j in range(dm):
                out[k - dm + j] = (out[k - dm + j] - c * m[j]) % p
            out[k] = 0
    return _trim(out)


def _poly_powmod(a, e, m, p):
    result = [1]
    base = _trim(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_mod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
        a = _trim(a)
        if not a:
            break
    return a


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(coeffs, f, p):
    """coeffs: the f low coefficients of the monic polynomial x^f + sum c_i x^i."""
    if f == 1:
        return True
    m = list(coeffs) + [1]
    x = [0, 1]
    if _poly_powmod(x, p ** f, m, p) != x:
        return False
    for ell in _prime_divisors(f):
        h = _poly_powmod(x, p ** (f // ell), m, p)
        if len(_poly_gcd(_poly_sub(h, x, p), m, p)) > 1:
            return False
    return True


def _defining_poly(p, f):
    for e in range(p ** f):
        coeffs = [(e // p ** i) % p for i in range(f)]
        if _is_irreducible(coeffs, f, p):
            return coeffs
    raise RuntimeError("no irreducible polynomial found")


class GF:
    """Tables for F_q with elements encoded as integers in [0, q)."""

    def __init__(self, p: int, f: int):
        self.p, self.f = p, f
        self.q = q = p ** f
        self.poly = _defining_poly(p, f)

        self.pows = p ** np.arange(f, dtype=np.int64)
        self.dig = np.zeros((q, f), dtype=np.int64)
        for i in range(f):
            self.dig[:, i] = (np.arange(q) // p ** i) % p

        d = self.dig
        self.add_t = self.encode((d[:, None, :] + d[None, :, :]) % p)
        self.neg_t = self.encode((-d) % p)

        # reduction of x^(f+k), k = 0..f-2, in the monomial basis
        top = [(-c) % p for c in self.poly]
        red = []
        row = list(top)
        for _ in range(max(f - 1, 0)):
            red.append(list(row))
            carry = row[f - 1]
            row = [0] + row[: f - 1]
            row = [(row[j] + carry * top[j]) % p for j in range(f)]
        self._red = np.array(red, dtype=np.int64).reshape(max(f - 1, 0), f)

        conv = np.zeros((q, q, 2 * f - 1), dtype=np.int64)
        for i in range(f):
            for j in range(f):
                conv[:, :, i + j] += d[:, i, None] * d[None, :, j]
        low = conv[:, :, :f] % p
        for k in range(f, 2 * f - 1):
            low = (low + conv[:, :, k, None] * self._red[k - f][None, None, :]) % p
        self.mul_t = self.encode(low)

        # multiplicative structure: discrete logs w.r.t. the smallest generator
        self.gen = self._find_generator()
        self.log_t = np.full(q, -1, dtype=np.int64)
        self.exp_t = np.zeros(q - 1, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            self.exp_t[k] = x
            self.log_t[x] = k
            x = int(self.mul_t[x, self.gen])
        if x != 1:
            raise AssertionError("generator order is not q-1")
        self.inv_t = np.zeros(q, dtype=np.int64)
        nz = np.arange(1, q)
        self.inv_t[nz] = self.exp_t[(-self.log_t[nz]) % (q - 1)]
        self.frob_t = self.pow_vec(np.arange(q), p)

    def encode(self, digarr) -> np.ndarray:
        return (np.asarray(digarr) % self.p) @ self.pows

    def _find_generator(self) -> int:
        target = self.q - 1
        if target == 1:
            return 1
        divisors = _prime_divisors(target)
        for g in range(2, self.q):
            if all(self._pow_int(g, target // ell) != 1 for ell in divisors):
                return g
        raise AssertionError("no multiplicative generator found")

    def _pow_int(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = int(self.mul_t[result, base])
            base = int(self.mul_t[base, base])
            e >>= 1
        return result

    def pow_vec(self, a, e: int):
        """a^e elementwise, with 0^0 = 1; negative e requires no zeros."""
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        zero = a == 0
        if zero.any() and e < 0:
            raise ZeroDivisionError("negative power of zero")
        out = np.zeros_like(a)
        nz = ~zero
        out[nz] = self.exp_t[(self.log_t[a[nz]] * e) % (self.q - 1)]
        return out

    def pow_int(self, a: int, e: int) -> int:
        return int(self.pow_vec(np.asarray([a]), e)[0])

    # -- vectorized operations on arrays of encoded elements --

    def add(self, a, b):
        return self.add_t[a, b]

    def sub(self, a, b):
        return self.add_t[a, self.neg_t[b]]

    def mul(self, a, b):
        return self.mul_t[a, b]

    def sum_axis(self, arr, axis):
        s = self.dig[arr].sum(axis=axis) % self.p
        return s @ self.pows

    def matmul(self, A, B, chunk: int = 96):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        m, k = A.shape
        k2, n = B.shape
        if k != k2:
            raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
        if 0 in (m, k, n):
            return np.zeros((m, n), dtype=np.int64)
        out = np.empty((m, n), dtype=np.int64)
        for lo in range(0, m, chunk):
            hi = min(lo + chunk, m)
            P = self.mul_t[A[lo:hi, :, None], B[None, :, :]]
            out[lo:hi] = self.sum_axis(P, axis=1)
        return out

    def matvec(self, A, v):
        return self.matmul(A, np.asarray(v, dtype=np.int64).reshape(-1, 1)).ravel()

    def scale(self, c, arr):
        return self.mul_t[c, arr]

    def eye(self, n):
        return np.eye(n, dtype=np.int64)


@lru_cache(maxsize=None)
def get_gf(p: int, f: int) -> GF:
    return GF(p, f)


class Subspace:
    """Row space kept in reduced echelon form, supporting cheap membership."""

    def __init__(self, gf: GF, rows=None, ambient: int | None = None):
        self.gf = gf
        if rows is not None:
            rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
            self.n = rows.shape[1]
        elif ambient is not None:
            self.n = ambient
        else:
            raise ValueError("need rows or ambient dimension")
        self.basis = np.zeros((0, self.n), dtype=np.int64)
        self.pivots: list = []
        if rows is not None:
            for row in rows:
                self.insert(row)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def reduce(self, v):
        """Residue of v modulo the row space."""
        gf = self.gf
        v = np.asarray(v, dtype=np.int64).copy()
        for i, c in enumerate(self.pivots):
            coeff = v[c]
            if coeff:
                v = gf.sub(v, gf.scale(coeff, self.basis[i]))
        return v

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def contains_all(self, rows) -> bool:
        return all(self.contains(r) for r in np.atleast_2d(rows))

    def insert(self, v) -> bool:
        """Add a vector; returns True when the dimension grew."""
        gf = self.gf
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = gf.scale(int(gf.inv_t[v[c]]), v)
        if self.dim:
            coeffs = self.basis[:, c].copy()
            hot = np.nonzero(coeffs)[0]
            if hot.size:
                upd = gf.mul_t[coeffs[hot][:, None], v[None, :]]
                self.basis[hot] = gf.sub(self.basis[hot], upd)
        pos = int(np.searchsorted(np.asarray(self.pivots, dtype=np.int64), c))
        self.basis = np.insert(self.basis, pos, v, axis=0)
        self.pivots.insert(pos, c)
        return True

    def coordinates(self, v):
        """Coefficients of v in the echelon basis; raises if v is outside."""
        if not self.contains(v):
            raise ValueError("vector outside subspace")
        if not self.dim:
            return np.zeros(0, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        return v[np.asarray(self.pivots, dtype=np.int64)]

    def express(self, rows):
        rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
        if rows.shape[0] == 0:
            return np.zeros((0, self.dim), dtype=np.int64)
        return np.stack([self.coordinates(r) for r in rows])

    def copy(self) -> "Subspace":
        out = Subspace(self.gf, ambient=self.n)
        out.basis = self.basis.copy()
        out.pivots = list(self.pivots)
        return out

    def complement_coords(self) -> list:
        taken = set(self.pivots)
        return [c for c in range(self.n) if c not in taken]


def nullspace(gf: GF, A) -> np.ndarray:
    """Basis (rows) of the right kernel of A."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    _, n = A.shape
    sub = Subspace(gf, A)
    R, pivots = sub.basis, list(sub.pivots)
    free = [c for c in range(n) if c not in pivots]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, c in enumerate(free):
        out[k, c] = 1
        for i, pc in enumerate(pivots):
            out[k, pc] = gf.neg_t[R[i, c]]
    return out


def spin(gf: GF, mats, seeds) -> Subspace:
    """Closure of the span of the seed rows under left action by the matrices."""
    seeds = np.atleast_2d(np.asarray(seeds, dtype=np.int64))
    sub = Subspace(gf, seeds)
    frontier = list(sub.basis.copy())
    while frontier:
        vecs = np.stack(frontier)
        frontier = []
        for M in mats:
            images = gf.matmul(vecs, np.asarray(M, dtype=np.int64).T)
            for img in images:
                if sub.insert(img):
                    frontier.append(img)
    return sub

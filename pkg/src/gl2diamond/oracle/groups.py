"""Concrete GL2 subgroups over the Galois ring: generators, cosets, characters.

The maximal compact K is GL2 of the ring; everything in scope is trivial on
the second congruence subgroup, so K is used through matrices mod p^2.  The
Iwahori subgroup I consists of the matrices that are upper triangular mod p.
Generator lists are elementary matrices over a Teichmueller lift of a
residue-field basis together with p times that lift, plus diagonal units;
for a local ring these generate the corresponding subgroups mod p^2.  The
q+1 cosets of I in K are represented by ([lambda], 1; 1, 0) for lambda in
F_q together with the identity, in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..core import ICharacter, Params
from .gf import get_gf
from .gr import get_gr


@dataclass(frozen=True)
class GroupContext:
    params: Params

    @property
    def gf(self):
        return get_gf(self.params.p, self.params.f)

    @property
    def gr(self):
        return get_gr(self.params.p, self.params.f)

    @lru_cache(maxsize=None)
    def _basis_teich(self):
        """Teichmueller lifts of the monomial basis x^i of the residue field."""
        p, f = self.params.p, self.params.f
        return [self.gr.teichmuller(p ** i) for i in range(f)]

    def _elem(self, pos: str, val):
        gr = self.gr
        m = gr.mat_eye()
        i, j = (0, 1) if pos == "upper" else (1, 0)
        m[i, j] = np.asarray(val) % gr.p2
        return m

    def _diag(self, a, d):
        gr = self.gr
        m = gr.mat_eye()
        m[0, 0] = np.asarray(a) % gr.p2
        m[1, 1] = np.asarray(d) % gr.p2
        return m

    @lru_cache(maxsize=None)
    def pi(self):
        return self.gr.mat_scalar_p()

    @lru_cache(maxsize=None)
    def uplus_gens(self) -> tuple:
        p = self.params.p
        basis = self._basis_teich()
        out = [self._elem("upper", t) for t in basis]
        out += [self._elem("upper", (p * t) % self.gr.p2) for t in basis]
        return tuple(out)

    @lru_cache(maxsize=None)
    def uminus_gens(self) -> tuple:
        p = self.params.p
        return tuple(self._elem("lower", (p * t) % self.gr.p2) for t in self._basis_teich())

    @lru_cache(maxsize=None)
    def h_gens(self) -> tuple:
        g = self.gr.teichmuller(self.gf.gen)
        return (self._diag(g, self.gr.one()), self._diag(self.gr.one(), g))

    @lru_cache(maxsize=None)
    def _diag_unipotent_gens(self) -> tuple:
        p = self.params.p
        out = []
        for t in self._basis_teich():
            u = (self.gr.one() + p * t) % self.gr.p2
            out.append(self._diag(u, self.gr.one()))
            out.append(self._diag(self.gr.one(), u))
        return tuple(out)

    @lru_cache(maxsize=None)
    def i_gens(self) -> tuple:
        return self.uplus_gens() + self.uminus_gens() + self.h_gens() + self._diag_unipotent_gens()

    @lru_cache(maxsize=None)
    def i1_gens(self) -> tuple:
        return self.uplus_gens() + self.uminus_gens() + self._diag_unipotent_gens()

    @lru_cache(maxsize=None)
    def k_gens(self) -> tuple:
        p = self.params.p
        basis = self._basis_teich()
        lowers = [self._elem("lower", t) for t in basis]
        lowers += [self._elem("lower", (p * t) % self.gr.p2) for t in basis]
        return self.uplus_gens() + tuple(lowers) + self.h_gens() + self._diag_unipotent_gens()

    def gens(self, kind: str) -> tuple:
        return {
            "K": self.k_gens,
            "I": self.i_gens,
            "I1": self.i1_gens,
            "U+": self.uplus_gens,
            "U-": self.uminus_gens,
            "H": self.h_gens,
        }[kind]()

    # -- cosets of I in K --

    @lru_cache(maxsize=None)
    def coset_reps(self) -> tuple:
        """([lambda],1;1,0) for each encoded lambda, then the identity coset."""
        gr = self.gr
        reps = [
            gr.mat(gr.teichmuller(lam), gr.one(), gr.one(), gr.zero())
            for lam in range(self.gf.q)
        ]
        reps.append(gr.mat_eye())
        return tuple(reps)

    def coset_decompose(self, g) -> tuple:
        """g = rep * i with i in I; returns (rep index, i)."""
        gr = self.gr
        if not gr.mat_is_unit(g):
            raise ValueError("matrix is not invertible mod p")
        c_red = gr.reduce_p(g[1, 0])
        if c_red == 0:
            return self.gf.q, g.copy()
        lam = int(self.gf.mul_t[gr.reduce_p(g[0, 0]), self.gf.inv_t[c_red]])
        t = gr.teichmuller(lam)
        # ([lam],1;1,0)^-1 = (0,1;1,-[lam])
        i = gr.mat_mul(gr.mat(gr.zero(), gr.one(), gr.one(), (-t) % gr.p2), g)
        return lam, i

    # -- characters of I through the diagonal reduction --

    def char_value(self, chi: ICharacter, g) -> int:
        gf, gr = self.gf, self.gr
        a = gr.reduce_p(g[0, 0])
        d = gr.reduce_p(g[1, 1])
        return int(gf.mul_t[gf.pow_int(a, chi.a), gf.pow_int(d, chi.b)])

    def random_k_element(self, rng) -> np.ndarray:
        gr = self.gr
        while True:
            m = rng.integers(0, gr.p2, (2, 2, self.params.f))
            if gr.mat_is_unit(m):
                return m

    def random_i_element(self, rng) -> np.ndarray:
        gr = self.gr
        while True:
            m = rng.integers(0, gr.p2, (2, 2, self.params.f))
            m[1, 0] = (m[1, 0] * self.params.p) % gr.p2
            if gr.mat_is_unit(m):
                return m

    def random_element(self, kind: str, rng) -> np.ndarray:
        return self.random_i_element(rng) if kind == "I" else self.random_k_element(rng)


@lru_cache(maxsize=None)
def get_context(params: Params) -> GroupContext:
    return GroupContext(params)

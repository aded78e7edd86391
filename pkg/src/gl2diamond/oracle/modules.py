"""Explicit finite modules: weights, Iwahori extensions, induction, socles.

A module is a dimension plus an evaluator sending a 2x2 matrix over the
Galois ring to an exact matrix over F_q acting on column coordinates, with
a tag for the congruence subgroup known to act trivially.  Constructions:
symmetric-power weights of GL2(F_q), one-dimensional Iwahori characters,
the two-dimensional nonsplit Iwahori extensions, twisting by the
normalizer, and induction from I to K over the fixed coset representatives.

Socles are computed from first principles: any irreducible subobject is
generated by a pro-p-fixed eigenvector, and a weight embeds through such a
vector exactly when the images of a recorded spanning set of group words
satisfy the weight's structure constants.  Iterating over quotients gives
socle series, Jordan-Hoelder multisets and, through the contragredient,
cosocles.  Everything is exact; any mismatch raises.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

import numpy as np

from ..core import (
    DomainError,
    ICharacter,
    Params,
    Weight,
    chi_of_weight,
    weight_dim,
    weight_dual,
    weights_of_char,
)
from .gf import Subspace, nullspace
from .groups import GroupContext, get_context

LEVELS = ("K1", "K2", "I2")


class ExplicitModule:
    """dim + evaluator; generator action matrices are cached per subgroup kind."""

    def __init__(self, ctx: GroupContext, dim: int, evaluate, group: str, level: str, name: str = ""):
        if level not in LEVELS:
            raise DomainError(f"unknown level tag {level!r}")
        if group not in ("K", "I"):
            raise DomainError(f"unknown group tag {group!r}")
        self.ctx = ctx
        self.dim = dim
        self.evaluate = evaluate
        self.group = group
        self.level = level
        self.name = name
        self._gen_cache: dict = {}

    def gen_mats(self, kind: str) -> list:
        if kind not in self._gen_cache:
            self._gen_cache[kind] = [self.evaluate(g) for g in self.ctx.gens(kind)]
        return self._gen_cache[kind]

    @property
    def gf(self):
        return self.ctx.gf

    def __repr__(self):
        tag = self.name or "module"
        return f"<{tag}: dim {self.dim} over {self.group}, {self.level}-trivial>"


def _binom_table(p: int, n: int) -> np.ndarray:
    C = np.zeros((n + 1, n + 1), dtype=np.int64)
    C[:, 0] = 1
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            C[i, j] = (C[i - 1, j - 1] + C[i - 1, j]) % p
    return C


def gf_kron(gf, A, B):
    m1, n1 = A.shape
    m2, n2 = B.shape
    out = gf.mul_t[A[:, None, :, None], B[None, :, None, :]]
    return out.reshape(m1 * m2, n1 * n2)


def sym_power_matrix(gf, a, b, c, d, r):
    """Matrix of (a,b;c,d) on Sym^r, basis x^(r-k) y^k with x,y the standard frame."""
    if r == 0:
        return np.ones((1, 1), dtype=np.int64)
    C = _binom_table(gf.p, r)
    M = np.zeros((r + 1, r + 1), dtype=np.int64)
    for k in range(r + 1):
        # (a x + c y)^(r-k) has y-degree-t coefficient C(r-k,t) a^(r-k-t) c^t
        u = np.zeros(r - k + 1, dtype=np.int64)
        for t in range(r - k + 1):
            u[t] = gf.mul_t[C[r - k, t] % gf.p, gf.mul_t[gf.pow_int(a, r - k - t), gf.pow_int(c, t)]]
        v = np.zeros(k + 1, dtype=np.int64)
        for t in range(k + 1):
            v[t] = gf.mul_t[C[k, t] % gf.p, gf.mul_t[gf.pow_int(b, k - t), gf.pow_int(d, t)]]
        col = np.zeros(r + 1, dtype=np.int64)
        for t1 in range(r - k + 1):
            if not u[t1]:
                continue
            prods = gf.mul_t[u[t1], v]
            seg = col[t1 : t1 + k + 1]
            col[t1 : t1 + k + 1] = gf.add(seg, prods)
        M[:, k] = col
    return M


def weight_module(ctx: GroupContext, sigma: Weight) -> ExplicitModule:
    """Frobenius-twisted tensor of symmetric powers, with a determinant twist."""
    gf, gr = ctx.gf, ctx.gr

    def evaluate(g):
        a, b = gr.reduce_p(g[0, 0]), gr.reduce_p(g[0, 1])
        c, d = gr.reduce_p(g[1, 0]), gr.reduce_p(g[1, 1])
        det = gf.sub(gf.mul_t[a, d], gf.mul_t[b, c])
        M = np.ones((1, 1), dtype=np.int64)
        aa, bb, cc, dd = a, b, c, d
        for i, ri in enumerate(sigma.r):
            if i:
                aa, bb = gf.frob_t[aa], gf.frob_t[bb]
                cc, dd = gf.frob_t[cc], gf.frob_t[dd]
            M = gf_kron(gf, M, sym_power_matrix(gf, int(aa), int(bb), int(cc), int(dd), ri))
        scalar = gf.pow_int(int(det), sigma.twist)
        return gf.mul_t[scalar, M]

    mod = ExplicitModule(ctx, weight_dim(sigma), evaluate, "K", "K1", name=f"weight {sigma}")
    mod.cyclic_vector = np.zeros(mod.dim, dtype=np.int64)
    mod.cyclic_vector[0] = 1  # the pro-p fixed line
    return mod


def character_module(ctx: GroupContext, chi: ICharacter) -> ExplicitModule:
    def evaluate(g):
        return np.array([[ctx.char_value(chi, g)]], dtype=np.int64)

    return ExplicitModule(ctx, 1, evaluate, "I", "K1", name=f"char {chi}")


def ej_module(ctx: GroupContext, chi: ICharacter, j: int) -> ExplicitModule:
    """Nonsplit extension of chi*alpha^(-p^j) by chi on the frame {v, w}."""
    gf = ctx.gf
    par = ctx.params
    from ..core import char_times_alpha_power

    chi2 = char_times_alpha_power(chi, j, -1)
    pj = par.p ** j

    def evaluate(g):
        a = ctx.gr.reduce_p(g[0, 0])
        b = ctx.gr.reduce_p(g[0, 1])
        d = ctx.gr.reduce_p(g[1, 1])
        v1 = ctx.char_value(chi, g)
        v2 = ctx.char_value(chi2, g)
        s = gf.pow_int(int(gf.mul_t[b, gf.inv_t[d]]), pj)
        return np.array([[v1, gf.mul_t[v2, s]], [0, v2]], dtype=np.int64)

    return ExplicitModule(ctx, 2, evaluate, "I", "K1", name=f"E_{j}({chi})")


def pi_twist(mod: ExplicitModule) -> ExplicitModule:
    """Precompose the action with conjugation by the normalizer element."""
    if mod.group != "I":
        raise DomainError("only Iwahori modules can be twisted")
    ctx = mod.ctx
    out = ExplicitModule(
        ctx,
        mod.dim,
        lambda g: mod.evaluate(ctx.gr.swap_conjugate(g)),
        "I",
        "I2",
        name=f"Pi({mod.name})",
    )
    return out


def induce(mod: ExplicitModule) -> ExplicitModule:
    """Induction from I to K over the fixed coset representatives."""
    if mod.group != "I":
        raise DomainError("induction starts from an Iwahori module")
    ctx = mod.ctx
    q = ctx.gf.q
    d = mod.dim
    n = (q + 1) * d
    reps = ctx.coset_reps()

    def evaluate(g):
        out = np.zeros((n, n), dtype=np.int64)
        for ell, rep in enumerate(reps):
            ell2, i = ctx.coset_decompose(ctx.gr.mat_mul(g, rep))
            out[ell2 * d : (ell2 + 1) * d, ell * d : (ell + 1) * d] = mod.evaluate(i)
        return out

    return ExplicitModule(ctx, n, evaluate, "K", "K2", name=f"Ind({mod.name})")


def sub_module(mod: ExplicitModule, sub: Subspace, name: str = "") -> ExplicitModule:
    """Restriction of the action to an invariant row subspace (not re-checked)."""
    gf = mod.gf
    B = sub.basis

    def evaluate(g):
        imgs = gf.matmul(B, mod.evaluate(g).T)
        return sub.express(imgs).T

    return ExplicitModule(mod.ctx, sub.dim, evaluate, mod.group, mod.level, name or f"sub({mod.name})")


def quotient_module(mod: ExplicitModule, sub: Subspace, name: str = "") -> ExplicitModule:
    gf = mod.gf
    comp = sub.complement_coords()
    dimq = len(comp)
    lift = np.zeros((dimq, mod.dim), dtype=np.int64)
    for k, c in enumerate(comp):
        lift[k, c] = 1

    def evaluate(g):
        imgs = gf.matmul(lift, mod.evaluate(g).T)
        reduced = np.stack([sub.reduce(v) for v in imgs]) if dimq else imgs
        return reduced[:, comp].T if dimq else np.zeros((0, 0), dtype=np.int64)

    return ExplicitModule(mod.ctx, dimq, evaluate, mod.group, mod.level, name or f"quot({mod.name})")


def dual_module(mod: ExplicitModule) -> ExplicitModule:
    ctx = mod.ctx

    def evaluate(g):
        return mod.evaluate(ctx.gr.mat_inv(g)).T

    return ExplicitModule(ctx, mod.dim, evaluate, mod.group, mod.level, name=f"dual({mod.name})")


def invariants(mod: ExplicitModule, kind: str = "I1") -> np.ndarray:
    """Rows spanning the fixed space of the listed generators."""
    gf = mod.gf
    eye = gf.eye(mod.dim)
    blocks = [gf.sub(M, eye) for M in mod.gen_mats(kind)]
    stacked = np.vstack(blocks) if blocks else np.zeros((0, mod.dim), dtype=np.int64)
    return nullspace(gf, stacked)


def h_eigen_split(mod: ExplicitModule, rows) -> list:
    """Split an H-stable subspace into joint eigenspaces; returns (char, rows)."""
    ctx = mod.ctx
    gf = mod.gf
    rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
    if rows.shape[0] == 0:
        return []
    sub = Subspace(gf, rows)
    B = sub.basis
    mats = []
    for g in ctx.gens("H"):
        imgs = gf.matmul(B, mod.evaluate(g).T)
        mats.append(sub.express(imgs))  # row-convention action on coordinates
    k = sub.dim
    out = []
    for e1 in range(gf.q - 1):
        val1 = int(gf.exp_t[e1])
        A1 = gf.sub(mats[0], gf.scale(val1, gf.eye(k)))
        ker1 = nullspace(gf, A1.T)
        if ker1.shape[0] == 0:
            continue
        inner = Subspace(gf, ker1)
        C = inner.basis
        m2 = inner.express(gf.matmul(C, mats[1]))
        for e2 in range(gf.q - 1):
            val2 = int(gf.exp_t[e2])
            A2 = gf.sub(m2, gf.scale(val2, gf.eye(inner.dim)))
            ker2 = nullspace(gf, A2.T)
            if ker2.shape[0] == 0:
                continue
            vecs = gf.matmul(gf.matmul(ker2, C), B)
            out.append((ICharacter(ctx.params, e1, e2), vecs))
    total = sum(v.shape[0] for _, v in out)
    if total != k:
        raise AssertionError("subspace is not H-semisimple with eigenvalues in F_q")
    return out


def eigen_char_of_vector(mod: ExplicitModule, vec) -> ICharacter:
    gf = mod.gf
    vec = np.asarray(vec, dtype=np.int64)
    exps = []
    for g in mod.ctx.gens("H"):
        img = gf.matvec(mod.evaluate(g), vec)
        nz = np.nonzero(vec)[0][0]
        if not vec[nz]:
            raise ValueError("zero vector")
        lam = gf.mul_t[img[nz], gf.inv_t[vec[nz]]]
        if not (img == gf.scale(int(lam), vec)).all():
            raise ValueError("vector is not an eigenvector of the torus")
        exps.append(int(gf.log_t[lam]))
    return ICharacter(mod.ctx.params, exps[0], exps[1])


@lru_cache(maxsize=None)
def _weight_words(params: Params, sigma: Weight):
    """Group words g_i with {g_i v0} a basis of sigma, plus structure constants."""
    ctx = get_context(params)
    gf = ctx.gf
    W = weight_module(ctx, sigma)
    gens = ctx.gens("K")
    gmats = W.gen_mats("K")
    v0 = W.cyclic_vector
    sub = Subspace(gf, v0.reshape(1, -1))
    words = [ctx.gr.mat_eye()]
    vecs = [v0]
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            for g, gm in zip(gens, gmats):
                cand = gf.matvec(gm, vecs[idx])
                if sub.insert(cand):
                    words.append(ctx.gr.mat_mul(g, words[idx]))
                    vecs.append(cand)
                    nxt.append(len(vecs) - 1)
        frontier = nxt
    if len(vecs) != W.dim:
        raise AssertionError(f"weight {sigma} not cyclic from its fixed vector")
    basis = Subspace(gf, np.stack(vecs))
    # structure constants: h . (g_i v0) = sum_j c[h][i][j] (g_j v0)
    V = np.stack(vecs)
    coords = Subspace(gf, ambient=W.dim)
    for v in vecs:
        coords.insert(v)
    struct = []
    for gm in gmats:
        imgs = gf.matmul(V, gm.T)
        # express in the *ordered* spanning set: solve against V
        struct.append(_express_in_rows(gf, V, imgs))
    return tuple(words), struct


def _inv_matrix(gf, A):
    n = A.shape[0]
    aug = np.hstack([A, gf.eye(n)])
    sub = Subspace(gf, aug)
    if sub.dim != n or sub.pivots != list(range(n)):
        raise ValueError("matrix not invertible")
    return sub.basis[:, n:]


def _express_in_rows(gf, rows, targets):
    """Coefficients C with C @ rows = targets, for independent rows."""
    sub = Subspace(gf, rows)
    E = sub.express(rows)       # rows = E @ echelon basis
    D = sub.express(targets)    # targets = D @ echelon basis
    return gf.matmul(D, _inv_matrix(gf, E))


def hom_from_weight(mod: ExplicitModule, sigma: Weight, eig_rows=None):
    """Basis of equivariant maps from the weight into a K-module.

    Returns a list of image bases (rows), one per independent map; a map is
    determined by the image w of the weight's fixed vector, constrained by
    the weight's structure constants applied to the translates of w.
    """
    ctx = mod.ctx
    gf = mod.gf
    if eig_rows is None:
        inv = invariants(mod, "I1")
        chi = chi_of_weight(sigma)
        eig_rows = np.zeros((0, mod.dim), dtype=np.int64)
        for ch, rows in h_eigen_split(mod, inv):
            if ch == chi:
                eig_rows = rows
    eig_rows = np.atleast_2d(np.asarray(eig_rows, dtype=np.int64))
    m = eig_rows.shape[0]
    if m == 0:
        return []
    words, struct = _weight_words(ctx.params, sigma)
    gens = ctx.gens("K")
    gmats = mod.gen_mats("K")
    dimw = len(words)
    # translates of each candidate basis vector
    trans = np.zeros((m, dimw, mod.dim), dtype=np.int64)
    for t in range(m):
        for i, wmat in enumerate(words):
            trans[t, i] = gf.matvec(mod.evaluate(wmat), eig_rows[t])
    constraints = []
    for gm, c_h in zip(gmats, struct):
        for i in range(dimw):
            # act(h) trans_i - sum_j c[i][j] trans_j must vanish
            lhs = np.stack([gf.matvec(gm, trans[t, i]) for t in range(m)])
            combo = np.zeros((m, mod.dim), dtype=np.int64)
            for t in range(m):
                prods = gf.mul_t[c_h[i][:, None], trans[t]]
                combo[t] = gf.sum_axis(prods, axis=0)
            constraints.append(gf.sub(lhs, combo).T)  # columns indexed by t
    A = np.vstack(constraints)
    ker = nullspace(gf, A)
    out = []
    for coeffs in ker:
        img = np.zeros((dimw, mod.dim), dtype=np.int64)
        for t in range(m):
            if coeffs[t]:
                img = gf.add(img, gf.scale(int(coeffs[t]), trans[t]))
        out.append(img)
    return out


def hom_space(A, B: ExplicitModule) -> list:
    """Basis of equivariant maps A -> B.

    A may be a Weight (then B must be a K-module and each map is returned
    as the rows of its image, via the fixed-vector translates) or a small
    ExplicitModule (then maps are returned as dim(B) x dim(A) matrices from
    the full intertwiner system over the generator list).
    """
    if isinstance(A, Weight):
        return hom_from_weight(B, A)
    if A.ctx is not B.ctx:
        raise DomainError("modules live over different contexts")
    gf = A.gf
    kind = "I" if "I" in (A.group, B.group) else "K"
    nA, nB = A.dim, B.dim
    if nA * nB > 4096:
        raise DomainError("full intertwiner solve is limited to small modules")
    rows = []
    for g in A.ctx.gens(kind):
        MA, MB = A.evaluate(g), B.evaluate(g)
        # X MA - MB X = 0 on the row-major flattening of the nB x nA matrix X
        rows.append(gf.sub(gf_kron(gf, gf.eye(nB), MA.T), gf_kron(gf, MB, gf.eye(nA))))
    ker = nullspace(gf, np.vstack(rows))
    return [vec.reshape(nB, nA) for vec in ker]


def socle_components(mod: ExplicitModule) -> list:
    """Irreducible subobjects as (Weight, image rows), one entry per embedding."""
    out = []
    inv = invariants(mod, "I1")
    for chi, rows in h_eigen_split(mod, inv):
        for w in weights_of_char(chi):
            if weight_dim(w) > mod.dim:
                continue
            for img in hom_from_weight(mod, w, eig_rows=rows):
                out.append((w, img))
    return out


def socle_data(mod: ExplicitModule):
    """(weight multiset of the socle, subspace spanned by it)."""
    soc = Subspace(mod.gf, ambient=mod.dim)
    found = Counter()
    for w, img in socle_components(mod):
        for v in img:
            soc.insert(v)
        found[w] += 1
    return found, soc


def socle_series(mod: ExplicitModule) -> list:
    """Socle filtration as a list of weight Counters, bottom first."""
    layers = []
    cur = mod
    guard = 0
    while cur.dim > 0:
        found, soc = socle_data(cur)
        if soc.dim == 0:
            raise AssertionError("nonzero module with zero socle")
        layers.append(found)
        cur = quotient_module(cur, soc)
        guard += 1
        if guard > mod.dim:
            raise AssertionError("socle series did not terminate")
    return layers


def jh_multiset(mod: ExplicitModule) -> Counter:
    total = Counter()
    for layer in socle_series(mod):
        total.update(layer)
    dims = sum(weight_dim(w) * k for w, k in total.items())
    if dims != mod.dim:
        raise AssertionError(f"JH dimensions {dims} do not add up to {mod.dim}")
    return total


def socle_weights(mod: ExplicitModule) -> Counter:
    found, _ = socle_data(mod)
    return found


def cosocle_weights(mod: ExplicitModule) -> Counter:
    dual = dual_module(mod)
    found, _ = socle_data(dual)
    return Counter({weight_dual(w): k for w, k in found.items()})


def radical_subspace(mod: ExplicitModule, kind: str, rows=None) -> Subspace:
    """Span of (g - 1) applied to the rows, over the listed generators."""
    gf = mod.gf
    if rows is None:
        rows = gf.eye(mod.dim)
    rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
    out = Subspace(gf, ambient=mod.dim)
    eye = gf.eye(mod.dim)
    for M in mod.gen_mats(kind):
        diff = gf.sub(M, eye)
        for v in gf.matmul(rows, diff.T):
            out.insert(v)
    return out


def restricted_loewy(mod: ExplicitModule, kind: str) -> int:
    """Loewy length of the restriction to the unipotent subgroup of that kind."""
    gf = mod.gf
    cur = Subspace(gf, gf.eye(mod.dim))
    length = 0
    while cur.dim > 0:
        cur = radical_subspace(mod, kind, cur.basis)
        length += 1
        if length > mod.dim + 1:
            raise AssertionError("radical series did not terminate")
    return length


def i_socle_series_chars(mod: ExplicitModule) -> list:
    """Iwahori socle filtration of an I-module: characters layer by layer."""
    layers = []
    cur = mod
    while cur.dim > 0:
        inv = invariants(cur, "I1")
        if inv.shape[0] == 0:
            raise AssertionError("nonzero module with no pro-p invariants")
        chars = []
        for chi, rows in h_eigen_split(cur, inv):
            chars.extend([chi] * rows.shape[0])
        layers.append(sorted(chars, key=lambda c: (c.a, c.b)))
        cur = quotient_module(cur, Subspace(cur.gf, inv))
    return layers


def check_module(mod: ExplicitModule, rng, samples: int = 20) -> None:
    """Multiplicativity on random pairs and triviality on the declared level."""
    ctx = mod.ctx
    gr = ctx.gr
    kind = mod.group
    for _ in range(samples):
        g = ctx.random_element(kind, rng)
        h = ctx.random_element(kind, rng)
        lhs = mod.gf.matmul(mod.evaluate(g), mod.evaluate(h))
        rhs = mod.evaluate(gr.mat_mul(g, h))
        if not (lhs == rhs).all():
            raise AssertionError(f"{mod} evaluator is not multiplicative")
    eye = mod.gf.eye(mod.dim)
    if not (mod.evaluate(gr.mat_eye()) == eye).all():
        raise AssertionError(f"{mod} does not send identity to identity")
    p, f = ctx.params.p, ctx.params.f
    for _ in range(samples):
        if mod.level == "K1":
            m = (gr.mat_eye() + p * rng.integers(0, p, (2, 2, f))) % gr.p2
        elif mod.level == "I2":
            # second Iwahori congruence subgroup mod p^2: unipotent with a p-multiple above
            m = gr.mat_eye()
            m[0, 1] = (p * rng.integers(0, p, f)) % gr.p2
        else:
            m = gr.mat_eye()
        if not (mod.evaluate(m) == eye).all():
            raise AssertionError(f"{mod} is not trivial on its declared level")

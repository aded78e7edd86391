"""Constituents of a principal series induced from the Iwahori subgroup.

The induction of a smooth character from I to K = GL2(O) is (q+1)-dimensional
and multiplicity free; its 2^f constituents are indexed by symbolic tuples,
and the subset J attached to each one controls the submodule lattice.
"""

from gl2diamond import (
    Params,
    U_contents,
    Weight,
    chi_of_weight,
    jh_of_induced,
    socle_of_induced,
    weight_dim,
)

par = Params(5, 2)
chi = chi_of_weight(Weight(par, (2, 1), 0))
print(f"induction of {chi} over p={par.p}, f={par.f}  (dim {par.q + 1})\n")

jh = jh_of_induced(chi)
for fac in jh.factors:
    tags = ",".join(s.label() for s in fac.lam)
    print(f"  J={str(sorted(fac.J)):<8} tuple ({tags:<16}) -> {fac.weight}  dim {fac.dim}")
print(f"  total dimension: {jh.total_dim}")
print(f"  socle: {', '.join(map(str, socle_of_induced(chi)))}")

# The unique sub with a prescribed cosocle contains exactly the factors
# whose subsets are contained in the cosocle's subset.
print("\nsub-with-cosocle contents:")
for fac in jh.factors:
    inside = sorted(str(g.weight) for g in U_contents(fac, chi))
    print(f"  cosocle {fac.weight}: {inside}")

# Degenerate digits drop tuples; the missing ones have a -1 entry and
# contribute nothing to the dimension count.
chi2 = chi_of_weight(Weight(par, (1, 0), 0))
jh2 = jh_of_induced(chi2)
print(f"\ninduction of {chi2}: {len(jh2.factors)} constituents, {len(jh2.dropped)} dropped")
print(f"  dimensions still add to q+1: {jh2.total_dim == par.q + 1}")

# A character with equal exponents splits its induction in two.
chi3 = chi_of_weight(Weight(par, (0, 0), 0))
print(f"\ninduction of the self-conjugate {chi3}:")
for fac in jh_of_induced(chi3).factors:
    print(f"  {fac.weight}  dim {fac.dim}")

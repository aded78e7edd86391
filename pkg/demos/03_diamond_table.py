"""The weight set of a generic parameter and its multiplicity-free blocks.

A generic semisimple two-dimensional mod-p parameter carries a set of 2^f
weights, indexed by subsets of {0..f-1}.  Each weight is the socle of one
block of the maximal multiplicity-free representation; the involution
tau -> tau^[s] permutes factors across blocks through the map delta.
"""

from gl2diamond import (
    GaloisParams,
    Params,
    d0_factors,
    delta_of_tau,
    diamond_set,
    ell_decomposition,
    f2_tables,
    is_generic,
    lifting_factors,
)
from gl2diamond.tuples import S_of_mu

par = Params(7, 2)
rho = GaloisParams(par, False, (2, 1), 0)
print(f"{rho}  generic: {is_generic(rho)}\n")

print("weight set, ordered by subset:")
for dw in diamond_set(rho):
    print(f"  S={str(sorted(dw.S)):<8} ell={dw.ell}  {dw.weight}")

print("\nblocks (layers grouped by the number of moved slots):")
for dw in diamond_set(rho):
    print(f"  socle {dw.weight}")
    for fac in d0_factors(rho, dw):
        level = len(S_of_mu(fac.mu))
        mu = ",".join(s.label("y") for s in fac.mu)
        mark = " lifts" if fac.lifts else ""
        print(f"    layer {level}: mu=({mu:<16}) {fac.weight}{mark}")

print("\ndelta on the lifted factors (the companion's block):")
for dw in diamond_set(rho):
    for fac in lifting_factors(rho, dw):
        target = delta_of_tau(rho, dw, fac)
        print(f"  {fac.weight}  in block of {dw.weight}  ->  {target.weight}")

# the closed-form f=2 table agrees with the block computation
tab = f2_tables(rho)
print(f"\nclosed-form table matches the blocks: {tab.matches_d0}")

# reducible parameters split by the size of the subset
rho_red = GaloisParams(Params(5, 2), True, (1, 2), 0)
print(f"\n{rho_red}: block sizes by ell:")
for ell, dws in ell_decomposition(rho_red).items():
    print(f"  ell={ell}: {[str(d.weight) for d in dws]}")

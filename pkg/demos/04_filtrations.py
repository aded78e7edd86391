"""Explicit socle-filtration displays attached to a couple of weights.

For a weight sigma and a slot j (with the couple partner in range), the
two-row display lists the constituents of the distinguished subrepresentation
of the induced chain, one column block per twist level; for f = 2 and an
irreducible parameter the same machinery produces the two filtrations whose
agreement inside an ambient representation is the point of the construction.
"""

from gl2diamond import (
    GaloisParams,
    Params,
    Weight,
    example1_filtration,
    f2_tables,
    plus_one_partner,
    v1_s1_filtrations,
)

par = Params(7, 3)
sigma = Weight(par, (2, 2, 2), 0)
j = 0
ex = example1_filtration(sigma, j)
print(f"two-row display for sigma = {sigma}, slot {j}")
print(f"pivot digit {ex.r_pivot}, halfway point t = {ex.t}, partner tau = {ex.tau}\n")
for i, layer in enumerate(ex.layers.layers):
    print(f"  column {i}: " + "  ".join(str(w) for w in layer))
print("\nweight coincidences across the display:")
for name, a, b in ex.coincidences:
    print(f"  {name}: {a} = {b}   ({a == b})")

# f = 2: the two filtrations over an irreducible generic parameter
rho = GaloisParams(Params(7, 2), False, (2, 1), 0)
tab = f2_tables(rho)
vs = v1_s1_filtrations(rho)
print(f"\n{rho}")
print("long filtration: " + vs.v1.render())
print("short filtration: " + vs.s1.render())
print(f"chain weights outside the weight set (all but the first): "
      f"{[not b for b in vs.taus_outside]}")
print(f"couple types along the chain all match: {all(ok for _, ok in vs.couple_checks)}")

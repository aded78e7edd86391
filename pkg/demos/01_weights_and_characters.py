"""Weights of GL2(F_q) and smooth characters of the Iwahori subgroup.

Everything is finite data: a weight is a digit vector with a determinant
twist, a smooth Iwahori character is a pair of exponents mod q-1.  This
script walks through the basic dictionary between the two.
"""

from gl2diamond import (
    Params,
    Weight,
    alpha,
    char_normal_form,
    char_times_alpha_power,
    chi_of_weight,
    conjugate_char,
    ext1_dim_I,
    sigma_s,
    weight_dim,
    weights_of_char,
)

par = Params(7, 2)  # q = 49
print(f"p = {par.p}, f = {par.f}, q = {par.q}")

# A weight and the character of its pro-p fixed line.
sigma = Weight(par, (2, 1), 0)
chi = chi_of_weight(sigma)
print(f"\nsigma = {sigma}, dim {weight_dim(sigma)}")
print(f"chi_sigma = {chi}   (exponent pair on the diagonal torus)")

# The Weyl conjugate swaps the pair; the companion weight realizes it.
print(f"conjugate: {conjugate_char(chi)}")
print(f"companion sigma^[s] = {sigma_s(sigma)}, dim {weight_dim(sigma_s(sigma))}")
print(f"chi of companion    = {chi_of_weight(sigma_s(sigma))}")

# Normal forms: digits of a-b and the twist b.  Round trips exactly.
digits, t = char_normal_form(chi)
print(f"\nnormal form of chi: digits {digits}, twist {t}")

# alpha is the positive root character; twisting by alpha^(-p^j) moves one
# digit down by two when it can.
a = alpha(par)
print(f"alpha = {a}, alpha^(q-1) trivial: {(a ** (par.q - 1)).a == 0}")
for j in (0, 1):
    tw = char_times_alpha_power(chi, j, -1)
    print(f"chi * alpha^(-p^{j}) has normal form {char_normal_form(tw)}")

# Characters with equal exponents belong to two weights at once.
par1 = Params(5, 1)
chi_fixed = chi_of_weight(Weight(par1, (0,), 3))
print(f"\nself-conjugate character {chi_fixed} belongs to:")
for w in sorted(weights_of_char(chi_fixed)):
    print(f"  {w}  (dim {weight_dim(w)})")

# Iwahori extensions between characters exist only along alpha-twists.
print("\nextension spaces out of chi:")
for j in (0, 1):
    for sign in (-1, +1):
        other = char_times_alpha_power(chi, j, sign)
        dim_z1 = ext1_dim_I(other, chi, "Z1")
        dim_k1 = ext1_dim_I(other, chi, "K1")
        print(f"  twist ({sign:+d}, j={j}): central level {dim_z1[0]}, deeper level {dim_k1[0]}")

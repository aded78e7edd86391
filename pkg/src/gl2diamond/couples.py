"""Ordered pairs of weights with a nonsplit K-extension of a prescribed shape.

A couple (sigma, tau) of type (+1, j) has tau obtained from sigma by replacing
the digits at slots j-1 and j by p-2-r_{j-1} and r_j+1 and twisting by
det^(p^{j-1}(r_{j-1}+1) - p^j); the type (-1, j) template replaces them by
p-2-r_{j-1} and r_j-1 with twist det^(p^{j-1}(r_{j-1}+1)).  The (-1, j) shape
is the one whose character is chi_tau * alpha^(-p^j) of a (+1, j) partner,
realized on the unique weight of dimension at most q-2 with that character.
Both templates are cyclic in j and require f >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError, Weight


@dataclass(frozen=True)
class CoupleType:
    sign: int
    j: int

    def __str__(self):
        return f"({'+' if self.sign > 0 else '-'}1,{self.j})"


def plus_one_partner(sigma: Weight, j: int) -> Weight:
    """The type (+1, j) partner of sigma; requires r_{j-1} <= p-2 and r_j <= p-2."""
    par = sigma.params
    if par.f < 2:
        raise DomainError("couples need f >= 2")
    jm1 = (j - 1) % par.f
    r = list(sigma.r)
    if r[jm1] > par.p - 2 or r[j] > par.p - 2:
        raise DomainError(f"(+1,{j}) partner of {sigma} is out of range")
    r[jm1], r[j] = par.p - 2 - r[jm1], r[j] + 1
    tw = sigma.twist + par.p ** jm1 * (sigma.r[jm1] + 1) - par.p ** j
    return Weight(par, tuple(r), tw)


def minus_one_partner(sigma: Weight, j: int) -> Weight:
    """The type (-1, j) partner; requires r_{j-1} <= p-2 and r_j >= 1."""
    par = sigma.params
    if par.f < 2:
        raise DomainError("couples need f >= 2")
    jm1 = (j - 1) % par.f
    r = list(sigma.r)
    if r[jm1] > par.p - 2 or r[j] < 1:
        raise DomainError(f"(-1,{j}) partner of {sigma} is out of range")
    r[jm1], r[j] = par.p - 2 - r[jm1], r[j] - 1
    tw = sigma.twist + par.p ** jm1 * (sigma.r[jm1] + 1)
    return Weight(par, tuple(r), tw)


def couple_type(sigma: Weight, tau: Weight):
    """Match tau against both templates over all slots; None when nothing fits."""
    par = sigma.params
    if par.f < 2:
        raise DomainError("couples need f >= 2")
    if par != tau.params:
        raise DomainError("weights live over different parameters")
    for j in range(par.f):
        jm1 = (j - 1) % par.f
        if sigma.r[jm1] <= par.p - 2 and sigma.r[j] <= par.p - 2:
            if plus_one_partner(sigma, j) == tau:
                return CoupleType(+1, j)
        if sigma.r[jm1] <= par.p - 2 and sigma.r[j] >= 1:
            if minus_one_partner(sigma, j) == tau:
                return CoupleType(-1, j)
    return None

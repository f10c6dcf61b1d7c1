"""Regularity bounds from Stanley filtrations and from Hilbert polynomials.

Both bounds land in K-upsets: unions of translates of the nef semigroup.
The filtration bound intersects the shifted face-ring baselines over the
pairs; the uniform bound only needs the Gotzmann number of the target
polynomial, and applies to every saturated ideal with that polynomial.
"""

from toricreg import (
    MonomialIdeal,
    RegularityAssumption,
    parse_poly,
    product_projective,
    projective_space,
    reg_bound_from_filtration,
    reg_bound_from_polynomial,
    stanley_filtration,
)
from toricreg.regularity import format_upset

P3 = projective_space(3)
PP = product_projective(2, 1)
assume = RegularityAssumption()

# The three-generator ideal: the filtration bound is sharp here.
I = MonomialIdeal(4, [(1, 0, 0, 2), (0, 1, 0, 2), (0, 0, 1, 2)])
bound = reg_bound_from_filtration(P3, I, stanley_filtration(I), assume)
print("I =", I)
print("filtration bound:", format_upset(bound, assume))

# The uniform bound for all subschemes of P^2 x P^1 with polynomial
# 3t1 + 1: Gotzmann number 4, so every such subscheme is (3,3)-regular
# under the default baselines.
P = parse_poly("3*t1+1", nvars=2)
uniform = reg_bound_from_polynomial(PP, P, assume)
print("\nP =", "3*t1+1", "on P^2 x P^1")
print("uniform bound:", format_upset(uniform, assume))

# Points: l points are (l-1)c-regular no matter how they sit.
for ell in (1, 2, 3):
    b = reg_bound_from_polynomial(P3, parse_poly(str(ell), nvars=1), assume)
    print(f"\n{ell} point(s) on P^3:", format_upset(b, assume))

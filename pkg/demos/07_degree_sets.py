"""Finite degree sets supporting the multigraded Hilbert scheme.

Starting from the uniform regularity bound point, the loop keeps adding
degrees until every monomial ideal generated in D with the right
Hilbert function on D automatically has the right Hilbert polynomial.
The final D is verified against a sampled box of the bound region.
"""

from toricreg import (
    degree_set,
    format_ideal,
    parse_poly,
    projective_space,
    supportive_check,
)

P1 = projective_space(1)
P2 = projective_space(2)

for X, name, text in [(P1, "P^1", "1"), (P1, "P^1", "2"), (P2, "P^2", "t+1")]:
    P = parse_poly(text, nvars=1)
    result = degree_set(X, P, seed=11)
    print(f"{name}, P = {text}   (seed {result.seed})")
    print("  anchor k =", result.anchor)
    print("  D =", " ".join(str(t) for t in result.points))
    for row in result.trace:
        print(f"  round {row['round']}: |D|={row['size']} "
              f"candidates={row['candidates']} bad={row['bad']}")
    print("  candidates on the final D:")
    for I in result.ideals:
        print("   ", format_ideal(I))
    print("  supportive:", supportive_check(X, result, P))
    print()

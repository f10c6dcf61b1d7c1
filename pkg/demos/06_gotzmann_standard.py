"""The standard graded story: binomial representations and lex ideals.

Writing P as a sum of binomials binom(t + q_i - (i-1), q_i) with q
weakly decreasing gives the Gotzmann number m = number of summands, and
the saturated lexicographic ideal realizes the worst case: a Stanley
filtration with exactly m pairs and a generator of degree m.
"""

from toricreg import (
    enumerate_binomial_representations,
    format_ideal,
    gotzmann_representation,
    lex_ideal,
    parse_poly,
)

for text, n in [("3*t+1", 3), ("2*t+2", 3), ("1/2*t^2 + 3/2*t + 2", 4), ("5", 3)]:
    P = parse_poly(text, nvars=1)
    rep = gotzmann_representation(P)
    ideal, pairs = lex_ideal(P, n)
    print(f"P = {text}")
    print("  q =", rep.q, " m =", rep.length)
    print("  lex ideal:", format_ideal(ideal))
    print("  max generator degree:", max(sum(g) for g in ideal.gens), "(= m: sharp)")
    for p in pairs:
        print("   ", p)
    print()

# Every admissible binomial expression of 3t+1, with the maximizer last.
P = parse_poly("3*t+1")
reps = enumerate_binomial_representations(P, max_m=6)
print("binomial expressions of 3t+1:")
for q, u in sorted(reps, key=lambda r: len(r[0])):
    terms = " + ".join(f"binom(t+{qi}-{ui},{qi})" for qi, ui in zip(q, u))
    print(f"  [{len(q)} terms] {terms}")

"""Stanley decompositions of monomial quotients and the filtration order.

The comma-colon recursion splits S/I along a variable x_l into the
quotient by I + <x_l> and the shifted quotient by (I : x_l).  The leaf
pairs of the recursion tree, read in depth-first order, always form a
Stanley filtration: every prefix is itself a Stanley decomposition of a
larger quotient.
"""

from toricreg import (
    MonomialIdeal,
    decomposition_to_ideal,
    replay_strategy,
    stanley_decompose,
    stanley_filtration,
    filtration,
    verify_stanley,
)

# The running four-variable example with six generators.
I = MonomialIdeal(4, [(2, 1, 0, 0), (1, 1, 1, 0), (0, 2, 1, 0),
                      (2, 0, 0, 1), (1, 1, 0, 1), (0, 2, 0, 1)])
print("I =", I)

# Replay a recorded choice sequence (x1, x2, x2, x1, x2 in pre-order).
tree = stanley_decompose(I, replay_strategy([0, 1, 1, 0, 1]))
pairs = filtration(tree)
print("\npairs in depth-first order:")
for p in pairs:
    print(" ", p)
print("tree depth:", tree.depth(), " leaves:", tree.leaf_count())

# The DFS order is a filtration, and the pairs cut the ideal back out.
print("\nfiltration check:", bool(verify_stanley(I, pairs, mode="filtration")))
print("round trip:", decomposition_to_ideal(pairs, 4) == I)

# Not every decomposition can be ordered into a filtration: the
# symmetric decomposition of S/<x1 x2 x3> is the standard example.
from itertools import permutations
from toricreg import StanleyPair

J = MonomialIdeal(3, [(1, 1, 1)])
dec = (StanleyPair((0, 0, 0), frozenset()),
       StanleyPair((1, 0, 0), frozenset({0, 1})),
       StanleyPair((0, 1, 0), frozenset({1, 2})),
       StanleyPair((0, 0, 1), frozenset({0, 2})))
print("\nJ =", J)
print("decomposition check:", bool(verify_stanley(J, dec, mode="decomposition")))
print("filtration orderings that work:",
      sum(bool(verify_stanley(J, p, mode="filtration")) for p in permutations(dec)),
      "out of 24")

# The default strategy reproduces the lexicographic walkthrough.
L = MonomialIdeal(3, [(4, 0, 0), (3, 1, 0)])
print("\nL =", L)
for p in stanley_filtration(L):
    print(" ", p)

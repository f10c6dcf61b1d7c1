"""Stanley decompositions and filtrations via the comma-colon recursion.

The recursion on a monomial ideal I splits along a variable x_l that
properly divides a minimal generator: the left child is I + <x_l>, the
right child is (I : x_l).  Leaves are prime ideals; reading the leaves
off in depth-first order (left children first) yields not just a
Stanley decomposition but a Stanley filtration of S/I.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import OverlappingPairs, StrategyInvalid, UnitIdeal
from .ideals import MonomialIdeal, format_monomial, total_degree


@dataclass(frozen=True)
class StanleyPair:
    """(x^shift, face): the monomials x^(shift+v) with supp(v) inside face."""

    shift: tuple
    face: frozenset

    def contains(self, m):
        return all(a >= b for a, b in zip(m, self.shift)) and all(
            i in self.face for i, (a, b) in enumerate(zip(m, self.shift)) if a > b)

    def sort_key(self):
        return (self.shift, tuple(sorted(self.face)))

    def __repr__(self):
        return f"({format_monomial(self.shift)}, {{{','.join(str(i+1) for i in sorted(self.face))}}})"


class StanleyTree:
    """Binary tree of the recursion: left = ideal + <x_l>, right = (ideal : x_l)."""

    __slots__ = ("ideal", "variable", "left", "right")

    def __init__(self, ideal, variable=None, left=None, right=None):
        self.ideal = ideal
        self.variable = variable
        self.left = left
        self.right = right

    def is_leaf(self):
        return self.variable is None

    def leaf_count(self):
        if self.is_leaf():
            return 1
        return self.left.leaf_count() + self.right.leaf_count()

    def depth(self):
        if self.is_leaf():
            return 0
        return 1 + max(self.left.depth(), self.right.depth())


def properly_divides(i, g):
    """Whether x_i properly divides the monomial x^g."""
    return g[i] >= 1 and total_degree(g) >= 2


def default_strategy(I):
    """Largest variable index dividing the lex-largest minimal generator
    that admits a proper variable divisor."""
    candidates = [g for g in I.gens if total_degree(g) >= 2]
    target = max(candidates)
    return max(i for i in range(I.n) if target[i] >= 1)


def replay_strategy(choices):
    """Strategy that plays back a recorded list of variable indices
    (0-based) in pre-order: node, then left subtree, then right subtree."""
    state = {"pos": 0}

    def choose(I):
        if state["pos"] >= len(choices):
            raise StrategyInvalid("choice script exhausted")
        var = choices[state["pos"]]
        state["pos"] += 1
        return var

    return choose


def nice_strategy(X, face_order):
    """Variable choice of the graded-order refinement (Step 2').

    When the ideal sits inside some P_sigma with sigma^ a face, pick the
    order-smallest such face and split along its smallest variable that
    properly divides a generator; otherwise any proper divisor variable.
    """

    def choose(I):
        best = None
        for sigma_hat in face_order.faces:
            if sigma_hat and all(any(g[i] for i in sigma_hat) for g in I.gens):
                best = sigma_hat
                break
        if best is not None:
            for i in sorted(best):
                if any(properly_divides(i, g) for g in I.gens):
                    return i
        for i in range(I.n):
            if any(properly_divides(i, g) for g in I.gens):
                return i
        raise StrategyInvalid("no variable properly divides a generator")

    return choose


def stanley_decompose(I, strategy=None):
    """Build the full recursion tree for S/I.

    strategy maps a non-prime ideal to a variable index; it must return
    a proper divisor of some minimal generator (checked).
    """
    if I.is_unit():
        raise UnitIdeal("S/I is zero")
    if strategy is None:
        strategy = default_strategy

    def build(J):
        if J.is_prime():
            return StanleyTree(J)
        var = strategy(J)
        if not (0 <= var < J.n) or not any(properly_divides(var, g) for g in J.gens):
            raise StrategyInvalid(
                f"x{var+1} does not properly divide a minimal generator of {J}")
        e = tuple(1 if i == var else 0 for i in range(J.n))
        return StanleyTree(J, var, build(J.plus(e)), build(J.colon(e)))

    return build(I)


def filtration(tree):
    """Leaves in depth-first order (left first), as StanleyPairs.

    This ordering is guaranteed to be a Stanley filtration, not just a
    decomposition.
    """
    n = tree.ideal.n
    pairs = []

    def walk(node, shift):
        if node.is_leaf():
            face = frozenset(range(n)) - node.ideal.support_variables()
            pairs.append(StanleyPair(tuple(shift), face))
            return
        walk(node.left, shift)
        shift = list(shift)
        shift[node.variable] += 1
        walk(node.right, shift)

    walk(tree, [0] * n)
    return tuple(pairs)


def stanley_filtration(I, strategy=None):
    return filtration(stanley_decompose(I, strategy))


# -- verification --------------------------------------------------------


@dataclass
class VerifyResult:
    ok: bool
    counterexample: tuple = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def monomials_up_to(n, bound):
    """All exponent tuples in N^n of total degree <= bound."""
    def rec(pos, remaining, acc):
        if pos == n:
            yield tuple(acc)
            return
        for k in range(remaining + 1):
            acc[pos] = k
            yield from rec(pos + 1, remaining - k, acc)
        acc[pos] = 0

    yield from rec(0, bound, [0] * n)


def default_verify_bound(I, pairs):
    gen_deg = max((total_degree(g) for g in I.gens), default=0)
    shift_deg = max((total_degree(p.shift) for p in pairs), default=0)
    return gen_deg + shift_deg + 2


def verify_stanley(I, pairs, mode="decomposition", bound=None):
    """Check the partition property of Definition 3.1, degree by degree.

    decomposition: every monomial outside I of total degree <= bound
    lies in exactly one pair, and no pair meets I.  filtration: each
    prefix must additionally be a decomposition of S over the ideal
    enlarged by the later shifts.  Returns a falsy VerifyResult with a
    counterexample monomial on failure.

    The prefix conditions are checked in one pass: writing D(m) for the
    pair indices whose shift divides m and C(m) for the pairs containing
    m, a monomial outside I passes every prefix test exactly when
    C(m) = {max D(m)} (or {first pair} when D(m) is empty), and a
    monomial of I passes when C(m) is empty.
    """
    pairs = tuple(pairs)
    if bound is None:
        bound = default_verify_bound(I, pairs)
    if mode not in ("decomposition", "filtration"):
        raise ValueError(f"unknown mode {mode!r}")

    for m in monomials_up_to(I.n, bound):
        containing = [k for k, p in enumerate(pairs) if p.contains(m)]
        if I.contains(m):
            if containing:
                return VerifyResult(False, m, "monomial of the ideal lies in a pair")
            continue
        if mode == "decomposition":
            if len(containing) != 1:
                return VerifyResult(False, m, f"covered {len(containing)} times")
            continue
        dividing = [k for k, p in enumerate(pairs)
                    if all(a >= b for a, b in zip(m, p.shift))]
        expected = dividing[-1] if dividing else 0
        if containing != [expected]:
            return VerifyResult(
                False, m,
                f"prefix {expected + 1}: covered by pairs {containing}")
    return VerifyResult(True)


# -- back to ideals ------------------------------------------------------


def pairs_overlap(p, q):
    """Exact emptiness test for the intersection of two pair monomial sets."""
    for i, (u, v) in enumerate(zip(p.shift, q.shift)):
        in_p, in_q = i in p.face, i in q.face
        if not in_p and not in_q:
            if u != v:
                return False
        elif not in_p:
            if u < v:
                return False
        elif not in_q:
            if v < u:
                return False
    return True


def pair_component(pair, n):
    """The irreducible ideal <x_i^{u_i + 1} : i not in face>."""
    gens = []
    for i in range(n):
        if i not in pair.face:
            g = [0] * n
            g[i] = pair.shift[i] + 1
            gens.append(tuple(g))
    return MonomialIdeal(n, gens)


def decomposition_to_ideal(pairs, n, check_disjoint=True):
    """Intersect the irreducible ideals attached to the pairs.

    For an actual Stanley decomposition this recovers the ideal it
    decomposes.  check_disjoint rejects overlapping pair sets.
    """
    pairs = tuple(pairs)
    if not pairs:
        raise ValueError("need at least one pair")
    if check_disjoint:
        for p, q in combinations(pairs, 2):
            if pairs_overlap(p, q):
                raise OverlappingPairs(f"pairs {p} and {q} share a monomial")
    out = pair_component(pairs[0], n)
    for pair in pairs[1:]:
        out = out.intersect(pair_component(pair, n))
    return out

"""Face and quotient Hilbert polynomials against fiber counting."""

from itertools import product
from math import comb

import pytest

from toricreg import hilbert as hb
from toricreg import ideals as mi
from toricreg import variety as tv
from toricreg.errors import UnitIdeal
from toricreg.multipoly import GradedOrder, leading_coeff_positive, parse_poly
from toricreg.stanley import StanleyPair, stanley_filtration

P1 = tv.projective_space(1)
P2 = tv.projective_space(2)
P3 = tv.projective_space(3)
F2 = tv.hirzebruch(2)
PP = tv.product_projective(2, 1)

# doubled plane union a point: <x4^2> intersect <x1,x2,x3>
DPP_IDEAL = mi.MonomialIdeal(4, [(1, 0, 0, 2), (0, 1, 0, 2), (0, 0, 1, 2)])


def test_ring_polynomials():
    for d in range(1, 5):
        X = tv.projective_space(d)
        P = hb.ring_hilbert_polynomial(X)
        for t in range(8):
            assert P.evaluate((t,)) == comb(t + d, d)
    assert hb.ring_hilbert_polynomial(F2) == parse_poly("t1*t2 + t2^2 + t1 + 2*t2 + 1")
    assert hb.ring_hilbert_polynomial(tv.hirzebruch(4)) == parse_poly(
        "t1*t2 + 2*t2^2 + t1 + 3*t2 + 1")


def test_face_polynomials_p3():
    assert hb.face_hilbert_polynomial(P3, {0, 1, 2}) == parse_poly("1/2*t^2 + 3/2*t + 1")
    assert hb.face_hilbert_polynomial(P3, {3}) == parse_poly("1", nvars=1)
    # complement [n] is not a face: torsion, zero polynomial
    assert hb.face_hilbert_polynomial(P3, set()).is_zero()


def test_face_polynomial_degrees():
    for X in (P2, P3, F2, PP):
        everything = frozenset(range(X.n))
        for face in X.faces():
            sigma = everything - face
            poly = hb.face_hilbert_polynomial(X, sigma)
            assert poly.total_degree() == len(sigma) - X.r


def test_quotient_polynomial_fixtures():
    assert hb.quotient_hilbert_polynomial(P3, DPP_IDEAL) == parse_poly("t^2 + 2*t + 2")
    L = mi.MonomialIdeal(3, [(4, 0, 0), (3, 1, 0)])
    assert hb.quotient_hilbert_polynomial(P2, L) == parse_poly("3*t + 1")
    Pr = mi.MonomialIdeal(3, [(0, 1, 0)])
    assert hb.quotient_hilbert_polynomial(P2, Pr) == hb.face_hilbert_polynomial(P2, {0, 2})
    with pytest.raises(UnitIdeal):
        hb.quotient_hilbert_polynomial(P2, mi.MonomialIdeal.unit(3))


def test_binomial_identity_of_two_decompositions():
    # binom(t+2,2) + binom(t+1,2) + binom(t-2,0) equals the 7-term sum
    from toricreg.multipoly import binomial_in_t
    three = (binomial_in_t(1, 0, 2, 2) + binomial_in_t(1, 0, 1, 2)
             + binomial_in_t(1, 0, -2, 0))
    seven = (binomial_in_t(1, 0, 0, 0) + binomial_in_t(1, 0, -1, 0)
             + binomial_in_t(1, 0, -2, 0) + binomial_in_t(1, 0, 0, 1)
             + binomial_in_t(1, 0, -1, 1) + binomial_in_t(1, 0, 1, 2)
             + binomial_in_t(1, 0, 0, 2))
    assert three == seven
    assert three == hb.quotient_hilbert_polynomial(P3, DPP_IDEAL)


def test_decomposition_independence():
    # two different Stanley decompositions give the same polynomial
    first = (StanleyPair((0, 0, 0, 0), frozenset({0, 1, 2})),
             StanleyPair((0, 0, 0, 1), frozenset({0, 1, 2})),
             StanleyPair((0, 0, 0, 2), frozenset({3})))
    second = (StanleyPair((0, 0, 0, 0), frozenset({3})),
              StanleyPair((0, 0, 1, 0), frozenset({2})),
              StanleyPair((0, 0, 1, 1), frozenset({2})),
              StanleyPair((0, 1, 0, 0), frozenset({1, 2})),
              StanleyPair((0, 1, 0, 1), frozenset({1, 2})),
              StanleyPair((1, 0, 0, 0), frozenset({0, 1, 2})),
              StanleyPair((1, 0, 0, 1), frozenset({0, 1, 2})))
    assert hb.hilbert_polynomial_of_pairs(P3, first) == hb.hilbert_polynomial_of_pairs(P3, second)


def test_interpolation_agrees_with_fibers_deep():
    # 20 sampled deep points per variety
    from toricreg.variety import find_point_dominating
    for X in (P3, F2, PP):
        P = hb.ring_hilbert_polynomial(X)
        t0 = find_point_dominating(X, [X.variable_degree(i) for i in range(X.n)])
        samples = []
        for combo in product(range(5), repeat=X.r):
            samples.append(tuple(
                t0[j] + sum(combo[k] * X.nef_rays[k][j] for k in range(X.r))
                for j in range(X.r)))
            if len(samples) == 20:
                break
        for t in samples:
            assert P.evaluate(t) == mi.hilbert_function(X, mi.MonomialIdeal.zero(X.n), t)


def test_quotient_agrees_with_hilbert_function_deep():
    from itertools import combinations
    from toricreg.variety import find_point_dominating
    cases = [
        (P3, DPP_IDEAL),
        (P2, mi.MonomialIdeal(3, [(4, 0, 0), (3, 1, 0)])),
        (F2, mi.MonomialIdeal(4, [(1, 0, 1, 0)])),
        (F2, mi.MonomialIdeal(4, [(0, 1, 0, 1), (2, 0, 0, 0)])),
    ]
    for X, I in cases:
        P = hb.quotient_hilbert_polynomial(X, I)
        shifts = []
        for size in range(1, len(I.gens) + 1):
            for subset in combinations(I.gens, size):
                shifts.append(X.degree(tuple(max(col) for col in zip(*subset))))
        t0 = find_point_dominating(X, shifts)
        count = 0
        for combo in product(range(4), repeat=X.r):
            t = tuple(t0[j] + sum(combo[k] * X.nef_rays[k][j] for k in range(X.r))
                      for j in range(X.r))
            assert P.evaluate(t) == mi.hilbert_function(X, I, t), (X, I, t)
            count += 1
            if count >= 20:
                break


def test_quotient_degree_bound():
    import random
    rng = random.Random(31)
    for X in (P2, F2):
        for _ in range(30):
            gens = [tuple(rng.randint(0, 2) for _ in range(X.n))
                    for _ in range(rng.randint(1, 3))]
            I = mi.MonomialIdeal(X.n, gens)
            if I.is_unit():
                continue
            P = hb.quotient_hilbert_polynomial(X, I)
            assert P.total_degree() <= X.d


def test_leading_coefficient_positivity():
    # in positive-orthant coordinates every nonzero quotient polynomial
    # has a positive glex leading coefficient
    import random
    rng = random.Random(32)
    order = GradedOrder(2)
    for X in (F2, PP):
        assert all(X.nef_member(e) for e in [(1, 0), (0, 1)])
        for _ in range(25):
            gens = [tuple(rng.randint(0, 2) for _ in range(X.n))
                    for _ in range(rng.randint(1, 3))]
            I = mi.MonomialIdeal(X.n, gens)
            if I.is_unit():
                continue
            P = hb.quotient_hilbert_polynomial(X, I)
            if not P.is_zero():
                assert leading_coeff_positive(P, order), (X, I, P)
    # and for the other glex order too
    order21 = GradedOrder(2, (1, 0))
    P = hb.ring_hilbert_polynomial(PP)
    assert leading_coeff_positive(P, order21)


def test_torsion_quotient_polynomial_is_zero():
    # S/B is B-torsion
    B = mi.MonomialIdeal(2, [(1, 0), (0, 1)])
    assert hb.quotient_hilbert_polynomial(P1, B).is_zero()


def _fit_from_function(X, I, degree):
    """Independent oracle: fit a polynomial of the given total degree to
    Hilbert function values sampled deep in K, with its own elimination."""
    from fractions import Fraction
    from itertools import combinations as combos
    from toricreg.variety import find_point_dominating

    shifts = []
    for size in range(1, len(I.gens) + 1):
        for subset in combos(I.gens, size):
            shifts.append(X.degree(tuple(max(col) for col in zip(*subset))))
    t0 = find_point_dominating(X, shifts or [(0,) * X.r])
    monos = []

    def build(pos, rem, acc):
        if pos == X.r:
            monos.append(tuple(acc))
            return
        for k in range(rem + 1):
            acc[pos] = k
            build(pos + 1, rem - k, acc)
        acc[pos] = 0

    build(0, degree, [0] * X.r)
    grid = [()]
    for _ in range(X.r):
        grid = [g + (k,) for g in grid for k in range(degree + 1)]
    rows, rhs = [], []
    for lam in grid:
        p = tuple(t0[j] + sum(lam[k] * X.nef_rays[k][j] for k in range(X.r))
                  for j in range(X.r))
        rows.append([Fraction(
            __import__("math").prod(int(p[i]) ** e for i, e in enumerate(mono)))
            for mono in monos])
        rhs.append(Fraction(mi.hilbert_function(X, I, p)))
    # plain gaussian elimination, local to this oracle
    aug = [row + [r] for row, r in zip(rows, rhs)]
    ncols = len(monos)
    pivots, r = [], 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        aug[r] = [x / aug[r][c] for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    assert all(aug[i][ncols] == 0 for i in range(r, len(aug)))
    coeffs = {}
    for i, c in enumerate(pivots):
        coeffs[monos[c]] = aug[i][ncols]
    from toricreg.multipoly import MultiPoly
    return MultiPoly(X.r, coeffs)


def test_quotient_polynomial_against_direct_fit():
    import random
    rng = random.Random(33)
    for X in (P2, P3, F2):
        for _ in range(12):
            gens = [tuple(rng.randint(0, 2) for _ in range(X.n))
                    for _ in range(rng.randint(1, 3))]
            I = mi.MonomialIdeal(X.n, gens)
            if I.is_unit():
                continue
            via_stanley = hb.quotient_hilbert_polynomial(X, I)
            via_fit = _fit_from_function(X, I, X.d)
            assert via_stanley == via_fit, (X, I)

"""Exact integer linear algebra against brute force and numpy floats."""

import random

import numpy as np

from toricreg import intlinalg as il


def random_matrix(rng, m, n, lo=-6, hi=6):
    return il.as_int_matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)])


def test_smith_form_factorization_and_inverses():
    rng = random.Random(0)
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = random_matrix(rng, m, n)
        S, D, T, Sinv, Tinv = il.smith_normal_form(A)
        assert (S @ D @ T == A).all()
        assert (S @ Sinv == il.identity(m)).all()
        assert (T @ Tinv == il.identity(n)).all()
        for i in range(min(m, n)):
            for j in range(min(m, n)):
                if i != j:
                    assert D[i, j] == 0


def test_kernel_is_saturated_basis():
    rng = random.Random(1)
    for _ in range(200):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        A = random_matrix(rng, m, n)
        K = il.kernel_basis(A)
        assert K.shape[1] == n - il.rank(A)
        if K.shape[1]:
            assert not (A @ K).any()
        # saturated: the kernel columns extend to a basis of Z^n, so any
        # integer kernel vector is an integer combination; spot check by
        # brute force on a small box
        for x in _box_vectors(n, 2):
            vec = np.array(x, dtype=object)
            if not (A @ vec).any():
                sol = _solve_integer(K, vec)
                assert sol is not None, (A, x)


def _box_vectors(n, b):
    out = [()]
    for _ in range(n):
        out = [v + (k,) for v in out for k in range(-b, b + 1)]
    return out


def _solve_integer(K, vec):
    """Integer coordinates of vec in the column lattice of K, or None."""
    from fractions import Fraction
    cols = K.shape[1]
    if cols == 0:
        return () if not vec.any() else None
    rows = [[Fraction(int(K[i, j])) for j in range(cols)] for i in range(K.shape[0])]
    rhs = [Fraction(int(v)) for v in vec]
    # gaussian elimination
    aug = [row + [r] for row, r in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
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
    for i in range(r, len(aug)):
        if aug[i][cols] != 0:
            return None
    sol = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][cols]
    if any(s.denominator != 1 for s in sol):
        return None
    return tuple(int(s) for s in sol)


def test_hermite_form_is_lattice_canonical():
    B1 = il.as_int_matrix([[1, -2, 1, 0], [0, 1, 0, 1]])
    B2 = il.as_int_matrix([[1, 0, 1, 2], [0, 1, 0, 1]])
    assert (il.row_hermite_normal_form(B1) == il.row_hermite_normal_form(B2)).all()
    rng = random.Random(2)
    for _ in range(100):
        A = random_matrix(rng, 2, 4, -4, 4)
        if il.rank(A) < 2:
            continue
        U = il.as_int_matrix(rng.choice([[[1, 1], [0, 1]], [[0, 1], [1, 0]],
                                          [[1, 0], [3, 1]], [[-1, 2], [0, -1]]]))
        assert (il.row_hermite_normal_form(A) == il.row_hermite_normal_form(U @ A)).all()


def test_determinant_matches_float():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 4)
        A = random_matrix(rng, n, n, -5, 5)
        assert il.determinant(A) == round(np.linalg.det(A.astype(float)))


def test_unimodular_inverse_and_completion():
    U = il.unimodular_with_first_column((3, 1))
    assert tuple(U[:, 0]) == (3, 1)
    assert il.determinant(U) in (1, -1)
    Uinv = il.inverse_unimodular(U)
    assert (U @ Uinv == il.identity(2)).all()
    U = il.unimodular_with_first_column((2, 3, 5))
    assert tuple(U[:, 0]) == (2, 3, 5)
    assert il.determinant(U) in (1, -1)


def test_primitive():
    assert il.primitive((6, -4)) == (3, -2)
    assert il.primitive((0, 5)) == (0, 1)
    assert il.vec_gcd((0, 0)) == 0

"""Rational polyhedral cone helpers for H-represented cones {x : Wx >= 0}.

Only pointed cones at desk scale appear here: the nef cone of a smooth
projective toric variety and duals of degree cones.  Rays are found by
intersecting (r-1)-subsets of the defining hyperplanes, which is exact
and entirely adequate for the handful of inequalities we ever see.
"""

from itertools import combinations

import numpy as np

from . import intlinalg as il


def dedupe_rows(W):
    seen = []
    keys = set()
    for row in W:
        key = tuple(int(x) for x in row)
        if key not in keys and any(key):
            keys.add(key)
            seen.append(key)
    return np.array(seen, dtype=object) if seen else np.zeros((0, W.shape[1]), dtype=object)


def cone_rays(W, dim):
    """Primitive extreme rays of {x in R^dim : Wx >= 0}, sorted."""
    W = dedupe_rows(W)
    rays = set()
    if dim == 0:
        return ()
    subsets = combinations(range(W.shape[0]), dim - 1) if dim > 1 else [()]
    for subset in subsets:
        sub = W[list(subset)] if subset else np.zeros((0, dim), dtype=object)
        ker = il.kernel_basis(sub)
        if ker.shape[1] != 1:
            continue
        v = il.primitive(tuple(int(x) for x in ker[:, 0]))
        for cand in (v, tuple(-x for x in v)):
            prod = W @ np.array(cand, dtype=object)
            if all(x >= 0 for x in prod):
                rays.add(cand)
    return tuple(sorted(rays))


def is_pointed(W, dim):
    return il.rank(W) == dim


def interior_point(W, dim):
    """A lattice point with Wx strictly positive, or None if the cone
    is not full-dimensional."""
    rays = cone_rays(W, dim)
    if not rays:
        return None
    total = tuple(sum(col) for col in zip(*rays))
    prod = dedupe_rows(W) @ np.array(total, dtype=object)
    if any(x <= 0 for x in prod):
        return None
    return total


def strictly_positive_functional(vectors, dim):
    """An integer w with w . v > 0 for every v in vectors, or None.

    Such a w exists precisely when pos{vectors} is pointed; w is an
    interior point of the dual cone.
    """
    W = np.array([[int(x) for x in v] for v in vectors], dtype=object)
    return interior_point(W, dim)

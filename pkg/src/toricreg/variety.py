"""Smooth projective toric varieties from fan data.

A variety is built from its fan: rays b_1..b_n in Z^d and the maximal
cones of a simplicial complex on {1..n} (0-based internally).  The
grading matrix A (the Gale dual of the ray matrix) makes the Cox ring
S = k[x_1..x_n] a Z^r-graded polynomial ring with deg x_i = a_i, r = n-d.
The irrelevant ideal, the nef semigroup K and the coordinate changes
used elsewhere in the package all live here.
"""

import json
import re
from itertools import combinations

import numpy as np

from . import cones, intlinalg as il
from .errors import (
    NonPrimitiveRay,
    NotComplete,
    NotFullDimensional,
    NotPointed,
    NotSmooth,
    RaysNotSpanning,
    SearchExhausted,
    ParseError,
)


class Fan:
    """Rays plus maximal cones of a simplicial fan (0-based indices)."""

    def __init__(self, rays, max_cones):
        self.rays = tuple(tuple(int(x) for x in ray) for ray in rays)
        self.max_cones = tuple(sorted(
            {frozenset(int(i) for i in cone) for cone in max_cones},
            key=sorted))
        if not self.rays:
            raise ValueError("fan needs at least one ray")
        self.n = len(self.rays)
        self.d = len(self.rays[0])

    def __repr__(self):
        return f"Fan(n={self.n}, d={self.d}, facets={len(self.max_cones)})"


class UnimodularMap:
    """An invertible change of coordinates on Z^r, with its integer inverse."""

    def __init__(self, matrix):
        self.matrix = np.array([[int(x) for x in row] for row in matrix], dtype=object)
        det = il.determinant(self.matrix)
        if det not in (1, -1):
            raise ValueError(f"determinant {det} is not +-1")
        self.inverse = il.inverse_unimodular(self.matrix)

    def apply(self, v):
        return tuple(int(x) for x in self.matrix @ np.array(v, dtype=object))

    def apply_inverse(self, v):
        return tuple(int(x) for x in self.inverse @ np.array(v, dtype=object))

    def is_identity(self):
        return (self.matrix == il.identity(self.matrix.shape[0])).all()

    def __repr__(self):
        return f"UnimodularMap({self.matrix.tolist()})"


class ToricVariety:
    """Combinatorial model of a smooth projective toric variety.

    Immutable after construction; every method is pure.  Use
    build_variety() rather than calling this directly.
    """

    def __init__(self, fan, grading, delta, facet_data, nef_ineqs, nef_rays, positive_w):
        self.fan = fan
        self.n = fan.n
        self.d = fan.d
        self.r = fan.n - fan.d
        self.grading = grading              # tuple of r rows, each length n
        self.delta = delta                  # frozenset of frozensets
        self._facet_data = facet_data       # [(sigma_hat tuple, Minv)] per facet
        self.nef_ineqs = nef_ineqs
        self.nef_rays = nef_rays
        self.positive_w = positive_w        # w . a_i > 0 for every i
        self._face_poly_cache = {}

    # -- grading ------------------------------------------------------

    def variable_degree(self, i):
        """deg x_i as a vector in Z^r."""
        return tuple(row[i] for row in self.grading)

    def degree(self, u):
        """A . u for an exponent vector u."""
        return tuple(sum(row[i] * u[i] for i in range(self.n)) for row in self.grading)

    # -- fan combinatorics --------------------------------------------

    def faces(self):
        """All faces of the fan complex, smallest first, deterministic."""
        return sorted(self.delta, key=lambda s: (len(s), sorted(s)))

    def irrelevant_exponent(self, face):
        """Exponent vector of prod_{i not in face} x_i."""
        return tuple(0 if i in face else 1 for i in range(self.n))

    def irrelevant_generators(self):
        """Minimal generators of B: one per maximal cone."""
        return tuple(sorted(self.irrelevant_exponent(c) for c in self.fan.max_cones))

    # -- nef semigroup ------------------------------------------------

    def nef_member(self, v):
        """Whether v lies in K = intersection of the facet semigroups NA_sigma^."""
        v = np.array([int(x) for x in v], dtype=object)
        for _, minv in self._facet_data:
            if any(x < 0 for x in minv @ v):
                return False
        return True

    def nef_coordinates_unimodular(self):
        """Matrix of nef-cone rays as columns when they form a lattice basis,
        else None.  When not None, K = V . N^r exactly."""
        if len(self.nef_rays) != self.r:
            return None
        V = np.array(self.nef_rays, dtype=object).T
        if il.determinant(V) in (1, -1):
            return V
        return None

    def __repr__(self):
        return f"ToricVariety(n={self.n}, d={self.d}, r={self.r})"


def build_variety(fan, grading=None, assume_complete=False):
    """Validate a fan and assemble the toric variety it defines.

    grading: optional explicit r x n matrix A; it must satisfy the same
    exact sequence as the canonical Gale dual (checked).  When omitted,
    A is the Hermite-normal-form basis of the ray kernel, which makes
    the output reproducible across runs.
    """
    n, d = fan.n, fan.d
    if n <= d:
        raise RaysNotSpanning(f"need more rays ({n}) than the ambient dimension ({d})")
    for ray in fan.rays:
        if il.vec_gcd(ray) != 1:
            raise NonPrimitiveRay(f"ray {ray} is not primitive")
    ray_matrix = il.as_int_matrix(fan.rays)          # n x d
    if il.rank(ray_matrix) != d:
        raise RaysNotSpanning("rays do not span R^d")

    for cone in fan.max_cones:
        if len(cone) != d:
            raise NotSmooth(f"maximal cone {_show_face(cone)} does not have dimension {d}")
        det = il.determinant(ray_matrix[sorted(cone)])
        if det not in (1, -1):
            raise NotSmooth(f"cone {_show_face(cone)} has determinant {det}")

    if not assume_complete:
        _check_complete(fan, ray_matrix)

    canonical = il.row_hermite_normal_form(il.kernel_basis(ray_matrix.T).T)
    r = n - d
    if canonical.shape[0] != r:
        raise RaysNotSpanning("ray matrix kernel has unexpected rank")
    if grading is None:
        A = canonical
    else:
        A = il.as_int_matrix(grading)
        if A.shape != (r, n):
            raise ValueError(f"grading must be {r} x {n}")
        if (A @ ray_matrix).any():
            raise ValueError("grading does not annihilate the rays")
        if not (il.row_hermite_normal_form(A) == canonical).all():
            raise ValueError("grading rows do not span the full ray kernel")

    delta = set()
    for cone in fan.max_cones:
        for k in range(len(cone) + 1):
            delta.update(frozenset(s) for s in combinations(sorted(cone), k))
    delta = frozenset(delta)

    facet_data = []
    ineq_rows = []
    for cone in fan.max_cones:
        sigma_hat = tuple(i for i in range(n) if i not in cone)
        M = A[:, sigma_hat]
        det = il.determinant(M)
        if det not in (1, -1):
            raise NotSmooth(f"grading columns for {_show_face(set(sigma_hat))} are not unimodular")
        minv = il.inverse_unimodular(M)
        facet_data.append((sigma_hat, minv))
        ineq_rows.extend(tuple(int(x) for x in row) for row in minv)
    W = np.array(ineq_rows, dtype=object)

    if not cones.is_pointed(W, r):
        raise NotPointed("the nef cone contains a line")
    nef_rays = cones.cone_rays(W, r)
    interior = cones.interior_point(W, r)
    if interior is None:
        raise NotFullDimensional("the nef cone is not full-dimensional")

    w = cones.strictly_positive_functional(
        [tuple(A[j, i] for j in range(r)) for i in range(n)], r)
    if w is None:
        raise NotPointed("the degree cone pos{a_i} is not pointed")

    grading_rows = tuple(tuple(int(x) for x in row) for row in A)
    return ToricVariety(fan, grading_rows, delta, facet_data, W, nef_rays, w)


def _check_complete(fan, ray_matrix):
    """Facet pairing: every ridge lies in exactly two maximal cones whose
    opposite rays sit strictly on opposite sides of the ridge span."""
    d = fan.d
    ridge_map = {}
    for cone in fan.max_cones:
        for ridge in combinations(sorted(cone), d - 1):
            ridge_map.setdefault(ridge, []).append(cone)
    for ridge, facets in ridge_map.items():
        if len(facets) != 2:
            raise NotComplete(
                f"ridge {_show_face(set(ridge))} lies in {len(facets)} maximal cones")
        sub = ray_matrix[list(ridge)] if ridge else np.zeros((0, d), dtype=object)
        ker = il.kernel_basis(sub)
        if ker.shape[1] != 1:
            raise NotComplete(f"ridge {_show_face(set(ridge))} is degenerate")
        nu = ker[:, 0]
        sides = []
        for cone in facets:
            (extra,) = set(cone) - set(ridge)
            sides.append(sum(int(a) * int(b) for a, b in zip(nu, ray_matrix[extra])))
        if sides[0] * sides[1] >= 0:
            raise NotComplete(
                f"cones across ridge {_show_face(set(ridge))} do not point both ways")


def _show_face(face):
    return "{" + ",".join(str(i + 1) for i in sorted(face)) + "}"


def is_face(X, sigma_hat):
    """Membership of a subset of {1..n} (0-based) in the fan complex.

    Equivalently, K is contained in NA_sigma for sigma the complement.
    """
    return frozenset(sigma_hat) in X.delta


def nef_member(X, v):
    return X.nef_member(v)


def positive_orthant_change(X, max_multiple=512):
    """A unimodular U with every column in K, so U(N^r) sits inside K.

    Identity when the positive orthant is already contained in K.
    Built by extending a primitive interior vector of K to a lattice
    basis and pushing the other basis vectors into K along it.
    """
    r = X.r
    basis = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    if all(X.nef_member(e) for e in basis):
        return UnimodularMap(il.identity(r))
    if not X.nef_rays:
        raise NotFullDimensional("the nef cone has no rays")
    v1 = il.primitive(tuple(sum(col) for col in zip(*X.nef_rays)))
    U = il.unimodular_with_first_column(v1)
    for j in range(1, r):
        col = tuple(int(x) for x in U[:, j])
        for steps in range(max_multiple + 1):
            if X.nef_member(tuple(c + steps * w for c, w in zip(col, v1))):
                U[:, j] = [c + steps * w for c, w in zip(col, v1)]
                break
        else:
            raise SearchExhausted("could not push a basis vector into K")
    mapping = UnimodularMap(U)
    assert all(X.nef_member(tuple(int(x) for x in U[:, j])) for j in range(r))
    return mapping


def nef_functional(X):
    """An integer functional strictly positive on K minus the origin."""
    w = cones.strictly_positive_functional(X.nef_rays, X.r)
    if w is None:
        raise NotPointed("the nef cone is not pointed")
    return w


def find_point_dominating(X, vectors, max_multiple=512):
    """Smallest point p with p - s in K for every s in vectors.

    Smallest means: minimal value of a fixed functional positive on K,
    ties broken by lexicographic order, so the answer is canonical.
    """
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if not vectors:
        return (0,) * X.r
    if not X.nef_rays:
        raise NotFullDimensional("the nef cone has no rays")
    u = il.primitive(tuple(sum(col) for col in zip(*X.nef_rays)))
    phi = nef_functional(X)

    def dominates(p):
        return all(X.nef_member(tuple(a - b for a, b in zip(p, s))) for s in vectors)

    scale = None
    for steps in range(max_multiple + 1):
        cand = tuple(steps * x for x in u)
        if dominates(cand):
            scale = steps
            break
    if scale is None:
        raise SearchExhausted("no multiple of the interior direction dominates")
    c0 = tuple(scale * x for x in u)

    def dot(a, b):
        return sum(int(x) * int(y) for x, y in zip(a, b))

    base = vectors[0]
    budget = dot(phi, tuple(a - b for a, b in zip(c0, base)))
    min_phi_ray = min(dot(phi, ray) for ray in X.nef_rays)
    max_ray_inf = max(max(abs(x) for x in ray) for ray in X.nef_rays)
    box = 0 if budget <= 0 else (max_ray_inf * budget + min_phi_ray - 1) // min_phi_ray
    if (2 * box + 1) ** X.r > 5_000_000:
        raise SearchExhausted("minimizer box is too large to enumerate")

    best = (dot(phi, c0), c0)
    grid = [()]
    for _ in range(X.r):
        grid = [g + (k,) for g in grid for k in range(-box, box + 1)]
    for k in grid:
        if not X.nef_member(k):
            continue
        cand = tuple(a + b for a, b in zip(base, k))
        if dominates(cand):
            key = (dot(phi, cand), cand)
            if key < best:
                best = key
    return best[1]


def find_c(X, max_multiple=512):
    """A canonical c with c - deg(x_i) in K for every variable."""
    degrees = [X.variable_degree(i) for i in range(X.n)]
    return find_point_dominating(X, degrees, max_multiple=max_multiple)


def with_grading(X, grading):
    """Same fan, different (valid) choice of Gale dual."""
    return build_variety(X.fan, grading=grading, assume_complete=True)


# -- named varieties and files ----------------------------------------


def projective_space(d):
    """P^d with the standard grading: A = [1 ... 1]."""
    if d < 1:
        raise ValueError("projective space needs d >= 1")
    rays = [[1 if j == i else 0 for j in range(d)] for i in range(d)]
    rays.append([-1] * d)
    max_cones = [c for c in combinations(range(d + 1), d)]
    return build_variety(Fan(rays, max_cones))


def product_projective(a, b):
    """P^a x P^b; variables 1..a+1 grade (1,0), the rest (0,1)."""
    if a < 1 or b < 1:
        raise ValueError("factors need dimension >= 1")
    d = a + b
    rays = []
    for i in range(a):
        rays.append([1 if j == i else 0 for j in range(d)])
    rays.append([-1] * a + [0] * b)
    for i in range(b):
        rays.append([1 if j == a + i else 0 for j in range(d)])
    rays.append([0] * a + [-1] * b)
    first = list(combinations(range(a + 1), a))
    second = list(combinations(range(a + 1, a + b + 2), b))
    max_cones = [tuple(sorted(c1 + c2)) for c1 in first for c2 in second]
    return build_variety(Fan(rays, max_cones))


def hirzebruch(ell):
    """The Hirzebruch surface F_ell with its textbook grading."""
    if ell < 0:
        raise ValueError("twist must be nonnegative")
    rays = [[1, 0], [0, 1], [-1, ell], [0, -1]]
    max_cones = [(0, 1), (1, 2), (2, 3), (0, 3)]
    grading = [[1, -ell, 1, 0], [0, 1, 0, 1]]
    return build_variety(Fan(rays, max_cones), grading=grading)


_NAME = re.compile(r"^(P|PxP|Hirzebruch)\(([-\d,\s]+)\)$")


def variety_from_name(name):
    m = _NAME.match(name.strip())
    if not m:
        raise ParseError(f"unknown variety name {name!r}")
    args = [int(x) for x in m.group(2).split(",")]
    kind = m.group(1)
    if kind == "P" and len(args) == 1:
        return projective_space(args[0])
    if kind == "PxP" and len(args) == 2:
        return product_projective(args[0], args[1])
    if kind == "Hirzebruch" and len(args) == 1:
        return hirzebruch(args[0])
    raise ParseError(f"bad arguments in variety name {name!r}")


def variety_from_dict(data, assume_complete=False):
    """Build from the JSON file schema: 1-based ray indices in max_cones."""
    try:
        rays = data["rays"]
        max_cones = [[int(i) - 1 for i in cone] for cone in data["max_cones"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"variety file is missing {exc}") from exc
    grading = data.get("grading")
    return build_variety(Fan(rays, max_cones), grading=grading,
                         assume_complete=assume_complete)


def load_variety(source, assume_complete=False):
    """Accept a named variety, a JSON file path, or a parsed dict."""
    if isinstance(source, dict):
        return variety_from_dict(source, assume_complete)
    if _NAME.match(source.strip()):
        return variety_from_name(source)
    try:
        with open(source, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read variety file {source!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"variety file {source!r} is not valid JSON: {exc}") from exc
    return variety_from_dict(data, assume_complete)


def variety_to_dict(X):
    return {
        "rays": [list(ray) for ray in X.fan.rays],
        "max_cones": [[i + 1 for i in sorted(c)] for c in X.fan.max_cones],
        "grading": [list(row) for row in X.grading],
    }

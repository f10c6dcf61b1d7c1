"""Regularity-bound regions: upward-closed subsets of Z^r under K.

The two theorems produce subsets of reg(S/I) of the shape
union_j (g_j + K) intersected over pairs; this module realizes those
intersections.  The baselines reg(S_sigma) are never computed from
local cohomology: they are explicit assumptions, by default K itself
(0-regularity of every face ring), which is correct for projective
spaces and their products.
"""

from dataclasses import dataclass, field

import numpy as np

from . import intlinalg as il
from .errors import (
    FiltrationInvalid,
    MissingBaseline,
    NoRepresentation,
    NoSaturatedIdeal,
    Unsupported,
)
from .ideals import is_b_saturated
from .stanley import verify_stanley
from .variety import find_c


class KUpset:
    """A finite union of translates g + K with minimal generator set."""

    def __init__(self, X, generators):
        self.X = X
        self.generators = _minimal_generators(X, generators)
        self.coordinate_mode = X.nef_coordinates_unimodular() is not None

    def contains(self, p):
        p = tuple(int(x) for x in p)
        return any(
            self.X.nef_member(tuple(a - b for a, b in zip(p, g)))
            for g in self.generators)

    def translate(self, v):
        return KUpset(self.X, [tuple(a + b for a, b in zip(g, v)) for g in self.generators])

    def intersect(self, other):
        return upset_intersect(self, other)

    def __eq__(self, other):
        if not isinstance(other, KUpset):
            return NotImplemented
        return self.X is other.X and self.generators == other.generators

    def __repr__(self):
        return f"KUpset({format_upset(self)!r})"


class LazyIntersection:
    """Intersection of upsets over a non-simplicial K: membership only."""

    def __init__(self, parts):
        self.parts = tuple(parts)

    def contains(self, p):
        return all(part.contains(p) for part in self.parts)

    @property
    def generators(self):
        raise Unsupported(
            "minimal generators of intersections need a simplicial unimodular K")

    def intersect(self, other):
        others = other.parts if isinstance(other, LazyIntersection) else (other,)
        return LazyIntersection(self.parts + tuple(others))


def _minimal_generators(X, generators):
    # K is pointed, so distinct generators never dominate each other mutually
    gens = sorted(set(tuple(int(x) for x in g) for g in generators))
    return tuple(
        g for g in gens
        if not any(
            h != g and X.nef_member(tuple(a - b for a, b in zip(g, h)))
            for h in gens))


def upset_intersect(a, b):
    """Intersection of two K-upsets.

    With K unimodular simplicial, (g + K) cap (h + K) = join(g, h) + K
    where the join is the coordinatewise max in K-ray coordinates;
    intersections of unions distribute over the joins.  Otherwise a
    lazy membership-only object is returned.
    """
    if isinstance(a, LazyIntersection) or isinstance(b, LazyIntersection):
        return LazyIntersection((a, b)) if not isinstance(a, LazyIntersection) else a.intersect(b)
    X = a.X
    V = X.nef_coordinates_unimodular()
    if V is None:
        return LazyIntersection((a, b))
    Vinv = il.inverse_unimodular(V)
    joins = []
    for g in a.generators:
        for h in b.generators:
            cg = Vinv @ np.array(g, dtype=object)
            ch = Vinv @ np.array(h, dtype=object)
            join = V @ np.array([max(x, y) for x, y in zip(cg, ch)], dtype=object)
            joins.append(tuple(int(x) for x in join))
    return KUpset(X, joins)


@dataclass
class RegularityAssumption:
    """Assumed subsets of reg(S_sigma) per face ring.

    The default assumes each face ring with sigma^ in the fan is
    0-regular (baseline K anchored at the origin).  Anything else must
    be supplied explicitly; asking for a missing baseline raises.
    """

    baselines: dict = field(default_factory=dict)
    label: str = "default-K"

    def baseline(self, X, sigma):
        sigma = frozenset(sigma)
        if sigma in self.baselines:
            return self.baselines[sigma]
        sigma_hat = frozenset(range(X.n)) - sigma
        if sigma_hat in X.delta:
            return KUpset(X, [(0,) * X.r])
        raise MissingBaseline(
            f"no regularity baseline for face ring on variables "
            f"{sorted(i + 1 for i in sigma)} (complement is not a face)")


def reg_bound_from_filtration(X, I, filt, assume=None, check=True):
    """Theorem-level bound: intersect deg(x^u_i) + baseline(sigma_i).

    For B-saturated I the intersection may skip pairs whose face
    complement is off the fan.  The filtration is verified first.
    """
    assume = assume or RegularityAssumption()
    filt = tuple(filt)
    if check:
        result = verify_stanley(I, filt, mode="filtration")
        if not result:
            raise FiltrationInvalid(
                f"not a Stanley filtration for the ideal: {result.reason}")
    saturated = is_b_saturated(I, X)
    out = None
    for pair in filt:
        sigma_hat = frozenset(range(X.n)) - pair.face
        if saturated and sigma_hat not in X.delta:
            continue
        part = assume.baseline(X, pair.face).translate(X.degree(pair.shift))
        out = part if out is None else upset_intersect(out, part)
    if out is None:
        raise FiltrationInvalid("no pair of the filtration is supported on the fan")
    return out


def reg_bound_from_polynomial(X, P, assume=None):
    """Uniform bound (m-1)c + intersection of the face baselines,
    m the Gotzmann number of P."""
    from .enumeration import gotzmann_number  # deferred: enumeration imports hilbert

    assume = assume or RegularityAssumption()
    try:
        m = gotzmann_number(X, P)
    except NoRepresentation as exc:
        raise NoSaturatedIdeal(
            "no B-saturated ideal realizes this Hilbert polynomial") from exc
    c = find_c(X)
    out = None
    for face in X.faces():
        sigma = frozenset(range(X.n)) - face
        part = assume.baseline(X, sigma)
        out = part if out is None else upset_intersect(out, part)
    shift = tuple((m - 1) * x for x in c)
    if isinstance(out, LazyIntersection):
        raise Unsupported("uniform bound needs a simplicial unimodular K")
    return out.translate(shift)


def format_upset(upset, assumption=None):
    gens = "{" + ",".join(
        "(" + ",".join(str(x) for x in g) + ")" for g in upset.generators) + "}"
    text = f"{gens} + K"
    if assumption is not None:
        text += f"  [baseline assumption: {assumption.label}]"
    return text


def upset_to_dict(upset, assumption=None):
    return {
        "generators": [list(g) for g in upset.generators],
        "assumed_baselines": (assumption.label if assumption else "default-K"),
    }

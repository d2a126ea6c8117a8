"""Graded point semigroups of a lattice polytope.

Two monoids matter here: the lattice points of all dilates, graded by the
dilation degree, and the ideal of points interior to the cone.  A point of
the ideal reduces by peeling off degree-one points while staying in the
ideal; the least degree reachable that way (its reduced degree) equals its
own degree exactly when the point is an irreducible generator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .cone import GradedPoint, ReductionWitness, cone_over, cone_slice
from .exactmath import vsub
from .polytope import Polytope


@dataclass(frozen=True)
class BoundClass:
    """The sharpest general degree bound that applies to a polytope."""

    bound: int
    reason: str


@dataclass(frozen=True)
class GeneratorReport:
    """Minimal generators of the interior ideal plus summary data."""

    generators: tuple            # GradedPoints, sorted by (degree, position)
    degree_histogram: tuple      # ((degree, count), ...) sorted
    max_degree: int              # largest generator degree == max reduced deg
    bound: BoundClass

    def degrees(self) -> tuple:
        return tuple(d for d, _ in self.degree_histogram)


def _lattice_set(P: Polytope, k: int) -> frozenset:
    key = ("lattice_set", k)
    hit = P._cache.get(key)
    if hit is None:
        hit = frozenset(P.lattice_points(k))
        P._cache[key] = hit
    return hit


def _interior_set(P: Polytope, k: int) -> frozenset:
    key = ("interior_set", k)
    hit = P._cache.get(key)
    if hit is None:
        hit = frozenset(P.interior_lattice_points(k))
        P._cache[key] = hit
    return hit


def degree_one_points(P: Polytope) -> tuple:
    """The height-one graded points: lattice points of the polytope itself."""
    return cone_slice(cone_over(P), 1)


def semigroup_contains(P: Polytope, y: GradedPoint) -> bool:
    """Membership in the full graded semigroup."""
    if y.degree < 0:
        return False
    if y.degree == 0:
        return not any(y.position)
    return y.position in _lattice_set(P, y.degree)


def ideal_contains(P: Polytope, y: GradedPoint) -> bool:
    """Membership in the interior ideal."""
    return y.degree >= 1 and y.position in _interior_set(P, y.degree)


def _require_ideal(P: Polytope, y: GradedPoint) -> None:
    if not ideal_contains(P, y):
        raise ValueError(
            f"point {y.position} at degree {y.degree} is not interior to"
            " the cone over the polytope")


def is_irreducible(P: Polytope, y: GradedPoint) -> bool:
    """No way to split off a degree-one point and stay in the ideal.

    Peeling a single degree-one point is exact: in a splitting
    ``y = z + u_1 + ... + u_j`` every partial sum over ``z`` is still
    interior (adding cone points to an interior point stays interior), so
    some single ``u`` already witnesses reducibility.
    """
    _require_ideal(P, y)
    k = y.degree
    if k == 1:
        return True
    interior = _interior_set(P, k - 1)
    return not any(vsub(y.position, u) in interior
                   for u in P.lattice_points(1))


def reduced_degree(P: Polytope, y: GradedPoint
                   ) -> Tuple[int, ReductionWitness]:
    """Least degree of an interior part when ``y`` splits into an interior
    point plus degree-one points.

    Breadth-first peeling of degree-one points, level by level; every
    intermediate remainder of a valid splitting is itself interior, so
    searching only interior states is exhaustive.  Returns the value and a
    witness whose interior part is the lexicographically least at that
    value, so the result is deterministic.
    """
    _require_ideal(P, y)
    k = y.degree
    ones = P.lattice_points(1)
    level = {y.position: None}
    levels = [level]
    depth = 0
    while depth < k - 1:
        interior = _interior_set(P, k - depth - 1)
        nxt: Dict[tuple, tuple] = {}
        for s in sorted(level):
            for u in ones:
                t = vsub(s, u)
                if t in interior and t not in nxt:
                    nxt[t] = (s, u)
        if not nxt:
            break
        levels.append(nxt)
        level = nxt
        depth += 1
    z_pos = min(level)
    value = k - depth
    parts = []
    cur = z_pos
    for j in range(depth, 0, -1):
        s, u = levels[j][cur]
        parts.append(GradedPoint(u, 1))
        cur = s
    parts.sort(key=lambda p: p.position)
    witness = ReductionWitness(GradedPoint(z_pos, value), tuple(parts))
    if witness.total() != y:
        raise AssertionError("witness reconstruction failed")
    return value, witness


def reduced_degree_oracle(P: Polytope, y: GradedPoint) -> int:
    """Independent recomputation of the reduced degree.

    Tries every multiset of degree-one points from largest to smallest
    size and tests the remainder with facet-form classification instead of
    point-set lookups.  Exponential; meant for small cross-checks only.
    """
    _require_ideal(P, y)
    k = y.degree
    ones = P.lattice_points(1)
    for j in range(k - 1, 0, -1):
        for combo in itertools.combinations_with_replacement(ones, j):
            z = y.position
            for u in combo:
                z = vsub(z, u)
            if P.classify_point(z, scale=k - j) == "interior":
                return k - j
    return k


def degree_bound(P: Polytope) -> BoundClass:
    """The sharpest applicable general bound on reduced degrees."""
    from .simplex import is_empty_simplex

    d = P.dim
    if is_empty_simplex(P) and d >= 1:
        return BoundClass(d + 1, "empty simplex")
    if d >= 2 and P.interior_lattice_points(1):
        return BoundClass(d - 1, "has an interior lattice point")
    return BoundClass(max(d, 1), "not an empty simplex")


def irreducible_generators(P: Polytope) -> GeneratorReport:
    """All irreducible points of the interior ideal.

    Every point of the ideal reduces to degree at most ``dim + 1``, so the
    scan over degrees ``1 .. dim + 1`` is exhaustive.
    """
    hit = P._cache.get("generator_report")
    if hit is not None:
        return hit
    gens = []
    for k in range(1, P.dim + 2):
        for p in P.interior_lattice_points(k):
            y = GradedPoint(p, k)
            if is_irreducible(P, y):
                gens.append(y)
    gens.sort(key=lambda g: (g.degree, g.position))
    hist: Dict[int, int] = {}
    for g in gens:
        hist[g.degree] = hist.get(g.degree, 0) + 1
    report = GeneratorReport(
        generators=tuple(gens),
        degree_histogram=tuple(sorted(hist.items())),
        max_degree=max(g.degree for g in gens),
        bound=degree_bound(P),
    )
    P._cache["generator_report"] = report
    return report


def reduced_degree_values(P: Polytope) -> tuple:
    """The set of reduced degrees attained over the whole ideal: exactly
    the degrees of the irreducible generators."""
    return irreducible_generators(P).degrees()


def max_reduced_degree(P: Polytope) -> int:
    return irreducible_generators(P).max_degree


def is_irreducible_full(P: Polytope, y: GradedPoint) -> bool:
    """Irreducibility of an interior point under the full graded semigroup.

    Here the subtracted element may be *any* lattice point of the cone with
    degree between 1 and ``y.degree - 1`` — not merely a sum of degree-one
    points.  ``y`` is irreducible in this stronger sense when no such
    subtraction leaves an interior remainder.  The scan walks the interior
    slices (small) for the remainder and tests the complement against the
    full lattice slice (large) by set membership.
    """
    _require_ideal(P, y)
    k = y.degree
    for low in range(1, k):
        lattice = _lattice_set(P, k - low)
        for z in P.interior_lattice_points(low):
            if vsub(y.position, z) in lattice:
                return False
    return True


def full_generators(P: Polytope) -> GeneratorReport:
    """Minimal generators of the interior ideal under the full semigroup
    of graded lattice points.

    Because subtracting sums of degree-one points is a special case of
    subtracting arbitrary positive-degree points, these generators form a
    subset of :func:`irreducible_generators`, so their degrees are also
    capped by ``dim + 1`` and the scan over degrees ``1 .. dim + 1`` is
    exhaustive.  The two reports coincide exactly when every graded lattice
    point splits into degree-one summands (see :func:`idp_check`).
    """
    hit = P._cache.get("full_generator_report")
    if hit is not None:
        return hit
    gens = []
    for k in range(1, P.dim + 2):
        for p in P.interior_lattice_points(k):
            y = GradedPoint(p, k)
            if is_irreducible_full(P, y):
                gens.append(y)
    gens.sort(key=lambda g: (g.degree, g.position))
    hist: Dict[int, int] = {}
    for g in gens:
        hist[g.degree] = hist.get(g.degree, 0) + 1
    report = GeneratorReport(
        generators=tuple(gens),
        degree_histogram=tuple(sorted(hist.items())),
        max_degree=max(g.degree for g in gens),
        bound=degree_bound(P),
    )
    P._cache["full_generator_report"] = report
    return report


def idp_check(P: Polytope, kmax: Optional[int] = None
              ) -> Tuple[bool, Optional[GradedPoint]]:
    """Is every degree-``k`` semigroup element a sum of ``k`` degree-one
    elements, for all ``k`` up to ``kmax``?

    With ``kmax=None`` the check runs up to ``max(dim, 2)``, which is
    conclusive: above that degree a splitting always exists.  Returns the
    verdict and the first failing point, if any.
    """
    if kmax is None:
        kmax = max(P.dim, 2)
    if kmax < 2:
        raise ValueError("kmax must be at least 2")
    ones = P.lattice_points(1)
    for k in range(2, kmax + 1):
        lat = _lattice_set(P, k - 1)
        for p in P.lattice_points(k):
            if not any(vsub(p, u) in lat for u in ones):
                return False, GradedPoint(p, k)
    return True, None

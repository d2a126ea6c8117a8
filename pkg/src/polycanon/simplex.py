"""Simplex-specific machinery: barycentric coordinates, emptiness and
unimodularity tests, normalized volume, and fast enumeration of interior
cone slices via a half-open fundamental domain."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .cone import GradedPoint, ReductionWitness
from .exactmath import (
    as_matrix,
    det_bareiss,
    smith_normal_form,
    solve_rational,
    transpose,
    vsub,
)
from .polytope import Polytope


@dataclass(frozen=True)
class BarycentricCoords:
    """Coefficients of a graded point over the lifted simplex vertices,
    listed in the simplex's sorted vertex order.  The coefficients of a
    point of degree ``k`` sum to ``k``."""

    coefficients: tuple

    def all_positive(self) -> bool:
        return all(c > 0 for c in self.coefficients)


def _require_simplex(P: Polytope) -> None:
    if not P.is_simplex():
        raise ValueError("this operation needs a simplex")


def barycentric(P: Polytope, y: GradedPoint) -> BarycentricCoords:
    """Solve ``y = sum(coeff_i * (v_i, 1))`` exactly; unique for simplices.

    Raises ``ValueError`` when ``y`` is outside the linear span of the
    lifted vertices.
    """
    _require_simplex(P)
    lifted = [v + (1,) for v in P.vertices]
    sol = solve_rational(transpose(lifted), y.lifted)
    if sol is None:
        raise ValueError(f"{y} is not in the span of the lifted simplex")
    return BarycentricCoords(sol)


def unit_box_decomposition(P: Polytope, y: GradedPoint) -> ReductionWitness:
    """Split an interior graded point over a simplex into an interior part
    with all barycentric coefficients in ``(0, 1]`` plus lifted vertices.

    The interior part has degree at most ``dim + 1``, which is what caps
    the reduced degree of every interior point.
    """
    coeffs = barycentric(P, y).coefficients
    if not all(c > 0 for c in coeffs):
        raise ValueError(f"{y} is not in the interior of the simplex cone")
    lifted = [v + (1,) for v in P.vertices]
    counts = [math.ceil(c) - 1 for c in coeffs]
    z = list(y.lifted)
    parts = []
    for v, c in zip(lifted, counts, strict=True):
        for j in range(len(z)):
            z[j] -= c * v[j]
        parts.extend([GradedPoint(v[:-1], 1)] * c)
    parts.sort(key=lambda p: p.position)
    return ReductionWitness(GradedPoint.from_lifted(z), tuple(parts))


def is_empty_simplex(P: Polytope) -> bool:
    """A simplex whose only lattice points are its vertices."""
    return P.is_simplex() and len(P.lattice_points(1)) == len(P.vertices)


def is_unimodular(P: Polytope) -> bool:
    """A simplex of normalized volume one in the lattice of its hull."""
    if not P.is_simplex():
        return False
    lifted = [v + (1,) for v in P.vertices]
    S, _, _ = smith_normal_form(lifted)
    return all(S[i][i] == 1 for i in range(len(lifted)))


def normalized_volume(P: Polytope) -> int:
    """Normalized volume of a simplex: the index of the lattice spanned by
    its edge vectors inside the lattice of its affine hull."""
    _require_simplex(P)
    if P.dim == 0:
        return 1
    q0 = P._fd_vertices[0]
    edges = [vsub(q, q0) for q in P._fd_vertices[1:]]
    return abs(det_bareiss(edges))


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class SimplexConeSlicer:
    """Enumerates interior lattice points of a simplicial cone by degree.

    Given affinely independent lattice points, the cone over them placed at
    height one has the lifted points as generators.  Every lattice point of
    the open cone is uniquely a point of the half-open box
    ``{sum t_i * w_i : 0 < t_i <= 1}`` plus a nonnegative integer
    combination of the generators, so each degree slice is enumerated in
    time proportional to its size.
    """

    def __init__(self, points: Sequence) -> None:
        pts = as_matrix(points)
        if not pts:
            raise ValueError("need at least one point")
        self.lifted = tuple(p + (1,) for p in pts)
        n = len(self.lifted)
        S, U, _ = smith_normal_form(self.lifted)
        diag = [S[i][i] for i in range(n)] if len(S[0]) >= n else [0]
        if any(d == 0 for d in diag):
            raise ValueError("points are not affinely independent")
        reps = []
        for residues in itertools.product(*[range(d) for d in diag]):
            mu = [Fraction(r, d) for r, d in zip(residues, diag)]
            a = [
                sum(mu[i] * U[i][j] for i in range(n))
                for j in range(n)
            ]
            t = []
            for x in a:
                fr = x - math.floor(x)
                t.append(fr if fr > 0 else Fraction(1))
            y = [Fraction(0)] * len(self.lifted[0])
            for ti, w in zip(t, self.lifted):
                for j, wj in enumerate(w):
                    y[j] += ti * wj
            if any(c.denominator != 1 for c in y):
                raise AssertionError("fundamental-domain point not integral")
            point = tuple(int(c) for c in y)
            reps.append((point[-1], point))
        reps.sort()
        self._reps = reps

    def interior_points(self, degree: int) -> list:
        """Lifted interior cone points of the given degree, sorted."""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        out = []
        n = len(self.lifted)
        for h, base in self._reps:
            extra = degree - h
            if extra < 0:
                continue
            for comb in _compositions(extra, n):
                y = list(base)
                for c, w in zip(comb, self.lifted):
                    if c:
                        for j, wj in enumerate(w):
                            y[j] += c * wj
                out.append(tuple(y))
        out.sort()
        return out


def cone_interior_slice(points: Sequence, degree: int) -> list:
    """One-shot interior slice of the cone over a point set at height one."""
    return SimplexConeSlicer(points).interior_points(degree)

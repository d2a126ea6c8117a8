"""The graded cone over a lattice polytope and its lattice-point semigroups.

Placing a polytope ``P`` in ``Z^m`` at height one and coning over it yields
a cone in ``Z^(m+1)`` whose lattice points at height ``k`` are exactly the
lattice points of the ``k``-th dilate of ``P``.  The last coordinate of a
graded point is called its degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactmath import dot, gcd_vector, vadd
from .polytope import Polytope


@dataclass(frozen=True)
class GradedPoint:
    """A lattice point of the graded cone: base-space position plus degree."""

    position: tuple
    degree: int

    @property
    def lifted(self) -> tuple:
        return self.position + (self.degree,)

    @classmethod
    def from_lifted(cls, y: Sequence[int]) -> "GradedPoint":
        y = tuple(y)
        return cls(position=y[:-1], degree=y[-1])


@dataclass(frozen=True)
class ReductionWitness:
    """A decomposition ``y = interior_part + sum(parts)`` where every part
    is a degree-one semigroup point."""

    interior_part: GradedPoint
    parts: tuple

    def total(self) -> GradedPoint:
        pos = self.interior_part.position
        deg = self.interior_part.degree
        for p in self.parts:
            pos = vadd(pos, p.position)
            deg += p.degree
        return GradedPoint(pos, deg)


class GradedCone:
    """Supporting data for the cone over ``base x {1}``.

    * ``support_forms``: homogeneous inequalities ``g . (x, t) >= 0`` that,
      together with the span equations and ``t >= 0``, cut out the cone.
      Each comes from a facet ``n . x <= o`` of the base as ``g = (-n, o)``.
    * ``span_equations``: homogeneous equations ``e . (x, t) == 0`` cutting
      out the linear span (empty when the base is full-dimensional).
    """

    def __init__(self, base: Polytope):
        self.base = base
        self.ambient_dim = base.ambient_dim + 1
        self.dim = base.dim + 1
        forms = []
        for f in base.facets:
            g = tuple(-a for a in f.normal) + (f.offset,)
            forms.append(g)
        self.support_forms = tuple(sorted(forms))
        eqs = []
        chart = base._chart
        for col in chart.comp_cols:
            e = tuple(col) + (-dot(col, chart.origin),)
            g = gcd_vector(e)
            if g > 1:
                e = tuple(a // g for a in e)
            if e < tuple(-a for a in e):
                e = tuple(-a for a in e)
            eqs.append(e)
        self.span_equations = tuple(sorted(eqs))

    def membership(self, point: GradedPoint) -> str:
        """Classify a graded point: ``"interior"`` (relative interior of the
        cone), ``"boundary"`` or ``"outside"``."""
        y = point.lifted
        if not any(y):
            return "boundary"
        for e in self.span_equations:
            if dot(e, y) != 0:
                return "outside"
        if point.degree < 0:
            return "outside"
        on_boundary = point.degree == 0
        for g in self.support_forms:
            v = dot(g, y)
            if v < 0:
                return "outside"
            if v == 0:
                on_boundary = True
        return "boundary" if on_boundary else "interior"

    def contains(self, point: GradedPoint) -> bool:
        return self.membership(point) != "outside"


def cone_over(P: Polytope) -> GradedCone:
    C = P._cache.get("cone")
    if C is None:
        C = GradedCone(P)
        P._cache["cone"] = C
    return C


def cone_slice(C: GradedCone, degree: int,
               interior_only: bool = False) -> tuple:
    """Graded cone points of the given degree, sorted by position.

    With ``interior_only`` the points of the relative interior of the cone
    are returned; at degree zero that is empty, since the apex lies on the
    boundary of every nontrivial cone.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        if interior_only:
            return ()
        return (GradedPoint((0,) * C.base.ambient_dim, 0),)
    if interior_only:
        pts = C.base.interior_lattice_points(degree)
    else:
        pts = C.base.lattice_points(degree)
    return tuple(GradedPoint(p, degree) for p in pts)

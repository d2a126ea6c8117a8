"""Named polytope families used throughout the tests and the CLI."""

from __future__ import annotations

import itertools
from typing import Optional

from .polytope import FacetForm, Polytope


def example1(d: int) -> Polytope:
    """Simplex with vertices 0, 2*e1, e2, ..., ed.

    Normalized volume two; the midpoint of the long edge is its only
    non-vertex lattice point, so it is a simplex but not an empty one.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    verts = [(0,) * d, (2,) + (0,) * (d - 1)]
    for i in range(1, d):
        verts.append(tuple(1 if j == i else 0 for j in range(d)))
    return Polytope.from_vertices(verts, name=f"example1-d{d}")


def example2(d: int) -> Polytope:
    """Truncated box: 0 <= x_i <= 2 for i < d, 0 <= x_d <= d, sum <= d+1.

    Full-dimensional with interior lattice points for every ``d >= 2``.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    forms = []
    for i in range(d):
        e = tuple(1 if j == i else 0 for j in range(d))
        ne = tuple(-1 if j == i else 0 for j in range(d))
        forms.append(FacetForm(e, 2 if i < d - 1 else d))
        forms.append(FacetForm(ne, 0))
    forms.append(FacetForm((1,) * d, d + 1))
    return Polytope.from_inequalities(forms, ambient_dim=d,
                                      name=f"example2-d{d}")


def unit_simplex(d: int) -> Polytope:
    """Convex hull of the origin and the standard basis vectors."""
    if d < 1:
        raise ValueError("d must be >= 1")
    verts = [(0,) * d]
    for i in range(d):
        verts.append(tuple(1 if j == i else 0 for j in range(d)))
    return Polytope.from_vertices(verts, name=f"unit-simplex-d{d}")


def reeve_simplex(q: int) -> Polytope:
    """Tetrahedron over 0, e1, e2 with apex (1, 1, q).

    An empty simplex in Z^3 of normalized volume ``q``; not integrally
    closed for ``q >= 2``.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    verts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, q)]
    return Polytope.from_vertices(verts, name=f"reeve-q{q}")


def unit_cube(d: int) -> Polytope:
    """The 0/1 cube."""
    if d < 1:
        raise ValueError("d must be >= 1")
    verts = list(itertools.product((0, 1), repeat=d))
    return Polytope.from_vertices(verts, name=f"unit-cube-d{d}")


def family(name: str, d: Optional[int] = None,
           q: Optional[int] = None) -> Polytope:
    """CLI dispatcher for the named families."""
    if name == "example1":
        if d is None:
            raise ValueError("example1 needs --d")
        return example1(d)
    if name == "example2":
        if d is None:
            raise ValueError("example2 needs --d")
        return example2(d)
    if name == "unit":
        if d is None:
            raise ValueError("unit needs --d")
        return unit_simplex(d)
    if name == "cube":
        if d is None:
            raise ValueError("cube needs --d")
        return unit_cube(d)
    if name == "reeve":
        if q is None:
            raise ValueError("reeve needs --q")
        return reeve_simplex(q)
    raise ValueError(f"unknown family {name!r} (choose from example1,"
                     " example2, unit, cube, reeve)")

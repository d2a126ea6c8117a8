"""Exact triangulations of lattice polytopes.

Triangulations are stored combinatorially: a lex-sorted tuple of ambient
lattice points plus maximal cells as sorted index tuples.  Construction is
incremental placing (cone new points over strictly visible boundary faces)
followed by stellar insertion of the points the placing pass skipped, all
in exact integer arithmetic inside a chart on the affine hull.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .exactmath import as_matrix, build_chart, det_bareiss, dot, \
    generalized_cross, vsub
from .polytope import Polytope
from .simplex import SimplexConeSlicer


@dataclass(frozen=True)
class Triangulation:
    """Simplicial complex on a fixed lex-sorted lattice point list."""

    points: tuple          # ambient lattice points, sorted
    cells: tuple           # sorted tuple of sorted index tuples

    @property
    def dim(self) -> int:
        return len(self.cells[0]) - 1 if self.cells else -1

    def faces(self) -> tuple:
        """Every nonempty face of every cell, sorted by (size, indices)."""
        seen = set()
        for cell in self.cells:
            for r in range(1, len(cell) + 1):
                seen.update(itertools.combinations(cell, r))
        return tuple(sorted(seen, key=lambda f: (len(f), f)))

    def cell_points(self, cell: Sequence[int]) -> tuple:
        return tuple(self.points[i] for i in cell)


@dataclass(frozen=True)
class DecompositionResult:
    """Outcome of checking the disjoint interior-cone covering."""

    ok: bool
    degree: Optional[int] = None
    point: Optional[tuple] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _chart_coords(chart, points) -> list:
    return [chart.to_chart(p) for p in points]


def _cell_forms(coords: Sequence[tuple], cell: Sequence[int]) -> tuple:
    """Inequalities of a full-dimensional simplex cell in chart coordinates.

    Form ``j`` is tight on the facet opposite ``cell[j]`` and positive on
    the cell's interior; a point is in the cell iff every form is >= 0.
    """
    d = len(cell) - 1
    out = []
    for j in range(len(cell)):
        rest = [coords[i] for k, i in enumerate(cell) if k != j]
        base = rest[0]
        n = generalized_cross([vsub(q, base) for q in rest[1:]], d) \
            if d >= 2 else (1,)
        o = dot(n, base)
        s = dot(n, coords[cell[j]]) - o
        if s == 0:
            raise ValueError("degenerate cell")
        if s < 0:
            n, o = tuple(-a for a in n), -o
        out.append((n, o))
    return tuple(out)


def _placing(coords_of, n_points: int) -> tuple:
    """Triangulate the convex hull of points 0..n-1 by placing in order.

    ``coords_of(i)`` returns ambient coordinates; charts are rebuilt at
    dimension jumps.  Returns ``(cells, skipped)`` where ``skipped`` lists
    the points that were inside (or flat against) the hull when placed and
    so are not vertices of any cell.
    """
    pts = [coords_of(i) for i in range(n_points)]
    cells = [(0,)]
    chart = build_chart([pts[0]])
    coords = [chart.to_chart(pts[0])]
    cur_dim = 0
    skipped = []
    for i in range(1, n_points):
        if not chart.in_affine_hull(pts[i]):
            chart = build_chart(pts[: i + 1])
            coords = _chart_coords(chart, pts[: i + 1])
            cells = [c + (i,) for c in cells]
            cur_dim += 1
            continue
        coords.append(chart.to_chart(pts[i]))
        p = coords[i]
        boundary = [f for f, cnt in _boundary_count(cells).items()
                    if cnt == 1]
        owner = {}
        for c in cells:
            for f in itertools.combinations(c, len(c) - 1):
                owner.setdefault(f, c)
        new_cells = []
        for f in boundary:
            if cur_dim == 1:
                n, o = (1,), coords[f[0]][0]
            else:
                base = coords[f[0]]
                n = generalized_cross(
                    [vsub(coords[j], base) for j in f[1:]], cur_dim)
                o = dot(n, base)
            inner = next(j for j in owner[f] if j not in f)
            s = dot(n, coords[inner]) - o
            if s > 0:
                n, o = tuple(-a for a in n), -o
            if dot(n, p) - o > 0:
                new_cells.append(tuple(sorted(f + (i,))))
        if new_cells:
            cells = sorted(cells + new_cells)
        else:
            skipped.append(i)
    return tuple(cells), tuple(skipped)


def _boundary_count(cells) -> Counter:
    cnt = Counter()
    for c in cells:
        for f in itertools.combinations(c, len(c) - 1):
            cnt[f] += 1
    return cnt


def _split_at(coords, cells, forms: Dict[tuple, tuple], x_index: int) -> list:
    """Stellar-insert point ``x_index`` into every cell containing it."""
    x = coords[x_index]
    hit = []
    for c in cells:
        fs = forms.get(c)
        if fs is None:
            fs = _cell_forms(coords, c)
            forms[c] = fs
        if all(dot(n, x) - o >= 0 for n, o in fs):
            hit.append(c)
    if not hit:
        raise ValueError("point to insert is outside the triangulated region")
    out = [c for c in cells if c not in hit]
    for c in hit:
        fs = forms.pop(c)
        for j, (n, o) in enumerate(fs):
            if dot(n, x) - o > 0:
                piece = tuple(sorted(
                    [v for k, v in enumerate(c) if k != j] + [x_index]))
                out.append(piece)
    return sorted(out)


def placing_triangulation(P: Polytope) -> Triangulation:
    """Triangulation of ``P`` whose vertex set is the polytope's vertices."""
    if P.dim < 1:
        raise ValueError("triangulation needs dimension >= 1")
    pts = P.vertices  # already lex-sorted
    cells, skipped = _placing(lambda i: pts[i], len(pts))
    if skipped:
        raise AssertionError("an extreme point was skipped while placing")
    return Triangulation(points=pts, cells=cells)


def full_lattice_triangulation(P: Polytope) -> Triangulation:
    """Triangulation of ``P`` using every lattice point of ``P`` as a vertex."""
    if P.dim < 1:
        raise ValueError("triangulation needs dimension >= 1")
    key = "full_triangulation"
    hit = P._cache.get(key)
    if hit is not None:
        return hit
    pts = P.lattice_points(1)
    cells, skipped = _placing(lambda i: pts[i], len(pts))
    chart = build_chart(list(pts))
    coords = _chart_coords(chart, pts)
    forms: Dict[tuple, tuple] = {}
    cells = list(cells)
    for i in skipped:
        cells = _split_at(coords, cells, forms, i)
    T = Triangulation(points=pts, cells=tuple(sorted(cells)))
    P._cache[key] = T
    return T


def interior_respecting_triangulation(P: Polytope) -> Triangulation:
    """Full triangulation in which every maximal cell has a vertex interior
    to ``P``: cone the triangulated boundary over one interior lattice point
    and stellar-insert the remaining interior points.

    Needs ``dim >= 2`` and at least one interior lattice point.
    """
    if P.dim < 2:
        raise ValueError("needs dimension >= 2")
    interior = P.interior_lattice_points(1)
    if not interior:
        raise ValueError("needs an interior lattice point")
    key = "interior_respecting_triangulation"
    hit = P._cache.get(key)
    if hit is not None:
        return hit
    full = full_lattice_triangulation(P)
    pts = full.points
    boundary_cells = _boundary_restriction(full, P)
    apex = interior[0]  # lex-least interior point
    apex_i = pts.index(apex)
    cells = sorted(tuple(sorted(f + (apex_i,))) for f in boundary_cells)
    chart = build_chart(list(pts))
    coords = _chart_coords(chart, pts)
    forms: Dict[tuple, tuple] = {}
    for x in interior:
        if x == apex:
            continue
        cells = _split_at(coords, cells, forms, pts.index(x))
    T = Triangulation(points=pts, cells=tuple(sorted(cells)))
    P._cache[key] = T
    return T


def _boundary_restriction(T: Triangulation, P: Polytope) -> list:
    """Maximal boundary faces: cell facets lying in a single cell and
    contained in a facet of ``P``."""
    out = []
    for f, cnt in _boundary_count(T.cells).items():
        if cnt == 1:
            out.append(tuple(sorted(f)))
    for f in out:
        if not _face_in_boundary(T, P, f):
            raise AssertionError("free cell facet not on the boundary")
    return sorted(set(out))


def _face_in_boundary(T: Triangulation, P: Polytope, face) -> bool:
    pts = [T.points[i] for i in face]
    return any(all(ff.slack(p) == 0 for p in pts) for ff in P.facets)


def interior_faces(T: Triangulation, P: Polytope) -> tuple:
    """Faces of ``T`` not contained in the boundary of ``P``, sorted by
    (size, indices).  The open cones over exactly these faces partition the
    interior of the cone over ``P``."""
    return tuple(f for f in T.faces() if not _face_in_boundary(T, P, f))


def total_normalized_volume(T: Triangulation) -> int:
    """Sum of normalized cell volumes in the lattice of the hull."""
    chart = build_chart(list(T.points))
    coords = _chart_coords(chart, T.points)
    total = 0
    for c in T.cells:
        base = coords[c[0]]
        edges = [vsub(coords[i], base) for i in c[1:]]
        total += abs(det_bareiss(edges))
    return total


def verify_decomposition(T: Triangulation, P: Polytope,
                         kmax: int) -> DecompositionResult:
    """Check degree by degree that the interior cone points of ``P`` are
    covered exactly once by the open cones over the interior faces."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    try:
        slicers = [SimplexConeSlicer(T.cell_points(f))
                   for f in interior_faces(T, P)]
    except ValueError:
        return DecompositionResult(ok=False, reason="degenerate face")
    for k in range(1, kmax + 1):
        target = {p + (k,) for p in P.interior_lattice_points(k)}
        seen = set()
        for sl in slicers:
            for y in sl.interior_points(k):
                if y in seen:
                    return DecompositionResult(
                        ok=False, degree=k, point=y, reason="covered twice")
                if y not in target:
                    return DecompositionResult(
                        ok=False, degree=k, point=y,
                        reason="point outside the interior")
                seen.add(y)
        if len(seen) != len(target):
            missing = min(target - seen)
            return DecompositionResult(
                ok=False, degree=k, point=missing, reason="point not covered")
    return DecompositionResult(ok=True)


def stellar_subdivide(T: Triangulation, x) -> Triangulation:
    """Insert ``x`` as a new vertex, splitting every cell containing it."""
    x = tuple(x)
    if x in T.points:
        raise ValueError(f"{x} is already a vertex")
    chart = build_chart(list(T.points))
    if not chart.in_affine_hull(x):
        raise ValueError("point to insert is outside the triangulated region")
    new_points = tuple(sorted(T.points + (x,)))
    remap = {p: i for i, p in enumerate(new_points)}
    old_to_new = [remap[p] for p in T.points]
    cells = sorted(tuple(sorted(old_to_new[i] for i in c)) for c in T.cells)
    coords = _chart_coords(chart, new_points)
    forms: Dict[tuple, tuple] = {}
    cells = _split_at(coords, cells, forms, remap[x])
    return Triangulation(points=new_points, cells=tuple(sorted(cells)))

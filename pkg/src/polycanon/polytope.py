"""Lattice polytopes with exact vertex and facet representations.

A polytope lives in ``Z^m`` but may have smaller dimension ``d``; all facet
data is stored both in ambient coordinates and in an exact chart on the
affine hull, so every enumeration runs in a full-dimensional picture.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a hard dependency
    _np = None

from .exactmath import (
    AffineChart,
    as_matrix,
    as_vector,
    build_chart,
    dot,
    gcd_vector,
    generalized_cross,
    primitive_vector,
    rank,
    solve_rational,
    vec_mat,
    vscale,
    vsub,
)

_INT64_GUARD = 2**60


@dataclass(frozen=True, order=True)
class FacetForm:
    """One inequality ``normal . x <= offset`` with primitive integer normal."""

    normal: tuple
    offset: int

    def slack(self, x) -> int:
        return self.offset - dot(self.normal, x)


class Polytope:
    """Immutable lattice polytope; construct via the classmethods."""

    def __init__(self, *, ambient_dim, vertices, dim, facets, chart,
                 fd_vertices, fd_facets, name=None):
        self.ambient_dim = ambient_dim
        self.vertices = vertices      # lex-sorted ambient lattice points
        self.dim = dim
        self.facets = facets          # ambient FacetForms, sorted
        self.name = name
        self._chart: AffineChart = chart
        self._fd_vertices = fd_vertices  # vertices in chart coordinates
        self._fd_facets = fd_facets      # FacetForms in chart coordinates
        self._cache: dict = {}

    # -- construction ------------------------------------------------------

    @classmethod
    def from_vertices(cls, points, name: Optional[str] = None) -> "Polytope":
        pts = sorted(set(as_matrix(points)))
        if not pts:
            raise ValueError("a polytope needs at least one point")
        m = len(pts[0])
        chart = build_chart(pts)
        d = chart.dim
        fd_pts = [chart.to_chart(p) for p in pts]

        fd_facets = _facets_from_points(fd_pts, d)

        # Extreme-point filter: a vertex is a point where the tight facet
        # normals span the full chart space.
        verts_fd = []
        for q in fd_pts:
            tight = [f.normal for f in fd_facets if f.slack(q) == 0]
            if d == 0 or rank(tight) == d:
                verts_fd.append(q)
        vertices = tuple(sorted(chart.from_chart(q) for q in verts_fd))

        facets = tuple(sorted(
            _pull_back_facet(f, chart) for f in fd_facets
        ))
        fd_facets = tuple(sorted(fd_facets, key=lambda f: (f.normal, f.offset)))
        return cls(ambient_dim=m, vertices=vertices, dim=d, facets=facets,
                   chart=chart, fd_vertices=tuple(sorted(verts_fd)),
                   fd_facets=fd_facets, name=name)

    @classmethod
    def from_inequalities(cls, forms, ambient_dim: int,
                          name: Optional[str] = None) -> "Polytope":
        """Build from ``normal . x <= offset`` constraints.

        Raises ``ValueError`` for unbounded or empty regions and for regions
        whose vertices are not all lattice points.
        """
        pairs = [(f.normal, f.offset) if isinstance(f, FacetForm) else tuple(f)
                 for f in forms]
        for _, o in pairs:
            if isinstance(o, bool) or not isinstance(o, int):
                raise ValueError(f"offset {o!r} must be an integer")
        forms = tuple(FacetForm(as_vector(n), o) for n, o in pairs)
        m = ambient_dim
        normals = [f.normal for f in forms]
        if rank(normals) < m:
            raise ValueError("unbounded polyhedron (normals do not span)")
        for rows in itertools.combinations(normals, m - 1):
            if m == 1 or rank(rows) == m - 1:
                ray = generalized_cross(rows, m) if m > 1 else (1,)
                for v in (ray, vscale(ray, -1)):
                    if all(dot(n, v) <= 0 for n in normals):
                        raise ValueError("unbounded polyhedron (recession ray"
                                         f" {tuple(v)})")
        candidates = set()
        for subset in itertools.combinations(range(len(forms)), m):
            A = [forms[i].normal for i in subset]
            b = [forms[i].offset for i in subset]
            try:
                x = solve_rational(A, b)
            except ValueError:
                continue
            if x is None:
                continue
            if all(ff.offset - dot(ff.normal, x) >= 0 for ff in forms):
                candidates.add(x)
        if not candidates:
            raise ValueError("infeasible system (no vertices)")
        bad = next((x for x in sorted(candidates)
                    if any(c.denominator != 1 for c in x)), None)
        if bad is not None:
            raise ValueError(
                f"vertex {tuple(str(c) for c in bad)} is not a lattice point")
        pts = [tuple(int(c) for c in x) for x in candidates]
        return cls.from_vertices(pts, name=name)

    # -- enumeration -------------------------------------------------------

    def lattice_points(self, scale: int = 1) -> tuple:
        """All lattice points of the ``scale``-th dilate, lex-sorted."""
        return self._scan(scale, interior=False)

    def interior_lattice_points(self, scale: int = 1) -> tuple:
        """Lattice points strictly inside every facet of the dilate.

        For a point polytope the single point counts as interior (the
        relative interior of a point is the point).
        """
        return self._scan(scale, interior=True)

    def _scan(self, scale: int, interior: bool) -> tuple:
        if scale < 0:
            raise ValueError("dilation factor must be nonnegative")
        key = ("scan", scale, interior)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if scale == 0:
            # The 0-th dilate is the single point at the origin, which is
            # its own relative interior.
            out = ((0,) * self.ambient_dim,)
            self._cache[key] = out
            return out
        if self.dim == 0:
            out = (vscale(self.vertices[0], scale),)
            self._cache[key] = out
            return out
        fd_pts = self._fd_scan(scale, interior)
        chart = self._chart
        out = tuple(sorted(chart.from_chart(q, scale=scale) for q in fd_pts))
        self._cache[key] = out
        return out

    def _fd_scan(self, scale: int, interior: bool) -> list:
        lo = [min(v[i] for v in self._fd_vertices) * scale
              for i in range(self.dim)]
        hi = [max(v[i] for v in self._fd_vertices) * scale
              for i in range(self.dim)]
        counts = [h - l + 1 for l, h in zip(lo, hi)]
        total = 1
        for c in counts:
            total *= c
        big = max(max(abs(l), abs(h)) for l, h in zip(lo, hi))
        coeff = max(max(abs(a) for a in f.normal) + abs(f.offset)
                    for f in self._fd_facets)
        overflow = (big + 1) * coeff * (self.dim + 1) * scale >= _INT64_GUARD
        if _np is not None and not overflow and total <= 40_000_000:
            return self._fd_scan_numpy(lo, hi, scale, interior)
        return self._fd_scan_python(lo, hi, scale, interior)

    def _fd_scan_numpy(self, lo, hi, scale, interior) -> list:
        axes = [_np.arange(l, h + 1, dtype=_np.int64) for l, h in zip(lo, hi)]
        grids = _np.meshgrid(*axes, indexing="ij")
        pts = _np.stack([g.ravel() for g in grids], axis=1)
        mask = _np.ones(len(pts), dtype=bool)
        for f in self._fd_facets:
            vals = pts @ _np.array(f.normal, dtype=_np.int64)
            bound = f.offset * scale
            mask &= (vals < bound) if interior else (vals <= bound)
            if not mask.any():
                return []
        return [tuple(int(c) for c in row) for row in pts[mask]]

    def _fd_scan_python(self, lo, hi, scale, interior) -> list:
        out = []
        for q in itertools.product(*[range(l, h + 1)
                                     for l, h in zip(lo, hi)]):
            ok = True
            for f in self._fd_facets:
                s = f.offset * scale - dot(f.normal, q)
                if s < 0 or (interior and s == 0):
                    ok = False
                    break
            if ok:
                out.append(q)
        return out

    # -- queries -----------------------------------------------------------

    def classify_point(self, x, scale: int = 1) -> str:
        """Classify ``x`` against the ``scale``-th dilate:
        ``"interior"`` (relative), ``"boundary"`` or ``"outside"``."""
        x = as_vector(x)
        if len(x) != self.ambient_dim:
            raise ValueError("wrong ambient dimension")
        if scale < 0:
            raise ValueError("dilation factor must be nonnegative")
        if scale == 0:
            return "interior" if not any(x) else "outside"
        if not self._chart.in_affine_hull(x, scale=scale):
            return "outside"
        if self.dim == 0:
            return "interior"
        q = self._chart.to_chart(x, scale=scale)
        min_slack = None
        for f in self._fd_facets:
            s = f.offset * scale - dot(f.normal, q)
            if s < 0:
                return "outside"
            min_slack = s if min_slack is None else min(min_slack, s)
        return "boundary" if min_slack == 0 else "interior"

    def contains(self, x, scale: int = 1) -> bool:
        return self.classify_point(x, scale=scale) != "outside"

    def support_hyperplanes(self) -> tuple:
        """Ambient facet inequalities (primitive normals, lex-sorted)."""
        return self.facets

    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        out = {
            "ambient_dim": self.ambient_dim,
            "vertices": [list(v) for v in self.vertices],
        }
        if self.name is not None:
            out["name"] = self.name
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polytope":
        if not isinstance(data, dict):
            raise ValueError("polytope JSON must be an object")
        extra = set(data) - {"ambient_dim", "vertices", "inequalities", "name"}
        if extra:
            raise ValueError(f"unknown keys {sorted(extra)}")
        if "ambient_dim" not in data:
            raise ValueError("missing ambient_dim")
        m = data["ambient_dim"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError("ambient_dim must be a positive integer")
        name = data.get("name")
        if name is not None and not isinstance(name, str):
            raise ValueError("name must be a string")
        has_v = "vertices" in data
        has_i = "inequalities" in data
        if has_v == has_i:
            raise ValueError(
                "provide exactly one of vertices or inequalities")
        if has_v:
            verts = data["vertices"]
            if not isinstance(verts, list) or not verts:
                raise ValueError("vertices must be a nonempty list")
            rows = []
            for v in verts:
                if not isinstance(v, list) or len(v) != m:
                    raise ValueError(f"vertex {v!r} must be a list of"
                                     f" {m} integers")
                rows.append(as_vector(v))
            return cls.from_vertices(rows, name=name)
        ineqs = data["inequalities"]
        if not isinstance(ineqs, list) or not ineqs:
            raise ValueError("inequalities must be a nonempty list")
        forms = []
        for item in ineqs:
            if (not isinstance(item, dict)
                    or set(item) != {"normal", "offset"}):
                raise ValueError(
                    "each inequality needs exactly normal and offset")
            n = item["normal"]
            if not isinstance(n, list) or len(n) != m:
                raise ValueError(f"normal {n!r} must be a list of"
                                 f" {m} integers")
            o = item["offset"]
            if isinstance(o, bool) or not isinstance(o, int):
                raise ValueError("offset must be an integer")
            forms.append(FacetForm(as_vector(n), o))
        return cls.from_inequalities(forms, ambient_dim=m, name=name)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polytope)
                and self.ambient_dim == other.ambient_dim
                and self.vertices == other.vertices)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self) -> str:
        label = self.name or f"{len(self.vertices)} vertices"
        return f"Polytope(dim={self.dim}, ambient={self.ambient_dim}, {label})"


def _facets_from_points(fd_pts: Sequence[tuple], d: int) -> list:
    """Facet inequalities of the convex hull of full-dimensional points."""
    if d == 0:
        return []
    if d == 1:
        xs = [p[0] for p in fd_pts]
        return [FacetForm((1,), max(xs)), FacetForm((-1,), -min(xs))]
    seen = {}
    for rows in itertools.combinations(fd_pts, d):
        base = rows[0]
        n = generalized_cross([vsub(r, base) for r in rows[1:]], d)
        if all(c == 0 for c in n):
            continue
        n = primitive_vector(n)
        o = dot(n, base)
        lower = any(dot(n, p) > o for p in fd_pts)
        upper = any(dot(n, p) < o for p in fd_pts)
        if lower and upper:
            continue
        if lower:
            n, o = vscale(n, -1), -o
        seen[(n, o)] = FacetForm(n, o)
    return list(seen.values())


def _pull_back_facet(f: FacetForm, chart: AffineChart) -> FacetForm:
    """Transport a chart-coordinate facet inequality to ambient space."""
    # chart coordinate i of x is dot(x - origin, proj_cols[i]), so the chart
    # form n . c <= o becomes a . x <= o + a . origin with a as below.
    n_amb = vec_mat(f.normal, chart.proj_cols)
    o_amb = f.offset + dot(n_amb, chart.origin)
    g = gcd_vector(n_amb)
    if g > 1 and o_amb % g == 0:
        n_amb = tuple(a // g for a in n_amb)
        o_amb //= g
    return FacetForm(n_amb, o_amb)

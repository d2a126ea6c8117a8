"""Tests for polytope construction, scanning, classification and JSON."""

import pytest

import polycanon.polytope as pmod
from polycanon.checks import default_corpus
from polycanon.polytope import FacetForm, Polytope


# ------------------------------------------------------------ construction

def test_vertex_hull_drops_interior_candidates(unit_square):
    P = Polytope.from_vertices(
        [(0, 0), (1, 0), (0, 1), (1, 1), (1, 0), (0, 0)])
    assert P.vertices == unit_square.vertices
    assert P == unit_square
    assert hash(P) == hash(unit_square)


def test_needs_at_least_one_point():
    with pytest.raises(ValueError):
        Polytope.from_vertices([])


def test_facets_of_unit_square(unit_square):
    got = {(f.normal, f.offset) for f in unit_square.facets}
    assert got == {
        ((-1, 0), 0), ((0, -1), 0), ((1, 0), 1), ((0, 1), 1)}


def test_facet_vertex_duality_round_trip(unit_cube):
    rebuilt = Polytope.from_inequalities(unit_cube.facets,
                                         unit_cube.ambient_dim)
    assert rebuilt.vertices == unit_cube.vertices


def test_from_inequalities_unbounded_halfplane():
    with pytest.raises(ValueError, match="unbounded"):
        Polytope.from_inequalities([FacetForm((1, 0), 1)], 2)


def test_from_inequalities_unbounded_recession_ray():
    # the positive quadrant: the normals span, yet rays escape
    with pytest.raises(ValueError, match="unbounded"):
        Polytope.from_inequalities(
            [FacetForm((-1, 0), 0), FacetForm((0, -1), 0)], 2)


def test_from_inequalities_infeasible():
    with pytest.raises(ValueError, match="infeasible"):
        Polytope.from_inequalities(
            [FacetForm((1,), 0), FacetForm((-1,), -1)], 1)


def test_from_inequalities_non_lattice_vertex():
    with pytest.raises(ValueError, match="not a lattice point"):
        Polytope.from_inequalities(
            [FacetForm((2,), 1), FacetForm((-1,), 0)], 1)


def test_from_inequalities_rejects_fractional_offset():
    with pytest.raises(ValueError, match="offset"):
        Polytope.from_inequalities([FacetForm((1,), 0.5),
                                    FacetForm((-1,), 0)], 1)


def test_redundant_inequalities_are_dropped(unit_square):
    forms = list(unit_square.facets) + [FacetForm((1, 1), 5)]
    P = Polytope.from_inequalities(forms, 2)
    assert P == unit_square
    assert len(P.facets) == 4


# ----------------------------------------------------------------- scanning

def test_unit_square_counts(unit_square):
    assert len(unit_square.lattice_points(1)) == 4
    assert len(unit_square.lattice_points(2)) == 9
    assert unit_square.interior_lattice_points(1) == ()
    assert unit_square.interior_lattice_points(2) == ((1, 1),)


def test_dilation_zero_is_the_origin(unit_square, point_polytope):
    assert unit_square.lattice_points(0) == ((0, 0),)
    assert unit_square.interior_lattice_points(0) == ((0, 0),)
    assert point_polytope.lattice_points(0) == ((0, 0),)


def test_negative_dilation_rejected(unit_square):
    with pytest.raises(ValueError):
        unit_square.lattice_points(-1)
    with pytest.raises(ValueError):
        unit_square.classify_point((0, 0), scale=-2)


def test_point_polytope_scans(point_polytope):
    assert point_polytope.dim == 0
    assert point_polytope.lattice_points(5) == ((10, -5),)
    assert point_polytope.interior_lattice_points(5) == ((10, -5),)


def test_segment_scans(segment):
    assert segment.lattice_points(1) == ((0,), (1,), (2,))
    assert segment.interior_lattice_points(1) == ((1,),)


def test_flat_triangle_scans(flat_triangle):
    # all lattice points of the hull satisfy z = x + y
    assert flat_triangle.dim == 2
    assert flat_triangle.lattice_points(1) == (
        (0, 0, 0), (0, 1, 1), (1, 0, 1))
    assert flat_triangle.interior_lattice_points(3) == ((1, 1, 2),)


def test_numpy_and_python_scans_agree(monkeypatch):
    jobs = [(1, False), (2, False), (1, True), (3, True)]
    for P in default_corpus(seed=7, count=10):
        expect = {job: P._scan(*job) for job in jobs}
        fresh = Polytope.from_vertices(P.vertices)
        with monkeypatch.context() as mp:
            mp.setattr(pmod, "_np", None)
            for job, want in expect.items():
                assert fresh._scan(*job) == want


def test_scan_falls_back_when_coordinates_are_huge():
    # far enough from the origin that the int64 overflow guard rejects
    # the vectorized path; the pure-python path uses bignums
    big = 2 ** 40
    P = Polytope.from_vertices(
        [(big, 0), (big + 1, 0), (big, 1), (big + 1, 1)])
    assert sorted(P.lattice_points(1)) == [
        (big, 0), (big, 1), (big + 1, 0), (big + 1, 1)]
    assert P.interior_lattice_points(2) == ((2 * big + 1, 1),)


# ------------------------------------------------------------- point queries

def test_classify_point_cases(unit_square):
    assert unit_square.classify_point((1, 1), scale=2) == "interior"
    assert unit_square.classify_point((0, 1), scale=2) == "boundary"
    assert unit_square.classify_point((3, 1), scale=2) == "outside"
    assert unit_square.classify_point((0, 0), scale=0) == "interior"
    assert unit_square.classify_point((1, 0), scale=0) == "outside"
    assert unit_square.contains((1, 1))
    assert not unit_square.contains((2, 0))
    with pytest.raises(ValueError, match="ambient"):
        unit_square.classify_point((1, 1, 1))


def test_classify_respects_relative_interior(flat_triangle):
    # on the hull plane but outside the triangle
    assert flat_triangle.classify_point((2, 2, 4)) == "outside"
    # off the hull plane entirely
    assert flat_triangle.classify_point((0, 0, 1)) == "outside"
    assert flat_triangle.classify_point((0, 0, 0)) == "boundary"
    assert flat_triangle.classify_point((1, 1, 2), scale=3) == "interior"


def test_simplex_recognition(unit_triangle, unit_square):
    assert unit_triangle.is_simplex()
    assert not unit_square.is_simplex()


# ------------------------------------------------------------------- JSON

def test_json_round_trip(unit_cube, flat_triangle, point_polytope):
    for P in (unit_cube, flat_triangle, point_polytope):
        assert Polytope.from_json_dict(P.to_json_dict()) == P


def test_json_inequalities_input():
    data = {
        "ambient_dim": 1,
        "inequalities": [
            {"normal": [1], "offset": 2},
            {"normal": [-1], "offset": 0},
        ],
    }
    P = Polytope.from_json_dict(data)
    assert P.vertices == ((0,), (2,))


@pytest.mark.parametrize("data, message", [
    ([1, 2], "must be an object"),
    ({"ambient_dim": 2, "vertices": [[0, 0]], "color": "red"},
     "unknown keys"),
    ({"vertices": [[0, 0]]}, "missing ambient_dim"),
    ({"ambient_dim": 0, "vertices": [[0]]}, "positive integer"),
    ({"ambient_dim": True, "vertices": [[0]]}, "positive integer"),
    ({"ambient_dim": 1}, "exactly one"),
    ({"ambient_dim": 1, "vertices": [[0]], "inequalities": []},
     "exactly one"),
    ({"ambient_dim": 1, "vertices": []}, "nonempty"),
    ({"ambient_dim": 2, "vertices": [[0]]}, "list of 2"),
    ({"ambient_dim": 1, "vertices": [[0]], "name": 7}, "name"),
    ({"ambient_dim": 1, "inequalities": [{"normal": [1]}]},
     "normal and offset"),
    ({"ambient_dim": 1,
      "inequalities": [{"normal": [1], "offset": True}]}, "integer"),
])
def test_json_validation_errors(data, message):
    with pytest.raises(ValueError, match=message):
        Polytope.from_json_dict(data)

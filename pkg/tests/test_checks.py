"""Tests for the self-check suite and the reproducible corpus."""

import json

from polycanon import families
from polycanon.checks import check_polytope, default_corpus, run_suite
from polycanon.polytope import Polytope


def test_corpus_is_reproducible_and_in_bounds():
    a = default_corpus(seed=5, count=12)
    b = default_corpus(seed=5, count=12)
    assert tuple(P.vertices for P in a) == tuple(P.vertices for P in b)
    c = default_corpus(seed=6, count=12)
    assert tuple(P.vertices for P in a) != tuple(P.vertices for P in c)
    for P in a:
        assert 1 <= P.dim <= 3
        assert len(P.vertices) <= 8
        assert all(-3 <= x <= 3 for v in P.vertices for x in v)


def test_fixture_polytopes_pass_every_check():
    fixtures = [
        families.example1(2),
        families.example2(2),
        families.unit_simplex(3),
        families.reeve_simplex(2),
        families.unit_cube(2),
        Polytope.from_vertices([(0,), (4,)], name="long-segment"),
        Polytope.from_vertices([(0, 0, 0), (1, 0, 1), (0, 1, 1)],
                               name="flat"),
    ]
    report = run_suite(fixtures)
    assert report["ok"], report["violations"]
    assert report["polytopes_checked"] == len(fixtures)


def test_check_polytope_returns_structured_violations(unit_square):
    assert check_polytope(unit_square) == []


def test_suite_identical_across_thread_counts():
    polys = default_corpus(seed=9, count=8)
    r1 = run_suite(polys, threads=1)
    r3 = run_suite(polys, threads=3)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r3, sort_keys=True)


def test_suite_reads_thread_env(monkeypatch):
    polys = default_corpus(seed=9, count=4)
    monkeypatch.setenv("POLYCANON_THREADS", "2")
    r_env = run_suite(polys)
    monkeypatch.delenv("POLYCANON_THREADS")
    r_one = run_suite(polys, threads=1)
    assert r_env == r_one

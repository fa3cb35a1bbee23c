import json

from mompoly.census import (
    classify_item,
    enumerate_convex,
    enumerate_triangles,
    grid_points,
    run_census,
)
from mompoly.lattice import RationalPoint


def test_grid_points():
    pts = grid_points(1)
    assert len(pts) == 6
    assert all(p.x >= p.y for p in pts)
    assert pts == sorted(pts)
    half = grid_points(1, 2)
    assert RationalPoint.of("1/2", "-1/2") in half


def test_enumerate_triangles_counts():
    pts = grid_points(1)
    tris = list(enumerate_triangles(pts))
    # 6 choose 3 = 20 triples, minus the collinear ones.
    assert all(len(t) == 3 for t in tris)
    assert len(tris) == len(set(tris))
    assert 10 < len(tris) < 20


def test_enumerate_convex_small():
    pts = grid_points(1)
    items = list(enumerate_convex(pts))
    assert len(items) == len(set(items))
    singles = [it for it in items if len(it) == 1]
    pairs = [it for it in items if len(it) == 2]
    tris = [it for it in items if len(it) == 3]
    assert len(singles) == 6
    assert len(pairs) == 15
    assert len(tris) == len(list(enumerate_triangles(pts)))
    # Quadrilaterals exist in this grid, e.g. the unit square below the wall.
    assert any(len(it) == 4 for it in items)


def test_classify_item():
    item = classify_item(
        (RationalPoint.of(0, 0), RationalPoint.of(1, 1), RationalPoint.of(3, 2))
    )
    assert item.valid and item.family_tag == "wall_edge"
    assert item.kaehler is True and item.diff_type == "projective_space_4"
    bad = classify_item((RationalPoint.of(0, 0), RationalPoint.of(2, 2)))
    assert not bad.valid


def test_census_threads_deterministic():
    items_1, items_8 = [], []
    s1 = run_census(2, threads=1, on_item=items_1.append)
    s8 = run_census(2, threads=8, on_item=items_8.append)
    assert s1.as_dict() == s8.as_dict()
    assert items_1 == items_8
    assert json.dumps(s1.as_dict()) == json.dumps(s8.as_dict())


def test_census_all_shape():
    summary = run_census(1, shape="all")
    d = summary.as_dict()
    assert d["total"] > d["valid"] > 0
    # Points and segments are never valid (dimension < 2).
    assert d["invalid"] >= 6 + 15

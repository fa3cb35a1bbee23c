from fractions import Fraction

import pytest

from mompoly.classify import (
    DelzantFamily,
    HalfReflMinusFamily,
    HalfReflPlusFamily,
    ReflectionFamily,
    WallEdgeFamily,
    classify_triangle,
)
from mompoly.difftype import (
    DiffType,
    chern_mod3_at_vertex,
    diffeo_type,
    line_bundle_chern,
)
from mompoly.errors import GeometryError, UnsupportedPolytopeError
from mompoly.lattice import RationalPoint
from mompoly.polygon import convex_hull


def P(*coords):
    return convex_hull([RationalPoint.of(x, y) for x, y in coords])


def test_line_bundle_chern():
    assert line_bundle_chern(3, 3) == 0
    assert line_bundle_chern(1, 0) == 1
    assert line_bundle_chern(0, -4) == 4


def test_chern_mod3_examples():
    tri_j3 = HalfReflPlusFamily(Fraction(0), Fraction(1), 3).triangle()
    assert chern_mod3_at_vertex(tri_j3, RationalPoint.of(0, 0)) == 0
    tri_j1 = HalfReflPlusFamily(Fraction(0), Fraction(1), 1).triangle()
    assert chern_mod3_at_vertex(tri_j1, RationalPoint.of(0, 0)) == 2
    tri_delzant = DelzantFamily(Fraction(1), Fraction(0), Fraction(1), 1, 0, -1, 1).triangle()
    assert chern_mod3_at_vertex(tri_delzant, tri_delzant.vertices[0]) == 1


def test_chern_mod3_vertex_independence():
    for fam in [
        DelzantFamily(Fraction(1), Fraction(0), Fraction(2), 1, 0, -1, 1),
        HalfReflPlusFamily(Fraction(-1), Fraction(1), 2),
        HalfReflMinusFamily(Fraction(0), Fraction(1), 4),
    ]:
        tri = fam.triangle()
        residues = {chern_mod3_at_vertex(tri, v) for v in tri.vertices}
        assert len(residues) == 1


def test_chern_mod3_guards():
    wall_edge = WallEdgeFamily(Fraction(0), Fraction(1), 2, 1).triangle()
    with pytest.raises(UnsupportedPolytopeError):
        chern_mod3_at_vertex(wall_edge, wall_edge.vertices[0])
    refl = ReflectionFamily(Fraction(0), Fraction(1)).triangle()
    with pytest.raises(UnsupportedPolytopeError):
        chern_mod3_at_vertex(refl, refl.vertices[0])


def test_diffeo_types():
    wall_edge = WallEdgeFamily(Fraction(0), Fraction(1), 2, 1).triangle()
    assert diffeo_type(classify_triangle(wall_edge), wall_edge) == DiffType.PROJECTIVE_SPACE_4

    refl = P((0, 0), (1, 0), (0, -1))
    assert diffeo_type(classify_triangle(refl), refl) == DiffType.ORIENTED_GRASSMANNIAN

    tri_j3 = HalfReflPlusFamily(Fraction(0), Fraction(1), 3).triangle()
    assert diffeo_type(classify_triangle(tri_j3), tri_j3) == DiffType.TRIVIAL_P2_BUNDLE
    tri_j1 = HalfReflPlusFamily(Fraction(0), Fraction(1), 1).triangle()
    assert diffeo_type(classify_triangle(tri_j1), tri_j1) == DiffType.NONTRIVIAL_P2_BUNDLE


def test_diffeo_type_mismatch():
    refl = P((0, 0), (1, 0), (0, -1))
    with pytest.raises(GeometryError):
        diffeo_type(WallEdgeFamily(Fraction(0), Fraction(1), 2, 1), refl)


def test_scale_invariance():
    tri = HalfReflPlusFamily(Fraction(0), Fraction(1), 1).triangle()
    moved = tri.transform(3, Fraction(5, 2))
    assert diffeo_type(classify_triangle(moved), moved) == diffeo_type(
        classify_triangle(tri), tri
    )

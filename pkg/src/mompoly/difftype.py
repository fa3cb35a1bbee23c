"""Diffeomorphism types of the triangle-family manifolds.

Four types occur: the projective space P(C^4), the oriented
Grassmannian of 2-planes in R^5, and the trivial/nontrivial
P(C^3)-bundle over the 2-sphere.  The bundle dichotomy is decided by a
mod-3 residue computed from the primitive edge directions at any vertex.
"""

from __future__ import annotations

import enum

from .classify import (
    DelzantFamily,
    HalfReflMinusFamily,
    HalfReflPlusFamily,
    ReflectionFamily,
    TriangleFamily,
    WallEdgeFamily,
    classify_triangle,
)
from .errors import GeometryError, UnsupportedPolytopeError
from .lattice import RationalPoint
from .polygon import Polygon


class DiffType(enum.Enum):
    PROJECTIVE_SPACE_4 = "projective_space_4"          # P(C^4)
    ORIENTED_GRASSMANNIAN = "oriented_grassmannian"    # oriented 2-planes in R^5
    TRIVIAL_P2_BUNDLE = "trivial_p2_bundle"            # S^2 x P(C^3)
    NONTRIVIAL_P2_BUNDLE = "nontrivial_p2_bundle"      # nontrivial P(C^3)-bundle over S^2


_MOD3_FAMILIES = (DelzantFamily, HalfReflPlusFamily, HalfReflMinusFamily)


def line_bundle_chern(k1: int, k2: int) -> int:
    """First Chern number of the line bundle glued from fiber weights k1, k2.

    The invariant is defined up to sign; this fixes the convention
    k1 - k2.  Only divisibility by 3 is consumed downstream, which is
    sign-independent.
    """
    return k1 - k2


def chern_mod3_at_vertex(polygon: Polygon, v: RationalPoint) -> int:
    """Residue (a1 + a2 - b1 - b2) mod 3 of the primitive rays
    a_i*eps1 + b_i*eps2 at the vertex v.

    Defined for triangles of the Delzant and half-reflection families,
    where it is independent of the chosen vertex and detects the trivial
    bundle (residue 0).
    """
    fam = classify_triangle(polygon)
    if not isinstance(fam, _MOD3_FAMILIES):
        raise UnsupportedPolytopeError(
            f"mod-3 invariant is not defined for the {fam.tag} family"
        )
    r1, r2 = polygon.vertex_rays(v)
    return (r1.a + r2.a - r1.b - r2.b) % 3


def diffeo_type(fam: TriangleFamily, polygon: Polygon) -> DiffType:
    """Diffeomorphism type of the manifold realizing a valid triangle."""
    if classify_triangle(polygon) != fam:
        raise GeometryError("family does not match the polygon")
    if isinstance(fam, WallEdgeFamily):
        return DiffType.PROJECTIVE_SPACE_4
    if isinstance(fam, ReflectionFamily):
        return DiffType.ORIENTED_GRASSMANNIAN
    residue = chern_mod3_at_vertex(polygon, polygon.vertices[0])
    return DiffType.TRIVIAL_P2_BUNDLE if residue == 0 else DiffType.NONTRIVIAL_P2_BUNDLE

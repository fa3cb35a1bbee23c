"""Kählerizability, torus fixpoint images and x-rays.

A valid momentum polytope with exactly one wall vertex is Kählerizable
iff every positive edge (inward normal pairing positively with the
coroot) contains the wall vertex; with zero or two wall vertices there
is no obstruction.  The equivalent criterion — all maximal-torus
fixpoint images on the boundary of the T-momentum polytope — and the
x-ray of the torus action are computed as independent data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .classify import (
    HalfReflMinus,
    HalfReflPlus,
    Reflection,
    WallEdgeMinus,
    WallEdgePlus,
    check_momentum_polytope,
)
from .errors import InvalidPolytopeError, UnsupportedPolytopeError
from .lattice import RationalPoint, coroot_pairing, weyl_reflect
from .polygon import Edge, Polygon, is_parallel_to_wall_root

# Multiset of T-momentum images of the T-fixpoints.
FixpointImages = Counter


def _require_valid(polygon: Polygon):
    report = check_momentum_polytope(polygon)
    if not report.valid:
        raise InvalidPolytopeError(
            "not a momentum polytope: " + "; ".join(msg for _, msg in report.failures)
        )
    return report


def positive_edges(polygon: Polygon) -> list[Edge]:
    """Edges whose inward primitive normal pairs positively with the coroot."""
    _require_valid(polygon)
    return [
        e
        for e in polygon.edges()
        if coroot_pairing(polygon.inward_primitive_normal(e)) > 0
    ]


def is_kaehlerizable(polygon: Polygon) -> tuple[bool, Optional[Edge]]:
    """Kähler verdict with a violating positive edge as witness when false.

    With zero or two wall vertices the criterion is vacuous; with one
    wall vertex w, every positive edge must contain w.
    """
    _require_valid(polygon)
    wall = polygon.wall_vertices()
    if len(wall) != 1:
        return True, None
    (w,) = wall
    for e in positive_edges(polygon):
        if not e.contains(w):
            return False, e
    return True, None


def fixpoint_images(polygon: Polygon) -> FixpointImages:
    """Multiset of T-momentum images of the T-fixpoints.

    Interior vertices contribute themselves and their reflection; wall
    vertices contribute according to their type: wall-edge once,
    half-reflection twice, reflection not at all.
    """
    report = _require_valid(polygon)
    wall_types = dict(report.wall_vertex_types())
    images: FixpointImages = Counter()
    for v in polygon.vertices:
        wt = wall_types.get(v)
        if wt is None:
            images[v] += 1
            images[weyl_reflect(v)] += 1
        elif isinstance(wt, (WallEdgePlus, WallEdgeMinus)):
            images[v] += 1
        elif isinstance(wt, (HalfReflPlus, HalfReflMinus)):
            images[v] += 2
        else:
            assert isinstance(wt, Reflection)
    return images


def _require_one_wall_vertex(polygon: Polygon) -> RationalPoint:
    wall = polygon.wall_vertices()
    if len(wall) != 1:
        raise UnsupportedPolytopeError(
            f"operation needs exactly one wall vertex, found {len(wall)}"
        )
    return wall[0]


def fixpoint_boundary_check(polygon: Polygon) -> bool:
    """True iff every fixpoint image lies on the boundary of the T-polytope.

    Requires a valid polytope with exactly one wall vertex; equivalent to
    Kählerizability in that case (see atiyah_cross_check).
    """
    _require_valid(polygon)
    _require_one_wall_vertex(polygon)
    pt = polygon.t_polytope()
    return all(pt.boundary_contains(p) for p in fixpoint_images(polygon))


def atiyah_cross_check(polygon: Polygon) -> bool:
    """Self-test: the positive-edge verdict and the fixpoint-boundary
    criterion must agree on every valid one-wall-vertex polytope."""
    verdict, _ = is_kaehlerizable(polygon)
    return verdict == fixpoint_boundary_check(polygon)


@dataclass(frozen=True)
class Stratum:
    segment: tuple[RationalPoint, RationalPoint]
    dimension: int  # 2 or 4


@dataclass(frozen=True)
class XRay:
    fixpoints: FixpointImages
    strata: tuple[Stratum, ...]


def build_xray(polygon: Polygon) -> XRay:
    """X-ray of the maximal-torus action for a valid polytope with exactly
    one wall vertex v0.

    Vertices are labeled v0..vn clockwise from the wall vertex; v' denotes
    the reflected point.  Strata:

    * chords (v_j, v_j') for j = 1..n, dimension 4 when an edge of the
      polygon at v_j is parallel to alpha, else 2; chords through v0 are
      kept as single segments;
    * half-reflection wall vertex: all boundary edges not parallel to
      alpha, together with their reflections;
    * reflection wall vertex: boundary edges (v_j, v_{j+1}) for
      j = 1..n-1 not parallel to alpha, their reflections, and the two
      cross segments (v_n, v_1') and (v_1, v_n').

    Wall-edge vertices (and wall-vertex counts other than 1) are refused:
    the construction is defined only for the one-wall-vertex case.
    """
    report = _require_valid(polygon)
    v0 = _require_one_wall_vertex(polygon)
    wt = dict(report.wall_vertex_types())[v0]
    if isinstance(wt, (WallEdgePlus, WallEdgeMinus)):
        raise UnsupportedPolytopeError(
            "x-ray construction is not defined for wall-edge vertex types"
        )

    # Clockwise labels from the wall vertex (vertices are stored CCW).
    n_total = len(polygon)
    i0 = polygon.vertices.index(v0)
    labels = [polygon.vertices[(i0 - t) % n_total] for t in range(n_total)]
    n = n_total - 1

    def alpha_edge_at(v: RationalPoint) -> bool:
        return any(is_parallel_to_wall_root(r.to_point()) for r in polygon.vertex_rays(v))

    strata: list[Stratum] = []
    for j in range(1, n + 1):
        v = labels[j]
        dim = 4 if alpha_edge_at(v) else 2
        strata.append(Stratum((v, weyl_reflect(v)), dim))

    if isinstance(wt, (HalfReflPlus, HalfReflMinus)):
        edge_range = range(0, n_total)
    else:
        edge_range = range(1, n)
    boundary: list[tuple[RationalPoint, RationalPoint]] = []
    for j in edge_range:
        a, b = labels[j], labels[(j + 1) % n_total]
        if not is_parallel_to_wall_root(b - a):
            boundary.append((a, b))
    for a, b in boundary:
        strata.append(Stratum((a, b), 2))
    for a, b in boundary:
        strata.append(Stratum((weyl_reflect(a), weyl_reflect(b)), 2))

    if isinstance(wt, Reflection):
        strata.append(Stratum((labels[n], weyl_reflect(labels[1])), 2))
        strata.append(Stratum((labels[1], weyl_reflect(labels[n])), 2))

    return XRay(fixpoint_images(polygon), tuple(strata))

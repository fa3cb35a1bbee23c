"""Momentum polytope validity, wall vertex typing and triangle families.

A convex polygon inside the dominant chamber is the momentum polytope of
a (unique) multiplicity free U(2)-manifold with trivial principal
isotropy group iff it is 2-dimensional, every interior vertex satisfies
the Delzant condition and every wall vertex shows one of five cone
patterns.  Valid triangles fall into five parametrized families; the
parameters reconstruct the triangle exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import ChamberError, GeometryError, InvalidPolytopeError
from .lattice import (
    ALPHA,
    RationalPoint,
    Weight,
    coroot_pairing,
    cross,
    is_lattice_basis,
    primitive_ray,
)
from .polygon import Polygon, convex_hull

_ONE = Weight(1, 1)


# ---------------------------------------------------------------------------
# Wall vertex cone patterns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WallEdgePlus:
    """Rays {eps1+eps2, k(eps1+eps2)+eps1}."""

    k: int

    name = "wall_edge_plus"

    def rays(self) -> frozenset:
        return frozenset({_ONE, Weight(self.k + 1, self.k)})


@dataclass(frozen=True)
class WallEdgeMinus:
    """Rays {-(eps1+eps2), k(eps1+eps2)+eps1}."""

    k: int

    name = "wall_edge_minus"

    def rays(self) -> frozenset:
        return frozenset({-_ONE, Weight(self.k + 1, self.k)})


@dataclass(frozen=True)
class HalfReflPlus:
    """Rays {alpha, j*alpha+eps1}."""

    j: int

    name = "half_refl_plus"

    def rays(self) -> frozenset:
        return frozenset({ALPHA, Weight(self.j + 1, -self.j)})


@dataclass(frozen=True)
class HalfReflMinus:
    """Rays {alpha, j*alpha-eps2}."""

    j: int

    name = "half_refl_minus"

    def rays(self) -> frozenset:
        return frozenset({ALPHA, Weight(self.j, -self.j - 1)})


@dataclass(frozen=True)
class Reflection:
    """Rays {j*alpha+eps1, j*alpha-eps2}."""

    j: int

    name = "reflection"

    def rays(self) -> frozenset:
        return frozenset({Weight(self.j + 1, -self.j), Weight(self.j, -self.j - 1)})


WallVertexType = Union[WallEdgePlus, WallEdgeMinus, HalfReflPlus, HalfReflMinus, Reflection]


def classify_wall_rays(r1: Weight, r2: Weight) -> Optional[WallVertexType]:
    """Match an unordered pair of primitive rays against the five wall
    patterns.  Returns None when no pattern matches; the patterns are
    mutually exclusive."""
    pair = {r1, r2}
    if len(pair) != 2:
        return None
    for w, cls in ((_ONE, WallEdgePlus), (-_ONE, WallEdgeMinus)):
        if w in pair:
            (other,) = pair - {w}
            if other.a - other.b == 1:
                return cls(other.b)
            return None
    if ALPHA in pair:
        (other,) = pair - {ALPHA}
        if other.a + other.b == 1 and other.a >= 1:
            return HalfReflPlus(other.a - 1)
        if other.a + other.b == -1 and other.a >= 0:
            return HalfReflMinus(other.a)
        return None
    p, q = sorted(pair, key=lambda w: -(w.a + w.b))
    if p.a + p.b == 1 and q.a + q.b == -1 and p.a == q.a + 1 and q.a >= 0:
        return Reflection(q.a)
    return None


# ---------------------------------------------------------------------------
# Validity report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexAnalysis:
    vertex: RationalPoint
    rays: tuple[Weight, Weight]
    on_wall: bool
    kind: str  # "interior_delzant" | "wall" | "invalid"
    wall_type: Optional[WallVertexType] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class ClassificationReport:
    valid: bool
    dimension: int
    vertex_data: tuple[VertexAnalysis, ...]
    failures: tuple[tuple[int, str], ...]

    def wall_vertex_types(self) -> list[tuple[RationalPoint, WallVertexType]]:
        return [
            (va.vertex, va.wall_type)
            for va in self.vertex_data
            if va.on_wall and va.wall_type is not None
        ]


def check_momentum_polytope(polygon: Polygon) -> ClassificationReport:
    """Run the four validity conditions; invalidity is a report value.

    Condition 2 (rationality) holds by construction for rational input.
    A polygon outside the chamber is an input error, not an invalid one.
    """
    if not polygon.is_in_chamber():
        raise ChamberError("polygon leaves the dominant chamber x >= y")

    failures: list[tuple[int, str]] = []
    dim = polygon.dimension()
    if dim != 2:
        failures.append((1, f"polytope has dimension {dim}, expected 2"))
        return ClassificationReport(False, dim, (), tuple(failures))

    data: list[VertexAnalysis] = []
    for v in polygon.vertices:
        rays = polygon.vertex_rays(v)
        on_wall = coroot_pairing(v) == 0
        if on_wall:
            wt = classify_wall_rays(*rays)
            if wt is None:
                reason = f"wall vertex {v} has rays {rays} matching no wall pattern"
                failures.append((4, reason))
                data.append(VertexAnalysis(v, rays, True, "invalid", None, reason))
            else:
                data.append(VertexAnalysis(v, rays, True, "wall", wt))
        else:
            if is_lattice_basis(*rays):
                data.append(VertexAnalysis(v, rays, False, "interior_delzant"))
            else:
                reason = f"interior vertex {v} has non-unimodular rays {rays}"
                failures.append((3, reason))
                data.append(VertexAnalysis(v, rays, False, "invalid", None, reason))

    return ClassificationReport(not failures, dim, tuple(data), tuple(failures))


# ---------------------------------------------------------------------------
# Triangle families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DelzantFamily:
    """r(-eps2) + s(eps1+eps2) + t*conv(0, d1, d2) with d_i = a_i(-eps2)+b_i*eps1,
    a1*b2 - a2*b1 = 1 and a_i + b_i >= 0."""

    r: Fraction
    s: Fraction
    t: Fraction
    a1: int
    b1: int
    a2: int
    b2: int

    tag = "delzant"

    def deltas(self) -> tuple[Weight, Weight]:
        return Weight(self.b1, -self.a1), Weight(self.b2, -self.a2)

    def triangle(self) -> Polygon:
        base = RationalPoint(self.s, self.s - self.r)
        d1, d2 = self.deltas()
        return convex_hull(
            [base, base + d1.to_point().scale(self.t), base + d2.to_point().scale(self.t)]
        )


@dataclass(frozen=True)
class WallEdgeFamily:
    """s(eps1+eps2) + t*conv(0, l(eps1+eps2), k(eps1+eps2)+eps1), l in {+1,-1}."""

    s: Fraction
    t: Fraction
    k: int
    l: int

    tag = "wall_edge"

    def triangle(self) -> Polygon:
        base = RationalPoint(self.s, self.s)
        w2 = base + _ONE.to_point().scale(self.l * self.t)
        apex = base + Weight(self.k + 1, self.k).to_point().scale(self.t)
        return convex_hull([base, w2, apex])


@dataclass(frozen=True)
class HalfReflPlusFamily:
    """s(eps1+eps2) + t*conv(0, alpha, j*alpha+eps1)."""

    s: Fraction
    t: Fraction
    j: int

    tag = "half_refl_plus"

    def triangle(self) -> Polygon:
        base = RationalPoint(self.s, self.s)
        return convex_hull(
            [
                base,
                base + ALPHA.to_point().scale(self.t),
                base + Weight(self.j + 1, -self.j).to_point().scale(self.t),
            ]
        )


@dataclass(frozen=True)
class HalfReflMinusFamily:
    """s(eps1+eps2) + t*conv(0, alpha, j*alpha-eps2)."""

    s: Fraction
    t: Fraction
    j: int

    tag = "half_refl_minus"

    def triangle(self) -> Polygon:
        base = RationalPoint(self.s, self.s)
        return convex_hull(
            [
                base,
                base + ALPHA.to_point().scale(self.t),
                base + Weight(self.j, -self.j - 1).to_point().scale(self.t),
            ]
        )


@dataclass(frozen=True)
class ReflectionFamily:
    """s(eps1+eps2) + t*conv(0, eps1, -eps2)."""

    s: Fraction
    t: Fraction

    tag = "reflection"

    def triangle(self) -> Polygon:
        base = RationalPoint(self.s, self.s)
        return convex_hull(
            [
                base,
                base + Weight(1, 0).to_point().scale(self.t),
                base + Weight(0, -1).to_point().scale(self.t),
            ]
        )


TriangleFamily = Union[
    DelzantFamily, WallEdgeFamily, HalfReflPlusFamily, HalfReflMinusFamily, ReflectionFamily
]


def _ray_scale(edge_vec: RationalPoint, ray: Weight) -> Fraction:
    """The positive t with edge_vec = t * ray."""
    t = Fraction(edge_vec.x, ray.a) if ray.a else Fraction(edge_vec.y, ray.b)
    if edge_vec != ray.to_point().scale(t) or t <= 0:
        raise AssertionError(f"{edge_vec} is not a positive multiple of {ray}")
    return t


def classify_triangle(polygon: Polygon) -> TriangleFamily:
    """Recognize a valid momentum-polytope triangle as one of the five
    families, with a deterministic choice of parameters.

    The wall-vertex count fully determines the family tag: 0 vertices on
    the wall give the Delzant family, 2 the wall-edge family, 1 one of
    the remaining three according to the wall pattern.
    """
    report = check_momentum_polytope(polygon)
    if len(polygon) != 3:
        raise GeometryError("triangle classification needs exactly 3 vertices")
    if not report.valid:
        raise InvalidPolytopeError(
            "not a momentum polytope: " + "; ".join(msg for _, msg in report.failures)
        )
    wall = polygon.wall_vertices()

    if len(wall) == 0:
        # Base vertex: minimal coroot pairing, ties broken lexicographically.
        base = min(polygon.vertices, key=lambda v: (coroot_pairing(v), v))
        others = [v for v in polygon.vertices if v != base]
        rays = [primitive_ray(v - base) for v in others]
        scales = [_ray_scale(others[i] - base, rays[i]) for i in range(2)]
        if scales[0] != scales[1]:
            raise AssertionError("edge scales disagree on a valid Delzant triangle")
        if cross(rays[0], rays[1]) < 0:
            rays.reverse()
        d1, d2 = rays
        return DelzantFamily(
            r=coroot_pairing(base),
            s=base.x,
            t=scales[0],
            a1=-d1.b,
            b1=d1.a,
            a2=-d2.b,
            b2=d2.a,
        )

    if len(wall) == 2:
        # Canonical base: the wall vertex further down the wall, so that the
        # wall edge always points in the +(eps1+eps2) direction (l = +1).
        base = min(wall)
        other_wall = max(wall)
        (apex,) = [v for v in polygon.vertices if coroot_pairing(v) > 0]
        rho = primitive_ray(apex - base)
        if rho.a - rho.b != 1:
            raise AssertionError("apex ray of a valid wall-edge triangle must have pairing 1")
        t = coroot_pairing(apex - base)
        if other_wall - base != _ONE.to_point().scale(t):
            raise AssertionError("wall edge length disagrees with the apex scale")
        return WallEdgeFamily(s=base.x, t=t, k=rho.b, l=1)

    # Exactly one wall vertex.
    (w,) = wall
    wt = dict(report.wall_vertex_types())[w]
    others = [v for v in polygon.vertices if v != w]
    if isinstance(wt, Reflection):
        if wt.j != 0:
            raise AssertionError("valid reflection-type triangles always have j = 0")
        ray_map = {Weight(1, 0): None, Weight(0, -1): None}
    elif isinstance(wt, HalfReflPlus):
        ray_map = {ALPHA: None, Weight(wt.j + 1, -wt.j): None}
    else:
        ray_map = {ALPHA: None, Weight(wt.j, -wt.j - 1): None}

    for v in others:
        rho = primitive_ray(v - w)
        if rho not in ray_map:
            raise AssertionError(f"edge ray {rho} does not match the wall pattern {wt}")
        ray_map[rho] = _ray_scale(v - w, rho)
    scales = list(ray_map.values())
    if scales[0] != scales[1]:
        raise AssertionError("edge scales disagree on a valid one-wall-vertex triangle")
    t = scales[0]

    if isinstance(wt, Reflection):
        return ReflectionFamily(s=w.x, t=t)
    if isinstance(wt, HalfReflPlus):
        return HalfReflPlusFamily(s=w.x, t=t, j=wt.j)
    return HalfReflMinusFamily(s=w.x, t=t, j=wt.j)


# ---------------------------------------------------------------------------
# Manifold models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TotalSpace:
    """Structured description of the total space realizing a triangle family."""

    kind: str  # "projective_bundle_over_sphere" | "projective_space" | "oriented_grassmannian"
    weights: tuple[Weight, ...]  # fiber weights, or representation weights, or ()


@dataclass(frozen=True)
class ManifoldModel:
    family: TriangleFamily
    total_space: TotalSpace
    gl2_variety_label: str
    local_models: tuple[tuple[WallVertexType, str], ...]


def _wfmt(w: Weight) -> str:
    return f"({w.a},{w.b})"


def local_model_label(wt: WallVertexType) -> str:
    """Smooth affine spherical GL(2)-variety providing the local model at a
    wall vertex of the given type."""
    if isinstance(wt, WallEdgePlus):
        return f"(C^2 (x) det^-{wt.k + 1}) x det^-1"
    if isinstance(wt, WallEdgeMinus):
        return f"(C^2 (x) det^-{wt.k + 1}) x det^1"
    if isinstance(wt, HalfReflPlus):
        return f"GL(2) x_TC C_-({wt.j}*alpha+eps1)"
    if isinstance(wt, HalfReflMinus):
        return f"GL(2) x_TC C_-({wt.j}*alpha-eps2)"
    return f"GL(2)/{{diag(z^{wt.j}, z^{wt.j + 1})}}"


def wall_vertex_types_of_family(fam: TriangleFamily) -> tuple[WallVertexType, ...]:
    if isinstance(fam, DelzantFamily):
        return ()
    if isinstance(fam, WallEdgeFamily):
        if fam.l == 1:
            return (WallEdgePlus(fam.k), WallEdgeMinus(fam.k - 1))
        return (WallEdgeMinus(fam.k), WallEdgePlus(fam.k + 1))
    if isinstance(fam, HalfReflPlusFamily):
        return (HalfReflPlus(fam.j),)
    if isinstance(fam, HalfReflMinusFamily):
        return (HalfReflMinus(fam.j),)
    return (Reflection(0),)


def manifold_model(fam: TriangleFamily) -> ManifoldModel:
    """Total space, complex-variety label and local models for a triangle family."""
    if isinstance(fam, DelzantFamily):
        d1, d2 = fam.deltas()
        total = TotalSpace("projective_bundle_over_sphere", (Weight(0, 0), -d1, -d2))
        label = f"GL(2) x_B- P(C + C_-{_wfmt(d1)} + C_-{_wfmt(d2)})"
    elif isinstance(fam, WallEdgeFamily):
        k, l = fam.k, fam.l
        total = TotalSpace(
            "projective_space",
            (
                Weight(-k, -k - 1),       # eps1 - (k+1)(eps1+eps2)
                Weight(-k - 1, -k),       # eps2 - (k+1)(eps1+eps2)
                Weight(-l, -l),
                Weight(0, 0),
            ),
        )
        total_label = f"P((C^2 (x) det^-{k + 1}) + det^-{l} + C)"
        label = total_label
    elif isinstance(fam, HalfReflPlusFamily):
        total = TotalSpace(
            "projective_bundle_over_sphere",
            (Weight(1, 0), Weight(0, 1), Weight(-fam.j, fam.j)),
        )
        label = f"GL(2) x_B- P(C^2 + C_-{fam.j}*alpha)"
    elif isinstance(fam, HalfReflMinusFamily):
        total = TotalSpace(
            "projective_bundle_over_sphere",
            (Weight(-1, 0), Weight(0, -1), Weight(-fam.j, fam.j)),
        )
        label = f"GL(2) x_B- P((C^2)* + C_-{fam.j}*alpha)"
    else:
        total = TotalSpace("oriented_grassmannian", ())
        label = "SO(5,C)/P"

    locals_ = tuple((wt, local_model_label(wt)) for wt in wall_vertex_types_of_family(fam))
    return ManifoldModel(fam, total, label, locals_)

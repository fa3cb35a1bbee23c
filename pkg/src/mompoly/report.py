"""Input documents and classification reports.

Polytope documents are JSON objects with a "vertices" list of [x, y]
pairs; coordinates are integers or exact fraction strings "p/q".
Reports mirror the full analysis with a fixed key order so output is
byte-identical across runs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .classify import (
    TriangleFamily,
    check_momentum_polytope,
    classify_triangle,
    manifold_model,
)
from .difftype import chern_mod3_at_vertex, diffeo_type
from .errors import UnsupportedPolytopeError
from .kaehler import (
    atiyah_cross_check,
    build_xray,
    fixpoint_boundary_check,
    fixpoint_images,
    is_kaehlerizable,
)
from .lattice import RationalPoint, Weight
from .polygon import convex_hull


class DocumentError(ValueError):
    """The input document does not parse to a polytope."""


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(value: Union[int, str]) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"coordinate {value!r} is not an integer or fraction string")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"cannot parse coordinate {value!r}: {exc}") from None


def _coord_out(q: Fraction) -> Union[int, str]:
    return q.numerator if q.denominator == 1 else format_rational(q)


def point_out(p: RationalPoint) -> list:
    return [_coord_out(p.x), _coord_out(p.y)]


def weight_out(w: Weight) -> list[int]:
    return [w.a, w.b]


def parse_polytope_document(text: str) -> list[RationalPoint]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise DocumentError('document must be an object with a "vertices" list')
    raw = doc["vertices"]
    if not isinstance(raw, list) or not raw:
        raise DocumentError('"vertices" must be a non-empty list')
    points = []
    for entry in raw:
        if not isinstance(entry, list) or len(entry) != 2:
            raise DocumentError(f"vertex {entry!r} is not an [x, y] pair")
        points.append(RationalPoint(parse_rational(entry[0]), parse_rational(entry[1])))
    return points


def polytope_document(points: list[RationalPoint]) -> dict:
    return {"vertices": [point_out(p) for p in points]}


def render_document(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _not_applicable(reason: str) -> dict:
    return {"applicable": False, "reason": reason}


def _family_out(fam: TriangleFamily) -> dict:
    out = {"family": fam.tag}
    for name in fam.__dataclass_fields__:
        value = getattr(fam, name)
        out[name] = format_rational(value) if isinstance(value, Fraction) else value
    return out


def full_report(points: list[RationalPoint]) -> dict:
    """Complete classification report for the convex hull of the input points.

    Sections that do not apply (e.g. a triangle family for a quadrilateral,
    or an x-ray with two wall vertices) carry an explicit reason instead.
    Raises ChamberError for polytopes leaving the chamber.
    """
    polygon = convex_hull(points)
    report = check_momentum_polytope(polygon)

    failed = {cid for cid, _ in report.failures}
    doc = {
        "input": polytope_document(points),
        "hull_vertices": [point_out(v) for v in polygon.vertices],
        "valid": report.valid,
        "conditions": {
            "1_dimension_two": 1 not in failed,
            "2_rationality": "satisfied by construction",
            "3_interior_delzant": 3 not in failed,
            "4_wall_patterns": 4 not in failed,
        },
        "failures": [{"condition": cid, "reason": msg} for cid, msg in report.failures],
        "vertex_analyses": [
            {
                "vertex": point_out(va.vertex),
                "rays": [weight_out(r) for r in va.rays],
                "on_wall": va.on_wall,
                "kind": va.kind,
                "wall_type": (
                    {"name": va.wall_type.name, **_params(va.wall_type)}
                    if va.wall_type is not None
                    else None
                ),
                "reason": va.reason,
            }
            for va in report.vertex_data
        ],
    }

    if not report.valid:
        reason = "polytope is not a valid momentum polytope"
        doc["kaehler"] = _not_applicable(reason)
        doc["fixpoint_images"] = _not_applicable(reason)
        doc["triangle_family"] = _not_applicable(reason)
        doc["manifold_model"] = _not_applicable(reason)
        doc["diffeo_type"] = _not_applicable(reason)
        doc["xray"] = _not_applicable(reason)
        doc["atiyah_cross_check"] = _not_applicable(reason)
        return doc

    verdict, witness = is_kaehlerizable(polygon)
    doc["kaehler"] = {
        "verdict": verdict,
        "witness_edge": (
            [point_out(witness.tail), point_out(witness.head)] if witness else None
        ),
    }
    images = fixpoint_images(polygon)
    doc["fixpoint_images"] = [
        {"point": point_out(p), "multiplicity": m} for p, m in sorted(images.items())
    ]

    if len(polygon) == 3:
        fam = classify_triangle(polygon)
        model = manifold_model(fam)
        doc["triangle_family"] = _family_out(fam)
        doc["manifold_model"] = {
            "total_space_kind": model.total_space.kind,
            "weights": [weight_out(w) for w in model.total_space.weights],
            "gl2_variety": model.gl2_variety_label,
            "local_models": [
                {"wall_type": {"name": wt.name, **_params(wt)}, "variety": label}
                for wt, label in model.local_models
            ],
        }
        dt = {"type": diffeo_type(fam, polygon).value}
        if fam.tag in ("delzant", "half_refl_plus", "half_refl_minus"):
            dt["chern_mod3"] = chern_mod3_at_vertex(polygon, polygon.vertices[0])
        doc["diffeo_type"] = dt
    else:
        reason = "triangle families apply to triangles only"
        doc["triangle_family"] = _not_applicable(reason)
        doc["manifold_model"] = _not_applicable(reason)
        doc["diffeo_type"] = _not_applicable(reason)

    try:
        doc["fixpoint_boundary_check"] = fixpoint_boundary_check(polygon)
        doc["atiyah_cross_check"] = atiyah_cross_check(polygon)
    except UnsupportedPolytopeError as exc:
        doc["fixpoint_boundary_check"] = _not_applicable(str(exc))
        doc["atiyah_cross_check"] = _not_applicable(str(exc))
    try:
        xray = build_xray(polygon)
        doc["xray"] = {
            "strata": [
                {
                    "segment": [point_out(s.segment[0]), point_out(s.segment[1])],
                    "dimension": s.dimension,
                }
                for s in xray.strata
            ],
        }
    except UnsupportedPolytopeError as exc:
        doc["xray"] = _not_applicable(str(exc))
    return doc


def _params(wall_type) -> dict:
    return {name: getattr(wall_type, name) for name in wall_type.__dataclass_fields__}

"""Arc certificates: schema, canonical JSON serialization, reverification.

A certificate names a field, a group, a point list and four claims (arc,
complete, stabilizer order, stabilizer structure).  Verification trusts
nothing: every claim is recomputed from the field spec up, using only
the field, plane and collineation layers, so a certificate emitted by
the search can be checked by a reader that never imports the search.

Bundled fixtures carry known complete 14-arcs of PG(2,31) and PG(2,32).
The PG(2,32) ones are published as pairs of exponents of a primitive
field generator without a usable modulus; resolve_gf32_polynomial sweeps
all six degree-5 primitive polynomials over GF(2), reverifies both arcs
under each, and reports which candidates satisfy every claim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import combinations, product

from .collineation import DegenerateSetError, GROUPS, PGAMMAL, stabilizer
from .gf import FieldError, build_field
from .plane import Plane, build_plane

CLAIM_KEYS = ("is_arc", "is_complete", "stabilizer_order", "stabilizer_name")


class MalformedCertificateError(ValueError):
    """Certificate does not follow the schema."""


class FieldMismatchError(ValueError):
    """Point coordinates are not elements of the declared field."""


@dataclass
class ArcCertificate:
    p: int
    h: int
    modulus: tuple[int, ...]
    group: str
    points: list[tuple[int, int, int]]
    claims: dict
    meta: dict | None = None


@dataclass
class VerifyReport:
    valid: bool
    failures: list[dict]
    computed: dict


def certificate_from_dict(data: dict) -> ArcCertificate:
    try:
        fld = data["field"]
        cert = ArcCertificate(
            p=int(fld["p"]),
            h=int(fld["h"]),
            modulus=tuple(int(c) for c in fld["modulus"]),
            group=data["group"],
            points=[tuple(int(c) for c in pt) for pt in data["points"]],
            claims={k: data["claims"][k] for k in CLAIM_KEYS},
            meta=data.get("meta"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificateError(f"bad certificate structure: {exc}") from exc
    if cert.group not in GROUPS:
        raise MalformedCertificateError(f"unknown group {cert.group!r}")
    if any(len(pt) != 3 for pt in cert.points):
        raise MalformedCertificateError("points must be coordinate triples")
    if not isinstance(cert.claims["is_arc"], bool) or not isinstance(
        cert.claims["is_complete"], bool
    ):
        raise MalformedCertificateError("is_arc / is_complete claims must be booleans")
    if not isinstance(cert.claims["stabilizer_order"], int) or not isinstance(
        cert.claims["stabilizer_name"], str
    ):
        raise MalformedCertificateError("stabilizer claims must be (int, str)")
    return cert


def parse_certificate(text: str) -> ArcCertificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedCertificateError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise MalformedCertificateError("certificate must be a JSON object")
    return certificate_from_dict(data)


def certificate_to_dict(cert: ArcCertificate) -> dict:
    out = {
        "field": {"p": cert.p, "h": cert.h, "modulus": list(cert.modulus)},
        "group": cert.group,
        "points": [list(pt) for pt in cert.points],
        "claims": {k: cert.claims[k] for k in CLAIM_KEYS},
    }
    if cert.meta is not None:
        out["meta"] = cert.meta
    return out


def serialize_certificate(cert: ArcCertificate) -> str:
    """Canonical form: fixed key order, points in ascending index order
    (lexicographic on normalized triples), UTF-8, trailing newline."""
    cert.points.sort()
    return json.dumps(certificate_to_dict(cert), indent=2, ensure_ascii=False) + "\n"


def make_certificate(plane: Plane, group: str, point_ids, meta: dict | None = None) -> ArcCertificate:
    """Certificate for a point set with claims filled in by recomputation."""
    ids = sorted(set(point_ids))
    collinear, complete, stab = _recompute(plane, group, ids)
    params = plane.field.params
    claims = {
        "is_arc": collinear is None,
        "is_complete": complete,
        "stabilizer_order": stab.order if stab else 0,
        "stabilizer_name": stab.name if stab else "unknown",
    }
    return ArcCertificate(
        p=params.p,
        h=params.ext_degree,
        modulus=params.modulus,
        group=group,
        points=[plane.points[i] for i in ids],
        claims=claims,
        meta=meta,
    )


def _secant_cover_mask(plane: Plane, ids) -> int:
    n = plane.size
    lt = plane.line_through_flat
    lm = plane.line_masks
    u = 0
    for a, b in combinations(ids, 2):
        u |= lm[lt[a * n + b]]
    return u


def _recompute(plane: Plane, group: str, ids):
    """(collinear triple or None, completeness, structure or None)."""
    bad = plane.collinear_triple(ids)
    members = 0
    for i in ids:
        members |= 1 << i
    uncovered = plane.all_points_mask & ~_secant_cover_mask(plane, ids) & ~members
    try:
        _, structure = stabilizer(plane, ids, group)
    except DegenerateSetError:
        structure = None
    return bad, uncovered == 0, structure


def verify(cert: ArcCertificate) -> VerifyReport:
    """Recompute every claim from scratch and compare."""
    try:
        field = build_field(cert.p, cert.h, list(cert.modulus))
    except FieldError as exc:
        raise MalformedCertificateError(f"bad field spec: {exc}") from exc
    q = field.q
    for pt in cert.points:
        if any(not 0 <= c < q for c in pt):
            raise FieldMismatchError(f"point {list(pt)} has codes outside GF({q})")
        if pt == (0, 0, 0):
            raise MalformedCertificateError("the zero triple is not a point")
    plane = build_plane(field)
    ids = sorted(plane.point_id(pt) for pt in cert.points)
    if len(set(ids)) != len(ids):
        raise MalformedCertificateError("points are not distinct after normalization")

    bad, complete, structure = _recompute(plane, cert.group, ids)
    failures = []
    # degenerate sets (no general-position quadruple) have no stabilizer
    # to compute; the 0/"unknown" encoding matches make_certificate
    computed = {
        "is_arc": bad is None,
        "is_complete": complete,
        "stabilizer_order": structure.order if structure else 0,
        "stabilizer_name": structure.name if structure else "unknown",
    }
    if (bad is None) != cert.claims["is_arc"]:
        failures.append(
            {
                "claim": "is_arc",
                "claimed": cert.claims["is_arc"],
                "computed": bad is None,
                "witness": None if bad is None else [list(plane.points[i]) for i in bad],
            }
        )
    if complete != cert.claims["is_complete"]:
        witness = None
        if not complete:
            members = 0
            for i in ids:
                members |= 1 << i
            unc = plane.all_points_mask & ~_secant_cover_mask(plane, ids) & ~members
            first = (unc & -unc).bit_length() - 1
            witness = list(plane.points[first])
        failures.append(
            {
                "claim": "is_complete",
                "claimed": cert.claims["is_complete"],
                "computed": complete,
                "witness": witness,
            }
        )
    order = computed["stabilizer_order"]
    name = computed["stabilizer_name"]
    if order != cert.claims["stabilizer_order"]:
        failures.append(
            {
                "claim": "stabilizer_order",
                "claimed": cert.claims["stabilizer_order"],
                "computed": order,
                "witness": None,
            }
        )
    if name != cert.claims["stabilizer_name"]:
        failures.append(
            {
                "claim": "stabilizer_name",
                "claimed": cert.claims["stabilizer_name"],
                "computed": name,
                "witness": None,
            }
        )
    return VerifyReport(valid=not failures, failures=failures, computed=computed)


# ---------------------------------------------------------------------------
# PG(2,32) modulus resolution

FRAME_TRIPLES = [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]


def degree5_primitive_moduli() -> list[tuple[int, ...]]:
    """All primitive degree-5 polynomials over GF(2), in ascending
    coefficient-tuple order.  There are exactly six: 30 generators of
    GF(32)* in 5-element conjugacy classes."""
    out = []
    for tail in product(range(2), repeat=5):
        cand = (*tail, 1)
        try:
            build_field(2, 5, cand)
        except FieldError:
            continue
        out.append(cand)
    return out


def points_from_exponents(field, exponents) -> list[tuple[int, int, int]]:
    """Frame plus points (1, g^a, g^b) for the generator g of the field."""
    exp = field.exp
    pts = list(FRAME_TRIPLES)
    pts.extend((1, exp[a], exp[b]) for a, b in exponents)
    return pts


def _sweep_case(plane: Plane, exponents, want_order: int, want_name: str) -> dict:
    triples = points_from_exponents(plane.field, exponents)
    ids = sorted(plane.point_id(t) for t in triples)
    result: dict = {"distinct": len(set(ids)) == len(triples)}
    bad, complete, structure = _recompute(plane, PGAMMAL, ids)
    result["is_arc"] = bad is None
    if bad is not None:
        result["collinear_triple"] = [list(plane.points[i]) for i in bad]
    result["is_complete"] = complete
    result["stabilizer_order"] = structure.order if structure else None
    result["stabilizer_name"] = structure.name if structure else None
    result["passes"] = (
        result["distinct"]
        and result["is_arc"]
        and complete
        and result["stabilizer_order"] == want_order
        and result["stabilizer_name"] == want_name
    )
    return result


def resolve_gf32_polynomial(k2_exponents, k3_exponents):
    """Sweep the six candidate moduli for GF(32) and reverify both
    published 14-arcs under each.  Returns (passing moduli, report);
    an empty passing list is reported, not raised."""
    k2 = [tuple(e) for e in k2_exponents]
    k3 = [tuple(e) for e in k3_exponents]
    report = {"candidates": []}
    passing = []
    for modulus in degree5_primitive_moduli():
        field = build_field(2, 5, list(modulus))
        plane = build_plane(field)
        entry = {
            "modulus": list(modulus),
            "arc_z4": _sweep_case(plane, k2, 4, "Z4"),
            "arc_z5": _sweep_case(plane, k3, 5, "Z5"),
        }
        entry["passes"] = entry["arc_z4"]["passes"] and entry["arc_z5"]["passes"]
        if entry["passes"]:
            passing.append(modulus)
        report["candidates"].append(entry)
    report["passing"] = [list(m) for m in passing]
    return passing, report


# ---------------------------------------------------------------------------
# fixtures


def fixture_text(name: str) -> str:
    res = resources.files("pgarc") / "fixtures" / f"{name}.json"
    return res.read_text(encoding="utf-8")


def load_fixture(name: str) -> ArcCertificate:
    return parse_certificate(fixture_text(name))


def fixture_names() -> list[str]:
    folder = resources.files("pgarc") / "fixtures"
    return sorted(p.name[:-5] for p in folder.iterdir() if p.name.endswith(".json"))

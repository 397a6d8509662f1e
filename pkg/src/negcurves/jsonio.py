"""JSON documents for chains, triangles, curves, verdicts and census reports.

Rationals are always strings ("p/q", or "p" when integral) and never floats.
Polynomials are stored as [a, b, "c"] term lists plus a human-readable text
field; the term list is authoritative. Every document carries a "type" key and
:func:`decode` inverts :func:`encode`. See docs/json_schema.md.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .families import FamilyTriangle, Kind, make_triangle
from .geometry import AffineLatticeMap, Point, Triangle
from . import geometry as geo
from .laurent import LaurentPoly, to_text, vanishing_order
from .mds import MdsVerdict, Status
from .pell import PellSolution
from .search import CensusClass, CensusReport, CurveRecord, Match
from .solver import Irreducibility, NegativeCurve

SCHEMA_VERSION = 1


def q(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def unq(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ValueError(f"expected a rational string, got {text!r}")
    return Fraction(text)


def poly_doc(p: LaurentPoly) -> dict:
    return {"terms": [[a, b, q(c)] for (a, b), c in p.items()], "text": to_text(p)}


def poly_from(doc: dict) -> LaurentPoly:
    return LaurentPoly({(a, b): unq(c) for a, b, c in doc["terms"]})


def map_doc(f: AffineLatticeMap) -> dict:
    return f.as_dict()


def map_from(doc: dict) -> AffineLatticeMap:
    (a, b), (c, d) = doc["matrix"]
    tx, ty = doc["translation"]
    return AffineLatticeMap(a, b, c, d, tx, ty)


def vertices_doc(t: Triangle) -> list:
    return [[q(v.x), q(v.y)] for v in t.vertices]


def triangle_from(vertices: list) -> Triangle:
    return Triangle(*(Point(unq(x), unq(y)) for x, y in vertices))


# -- per-type encoders --------------------------------------------------------

def chain_doc(K: int, chain: list[PellSolution]) -> dict:
    return {"type": "pell_chain", "K": K, "solutions": [[s.M, s.N] for s in chain]}


def family_doc(t: FamilyTriangle) -> dict:
    tri = t.triangle
    return {
        "type": "triangle",
        "family": t.kind.value,
        "K": t.K, "M": t.M, "N": t.N,
        "alpha": q(t.alpha), "beta": q(t.beta),
        "vertices": vertices_doc(tri),
        "m": t.m, "h": t.h, "b": q(t.b),
        "twice_area": q(geo.twice_area(tri)),
        "lattice_count": geo.lattice_count(tri),
        "column_profile": list(geo.column_profile(tri)),
        "multiplicities": list(geo.normal_fan_multiplicities(list(tri.vertices))),
    }


def _family_from(doc: dict) -> FamilyTriangle:
    s = PellSolution(doc["K"], doc["M"], doc["N"])
    return make_triangle(doc["family"], s, unq(doc["alpha"]), unq(doc["beta"]))


def curve_doc(nc: NegativeCurve) -> dict:
    if isinstance(nc.triangle, FamilyTriangle):
        where = family_doc(nc.triangle)
    else:
        where = {"type": "raw_triangle", "vertices": vertices_doc(nc.triangle)}
    return {
        "type": "curve",
        "triangle": where,
        "m": nc.m,
        "poly": poly_doc(nc.poly),
        "vanishing_order": vanishing_order(nc.poly),
        "self_intersection": q(nc.self_intersection),
        "irreducibility": nc.irreducibility.value,
    }


def mds_doc(t: FamilyTriangle, v: MdsVerdict) -> dict:
    return {
        "type": "mds",
        "triangle": family_doc(t),
        "status": v.status.value,
        "witness": None if v.witness is None else poly_doc(v.witness),
        "reason": v.reason,
    }


def _match_doc(mt: Match) -> dict:
    return {"family": mt.kind.value, "K": mt.K, "M": mt.M, "N": mt.N,
            "label": mt.label(), "map": map_doc(mt.map)}


def _match_from(doc: dict) -> Match:
    return Match(Kind.parse(doc["family"]), doc["K"], doc["M"], doc["N"], map_from(doc["map"]))


def census_doc(r: CensusReport) -> dict:
    return {
        "type": "census",
        "m": r.m,
        "bounds": {"h_max": r.h_max, "k_max": r.k_max},
        "exhaustive_within": r.exhaustive_within,
        "cells": r.cells,
        "triangles": [
            {
                "vertices": vertices_doc(rec.triangle),
                "h": rec.h, "K": rec.K, "b": q(rec.b),
                "poly": poly_doc(rec.poly),
                "self_intersection": q(rec.self_intersection),
                "matches": [_match_doc(mt) for mt in rec.matches],
            }
            for rec in r.records
        ],
        "classes": [
            {
                "representative": None if c.representative is None else _match_doc(c.representative),
                "members": list(c.members),
                "matches": [_match_doc(mt) for mt in c.matches],
            }
            for c in r.classes
        ],
        "flagged": list(r.flagged),
        "notes": list(r.notes),
    }


def _census_from(doc: dict) -> CensusReport:
    records = [
        CurveRecord(triangle_from(d["vertices"]), d["h"], d["K"], unq(d["b"]), poly_from(d["poly"]),
                    unq(d["self_intersection"]), [_match_from(x) for x in d["matches"]])
        for d in doc["triangles"]
    ]
    classes = [
        CensusClass(None if c["representative"] is None else _match_from(c["representative"]),
                    list(c["members"]), [_match_from(x) for x in c["matches"]])
        for c in doc["classes"]
    ]
    return CensusReport(doc["m"], doc["bounds"]["h_max"], doc["bounds"]["k_max"], doc["cells"],
                        records, classes, list(doc["flagged"]), list(doc["notes"]))


# -- generic entry points -----------------------------------------------------

def encode(obj, **extra) -> dict:
    """Document for a domain object; ``extra`` keys are merged at the top level."""
    if isinstance(obj, FamilyTriangle):
        doc = family_doc(obj)
    elif isinstance(obj, NegativeCurve):
        doc = curve_doc(obj)
    elif isinstance(obj, CensusReport):
        doc = census_doc(obj)
    elif isinstance(obj, tuple) and len(obj) == 2 and isinstance(obj[1], MdsVerdict):
        doc = mds_doc(*obj)
    elif isinstance(obj, list) and obj and all(isinstance(s, PellSolution) for s in obj):
        doc = chain_doc(obj[0].K, obj)
    else:
        raise TypeError(f"no JSON encoding for {type(obj).__name__}")
    doc["schema"] = SCHEMA_VERSION
    doc.update(extra)
    return doc


def decode(doc: dict) -> Any:
    kind = doc.get("type")
    if kind == "pell_chain":
        return [PellSolution(doc["K"], M, N) for M, N in doc["solutions"]]
    if kind == "triangle":
        return _family_from(doc)
    if kind == "curve":
        where = doc["triangle"]
        t = _family_from(where) if where["type"] == "triangle" else triangle_from(where["vertices"])
        return NegativeCurve(t, doc["m"], poly_from(doc["poly"]), unq(doc["self_intersection"]),
                             Irreducibility(doc["irreducibility"]))
    if kind == "mds":
        w = doc["witness"]
        return (_family_from(doc["triangle"]),
                MdsVerdict(Status(doc["status"]), None if w is None else poly_from(w), doc["reason"]))
    if kind == "census":
        return _census_from(doc)
    raise ValueError(f"unknown document type {kind!r}")


def dumps(obj, **extra) -> str:
    return json.dumps(encode(obj, **extra), indent=2, sort_keys=False)


def loads(text: str) -> Any:
    return decode(json.loads(text))

"""JSON schemas: rationals as "p/q" strings, versioned documents, exact roundtrips."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .actions import ActionAssignment, FaithfulAction
from .cotree import Classification, EmbeddingWitness
from .graphs import SimplicialGraph
from .intervals import IntervalSet, wrapped_components
from .plmaps import PLMapCircle, PLMapInterval, PLMap, RotationResult
from .words import format_word

SCHEMA_VERSION = 1


def frac_to_str(x) -> str:
    return str(Fraction(x))


def str_to_frac(s: str) -> Fraction:
    return Fraction(s)


def map_to_obj(m: PLMap) -> dict:
    domain = "S1" if isinstance(m, PLMapCircle) else "I"
    return {
        "domain": domain,
        "points": [[frac_to_str(x), frac_to_str(y)] for x, y in m.points],
    }


def obj_to_map(obj: dict) -> PLMap:
    pts = [(str_to_frac(x), str_to_frac(y)) for x, y in obj["points"]]
    if obj["domain"] == "S1":
        return PLMapCircle.from_points(pts)
    if obj["domain"] == "I":
        return PLMapInterval.from_points(pts)
    raise ValueError(f"unknown domain {obj['domain']!r}")


def support_to_obj(s: IntervalSet, domain: str = "I") -> list:
    if domain == "S1":
        return [[frac_to_str(a), frac_to_str(b)] for a, b, _, _ in wrapped_components(s)]
    return [[frac_to_str(a), frac_to_str(b)] for a, _, b, _ in s.parts]


def set_to_obj(s: IntervalSet) -> list:
    """Verbatim interval parts with openness flags, for report payloads."""
    return [
        [frac_to_str(a), bool(ac), frac_to_str(b), bool(bc)] for a, ac, b, bc in s.parts
    ]


def assignment_to_obj(asg: ActionAssignment) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "kind": "action",
        "maps": {
            "a": map_to_obj(asg.a),
            "b": map_to_obj(asg.b),
            "t": map_to_obj(asg.t),
        },
        "x0": frac_to_str(asg.basepoint),
    }


def obj_to_assignment(obj: dict) -> ActionAssignment:
    maps = obj["maps"]
    return ActionAssignment(
        a=obj_to_map(maps["a"]),
        b=obj_to_map(maps["b"]),
        t=obj_to_map(maps["t"]),
        basepoint=str_to_frac(obj["x0"]),
    )


def faithful_to_obj(fa: FaithfulAction) -> dict:
    doc = assignment_to_obj(fa.assignment)
    doc["words"] = [format_word(w) for w in fa.words]
    doc["witnesses"] = [frac_to_str(x) for x in fa.witnesses]
    return doc


def graph_to_obj(g: SimplicialGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [[u, v] for u, v in g.sorted_edges()],
    }


def obj_to_graph(obj: dict) -> SimplicialGraph:
    return SimplicialGraph.build(obj["vertices"], [tuple(e) for e in obj["edges"]])


def classification_to_obj(
    g: SimplicialGraph,
    cls: Classification,
    witness: Union[EmbeddingWitness, None] = None,
) -> dict:
    verdict = cls.verdict
    doc = {
        "version": SCHEMA_VERSION,
        "kind": "classification",
        "graph": graph_to_obj(g),
        "cograph": cls.cograph,
        "level": cls.level,
        "cotree": cls.cotree.to_nested() if cls.cotree is not None else None,
        "p4_witness": list(cls.p4_witness) if cls.p4_witness else None,
        "verdict": {
            "c1": verdict.c1,
            "c1bv": verdict.c1bv,
            "c_infinity": verdict.c_infinity,
            "c_omega": verdict.c_omega,
            "circle_class": verdict.circle_class,
        },
        "witness": None,
    }
    if witness is not None:
        doc["witness"] = {
            "kind": witness.kind,
            "vertices": list(witness.vertices),
            "words": list(witness.words),
            "group": witness.group,
        }
    return doc


def rotation_to_obj(res: RotationResult) -> dict:
    if res.is_exact():
        return {"kind": "exact", "value": frac_to_str(res.value)}
    return {"kind": "bounds", "lo": frac_to_str(res.lo), "hi": frac_to_str(res.hi)}


def dumps_doc(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"

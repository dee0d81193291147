"""Canonical JSON documents for complexes and rotation systems.

The canonical form is ``json.dumps(..., indent=2)`` plus a trailing
newline, keys in the fixed order shown below, arrays in input order.
``emit_complex(parse_complex(doc)) == doc`` holds byte-for-byte for
canonical documents.  Parsing ignores unknown top-level keys so that
annotated documents (dual complexes carrying their rotation system)
stay consumable by every command.
"""

from __future__ import annotations

import json
from typing import Any

from .complexes import (
    DirectedComplex,
    FaceBoundary,
    PreComplex,
    SignedEdgeRef,
    GENERAL,
    SIMPLICIAL,
)
from .errors import DocumentError
from .rotation import RotationSystem, rotation_system_from_face_lists


def _load(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("top-level value must be an object")
    return doc


def _precomplex_from_doc(doc: dict[str, Any]) -> PreComplex:
    for key in ("kind", "vertices", "edges", "faces"):
        if key not in doc:
            raise DocumentError(f"missing key {key!r}")
    kind = doc["kind"]
    if kind not in (SIMPLICIAL, GENERAL):
        raise DocumentError(f"kind must be 'simplicial' or 'general', got {kind!r}")
    vertices = tuple(doc["vertices"])
    edges: dict[str, tuple[str, str]] = {}
    for entry in doc["edges"]:
        try:
            eid, tail, head = entry["id"], entry["tail"], entry["head"]
        except (TypeError, KeyError) as exc:
            raise DocumentError(f"malformed edge entry {entry!r}") from exc
        if eid in edges:
            raise DocumentError(f"duplicate edge id {eid!r}")
        edges[eid] = (tail, head)
    faces: dict[str, FaceBoundary] = {}
    for entry in doc["faces"]:
        try:
            fid = entry["id"]
            trail = tuple(
                SignedEdgeRef(step["edge"], step["dir"]) for step in entry["boundary"]
            )
        except (TypeError, KeyError) as exc:
            raise DocumentError(f"malformed face entry {entry!r}") from exc
        if fid in faces:
            raise DocumentError(f"duplicate face id {fid!r}")
        faces[fid] = FaceBoundary(fid, trail)
    return PreComplex(kind, vertices, edges, faces)


def parse_precomplex(text: str) -> PreComplex:
    """Parse a document leniently: referential integrity and closed
    trails are required, the standing assumptions are not."""
    return _precomplex_from_doc(_load(text))


def parse_complex(text: str) -> DirectedComplex:
    """Parse and fully validate a complex document."""
    pre = parse_precomplex(text)
    return DirectedComplex.from_pre(pre)


def complex_to_doc(c: PreComplex) -> dict[str, Any]:
    return {
        "kind": c.kind,
        "vertices": list(c.vertices),
        "edges": [
            {"id": e, "tail": tail, "head": head}
            for e, (tail, head) in c.edges.items()
        ],
        "faces": [
            {
                "id": f,
                "boundary": [
                    {"edge": ref.edge, "dir": ref.sign} for ref in boundary.trail
                ],
            }
            for f, boundary in c.faces.items()
        ],
    }


def dump_canonical(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def emit_complex(c: PreComplex, extra: dict[str, Any] | None = None) -> str:
    """Serialize ``c`` canonically; ``extra`` appends annotation keys."""
    doc = complex_to_doc(c)
    if extra:
        doc.update(extra)
    return dump_canonical(doc)


def parse_sigma(text: str, c: PreComplex) -> RotationSystem:
    """Parse a rotation-system document against complex ``c``.

    Edges with at most two face incidences may be omitted (their cyclic
    order is forced); any edge with three or more must be listed.
    """
    doc = _load(text)
    if "sigma" not in doc or not isinstance(doc["sigma"], dict):
        raise DocumentError("rotation-system document must carry a 'sigma' object")
    return rotation_system_from_face_lists(c, doc["sigma"])


def sigma_to_doc(sigma: RotationSystem) -> dict[str, Any]:
    return {
        "sigma": {
            e: [inc.face for inc in sigma.canonical(e)] for e in sorted(sigma.sigma)
        }
    }


def emit_sigma(sigma: RotationSystem) -> str:
    return dump_canonical(sigma_to_doc(sigma))

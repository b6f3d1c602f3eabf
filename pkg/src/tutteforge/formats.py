"""JSON encodings for matroids, graphs and linking maps."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from .constructors import Edge, Graph, graphic_matroid
from .errors import TutteForgeError
from .matroid import GroundSet, PreMatroid, validate_prematroid


class InputError(TutteForgeError):
    """Malformed or unreadable input document."""


def matroid_to_json(m: PreMatroid) -> dict:
    return {"ground": list(m.ground.labels), "bases": [list(m.ground.labels_of(b)) for b in m.bases]}


def matroid_from_json(doc: Any) -> PreMatroid:
    if not isinstance(doc, dict) or "ground" not in doc or "bases" not in doc:
        raise InputError('matroid JSON needs "ground" and "bases"')
    ground, bases = doc["ground"], doc["bases"]
    if not isinstance(ground, list) or not isinstance(bases, list) or not all(isinstance(b, list) for b in bases):
        raise InputError('"ground" and every basis must be lists of labels')
    return validate_prematroid(GroundSet.of(ground), [[str(x) for x in b] for b in bases])


def graph_to_json(g: Graph) -> dict:
    return {"vertices": g.vertices, "edges": [{"id": e.id, "u": e.u, "v": e.v} for e in g.edges]}


def graph_from_json(doc: Any) -> Graph:
    try:
        edges = tuple(Edge(str(e["id"]), int(e["u"]), int(e["v"])) for e in doc["edges"])
        return Graph(int(doc["vertices"]), edges)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad graph JSON: {e}") from None


def load_document(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None


def load_input(path: str) -> tuple[PreMatroid, Optional[Graph]]:
    """A matroid document, or a graph document together with its graphic matroid."""
    doc = load_document(path)
    if isinstance(doc, dict) and "vertices" in doc:
        g = graph_from_json(doc)
        return graphic_matroid(g), g
    return matroid_from_json(doc), None


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))

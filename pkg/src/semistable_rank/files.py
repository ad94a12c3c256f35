"""JSON readers and writers for graph and divisor files.

Graph file::

    {
      "vertices": [{"id": "a", "genus": 1}, {"id": "b"}],
      "edges": [["a", "b"], ["a", "b"], ["b", "b"]]
    }

``genus`` defaults to 0. Repeated pairs are parallel edges and ``["b", "b"]``
is a loop. Divisor file: ``{"a": 2, "b": -1}``; omitted vertices are 0.
Unknown keys anywhere are rejected.
"""
from __future__ import annotations

import json
from pathlib import Path

from .augmented import AugmentedCurve
from .errors import InputError
from .graph import GraphDivisor, Multigraph


def _load(path) -> object:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from None


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_graph(data) -> AugmentedCurve:
    if not isinstance(data, dict):
        raise InputError("graph file must hold an object")
    extra = set(data) - {"vertices", "edges"}
    if extra:
        raise InputError(f"unknown key(s) in graph file: {sorted(extra)}")
    if "vertices" not in data:
        raise InputError("graph file lacks 'vertices'")
    ids, genus = [], []
    for entry in data["vertices"]:
        if not isinstance(entry, dict):
            raise InputError(f"vertex entry {entry!r} is not an object")
        extra = set(entry) - {"id", "genus"}
        if extra:
            raise InputError(f"unknown key(s) in vertex entry: {sorted(extra)}")
        if not isinstance(entry.get("id"), str):
            raise InputError(f"vertex entry {entry!r} needs a string 'id'")
        g = entry.get("genus", 0)
        if not _is_int(g) or g < 0:
            raise InputError(f"genus of {entry['id']!r} must be a non-negative integer")
        ids.append(entry["id"])
        genus.append(g)
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise InputError("'edges' must be a list")
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise InputError(f"edge {e!r} must be a list of two vertex ids")
    graph = Multigraph(tuple(ids), tuple(tuple(e) for e in edges))
    return AugmentedCurve(graph, tuple(genus))


def parse_divisor(data, graph: Multigraph) -> GraphDivisor:
    if not isinstance(data, dict):
        raise InputError("divisor file must hold an object")
    for v, k in data.items():
        if v not in graph.index:
            raise InputError(f"divisor mentions unknown vertex {v!r}")
        if not _is_int(k):
            raise InputError(f"coefficient of {v!r} must be an integer")
    return GraphDivisor(data)


def read_graph(path) -> AugmentedCurve:
    return parse_graph(_load(path))


def read_divisor(path, graph: Multigraph) -> GraphDivisor:
    return parse_divisor(_load(path), graph)


def graph_to_dict(ac: AugmentedCurve) -> dict:
    return {
        "vertices": [{"id": v, "genus": g} for v, g in zip(ac.graph.vertices, ac.genus)],
        "edges": [list(e) for e in ac.graph.edges],
    }


def divisor_to_dict(D: GraphDivisor, graph: Multigraph) -> dict:
    return {str(v): D[v] for v in graph.vertices}

"""Canonical JSON and DOT serialization.

Every emitter produces one canonical byte form: keys sorted, two-space
indentation, a trailing newline, no locale- or time-dependent content.
Two equal objects therefore serialize to identical bytes, and reports
built from identical configurations compare equal byte for byte.

Schemas (documented in FORMATS.md):

    curve   {"genus": g, "coords": [w_0, ..., w_{6g-4}]}
    word    [s_1, s_2, ...]                 signed letters, k ~ x_k
    vertex  {"kind": "disk|annulus|pants", "curves": [curve, ...],
             "region": [...]}               region present iff pants
    pool    {"schema": 1, "genus": g, "recipe": {...},
             "curves": [curve, ...]}
    graph   {"schema": 1, "genus": g, "vertices": [vertex, ...],
             "edges": [[i, j], ...], "recipe": {...}|null}
    fixture graph   {"schema": 1, "n_vertices": n,
             "edges": [[i, j], ...]}        plain metric graph

Curve round-trips are bit-exact: the coordinates stored are already the
canonical form, and deserialization re-canonicalizes and asserts
equality.  Rationals (hyperbolicity estimates) serialize as exact
"p/q" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .complexes import (ANNULUS, DISK, PANTS, ComplexGraph, SimplexReport,
                        Vertex)
from .curves import CurveClass, curve_from_coords
from .pools import CurvePool, EdgeGraph

SCHEMA_VERSION = 1


# ----------------------------------------------------------------------
# curves and words


def curve_to_obj(c: CurveClass) -> dict:
    return {"genus": c.genus, "coords": list(c.coords)}


def curve_from_obj(obj) -> CurveClass:
    genus = int(obj["genus"])
    coords = [int(x) for x in obj["coords"]]
    c = curve_from_coords(genus, coords)
    assert list(c.coords) == coords, \
        "stored coordinates are not in canonical form"
    return c


def word_to_obj(word) -> list:
    return [int(x) for x in word]


# ----------------------------------------------------------------------
# vertices


def vertex_to_obj(v: Vertex) -> dict:
    obj = {"kind": v.kind, "curves": [curve_to_obj(c) for c in v.curves]}
    if v.kind == PANTS:
        obj["region"] = list(v.region_id)
    return obj


def vertex_from_obj(obj) -> Vertex:
    kind = obj["kind"]
    assert kind in (DISK, ANNULUS, PANTS), "unknown vertex kind %r" % kind
    curves = [curve_from_obj(c) for c in obj["curves"]]
    region = tuple(obj["region"]) if kind == PANTS else None
    return Vertex(kind, curves, region)


# ----------------------------------------------------------------------
# pools and graphs


def pool_to_obj(pool: CurvePool) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "genus": pool.genus,
        "recipe": pool.recipe,
        "curves": [curve_to_obj(c) for c in pool.curves],
    }


def pool_from_obj(obj) -> CurvePool:
    curves = [curve_from_obj(c) for c in obj["curves"]]
    return CurvePool(int(obj["genus"]), curves, dict(obj["recipe"]))


def graph_to_obj(graph) -> dict:
    if isinstance(graph, EdgeGraph) and graph.vertices is None:
        return {
            "schema": SCHEMA_VERSION,
            "n_vertices": graph.n_vertices,
            "edges": [list(e) for e in graph.edges],
        }
    obj = {
        "schema": SCHEMA_VERSION,
        "genus": graph.genus if isinstance(graph, ComplexGraph)
        else graph.vertices[0].genus,
        "vertices": [vertex_to_obj(v) for v in graph.vertices],
        "edges": [list(e) for e in graph.edges],
    }
    if isinstance(graph, ComplexGraph):
        obj["recipe"] = graph.recipe
    return obj


def graph_from_obj(obj):
    """Rebuild a graph from its JSON object.

    Vertex-bearing graphs come back as EdgeGraph with the stored edge
    list and Vertex payloads (the file's edges are trusted; rebuild a
    ComplexGraph from the vertices to re-derive adjacency).  Fixture
    graphs come back as bare EdgeGraph.
    """
    edges = [tuple(e) for e in obj["edges"]]
    if "n_vertices" in obj:
        return EdgeGraph(int(obj["n_vertices"]), edges)
    verts = [vertex_from_obj(v) for v in obj["vertices"]]
    return EdgeGraph(len(verts), edges, verts)


# ----------------------------------------------------------------------
# generic canonical dumps


def to_jsonable(x):
    """Recursive conversion of report values to plain JSON data."""
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, CurveClass):
        return curve_to_obj(x)
    if isinstance(x, Vertex):
        return vertex_to_obj(x)
    if isinstance(x, SimplexReport):
        return {
            "n_vertices": x.n_vertices,
            "dimension": x.dimension,
            "verdict": x.verdict,
            "counts": dict(x.counts),
            "failures": [list(p) for p in x.failures],
            "vertices": [vertex_to_obj(v) for v in x.vertices],
            "matrix": [[1 if b else 0 for b in row] for row in x.matrix],
        }
    if isinstance(x, (ComplexGraph, EdgeGraph)):
        return graph_to_obj(x)
    if isinstance(x, CurvePool):
        return pool_to_obj(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError("cannot serialize %r" % type(x))


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, 2-space indent, newline end."""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def loads(text: str):
    return json.loads(text)


def dump_path(obj, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def load_path(path):
    with open(path) as fh:
        return json.load(fh)


# ----------------------------------------------------------------------
# DOT export


def _dot_label(v: Vertex) -> str:
    if v.kind == PANTS:
        return "pants"
    word = v.curves[0].handlebody_word
    if not word:
        return "%s 1" % v.kind
    return "%s %s" % (v.kind,
                      " ".join("x%d" % k if k > 0 else "X%d" % -k
                               for k in word))


def graph_to_dot(graph) -> str:
    """Undirected DOT text for a vertex graph, deterministic order."""
    lines = ["graph complex {"]
    verts = graph.vertices
    for i in range(graph.n_vertices):
        if verts is not None:
            lines.append('  v%d [label="%s"];' % (i, _dot_label(verts[i])))
        else:
            lines.append("  v%d;" % i)
    for i, j in graph.edges:
        lines.append("  v%d -- v%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"

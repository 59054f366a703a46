"""Vertices, adjacency, simplex reports, cliques, cone and star checks."""

import pytest

from hbcomplex.complexes import (ANNULUS, DISK, PANTS, ComplexGraph, Vertex,
                                 adjacent, annulus_vertex,
                                 classify_curve_vertex, cone_vertex_check,
                                 curves_disjoint, disk_vertex, is_simplex,
                                 link_in_pool, max_clique, pants_vertices,
                                 star_property_check, verify_max_simplex,
                                 verify_meridian_link)
from hbcomplex.curves import curve_from_coords
from hbcomplex.pools import EdgeGraph
from hbcomplex.refcurves import (meridian_system, pants_decomposition,
                                 reference_curve, twin_pants_triple)

SEP_MERIDIAN_COORDS = (2, 2, 0, 0, 2, 2, 0, 0, 0)


# ----------------------------------------------------------------------
# vertices


def test_vertex_kinds():
    b1 = reference_curve(2, "b1")
    a1 = reference_curve(2, "a1")
    assert disk_vertex(b1).kind == DISK
    assert annulus_vertex(a1).kind == ANNULUS
    assert classify_curve_vertex(b1).kind == DISK
    assert classify_curve_vertex(a1).kind == ANNULUS


def test_vertex_validation():
    b1 = reference_curve(2, "b1")
    a1 = reference_curve(2, "a1")
    with pytest.raises(ValueError):
        disk_vertex(a1)  # not a meridian
    with pytest.raises(ValueError):
        annulus_vertex(b1)  # meridian
    s = curve_from_coords(2, SEP_MERIDIAN_COORDS)
    assert disk_vertex(s).kind == DISK  # separating meridians are disks


def test_pants_vertices_of_twin_triple():
    triple = list(twin_pants_triple())
    pants = pants_vertices(triple)
    assert len(pants) == 2
    for p in pants:
        assert p.kind == PANTS
        assert len(p.curves) == 3
        assert p.region_id is not None
    assert pants[0] != pants[1]
    assert pants[0].curves == pants[1].curves  # same boundary triple
    assert pants[0].region_id != pants[1].region_id


def test_pants_vertices_skip_compressible():
    # a triple bounding pants with a meridian boundary yields no vertex
    # from those pieces: use the one-meridian decomposition and check
    # that no returned pants touches the meridian
    curves = meridian_system(3)
    pants = pants_vertices(curves)
    meridian = curves[0]
    for p in pants:
        assert all(c != meridian for c in p.curves)


def test_vertex_equality_and_hash():
    a1 = reference_curve(2, "a1")
    v1 = annulus_vertex(a1)
    v2 = annulus_vertex(reference_curve(2, "a1"))
    assert v1 == v2
    assert len({v1, v2}) == 1


# ----------------------------------------------------------------------
# adjacency and simplices


def test_adjacency_rules():
    a1 = annulus_vertex(reference_curve(2, "a1"))
    a2 = annulus_vertex(reference_curve(2, "a2"))
    b1 = disk_vertex(reference_curve(2, "b1"))
    c2 = disk_vertex(reference_curve(2, "c2"))
    assert adjacent(a1, a2)
    assert not adjacent(a1, a1)  # no self-adjacency
    assert not adjacent(a1, b1)  # a1 and b1 cross once
    assert adjacent(a2, b1)
    assert adjacent(a1, c2) == (
        curves_disjoint(reference_curve(2, "a1"), reference_curve(2, "c2")))


def test_is_simplex_report():
    verts = [annulus_vertex(reference_curve(2, lab))
             for lab in ("a1", "a2")]
    rep = is_simplex(verts)
    assert rep.verdict and rep.n_vertices == 2 and rep.dimension == 1
    assert rep.failures == ()
    bad = [annulus_vertex(reference_curve(2, "a1")),
           disk_vertex(reference_curve(2, "b1"))]
    rep2 = is_simplex(bad)
    assert not rep2.verdict
    assert (0, 1) in rep2.failures


def test_is_simplex_rejects_duplicates():
    v = annulus_vertex(reference_curve(2, "a1"))
    rep = is_simplex([v, v])
    assert not rep.verdict


@pytest.mark.parametrize("genus", [2, 3])
def test_verify_max_simplex(genus):
    curves = (list(twin_pants_triple()) if genus == 2
              else pants_decomposition(genus))
    rep = verify_max_simplex(genus, curves)
    assert rep.verdict
    assert rep.n_vertices == 5 * genus - 5
    assert rep.dimension == 5 * genus - 6
    assert rep.counts[ANNULUS] == 3 * genus - 3
    assert rep.counts[PANTS] == 2 * genus - 2


def test_verify_max_simplex_input_errors():
    with pytest.raises(ValueError):
        verify_max_simplex(2, pants_decomposition(2)[:2])  # wrong count
    with pytest.raises(ValueError):
        verify_max_simplex(3, pants_decomposition(2))  # wrong genus
    bad = list(pants_decomposition(2))
    bad[0] = reference_curve(2, "b1")  # meridian in the system
    with pytest.raises(ValueError):
        verify_max_simplex(2, bad)


@pytest.mark.parametrize("genus", [3, 4])
def test_verify_meridian_link(genus):
    rep = verify_meridian_link(genus, meridian_system(genus))
    assert rep["verdict"]
    assert rep["n_vertices"] == 5 * genus - 7
    assert rep["expected_vertices"] == 5 * genus - 7
    assert rep["n_compressible_pants"] == 2
    assert rep["n_incompressible_pants"] == 2 * genus - 4
    assert rep["simplex"].verdict


def test_verify_meridian_link_requires_one_meridian():
    with pytest.raises(ValueError):
        verify_meridian_link(3, pants_decomposition(3))  # no meridian


# ----------------------------------------------------------------------
# cliques


def graph_from_edges(n, edges):
    """ComplexGraph stand-in from abstract adjacency for clique tests."""
    # build dummy vertices: use distinct annuli over genus-3 references
    # only adjacency matters, so fabricate with EdgeGraph + bitmasks via
    # the max_clique(graph) contract: it reads n_vertices and neighbors()
    return EdgeGraph(n, edges)


def test_max_clique_known_graphs():
    # complete graph K5
    k5 = graph_from_edges(5, [(i, j) for i in range(5)
                              for j in range(i + 1, 5)])
    assert max_clique(k5) == 5
    # 5-cycle: clique number 2
    c5 = graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert max_clique(c5) == 2
    # two triangles sharing a vertex
    bowtie = graph_from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4),
                                  (2, 4)])
    assert max_clique(bowtie) == 3
    # empty graph
    e3 = graph_from_edges(3, [])
    assert max_clique(e3) == 1


def test_max_clique_refuses_oversize():
    big = graph_from_edges(10, [])
    with pytest.raises(ValueError):
        max_clique(big, limit=5)


def test_max_simplex_is_max_clique():
    # the 5-vertex genus-2 simplex seen as a graph has clique number 5
    rep = verify_max_simplex(2, list(twin_pants_triple()))
    graph = ComplexGraph(list(rep.vertices))
    assert max_clique(graph) == 5


# ----------------------------------------------------------------------
# links, cone, star


def test_link_in_pool():
    curves = pants_decomposition(2)
    verts = [annulus_vertex(c) for c in curves]
    pants = pants_vertices(curves)
    pool = verts + pants
    link = link_in_pool(verts[0], pool)
    # everything else in a common decomposition is adjacent
    assert link.n_vertices == len(pool) - 1


def test_cone_vertex_check():
    curves = pants_decomposition(2)
    pool = ([annulus_vertex(c) for c in curves]
            + pants_vertices(curves))
    for p in pants_vertices(curves):
        assert cone_vertex_check(p, pool)


def test_star_property_on_degenerate_pool():
    # a pool that is one simplex has no crossing witnesses at all
    curves = pants_decomposition(2)
    pool = [annulus_vertex(c) for c in curves]
    rep = star_property_check(pool[0], pool)
    assert rep["coverage"] == 0.0
    assert rep["degenerate_pool"]


def test_star_property_with_crossings():
    # add curves crossing the decomposition: links become covered
    from hbcomplex.twists import dehn_twist
    curves = pants_decomposition(2)
    extra = [dehn_twist(reference_curve(2, "b1"),
                        reference_curve(2, "a1"), k) for k in (1, 2)]
    pool = ([annulus_vertex(c) for c in curves]
            + [classify_curve_vertex(c) for c in extra])
    center = annulus_vertex(curves[1])
    rep = star_property_check(center, pool)
    assert 0.0 <= rep["coverage"] <= 1.0
    assert rep["link_size"] > 0

"""Vertices, adjacency, simplices and links of the surface complex.

A genus-g handlebody is attached to the model surface by declaring the
b-loops to bound disks (each b_i is a meridian).  The complex studied
here has one vertex for each isotopy class of three kinds of essential
embedded surface with boundary on the surface:

  disk     -- a compressing disk, determined by its meridian boundary
              curve (trivial handlebody word);
  annulus  -- the push-in of a collar of an essential non-meridian
              curve, determined by that curve;
  pants    -- the push-in of a complement region of a multicurve which
              is a three-holed sphere with all boundary curves
              non-meridian (a pair of pants containing a meridian
              boundary is compressible and gives no vertex: every
              essential simple closed curve in a pair of pants is
              parallel to a boundary component, so a compressing disk
              exists exactly when a boundary curve is a meridian).

Two vertices are adjacent when every pair of boundary curves, one from
each, has geometric intersection number zero.  Shared boundary curves
are allowed: the surfaces can be pushed in at different collar depths,
so disjoint representatives exist.  A set of vertices spans a simplex
exactly when it is a clique of the adjacency graph (the complex is the
flag complex of its 1-skeleton).

A pair of pants is not determined by its boundary curves alone: one
multicurve can have several three-holed complement regions with the
same boundary triple (at genus two, three disjoint curves can split the
surface into two pants sharing all three boundary curves).  A pants
vertex therefore carries a region identifier — the least cell of its
region in the canonical realization of its own boundary multicurve —
and two pants vertices with equal boundary triples but different
regions are distinct.  Whether two pants with different boundary
multisets could be isotopic never arises: boundary curves are isotopy
invariants of the pushed-in surface.

Counting vertices over a decomposition: 3g-3 disjoint non-meridian
curves whose complement is all pants carry 3g-3 annulus vertices and
2g-2 pants vertices, a simplex with 5g-5 vertices; this is the maximal
simplex size, so the complex has dimension 5g-6.  Replacing one curve
by a non-separating meridian removes one annulus and makes exactly two
pants compressible when the meridian's two sides lie in different
regions, leaving 1 + (3g-4) + (2g-4) = 5g-7 vertices: a maximal simplex
in the closed star of the disk vertex, exhibiting the link of a disk
vertex as a complex of dimension 5g-9 and the link of an annulus
vertex as one of dimension 5g-7.

The link of a pants vertex inside any vertex pool is a cone: an annulus
over one of its boundary curves is adjacent to every link member (any
vertex disjoint from the pants is in particular disjoint from that
boundary curve).  Links of disk and annulus vertices are not cones; the
evidence collected here is the star property: for each link member Q
some other link member R crosses Q's boundary, so no single vertex can
dominate the link.
"""

from __future__ import annotations

from functools import lru_cache

from .curves import CurveClass
from .intersect import complement_components, intersection_number

DISK = "disk"
ANNULUS = "annulus"
PANTS = "pants"

# Exact maximum-clique search is exponential in the worst case; refuse
# graphs beyond this size instead of silently approximating.
CLIQUE_LIMIT = 200


@lru_cache(maxsize=1 << 18)
def _disjoint_pair(c1: CurveClass, c2: CurveClass) -> bool:
    return intersection_number(c1, c2) == 0


@lru_cache(maxsize=1 << 12)
def _complement_of(curves: tuple):
    return tuple(complement_components(list(curves)))


def curves_disjoint(c1: CurveClass, c2: CurveClass) -> bool:
    """Cached i(c1, c2) == 0 test (symmetric, cached on the sorted pair)."""
    if c2.coords < c1.coords:
        c1, c2 = c2, c1
    return _disjoint_pair(c1, c2)


# ----------------------------------------------------------------------
# vertices


class Vertex:
    """A vertex of the complex: kind, boundary curves, and (for pants)
    the canonical region identifier.

    ``curves`` is the boundary multiset as a coords-sorted tuple of
    CurveClass (length 1 for disk/annulus, 3 for pants).  Vertices are
    immutable in use, hashable, and compare by (kind, boundary coords,
    region_id).
    """

    __slots__ = ("kind", "curves", "region_id")

    def __init__(self, kind, curves, region_id=None):
        curves = tuple(sorted(curves, key=lambda c: c.coords))
        assert curves, "vertex needs at least one boundary curve"
        genus = curves[0].genus
        assert all(c.genus == genus for c in curves)
        if kind == DISK:
            assert len(curves) == 1 and curves[0].is_meridian
            assert region_id is None
        elif kind == ANNULUS:
            assert len(curves) == 1 and not curves[0].is_meridian
            assert region_id is None
        elif kind == PANTS:
            assert len(curves) == 3, "a pants vertex has three boundary curves"
            assert region_id is not None, "a pants vertex needs a region id"
            assert not any(c.is_meridian for c in curves), \
                "a pants with a meridian boundary is compressible"
            for i in range(3):
                for j in range(i + 1, 3):
                    assert curves_disjoint(curves[i], curves[j]), \
                        "pants boundary curves must be disjoint"
        else:
            raise AssertionError("unknown vertex kind %r" % (kind,))
        self.kind = kind
        self.curves = curves
        self.region_id = region_id

    @property
    def genus(self):
        return self.curves[0].genus

    def key(self):
        return (self.kind, tuple(c.coords for c in self.curves),
                self.region_id)

    def __eq__(self, other):
        return isinstance(other, Vertex) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.kind == PANTS:
            return "Vertex(pants, %d curves, region=%s)" % (
                len(self.curves), (self.region_id,))
        return "Vertex(%s, %s)" % (self.kind, self.curves[0].handlebody_word)


def disk_vertex(curve: CurveClass) -> Vertex:
    return Vertex(DISK, (curve,))


def annulus_vertex(curve: CurveClass) -> Vertex:
    return Vertex(ANNULUS, (curve,))


def classify_curve_vertex(curve: CurveClass) -> Vertex:
    """The disk or annulus vertex of an essential curve class."""
    assert isinstance(curve, CurveClass)
    return disk_vertex(curve) if curve.is_meridian else annulus_vertex(curve)


def _canonical_region_id(boundary, comp):
    """Region id of a pants component in the canonical realization of
    its own boundary multicurve.

    The component was found inside some larger multicurve; its identity
    must not depend on which one.  The boundary classes (deduplicated,
    coords-sorted) are realized on their own and the matching
    three-holed region of that realization names the vertex.  Several
    regions match only when two pants share the whole boundary triple,
    which forces the triple to fill the surface; the ambient multicurve
    then realizes to the same drawing and the component's own region id
    is already canonical.
    """
    index = {}
    reps = []
    for c in sorted(boundary, key=lambda c: c.coords):
        if c.coords not in index:
            index[c.coords] = len(reps)
            reps.append(c)
    want = tuple(sorted(index[c.coords] for c in boundary))
    sub = _complement_of(tuple(reps))
    matches = [s for s in sub if s.genus == 0 and s.n_boundary == 3
               and s.boundary == want]
    assert matches, "boundary multicurve lost its pants region"
    if len(matches) == 1:
        return matches[0].region_id
    ids = {s.region_id for s in matches}
    assert comp.region_id in ids, \
        "ambiguous twin pants region for a redundant input multicurve"
    return comp.region_id


def pants_vertices(curves) -> list:
    """Pants vertices of the complement of pairwise-disjoint curves.

    One vertex per complement component of genus 0 with three boundary
    circles whose bounding curves are all non-meridian; components with
    a meridian boundary are compressible and skipped.  Raises ValueError
    if some input pair intersects essentially.
    """
    curves = list(curves)
    comps = _complement_of(tuple(curves))
    out = []
    for comp in comps:
        if comp.genus != 0 or comp.n_boundary != 3:
            continue
        boundary = [curves[i] for i in comp.boundary]
        if any(c.is_meridian for c in boundary):
            continue
        out.append(Vertex(PANTS, boundary,
                          _canonical_region_id(boundary, comp)))
    return out


# ----------------------------------------------------------------------
# adjacency and simplices


def adjacent(u: Vertex, v: Vertex) -> bool:
    """True iff u != v and every boundary pair is disjoint (i = 0)."""
    assert u.genus == v.genus, "vertices live on different surfaces"
    if u == v:
        return False
    return all(curves_disjoint(cu, cv) for cu in u.curves for cv in v.curves)


class SimplexReport:
    """Verdict of a pairwise-adjacency check over a vertex list.

    vertices  -- the checked vertices, in input order
    matrix    -- full boolean adjacency matrix (diagonal False)
    verdict   -- True iff all off-diagonal pairs adjacent and the
                 vertices are pairwise distinct
    counts    -- number of vertices per kind
    failures  -- offending index pairs: non-adjacent or duplicate
    """

    __slots__ = ("vertices", "matrix", "verdict", "counts", "failures")

    def __init__(self, vertices):
        vertices = list(vertices)
        n = len(vertices)
        matrix = [[False] * n for _ in range(n)]
        failures = []
        for i in range(n):
            for j in range(i + 1, n):
                ok = adjacent(vertices[i], vertices[j])
                matrix[i][j] = matrix[j][i] = ok
                if not ok:
                    failures.append((i, j))
        counts = {DISK: 0, ANNULUS: 0, PANTS: 0}
        for v in vertices:
            counts[v.kind] += 1
        self.vertices = vertices
        self.matrix = matrix
        self.verdict = not failures
        self.counts = counts
        self.failures = failures

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def dimension(self):
        return len(self.vertices) - 1

    def __repr__(self):
        return "SimplexReport(%d vertices, verdict=%s)" % (
            self.n_vertices, self.verdict)


def is_simplex(vertices) -> SimplexReport:
    """Check that the vertices span a simplex (clique of adjacency)."""
    return SimplexReport(vertices)


def verify_max_simplex(genus: int, curves) -> SimplexReport:
    """Simplex report of a complete decomposition's vertex set.

    The input must be 3g-3 pairwise-disjoint non-meridian curves whose
    complement is all pants; the report then covers the 3g-3 annulus and
    2g-2 pants vertices, 5g-5 in total.  Precondition failures raise
    ValueError naming the offending curve or component.
    """
    curves = list(curves)
    want = 3 * genus - 3
    if len(curves) != want:
        raise ValueError("a genus-%d decomposition has %d curves, got %d"
                         % (genus, want, len(curves)))
    for i, c in enumerate(curves):
        if c.genus != genus:
            raise ValueError("curve %d has genus %d, expected %d"
                             % (i, c.genus, genus))
        if c.is_meridian:
            raise ValueError("curve %d is a meridian" % i)
    comps = complement_components(curves)
    bad = [c for c in comps if c.genus != 0 or c.n_boundary != 3]
    if bad:
        raise ValueError("complement is not all pants: component with "
                         "genus %d and %d boundary circles on curves %s"
                         % (bad[0].genus, bad[0].n_boundary,
                            list(bad[0].boundary)))
    pants = pants_vertices(curves)
    assert len(pants) == 2 * genus - 2
    verts = [annulus_vertex(c) for c in curves] + pants
    return is_simplex(verts)


def verify_meridian_link(genus: int, curves) -> dict:
    """Report on the maximal simplex through a one-meridian decomposition.

    The input must be 3g-3 pairwise-disjoint curves, exactly one of them
    a meridian, with all-pants complement.  The simplex consists of the
    disk vertex, the 3g-4 annulus vertices, and the incompressible pants
    vertices; with the meridian's sides in different pants exactly two
    pants are compressible and the simplex has 5g-7 vertices, a maximal
    simplex of the disk vertex's closed star.
    """
    curves = list(curves)
    want = 3 * genus - 3
    if len(curves) != want:
        raise ValueError("a genus-%d decomposition has %d curves, got %d"
                         % (genus, want, len(curves)))
    meridians = [i for i, c in enumerate(curves) if c.is_meridian]
    if len(meridians) != 1:
        raise ValueError("expected exactly one meridian, found %d "
                         "(indices %s)" % (len(meridians), meridians))
    mer = meridians[0]
    comps = complement_components(curves)
    bad = [c for c in comps if c.genus != 0 or c.n_boundary != 3]
    if bad:
        raise ValueError("complement is not all pants: component with "
                         "genus %d and %d boundary circles on curves %s"
                         % (bad[0].genus, bad[0].n_boundary,
                            list(bad[0].boundary)))
    compressible = [c for c in comps if mer in c.boundary]
    pants = pants_vertices(curves)
    verts = [disk_vertex(curves[mer])]
    verts += [annulus_vertex(c) for i, c in enumerate(curves) if i != mer]
    verts += pants
    report = is_simplex(verts)
    expected = 5 * genus - 7
    return {
        "genus": genus,
        "n_vertices": report.n_vertices,
        "expected_vertices": expected,
        "n_compressible_pants": len(compressible),
        "n_incompressible_pants": len(pants),
        "simplex": report,
        "verdict": (report.verdict and report.n_vertices == expected
                    and len(compressible) == 2),
    }


# ----------------------------------------------------------------------
# graphs, links, cliques


def _dedup(vertices):
    seen = set()
    out = []
    for v in vertices:
        k = v.key()
        if k not in seen:
            seen.add(k)
            out.append(v)
    return out


class ComplexGraph:
    """Finite induced subgraph of the complex's 1-skeleton.

    vertices  -- deduplicated Vertex tuple, in presentation order
    edges     -- sorted tuple of index pairs (i, j), i < j
    genus     -- common genus
    recipe    -- optional provenance dictionary (echoed in reports)
    """

    __slots__ = ("genus", "vertices", "edges", "recipe", "_nbr")

    def __init__(self, vertices, recipe=None):
        vertices = tuple(_dedup(vertices))
        assert vertices or recipe is not None or True
        genus = vertices[0].genus if vertices else 0
        assert all(v.genus == genus for v in vertices)
        edges = []
        for i in range(len(vertices)):
            for j in range(i + 1, len(vertices)):
                if adjacent(vertices[i], vertices[j]):
                    edges.append((i, j))
        nbr = [set() for _ in vertices]
        for i, j in edges:
            nbr[i].add(j)
            nbr[j].add(i)
        self.genus = genus
        self.vertices = vertices
        self.edges = tuple(edges)
        self.recipe = recipe
        self._nbr = tuple(frozenset(s) for s in nbr)

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    def neighbors(self, i: int):
        return self._nbr[i]

    def index_of(self, v: Vertex):
        for i, u in enumerate(self.vertices):
            if u == v:
                return i
        raise ValueError("vertex not in graph")

    def __repr__(self):
        return "ComplexGraph(genus=%d, %d vertices, %d edges)" % (
            self.genus, self.n_vertices, self.n_edges)


def link_in_pool(v: Vertex, pool) -> ComplexGraph:
    """Induced graph on the pool vertices adjacent to v."""
    pool = _dedup(pool)
    assert all(u.genus == v.genus for u in pool)
    return ComplexGraph([u for u in pool if adjacent(u, v)])


def max_clique(graph: ComplexGraph, limit: int = CLIQUE_LIMIT) -> int:
    """Exact maximum clique size via branch and bound.

    Vertices are expanded in a greedy-coloring order; a branch is cut
    when its size plus its color bound cannot beat the incumbent.
    Graphs larger than ``limit`` are refused (ValueError) rather than
    approximated.
    """
    n = graph.n_vertices
    if n > limit:
        raise ValueError("clique search refused beyond %d vertices (got %d)"
                         % (limit, n))
    if n == 0:
        return 0
    adj = [0] * n
    for i, j in graph.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    best = 0

    def color_order(cand):
        # greedy partition of cand into color classes; vertices listed
        # in increasing class number, the class number bounding any
        # clique inside the remaining candidates
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, color))
                rest &= ~(1 << v)
                avail &= ~(1 << v)
                avail &= ~adj[v]
        return order

    def expand(cand, size):
        nonlocal best
        order = color_order(cand)
        for v, color in reversed(order):
            if size + color <= best:
                return
            new = cand & adj[v]
            if not new:
                if size + 1 > best:
                    best = size + 1
            else:
                expand(new, size + 1)
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best


def cone_vertex_check(p: Vertex, pool) -> bool:
    """True iff some boundary annulus of p dominates p's pooled link.

    The witness annulus counts as dominating itself; every other link
    member must be adjacent to it.
    """
    assert p.kind == PANTS, "cone check applies to pants vertices"
    link = [u for u in _dedup(pool) if adjacent(u, p)]
    seen = set()
    for c in p.curves:
        if c.coords in seen:
            continue
        seen.add(c.coords)
        apex = annulus_vertex(c)
        if all(u == apex or adjacent(u, apex) for u in link):
            return True
    return False


def star_property_check(v: Vertex, pool) -> dict:
    """Coverage report for the non-cone evidence on v's pooled link.

    For each link member Q, search the link for a member R whose
    boundary crosses Q's boundary; coverage is the fraction of link
    members with such a witness.  Full coverage certifies that no
    single vertex is adjacent to the whole link (within the pool): a
    would-be cone apex is itself a link member covered by some crossing
    witness.  Coverage 0 on a nonempty link flags a degenerate pool
    (for instance a single simplex, where all members are disjoint).
    """
    assert v.kind in (DISK, ANNULUS), \
        "star property applies to disk and annulus vertices"
    link = [u for u in _dedup(pool) if adjacent(u, v)]
    witnesses = []
    uncovered = []
    for qi, q in enumerate(link):
        hit = None
        for ri, r in enumerate(link):
            if ri == qi:
                continue
            if any(not curves_disjoint(qc, rc)
                   for qc in q.curves for rc in r.curves):
                hit = ri
                break
        if hit is None:
            uncovered.append(qi)
        else:
            witnesses.append((qi, hit))
    n = len(link)
    covered = n - len(uncovered)
    return {
        "link_size": n,
        "covered": covered,
        "coverage": (covered / n) if n else 0.0,
        "uncovered": uncovered,
        "witnesses": witnesses,
        "degenerate_pool": bool(n) and covered == 0,
    }

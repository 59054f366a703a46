"""Curve pools, finite complex subgraphs, metrics, and twist actions.

The complex has infinitely many vertices at every genus, so all graph
experiments run on finite pools: a pool is the breadth-first orbit of a
few reference curves under Dehn twists about reference curves, truncated
by a word-length bound and a weight cap, deduplicated by canonical form,
and ordered canonically (total weight, then lexicographic coordinates).
A pool is a pure function of its recipe, so identical recipes reproduce
identical pools byte for byte.

Graphs built from a pool carry the curve vertices (disk or annulus per
classification) and, on request, every pants vertex arising from a
pairwise-disjoint triple in the pool; edges follow vertex adjacency.
All distances measured on such graphs are upper bounds for distances in
the full complex: a finite pool can only miss shortcuts, never create
them.  No result here asserts equality with the true complex metric.

Path projection sends a path of the complex graph to a path of the
curve graph (vertices: disk and annulus only): each pants vertex is
replaced by the annulus of its first boundary curve in canonical order,
then consecutive duplicates collapse.  Boundary curves of a pants are
pairwise disjoint and disjoint from every neighbor's curves, so the
projected sequence is again a path and never longer than the input.

Hyperbolicity is estimated by the four-point condition: for vertices
w, x, y, z the three pairings d(w,x)+d(y,z), d(w,y)+d(x,z),
d(w,z)+d(x,y) are sorted and the defect (largest - middle)/2 is taken;
the estimate is the maximum defect over sampled (or, for small graphs,
all) quadruples, an exact rational.  Trees have defect 0; a 6-cycle
attains exactly 1.

Twist words act on vertices by twisting every boundary curve; the
action preserves adjacency (intersection numbers are invariants of any
surface homeomorphism).  It preserves the disk/annulus split only when
the word extends to the handlebody — twists about meridians always do —
and the classification of image curves is always recomputed honestly.
The hyperelliptic involution at genus two is shipped as two candidate
chain-twist words; a candidate is accepted only after it fixes every
sampled curve class and squares to the identity on samples, and the
report records which candidate passed.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

from .complexes import (ANNULUS, DISK, PANTS, ComplexGraph, Vertex,
                        annulus_vertex, classify_curve_vertex,
                        curves_disjoint, pants_vertices)
from .curves import CurveClass
from .intersect import complement_components
from .refcurves import reference_curve
from .twists import dehn_twist

# ----------------------------------------------------------------------
# twist words


@lru_cache(maxsize=1 << 16)
def _twist_step(curve: CurveClass, about: CurveClass, power: int):
    return dehn_twist(curve, about, power)


def resolve_twist_word(genus: int, word):
    """Resolve a twist word [(label, power), ...] to curve classes.

    Labels go through the reference-curve table; unresolvable labels
    raise ValueError.  Entries may also name a CurveClass directly.
    """
    out = []
    for label, power in word:
        about = (label if isinstance(label, CurveClass)
                 else reference_curve(genus, label))
        out.append((about, int(power)))
    return out


def apply_twist_word(word, curve: CurveClass) -> CurveClass:
    """Apply a resolved or labelled twist word to a curve, leftmost first."""
    resolved = resolve_twist_word(curve.genus, word)
    for about, power in resolved:
        curve = _twist_step(curve, about, power)
    return curve


# ----------------------------------------------------------------------
# pools


class CurvePool:
    """Ordered, duplicate-free curve list with its generation recipe."""

    __slots__ = ("genus", "curves", "recipe")

    def __init__(self, genus, curves, recipe):
        self.genus = genus
        self.curves = tuple(curves)
        self.recipe = dict(recipe)
        assert len({c.coords for c in self.curves}) == len(self.curves)

    def __len__(self):
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    def __getitem__(self, i):
        return self.curves[i]

    def __repr__(self):
        return "CurvePool(genus=%d, %d curves)" % (self.genus,
                                                   len(self.curves))


def _pool_order_key(c: CurveClass):
    return (sum(c.coords), c.coords)


def generate_pool(genus, seeds, alphabet, max_len, weight_cap,
                  prng_seed=0) -> CurvePool:
    """Breadth-first twist orbit of the seeds, truncated and canonical.

    ``seeds`` and ``alphabet`` are reference-curve labels (curve classes
    are also accepted); each BFS level applies one positive or negative
    twist about each alphabet curve.  Curves whose total weight exceeds
    ``weight_cap`` are pruned, including seeds.  With an empty alphabet
    the orbit is just the seeds.  The result is ordered by (total
    weight, lexicographic coordinates) and is deterministic for a fixed
    recipe; ``prng_seed`` is carried in the recipe for downstream
    sampling but the pool itself uses no randomness.
    """
    assert max_len >= 0 and weight_cap > 0
    seed_curves = [c if isinstance(c, CurveClass)
                   else reference_curve(genus, c) for c in seeds]
    letters = [c if isinstance(c, CurveClass)
               else reference_curve(genus, c) for c in alphabet]
    assert all(c.genus == genus for c in seed_curves + letters)

    pool = {}
    frontier = []
    for c in seed_curves:
        if sum(c.coords) <= weight_cap and c.coords not in pool:
            pool[c.coords] = c
            frontier.append(c)
    for _ in range(max_len):
        nxt = []
        for c in frontier:
            for about in letters:
                for power in (1, -1):
                    img = _twist_step(c, about, power)
                    if sum(img.coords) > weight_cap:
                        continue
                    if img.coords not in pool:
                        pool[img.coords] = img
                        nxt.append(img)
        frontier = nxt
        if not frontier:
            break
    curves = sorted(pool.values(), key=_pool_order_key)
    recipe = {
        "genus": genus,
        "seeds": [s if isinstance(s, str) else list(s.coords)
                  for s in seeds],
        "alphabet": [a if isinstance(a, str) else list(a.coords)
                     for a in alphabet],
        "max_len": max_len,
        "weight_cap": weight_cap,
        "prng_seed": prng_seed,
    }
    return CurvePool(genus, curves, recipe)


# ----------------------------------------------------------------------
# graphs


def build_graph(pool: CurvePool, include_pants: bool) -> ComplexGraph:
    """Complex subgraph on a pool's curve vertices and (optionally) all
    pants vertices of pairwise-disjoint pool triples."""
    assert len(pool) > 0
    verts = [classify_curve_vertex(c) for c in pool]
    if include_pants:
        n = len(pool)
        nbr = [set() for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if curves_disjoint(pool[i], pool[j]):
                    nbr[i].add(j)
        for i in range(n):
            for j in sorted(nbr[i]):
                for k in sorted(nbr[i] & nbr[j]):
                    verts.extend(pants_vertices([pool[i], pool[j], pool[k]]))
    recipe = {"pool": pool.recipe, "include_pants": bool(include_pants)}
    return ComplexGraph(verts, recipe=recipe)


class EdgeGraph:
    """Plain undirected graph on indexed vertices (metric fixtures and
    deserialized graphs); same traversal interface as ComplexGraph."""

    __slots__ = ("n_vertices", "edges", "vertices", "_nbr")

    def __init__(self, n, edges, vertices=None):
        edges = tuple(sorted((min(i, j), max(i, j)) for i, j in edges))
        assert all(0 <= i < j < n for i, j in edges)
        nbr = [set() for _ in range(n)]
        for i, j in edges:
            nbr[i].add(j)
            nbr[j].add(i)
        self.n_vertices = n
        self.edges = edges
        self.vertices = tuple(vertices) if vertices is not None else None
        self._nbr = tuple(frozenset(s) for s in nbr)

    def neighbors(self, i):
        return self._nbr[i]

    def __repr__(self):
        return "EdgeGraph(%d vertices, %d edges)" % (self.n_vertices,
                                                     len(self.edges))


def _vertex_index(graph, v):
    if isinstance(v, int):
        if not 0 <= v < graph.n_vertices:
            raise ValueError("vertex index %d out of range" % v)
        return v
    if isinstance(v, Vertex):
        verts = graph.vertices
        if verts is None:
            raise ValueError("graph carries no vertex objects")
        for i, u in enumerate(verts):
            if u == v:
                return i
        raise ValueError("vertex not in graph")
    raise ValueError("vertex must be an index or a Vertex")


def _bfs_from(graph, src):
    dist = {src: 0}
    queue = [src]
    for u in queue:
        for w in graph.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_distance(graph, u, v):
    """Shortest path length between two graph vertices, or None if the
    target is unreachable.  Distances on pool graphs are upper bounds
    for the complex distance.  Vertices absent from the graph raise
    ValueError."""
    iu = _vertex_index(graph, u)
    iv = _vertex_index(graph, v)
    if iu == iv:
        return 0
    return _bfs_from(graph, iu).get(iv)


def connected_components(graph):
    """Vertex index sets of the graph's connected components,
    largest first (ties by smallest member)."""
    seen = set()
    comps = []
    for s in range(graph.n_vertices):
        if s in seen:
            continue
        comp = set(_bfs_from(graph, s))
        seen |= comp
        comps.append(sorted(comp))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def subgraph(graph, indices) -> EdgeGraph:
    """Induced EdgeGraph on the given vertex indices (order preserved)."""
    indices = list(indices)
    pos = {v: i for i, v in enumerate(indices)}
    edges = []
    for v in indices:
        for w in graph.neighbors(v):
            if w in pos and v < w:
                edges.append((pos[v], pos[w]))
    verts = None
    if getattr(graph, "vertices", None) is not None:
        verts = [graph.vertices[v] for v in indices]
    return EdgeGraph(len(indices), edges, verts)


# ----------------------------------------------------------------------
# path projection and coboundedness


def project_path(path):
    """Project a complex-graph path to a curve-graph path.

    The input is a vertex sequence with consecutive members adjacent and
    disk/annulus endpoints.  Pants vertices are replaced by the annulus
    over their first boundary curve in canonical order; consecutive
    equal vertices then collapse.  The output is a valid curve-graph
    path (consecutive curves disjoint) no longer than the input.
    """
    from .complexes import adjacent

    path = list(path)
    if not path:
        raise ValueError("empty path")
    for v in (path[0], path[-1]):
        if v.kind == PANTS:
            raise ValueError("path endpoints must be disk or annulus "
                             "vertices")
    for a, b in zip(path, path[1:]):
        if not adjacent(a, b):
            raise ValueError("consecutive path vertices are not adjacent")
    replaced = [v if v.kind != PANTS else annulus_vertex(v.curves[0])
                for v in path]
    out = []
    for v in replaced:
        if not out or out[-1] != v:
            out.append(v)
    assert len(out) <= len(path)
    for a, b in zip(out, out[1:]):
        assert curves_disjoint(a.curves[0], b.curves[0])
    return out


def cobounded_check(graph) -> dict:
    """Check every pants vertex has a curve-vertex neighbor at distance 1.

    Returns the worst distance from a pants vertex to the curve-vertex
    set (0 when the graph has no pants) and lists violations — pants
    whose nearest disk/annulus vertex is farther than one edge (None
    when unreachable)."""
    verts = graph.vertices
    assert verts is not None
    pants_idx = [i for i, v in enumerate(verts) if v.kind == PANTS]
    violations = []
    bound = 0
    for i in pants_idx:
        if any(verts[j].kind != PANTS for j in graph.neighbors(i)):
            bound = max(bound, 1)
            continue
        dist = _bfs_from(graph, i)
        best = min((d for j, d in dist.items() if verts[j].kind != PANTS),
                   default=None)
        violations.append((i, best))
        if best is not None:
            bound = max(bound, best)
    return {
        "n_pants": len(pants_idx),
        "bound": bound,
        "violations": violations,
        "verdict": not violations,
    }


# ----------------------------------------------------------------------
# hyperbolicity estimate


def delta_estimate(graph, sample_count, prng_seed=0) -> Fraction:
    """Maximum four-point defect over sampled quadruples, as a Fraction.

    The graph must be connected (choose a component first; see
    connected_components/subgraph) and have at least 4 vertices.  When
    the total number of quadruples is at most ``sample_count`` the check
    is exhaustive; otherwise quadruples are drawn by the seeded PRNG.
    """
    n = graph.n_vertices
    if n < 4:
        raise ValueError("delta estimate needs at least 4 vertices")
    if len(_bfs_from(graph, 0)) != n:
        raise ValueError("graph is not connected; estimate a component")
    assert sample_count >= 1

    dists = {}

    def d(a, b):
        if a not in dists:
            dists[a] = _bfs_from(graph, a)
        return dists[a][b]

    total = n * (n - 1) * (n - 2) * (n - 3) // 24
    if total <= sample_count:
        quads = itertools.combinations(range(n), 4)
    else:
        rng = random.Random(prng_seed)
        quads = (rng.sample(range(n), 4) for _ in range(sample_count))

    best = Fraction(0)
    for w, x, y, z in quads:
        s = sorted((d(w, x) + d(y, z), d(w, y) + d(x, z),
                    d(w, z) + d(x, y)))
        defect = Fraction(s[2] - s[1], 2)
        if defect > best:
            best = defect
    return best


# ----------------------------------------------------------------------
# mapping classes


def apply_mapping_class(word, v: Vertex) -> Vertex:
    """Image of a vertex under a twist word (applied to each boundary
    curve; pants regions recomputed from the image multicurve).

    The image kind is recomputed honestly, so a word that does not
    extend to the handlebody may send a disk vertex to an annulus
    vertex or make an image pants compressible (ValueError).  When the
    image boundary triple bounds two pants regions, the source triple
    does too and the image region is matched by region-id order — the
    twin regions have equal boundaries, so the choice is invisible to
    adjacency.
    """
    images = [apply_twist_word(word, c) for c in v.curves]
    if v.kind in (DISK, ANNULUS):
        return classify_curve_vertex(images[0])

    def distinct(curves):
        seen = set()
        out = []
        for c in sorted(curves, key=lambda c: c.coords):
            if c.coords not in seen:
                seen.add(c.coords)
                out.append(c)
        return out

    def matching_pants(curves):
        want = sorted(c.coords for c in curves)
        return [p for p in pants_vertices(distinct(curves))
                if sorted(c.coords for c in p.curves) == want]

    cands = matching_pants(images)
    if not cands:
        raise ValueError("image pants is compressible or degenerate")
    if len(cands) == 1:
        return cands[0]
    src_ids = sorted(p.region_id for p in matching_pants(list(v.curves)))
    img_ids = sorted(p.region_id for p in cands)
    k = src_ids.index(v.region_id)
    return next(p for p in cands if p.region_id == img_ids[k])


def apply_mapping_class_graph(word, graph: ComplexGraph) -> ComplexGraph:
    """Image graph under the vertex-wise twist action."""
    return ComplexGraph([apply_mapping_class(word, v)
                         for v in graph.vertices],
                        recipe={"base": graph.recipe, "word": list(word)})


# ----------------------------------------------------------------------
# genus-2 hyperelliptic involution


CANDIDATE_INVOLUTIONS = (
    (("c1", 1), ("c2", 1), ("c3", 1), ("c4", 1), ("c5", 2),
     ("c4", 1), ("c3", 1), ("c2", 1), ("c1", 1)),
    (("c1", 1), ("c2", 1), ("c3", 1), ("c4", 1), ("c5", 1)) * 3,
)


def _word_name(word):
    return " ".join("T_%s%s" % (label, "" if power == 1 else "^%d" % power)
                    for label, power in word)


def involution_check(pool, sample_count=200, prng_seed=0) -> dict:
    """Verify a genus-2 chain-twist word acts as the hyperelliptic
    involution on the pool.

    Both candidate words are tried in order; a candidate is accepted
    when it fixes every sampled curve class (hence squares to the
    identity on them) and maps meridian classes to meridian classes.
    The accepted word is then checked against the twin pants vertices:
    their shared boundary triple must be fixed setwise, which carries
    the pants pair to itself.  If no candidate verifies, ValueError
    names both words.
    """
    curves = list(pool)
    genus = curves[0].genus
    if genus != 2:
        raise ValueError("the involution candidates are genus-2 words")
    rng = random.Random(prng_seed)
    if len(curves) > sample_count:
        samples = rng.sample(curves, sample_count)
    else:
        samples = curves

    accepted = None
    per_candidate = []
    for word in CANDIDATE_INVOLUTIONS:
        fixed = 0
        moved = None
        for c in samples:
            if apply_twist_word(word, c) == c:
                fixed += 1
            else:
                moved = c
                break
        ok = moved is None
        per_candidate.append({"word": _word_name(word), "fixed": fixed,
                              "checked": len(samples), "accepted": ok})
        if ok and accepted is None:
            accepted = word
    if accepted is None:
        raise ValueError(
            "no involution candidate fixes the sampled classes: %s / %s"
            % (_word_name(CANDIDATE_INVOLUTIONS[0]),
               _word_name(CANDIDATE_INVOLUTIONS[1])))

    meridians = [c for c in samples if c.is_meridian]
    assert all(apply_twist_word(accepted, c).is_meridian for c in meridians)

    from .refcurves import twin_pants_triple
    triple = twin_pants_triple()
    triple_images = [apply_twist_word(accepted, c) for c in triple]
    pants_preserved = (sorted(c.coords for c in triple_images)
                      == sorted(c.coords for c in triple))
    square_ok = all(
        apply_twist_word(accepted, apply_twist_word(accepted, c)) == c
        for c in samples[:min(20, len(samples))])
    return {
        "accepted_word": _word_name(accepted),
        "candidates": per_candidate,
        "n_samples": len(samples),
        "n_meridians_checked": len(meridians),
        "twin_pants_pair_preserved": pants_preserved,
        "square_is_identity": square_ok,
        "verdict": pants_preserved and square_ok,
    }


# ----------------------------------------------------------------------
# decomposition search and the twin-pants witness


def extend_decomposition(alpha: CurveClass, pool) -> list:
    """Complete a non-meridian curve to a full pants decomposition using
    pool curves, or return None.

    Backtracking over pairwise-disjoint non-meridian pool curves in
    canonical order; a full-size candidate set is certified by its
    complement (all pants) before being returned.  Failure means the
    pool was insufficient, never that no completion exists.
    """
    if alpha.is_meridian:
        raise ValueError("a meridian cannot start a pants decomposition")
    genus = alpha.genus
    need = 3 * genus - 3
    cands = [c for c in sorted(set(pool), key=_pool_order_key)
             if not c.is_meridian and c.coords != alpha.coords
             and curves_disjoint(c, alpha)]

    chosen = [alpha]

    def certified(curves):
        comps = complement_components(curves)
        return all(c.genus == 0 and c.n_boundary == 3 for c in comps)

    def search(start):
        if len(chosen) == need:
            return certified(list(chosen))
        for i in range(start, len(cands)):
            c = cands[i]
            if all(curves_disjoint(c, d) for d in chosen):
                chosen.append(c)
                if search(i + 1):
                    return True
                chosen.pop()
        return False

    if need == 1 or search(0):
        if len(chosen) == need and certified(chosen):
            return list(chosen)
    return None


def r5_witness(pool) -> dict:
    """Find the genus-2 twin pants witness in a pool.

    Searches the pool for curves alpha, beta with handlebody words
    x_1^2 and x_2^2 and a third pool curve gamma disjoint from both
    whose complement with them is two incompressible pants sharing the
    full boundary triple.  Returns the curves, the two distinct pants
    vertices, and an annotation recording why the two pants are not
    expected to be interchangeable (their common boundary words x_1^2,
    x_2^2 are proper powers, not basis elements of the free group — an
    argument recorded for the reader, not decided here).  Raises
    ValueError with pool diagnostics when the search fails.
    """
    curves = list(pool)
    if not curves or curves[0].genus != 2:
        raise ValueError("the twin pants witness lives at genus 2")
    alphas = [c for c in curves if c.handlebody_word == (1, 1)]
    betas = [c for c in curves if c.handlebody_word == (2, 2)]
    if not alphas or not betas:
        raise ValueError(
            "pool has no curve with handlebody word x_1^2 (%d found) or "
            "x_2^2 (%d found); enlarge the pool"
            % (len(alphas), len(betas)))
    for alpha, beta in itertools.product(alphas, betas):
        if not curves_disjoint(alpha, beta):
            continue
        for gamma in curves:
            if gamma.coords in (alpha.coords, beta.coords):
                continue
            if gamma.is_meridian:
                continue
            if not (curves_disjoint(gamma, alpha)
                    and curves_disjoint(gamma, beta)):
                continue
            triple = [alpha, beta, gamma]
            pants = pants_vertices(triple)
            if len(pants) != 2:
                continue
            bset = {tuple(c.coords for c in p.curves) for p in pants}
            if len(bset) != 1:
                continue
            p1, p2 = pants
            assert p1 != p2 and p1.region_id != p2.region_id
            return {
                "alpha": alpha,
                "beta": beta,
                "gamma": gamma,
                "pants": (p1, p2),
                "annotation": (
                    "the two pants share the boundary triple with "
                    "handlebody words x_1^2, x_2^2, x_1^2 x_2^2; the "
                    "first two are proper powers, hence not basis "
                    "elements of the free group, which is the recorded "
                    "reason the pants are treated as distinct vertices"),
            }
    raise ValueError(
        "no disjoint completion of the x_1^2/x_2^2 pair found in a pool "
        "of %d curves; enlarge the pool" % len(curves))

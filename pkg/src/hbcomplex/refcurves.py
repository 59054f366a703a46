"""Reference curves: pushed-off triangulation loops and polygon segments.

Pushed-off loops.  Every loop edge (a_i or b_i) runs from the vertex to
itself; a parallel copy slid off the vertex crosses exactly the edge germs
in one of the two angular intervals between the loop's two ends in the
cyclic rotation order at the vertex, each once, as close to the vertex as
possible.  That drawing has corner arcs only, so it is normal, and its
weight vector is simply the count of interval germs per edge.  Both
intervals give isotopic copies; the shorter one is used and canonical
reduction reconciles the choice (pushing the long way across the vertex is
exactly a vertex push, which the reduction performs).

Polygon segments.  A straight segment inside the 4g-gon from a point on
side k to a point on side m (k < m) crosses precisely the fan chords
c_{j} with lo(k) < j <= lo(m) where lo(s) = min(max(s, 1), 4g-2) — the
chord c_j separates sides 0..j-1 from sides j..4g-1 (with sides 0 and 4g-1
adjacent to the fan wedge boundaries, whence the clamp).  A closed curve
assembled from such segments and the induced side crossings is again normal
(each segment contributes one corner arc per triangle it meets), so its
weight vector determines it.

The genus-g chain c_1 .. c_{2g+1} is the standard chain of simple closed
curves with i(c_j, c_{j+1}) = 1 and all other pairs disjoint:

    c_1 = pushoff(a_1), c_2 = pushoff(b_1), c_3 = n(1,2), c_4 = pushoff(b_2),
    c_5 = n(2,3), ..., c_{2g} = pushoff(b_g), c_{2g+1} = pushoff(a_g),

where n(i,i+1) is the curve running once over handle i and handle i+1:
it leaves through polygon side 4i-3 (the b_i side), crosses to side 4i+1
(the b_{i+1} side), and closes through the identified copies — concretely,
the segment curve through sides s_{4i-3}, s_{4i-1}, s_{4i+1}, s_{4i+3}.

Reference decompositions.  The a-pushoffs together with the two-handle
runs n(i,i+1) form a pairwise-disjoint system whose complement is two
pairs of pants plus one four-holed sphere per interior handle pair: the
j-th four-holed sphere is bounded by a_j, a_{j+2}, n(j,j+1) and
n(j+1,j+2).  Splitting each four-holed sphere with the three-handle run
n(j,j+1,j+2) yields a complete pants decomposition into 2g-2 pairs of
pants, all of whose curves are non-separating and none a meridian (their
handlebody words are x_j, x_j x_{j+1} and x_j x_{j+1} x_{j+2}).  At genus
two the system a_1, n(1,2), a_2 is already complete and its two pants
share all three boundary curves.

The meridian system replaces the handle-one block by the meridian b_1:
cutting along b_1 leaves a genus g-1 surface with two boundary circles,
which is decomposed by the a- and run-curves of handles 2..g together
with two curves tying the b_1 boundary circles into the handle-two block
(segment curves through sides (0,5) and (0,1,2,5,3), handlebody words
x_2 and x_2 again but with distinct classes).  The meridian's two sides
then lie in different pants, so exactly two pants of the decomposition
are compressible.

The twin pants triple at genus two consists of the twisted curves
T_{a_1}^2(b_1) and T_{a_2}^2(b_2) (handlebody words x_1^2 and x_2^2)
together with the segment curve through sides (0,3,3,4,7,7) (handlebody
word x_1^2 x_2^2).  The three are pairwise disjoint and their complement
is two pairs of pants sharing all three boundary curves, neither of them
compressible.
"""

from __future__ import annotations

from functools import lru_cache

from .curves import CurveClass, curve_from_coords
from .surface import build_surface


def _germ_interval_weights(surf, start_germ, end_germ):
    """Edge weights of the germs strictly between start and end, ccw."""
    order = surf.germ_order
    i0 = surf.germ_index[start_germ]
    i1 = surf.germ_index[end_germ]
    n = len(order)
    w = [0] * surf.n_edges
    j = (i0 + 1) % n
    while j != i1:
        w[order[j][0]] += 1
        j = (j + 1) % n
    return w


def pushoff_weights(surf, edge: int):
    """Weight vector of the pushed-off copy of a loop edge (shorter side)."""
    from .surface import HEAD, TAIL

    assert surf.is_loop(edge)
    w1 = _germ_interval_weights(surf, (edge, 1), (edge, 0))
    w2 = _germ_interval_weights(surf, (edge, 0), (edge, 1))
    return w1 if sum(w1) <= sum(w2) else w2


@lru_cache(maxsize=None)
def pushoff(genus: int, label: str) -> CurveClass:
    """Curve class of the pushed-off loop with the given label (a1, b2, ...)."""
    surf = build_surface(genus)
    e = surf.label_to_edge[label]
    assert surf.is_loop(e), "only loop edges have pushoffs"
    return curve_from_coords(genus, pushoff_weights(surf, e))


def _segment_chords(genus: int, k: int, m: int):
    """Chord edges crossed by a straight segment from side k to side m."""
    assert 0 <= k < m < 4 * genus

    def lo(s):
        return min(max(s, 1), 4 * genus - 2)

    return [j for j in range(lo(k) + 1, lo(m) + 1)]


def segment_curve_weights(genus: int, exit_sides):
    """Weight vector of the closed segment curve with the given exits.

    ``exit_sides`` lists, in traversal order, the polygon sides through
    which the curve leaves the polygon.  Leaving through side s re-enters
    through the paired side, which is a single crossing of the identified
    edge; the next straight segment runs from that entry side to the next
    exit side, crossing the fan chords between them.
    """
    surf = build_surface(genus)
    w = [0] * surf.n_edges
    n = len(exit_sides)
    for i in range(n):
        ex = exit_sides[i]
        w[surf.side_edge[ex]] += 1
        enter = surf.side_pairing[ex]
        nxt = exit_sides[(i + 1) % n]
        a, b = (enter, nxt) if enter < nxt else (nxt, enter)
        assert a != b, "degenerate segment"
        for j in _segment_chords(genus, a, b):
            w[surf.chord_edge(j)] += 1
    return w


def handle_run_exits(i: int, span: int):
    """Exit sides of the curve running once over handles i .. i+span-1.

    The run crosses the edges b_i .. b_{i+span-1} once each, leaving
    through the sides 4j-3.  Its return segment must pass the earlier
    handle blocks, and a plain straight return would cross the earlier
    runs essentially; threading it through each earlier block's sides
    (forward a, forward b, backward a on the way in, backward b on the
    way out, so every extra edge is crossed with cancelling signs) keeps
    the curve inside the subsurface spanned by handles i .. i+span-1,
    disjoint from the curves of the other handles.
    """
    assert i >= 1 and span >= 2
    prefix = tuple(v for j in range(1, i)
                   for v in (4 * j - 4, 4 * j - 3, 4 * j - 2))
    core = tuple(4 * (i + t) - 3 for t in range(span))
    suffix = tuple(4 * j - 1 for j in range(i - 1, 0, -1))
    return prefix + core + suffix


@lru_cache(maxsize=None)
def handle_run(genus: int, i: int, span: int) -> CurveClass:
    """The curve running once over handles i .. i+span-1 (span >= 2)."""
    assert 1 <= i and i + span - 1 <= genus
    exits = handle_run_exits(i, span)
    c = curve_from_coords(genus, segment_curve_weights(genus, exits))
    assert c.handlebody_word == tuple(range(i, i + span))
    return c


def handle_bridge(genus: int, i: int) -> CurveClass:
    """The curve n(i, i+1) running once over handles i and i+1."""
    assert 1 <= i <= genus - 1
    return handle_run(genus, i, 2)


@lru_cache(maxsize=None)
def chain_curve(genus: int, j: int) -> CurveClass:
    """The j-th curve of the standard chain c_1 .. c_{2g+1}."""
    assert 1 <= j <= 2 * genus + 1
    if j == 1:
        return pushoff(genus, "a1")
    if j == 2 * genus + 1:
        return pushoff(genus, "a%d" % genus)
    if j % 2 == 0:
        return pushoff(genus, "b%d" % (j // 2))
    return handle_bridge(genus, (j - 1) // 2)


def chain(genus: int):
    return [chain_curve(genus, j) for j in range(1, 2 * genus + 2)]


@lru_cache(maxsize=None)
def _pants_decomposition(genus: int):
    assert genus >= 2
    curves = [pushoff(genus, "a%d" % i) for i in range(1, genus + 1)]
    curves += [handle_run(genus, i, 2) for i in range(1, genus)]
    curves += [handle_run(genus, j, 3) for j in range(1, genus - 1)]
    assert len(curves) == 3 * genus - 3
    assert len({c.coords for c in curves}) == len(curves)
    assert not any(c.is_meridian or c.is_separating for c in curves)
    return tuple(curves)


def pants_decomposition(genus: int):
    """The standard pants decomposition: 3g-3 disjoint non-separating curves.

    Ordered a_1 .. a_g, n(1,2) .. n(g-1,g), n(1,2,3) .. n(g-2,g-1,g).
    None of the curves is a meridian, so all 2g-2 complementary pants are
    incompressible.
    """
    return list(_pants_decomposition(genus))


@lru_cache(maxsize=None)
def _meridian_system(genus: int):
    if genus < 3:
        raise ValueError("the one-meridian decomposition needs genus >= 3")
    curves = [pushoff(genus, "b1")]
    curves += [pushoff(genus, "a%d" % j) for j in range(2, genus + 1)]
    curves += [handle_run(genus, j, 2) for j in range(2, genus)]
    curves += [handle_run(genus, j, 3) for j in range(2, genus - 1)]
    curves += [curve_from_coords(genus, segment_curve_weights(genus, (0, 5))),
               curve_from_coords(genus,
                                 segment_curve_weights(genus,
                                                       (0, 1, 2, 5, 3)))]
    assert len(curves) == 3 * genus - 3
    assert len({c.coords for c in curves}) == len(curves)
    assert curves[0].is_meridian
    assert not any(c.is_meridian for c in curves[1:])
    return tuple(curves)


def meridian_system(genus: int):
    """A pants decomposition whose only meridian is the b_1 pushoff.

    The meridian comes first; the remaining 3g-4 curves are disjoint from
    it and from each other, and the meridian's two sides lie in different
    pants, so exactly two of the 2g-2 pants are compressible.
    """
    return list(_meridian_system(genus))


@lru_cache(maxsize=None)
def _twin_pants_triple():
    from .twists import dehn_twist

    g = 2
    alpha = dehn_twist(pushoff(g, "b1"), pushoff(g, "a1"), 2)
    beta = dehn_twist(pushoff(g, "b2"), pushoff(g, "a2"), 2)
    gamma = curve_from_coords(g, segment_curve_weights(g, (0, 3, 3, 4, 7, 7)))
    assert alpha.handlebody_word == (1, 1)
    assert beta.handlebody_word == (2, 2)
    assert gamma.handlebody_word == (1, 1, 2, 2)
    assert not any(c.is_meridian for c in (alpha, beta, gamma))
    return (alpha, beta, gamma)


def twin_pants_triple():
    """Genus-2 curves alpha, beta, gamma with handlebody words x1^2, x2^2,
    x1^2 x2^2: pairwise disjoint, and their complement is two
    incompressible pairs of pants sharing all three boundary curves."""
    return _twin_pants_triple()


_LABEL_ALIASES = {"a_": "a", "b_": "b", "c_": "c"}


def reference_curve(genus: int, name: str) -> CurveClass:
    """Look up a reference curve by label.

    a_k, b_k -- pushed-off loop edges; c_k -- chain curves; n_k -- the
    two-handle run over handles k, k+1; m_k -- the three-handle run over
    handles k..k+2; w_1 -- the genus-2 twin-pants completing curve.
    Underscores in labels are optional.
    """
    label = name.replace("_", "")
    if len(label) < 2:
        raise ValueError("unknown reference curve %r" % name)
    kind, num = label[0], label[1:]
    if not num.isdigit():
        raise ValueError("unknown reference curve %r" % name)
    k = int(num)
    if kind in ("a", "b"):
        if not 1 <= k <= genus:
            raise ValueError("no loop %s at genus %d" % (label, genus))
        return pushoff(genus, label)
    if kind == "c":
        if not 1 <= k <= 2 * genus + 1:
            raise ValueError("chain index %d out of range at genus %d"
                             % (k, genus))
        return chain_curve(genus, k)
    if kind == "n":
        if not 1 <= k <= genus - 1:
            raise ValueError("run index %d out of range at genus %d"
                             % (k, genus))
        return handle_run(genus, k, 2)
    if kind == "m":
        if not 1 <= k <= genus - 2:
            raise ValueError("run index %d out of range at genus %d"
                             % (k, genus))
        return handle_run(genus, k, 3)
    if kind == "w":
        if k != 1 or genus != 2:
            raise ValueError("the twin-pants curve w_1 lives at genus 2")
        return curve_from_coords(
            genus, segment_curve_weights(genus, (0, 3, 3, 4, 7, 7)))
    raise ValueError("unknown reference curve %r" % name)

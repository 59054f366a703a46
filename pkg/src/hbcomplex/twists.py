"""Dehn twists on curve classes.

A single positive twist of alpha about beta is built explicitly: realize
the two classes in minimal position (k = i(alpha, beta) crossings), replace
beta by k parallel copies of its minimal-position strand, and resolve every
one of the resulting k*k crossings with the same planar smoothing.  Each
strand of alpha through the annulus around beta then turns onto its own
private copy, wraps it fully, and returns — which is exactly one Dehn
twist.  The smoothed picture is an embedded single-component drawing whose
canonical reduction is the image class.

At a four-valent crossing the two planar resolutions pair each dart with
one of its two rotation neighbours; pairing every dart of the twisted
curve with its counterclockwise (respectively clockwise) neighbour at
every crossing turns all strands the same way around the annulus.  Which
of the two is the positive (right-handed) twist is a single global
constant, anchored by the convention that the positive twist of b_1
about a_1 adds +[a_1]: with <,> the algebraic intersection pairing
(<a_i, b_i> = +1),

    homology(T_beta^n alpha) = homology(alpha) + n * <beta, alpha> * homology(beta),

so T_{a_1}^2(b_1) has homology class 2[a_1] + [b_1].  Powers apply the
single twist |n| times.
"""

from __future__ import annotations

from .arrangement import Arrangement
from .curves import (CurveClass, _reduce_to_class, normalize_homology,
                     symplectic_pairing)
from .drawing import Drawing, overlay
from .intersect import _reduce_to_minimal

# Pairing side of the positive twist's resolution (see module docstring):
# 0 pairs each twisted-curve dart with its counterclockwise-next neighbour.
_RES_POS = 0


def _bundle(u: Drawing, k: int) -> Drawing:
    """Replace the tag-1 curve of a two-curve overlay by k parallel copies.

    The copies are the pushoff family of the strand: at an edge point the
    copy block runs head-to-tail when the strand exits through germ side 0
    and tail-to-head when it exits through side 1, which keeps the family
    embedded (checked).  Tags become (0, .) for the kept curve and (c, .)
    for copy c.
    """
    out_side = {}
    for comp in u.components():
        if u.curve_key(comp[0][0]) != 1:
            continue
        for p, _, ex in comp:
            out_side[p] = ex
    d = Drawing(u.surface)
    amap = {}
    cmap = {}
    for e in range(u.surface.n_edges):
        for p in u.edge_pts[e]:
            if u.curve_key(p) == 0:
                amap[p] = d.new_point(e, len(d.edge_pts[e]), (0, p))
            else:
                order = range(k, 0, -1) if out_side[p] == 0 else range(1, k + 1)
                cmap[p] = {}
                for c in order:
                    cmap[p][c] = d.new_point(e, len(d.edge_pts[e]), (c, p))
    for (p, ps), (q, qs) in u.mate.items():
        if (p, ps) > (q, qs):
            continue
        if u.curve_key(p) == 0:
            d.add_arc(amap[p], ps, amap[q], qs)
        else:
            for c in range(1, k + 1):
                d.add_arc(cmap[p][c], ps, cmap[q][c], qs)
    d.validate()
    return d


def _smoothed(arr: Arrangement, res: int) -> Drawing:
    """Resolve every crossing: each dart of curve 0 pairs with its rotation
    neighbour on side ``res`` (0 = counterclockwise-next, 1 = clockwise)."""
    d = arr.d
    out = Drawing(d.surface)
    ids = {}
    for e in range(d.surface.n_edges):
        for p in d.edge_pts[e]:
            ids[p] = out.new_point(e, len(out.edge_pts[e]), 0)
    partner = {}
    for x, (_, a, b, _, _) in enumerate(arr.crossings):
        a_main = arr.arc_curve(a) == 0
        assert a_main != (arr.arc_curve(b) == 0), "crossing within one family"
        rot = arr.rot[("X", x)]
        # rot alternates arc-a and arc-b darts, a at even positions
        side = res if a_main else 1 - res
        for i in range(4):
            j = i + 1 if (i - side) % 2 == 0 else i - 1
            partner[rot[i]] = rot[j % 4]
    seen = set()
    walked = 0
    for a, (g1, g2) in enumerate(arr.arcs):
        for germ, motion in ((g1, ("A", a, 0, 1)),
                             (g2, ("A", a, len(arr.arc_nodes[a]) - 2, -1))):
            if germ in seen:
                continue
            cur = motion
            while True:
                walked += 1
                node = arr.dart_target(cur)
                if node[0] == "P":
                    _, a2, _, dr2 = cur
                    end = arr.arcs[a2][1] if dr2 == 1 else arr.arcs[a2][0]
                    break
                cur = partner[arr.reverse(cur)]
            seen.add(germ)
            seen.add(end)
            out.add_arc(ids[germ[0]], germ[1], ids[end[0]], end[1])
    # every segment lies on a germ-to-germ path: a resolved closed orbit
    # (which would drop strands silently) is impossible, and this checks it
    assert walked == sum(len(nodes) - 1 for nodes in arr.arc_nodes)
    out.validate()
    return out


def _twist_once(alpha: CurveClass, beta: CurveClass, sign: int) -> CurveClass:
    surf = alpha._surface
    u = overlay([alpha.drawing(), beta.drawing()])
    arr = _reduce_to_minimal(u, movable=1)
    k = arr.n_crossings
    if k == 0:
        return alpha
    pre = _bundle(u, k)
    arr2 = Arrangement(pre)
    assert arr2.n_crossings == k * k, (arr2.n_crossings, k)
    res = _RES_POS if sign > 0 else 1 - _RES_POS
    smooth = _smoothed(arr2, res)
    comps = smooth.components()
    assert len(comps) == 1, "twist produced %d components" % len(comps)
    return _reduce_to_class(surf, smooth)


def dehn_twist(curve: CurveClass, about: CurveClass, power: int = 1) -> CurveClass:
    """Image of a curve class under a power of a Dehn twist."""
    assert curve.genus == about.genus, "curves live on different surfaces"
    if power == 0 or curve == about:
        return curve
    sign = 1 if power > 0 else -1
    out = curve
    for _ in range(abs(power)):
        out = _twist_once(out, about, sign)
    q = symplectic_pairing(about.homology, curve.homology)
    want = normalize_homology(tuple(
        x + power * q * y for x, y in zip(curve.homology, about.homology)))
    assert out.homology == want, (out.homology, want)
    return out

"""Geometric intersection numbers, disjoint realization, and complements.

Two curve classes are overlaid in normal position and the overlay is
reduced: as long as the arrangement contains an empty bigon, one of its two
sides is rerouted past the other, removing exactly two crossings.  When no
bigon remains the picture is minimal — with all crossings between two
curves, an excess-intersection bigon would have empty interior (a strand
through it would have to cross one of the sides, creating a crossing that
does not exist) and hence show up as a disk region — so the remaining
crossing count is the geometric intersection number.

The same reduction realizes several pairwise-disjoint classes on one
surface simultaneously (curves are inserted one at a time and only the new
curve is ever moved), and the complement components of such a realization
are read off the region structure of the final arrangement.
"""

from __future__ import annotations

from .arrangement import Arrangement, count_crossings
from .curves import CurveClass
from .drawing import Drawing, inject, overlay

# Safety valve: each bigon removal strictly decreases the crossing count,
# so this many rounds is unreachable unless the reduction is broken.
_MAX_ROUNDS = 100000


def _reduce_to_minimal(u: Drawing, movable=None) -> Arrangement:
    """Remove empty bigons until none remain; return the final arrangement.

    ``movable`` fixes which curve index is rerouted; with None, each bigon
    moves its side with fewer strand points (ties move the higher index).
    Every removal is checked to drop the crossing count by exactly two.
    """
    for _ in range(_MAX_ROUNDS):
        arr = Arrangement(u)
        bigs = arr.bigons()
        if movable is not None:
            bigs = [b for b in bigs if movable in b.paths]
        if not bigs:
            return arr
        bigon = bigs[0]
        if movable is None:
            t1, t2 = sorted(bigon.paths)
            n1 = len(bigon.paths[t1]["points"])
            n2 = len(bigon.paths[t2]["points"])
            mov = t1 if n1 < n2 else t2
        else:
            mov = movable
        before = arr.n_crossings
        arr.remove_bigon(bigon, mov)
        after = count_crossings(u)
        assert after == before - 2, "bigon removal changed %d -> %d" % (
            before, after)
        u.validate()
    raise AssertionError("bigon reduction failed to terminate")


def intersection_number(c1: CurveClass, c2: CurveClass) -> int:
    """Geometric intersection number of two curve classes."""
    assert c1.genus == c2.genus, "curves live on different surfaces"
    if c1 == c2:
        return 0
    u = overlay([c1.drawing(), c2.drawing()])
    if count_crossings(u) == 0:
        return 0
    return _reduce_to_minimal(u).n_crossings


def disjoint(c1: CurveClass, c2: CurveClass) -> bool:
    """Can the two classes be realized disjointly?"""
    return intersection_number(c1, c2) == 0


def realize_disjoint(curves) -> Drawing:
    """One drawing realizing pairwise-disjoint classes simultaneously.

    Curves are inserted in order; each new curve is reduced against the
    union of the previous ones, moving only the new curve, until it crosses
    nothing.  Repeated classes come out as parallel copies.  Raises
    ValueError if some pair essentially intersects.
    """
    curves = list(curves)
    assert curves
    genus = curves[0].genus
    assert all(c.genus == genus for c in curves)
    u = Drawing(curves[0]._surface)
    for j, c in enumerate(curves):
        inject(u, c.drawing(), j)
        arr = _reduce_to_minimal(u, movable=j)
        if arr.n_crossings:
            bad = set()
            for _, a, b, _, _ in arr.crossings:
                bad.add(arr.arc_curve(a))
                bad.add(arr.arc_curve(b))
            raise ValueError(
                "curves %s are not pairwise disjoint" % sorted(bad))
    return u


class ComplementComponent:
    """A component of the complement of a disjoint multicurve.

    genus       -- genus of the compactified component
    boundary    -- sorted tuple of curve indices, one per boundary circle
    n_boundary  -- number of boundary circles
    region_id   -- canonical cell identifier within the arrangement
    """

    __slots__ = ("genus", "boundary", "n_boundary", "region_id")

    def __init__(self, genus, boundary, region_id):
        self.genus = genus
        self.boundary = tuple(boundary)
        self.n_boundary = len(self.boundary)
        self.region_id = region_id

    def key(self):
        return (self.genus, self.boundary, self.region_id)

    def __eq__(self, other):
        return (isinstance(other, ComplementComponent)
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "ComplementComponent(genus=%d, boundary=%s)" % (
            self.genus, list(self.boundary))


def _sum_realization(curves):
    """Disjoint realization from the summed weight vector, or None.

    For pairwise-disjoint classes in canonical position the sum of the
    weight vectors is admissible and its normal multicurve is the disjoint
    union; each traced component is matched back to an input class (equal
    classes interchangeably) and tagged with that input's index.  Returns
    None if the components do not match the inputs, which would mean the
    summed vector realizes some other multicurve.
    """
    from .curves import InessentialCurve, _reduce_to_class

    surf = curves[0]._surface
    w = [0] * surf.n_edges
    for c in curves:
        for e, x in enumerate(c.coords):
            w[e] += x
    d = Drawing.from_coords(surf, tuple(w))
    comps = d.components()
    if len(comps) != len(curves):
        return None
    unmatched = list(range(len(curves)))
    for comp in comps:
        cw = d.component_weights(comp)
        try:
            cls = _reduce_to_class(surf, Drawing.from_coords(surf, cw))
        except InessentialCurve:
            return None
        idx = next((i for i in unmatched if curves[i].coords == cls.coords),
                   None)
        if idx is None:
            return None
        unmatched.remove(idx)
        for p, _, _ in comp:
            d.tag[p] = (idx, 0)
    return d


def complement_components(curves) -> list:
    """Components of the complement of pairwise-disjoint curve classes.

    The union is realized disjointly (summed coordinates when they trace
    to the input classes, incremental reduction otherwise); each region
    of the resulting arrangement yields one component, with genus from
    chi = 2 - 2*genus - #circuits and each boundary circuit labelled by
    the index of the curve carrying it.  Repeated classes come out as
    parallel copies.  Deterministic: sorted by (genus, boundary,
    region_id).  Raises ValueError if some pair essentially intersects.
    """
    curves = list(curves)
    assert curves
    genus = curves[0].genus
    assert all(c.genus == genus for c in curves)
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            if intersection_number(curves[i], curves[j]):
                raise ValueError(
                    "curves %d and %d are not disjoint" % (i, j))
    u = _sum_realization(curves)
    if u is None:
        u = realize_disjoint(curves)
    arr = Arrangement(u)
    assert arr.n_crossings == 0
    out = []
    for reg in arr.regions:
        labels = []
        for cyc in reg.circuits:
            tags = {arr.arc_curve(dd[1]) for dd in cyc}
            assert len(tags) == 1, "mixed-curve boundary circuit"
            labels.append(tags.pop())
        b = len(labels)
        chi = reg.chi
        genus2 = 2 - b - chi
        assert genus2 >= 0 and genus2 % 2 == 0, (chi, b)
        out.append(ComplementComponent(genus2 // 2, sorted(labels),
                                       reg.region_id))
    out.sort(key=ComplementComponent.key)
    return out

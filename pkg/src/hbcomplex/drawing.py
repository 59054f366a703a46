"""Explicit transverse multicurve drawings on the triangulated surface.

A Drawing records a multicurve transverse to the triangulation: its crossing
points with the edges (in slot order along each edge) and the matching of
point germs into arcs inside triangles.  Every mutation below is a certified
isotopy of the underlying multicurve, so the isotopy class never changes.

Point germs.  A point p on edge e crosses between the two triangles adjacent
to e.  Germ side 0 of p faces the triangle that traverses e forward in its
counterclockwise boundary (which is the triangle on the LEFT of the edge's
orientation); side 1 faces the other triangle.  An arc joins two germs lying
in the same triangle; ``mate`` stores this matching.

Normal form.  A drawing with no same-edge arcs ("returns") is normal, and
its per-triangle arc pattern is forced by the edge weights (the corner form
of a non-crossing matching).  Normal coordinates determine the curve only up
to isotopies that cross the vertex, so canonical coordinates are computed by
weight reduction:

* returns are removed innermost first (each removal drops the weight by 2);
* a maximal chain of corner-innermost arcs hugging the vertex through m of
  the 12g-6 sectors is pushed across the vertex whenever that reduces the
  weight (the push replaces m+1 crossings by 12g-6-m-1, so it helps exactly
  when m >= 6g-3 and is weight-neutral when m = 6g-4);
* at a stable minimal weight, the orbit of weight-neutral half-wrap pushes
  is explored breadth-first and the lexicographically least weight vector of
  the orbit is the canonical form.  If a neutral push cascades into a weight
  drop, reduction restarts from the lighter drawing.

A component whose strand never leaves the star of the vertex is
nullhomotopic and is deleted outright ("vanishes"); the vertex-link
component (weight 2 on every edge, hugging every sector) is normal and
stable and is left in place so that traced multicurves keep their trivial
components visible.
"""

from __future__ import annotations

from . import _kernel
from .surface import HEAD, TAIL, Surface


class InessentialCurve(ValueError):
    """Raised when an operation requires an essential curve."""


class Chain:
    """A maximal run of corner-innermost arcs hugging the vertex.

    sectors -- rotation-order indices of the sectors the run crosses
    points  -- the m+1 crossing points along the run (distinct)
    closed  -- True when the run closes up around the vertex (a vertex-link
               shaped component; never pushed)
    """

    __slots__ = ("sectors", "points", "closed")

    def __init__(self, sectors, points, closed):
        self.sectors = sectors
        self.points = points
        self.closed = closed


class Drawing:
    def __init__(self, surface: Surface):
        self.surface = surface
        self.edge_pts = [[] for _ in range(surface.n_edges)]
        self.pt_edge = {}
        self.tag = {}
        self.mate = {}
        self._next = 0
        self.vanished = []

    # ------------------------------------------------------------------
    # construction

    def new_point(self, e: int, pos: int, tag) -> int:
        p = self._next
        self._next += 1
        self.edge_pts[e].insert(pos, p)
        self.pt_edge[p] = e
        self.tag[p] = tag
        return p

    def add_arc(self, p: int, ps: int, q: int, qs: int):
        assert (p, ps) not in self.mate and (q, qs) not in self.mate
        assert not (p == q and ps == qs)
        assert self.germ_triangle(p, ps)[0] == self.germ_triangle(q, qs)[0]
        self.mate[(p, ps)] = (q, qs)
        self.mate[(q, qs)] = (p, ps)

    def remove_arc(self, p: int, ps: int):
        q, qs = self.mate.pop((p, ps))
        del self.mate[(q, qs)]

    def delete_point(self, p: int):
        e = self.pt_edge.pop(p)
        self.edge_pts[e].remove(p)
        del self.tag[p]
        assert (p, 0) not in self.mate and (p, 1) not in self.mate

    @classmethod
    def from_coords(cls, surface: Surface, weights, tag=0) -> "Drawing":
        """The normal drawing of an admissible weight vector.

        Arcs occupy consecutive slots nearest their corner; the gluing
        matches equal slot indices along each edge's orientation.
        """
        d = cls(surface)
        for e, w in enumerate(weights):
            for _ in range(w):
                d.new_point(e, len(d.edge_pts[e]), tag)
        for t in range(surface.n_triangles):
            for c in range(3):
                n = surface.corner_count(t, c, weights)
                assert n >= 0, "inadmissible weights at triangle %d" % t
                c_in, c_out = c, (c + 1) % 3
                e_in, d_in = surface.triangles[t][c_in]
                e_out, d_out = surface.triangles[t][c_out]
                w_in = weights[e_in]
                for k in range(n):
                    slot_in = surface.side_slot(t, c_in, w_in - 1 - k, weights)
                    slot_out = surface.side_slot(t, c_out, k, weights)
                    p = d.edge_pts[e_in][slot_in]
                    q = d.edge_pts[e_out][slot_out]
                    d.add_arc(p, 0 if d_in == 1 else 1, q, 0 if d_out == 1 else 1)
        for p in d.pt_edge:
            assert (p, 0) in d.mate and (p, 1) in d.mate
        return d

    def copy(self) -> "Drawing":
        d = Drawing(self.surface)
        d.edge_pts = [list(l) for l in self.edge_pts]
        d.pt_edge = dict(self.pt_edge)
        d.tag = dict(self.tag)
        d.mate = dict(self.mate)
        d._next = self._next
        d.vanished = list(self.vanished)
        return d

    # ------------------------------------------------------------------
    # basic queries

    def weights(self):
        return tuple(len(l) for l in self.edge_pts)

    def total_weight(self) -> int:
        return sum(len(l) for l in self.edge_pts)

    def slot(self, p: int) -> int:
        return self.edge_pts[self.pt_edge[p]].index(p)

    def germ_triangle(self, p: int, side: int):
        """Triangle slot (t, c) that germ side of point p faces."""
        e = self.pt_edge[p]
        return self.surface.edge_occ[e][1 if side == 0 else -1]

    def side_facing(self, e: int, t: int) -> int:
        """Germ side flag of edge e facing triangle t."""
        if self.surface.edge_occ[e][1][0] == t:
            return 0
        assert self.surface.edge_occ[e][-1][0] == t
        return 1

    def points_in_order(self):
        for e in range(self.surface.n_edges):
            yield from self.edge_pts[e]

    def components(self):
        """Oriented components as cyclic visit lists [(point, in, out), ...].

        Deterministic: each component starts at its least-slot point on the
        least edge and exits through germ side 1 first.
        """
        seen = set()
        comps = []
        for start in self.points_in_order():
            if start in seen:
                continue
            seq = []
            p, enter = start, 0
            for _ in range(2 * len(self.pt_edge) + 1):
                exit_side = 1 - enter
                seq.append((p, enter, exit_side))
                seen.add(p)
                p, enter = self.mate[(p, exit_side)]
                if p == start and enter == 0:
                    break
            else:
                raise AssertionError("unclosed strand")
            comps.append(seq)
        return comps

    def component_weights(self, comp):
        w = [0] * self.surface.n_edges
        for p, _, _ in comp:
            w[self.pt_edge[p]] += 1
        return tuple(w)

    def curve_key(self, p):
        """Curve identity of a point: overlay tags (i, tag) map to i."""
        t = self.tag[p]
        return t[0] if isinstance(t, tuple) else t

    def validate(self):
        """Structural audit: matching sanity plus per-triangle embeddedness.

        In overlays, strands of different curves may cross; strands of one
        curve never may.
        """
        for (p, ps), (q, qs) in self.mate.items():
            assert self.mate[(q, qs)] == (p, ps)
        for p in self.pt_edge:
            assert (p, 0) in self.mate and (p, 1) in self.mate
        for t, boundary in enumerate(self._tri_boundaries()):
            pos = {g: i for i, g in enumerate(boundary)}
            starts, ends, curves = [], [], []
            for g in boundary:
                m = self.mate[g]
                if pos[g] < pos[m]:
                    starts.append(pos[g])
                    ends.append(pos[m])
                    curves.append(self.curve_key(g[0]))
            try:
                _kernel.count_crossings_tri(starts, ends, curves, len(boundary))
            except ValueError:
                raise AssertionError(
                    "strands of one curve cross in triangle %d" % t) from None
        return True

    def _tri_boundaries(self):
        """Per triangle, the germs along its ccw boundary (sides in order)."""
        out = []
        for t, tri in enumerate(self.surface.triangles):
            germs = []
            for c, (e, d) in enumerate(tri):
                pts = self.edge_pts[e] if d == 1 else list(reversed(self.edge_pts[e]))
                side = 0 if d == 1 else 1
                germs.extend((p, side) for p in pts)
            out.append(germs)
        return out

    # ------------------------------------------------------------------
    # returns (same-edge backtracks)

    def _find_return(self):
        for e in range(self.surface.n_edges):
            pts = self.edge_pts[e]
            for i in range(len(pts) - 1):
                p, q = pts[i], pts[i + 1]
                for s in (0, 1):
                    if self.mate.get((p, s)) == (q, s):
                        return p, q, s
        return None

    def remove_returns(self):
        """Remove innermost same-edge arcs until none remain."""
        while True:
            hit = self._find_return()
            if hit is None:
                break
            p, q, s = hit
            a = self.mate[(p, 1 - s)]
            b = self.mate[(q, 1 - s)]
            self.remove_arc(p, s)
            if a == (q, 1 - s):
                # two-point component bounding a disk: it vanishes
                self.remove_arc(p, 1 - s)
                self.vanished.append(self.tag[p])
                self.delete_point(p)
                self.delete_point(q)
                continue
            self.remove_arc(p, 1 - s)
            self.remove_arc(q, 1 - s)
            self.delete_point(p)
            self.delete_point(q)
            self.add_arc(a[0], a[1], b[0], b[1])
        # audit: no same-edge arc of any kind survives
        for (p, ps), (q, qs) in self.mate.items():
            assert self.pt_edge[p] != self.pt_edge[q] or (p, ps) == (q, qs)

    # ------------------------------------------------------------------
    # vertex moves

    def _innermost(self, germ):
        e, end = germ
        pts = self.edge_pts[e]
        if not pts:
            return None
        return pts[0] if end == TAIL else pts[-1]

    def find_chains(self):
        surf = self.surface
        w = self.weights()
        n_sect = len(surf.sector_order)
        counts = [surf.corner_count(*surf.sector_order[i], w) for i in range(n_sect)]
        if not any(counts):
            return []
        if all(counts):
            # every sector is hugged: the innermost strand closes around the
            # vertex into a vertex-link component
            return [Chain(tuple(range(n_sect)), (), True)]
        chains = []
        # maximal cyclic runs of positive sectors
        i = 0
        while counts[i % n_sect] > 0:
            i += 1  # rotate to a zero sector (exists)
        runs = []
        run = []
        for k in range(i, i + n_sect):
            if counts[k % n_sect] > 0:
                run.append(k % n_sect)
            elif run:
                runs.append(run)
                run = []
        if run:
            runs.append(run)
        for run in runs:
            sectors = []
            points = [self._innermost(surf.germ_order[(run[0] - 1) % n_sect])]
            for idx in run:
                q = self._innermost(surf.germ_order[idx])
                if q in points:
                    if sectors:
                        chains.append(Chain(tuple(sectors), tuple(points), False))
                    sectors = []
                    points = [self._innermost(surf.germ_order[idx])]
                    continue
                sectors.append(idx)
                points.append(q)
            if sectors:
                chains.append(Chain(tuple(sectors), tuple(points), False))
        return chains

    def _chain_arcs(self, chain):
        """The mate germ pairs realizing the chain's arcs (with checks)."""
        surf = self.surface
        arcs = []
        for k, idx in enumerate(chain.sectors):
            t, _ = surf.sector_order[idx]
            p, q = chain.points[k], chain.points[k + 1]
            gp = (p, self.side_facing(self.pt_edge[p], t))
            gq = (q, self.side_facing(self.pt_edge[q], t))
            assert self.mate[gp] == gq, "corner-form violation in chain"
            arcs.append((gp, gq))
        return arcs

    def push_chain(self, chain) -> bool:
        """Push the chain's substrand across the vertex.

        Returns False (drawing untouched) when the chain is unusable.  A
        wrap that closes through a single extra arc is rerouted through the
        complementary germs; when the reroute has fewer than two crossings
        the component contracts to nothing and is deleted.
        """
        if chain.closed:
            return False
        surf = self.surface
        n_sect = len(surf.sector_order)
        m = len(chain.sectors)
        arcs = self._chain_arcs(chain)
        first, last = chain.sectors[0], chain.sectors[-1]
        p0, pm = chain.points[0], chain.points[-1]
        t_before = surf.sector_order[(first - 1) % n_sect][0]
        t_after = surf.sector_order[(last + 1) % n_sect][0]
        g_u = (p0, self.side_facing(self.pt_edge[p0], t_before))
        g_w = (pm, self.side_facing(self.pt_edge[pm], t_after))
        u, us = self.mate[g_u]
        wpt, ws = self.mate[g_w]
        if self.mate[g_u] == g_w:
            # The outer germs are mated to each other: the component is the
            # chain plus one closing arc (both its flanking sectors lie in
            # one triangle T).  Pushing the wrap across the vertex reroutes
            # it through the complementary germs, and the closing arc
            # reattaches between the two new end points inside T.
            assert t_before == t_after
            tag = self.tag[p0]
            inner = [(last + 1 + k) % n_sect for k in range(n_sect - m - 1)]
            for gp, _ in arcs:
                self.remove_arc(*gp)
            self.remove_arc(*g_u)
            for p in chain.points:
                self.delete_point(p)
            if len(inner) < 2:
                # fewer than two crossings cannot support a closed rerouted
                # strand: the wrap contracts to nothing
                self.vanished.append(tag)
                return True
            new_pts = []
            for idx in inner:
                e, end = surf.germ_order[idx]
                pos = 0 if end == TAIL else len(self.edge_pts[e])
                new_pts.append(self.new_point(e, pos, tag))
            for j in range(len(new_pts) - 1):
                t_mid = surf.sector_order[(inner[j] + 1) % n_sect][0]
                a, b = new_pts[j], new_pts[j + 1]
                self.add_arc(
                    a, self.side_facing(self.pt_edge[a], t_mid),
                    b, self.side_facing(self.pt_edge[b], t_mid),
                )
            nf, nl = new_pts[0], new_pts[-1]
            self.add_arc(
                nl, self.side_facing(self.pt_edge[nl], t_before),
                nf, self.side_facing(self.pt_edge[nf], t_before),
            )
            return True
        if u in chain.points or wpt in chain.points:
            # a cut chain whose anchor is one of its own points: not pushable
            return False
        tag = self.tag[p0]
        # germs crossed by the rerouted strand, ccw between the complementary
        # run's sectors; the route traverses them from the u end downward
        inner = [(last + 1 + k) % n_sect for k in range(n_sect - m - 1)]
        # inner[j] indexes germ_order between complementary sectors
        if not inner and u == wpt:
            # degenerate: the rerouted strand would join the two germs of
            # one point with no crossing in between; leave it alone
            return False
        for gp, gq in arcs:
            self.remove_arc(*gp)
        self.remove_arc(*g_u)
        self.remove_arc(*g_w)
        for p in chain.points:
            self.delete_point(p)
        new_pts = []
        for idx in inner:
            e, end = surf.germ_order[idx]
            pos = 0 if end == TAIL else len(self.edge_pts[e])
            new_pts.append(self.new_point(e, pos, tag))
        if not new_pts:
            self.add_arc(u, us, wpt, ws)
            return True
        # w -- n_0 through sector after the chain; chain of n's; n_last -- u
        t0 = surf.sector_order[(last + 1) % n_sect][0]
        n0 = new_pts[0]
        self.add_arc(wpt, ws, n0, self.side_facing(self.pt_edge[n0], t0))
        for j in range(len(new_pts) - 1):
            t_mid = surf.sector_order[(inner[j] + 1) % n_sect][0]
            a, b = new_pts[j], new_pts[j + 1]
            self.add_arc(
                a, self.side_facing(self.pt_edge[a], t_mid),
                b, self.side_facing(self.pt_edge[b], t_mid),
            )
        t_last = surf.sector_order[(first - 1) % n_sect][0]
        nl = new_pts[-1]
        self.add_arc(u, us, nl, self.side_facing(self.pt_edge[nl], t_last))
        return True

    # ------------------------------------------------------------------
    # canonical reduction

    def _reduce_stable(self):
        """Remove returns and apply all weight-reducing vertex pushes."""
        self.remove_returns()
        n_sect = len(self.surface.sector_order)
        threshold = n_sect // 2  # push helps iff the chain spans >= 6g-3 sectors
        while True:
            chains = [c for c in self.find_chains()
                      if not c.closed and len(c.sectors) >= threshold]
            if not chains:
                return
            chains.sort(key=lambda c: (-len(c.sectors), c.sectors[0]))
            done = False
            for ch in chains:
                if self.push_chain(ch):
                    done = True
                    break
            if not done:
                return
            self.remove_returns()

    def canonical_vector(self):
        """Canonical coordinates of this drawing's multicurve.

        Returns the lexicographically least weight vector over the orbit of
        weight-neutral vertex pushes at the stable minimal weight.  Intended
        for single-component (or at least single-tag) drawings: the orbit is
        explored through reconstructed normal drawings, which do not carry
        per-point tags.  Deleted nullhomotopic components are recorded in
        ``self.vanished`` (one tag entry per deleted component).
        """
        surf = self.surface
        n_sect = len(surf.sector_order)
        tie = n_sect // 2 - 1
        rep_tag = next(iter(self.tag.values()), 0)
        work = self
        for _round in range(10000):
            work._reduce_stable()
            if work is not self:
                self.vanished.extend(rep_tag for _ in work.vanished)
                work.vanished = []
            base = work.weights()
            total = sum(base)
            if total == 0:
                return base
            seen = {base}
            frontier = [base]
            restart = None
            while frontier and restart is None:
                vec = frontier.pop(0)
                probe = Drawing.from_coords(surf, vec)
                for ch in probe.find_chains():
                    if ch.closed or len(ch.sectors) != tie:
                        continue
                    trial = Drawing.from_coords(surf, vec)
                    tch = [c for c in trial.find_chains()
                           if not c.closed and c.sectors == ch.sectors]
                    if not tch or not trial.push_chain(tch[0]):
                        continue
                    trial.remove_returns()
                    if trial.total_weight() < total:
                        restart = trial
                        break
                    v = trial.weights()
                    if v not in seen:
                        seen.add(v)
                        frontier.append(v)
                        if len(seen) > 20000:
                            raise RuntimeError("vertex-push orbit overflow")
            if restart is None:
                return min(seen)
            work = restart
        raise RuntimeError("canonical reduction failed to stabilize")


def overlay(drawings) -> Drawing:
    """Superimpose drawings; on every edge, earlier drawings' strands occupy
    the earlier slots (the fixed overlay convention).  Tags are (index, tag).
    """
    assert drawings
    surf = drawings[0].surface
    out = Drawing(surf)
    for i, d in enumerate(drawings):
        inject(out, d, i)
    return out


def inject(union: Drawing, d: Drawing, index) -> None:
    """Append a drawing's strands to an overlay union, after the strands
    already present on every edge, with tags (index, original tag)."""
    assert d.surface is union.surface
    ids = {}
    for e in range(union.surface.n_edges):
        for p in d.edge_pts[e]:
            ids[p] = union.new_point(e, len(union.edge_pts[e]),
                                     (index, d.tag[p]))
    for (p, ps), (q, qs) in d.mate.items():
        if (p, ps) < (q, qs):
            union.add_arc(ids[p], ps, ids[q], qs)

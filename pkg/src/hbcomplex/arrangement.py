"""Cell arrangement of an overlaid multicurve drawing.

An overlay drawing (see ``drawing.overlay``) superimposes several curves;
strands of different curves may cross inside triangles, strands of one
curve never do.  This module builds the full cell structure of the
arrangement:

* 0-cells: the triangulation vertex, the edge points, and the crossings;
* 1-cells: edge segments (each triangulation edge is cut by its points
  into w+1 segments) and arc segments (each arc is cut by its crossings);
* 2-cells: faces of the rotation system.

Crossings are found per triangle: with each triangle's boundary circle
listing germs in counterclockwise order, two arcs cross iff their endpoint
pairs interleave.  Crossings along one arc are ordered by the circular
position of the other arc's endpoint inside the arc's own interval; this is
a valid total order whenever the crossers of any single arc are mutually
non-crossing, which holds in every use here (two-curve overlays and
one-new-curve-against-disjoint-union overlays) and is asserted.

Faces are the orbits of the standard rotation-system traversal.  The
orientation convention is fixed by a pinned fact: on a bare drawing (no
curves) the faces are exactly the 4g-2 triangles; the constructor asserts
this convention once per surface.

Regions are unions of faces glued across edge segments; arc segments are
walls.  For a region R, with F faces, E interior edge segments, and the
vertex interior to R iff all its incident faces lie in R,

    chi(R) = [vertex interior] - E + F,

the Euler characteristic of the compactified region (boundary circuits
contribute zero).  A region is a disk iff chi = 1.

A bigon is a disk region whose single boundary circuit visits exactly two
distinct crossings and decomposes at them into two embedded paths carried
by two different curves.  Removing a bigon reroutes one path parallel to
the other on the far side; since faces are empty and the bigon's boundary
is only those two paths, the reroute removes exactly the two corner
crossings and no others — asserted after every removal, which makes
termination of bigon reduction a checked invariant rather than a hope.
"""

from __future__ import annotations

from . import _kernel
from .drawing import Drawing

_FACE_STEP = {}  # per-surface pinned rotation convention: +1 or -1


class Region:
    __slots__ = ("faces", "chi", "v_interior", "circuits", "region_id")

    def __init__(self, faces, chi, v_interior, circuits, region_id):
        self.faces = faces
        self.chi = chi
        self.v_interior = v_interior
        self.circuits = circuits
        self.region_id = region_id


class Bigon:
    __slots__ = ("crossings", "paths", "faces")

    def __init__(self, crossings, paths, faces):
        self.crossings = crossings  # (x1, x2) with x1 < x2
        self.paths = paths  # dict tag -> path record (see _circuit_paths)
        self.faces = faces  # face ids of the bigon region


class Arrangement:
    def __init__(self, d: Drawing):
        self.d = d
        self.surf = d.surface
        self._build_arcs()
        self._build_crossings()
        self._build_rotation()
        self._build_faces()
        self._build_regions()

    # ------------------------------------------------------------------
    # arcs and crossings

    def _build_arcs(self):
        d = self.d
        pairs = set()
        for g1, g2 in d.mate.items():
            pairs.add((g1, g2) if g1 < g2 else (g2, g1))
        self.arcs = sorted(pairs)
        self.arc_at = {}
        for a, (g1, g2) in enumerate(self.arcs):
            self.arc_at[g1] = (a, 0)
            self.arc_at[g2] = (a, 1)
        # germ positions around each triangle's boundary circle
        self.germ_pos = {}
        self.tri_germs = d._tri_boundaries()
        for t, germs in enumerate(self.tri_germs):
            for i, g in enumerate(germs):
                self.germ_pos[g] = (t, i)
        self.arc_tri = []
        for g1, g2 in self.arcs:
            t1, _ = self.germ_pos[g1]
            t2, _ = self.germ_pos[g2]
            assert t1 == t2
            self.arc_tri.append(t1)

    def curve_of(self, p) -> int:
        tag = self.d.tag[p]
        assert isinstance(tag, tuple), "arrangement needs overlay (index, tag) tags"
        return tag[0]

    def arc_curve(self, a) -> int:
        return self.curve_of(self.arcs[a][0][0])

    def _build_crossings(self):
        # crossing record: (t, a, b, key_a, key_b); key_x orders crossings
        # along arc x from its lesser germ
        self.crossings = []
        self.arc_cross = [[] for _ in self.arcs]  # (key, x) lists
        by_tri = {}
        for a, t in enumerate(self.arc_tri):
            by_tri.setdefault(t, []).append(a)
        for t in sorted(by_tri):
            ids = by_tri[t]
            n = len(self.tri_germs[t])
            starts, ends, curves = [], [], []
            for a in ids:
                g1, g2 = self.arcs[a]
                starts.append(self.germ_pos[g1][1])
                ends.append(self.germ_pos[g2][1])
                curves.append(self.arc_curve(a))
            for i, j, key_a, key_b in _kernel.tri_crossings(
                    starts, ends, curves, n):
                a, b = ids[i], ids[j]
                x = len(self.crossings)
                self.crossings.append((t, a, b, key_a, key_b))
                self.arc_cross[a].append((key_a, x))
                self.arc_cross[b].append((key_b, x))
        self.n_crossings = len(self.crossings)
        self.arc_nodes = []
        for a in range(len(self.arcs)):
            lst = sorted(self.arc_cross[a])
            keys = [k for k, _ in lst]
            assert len(set(keys)) == len(keys), "ambiguous crossing order"
            (p1, _), (p2, _) = self.arcs[a]
            self.arc_nodes.append(
                [("P", p1)] + [("X", x) for _, x in lst] + [("P", p2)])
        self.x_seg = {}  # (x, a) -> node index of x along a
        for a, nodes in enumerate(self.arc_nodes):
            for i, nd in enumerate(nodes):
                if nd[0] == "X":
                    self.x_seg[(nd[1], a)] = i

    # ------------------------------------------------------------------
    # rotation system

    def _arc_dart_from(self, a, node_idx, toward_end: bool):
        """Outgoing arc dart at the given node index of arc a."""
        if toward_end:
            return ("A", a, node_idx, 1)
        return ("A", a, node_idx - 1, -1)

    def _germ_out_dart(self, germ):
        """Outgoing arc dart at an edge point's germ."""
        a, end = self.arc_at[germ]
        if end == 0:
            return ("A", a, 0, 1)
        return ("A", a, len(self.arc_nodes[a]) - 2, -1)

    def _build_rotation(self):
        d, surf = self.d, self.surf
        rot = {}
        vdarts = []
        for e, end in surf.germ_order:
            w = len(d.edge_pts[e])
            vdarts.append(("E", e, 0, 1) if end == 0 else ("E", e, w, -1))
        rot[("V",)] = vdarts
        for p in d.pt_edge:
            e = d.pt_edge[p]
            s = d.edge_pts[e].index(p)
            rot[("P", p)] = [
                ("E", e, s + 1, 1),
                self._germ_out_dart((p, 0)),
                ("E", e, s, -1),
                self._germ_out_dart((p, 1)),
            ]
        for x, (t, a, b, key_a, key_b) in enumerate(self.crossings):
            ia = self.x_seg[(x, a)]
            ib = self.x_seg[(x, b)]
            # ccw around the crossing: toward a's start, toward b's endpoint
            # inside a's interval, toward a's end, toward b's other endpoint.
            # key_b < key of x along b iff b's start lies in a's interval.
            g1b = self.arcs[b][0]
            n = len(self.tri_germs[t])
            a1 = self.germ_pos[self.arcs[a][0]][1]
            a2 = self.germ_pos[self.arcs[a][1]][1]
            b1 = self.germ_pos[g1b][1]
            b_start_inside = (b1 - a1) % n < (a2 - a1) % n
            if b_start_inside:
                b_in = self._arc_dart_from(b, ib, toward_end=False)
                b_out = self._arc_dart_from(b, ib, toward_end=True)
            else:
                b_in = self._arc_dart_from(b, ib, toward_end=True)
                b_out = self._arc_dart_from(b, ib, toward_end=False)
            rot[("X", x)] = [
                self._arc_dart_from(a, ia, toward_end=False),
                b_in,
                self._arc_dart_from(a, ia, toward_end=True),
                b_out,
            ]
        self.rot = rot
        self.rot_index = {nd: {dd: i for i, dd in enumerate(ds)}
                          for nd, ds in rot.items()}

    def dart_target(self, dart):
        kind, i, seg, dr = dart
        if kind == "E":
            w = len(self.d.edge_pts[i])
            node = seg + 1 if dr == 1 else seg
            if node == 0 or node == w + 1:
                return ("V",)
            return ("P", self.d.edge_pts[i][node - 1])
        nodes = self.arc_nodes[i]
        return nodes[seg + 1] if dr == 1 else nodes[seg]

    @staticmethod
    def reverse(dart):
        kind, i, seg, dr = dart
        return (kind, i, seg, -dr)

    def _all_darts(self):
        for e in range(self.surf.n_edges):
            for seg in range(len(self.d.edge_pts[e]) + 1):
                yield ("E", e, seg, 1)
                yield ("E", e, seg, -1)
        for a, nodes in enumerate(self.arc_nodes):
            for seg in range(len(nodes) - 1):
                yield ("A", a, seg, 1)
                yield ("A", a, seg, -1)

    def face_next(self, dart):
        node = self.dart_target(dart)
        rev = self.reverse(dart)
        idx = self.rot_index[node][rev]
        ds = self.rot[node]
        return ds[(idx + self._step) % len(ds)]

    def _build_faces(self):
        # pin the rotation convention: on the bare surface the faces must be
        # the triangles, giving chi = 2 - 2g with F = 4g - 2
        g = self.surf.genus
        if g not in _FACE_STEP:
            _FACE_STEP[g] = self._probe_step()
        self._step = _FACE_STEP[g]
        self.face_of = {}
        self.faces = {}
        for d0 in self._all_darts():
            if d0 in self.face_of:
                continue
            orbit = []
            x = d0
            while True:
                orbit.append(x)
                x = self.face_next(x)
                if x == d0:
                    break
            fid = min(orbit)
            for dd in orbit:
                self.face_of[dd] = fid
            self.faces[fid] = orbit

    def _probe_step(self):
        bare = Drawing(self.surf)
        arr = object.__new__(Arrangement)
        arr.d = bare
        arr.surf = self.surf
        arr._build_arcs()
        arr._build_crossings()
        arr._build_rotation()
        for step in (1, -1):
            arr._step = step
            count = 0
            seen = set()
            ok = True
            for d0 in arr._all_darts():
                if d0 in seen:
                    continue
                orbit = []
                x = d0
                while True:
                    orbit.append(x)
                    seen.add(x)
                    x = arr.face_next(x)
                    if x == d0:
                        break
                count += 1
                if len(orbit) != 3:
                    ok = False
            if ok and count == self.surf.n_triangles:
                return step
        raise AssertionError("no rotation convention reproduces the triangles")

    # ------------------------------------------------------------------
    # regions

    def _build_regions(self):
        parent = {f: f for f in self.faces}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in range(self.surf.n_edges):
            for seg in range(len(self.d.edge_pts[e]) + 1):
                dd = ("E", e, seg, 1)
                f1, f2 = find(self.face_of[dd]), find(self.face_of[self.reverse(dd)])
                if f1 != f2:
                    parent[max(f1, f2)] = min(f1, f2)
        groups = {}
        for f in self.faces:
            groups.setdefault(find(f), []).append(f)
        vfaces = {self.face_of[dd] for dd in self.rot[("V",)]}
        self.regions = []
        self.region_of_face = {}
        for root in sorted(groups):
            faces = sorted(groups[root])
            fset = set(faces)
            n_edge_seg = 0
            for e in range(self.surf.n_edges):
                for seg in range(len(self.d.edge_pts[e]) + 1):
                    if self.face_of[("E", e, seg, 1)] in fset:
                        n_edge_seg += 1
            v_int = vfaces <= fset
            chi = (1 if v_int else 0) - n_edge_seg + len(faces)
            circuits = self._boundary_circuits(fset)
            reg = Region(faces, chi, v_int, circuits, faces[0])
            for f in faces:
                self.region_of_face[f] = len(self.regions)
            self.regions.append(reg)
        # Compactified regions glue along the curve graph, whose Euler
        # characteristic is -X (P + X nodes, P + 2X arc segments), so the
        # region characteristics must sum to chi(S) + X.
        total = sum(r.chi for r in self.regions)
        want = self.surf.euler_characteristic + self.n_crossings
        assert total == want, "Euler sum %d != %d" % (total, want)

    def _boundary_circuits(self, fset):
        """Wall-dart circuits bounding the region with the given face set."""
        wall = [dd for dd in self._all_darts()
                if dd[0] == "A" and self.face_of[dd] in fset]
        wallset = set(wall)
        circuits = []
        seen = set()
        for d0 in sorted(wall):
            if d0 in seen:
                continue
            cyc = []
            x = d0
            while True:
                cyc.append(x)
                seen.add(x)
                y = self.face_next(x)
                while y not in wallset:
                    assert y[0] == "E"
                    y = self.face_next(self.reverse(y))
                x = y
                if x == d0:
                    break
            circuits.append(cyc)
        return circuits

    # ------------------------------------------------------------------
    # bigons

    def _circuit_paths(self, circuit):
        """Split a circuit at its crossing visits into per-curve paths.

        Returns None if the circuit visits anything other than exactly two
        distinct crossings, or revisits nodes, or mixes curves in one path.
        Each path record: dict with tag, darts, arcs, inner points (edge
        points strictly between the crossings, in walk order), and the two
        crossing nodes (from_x, to_x).
        """
        starts = [i for i, dd in enumerate(circuit)
                  if self.dart_source(dd)[0] == "X"]
        if len(starts) != 2:
            return None
        xs = [self.dart_source(circuit[i])[1] for i in starts]
        if xs[0] == xs[1]:
            return None
        paths = []
        i1, i2 = starts
        n = len(circuit)
        for s, e_ in ((i1, i2), (i2, i1)):
            darts = [circuit[(s + k) % n] for k in range((e_ - s) % n)]
            arcs = {dd[1] for dd in darts}
            tags = {self.arc_curve(a) for a in arcs}
            if len(tags) != 1:
                return None
            pts = []
            for dd in darts[:-1]:
                nd = self.dart_target(dd)
                if nd[0] != "P":
                    return None
                pts.append(nd[1])
            if len(set(pts)) != len(pts):
                return None
            paths.append({
                "tag": tags.pop(),
                "darts": darts,
                "arcs": sorted(arcs),
                "points": pts,
                "from_x": self.dart_source(darts[0])[1],
                "to_x": self.dart_target(darts[-1])[1],
            })
        if paths[0]["tag"] == paths[1]["tag"]:
            return None
        return paths

    def dart_source(self, dart):
        return self.dart_target(self.reverse(dart))

    def bigons(self):
        """Empty bigon regions, deterministically ordered."""
        out = []
        for reg in self.regions:
            if reg.chi != 1 or len(reg.circuits) != 1:
                continue
            paths = self._circuit_paths(reg.circuits[0])
            if paths is None:
                continue
            x1, x2 = sorted((paths[0]["from_x"], paths[0]["to_x"]))
            out.append(Bigon((x1, x2), {p["tag"]: p for p in paths},
                             set(reg.faces)))
        out.sort(key=lambda b: b.crossings)
        return out

    # ------------------------------------------------------------------
    # bigon removal (mutates the drawing; arrangement must be rebuilt)

    def remove_bigon(self, bigon, movable_tag: int):
        """Reroute the movable path parallel to the fixed one, far side.

        Mutates the underlying drawing; the arrangement is stale afterwards
        and must be rebuilt.  Removes exactly the bigon's two crossings.
        """
        d = self.d
        tags = sorted(bigon.paths)
        assert movable_tag in tags
        fixed_tag = tags[0] if tags[1] == movable_tag else tags[1]
        mov = bigon.paths[movable_tag]
        fix = bigon.paths[fixed_tag]
        assert fix["from_x"] == mov["to_x"] and fix["to_x"] == mov["from_x"]
        # outward stubs of the movable strand: the germ ends of the first
        # and last inside arcs, on the side away from the bigon
        _, a_first, _, dr_first = mov["darts"][0]
        _, a_last, _, dr_last = mov["darts"][-1]
        g_prev = self.arcs[a_first][0 if dr_first == 1 else 1]
        g_next = self.arcs[a_last][1 if dr_last == 1 else 0]
        # If one arc carries both crossings and the path still has inner
        # points, the path wraps the whole movable curve and the stubs are
        # themselves inner points: the reroute is then a closed parallel
        # copy of the fixed path (no stubs survive).
        whole = a_first == a_last and bool(mov["points"])
        mov_pts = set(mov["points"])
        if whole:
            assert g_prev[0] in mov_pts and g_next[0] in mov_pts
        else:
            assert g_prev[0] not in mov_pts and g_next[0] not in mov_pts
        # fixed path data, reversed to follow the movable direction: for
        # each inner fixed point, whether the bigon lies on its head side
        # (then the reroute hugs on the tail side, i.e. insert before it)
        before_flags = [self._region_on_head_side(bigon.faces, p)
                        for p in fix["points"]][::-1]
        fixed_pts = fix["points"][::-1]
        tri_seq = [self.arc_tri[dd[1]] for dd in fix["darts"]][::-1]
        mtag = d.tag[g_prev[0]]
        # delete the movable inside portion (arcs once each, then points)
        for dd in mov["darts"]:
            g1, g2 = self.arcs[dd[1]]
            if d.mate.get(g1) == g2:
                d.remove_arc(*g1)
        for q in mov["points"]:
            d.delete_point(q)
        # insert hugging points next to the fixed points (slots computed
        # after the deletions shifted everything)
        new_pts = []
        for p, before in zip(fixed_pts, before_flags):
            e = d.pt_edge[p]
            s = d.edge_pts[e].index(p)
            new_pts.append(d.new_point(e, s if before else s + 1, mtag))
        if whole:
            # close the hugging chain on itself; the first and last fixed
            # darts share the crossing triangle, so the closing arc lives
            # there (an essential curve cannot reroute to zero points)
            assert new_pts, "rerouted curve would vanish"
            first = new_pts[0]
            s0 = d.side_facing(d.pt_edge[first], tri_seq[0])
            prev = (first, 1 - s0)
            for j in range(1, len(new_pts)):
                n = new_pts[j]
                side = d.side_facing(d.pt_edge[n], tri_seq[j])
                d.add_arc(prev[0], prev[1], n, side)
                prev = (n, 1 - side)
            d.add_arc(prev[0], prev[1], first, s0)
            return
        # stitch g_prev - n_1 - ... - n_l - g_next through the reversed
        # fixed path's triangles
        prev = g_prev
        for j, n in enumerate(new_pts):
            t = tri_seq[j]
            side = d.side_facing(d.pt_edge[n], t)
            d.add_arc(prev[0], prev[1], n, side)
            prev = (n, 1 - side)
        d.add_arc(prev[0], prev[1], g_next[0], g_next[1])

    def _region_on_head_side(self, face_set, p):
        """Does the given region touch edge point p on its head side?"""
        d = self.d
        e = d.pt_edge[p]
        s = d.edge_pts[e].index(p)
        up = ("E", e, s + 1, 1)
        down = ("E", e, s, -1)
        up_in = (self.face_of[up] in face_set
                 or self.face_of[self.reverse(up)] in face_set)
        down_in = (self.face_of[down] in face_set
                   or self.face_of[self.reverse(down)] in face_set)
        assert up_in != down_in, "cannot orient far side at fixed point"
        return up_in


def count_crossings(d: Drawing) -> int:
    """Number of crossings in an overlay drawing (no full cell structure)."""
    total = 0
    for germs in d._tri_boundaries():
        pos = {g: i for i, g in enumerate(germs)}
        starts, ends, curves = [], [], []
        for g in germs:
            m = d.mate[g]
            if pos[g] < pos[m]:
                starts.append(pos[g])
                ends.append(pos[m])
                curves.append(d.tag[g[0]][0])
        total += _kernel.count_crossings_tri(starts, ends, curves, len(germs))
    return total

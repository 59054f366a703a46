"""Combinatorial model of the boundary surface of a genus-g handlebody.

The closed genus-g surface is presented as a 4g-gon with boundary word

    a_1 b_1 a_1^-1 b_1^-1 ... a_g b_g a_g^-1 b_g^-1

read counterclockwise from vertex V_0, all polygon vertices identified to a
single point v.  The polygon is fan-triangulated from V_0 by the chords
V_0 V_j (j = 2 .. 4g-2), giving

    1 vertex,  6g-3 edges (2g loops + 4g-3 chords),  4g-2 triangles,

so chi = 2 - 2g as required.  The handlebody structure is fixed by declaring
the b_i to be meridian boundaries: the inclusion of the boundary into the
handlebody kills b_i and sends a_i to the free generator x_i.

Conventions used throughout the package (all downstream modules rely on
these, so they are spelled out once here):

* Polygon side k (k = 0..4g-1) runs from V_k to V_{k+1 mod 4g}.  Writing
  k = 4t + r, side k carries letter a_{t+1} if r is even and b_{t+1} if r is
  odd, with exponent +1 for r in {0,1} and -1 for r in {2,3}.  The
  side-pairing involution matches k = 4t with 4t+2 and 4t+1 with 4t+3.
* Loop edges are oriented along their letter (the exponent +1 occurrence);
  chords are oriented from V_0 to V_j.  Points on an edge are indexed by
  "slots" 0,1,2,... along this orientation, and the side identifications
  glue equal slot indices.
* Triangles are listed so that their boundary is counterclockwise, i.e. the
  triangle interior lies to the left of each directed side.  Triangle t
  (t = 0 .. 4g-3) has vertex triple (V_0, V_{t+1}, V_{t+2}) and directed
  sides:
      t = 0:        side_0, side_1, reversed chord_2
      middle t:     chord_{t+1}, side_{t+1}, reversed chord_{t+2}
      t = 4g-3:     chord_{4g-2}, side_{4g-2}, side_{4g-1}
* Corner c of triangle t (c = 0,1,2) is the corner between directed side c
  and directed side c+1 (mod 3).  A normal arc cutting off corner c joins a
  point near the end of side c to a point near the start of side c+1.
* All 12g-6 corners are sectors of the unique vertex v.  The rotation
  system lists, in counterclockwise order around v, the alternating cycle
  of sectors and edge-end germs; it must close up into a single cycle,
  which is exactly the one-vertex condition.

Everything here is plain integer bookkeeping; the construction asserts its
own invariants (edge usage, orientability of the gluing, single vertex
cycle, Euler characteristic) so that a typo in the tables cannot survive
instantiation.
"""

from __future__ import annotations

from functools import lru_cache

# Edge ends ("germs" at the vertex): (edge_id, TAIL) is the germ leaving v
# along the edge orientation, (edge_id, HEAD) the germ arriving.
TAIL = 0
HEAD = 1


class Surface:
    """Fan-triangulated one-vertex model of the closed genus-g surface.

    Attributes of interest to the rest of the package:

    genus            -- g
    n_edges          -- 6g-3
    n_triangles      -- 4g-2
    triangles        -- tuple of 3-tuples of directed sides (edge, dir)
    side_edge/side_dir -- polygon side -> (edge, +-1)
    side_pairing     -- involution on polygon side indices
    edge_occ         -- edge -> {+1: (t, c), -1: (t, c)} triangle slots
    sector_order     -- the 12g-6 corners (t, c) in ccw order around v
    germ_order       -- the 12g-6 edge ends (edge, TAIL|HEAD) in ccw order,
                        germ_order[i] sitting between sector_order[i] and
                        sector_order[i+1]
    """

    def __init__(self, genus: int, _allow_torus: bool = False):
        if genus < 2 and not (_allow_torus and genus == 1):
            raise ValueError("genus must be at least 2, got %r" % (genus,))
        g = genus
        self.genus = g
        self.n_sides = 4 * g
        self.n_loops = 2 * g
        self.n_edges = 6 * g - 3
        self.n_triangles = 4 * g - 2

        # --- edges ---------------------------------------------------------
        # ids: a_i -> 2(i-1), b_i -> 2i-1, chord_j -> 2g + (j-2), j=2..4g-2.
        self.edge_labels = []
        for i in range(1, g + 1):
            self.edge_labels.append("a%d" % i)
            self.edge_labels.append("b%d" % i)
        for j in range(2, 4 * g - 1):
            self.edge_labels.append("c%d" % j)
        assert len(self.edge_labels) == self.n_edges
        self.label_to_edge = {lab: e for e, lab in enumerate(self.edge_labels)}

        # --- polygon sides -------------------------------------------------
        self.side_edge = []
        self.side_dir = []
        for k in range(self.n_sides):
            t, r = divmod(k, 4)
            edge = 2 * t if r % 2 == 0 else 2 * t + 1
            self.side_edge.append(edge)
            self.side_dir.append(1 if r < 2 else -1)
        self.side_pairing = [(k + 2 if k % 4 < 2 else k - 2) for k in range(self.n_sides)]
        for k in range(self.n_sides):
            assert self.side_pairing[self.side_pairing[k]] == k
            assert self.side_pairing[k] != k
            assert self.side_edge[self.side_pairing[k]] == self.side_edge[k]
            assert self.side_dir[self.side_pairing[k]] == -self.side_dir[k]

        # --- triangles -----------------------------------------------------
        def chord(j):
            return 2 * g + (j - 2)

        def side(k):
            return (self.side_edge[k], self.side_dir[k])

        tris = []
        if g == 1:
            # Torus sanity model (internal testing only): two triangles.
            tris.append((side(0), side(1), (chord(2), -1)))
            tris.append(((chord(2), 1), side(2), side(3)))
        else:
            tris.append((side(0), side(1), (chord(2), -1)))
            for t in range(1, 4 * g - 3):
                tris.append(((chord(t + 1), 1), side(t + 1), (chord(t + 2), -1)))
            tris.append(((chord(4 * g - 2), 1), side(4 * g - 2), side(4 * g - 1)))
        self.triangles = tuple(tris)
        assert len(self.triangles) == self.n_triangles
        # flat (e0, e1, e2) per triangle, the form the kernels consume
        self.tri_edge_flat = tuple(e for tri in self.triangles for e, _ in tri)

        # Construction audit: every edge appears exactly once forward and
        # once backward among triangle sides, and no triangle repeats an edge.
        self.edge_occ = {e: {} for e in range(self.n_edges)}
        for t, tri in enumerate(self.triangles):
            assert len({e for e, _ in tri}) == 3
            for c, (e, d) in enumerate(tri):
                assert d not in self.edge_occ[e], "edge %d traversed twice dir %d" % (e, d)
                self.edge_occ[e][d] = (t, c)
        for e in range(self.n_edges):
            assert set(self.edge_occ[e]) == {1, -1}, "edge %d not used twice" % e

        # --- rotation system at the single vertex --------------------------
        # Directed side (e, d): start germ and end germ as edge ends.
        # Going ccw around v, the germs flanking sector (t, c) are:
        #   before: start germ of side c+1,  after: end germ of side c.
        def side_start_germ(ed):
            e, d = ed
            return (e, TAIL if d == 1 else HEAD)

        def side_end_germ(ed):
            e, d = ed
            return (e, HEAD if d == 1 else TAIL)

        germ_after_sector = {}
        sector_after_germ = {}
        for t, tri in enumerate(self.triangles):
            for c in range(3):
                germ_after_sector[(t, c)] = side_end_germ(tri[c])
                sector_after_germ[side_start_germ(tri[(c + 1) % 3])] = (t, c)
        n_sect = 3 * self.n_triangles
        assert len(germ_after_sector) == n_sect
        assert len(sector_after_germ) == n_sect

        sector_order = []
        germ_order = []
        s = (0, 0)
        for _ in range(n_sect):
            sector_order.append(s)
            germ = germ_after_sector[s]
            germ_order.append(germ)
            s = sector_after_germ[germ]
        # One-vertex condition: the walk closes after visiting every sector.
        assert s == (0, 0)
        assert len(set(sector_order)) == n_sect
        assert len(set(germ_order)) == n_sect
        self.sector_order = tuple(sector_order)
        self.germ_order = tuple(germ_order)
        self.sector_index = {sec: i for i, sec in enumerate(sector_order)}
        self.germ_index = {germ: i for i, germ in enumerate(germ_order)}
        self.germ_after_sector = germ_after_sector
        self.sector_after_germ = sector_after_germ

        self.euler_characteristic = 1 - self.n_edges + self.n_triangles
        assert self.euler_characteristic == 2 - 2 * g

    # --- small helpers used all over the curve machinery -------------------

    def is_loop(self, e: int) -> bool:
        return e < self.n_loops

    def loop_edge(self, kind: str, i: int) -> int:
        """Edge id of loop a_i or b_i (1-based handle index)."""
        return 2 * (i - 1) + (0 if kind == "a" else 1)

    def chord_edge(self, j: int) -> int:
        return 2 * self.genus + (j - 2)

    def tri_corner_between(self, t: int, c1: int, c2: int) -> int:
        """Corner of triangle t cut off by an arc joining sides c1, c2."""
        assert c1 != c2
        pair = {c1, c2}
        if pair == {0, 1}:
            return 0
        if pair == {1, 2}:
            return 1
        assert pair == {0, 2}
        return 2

    def corner_sides(self, c: int):
        """The (incoming, outgoing) triangle side positions at corner c."""
        return c, (c + 1) % 3

    def side_slot(self, t: int, c: int, pos: int, weights) -> int:
        """Edge slot of the point at position pos along directed side c of t.

        pos counts from the start of the directed side; slots count along
        the edge orientation.
        """
        e, d = self.triangles[t][c]
        return pos if d == 1 else weights[e] - 1 - pos

    def corner_count(self, t: int, c: int, weights):
        """Number of normal arcs at corner c of triangle t for these weights."""
        e0 = self.triangles[t][c][0]
        e1 = self.triangles[t][(c + 1) % 3][0]
        e2 = self.triangles[t][(c + 2) % 3][0]
        return (weights[e0] + weights[e1] - weights[e2]) // 2

    def surface_counts(self):
        return {
            "genus": self.genus,
            "vertices": 1,
            "edges": self.n_edges,
            "triangles": self.n_triangles,
            "euler_characteristic": self.euler_characteristic,
        }


@lru_cache(maxsize=None)
def build_surface(genus: int) -> Surface:
    """Public constructor: fan-triangulated surface, genus >= 2 only."""
    return Surface(genus)


@lru_cache(maxsize=None)
def _torus_model() -> Surface:
    """Internal genus-1 model, used only by tests as an oracle substrate."""
    return Surface(1, _allow_torus=True)


# --- boundary/chord words ---------------------------------------------------

def polygon_boundary_letters(surface: Surface):
    """The 4g sides as signed loop letters (edge, +-1), in boundary order."""
    return [(surface.side_edge[k], surface.side_dir[k]) for k in range(surface.n_sides)]


def chord_word(surface: Surface, e: int):
    """A chord V_0 -> V_j, read as a based loop, equals the boundary path
    V_0 -> V_1 -> ... -> V_j; this returns that word in signed loop letters.

    Valid because the fan wedge between the chord and the boundary path is a
    disk.
    """
    assert not surface.is_loop(e)
    j = (e - 2 * surface.genus) + 2
    letters = polygon_boundary_letters(surface)
    return tuple(letters[:j])


class PairingTable:
    """Per-corner word contributions for reading off fundamental-group words.

    Every transverse arc inside a triangle, after sliding it to the triangle
    boundary and sliding each edge crossing to the tail of its edge, picks up
    at most one signed letter per endpoint:

        The endpoint's edge contributes its letter (exponent +1 for the
        incoming endpoint, -1 for the outgoing one) exactly when the corner
        the arc runs through sits at the HEAD of that edge.

    Concatenating the contributions along a closed traversal produces the
    fundamental-group class of the curve, up to conjugation and inversion,
    as a word over all edges; chords are then expanded through chord_word.
    The recipe is independent of which corner is chosen for the slide
    because triangle boundaries are nullhomotopic.
    """

    def __init__(self, surface: Surface):
        self.surface = surface

    def _corner_end(self, t: int, c_side: int, corner: int) -> tuple:
        """Edge end of triangle side c_side sitting at the given corner.

        Directed side c ends at corner c and starts at corner c-1 (mod 3).
        """
        e, d = self.surface.triangles[t][c_side]
        at_end = corner == c_side
        if at_end:
            return (e, HEAD if d == 1 else TAIL)
        assert corner == (c_side - 1) % 3
        return (e, TAIL if d == 1 else HEAD)

    def arc_letters(self, t: int, c_in: int, c_out: int):
        """Signed edge letters contributed by an arc entering triangle t
        through side position c_in and leaving through c_out."""
        if c_in == c_out:
            return ()  # same-side backtrack contributes nothing
        corner = self.surface.tri_corner_between(t, c_in, c_out)
        letters = []
        e_in, end_in = self._corner_end(t, c_in, corner)
        if end_in == HEAD:
            letters.append((e_in, 1))
        e_out, end_out = self._corner_end(t, c_out, corner)
        if end_out == HEAD:
            letters.append((e_out, -1))
        return tuple(letters)

    def expand_loops(self, word):
        """Expand chord letters into loop letters; loop letters pass through."""
        out = []
        for e, s in word:
            if self.surface.is_loop(e):
                out.append((e, s))
            else:
                cw = chord_word(self.surface, e)
                out.extend(cw if s == 1 else [(f, -d) for f, d in reversed(cw)])
        return tuple(out)


def side_pairing_table(surface: Surface) -> PairingTable:
    """Word-contribution table for curves transverse to the triangulation."""
    return PairingTable(surface)

"""Isotopy classes of essential simple closed curves on the boundary surface.

A curve class is identified with its canonical normal coordinates: the
weight vector of its reduced transverse drawing with respect to the fixed
one-vertex triangulation (see ``drawing``).  Equality of classes is equality
of coordinate vectors.

Tracing.  An admissible weight vector is realized by its normal drawing and
split into connected components; each component reports its own weight
vector and the cyclic itinerary of corner arcs it runs through.  A traced
component equal to the all-2 vertex-link vector is inessential (it bounds a
disk around the vertex); every other normal component is essential once
canonically reduced, and reduction deletes nullhomotopic components
outright.

Orientation and words.  Components are traversed in a deterministic
direction; crossing a loop edge contributes that edge's letter (or its
inverse) according to which end of the arc's corner sits at the edge's head,
and chord letters are expanded through the polygon wedge they cut off.  The
resulting cyclic word is the curve's fundamental-group class up to
conjugation and inversion.  The orientation of the reported word and
homology class is normalized together: the homology class is made
lexicographically positive (first nonzero coordinate > 0), and a separating
curve's word is minimized over inversion; this keeps the word's exponent
sums literally equal to the homology class.

Homology.  In the basis [a_1],[b_1],...,[a_g],[b_g] the class of a curve
with signed loop-edge crossing counts (c . e) is

    z = sum_i (c . b_i) [a_i] - (c . a_i) [b_i],

the symplectic convention <a_i, b_i> = +1.  The global crossing-sign
constant is calibrated by the requirement that exponent sums of the word
agree with z on every curve (pinned by tests on pushed-off loops).

The handlebody is the one in which b_1..b_g bound disks and a_i maps to the
free generator x_i; a curve is a meridian iff it is essential and its
handlebody word reduces to the empty word, and separating iff z = 0.
"""

from __future__ import annotations

from . import _kernel
from .drawing import Drawing, InessentialCurve
from .surface import build_surface, side_pairing_table
from .words import (
    cyclic_reduce,
    exponent_sums,
    free_reduce,
    inverse,
    loop_letter,
    to_handlebody,
)

# sign of a crossing whose strand exits through the triangle on the left of
# the loop edge's orientation; calibrated so that the pushed-off a_1 has
# homology +[a_1] (equivalently: word exponent sums equal homology)
_CROSS_SIGN = -1


def genus_of_length(n: int) -> int:
    """Genus g with 6g-3 edges, or raise for an impossible vector length."""
    if n < 9 or n % 6 != 3:
        raise ValueError("coordinate vector length %d is not 6g-3" % n)
    return (n + 3) // 6


def validate(weights) -> bool:
    """Admissibility of a weight vector: per-triangle even sums and triangle
    inequalities (non-negative corner counts), and not the zero vector."""
    try:
        g = genus_of_length(len(weights))
    except ValueError:
        return False
    surf = build_surface(g)
    return _kernel.validate_weights(tuple(weights), surf.tri_edge_flat)


class TraceComponent:
    """One connected component of a traced normal multicurve."""

    __slots__ = ("weights", "itinerary", "inessential")

    def __init__(self, weights, itinerary, inessential):
        self.weights = weights
        self.itinerary = itinerary
        self.inessential = inessential


def trace(weights):
    """Connected components of the normal drawing of an admissible vector.

    Each component carries its own weight vector and the cyclic itinerary of
    the corner arcs it traverses, as (triangle, corner) pairs.  A component
    is flagged inessential iff its weight vector is the all-2 vertex-link
    vector (the only nullhomotopic normal component).
    """
    g = genus_of_length(len(weights))
    if not validate(weights):
        raise ValueError("inadmissible weight vector")
    surf = build_surface(g)
    d = Drawing.from_coords(surf, tuple(weights))
    link = (2,) * surf.n_edges
    out = []
    for comp in d.components():
        cw = d.component_weights(comp)
        itinerary = []
        n = len(comp)
        for i in range(n):
            p, _, exit_side = comp[i]
            q, enter_side, _ = comp[(i + 1) % n]
            t, c_out = d.germ_triangle(p, exit_side)
            t2, c_in = d.germ_triangle(q, enter_side)
            assert t == t2
            corner = surf.tri_corner_between(t, c_out, c_in)
            itinerary.append((t, corner))
        out.append(TraceComponent(cw, tuple(itinerary), cw == link))
    assert tuple(map(sum, zip(*(c.weights for c in out)))) == tuple(weights)
    return out


def _word_key(word):
    """Order on words preferring positive letters: 1 < -1 < 2 < -2 < ..."""
    return tuple((abs(x), 0 if x > 0 else 1) for x in word)


def _min_rotation(word):
    if not word:
        return ()
    best = None
    bk = None
    for i in range(len(word)):
        rot = word[i:] + word[:i]
        k = _word_key(rot)
        if bk is None or k < bk:
            best, bk = rot, k
    return best


class CurveClass:
    """An essential simple closed curve up to isotopy, in canonical
    coordinates.  Instances are immutable and hashable; equality is
    coordinate equality."""

    __slots__ = ("genus", "coords", "_surface", "_hom", "_word", "_hword")

    def __init__(self, genus, coords, _canonical=False):
        surf = build_surface(genus)
        coords = tuple(int(w) for w in coords)
        if not _canonical:
            raise ValueError("use curve_from_coords to build curve classes")
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_surface", surf)
        object.__setattr__(self, "_hom", None)
        object.__setattr__(self, "_word", None)
        object.__setattr__(self, "_hword", None)

    def __setattr__(self, name, value):
        if name in ("genus", "coords"):
            raise AttributeError("CurveClass is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return (isinstance(other, CurveClass)
                and self.genus == other.genus and self.coords == other.coords)

    def __hash__(self):
        return hash((self.genus, self.coords))

    def __repr__(self):
        return "CurveClass(g=%d, %s)" % (self.genus, list(self.coords))

    def drawing(self, tag=0) -> Drawing:
        return Drawing.from_coords(self._surface, self.coords, tag=tag)

    # -- oriented invariants ------------------------------------------

    def _compute_oriented(self):
        surf = self._surface
        table = side_pairing_table(surf)
        d = self.drawing()
        comps = d.components()
        assert len(comps) == 1, "curve class traced to several components"
        comp = comps[0]
        word = []
        crossings = [0] * surf.n_loops
        n = len(comp)
        for i in range(n):
            p, _, exit_side = comp[i]
            q, enter_side, _ = comp[(i + 1) % n]
            e = d.pt_edge[p]
            if surf.is_loop(e):
                crossings[e] += _CROSS_SIGN if exit_side == 0 else -_CROSS_SIGN
            t, c_out = d.germ_triangle(p, exit_side)
            t2, c_in = d.germ_triangle(q, enter_side)
            assert t == t2
            word.extend(table.arc_letters(t, c_out, c_in))
        expanded = table.expand_loops(word)
        raw = free_reduce(tuple(
            loop_letter(e) if s > 0 else -loop_letter(e) for e, s in expanded))
        g = self.genus
        hom = [0] * (2 * g)
        for i in range(g):
            a, b = 2 * i, 2 * i + 1
            hom[a] = crossings[b]
            hom[b] = -crossings[a]
        hom = tuple(hom)
        w = cyclic_reduce(raw)
        if any(hom):
            first = next(x for x in hom if x != 0)
            if first < 0:
                hom = tuple(-x for x in hom)
                w = inverse(w)
            w = _min_rotation(w)
        else:
            w1, w2 = _min_rotation(w), _min_rotation(inverse(w))
            w = w1 if (w1 == () or _word_key(w1) <= _word_key(w2)) else w2
        object.__setattr__(self, "_hom", hom)
        object.__setattr__(self, "_word", w)

    @property
    def homology(self):
        if self._hom is None:
            self._compute_oriented()
        return self._hom

    @property
    def pi1_word(self):
        if self._word is None:
            self._compute_oriented()
        return self._word

    @property
    def handlebody_word(self):
        if self._hword is None:
            hw = to_handlebody(self.pi1_word, self.genus)
            if any(hw):
                hw = min(_min_rotation(hw), _min_rotation(inverse(hw)),
                         key=_word_key)
            object.__setattr__(self, "_hword", hw)
        return self._hword

    @property
    def is_meridian(self) -> bool:
        return self.handlebody_word == ()

    @property
    def is_separating(self) -> bool:
        return not any(self.homology)

    def total_weight(self) -> int:
        return sum(self.coords)


def curve_from_coords(genus: int, weights) -> CurveClass:
    """Build the curve class of an admissible single-component vector.

    The vector is traced (exactly one component required), canonically
    reduced, and rejected if the component is inessential (nullhomotopic or
    the vertex link).
    """
    surf = build_surface(genus)
    weights = tuple(int(w) for w in weights)
    if len(weights) != surf.n_edges:
        raise ValueError("expected %d weights, got %d"
                         % (surf.n_edges, len(weights)))
    if not validate(weights):
        raise ValueError("inadmissible weight vector")
    d = Drawing.from_coords(surf, weights)
    n_comp = len(d.components())
    if n_comp != 1:
        raise ValueError("vector traces to %d components, expected 1" % n_comp)
    return _reduce_to_class(surf, d)


def _reduce_to_class(surf, d: Drawing) -> CurveClass:
    vec = d.canonical_vector()
    if not any(vec):
        raise InessentialCurve("curve is nullhomotopic")
    if vec == (2,) * surf.n_edges:
        raise InessentialCurve("curve is the vertex link")
    return CurveClass(surf.genus, vec, _canonical=True)


def _wrap_canonical(genus: int, vec) -> CurveClass:
    """Trusted fast path for vectors already in canonical form."""
    return CurveClass(genus, tuple(vec), _canonical=True)


def curve_from_drawing(d: Drawing) -> CurveClass:
    """Curve class of a single-component explicit drawing."""
    comps = d.components()
    if len(comps) != 1:
        raise ValueError("drawing has %d components, expected 1" % len(comps))
    return _reduce_to_class(d.surface, d.copy())


def normalize_homology(hom):
    """Lexicographically positive representative of {h, -h}."""
    hom = tuple(hom)
    for x in hom:
        if x:
            return hom if x > 0 else tuple(-y for y in hom)
    return hom


def symplectic_pairing(h1, h2):
    """Algebraic intersection pairing in the basis a_1 b_1 a_2 b_2 ...,
    with <a_i, b_i> = +1."""
    assert len(h1) == len(h2) and len(h1) % 2 == 0
    s = 0
    for i in range(len(h1) // 2):
        s += h1[2 * i] * h2[2 * i + 1] - h1[2 * i + 1] * h2[2 * i]
    return s


# -- module-level operation aliases ----------------------------------

def homology(curve: CurveClass):
    return curve.homology


def pi1_word(curve: CurveClass):
    return curve.pi1_word


def handlebody_word(curve: CurveClass):
    return curve.handlebody_word


def is_meridian(curve: CurveClass) -> bool:
    return curve.is_meridian


def is_separating(curve: CurveClass) -> bool:
    return curve.is_separating


def abelianization_consistent(curve: CurveClass) -> bool:
    """Exponent sums of the oriented word equal the homology class."""
    g = curve.genus
    sums = exponent_sums(curve.pi1_word, 2 * g)
    return sums == curve.homology

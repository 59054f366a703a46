"""Pure-Python reference lane of the hot kernels.

Two inner loops dominate every heavy computation in the package: the
admissibility check of weight vectors (run on every candidate vector in
canonical reduction orbits) and per-triangle chord crossing detection
(run on every triangle of every overlay, bundle, and validation pass,
quadratic in the strand count).  Both exist twice: this reference
implementation and a compiled Cython twin (``_core.pyx``).  Keep the two
in lockstep — same names, same argument conventions, same results; the
package selects a lane at import time (see ``__init__``).
"""

BACKEND = "pure"


def validate_weights(weights, tri_edges):
    """Admissibility of a weight vector.

    ``tri_edges`` flat-lists the three edge indices of each triangle.
    Admissible means: no negative entry, not identically zero, and in
    every triangle an even boundary sum satisfying the triangle
    inequalities (equivalently: non-negative corner counts).
    """
    any_pos = False
    for w in weights:
        if w < 0:
            return False
        if w:
            any_pos = True
    if not any_pos:
        return False
    for k in range(0, len(tri_edges), 3):
        x = weights[tri_edges[k]]
        y = weights[tri_edges[k + 1]]
        z = weights[tri_edges[k + 2]]
        if (x + y + z) % 2:
            return False
        if x > y + z or y > x + z or z > x + y:
            return False
    return True


def tri_crossings(starts, ends, curves, n):
    """Crossing records among the chords of one triangle boundary circle.

    Chord i runs counterclockwise from position ``starts[i]`` to
    ``ends[i]`` on a circle of ``n`` germ positions; ``curves[i]`` is its
    curve identity.  Two chords cross iff their endpoint pairs
    interleave.  Returns records (i, j, key_i, key_j) with i < j, where
    key_i is the circular offset from chord i's start to the other
    chord's endpoint inside i's span — the position of the crossing in
    the order of crossings along chord i, valid whenever the crossers of
    any single chord are mutually non-crossing.  Chords of one curve
    must never cross (ValueError).
    """
    out = []
    m = len(starts)
    for i in range(m):
        a1 = starts[i]
        a2 = ends[i]
        sa = (a2 - a1) % n
        for j in range(i + 1, m):
            b1 = starts[j]
            b2 = ends[j]
            in1 = (b1 - a1) % n < sa
            in2 = (b2 - a1) % n < sa
            if in1 == in2:
                continue
            if curves[i] == curves[j]:
                raise ValueError("strands of one curve cross")
            key_i = ((b1 if in1 else b2) - a1) % n
            ber = (a1 - b1) % n < (b2 - b1) % n
            key_j = ((a1 if ber else a2) - b1) % n
            out.append((i, j, key_i, key_j))
    return out


def count_crossings_tri(starts, ends, curves, n):
    """Number of interleaved chord pairs; conventions of tri_crossings."""
    total = 0
    m = len(starts)
    for i in range(m):
        a1 = starts[i]
        a2 = ends[i]
        sa = (a2 - a1) % n
        for j in range(i + 1, m):
            if ((starts[j] - a1) % n < sa) != ((ends[j] - a1) % n < sa):
                if curves[i] == curves[j]:
                    raise ValueError("strands of one curve cross")
                total += 1
    return total

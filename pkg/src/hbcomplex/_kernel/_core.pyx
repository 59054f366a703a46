"""Compiled twin of the pure kernel lane; keep in lockstep with pure.py.

Differences are mechanical only: typed memoryviews over ``array('q')``
buffers, and circular offsets computed as ``(d + n) % n`` because C
division truncates toward zero (cdivision is on) while the reference
lane relies on Python's floored ``%``.
"""

BACKEND = "compiled"


def validate_weights(long long[::1] w, long long[::1] tris):
    cdef Py_ssize_t i, k
    cdef long long x, y, z
    cdef bint any_pos = False
    for i in range(w.shape[0]):
        if w[i] < 0:
            return False
        if w[i] != 0:
            any_pos = True
    if not any_pos:
        return False
    for k in range(0, tris.shape[0], 3):
        x = w[tris[k]]
        y = w[tris[k + 1]]
        z = w[tris[k + 2]]
        if (x + y + z) % 2 != 0:
            return False
        if x > y + z or y > x + z or z > x + y:
            return False
    return True


def tri_crossings(long long[::1] starts, long long[::1] ends,
                  long long[::1] curves, long long n):
    cdef list out = []
    cdef Py_ssize_t i, j, m = starts.shape[0]
    cdef long long a1, a2, sa, b1, b2, key_i, key_j
    cdef bint in1, in2, ber
    for i in range(m):
        a1 = starts[i]
        a2 = ends[i]
        sa = (a2 - a1 + n) % n
        for j in range(i + 1, m):
            b1 = starts[j]
            b2 = ends[j]
            in1 = (b1 - a1 + n) % n < sa
            in2 = (b2 - a1 + n) % n < sa
            if in1 == in2:
                continue
            if curves[i] == curves[j]:
                raise ValueError("strands of one curve cross")
            key_i = ((b1 if in1 else b2) - a1 + n) % n
            ber = (a1 - b1 + n) % n < (b2 - b1 + n) % n
            key_j = ((a1 if ber else a2) - b1 + n) % n
            out.append((i, j, key_i, key_j))
    return out


def count_crossings_tri(long long[::1] starts, long long[::1] ends,
                        long long[::1] curves, long long n):
    cdef long long total = 0
    cdef Py_ssize_t i, j, m = starts.shape[0]
    cdef long long a1, a2, sa
    for i in range(m):
        a1 = starts[i]
        a2 = ends[i]
        sa = (a2 - a1 + n) % n
        for j in range(i + 1, m):
            if (((starts[j] - a1 + n) % n < sa)
                    != ((ends[j] - a1 + n) % n < sa)):
                if curves[i] == curves[j]:
                    raise ValueError("strands of one curve cross")
                total += 1
    return total

"""Word calculus for the surface group and the handlebody's free group.

Words are tuples of nonzero integers: letter ``+k`` is the k-th generator,
``-k`` its inverse.  For the boundary surface of the genus-g handlebody the
generators are numbered a_1 -> 1, b_1 -> 2, a_2 -> 3, b_2 -> 4, ..., i.e.
loop edge e carries letter e+1.  The handlebody's fundamental group is free
on x_1..x_g with a_i -> x_i = i and b_i -> 1.

The surface group is the one-relator group with relator

    R_g = a_1 b_1 a_1^{-1} b_1^{-1} ... a_g b_g a_g^{-1} b_g^{-1}

of length 4g.  For g >= 2 the relator satisfies the small-cancellation
condition C'(1/6) (pieces are single letters), so Dehn's algorithm decides
the word problem: a freely and cyclically reduced word represents the
identity iff repeatedly replacing any cyclic subword that matches more than
half of a cyclic permutation of R_g^{+-1} by the (shorter) inverse of the
complementary part terminates at the empty word.  The torus (g = 1) is
handled separately through exponent sums, since pi_1 is abelian there.
"""

from __future__ import annotations

from functools import lru_cache


def inverse(word):
    return tuple(-x for x in reversed(word))


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word):
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def canonical_cyclic(word):
    """Lexicographically least rotation over the cyclic reduction of the
    word and of its inverse (canonical up to rotation and inversion)."""
    w = cyclic_reduce(word)
    if not w:
        return ()
    best = None
    for cand in (w, inverse(w)):
        n = len(cand)
        for i in range(n):
            rot = cand[i:] + cand[:i]
            if best is None or rot < best:
                best = rot
    return best


def exponent_sums(word, n_gens: int):
    v = [0] * n_gens
    for x in word:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


def loop_letter(edge: int) -> int:
    """Generator number of a loop edge (a_i -> 2i-1, b_i -> 2i)."""
    return edge + 1


def to_handlebody(word, genus: int):
    """Project a surface word to the free group on x_1..x_g: delete the b
    letters and send a_i to x_i; returns the cyclically reduced image."""
    out = []
    for x in word:
        k = abs(x)
        if k % 2 == 1:  # a_i letter, k = 2i-1
            i = (k + 1) // 2
            assert 1 <= i <= genus
            out.append(i if x > 0 else -i)
    return cyclic_reduce(tuple(out))


@lru_cache(maxsize=None)
def surface_relator(genus: int):
    rel = []
    for i in range(1, genus + 1):
        a, b = 2 * i - 1, 2 * i
        rel.extend((a, b, -a, -b))
    return tuple(rel)


@lru_cache(maxsize=None)
def _relator_rotations(genus: int):
    rel = surface_relator(genus)
    rots = set()
    for base in (rel, inverse(rel)):
        n = len(base)
        for i in range(n):
            rots.add(base[i:] + base[:i])
    return tuple(sorted(rots))


def dehn_reduce(word, genus: int):
    """Dehn-algorithm normal pass for the genus-g surface group (g >= 2).

    Returns a freely and cyclically reduced cyclic word; the result is empty
    iff the input represents the identity.  Nonempty outputs are Dehn
    reduced (no cyclic subword longer than half the relator), which
    certifies nontriviality but is not a full conjugacy normal form.
    """
    assert genus >= 2
    L = 4 * genus
    half = L // 2
    rots = _relator_rotations(genus)
    w = cyclic_reduce(word)
    while w:
        n = len(w)
        found = None
        maxk = min(n, L)
        for k in range(maxk, half, -1):
            for start in range(n):
                sub = tuple(w[(start + j) % n] for j in range(k))
                for r in rots:
                    if sub == r[:k]:
                        found = (start, k, r)
                        break
                if found:
                    break
            if found:
                break
        if not found:
            return w
        start, k, r = found
        rest = tuple(w[(start + k + j) % n] for j in range(n - k))
        w = cyclic_reduce(inverse(r[k:]) + rest)
    return w


def is_trivial_surface_word(word, genus: int) -> bool:
    """Does the word represent 1 in the fundamental group of the closed
    genus-g surface?  Torus case decided by exponent sums (abelian)."""
    w = cyclic_reduce(word)
    if not w:
        return True
    if genus == 1:
        return exponent_sums(w, 2) == (0, 0)
    return dehn_reduce(w, genus) == ()

"""Geometric intersection numbers: oracle pairs and algebraic bounds."""

import itertools

import pytest

from hbcomplex.curves import curve_from_coords, symplectic_pairing
from hbcomplex.intersect import disjoint, intersection_number
from hbcomplex.refcurves import reference_curve

SEP_MERIDIAN_COORDS = (2, 2, 0, 0, 2, 2, 0, 0, 0)


@pytest.mark.parametrize("genus", [2, 3])
def test_dual_pushoffs_meet_once(genus):
    for i in range(1, genus + 1):
        a = reference_curve(genus, "a%d" % i)
        b = reference_curve(genus, "b%d" % i)
        assert intersection_number(a, b) == 1
        for j in range(1, genus + 1):
            if j != i:
                assert intersection_number(
                    a, reference_curve(genus, "b%d" % j)) == 0
                assert intersection_number(
                    a, reference_curve(genus, "a%d" % j)) == 0


@pytest.mark.parametrize("genus", [2, 3])
def test_chain_intersection_pattern(genus):
    # consecutive chain curves meet once, all other pairs are disjoint
    n = 2 * genus + 1
    chain = [reference_curve(genus, "c%d" % j) for j in range(1, n + 1)]
    for i, j in itertools.combinations(range(n), 2):
        want = 1 if j == i + 1 else 0
        assert intersection_number(chain[i], chain[j]) == want, (i, j)


def test_self_intersection_zero():
    for label in ("a1", "b1", "c3", "n1", "w1"):
        c = reference_curve(2, label)
        assert intersection_number(c, c) == 0
        assert disjoint(c, c)


def test_symmetry():
    pairs = [("a1", "b1"), ("c1", "c2"), ("c2", "c3"), ("w1", "b1"),
             ("n1", "c1")]
    for l1, l2 in pairs:
        c1 = reference_curve(2, l1)
        c2 = reference_curve(2, l2)
        assert intersection_number(c1, c2) == intersection_number(c2, c1)


def test_algebraic_bound():
    # |<h1, h2>| <= i(c1, c2) for every pair
    labels = ("a1", "b1", "a2", "b2", "c3", "n1", "w1")
    for l1, l2 in itertools.combinations(labels, 2):
        c1 = reference_curve(2, l1)
        c2 = reference_curve(2, l2)
        alg = abs(symplectic_pairing(c1.homology, c2.homology))
        geo = intersection_number(c1, c2)
        assert alg <= geo, (l1, l2, alg, geo)


def test_separating_meridian_pattern():
    # the handle-splitting curve avoids both handles' loops and crosses
    # every between-handle curve exactly twice
    s = curve_from_coords(2, SEP_MERIDIAN_COORDS)
    for label in ("a1", "b1", "a2", "b2", "c1", "c2", "c4", "c5"):
        assert intersection_number(s, reference_curve(2, label)) == 0
    for label in ("c3", "n1", "w1"):
        assert intersection_number(s, reference_curve(2, label)) == 2


def test_disjointness_of_decomposition():
    from hbcomplex.refcurves import pants_decomposition
    for genus in (2, 3):
        curves = pants_decomposition(genus)
        for c1, c2 in itertools.combinations(curves, 2):
            assert disjoint(c1, c2)


def test_bigon_removal_gives_minimal_position():
    # a curve and its image under a twist about a disjoint curve stay
    # equal, so their intersection number is zero even though naive
    # overlays of distinct representatives may cross
    from hbcomplex.twists import dehn_twist
    a1 = reference_curve(2, "a1")
    b2 = reference_curve(2, "b2")
    assert intersection_number(a1, dehn_twist(a1, b2, 1)) == 0

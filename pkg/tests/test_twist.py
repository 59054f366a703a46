"""Dehn twists: round trips, homology action, twist-intersection formula."""

import itertools

import pytest

from hbcomplex.curves import (abelianization_consistent, normalize_homology,
                              symplectic_pairing)
from hbcomplex.intersect import intersection_number
from hbcomplex.refcurves import reference_curve
from hbcomplex.twists import dehn_twist


def test_known_image():
    # the square twist of the dual pushoff: word x1^2, homology 2a1+b1
    a1 = reference_curve(2, "a1")
    b1 = reference_curve(2, "b1")
    img = dehn_twist(b1, a1, 2)
    assert img.coords == (1, 2, 0, 0, 1, 2, 0, 0, 0)
    assert img.handlebody_word == (1, 1)
    assert img.homology == (2, 1, 0, 0)


def test_twist_fixes_its_own_curve():
    for label in ("a1", "b1", "c3"):
        c = reference_curve(2, label)
        assert dehn_twist(c, c, 1) == c
        assert dehn_twist(c, c, -3) == c


def test_twist_about_disjoint_curve_fixes():
    a1 = reference_curve(2, "a1")
    b2 = reference_curve(2, "b2")
    c5 = reference_curve(2, "c5")
    assert dehn_twist(a1, b2, 1) == a1
    assert dehn_twist(a1, c5, -2) == a1


def test_zero_power_is_identity():
    a1 = reference_curve(2, "a1")
    b1 = reference_curve(2, "b1")
    assert dehn_twist(b1, a1, 0) == b1


@pytest.mark.parametrize("power", [1, 2, 3, -1, -2])
def test_round_trip(power):
    pairs = [("b1", "a1"), ("c2", "c1"), ("c3", "c2"), ("w1", "c3")]
    for curve_label, about_label in pairs:
        c = reference_curve(2, curve_label)
        about = reference_curve(2, about_label)
        img = dehn_twist(c, about, power)
        back = dehn_twist(img, about, -power)
        assert back == c, (curve_label, about_label, power)


def test_power_composition():
    b1 = reference_curve(2, "b1")
    a1 = reference_curve(2, "a1")
    once_twice = dehn_twist(dehn_twist(b1, a1, 1), a1, 1)
    assert once_twice == dehn_twist(b1, a1, 2)


@pytest.mark.parametrize("genus", [2, 3])
def test_homology_action(genus):
    cases = [("b1", "a1", 1), ("b1", "a1", -2), ("c1", "c2", 3),
             ("c3", "c2", -1), ("c3", "c4", 2)]
    for curve_label, about_label, n in cases:
        c = reference_curve(genus, curve_label)
        about = reference_curve(genus, about_label)
        img = dehn_twist(c, about, n)
        q = symplectic_pairing(about.homology, c.homology)
        want = normalize_homology(
            tuple(h + n * q * bh
                  for h, bh in zip(c.homology, about.homology)))
        assert img.homology == want, (curve_label, about_label, n)
        assert abelianization_consistent(img)


def test_twist_intersection_formula_small():
    # i(T_b^n(a), a) = |n| * i(a, b)^2
    a1 = reference_curve(2, "a1")
    b1 = reference_curve(2, "b1")
    c2 = reference_curve(2, "c2")
    c3 = reference_curve(2, "c3")
    c5 = reference_curve(2, "c5")
    for n in (-2, -1, 0, 1, 2, 3):
        assert intersection_number(dehn_twist(b1, a1, n), b1) == abs(n)
        assert intersection_number(dehn_twist(c3, c2, n), c3) == abs(n)
    # a disjoint pair contributes nothing
    for n in (-1, 2):
        assert intersection_number(dehn_twist(a1, c5, n), a1) == 0


def test_braid_relation():
    # for curves meeting once: T_a T_b T_a = T_b T_a T_b as mapping
    # classes; verify on a sample of test curves
    a = reference_curve(2, "c2")
    b = reference_curve(2, "c3")
    assert intersection_number(a, b) == 1

    def lhs(c):
        return dehn_twist(dehn_twist(dehn_twist(c, a, 1), b, 1), a, 1)

    def rhs(c):
        return dehn_twist(dehn_twist(dehn_twist(c, b, 1), a, 1), b, 1)

    for label in ("c1", "c4", "a1", "w1"):
        c = reference_curve(2, label)
        assert lhs(c) == rhs(c), label


def test_conjugation_relation():
    # T_{f(b)} = f T_b f^{-1} with f a twist: verify
    # T_a(T_b-image) pattern: image of b under T_a twists to the same
    # class as conjugated composition applied to a test curve
    a = reference_curve(2, "c2")
    b = reference_curve(2, "c3")
    fb = dehn_twist(b, a, 1)
    for label in ("c1", "c4", "c5"):
        c = reference_curve(2, label)
        left = dehn_twist(c, fb, 1)
        right = dehn_twist(dehn_twist(dehn_twist(c, a, -1), b, 1), a, 1)
        assert left == right, label

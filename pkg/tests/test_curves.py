"""Curve classes: canonical coordinates, invariants, classification."""

import pytest

from hbcomplex.curves import (CurveClass, abelianization_consistent,
                              curve_from_coords, normalize_homology,
                              symplectic_pairing, validate)
from hbcomplex.refcurves import (reference_curve, segment_curve_weights)

# the genus-2 curve bounding the disk that splits the two handles:
# separating (homology zero) and a meridian (trivial handlebody word)
SEP_MERIDIAN_COORDS = (2, 2, 0, 0, 2, 2, 0, 0, 0)


def sep_meridian():
    return curve_from_coords(2, SEP_MERIDIAN_COORDS)


def test_constructor_guard():
    with pytest.raises(ValueError):
        CurveClass(2, (0,) * 9)


def test_vector_validation():
    assert not validate((0,) * 9)
    with pytest.raises(ValueError):
        curve_from_coords(2, [0] * 9)
    with pytest.raises(ValueError):
        curve_from_coords(2, [1] + [0] * 8)  # odd triangle sum
    with pytest.raises(ValueError):
        curve_from_coords(2, [-1, 1] + [0] * 7)
    with pytest.raises(ValueError):
        curve_from_coords(2, [1, 1])  # wrong length


def test_vertex_link_rejected():
    with pytest.raises(ValueError):
        curve_from_coords(2, (2,) * 9)


def test_multi_component_rejected():
    # two parallel copies of a pushoff trace to two components
    c = reference_curve(2, "a1")
    with pytest.raises(ValueError):
        curve_from_coords(2, [2 * w for w in c.coords])


def test_canonical_idempotence():
    for label in ("a1", "b1", "c3", "n1", "w1"):
        c = reference_curve(2, label)
        again = curve_from_coords(2, c.coords)
        assert again == c
        assert hash(again) == hash(c)


def test_immutability():
    c = reference_curve(2, "a1")
    with pytest.raises(AttributeError):
        c.coords = (0,) * 9
    with pytest.raises(AttributeError):
        c.genus = 3


def test_pushoff_invariants():
    a1 = reference_curve(2, "a1")
    b1 = reference_curve(2, "b1")
    a2 = reference_curve(2, "a2")
    b2 = reference_curve(2, "b2")
    assert a1.homology == (1, 0, 0, 0) and a1.handlebody_word == (1,)
    assert b1.homology == (0, 1, 0, 0) and b1.is_meridian
    assert a2.homology == (0, 0, 1, 0) and a2.handlebody_word == (2,)
    assert b2.homology == (0, 0, 0, 1) and b2.is_meridian
    assert not a1.is_meridian and not a2.is_meridian
    for c in (a1, b1, a2, b2):
        assert not c.is_separating


@pytest.mark.parametrize("genus", [2, 3])
def test_chain_alternates_meridians(genus):
    # even chain curves are meridians, odd ones are not; none separate
    for j in range(1, 2 * genus + 2):
        c = reference_curve(genus, "c%d" % j)
        assert c.is_meridian == (j % 2 == 0), "c%d" % j
        assert not c.is_separating


def test_chain_words_genus2():
    assert reference_curve(2, "c1").handlebody_word == (1,)
    assert reference_curve(2, "c3").handlebody_word == (1, 2)
    assert reference_curve(2, "c5").handlebody_word == (2,)


def test_separating_meridian():
    s = sep_meridian()
    assert s.is_separating
    assert s.homology == (0, 0, 0, 0)
    assert s.is_meridian
    assert s.pi1_word != ()


def test_homology_normalization():
    assert normalize_homology((0, -1, 2, 0)) == (0, 1, -2, 0)
    assert normalize_homology((1, -1)) == (1, -1)
    assert normalize_homology((0, 0)) == (0, 0)


def test_symplectic_pairing():
    a1 = (1, 0, 0, 0)
    b1 = (0, 1, 0, 0)
    a2 = (0, 0, 1, 0)
    b2 = (0, 0, 0, 1)
    assert symplectic_pairing(a1, b1) == 1
    assert symplectic_pairing(b1, a1) == -1
    assert symplectic_pairing(a2, b2) == 1
    assert symplectic_pairing(a1, a2) == 0
    assert symplectic_pairing(a1, b2) == 0
    assert symplectic_pairing(a1, a1) == 0


def test_abelianization_consistency():
    for label in ("a1", "b1", "c1", "c2", "c3", "c4", "c5", "n1", "w1"):
        assert abelianization_consistent(reference_curve(2, label))
    assert abelianization_consistent(sep_meridian())


def test_total_weight():
    c = reference_curve(2, "a1")
    assert c.total_weight() == sum(c.coords)


def test_segment_curve_determinism():
    w1 = segment_curve_weights(2, (0, 1, 2, 3))
    w2 = segment_curve_weights(2, (0, 1, 2, 3))
    assert w1 == w2
    assert curve_from_coords(2, w1).coords == SEP_MERIDIAN_COORDS

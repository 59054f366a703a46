"""Reference curves and frozen decomposition families."""

import itertools

import pytest

from hbcomplex.intersect import disjoint, intersection_number
from hbcomplex.refcurves import (chain_curve, handle_bridge, handle_run,
                                 meridian_system, pants_decomposition,
                                 pushoff, reference_curve,
                                 twin_pants_triple)


@pytest.mark.parametrize("genus", [2, 3])
def test_pushoff_matches_reference_labels(genus):
    for i in range(1, genus + 1):
        assert reference_curve(genus, "a%d" % i) == pushoff(genus,
                                                            "a%d" % i)
        assert reference_curve(genus, "b%d" % i) == pushoff(genus,
                                                            "b%d" % i)


def test_chain_labels():
    for genus in (2, 3):
        for j in range(1, 2 * genus + 2):
            assert reference_curve(genus, "c%d" % j) == chain_curve(genus, j)


def test_handle_run_words():
    # the span-s run through handles i..i+s-1 carries the word x_i...x_{i+s-1}
    for genus in (3, 4):
        for i in range(1, genus):
            c = handle_run(genus, i, 2)
            assert c.handlebody_word == (i, i + 1)
            assert c == handle_bridge(genus, i)
        for i in range(1, genus - 1):
            c = handle_run(genus, i, 3)
            assert c.handlebody_word == (i, i + 1, i + 2)


def test_unknown_labels_rejected():
    for bad in ("", "x1", "a0", "a9", "c0", "c99", "n0", "n5", "m1", "w2",
                "b0"):
        with pytest.raises(ValueError):
            reference_curve(2, bad)


def test_w1_only_at_genus_two():
    w1 = reference_curve(2, "w1")
    assert w1.handlebody_word == (1, 1, 2, 2)
    with pytest.raises(ValueError):
        reference_curve(3, "w1")


@pytest.mark.parametrize("genus", [2, 3, 4, 5])
def test_pants_decomposition_family(genus):
    curves = pants_decomposition(genus)
    assert len(curves) == 3 * genus - 3
    assert len(set(curves)) == 3 * genus - 3
    for c in curves:
        assert not c.is_meridian
        assert not c.is_separating
    for c1, c2 in itertools.combinations(curves, 2):
        assert disjoint(c1, c2)


@pytest.mark.parametrize("genus", [3, 4, 5])
def test_meridian_system_family(genus):
    curves = meridian_system(genus)
    assert len(curves) == 3 * genus - 3
    assert len(set(curves)) == 3 * genus - 3
    assert curves[0].is_meridian
    for c in curves[1:]:
        assert not c.is_meridian
    for c1, c2 in itertools.combinations(curves, 2):
        assert disjoint(c1, c2)


def test_meridian_system_needs_genus_three():
    with pytest.raises(ValueError):
        meridian_system(2)


def test_twin_pants_triple_data():
    alpha, beta, gamma = twin_pants_triple()
    assert alpha.handlebody_word == (1, 1)
    assert beta.handlebody_word == (2, 2)
    assert gamma.handlebody_word == (1, 1, 2, 2)
    for c1, c2 in itertools.combinations((alpha, beta, gamma), 2):
        assert intersection_number(c1, c2) == 0
    for c in (alpha, beta, gamma):
        assert not c.is_meridian


def test_decompositions_are_fresh_lists():
    # callers may mutate the returned list without corrupting the cache
    first = pants_decomposition(2)
    first.append(None)
    second = pants_decomposition(2)
    assert None not in second
    assert len(second) == 3

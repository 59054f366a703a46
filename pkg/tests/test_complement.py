"""Complement components of disjoint multicurves."""

import pytest

from hbcomplex.curves import curve_from_coords
from hbcomplex.intersect import complement_components, realize_disjoint
from hbcomplex.refcurves import (meridian_system, pants_decomposition,
                                 reference_curve, twin_pants_triple)

SEP_MERIDIAN_COORDS = (2, 2, 0, 0, 2, 2, 0, 0, 0)


def boundary_multiset(comp):
    """Boundary circle labels: indices into the input curve list."""
    return sorted(comp.boundary)


@pytest.mark.parametrize("genus", [2, 3, 4])
def test_pants_decomposition_complement(genus):
    curves = pants_decomposition(genus)
    assert len(curves) == 3 * genus - 3
    comps = complement_components(curves)
    assert len(comps) == 2 * genus - 2
    for comp in comps:
        assert comp.genus == 0
        assert len(comp.boundary) == 3
    # Euler characteristic adds up: each pants piece contributes -1
    assert sum(1 for _ in comps) == 2 * genus - 2


def test_single_nonseparating_curve_complement():
    a1 = reference_curve(2, "a1")
    comps = complement_components([a1])
    assert len(comps) == 1
    comp = comps[0]
    assert comp.genus == 1  # genus drops by one, two boundary circles
    assert len(comp.boundary) == 2
    assert tuple(comp.boundary) == (0, 0)


def test_separating_curve_complement():
    s = curve_from_coords(2, SEP_MERIDIAN_COORDS)
    comps = complement_components([s])
    assert len(comps) == 2
    for comp in comps:
        assert comp.genus == 1
        assert len(comp.boundary) == 1


def test_twin_pants_triple_complement():
    curves = list(twin_pants_triple())
    comps = complement_components(curves)
    assert len(comps) == 2
    ids = set()
    for comp in comps:
        assert comp.genus == 0
        assert len(comp.boundary) == 3
        assert boundary_multiset(comp) == [0, 1, 2]
        ids.add(comp.region_id)
    # twins share the boundary triple but carry distinct region tags
    assert len(ids) == 2


@pytest.mark.parametrize("genus", [3, 4])
def test_meridian_system_complement(genus):
    curves = meridian_system(genus)
    assert len(curves) == 3 * genus - 3
    comps = complement_components(curves)
    assert len(comps) == 2 * genus - 2
    assert curves[0].is_meridian
    touching = [comp for comp in comps if 0 in comp.boundary]
    # the meridian's two sides land in two different pants
    assert len(touching) == 2
    assert all(comp.boundary.count(0) == 1 for comp in touching)


def test_realize_disjoint_requires_disjointness():
    a1 = reference_curve(2, "a1")
    b1 = reference_curve(2, "b1")
    with pytest.raises(ValueError):
        realize_disjoint([a1, b1])


def test_complement_deterministic():
    curves = list(twin_pants_triple())
    first = complement_components(curves)
    second = complement_components(list(curves))
    assert [c.key() for c in first] == [c.key() for c in second]

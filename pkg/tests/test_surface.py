"""Structural checks of the triangulated surface model."""

import pytest

from hbcomplex.surface import (build_surface, chord_word,
                               polygon_boundary_letters,
                               side_pairing_table)
from hbcomplex.words import free_reduce, is_trivial_surface_word


@pytest.mark.parametrize("genus", [2, 3, 4, 5])
def test_counts(genus):
    surf = build_surface(genus)
    assert surf.n_edges == 6 * genus - 3
    assert surf.n_triangles == 4 * genus - 2
    assert surf.euler_characteristic == 2 - 2 * genus
    counts = surf.surface_counts()
    assert counts["vertices"] == 1
    assert counts["edges"] == surf.n_edges
    assert counts["triangles"] == surf.n_triangles
    assert counts["euler_characteristic"] == 2 - 2 * genus


def test_genus_below_two_rejected():
    with pytest.raises(ValueError):
        build_surface(1)
    with pytest.raises(ValueError):
        build_surface(0)


@pytest.mark.parametrize("genus", [2, 3])
def test_edge_labels_and_loops(genus):
    surf = build_surface(genus)
    assert len(surf.edge_labels) == surf.n_edges
    assert len(set(surf.edge_labels)) == surf.n_edges
    for i in range(1, genus + 1):
        a = surf.label_to_edge["a%d" % i]
        b = surf.label_to_edge["b%d" % i]
        assert surf.is_loop(a) and surf.is_loop(b)
    for j in range(2, 4 * genus - 1):
        assert not surf.is_loop(surf.label_to_edge["c%d" % j])


@pytest.mark.parametrize("genus", [2, 3])
def test_boundary_word_is_surface_relator(genus):
    # the 4g polygon sides, read as based loops, spell the standard
    # relator [a1,b1]...[ag,bg], which is trivial in the surface group
    # but nontrivial in the free group on the loops
    surf = build_surface(genus)
    word = []
    for edge, direction in polygon_boundary_letters(surf):
        letter = edge + 1
        word.append(letter if direction > 0 else -letter)
    assert is_trivial_surface_word(word, genus)
    assert free_reduce(word) != ()


@pytest.mark.parametrize("genus", [2, 3])
def test_chord_words_close_up(genus):
    # a chord runs V_0 -> V_j; composing it with the rest of the polygon
    # boundary V_j -> ... -> V_0 spells the surface relator, so the
    # composite must be trivial in the surface group
    surf = build_surface(genus)
    letters = polygon_boundary_letters(surf)

    def signed(pairs):
        return [(e + 1) if d > 0 else -(e + 1) for e, d in pairs]

    for j in range(2, 4 * genus - 1):
        e = surf.chord_edge(j)
        w = signed(chord_word(surf, e)) + signed(letters[j:])
        assert is_trivial_surface_word(w, genus)


@pytest.mark.parametrize("genus", [2, 3])
def test_pairing_table_is_involution(genus):
    surf = build_surface(genus)
    table = side_pairing_table(surf)
    # every germ position on every edge has a well-defined partner slot
    for e in range(surf.n_edges):
        occ = surf.edge_occ[e]
        assert occ, "edge %d occurs in no triangle side" % e
    assert table is not None

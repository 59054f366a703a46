"""Free-group word utilities: reduction, canonical forms, projections."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbcomplex.words import (canonical_cyclic, cyclic_reduce, dehn_reduce,
                             exponent_sums, free_reduce, inverse,
                             is_trivial_surface_word, surface_relator,
                             to_handlebody)

letters = st.integers(min_value=-6, max_value=6).filter(lambda x: x != 0)
words = st.lists(letters, max_size=24).map(tuple)


def test_free_reduce_examples():
    assert free_reduce((1, -1)) == ()
    assert free_reduce((1, 2, -2, -1)) == ()
    assert free_reduce((1, 2, -2, 3)) == (1, 3)
    assert free_reduce(()) == ()


def test_cyclic_reduce_examples():
    assert cyclic_reduce((1, 2, -1)) == (2,)
    assert cyclic_reduce((3, 1, 2, -1, -3)) == (2,)
    assert cyclic_reduce((1, 2)) == (1, 2)


@given(words)
@settings(max_examples=200, deadline=None)
def test_free_reduce_is_reduced_and_idempotent(w):
    r = free_reduce(w)
    assert all(r[i] != -r[i + 1] for i in range(len(r) - 1))
    assert free_reduce(r) == r


@given(words)
@settings(max_examples=200, deadline=None)
def test_word_times_inverse_is_trivial(w):
    assert free_reduce(w + inverse(w)) == ()
    assert free_reduce(inverse(w) + w) == ()


@given(words)
@settings(max_examples=200, deadline=None)
def test_cyclic_reduce_no_wrap_cancellation(w):
    r = cyclic_reduce(w)
    if r:
        assert r[0] != -r[-1] or len(r) == 1


@given(words)
@settings(max_examples=200, deadline=None)
def test_canonical_cyclic_invariance(w):
    base = canonical_cyclic(w)
    # invariant under rotation and inversion
    if w:
        assert canonical_cyclic(w[3:] + w[:3]) == canonical_cyclic(w)
    assert canonical_cyclic(inverse(w)) == base


@given(words)
@settings(max_examples=200, deadline=None)
def test_exponent_sums_additive(w):
    a = exponent_sums(w, 6)
    b = exponent_sums(inverse(w), 6)
    assert all(x + y == 0 for x, y in zip(a, b))


def test_to_handlebody_kills_b_letters():
    # a_i letters (odd) survive as x_i; b_i letters (even) vanish
    assert to_handlebody((1, 2, 3), 2) == (1, 2)
    assert to_handlebody((2, 4), 2) == ()
    assert to_handlebody((1, -1, 4), 2) == ()
    assert to_handlebody((3, 2, -3), 2) == ()


def test_surface_relator_shape():
    for genus in (2, 3):
        rel = surface_relator(genus)
        assert len(rel) == 4 * genus
        assert exponent_sums(rel, 2 * genus) == (0,) * (2 * genus)
        assert is_trivial_surface_word(rel, genus)


def test_dehn_reduce_identity_detection():
    rel = surface_relator(2)
    assert dehn_reduce(rel, 2) == ()
    assert dehn_reduce((), 2) == ()
    # conjugates and powers of the relator are trivial
    conj = (1,) + rel + (-1,)
    assert is_trivial_surface_word(conj, 2)
    assert is_trivial_surface_word(rel + rel, 2)
    # a single generator is not
    assert not is_trivial_surface_word((1,), 2)
    assert not is_trivial_surface_word((1, 2), 2)


def test_commutator_of_chain_not_trivial():
    # [a1, a2] is nontrivial in the genus-2 surface group
    w = (1, 3, -1, -3)
    assert not is_trivial_surface_word(w, 2)

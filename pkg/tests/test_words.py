import pytest
from hypothesis import given

from conftest import words
from twotangles.errors import TypeMismatch
from twotangles.words import (
    CAP, CUP, X, XB, Gen, Word, bar_word, compose, dual_word, find_subword, gens_applicable, identity,
    pad, word, word_boundary_matching,
)


def test_generator_arities():
    assert (Gen(X, 1, 2).source, Gen(X, 1, 2).target) == (5, 5)
    assert (Gen(CAP, 0, 0).source, Gen(CAP, 0, 0).target) == (0, 2)
    assert (Gen(CUP, 1, 0).source, Gen(CUP, 1, 0).target) == (3, 1)


def test_ill_typed_word_rejected():
    with pytest.raises(TypeMismatch):
        Word(2, (Gen(CAP, 0, 0),))
    with pytest.raises(TypeMismatch):
        word(Gen(CAP, 0, 0), Gen(X, 1, 0))


def test_identity_keeps_its_object():
    assert identity(3).target == 3
    assert str(identity(3)) == "id(3)"
    with pytest.raises(ValueError):
        word()


def test_unknown_kind_and_negative_index():
    with pytest.raises(ValueError):
        Gen("Y", 0, 0)
    with pytest.raises(ValueError):
        Gen(X, -1, 0)


def test_compose_checks_types():
    f = word(Gen(CAP, 0, 0))
    g = word(Gen(CUP, 0, 0))
    assert compose(f, g).target == 0
    with pytest.raises(TypeMismatch):
        compose(f, f.__class__(0, ()))


def test_find_subword():
    f = word(Gen(CAP, 0, 0), Gen(X, 0, 0), Gen(X, 0, 0), Gen(CUP, 0, 0))
    assert find_subword(f, (Gen(X, 0, 0),)) == [1, 2]
    assert find_subword(f, (Gen(X, 0, 0), Gen(CUP, 0, 0))) == [2]
    assert find_subword(f, (Gen(XB, 0, 0),)) == []


def test_gens_applicable_counts():
    # A_2: X and Xb at (0,0), cup at (0,0), cap at three places
    gs = gens_applicable(2)
    assert len(gs) == 6
    assert all(g.source == 2 for g in gs)


def test_boundary_matching_of_cap():
    bm = word_boundary_matching(word(Gen(CAP, 0, 0)))
    assert bm.top_arcs == ((0, 1),)
    assert bm.arc_count == 1


def test_boundary_matching_closed_loop():
    bm = word_boundary_matching(word(Gen(CAP, 0, 0), Gen(X, 0, 0), Gen(CUP, 0, 0)))
    assert bm.arc_count == 0 and bm.closed_loops == 1


def test_boundary_matching_crossing_swaps_ends():
    bm = word_boundary_matching(word(Gen(X, 0, 0)))
    assert bm.through_arcs == ((0, 1), (1, 0))


@given(words())
def test_dual_and_bar_are_involutions(f):
    assert dual_word(dual_word(f)) == f
    assert bar_word(bar_word(f)) == f


@given(words())
def test_dual_reverses_type(f):
    d = dual_word(f)
    assert (d.source, d.target) == (f.target, f.source)


@given(words())
def test_pad_shifts_objects(f):
    g = pad(1, f, 2)
    assert g.source == f.source + 3 and g.target == f.target + 3
    assert len(g) == len(f)


@given(words())
def test_matching_arc_count_is_half_the_endpoints(f):
    bm = word_boundary_matching(f)
    assert 2 * bm.arc_count == f.source + f.target

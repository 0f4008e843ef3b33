import pytest
from hypothesis import given

from conftest import movies
from twotangles.cells import (
    Movie, TwoCell, bar_movie, canonicalize, cell_typing, dagger_movie, format_cell, hcompose, identity_movie,
    interchange_normal_form, make, movie_from_cells, normal_form_swaps, single, star_movie, swap_pair,
    swap_sides, vcompose,
)
from twotangles.errors import IllFormed, TypeMismatch
from twotangles.textio import parse_word
from twotangles.words import CAP, CUP, X, XB, Gen, identity


def test_base_typing_examples():
    s, t = cell_typing(make("I", 0, 0))
    assert s == identity(0) and str(t) == "cap(0,0) cup(0,0)"
    s, t = cell_typing(make("H", 0, 0))
    assert str(s) == "cap(0,1) X(1,0)" and str(t) == "cap(1,0) Xb(0,1)"
    s, t = cell_typing(make("T", 1, 0))
    assert str(s) == "cap(1,1) cup(2,0)" and t == identity(2)


def test_star_swaps_source_and_target():
    c = make("W", 1, 2)
    assert cell_typing(make("W", 1, 2, star=True)) == cell_typing(c)[::-1]


def test_dagger_of_birth_is_a_death():
    assert make("I", dagger=True) == make("I", star=True)
    assert make("E", dagger=True) == make("E", star=True)


def test_bar_is_trivial_on_cupcap_cells():
    for k in ("I", "E", "T"):
        assert make(k, bar=True) == make(k)


def test_s1_dagger_is_s2_star():
    assert make("S1", dagger=True) == make("S2", star=True)
    assert cell_typing(make("S1", dagger=True)) == cell_typing(TwoCell("S1", dagger=True))


def test_height_shift_needs_distant_generators():
    with pytest.raises(IllFormed):
        TwoCell("N", y=Gen(X, 0, 1), z=Gen(X, 1, 0))
    c = TwoCell("N", y=Gen(CAP, 0, 2), z=Gen(X, 2, 0))
    s, t = cell_typing(c)
    assert str(s) == "X(0,0) cap(0,2)" and str(t) == "cap(0,2) X(2,0)"


def test_format_cell():
    assert format_cell(make("W", 0, 1, bar=True, star=True)) == "~W(0,1)*"
    assert format_cell(TwoCell("id", word=identity(2))) == "1{id(2)}"


def test_movie_rejects_mismatched_slices():
    a = single(make("I"))
    b = single(make("W"))
    with pytest.raises(TypeMismatch):
        vcompose(a, b)


def test_hcompose_whiskers():
    a = single(make("I"))  # id(0) => cap cup
    b = single(make("W"), )  # cap => cap X, on A_0 -> A_2
    with pytest.raises(TypeMismatch):
        hcompose(b, a)
    h = hcompose(a, identity_movie(identity(0)))
    assert h == a


def test_interchange_swaps_disjoint_slices():
    m = movie_from_cells(identity(0), [(0, make("I")), (0, make("I"))])
    s1, s2 = m.slices
    assert swap_sides(s1, s2) == ["left"]
    n1, n2 = swap_pair(s1, s2, "left")
    assert Movie(m.source, (n1, n2)).target == m.target


def test_interchange_cycle_regression():
    # cusp pairs at one position once sent bubble sorting round a cycle
    T, Ts = make("T", 0, 3), make("T", 0, 3, star=True)
    m = movie_from_cells(identity(4), [(0, Ts), (0, T), (0, Ts), (0, T)])
    nf = interchange_normal_form(m)
    assert nf.source == m.source and nf.target == m.target
    assert interchange_normal_form(nf) == nf


@given(movies())
def test_normal_form_is_idempotent_and_replays(m):
    nf, swaps = normal_form_swaps(m)
    assert (nf.source, nf.target) == (m.source, m.target)
    assert interchange_normal_form(nf) == nf
    sl = list(m.slices)
    for k, side in swaps:
        sl[k], sl[k + 1] = swap_pair(sl[k], sl[k + 1], side)
    assert Movie(m.source, tuple(sl)) == nf


@given(movies())
def test_involutions(m):
    for op in (star_movie, bar_movie, dagger_movie):
        assert op(op(m)) == m


@given(movies())
def test_operations_commute(m):
    ops = (star_movie, bar_movie, dagger_movie)
    for f in ops:
        for g in ops:
            assert f(g(m)) == g(f(m))


@given(movies(slices=3), movies(slices=3))
def test_star_and_dagger_reverse_composites(a, b):
    b2 = Movie(a.target, ()) if b.source != a.target else b
    ab = vcompose(a, b2)
    assert star_movie(ab) == vcompose(star_movie(b2), star_movie(a))
    assert dagger_movie(ab) == vcompose(dagger_movie(b2), dagger_movie(a))
    assert bar_movie(ab) == vcompose(bar_movie(a), bar_movie(b2))


@given(movies())
def test_canonicalize_is_idempotent(m):
    for s in m.slices:
        c = canonicalize(s.cell)
        assert canonicalize(c) == c

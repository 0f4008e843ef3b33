import pytest

from twotangles.cells import cell_typing, make, single
from twotangles.errors import Unsupported
from twotangles.invariants import euler_characteristic
from twotangles.rewrite import decide_equal
from twotangles.structure import (
    balancing, braid_coherence, braiding_objects, check_coherence, counit_object, expand_generator,
    h_composite, tensorator, triangulator, unit_object, wbar, writhing,
)
from twotangles.textio import parse_word
from twotangles.words import X, identity, word_boundary_matching

SIZES = [(n, m) for n in range(5) for m in range(5)]


@pytest.mark.parametrize("n,m", SIZES)
def test_braiding_permutes_blocks(n, m):
    f = braiding_objects(n, m)
    assert (f.source, f.target) == (n + m, m + n)
    assert len(f) == n * m and all(g.kind == X for g in f)
    # point k of the left block lands at m + k, the right block moves left by n
    want = tuple(sorted([(k, m + k) for k in range(n)] + [(n + k, k) for k in range(m)]))
    assert word_boundary_matching(f).through_arcs == want


def test_braiding_small_case_exactly():
    assert braiding_objects(2, 1) == parse_word("X(1,0) X(0,1)")


@pytest.mark.parametrize("n", range(5))
def test_unit_nests_caps(n):
    f = unit_object(n)
    assert (f.source, f.target) == (0, 2 * n)
    bm = word_boundary_matching(f)
    assert bm.top_arcs == tuple(sorted((k, 2 * n - 1 - k) for k in range(n)))
    g = counit_object(n)
    assert (g.source, g.target) == (2 * n, 0)


def test_unit_two_exactly():
    assert unit_object(2) == parse_word("cap(0,0) cap(1,1)")


@pytest.mark.parametrize("n", range(5))
def test_triangulator_lands_on_identity(n):
    t = triangulator(n)
    assert t.target == identity(n)
    # a zigzag: every strand runs straight through
    assert word_boundary_matching(t.source).through_arcs == tuple((k, k) for k in range(n))


def test_balancing_is_a_kink():
    f = balancing(1)
    assert word_boundary_matching(f).through_arcs == ((0, 0),)


def test_writhing_and_wbar_types():
    w = writhing()
    assert (str(w.source), str(w.target)) == ("cap(0,0)", "cap(0,0) X(0,0)")
    wb = wbar()
    assert cell_typing(make("W", bar=True)) == (wb.source, wb.target)


def test_h_composite_has_h_boundary():
    h = h_composite("plain")
    assert (h.source, h.target) == cell_typing(make("H"))


def test_tensorator_type():
    f, g = parse_word("cap(0,0) X(0,0)"), parse_word("cup(0,0)")
    t = tensorator(f, g)
    assert t.source.source == f.source + g.source
    assert t.target.target == f.target + g.target
    assert euler_characteristic(t) == euler_characteristic(t.__class__(t.target, ()))


@pytest.mark.parametrize("kind", ["I", "E", "W", "II", "S0", "S1", "S2", "H", "T"])
def test_expand_keeps_boundary(kind):
    c = make(kind)
    m = expand_generator(c)
    assert (m.source, m.target) == cell_typing(c)
    if kind != "H":
        assert len(m) == 1 and m.slices[0].cell == c


def test_expand_shifted_generator():
    c = make("W", 1, 2)
    m = expand_generator(c)
    assert (m.source, m.target) == cell_typing(c)


def test_expand_decorated_is_unsupported():
    with pytest.raises(Unsupported):
        expand_generator(make("W", bar=True))


def test_h_composite_equals_h():
    v = decide_equal(h_composite("plain"), single(make("H")), depth=8)
    assert v and v.relation_steps <= 8


def test_braid_coherence_boundary():
    b = braid_coherence(2, 2, 1)
    assert b.source.source == 5


def test_coherence_conditions_hold():
    checks = check_coherence(max_n=2)
    assert len(checks) == 20
    assert all(c.ok for c in checks), [c for c in checks if not c.ok]

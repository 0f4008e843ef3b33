import random

import pytest
from hypothesis import given, settings

from conftest import movies
from twotangles.cells import drop_identities, interchange_normal_form, make, movie_from_cells, vcompose
from twotangles.errors import BoundaryMismatch
from twotangles.relations import all_instances, instantiate
from twotangles.rewrite import (
    Equal, InterchangeSwap, RelationStep, Unknown, apply_rewrite, applicable_rewrites, decide_equal,
    equal_depth, invert_path, replay,
)
from twotangles.words import identity


def closed(*placed):
    return movie_from_cells(identity(0), placed)


SPHERE = closed((0, make("I")), (0, make("I", star=True)))
TORUS = closed((0, make("I")), (1, make("E", star=True)), (1, make("E")), (0, make("I", star=True)))


def test_identical_movies_are_equal_without_steps():
    v = decide_equal(SPHERE, SPHERE)
    assert isinstance(v, Equal) and v.relation_steps == 0


def test_boundary_mismatch():
    with pytest.raises(BoundaryMismatch):
        decide_equal(SPHERE, instantiate(1, {"m": 0, "n": 0}).lhs)


def test_different_surfaces_stay_unknown():
    v = decide_equal(SPHERE, TORUS, depth=2, node_budget=500)
    assert isinstance(v, Unknown) and not v
    assert equal_depth(v) is None


def test_relation_one_replays():
    r = instantiate(1, {"m": 1, "n": 0})
    v = decide_equal(r.lhs, r.rhs, depth=1)
    assert v and equal_depth(v) == 1
    assert interchange_normal_form(replay(r.lhs, v.path)) == interchange_normal_form(r.rhs)


def test_paths_replay_literally():
    for r in list(all_instances(1, ids=[10, 14, 17]))[::5]:
        v = decide_equal(r.lhs, r.rhs, depth=1)
        assert v, str(r)
        assert replay(r.lhs, v.path) == drop_identities(r.rhs), str(r)


def test_inverse_path_goes_back():
    r = instantiate(10, {"m": 0, "n": 1})
    v = decide_equal(r.lhs, r.rhs, depth=1)
    back = replay(r.rhs, invert_path(v.path))
    assert back == r.lhs


def test_depth_is_monotone():
    r = instantiate(3, {"m": 0, "n": 0})
    # two cancelling pairs in a row need two relation steps
    a = vcompose(r.lhs, r.lhs)
    verdicts = [bool(decide_equal(a, r.rhs, depth=d, simplify=False)) for d in range(5)]
    assert verdicts == sorted(verdicts)
    assert verdicts == [False, False, True, True, True]


def test_rewrites_preserve_boundaries():
    rng = random.Random(3)
    m = TORUS
    for _ in range(30):
        steps = applicable_rewrites(m, max_slices=8)
        assert steps
        s = steps[rng.randrange(len(steps))]
        n = apply_rewrite(m, s)
        assert (n.source, n.target) == (m.source, m.target)
        assert isinstance(s, (InterchangeSwap, RelationStep))
        m = n


@settings(max_examples=25)
@given(movies(slices=4))
def test_applicable_steps_apply(m):
    for s in applicable_rewrites(m, max_slices=len(m) + 2)[:40]:
        n = apply_rewrite(m, s)
        assert (n.source, n.target) == (m.source, m.target)
        assert apply_rewrite(n, s.inverse()) == m

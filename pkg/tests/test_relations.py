import pytest

from cell_complex import build_complex
from twotangles.cells import cell_typing, make
from twotangles.errors import BadParameters
from twotangles.invariants import component_count, euler_characteristic
from twotangles.relations import (
    SCHEMAS, VARIANTS, all_instances, check_schema, check_typing, instantiate, schema_params,
)
from twotangles.textio import parse_word


@pytest.fixture(scope="module")
def bound1():
    return list(all_instances(1))


def test_thirty_schemas():
    assert [s.id for s in SCHEMAS] == list(range(1, 31))


def test_every_schema_has_instances():
    # the hexagon of three distant generators first fits at index 2
    assert [s.id for s in SCHEMAS if not schema_params(s.id, 1)] == [16]
    for s in SCHEMAS:
        assert schema_params(s.id, 2), s.id
        assert check_schema(s.id, 2) == []


def test_variants_are_all_subsets():
    assert len(set(VARIANTS)) == 8
    assert {frozenset(v) for v in VARIANTS} == {
        frozenset(s) for s in ((), ("bar",), ("dagger",), ("star",), ("bar", "dagger"),
                               ("bar", "star"), ("dagger", "star"), ("bar", "dagger", "star"))}


def test_unknown_relation():
    with pytest.raises(BadParameters):
        instantiate(31, {})


def test_writhe_cancellation():
    r = instantiate(1, {"m": 0, "n": 0})
    assert [s.cell for s in r.lhs.slices] == [make("W"), make("W", star=True)]
    assert r.rhs.slices == () and r.rhs.source == parse_word("cap(0,0)")


def test_swallowtail_shape():
    r = instantiate(10, {"m": 0, "n": 0})
    assert len(r.lhs) == 3
    assert r.rhs.slices == () and r.rhs.source == parse_word("cap(0,0)")
    kinds = [s.cell.kind for s in r.lhs.slices]
    assert kinds == ["T", "N", "T"]


def test_instances_typecheck(bound1):
    assert len(bound1) == 2480
    assert all(check_typing(r) for r in bound1)


def test_star_variant_swaps_sides(bound1):
    plain = instantiate(3, {"m": 1, "n": 0})
    starred = instantiate(3, {"m": 1, "n": 0}, ("star",))
    assert starred.lhs.source == plain.lhs.target


def test_both_sides_trace_the_same_surface(bound1):
    # independent check: V - E + F from the brute-force complex
    for r in bound1[::7]:
        a, b = build_complex(r.lhs), build_complex(r.rhs)
        assert a.euler == b.euler == euler_characteristic(r.lhs) == euler_characteristic(r.rhs), str(r)


def test_sides_agree_on_invariants(bound1):
    for r in bound1:
        assert euler_characteristic(r.lhs) == euler_characteristic(r.rhs), str(r)
        if r.lhs.is_closed():
            assert component_count(r.lhs) == component_count(r.rhs)


def test_cell_sides_match_instance_boundaries(bound1):
    for r in bound1[::11]:
        for m in (r.lhs, r.rhs):
            for s in m.slices:
                src, tgt = cell_typing(s.cell)
                assert s.source.gens[s.pos:s.pos + len(src)] == src.gens
                assert s.target.gens[s.pos:s.pos + len(tgt)] == tgt.gens

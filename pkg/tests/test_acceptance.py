"""One test per acceptance criterion; each records a PASS/FAIL line in the terminal summary."""
import random
import time

import pytest

from cell_complex import build_complex
from conftest import CORPUS
from test_invariants import HAND_BUILT
from twotangles.cells import (
    Movie, bar_movie, cell_typing, dagger_movie, drop_identities, identity_movie, make, single,
    star_movie, vcompose,
)
from twotangles.cli import main as cli
from twotangles.generate import MovieConfig, random_closed_movie, random_movie
from twotangles.invariants import component_count, euler_characteristic, surface_invariants
from twotangles.relations import all_instances, check_typing, instantiate
from twotangles.rewrite import apply_rewrite, applicable_rewrites, decide_equal, replay
from twotangles.structure import (
    braiding_objects, expand_generator, h_composite, triangulator, unit_object, wbar,
)
from twotangles.textio import parse_document, parse_word, serialize
from twotangles.words import X, identity


@pytest.mark.criterion(1)
def test_relation_typing_closure(criterion):
    t = time.perf_counter()
    insts = list(all_instances(2))
    bad = [str(r) for r in insts if not check_typing(r)]
    ids = {r.id for r in insts}
    dt = time.perf_counter() - t
    criterion["detail"] = f"{len(insts)} instances, {len(bad)} failures, relations {min(ids)}-{max(ids)}, {dt:.1f}s"
    assert ids == set(range(1, 31))
    assert len(insts) >= 1000 and not bad
    assert dt < 30


@pytest.mark.criterion(2)
def test_rewrite_soundness(criterion):
    t = time.perf_counter()
    total = equal = replayed = 0
    misses = []
    for r in all_instances(1):
        total += 1
        v = decide_equal(r.lhs, r.rhs, depth=1)
        if not v:
            misses.append(str(r))
            continue
        equal += 1
        if replay(r.lhs, v.path) == drop_identities(r.rhs):
            replayed += 1
    dt = time.perf_counter() - t
    criterion["detail"] = f"{equal}/{total} Equal at depth 1, {replayed} paths replay, {dt:.1f}s"
    assert not misses, misses[:5]
    assert replayed == equal == total
    assert dt < 60


@pytest.mark.criterion(3)
def test_structure_typing(criterion):
    checked = 0
    for n in range(5):
        for m in range(5):
            f = braiding_objects(n, m)
            assert (f.source, f.target) == (n + m, m + n)
            assert len(f) == n * m and all(g.kind == X for g in f)
            checked += 1
        u = unit_object(n)
        assert (u.source, u.target) == (0, 2 * n)
        assert triangulator(n).target == identity(n)
    assert unit_object(2) == parse_word("cap(0,0) cap(1,1)")
    assert braiding_objects(2, 1) == parse_word("X(1,0) X(0,1)")
    criterion["detail"] = f"{checked} braidings, units and triangulators for n,m <= 4"


@pytest.mark.criterion(4)
def test_expansion_consistency(criterion):
    for k in ("I", "E", "W", "II", "S0", "S1", "S2", "H", "T"):
        c = make(k)
        m = expand_generator(c)
        assert (m.source, m.target) == cell_typing(c), k
        if k in ("I", "E", "W", "II", "T"):
            assert m == single(c), k
    vh = decide_equal(h_composite("plain"), single(make("H")), depth=8)
    vw = decide_equal(wbar(), single(make("W", bar=True)), depth=6)
    dh = vh.relation_steps if vh else None
    dw = vw.relation_steps if vw else None
    criterion["detail"] = f"H found at depth {dh}, W-bar found at depth {dw}"
    assert vh and vw
    assert dh <= 8 and dw <= 6


@pytest.mark.criterion(5)
def test_involutions(criterion):
    rng = random.Random(5)
    ops = (star_movie, bar_movie, dagger_movie)
    n = 0
    for _ in range(1000):
        m = random_movie(rng, MovieConfig(slices=rng.randrange(7)))
        for f in ops:
            assert f(f(m)) == m
            for g in ops:
                assert f(g(m)) == g(f(m))
        k = rng.randrange(len(m) + 1)
        a, b = Movie(m.source, m.slices[:k]), Movie(m.slices[k].source if k < len(m) else m.target, m.slices[k:])
        assert star_movie(vcompose(a, b)) == vcompose(star_movie(b), star_movie(a))
        assert dagger_movie(vcompose(a, b)) == vcompose(dagger_movie(b), dagger_movie(a))
        n += 1
    criterion["detail"] = f"{n} random movies, exact term identity"


def _signature(m):
    return euler_characteristic(m), component_count(m) if m.is_closed() else None


@pytest.mark.criterion(6)
def test_invariant_invariance(criterion):
    rng = random.Random(2026)
    steps = closed = 0
    violations = []
    for i in range(200):
        if i % 2:
            m = random_closed_movie(rng, MovieConfig(slices=2, max_length=6))
        else:
            m = random_movie(rng, MovieConfig(slices=4, max_length=6))
        closed += m.is_closed()
        want = _signature(m)
        for s in applicable_rewrites(m, max_slices=len(m) + 2):
            got = _signature(apply_rewrite(m, s))
            steps += 1
            if got != want:
                violations.append((i, str(s), want, got))
    criterion["detail"] = f"200 movies ({closed} closed), {steps} rewrite steps, {len(violations)} violations"
    assert not violations, violations[:5]


@pytest.mark.criterion(7)
def test_known_surfaces(criterion):
    sphere = surface_invariants(HAND_BUILT["sphere"][0])
    assert (sphere.euler, sphere.components) == (2, 1)
    torus = HAND_BUILT["torus"][0]
    ti, tc = surface_invariants(torus), build_complex(torus)
    assert (ti.euler, ti.components) == (0, 1) == (tc.euler, tc.components)
    matched = 0
    for name, (m, chi, comps) in HAND_BUILT.items():
        cx = build_complex(m)
        assert euler_characteristic(m) == cx.euler == chi, name
        if comps is not None:
            assert component_count(m) == cx.components == comps, name
        matched += 1
    criterion["detail"] = f"sphere 2/1, torus 0/1, {matched} hand-built movies match the cell-complex oracle"
    assert matched >= 10


@pytest.mark.criterion(8)
def test_swallowtail(criterion):
    r = instantiate(10, {"m": 0, "n": 0})
    target = identity_movie(parse_word("cap(0,0)"))
    v = decide_equal(r.lhs, target, depth=3)
    criterion["detail"] = f"three-phase lhs reaches 1 at depth {v.relation_steps if v else None}"
    assert v and v.relation_steps <= 3
    assert replay(r.lhs, v.path) == target


@pytest.mark.criterion(9)
def test_cli(criterion, tmp_path, capsys):
    files = sorted(CORPUS.glob("*.movie"))
    for p in files:
        text = p.read_text(encoding="utf-8")
        assert serialize(parse_document(text)) == text, p.name
    report = tmp_path / "report.tsv"
    assert cli(["relations", "check", "--max-index", "1", "--report", str(report)]) == 0
    assert len(report.read_text().splitlines()) == sum(1 for _ in all_instances(1))

    bad = tmp_path / "bad.movie"
    bad.write_text("movie bad\nsource: id(0\n")
    ill = tmp_path / "ill.movie"
    ill.write_text("movie ill\nsource: id(0)\nslice: [id(0)] W(0,0) [id(0)]\n")
    codes = {
        0: cli(["validate", str(CORPUS / "sphere.movie")]),
        1: cli(["eq", str(CORPUS / "sphere.movie"), str(CORPUS / "torus.movie"), "--depth", "1",
                "--budget", "100"]),
        2: cli(["validate", str(bad)]),
        3: cli(["validate", str(ill)]),
        4: cli(["compose", str(CORPUS / "lhs10.movie"), str(CORPUS / "sphere.movie")]),
    }
    eq10 = cli(["eq", str(CORPUS / "lhs10.movie"), str(CORPUS / "rhs10.movie"), "--depth", "1"])
    capsys.readouterr()
    criterion["detail"] = f"{len(files)} documents round-trip, exit codes {codes}, eq lhs10 rhs10 -> {eq10}"
    assert all(k == v for k, v in codes.items())
    assert eq10 == 0

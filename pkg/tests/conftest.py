import random
import sys
from pathlib import Path

import hypothesis
import hypothesis.strategies as st
import pytest

from twotangles.generate import MovieConfig, random_movie, random_word

sys.path.insert(0, str(Path(__file__).resolve().parent))

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")

CORPUS = Path(__file__).resolve().parent / "corpus"
GOLDEN = Path(__file__).resolve().parent / "golden"


@st.composite
def words(draw, max_object=4, max_length=6):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(0, 2))
    length = draw(st.integers(0, max_length))
    return random_word(random.Random(seed), n, length, max_object)


@st.composite
def movies(draw, slices=6):
    seed = draw(st.integers(0, 2**32 - 1))
    k = draw(st.integers(0, slices))
    return random_movie(random.Random(seed), MovieConfig(slices=k))


@pytest.fixture
def corpus_dir():
    return CORPUS


ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion; the test body fills in the detail."""
    num = request.node.get_closest_marker("criterion").args[0]
    box = {"detail": ""}
    yield box
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE[num] = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {box['detail']}"
    print("\n" + ACCEPTANCE[num])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])

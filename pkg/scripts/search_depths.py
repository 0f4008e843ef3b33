"""Record the rewrite depths found for the structural equalities.

    python scripts/search_depths.py

Prints one line per case: relation steps on the path, total path length,
search time.
"""
import time

from twotangles.cells import identity_movie, make, single
from twotangles.relations import instantiate
from twotangles.rewrite import decide_equal
from twotangles.structure import (
    adjoint_2cell, check_coherence, coherence_sides, h_composite, wbar,
)
from twotangles.textio import parse_word


def cases():
    yield "H", h_composite("plain"), single(make("H")), 8
    yield "H-bar", h_composite("barred"), single(make("H", bar=True)), 8
    yield "W-bar", wbar(), single(make("W", bar=True)), 6
    yield "swallowtail", instantiate(10, {"m": 0, "n": 0}).lhs, identity_movie(parse_word("cap(0,0)")), 3
    for kind in ("H", "W"):
        yield f"adjoint {kind}", adjoint_2cell(single(make(kind))), single(make(kind, dagger=True)), 6
    for chk in check_coherence(2):
        a, b = coherence_sides(chk.condition, *chk.params)
        yield f"coherence {chk.condition}{chk.params}", a, b, 6


def main() -> None:
    for name, a, b, depth in cases():
        t = time.perf_counter()
        v = decide_equal(a, b, depth=depth)
        dt = time.perf_counter() - t
        found = f"{v.relation_steps} relation steps, {len(v.path)} steps" if v else f"unknown ({v.explored} nodes)"
        print(f"{name:32s} {found:36s} {dt:6.2f}s")


if __name__ == "__main__":
    main()

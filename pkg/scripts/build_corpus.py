"""Write the canonical .movie corpus used by the round-trip and CLI tests.

    python scripts/build_corpus.py [OUTDIR]
"""
import random
import sys
from pathlib import Path

from twotangles.cells import (
    TwoCell, bar_movie, dagger_movie, identity_movie, make, movie_from_cells, single, star_movie,
)
from twotangles.generate import MovieConfig, random_movie
from twotangles.relations import instantiate
from twotangles.structure import (
    adjoint_2cell, braid_coherence, expand_generator, h_composite, tensorator, triangulator, wbar,
    writhing,
)
from twotangles.textio import MovieDocument, parse_word, serialize
from twotangles.words import identity


def closed(*placed):
    return movie_from_cells(identity(0), placed)


def corpus() -> dict:
    I, Id, E, Es = make("I"), make("I", star=True), make("E"), make("E", star=True)
    r10 = instantiate(10, {"m": 0, "n": 0})
    docs = {
        "sphere": closed((0, I), (0, Id)),
        "torus": closed((0, I), (1, Es), (1, E), (0, Id)),
        "genus2": closed((0, I), (1, Es), (1, Es), (1, E), (1, E), (0, Id)),
        "two_spheres": closed((0, I), (0, I), (0, Id), (0, Id)),
        "split_sphere": closed((0, I), (1, Es), (0, Id), (0, Id)),
        "lhs10": r10.lhs,
        "rhs10": r10.rhs,
        "h_composite": h_composite("plain"),
        "h_cell": single(make("H")),
        "wbar": wbar(),
        "wbar_cell": single(make("W", bar=True)),
        "writhe": writhing(),
        "expand_S0": expand_generator(make("S0")),
        "triangulator3": triangulator(3),
        "coherence_221": braid_coherence(2, 2, 1),
        "tensorator": tensorator(parse_word("cap(0,0) X(0,0)"), parse_word("cup(0,0)")),
        "adjoint_h": adjoint_2cell(single(make("H"))),
        "idle": identity_movie(parse_word("cap(0,0) X(0,0) cup(0,0)")),
        "identity_cell": movie_from_cells(parse_word("cap(0,0)"),
                                          [(0, TwoCell("id", word=parse_word("cap(0,0)"))), (0, make("W"))]),
        "decorated": bar_movie(dagger_movie(star_movie(single(make("S1", 0, 1))))),
        "random7": random_movie(random.Random(7), MovieConfig(slices=6)),
    }
    return docs


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    docs = corpus()
    for name, m in docs.items():
        frames = ()
        if name == "sphere":
            frames = ((1, m.frames()[1]),)
        (out / f"{name}.movie").write_text(serialize(MovieDocument(name, m, frames)), encoding="utf-8")
    print(f"wrote {len(docs)} documents to {out}")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "corpus")

"""Regenerate the renderer golden files in tests/golden.

    python scripts/regen_golden.py

Only run this after checking a rendering change by eye; the render tests
compare against these files byte for byte.
"""
from pathlib import Path

from twotangles.render import render_movie, render_word
from twotangles.structure import braiding_objects
from twotangles.textio import parse_document, parse_word

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"
CORPUS = ROOT / "tests" / "corpus"

WORDS = {
    "id2": parse_word("id(2)"),
    "cap": parse_word("cap(0,0)"),
    "braid21": braiding_objects(2, 1),
    "kink": parse_word("cap(0,1) X(1,0) cup(0,1)"),
    "mixed": parse_word("cap(0,0) Xb(0,0) cap(1,1) X(0,2) cup(1,1)"),
}
MOVIES = ("sphere", "torus", "h_composite", "lhs10")


def outputs() -> dict[str, str]:
    out = {}
    for name, f in WORDS.items():
        for fmt, ext in (("ascii", "txt"), ("svg", "svg")):
            out[f"word_{name}.{ext}"] = render_word(f, fmt)
    for name in MOVIES:
        m = parse_document((CORPUS / f"{name}.movie").read_text(encoding="utf-8")).movie
        for fmt, ext in (("ascii", "txt"), ("svg", "svg")):
            out[f"movie_{name}.{ext}"] = render_movie(m, fmt)
    return out


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    files = outputs()
    for name, text in files.items():
        (GOLDEN / name).write_text(text, encoding="utf-8")
    print(f"wrote {len(files)} golden files to {GOLDEN}")


if __name__ == "__main__":
    main()

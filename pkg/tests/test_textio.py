import pytest
from hypothesis import given

from conftest import CORPUS, movies
from twotangles.cells import make
from twotangles.errors import DocumentTypeError, ParseError
from twotangles.textio import MovieDocument, parse_cell, parse_document, parse_movie, parse_word, serialize

SPHERE = """movie sphere
source: id(0)
slice: [id(0)] I(0,0) [id(0)]
slice: [id(0)] I(0,0)* [id(0)]
"""


def corpus_files():
    return sorted(CORPUS.glob("*.movie"))


def test_corpus_is_large_enough():
    assert len(corpus_files()) >= 20


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_corpus_round_trip(path):
    text = path.read_text(encoding="utf-8")
    doc = parse_document(text)
    assert serialize(doc) == text
    assert parse_document(serialize(doc)) == doc


def test_sphere():
    m = parse_movie(SPHERE)
    assert m.is_closed() and len(m) == 2


def test_whitespace_and_comments():
    text = "  movie  s   # a name\nsource:id(0)\n\nslice:[ id(0) ]I( 0 , 0 )[id(0)]  # birth\n"
    m = parse_movie(text)
    assert str(m.target) == "cap(0,0) cup(0,0)"


def test_cell_decorations_canonicalize():
    assert parse_cell("I(0,0)^d") == make("I", star=True)
    assert parse_cell("~W(1,0)**") == make("W", 1, 0, bar=True)
    assert parse_cell("N(cap(0,0),cap(2,0))*").star


def test_identity_cell_syntax():
    c = parse_cell("1{cap(0,0) X(0,0)}")
    assert c.kind == "id" and str(c.word) == "cap(0,0) X(0,0)"


def test_wrong_frame_annotation():
    bad = SPHERE.replace("slice: [id(0)] I(0,0)* [id(0)]", "frame: cap(0,0)\nslice: [id(0)] I(0,0)* [id(0)]")
    with pytest.raises(DocumentTypeError) as e:
        parse_document(bad)
    assert e.value.line == 4
    assert "cap(0,0) cup(0,0)" in str(e.value)


def test_ill_typed_slice():
    bad = SPHERE.replace("I(0,0)* [id(0)]", "W(0,0) [id(0)]")
    with pytest.raises(DocumentTypeError) as e:
        parse_document(bad)
    assert e.value.line == 4


def test_ill_typed_word():
    with pytest.raises(DocumentTypeError):
        parse_word("cap(0,0) X(1,0)")


def test_ill_formed_height_shift():
    with pytest.raises(DocumentTypeError):
        parse_cell("N(X(0,1),X(1,0))")


@pytest.mark.parametrize("text,line,col", [
    ("movie s\nsource: id(0)\nslice: [id(0)] Q(0,0) [id(0)]\n", 3, 16),
    ("movie s\nsource: id(0\n", 2, 13),
    ("movie s\nsourc: id(0)\n", 2, 1),
    ("source: id(0)\n", 1, 1),
    ("movie s\nsource id(0)\n", 2, 8),
    ("movie s\nsource: cap(0,0) cup(0,0) ]\n", 2, 27),
])
def test_parse_error_positions(text, line, col):
    with pytest.raises(ParseError) as e:
        parse_document(text)
    assert (e.value.line, e.value.column) == (line, col)
    assert e.value.expected


def test_frame_notes_survive():
    doc = parse_document((CORPUS / "sphere.movie").read_text())
    assert doc.frames and doc.frames[0][0] == 1


@given(movies())
def test_random_round_trip(m):
    text = serialize(MovieDocument("r", m))
    assert parse_movie(text) == m

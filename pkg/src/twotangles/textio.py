"""The `.movie` text format: parser and serializer.

    movie sphere
    source: id(0)
    slice: [id(0)] I(0,0) [id(0)]
    frame: cap(0,0) cup(0,0)      # optional check of the running word
    slice: [id(0)] I(0,0)* [id(0)]

Cells are `KIND(m,n)`, `N(Y(i,j),Z(k,l))` or `1{word}`, with an optional
`~` prefix (bar) and `^d` (dagger) and `*` (star) suffixes.  Parsed cells
are canonicalized, so serializing gives the canonical spelling.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .cells import BASE_KINDS, Movie, Slice, TwoCell, canonicalize, format_cell
from .errors import DocumentTypeError, ParseError, TangleError
from .words import KINDS, Gen, Word

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\^d|[()\[\]{},~*]))")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*\Z")


class _Cursor:
    """Tokenizer over one line; columns are 1-based and point into the original line."""

    def __init__(self, text: str, line: int, offset: int):
        self.text = text
        self.line = line
        self.offset = offset
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def col(self) -> int:
        self._skip()
        return self.offset + self.pos + 1

    def peek(self) -> str | None:
        self._skip()
        if self.pos >= len(self.text):
            return None
        m = _TOKEN.match(self.text, self.pos)
        return m.group(m.lastgroup) if m else self.text[self.pos]

    def fail(self, expected, what: str | None = None):
        tok = self.peek()
        got = "end of line" if tok is None else repr(tok)
        raise ParseError(what or f"unexpected {got}", self.line, self.col(), sorted(expected))

    def take(self, *expected: str) -> str:
        tok = self.peek()
        if tok is None or tok not in expected:
            self.fail([repr(e) for e in expected])
        self.pos = _TOKEN.match(self.text, self.pos).end()
        return tok

    def integer(self) -> int:
        tok = self.peek()
        if tok is None or not tok.isdigit():
            self.fail(["integer"])
        self.pos = _TOKEN.match(self.text, self.pos).end()
        return int(tok)

    def end(self):
        if self.peek() is not None:
            self.fail(["end of line"])


def _pair(cur: _Cursor) -> tuple[int, int]:
    cur.take("(")
    a = cur.integer()
    cur.take(",")
    b = cur.integer()
    cur.take(")")
    return a, b


def _gen(cur: _Cursor) -> Gen:
    kind = cur.take(*KINDS)
    return Gen(kind, *_pair(cur))


def _word(cur: _Cursor, stop: tuple[str | None, ...]) -> Word:
    col = cur.col()
    if cur.peek() == "id":
        cur.take("id")
        cur.take("(")
        n = cur.integer()
        cur.take(")")
        return Word(n, ())
    gens = []
    while cur.peek() not in stop:
        gens.append(_gen(cur))
    if not gens:
        cur.fail(["'id'"] + [repr(k) for k in KINDS])
    try:
        return Word(gens[0].source, tuple(gens))
    except TangleError as e:
        raise DocumentTypeError(f"column {col}: {e}", cur.line) from None


def _cell(cur: _Cursor) -> TwoCell:
    bar = dagger = star = False
    if cur.peek() == "~":
        cur.take("~")
        bar = True
    tok = cur.peek()
    col = cur.col()
    try:
        if tok == "N":
            cur.take("N")
            cur.take("(")
            y = _gen(cur)
            cur.take(",")
            z = _gen(cur)
            cur.take(")")
            c = TwoCell("N", y=y, z=z)
        elif tok == "1":
            cur.integer()
            cur.take("{")
            w = _word(cur, ("}", None))
            cur.take("}")
            c = TwoCell("id", word=w)
        elif tok in BASE_KINDS:
            cur.take(tok)
            m, n = _pair(cur)
            c = TwoCell(tok, m, n)
        else:
            cur.fail(["'N'", "'1'"] + [repr(k) for k in BASE_KINDS])
    except (ValueError, TangleError) as e:
        if isinstance(e, (ParseError, DocumentTypeError)):
            raise
        raise DocumentTypeError(f"column {col}: {e}", cur.line) from None
    while cur.peek() in ("^d", "*"):
        if cur.take("^d", "*") == "*":
            star = not star
        else:
            dagger = not dagger
    return canonicalize(TwoCell(c.kind, c.m, c.n, c.y, c.z, c.word, bar=bar, dagger=dagger, star=star))


def parse_word(text: str) -> Word:
    cur = _Cursor(text, 1, 0)
    w = _word(cur, (None,))
    cur.end()
    return w


def parse_cell(text: str) -> TwoCell:
    cur = _Cursor(text, 1, 0)
    c = _cell(cur)
    cur.end()
    return c


@dataclass(frozen=True)
class MovieDocument:
    name: str
    movie: Movie
    frames: tuple[tuple[int, Word], ...] = ()  # (slices before the annotation, asserted word)


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_document(text: str) -> MovieDocument:
    name = None
    source = None
    slices: list[Slice] = []
    frames: list[tuple[int, Word]] = []
    current = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        stripped = body.lstrip()
        indent = len(body) - len(stripped)
        head = re.match(r"(movie|source|slice|frame)\b\s*:?", stripped)
        if head is None:
            raise ParseError("unknown line", ln, indent + 1, ["'movie'", "'source:'", "'slice:'", "'frame:'"])
        key = head.group(1)
        if key != "movie" and not head.group(0).rstrip().endswith(":"):
            raise ParseError(f"missing ':' after {key}", ln, indent + head.end() + 1, ["':'"])
        rest = stripped[head.end():]
        cur = _Cursor(rest, ln, indent + head.end())
        if key == "movie":
            if name is not None:
                raise ParseError("second movie header", ln, indent + 1, ["'source:'", "'slice:'", "'frame:'"])
            ident = rest.strip()
            if not _IDENT.match(ident):
                raise ParseError("bad movie name", ln, cur.col(), ["identifier"])
            name = ident
            continue
        if name is None:
            raise ParseError("document must start with a movie header", ln, indent + 1, ["'movie'"])
        if key == "source":
            if source is not None:
                raise ParseError("second source line", ln, indent + 1, ["'slice:'", "'frame:'"])
            source = _word(cur, (None,))
            cur.end()
            current = source
            continue
        if source is None:
            raise ParseError("source must come before slices and frames", ln, indent + 1, ["'source:'"])
        if key == "frame":
            w = _word(cur, (None,))
            cur.end()
            if w != current:
                raise DocumentTypeError(f"frame annotation {w} does not match the computed word {current}", ln)
            frames.append((len(slices), w))
            continue
        cur.take("[")
        u = _word(cur, ("]",))
        cur.take("]")
        c = _cell(cur)
        cur.take("[")
        v = _word(cur, ("]",))
        cur.take("]")
        cur.end()
        try:
            sl = Slice(u, c, v)
        except TangleError as e:
            raise DocumentTypeError(f"slice {len(slices)}: {e}", ln) from None
        if sl.source != current:
            raise DocumentTypeError(
                f"slice {len(slices)} acts on {sl.source} but the running word is {current}", ln)
        slices.append(sl)
        current = sl.target
    if name is None:
        raise ParseError("empty document", 1, 1, ["'movie'"])
    if source is None:
        raise ParseError("missing source line", len(text.splitlines()) + 1, 1, ["'source:'"])
    return MovieDocument(name, Movie(source, tuple(slices)), tuple(frames))


def parse_movie(text: str) -> Movie:
    return parse_document(text).movie


def serialize(doc: MovieDocument | Movie, name: str = "untitled") -> str:
    if isinstance(doc, Movie):
        doc = MovieDocument(name, doc)
    lines = [f"movie {doc.name}", f"source: {doc.movie.source}"]
    notes = {}
    for k, w in doc.frames:
        notes.setdefault(k, []).append(w)
    for w in notes.get(0, ()):
        lines.append(f"frame: {w}")
    for k, s in enumerate(doc.movie.slices, start=1):
        lines.append(f"slice: [{s.before}] {format_cell(s.cell)} [{s.after}]")
        for w in notes.get(k, ()):
            lines.append(f"frame: {w}")
    return "\n".join(lines) + "\n"


def movie_text(m: Movie, name: str = "untitled") -> str:
    return serialize(MovieDocument(name, m))


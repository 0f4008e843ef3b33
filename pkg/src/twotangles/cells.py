"""Generating 2-morphisms, whiskered slices and movies.

A movie is a vertical stack of slices ``[u] cell [v]``; frame k is the word
before slice k.  Decorations (bar, dagger, star) are flags on the cell and
are always kept in the canonical reduced form produced by `canonicalize`.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import IllFormed, TypeMismatch
from .words import (
    CAP, CUP, X, XB, Gen, Word, bar_word, compose, dual_word, identity, tensor_left, tensor_right,
)

BASE_KINDS = ("I", "E", "W", "II", "S0", "S1", "S2", "H", "T")
KIND_ORDER = {k: r for r, k in enumerate(BASE_KINDS + ("N", "id"))}


@dataclass(frozen=True)
class TwoCell:
    """A decorated generator.  N cells use `y`, `z`; identity cells use `word`."""

    kind: str
    m: int = 0
    n: int = 0
    y: Gen | None = None
    z: Gen | None = None
    word: Word | None = None
    bar: bool = False
    dagger: bool = False
    star: bool = False

    def __post_init__(self):
        if self.kind not in KIND_ORDER:
            raise ValueError(f"unknown cell kind {self.kind!r}")
        if self.kind == "N":
            _check_height_shift(self.y, self.z)
        elif self.kind == "id":
            if self.word is None:
                raise ValueError("identity cell needs a word")
        elif self.m < 0 or self.n < 0:
            raise ValueError("negative index")

    def key(self) -> tuple:
        y = (self.y.kind, self.y.left, self.y.right) if self.y else ()
        z = (self.z.kind, self.z.left, self.z.right) if self.z else ()
        w = (self.word.source, tuple((g.kind, g.left, g.right) for g in self.word.gens)) if self.word else ()
        return (KIND_ORDER[self.kind], self.m, self.n, y, z, w, self.bar, self.dagger, self.star)

    def __lt__(self, other: "TwoCell") -> bool:
        return self.key() < other.key()

    @property
    def source(self) -> Word:
        return cell_typing(self)[0]

    @property
    def target(self) -> Word:
        return cell_typing(self)[1]

    def max_index(self) -> int:
        if self.kind == "N":
            return max(self.y.left, self.y.right, self.z.left, self.z.right)
        if self.kind == "id":
            return self.word.max_index()
        return max(self.m, self.n)

    def __str__(self) -> str:
        return format_cell(self)


def _check_height_shift(y: Gen | None, z: Gen | None) -> None:
    if y is None or z is None:
        raise IllFormed("N needs two generators")
    # the generator Z sits entirely to the right of Y's output strands
    if z.left < y.left + y.b:
        raise IllFormed(f"N({y},{z}): need {z.left} >= {y.left + y.b}")
    if y.target != z.source:
        raise IllFormed(f"N({y},{z}): composite {y} {z} is ill-typed")


def height_shift_source(y: Gen, z: Gen) -> tuple[Gen, Gen]:
    """The pair (Z_{i',j}, Y_{m,n'}) forming the source of N_{Y,Z}."""
    i2 = z.left + y.a - y.b
    n2 = y.right + z.b - z.a
    return Gen(z.kind, i2, z.right), Gen(y.kind, y.left, n2)


def _w(*gs: Gen) -> Word:
    return Word(gs[0].source, gs)


def base_typing(c: TwoCell) -> tuple[Word, Word]:
    k, m, n = c.kind, c.m, c.n
    if k == "I":
        return identity(m + n), _w(Gen(CAP, m, n), Gen(CUP, m, n))
    if k == "E":
        return _w(Gen(CUP, m, n), Gen(CAP, m, n)), identity(m + n + 2)
    if k == "W":
        return _w(Gen(CAP, m, n)), _w(Gen(CAP, m, n), Gen(X, m, n))
    if k == "II":
        return identity(m + n + 2), _w(Gen(X, m, n), Gen(XB, m, n))
    if k in ("S0", "S1", "S2"):
        third = X if k == "S0" else XB
        mid = XB if k == "S2" else X
        src = _w(Gen(X, m, n + 1), Gen(mid, m + 1, n), Gen(third, m, n + 1))
        first = X if k == "S0" else XB
        second = XB if k == "S2" else X
        tgt = _w(Gen(first, m + 1, n), Gen(second, m, n + 1), Gen(X, m + 1, n))
        return src, tgt
    if k == "H":
        return _w(Gen(CAP, m, n + 1), Gen(X, m + 1, n)), _w(Gen(CAP, m + 1, n), Gen(XB, m, n + 1))
    if k == "T":
        return _w(Gen(CAP, m, n + 1), Gen(CUP, m + 1, n)), identity(m + n + 1)
    if k == "N":
        zs, ys = height_shift_source(c.y, c.z)
        return _w(zs, ys), _w(c.y, c.z)
    if k == "id":
        return c.word, c.word
    raise ValueError(k)


@lru_cache(maxsize=1 << 16)
def cell_typing(c: TwoCell) -> tuple[Word, Word]:
    """(source word, target word) of a decorated cell."""
    s, t = base_typing(replace(c, bar=False, dagger=False, star=False) if c.kind != "N" else
                       TwoCell("N", y=c.y, z=c.z))
    if c.bar:
        s, t = bar_word(s), bar_word(t)
    if c.dagger:
        s, t = dual_word(t), dual_word(s)
    if c.star:
        s, t = t, s
    return s, t


gen2_typing = cell_typing


def _dagger_height_shift(y: Gen, z: Gen) -> tuple[Gen, Gen]:
    # N^dagger_{Y_{m,n},Z_{i,j}} = N_{Y*_{m,n'},Z*_{i',j}}: the mirror image of
    # the source Z_{i',j} Y_{m,n'} read backwards
    zs, ys = height_shift_source(y, z)
    return ys.dual(), zs.dual()


def canonicalize(c: TwoCell) -> TwoCell:
    """Reduce decorations using the closure identifications (bar, then dagger, then star)."""
    k = c.kind
    bar, dag, star = c.bar, c.dagger, c.star
    if k == "id":
        w = c.word
        if bar:
            w = bar_word(w)
        if dag:
            w = dual_word(w)
        return TwoCell("id", word=w)
    if k == "N":
        y, z = c.y, c.z
        if bar:
            y, z = y.bar(), z.bar()
        if dag:
            y, z = _dagger_height_shift(y, z)
        return TwoCell("N", y=y, z=z, star=star)
    if k in ("I", "E", "T"):
        bar = False
    if dag and k in ("I", "E", "II"):
        dag, star = False, not star
    elif dag and k == "S0":
        dag, bar, star = False, not bar, not star
    elif dag and k in ("S1", "S2"):
        # S1^dagger = S2^*; applying dagger to both sides gives S2^dagger = S1^*
        dag, star = False, not star
        k = "S2" if k == "S1" else "S1"
    if (k, bar, dag, star) == (c.kind, c.bar, c.dagger, c.star):
        return c
    return TwoCell(k, c.m, c.n, bar=bar, dagger=dag, star=star)


canonicalize_decorations = canonicalize


def make(kind: str, m: int = 0, n: int = 0, *, bar=False, dagger=False, star=False) -> TwoCell:
    return canonicalize(TwoCell(kind, m, n, bar=bar, dagger=dagger, star=star))


def height_shift(y: Gen, z: Gen, *, star=False) -> TwoCell:
    return TwoCell("N", y=y, z=z, star=star)


def identity_cell(w: Word) -> TwoCell:
    return TwoCell("id", word=w)


def star_cell(c: TwoCell) -> TwoCell:
    if c.kind == "id":
        return c
    return canonicalize(replace(c, star=not c.star))


def bar_cell(c: TwoCell) -> TwoCell:
    if c.kind == "id":
        return TwoCell("id", word=bar_word(c.word))
    if c.kind == "N":
        return TwoCell("N", y=c.y.bar(), z=c.z.bar(), star=c.star)
    return canonicalize(replace(c, bar=not c.bar))


def dagger_cell(c: TwoCell) -> TwoCell:
    if c.kind == "id":
        return TwoCell("id", word=dual_word(c.word))
    if c.kind == "N":
        y, z = _dagger_height_shift(c.y, c.z)
        return TwoCell("N", y=y, z=z, star=c.star)
    return canonicalize(replace(c, dagger=not c.dagger))


def shift_cell(c: TwoCell, left: int = 0, right: int = 0) -> TwoCell:
    """A_left (x) c (x) A_right."""
    if left == right == 0:
        return c
    if c.kind == "N":
        return TwoCell("N", y=c.y.shifted(left, right), z=c.z.shifted(left, right), star=c.star)
    if c.kind == "id":
        return TwoCell("id", word=tensor_right(tensor_left(left, c.word), right))
    return replace(c, m=c.m + left, n=c.n + right)


def format_cell(c: TwoCell) -> str:
    if c.kind == "id":
        return "1{" + str(c.word) + "}"
    if c.kind == "N":
        core = f"N({c.y},{c.z})"
    else:
        core = f"{c.kind}({c.m},{c.n})"
    return ("~" if c.bar else "") + core + ("^d" if c.dagger else "") + ("*" if c.star else "")


# --------------------------------------------------------------------------
# slices and movies


def subword(f: Word, i: int, j: int) -> Word:
    """Generators i..j-1 of f as a word (keeps the right ambient object)."""
    if i == 0:
        src = f.source
    else:
        src = f.gens[i - 1].target
    return Word(src, f.gens[i:j])


@dataclass(frozen=True)
class Slice:
    before: Word
    cell: TwoCell
    after: Word

    def __post_init__(self):
        s, t = cell_typing(self.cell)
        if self.before.target != s.source:
            raise TypeMismatch(f"slice padding {self.before} ends at A_{self.before.target}, "
                               f"cell {format_cell(self.cell)} starts at A_{s.source}")
        if self.after.source != s.target:
            raise TypeMismatch(f"slice padding {self.after} starts at A_{self.after.source}, "
                               f"cell {format_cell(self.cell)} ends at A_{s.target}")

    @property
    def pos(self) -> int:
        return len(self.before.gens)

    @cached_property
    def source(self) -> Word:
        return compose(self.before, cell_typing(self.cell)[0], self.after)

    @cached_property
    def target(self) -> Word:
        return compose(self.before, cell_typing(self.cell)[1], self.after)

    def __str__(self) -> str:
        return f"[{self.before}] {format_cell(self.cell)} [{self.after}]"


def slice_at(frame: Word, pos: int, c: TwoCell) -> Slice:
    """Place cell c so that its source starts at generator `pos` of `frame`."""
    s = cell_typing(c)[0]
    end = pos + len(s.gens)
    if frame.gens[pos:end] != s.gens or (frame.objects()[pos] != s.source):
        raise TypeMismatch(f"{format_cell(c)} does not match frame {frame} at {pos}")
    return Slice(subword(frame, 0, pos), c, subword(frame, end, len(frame.gens)))


@dataclass(frozen=True)
class Movie:
    """A 2-morphism: `source` word followed by a vertical stack of slices."""

    source: Word
    slices: tuple[Slice, ...] = ()

    def __post_init__(self):
        w = self.source
        for k, s in enumerate(self.slices):
            if s.source != w:
                raise TypeMismatch(f"slice {k} expects frame {s.source}, got {w}")
            w = s.target
        object.__setattr__(self, "_target", w)

    @property
    def target(self) -> Word:
        return self._target

    def __len__(self) -> int:
        return len(self.slices)

    def frames(self) -> list[Word]:
        out = [self.source]
        for s in self.slices:
            out.append(s.target)
        return out

    def max_index(self) -> int:
        vals = [self.source.max_index(), self.target.max_index()]
        vals += [s.cell.max_index() for s in self.slices]
        vals += [s.source.max_index() for s in self.slices]
        return max(vals)

    def is_closed(self) -> bool:
        return self.source == identity(0) and self.target == identity(0)

    def __str__(self) -> str:
        lines = [f"source: {self.source}"] + [f"slice: {s}" for s in self.slices]
        return "\n".join(lines)


def identity_movie(f: Word) -> Movie:
    return Movie(f, ())


def single(c: TwoCell, before: Word | None = None, after: Word | None = None) -> Movie:
    s, _ = cell_typing(c)
    if before is None:
        before = identity(s.source)
    if after is None:
        after = identity(s.target)
    sl = Slice(before, c, after)
    return Movie(sl.source, (sl,))


def movie_from_cells(source: Word, placed: Iterable[tuple[int, TwoCell]]) -> Movie:
    """Build a movie by placing cells at generator offsets of the running frame."""
    w = source
    out = []
    for pos, c in placed:
        sl = slice_at(w, pos, c)
        out.append(sl)
        w = sl.target
    return Movie(source, tuple(out))


def vcompose(*ms: Movie) -> Movie:
    out = list(ms[0].slices)
    cur = ms[0].target
    for m in ms[1:]:
        if m.source != cur:
            raise TypeMismatch(f"vcompose: target {cur} differs from source {m.source}")
        out.extend(m.slices)
        cur = m.target
    return Movie(ms[0].source, tuple(out))


def whisker(u: Word, m: Movie, v: Word) -> Movie:
    if u.target != m.source.source or v.source != m.source.target:
        raise TypeMismatch(f"whisker: {u} | A_{m.source.source}..A_{m.source.target} | {v}")
    if not u.gens and not v.gens:
        return m
    sl = tuple(Slice(compose(u, s.before), s.cell, compose(s.after, v)) for s in m.slices)
    return Movie(compose(u, m.source, v), sl)


def whisker_left(u: Word, m: Movie) -> Movie:
    return whisker(u, m, identity(m.source.target))


def whisker_right(m: Movie, v: Word) -> Movie:
    return whisker(identity(m.source.source), m, v)


def hcompose(a: Movie, b: Movie) -> Movie:
    """Horizontal composite: a acts first (whiskered by b's source), then b."""
    if a.source.target != b.source.source:
        raise TypeMismatch(f"hcompose: A_{a.source.target} vs A_{b.source.source}")
    return vcompose(whisker_right(a, b.source), whisker_left(a.target, b))


def tensor_movie(left: int, m: Movie, right: int = 0) -> Movie:
    """A_left (x) m (x) A_right."""
    if left == right == 0:
        return m

    def sh(w):
        return tensor_right(tensor_left(left, w), right)

    sl = tuple(Slice(sh(s.before), shift_cell(s.cell, left, right), sh(s.after)) for s in m.slices)
    return Movie(sh(m.source), sl)


def star_movie(m: Movie) -> Movie:
    sl = tuple(Slice(s.before, star_cell(s.cell), s.after) for s in reversed(m.slices))
    return Movie(m.target, sl)


def dagger_movie(m: Movie) -> Movie:
    sl = tuple(Slice(dual_word(s.after), dagger_cell(s.cell), dual_word(s.before)) for s in reversed(m.slices))
    return Movie(dual_word(m.target), sl)


def bar_movie(m: Movie) -> Movie:
    sl = tuple(Slice(bar_word(s.before), bar_cell(s.cell), bar_word(s.after)) for s in m.slices)
    return Movie(bar_word(m.source), sl)


def apply_variant(m: Movie, variant: Sequence[str]) -> Movie:
    """Apply the named operations in order ("bar", "dagger", "star")."""
    for op in variant:
        m = {"bar": bar_movie, "dagger": dagger_movie, "star": star_movie}[op](m)
    return m


# --------------------------------------------------------------------------
# interchange


def _widths(s: Slice) -> tuple[int, int]:
    src, tgt = cell_typing(s.cell)
    return len(src.gens), len(tgt.gens)


def swap_sides(s1: Slice, s2: Slice) -> list[str]:
    """Which interchange swaps are legal for consecutive slices s1 then s2."""
    a2 = _widths(s2)[0]
    b1 = _widths(s1)[1]
    p1, p2 = s1.pos, s2.pos
    out = []
    if p2 + a2 <= p1:
        out.append("left")
    if p2 >= p1 + b1:
        out.append("right")
    return out


def swap_pair(s1: Slice, s2: Slice, side: str) -> tuple[Slice, Slice]:
    """Exchange the heights of two slices acting on disjoint parts of the middle frame."""
    a1, b1 = _widths(s1)
    a2, b2 = _widths(s2)
    p1, p2 = s1.pos, s2.pos
    if side == "left":
        if p2 + a2 > p1:
            raise TypeMismatch("left swap needs the later cell left of the earlier one")
        mid = s2.source  # = s1.target
        u2 = s2.before
        w = subword(mid, p2 + a2, p1)
        v1 = s1.after
        src2, tgt2 = cell_typing(s2.cell)
        src1 = cell_typing(s1.cell)[0]
        n1 = Slice(u2, s2.cell, compose(w, src1, v1))
        n2 = Slice(compose(u2, tgt2, w), s1.cell, v1)
        return n1, n2
    if side == "right":
        if p2 < p1 + b1:
            raise TypeMismatch("right swap needs the later cell right of the earlier one")
        mid = s2.source
        u1 = s1.before
        w = subword(mid, p1 + b1, p2)
        v2 = s2.after
        src1, tgt1 = cell_typing(s1.cell)
        tgt2 = cell_typing(s2.cell)[1]
        n1 = Slice(compose(u1, src1, w), s2.cell, v2)
        n2 = Slice(u1, s1.cell, compose(w, tgt2, v2))
        return n1, n2
    raise ValueError(side)


def _should_swap(s1: Slice, s2: Slice) -> bool:
    # Each accepted swap strictly lowers the vector of slice positions
    # lexicographically, which is what makes normalization terminate.
    a2 = _widths(s2)[0]
    return s2.pos < s1.pos and s2.pos + a2 <= s1.pos


def normal_form_swaps(m: Movie) -> tuple[Movie, list[tuple[int, str]]]:
    """Interchange normal form together with the swaps that produce it."""
    slices = [s for s in m.slices if s.cell.kind != "id"]
    if len(slices) != len(m.slices):
        # identity slices are dropped before any swap is recorded
        m = Movie(m.source, tuple(slices))
    swaps: list[tuple[int, str]] = []
    n = len(slices)
    guard = 64 * n * n + 64
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if _should_swap(slices[k], slices[k + 1]):
                slices[k], slices[k + 1] = swap_pair(slices[k], slices[k + 1], "left")
                swaps.append((k, "left"))
                changed = True
                guard -= 1
                if guard < 0:
                    raise RuntimeError("interchange normalization did not terminate")
    return Movie(m.source, tuple(slices)), swaps


def interchange_normal_form(m: Movie) -> Movie:
    return normal_form_swaps(m)[0]


def drop_identities(m: Movie) -> Movie:
    return Movie(m.source, tuple(s for s in m.slices if s.cell.kind != "id"))


def movie_key(m: Movie) -> tuple:
    """Literal (not normalized) structural key of a movie."""
    src = (m.source.source, m.source.gens)
    return (src, tuple((s.pos, s.cell.key()) for s in m.slices))


def canonical_key(m: Movie) -> tuple:
    return movie_key(interchange_normal_form(m))

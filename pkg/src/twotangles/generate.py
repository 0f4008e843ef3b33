"""Random words and movies, for property tests and sweeps."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .cells import BASE_KINDS, Movie, Slice, TwoCell, canonicalize, cell_typing, slice_at, star_movie, vcompose
from .relations import swap_cell
from .words import KINDS, Gen, Word, gens_applicable, identity


@dataclass(frozen=True)
class MovieConfig:
    max_object: int = 4
    max_length: int = 8  # generators per frame
    slices: int = 4
    source_length: int = 3


def random_word(rng: random.Random, source: int, length: int, max_object: int = 4) -> Word:
    """A random word of at most `length` generators staying within A_0..A_max_object."""
    gens = []
    n = source
    for _ in range(length):
        options = [g for g in gens_applicable(n) if g.target <= max_object]
        if not options:
            break
        g = rng.choice(options)
        gens.append(g)
        n = g.target
    return Word(source, tuple(gens))


@lru_cache(maxsize=None)
def _base_cells(obj: int) -> dict:
    """Canonical decorated base cells whose source starts at A_obj, keyed by source gens."""
    out: dict = {}
    seen = set()
    for kind in BASE_KINDS:
        for m in range(obj + 1):
            for n in range(obj + 1 - m):
                for bar in (False, True):
                    for dagger in (False, True):
                        for star in (False, True):
                            c = canonicalize(TwoCell(kind, m, n, bar=bar, dagger=dagger, star=star))
                            if c in seen:
                                continue
                            s, _ = cell_typing(c)
                            if s.source != obj:
                                continue
                            seen.add(c)
                            out.setdefault(s.gens, []).append(c)
    return {k: tuple(sorted(v)) for k, v in out.items()}


def placements(frame: Word, max_object: int = 4, max_length: int | None = None) -> list[tuple[int, TwoCell]]:
    """Every (position, cell) whose source occurs in `frame` at that position."""
    objs = frame.objects()
    out = []
    gs = frame.gens
    for pos in range(len(gs) + 1):
        table = _base_cells(objs[pos])
        for ln in range(0, 4):
            if pos + ln > len(gs):
                break
            for c in table.get(tuple(gs[pos:pos + ln]), ()):
                out.append((pos, c))
        if pos + 1 < len(gs):
            for first_left in (True, False):
                c = swap_cell(gs[pos], gs[pos + 1], first_left)
                if c is not None and (pos, c) not in out:
                    out.append((pos, c))
    keep = []
    for pos, c in out:
        s, t = cell_typing(c)
        if max(Word(t.source, t.gens).objects()) > max_object:
            continue
        if max_length is not None and len(gs) - len(s.gens) + len(t.gens) > max_length:
            continue
        keep.append((pos, c))
    return keep


def random_movie(rng: random.Random, cfg: MovieConfig = MovieConfig(), source: Word | None = None) -> Movie:
    if source is None:
        n = rng.randrange(min(cfg.max_object, 2) + 1)
        source = random_word(rng, n, rng.randrange(cfg.source_length + 1), cfg.max_object)
    frame = source
    out: list[Slice] = []
    for _ in range(cfg.slices):
        opts = placements(frame, cfg.max_object, cfg.max_length)
        if not opts:
            break
        pos, c = rng.choice(opts)
        sl = slice_at(frame, pos, c)
        out.append(sl)
        frame = sl.target
    return Movie(source, tuple(out))


def random_closed_movie(rng: random.Random, cfg: MovieConfig = MovieConfig()) -> Movie:
    """A closed movie: a random movie out of the empty frame followed by its reverse."""
    m = random_movie(rng, cfg, identity(0))
    return vcompose(m, star_movie(m))


def random_gen(rng: random.Random, max_index: int = 3) -> Gen:
    return Gen(rng.choice(KINDS), rng.randrange(max_index + 1), rng.randrange(max_index + 1))

"""Movie equality by rewriting with the relation catalog.

Search nodes are interchange normal forms.  A relation applies to any set of
slices that interchange can gather into a contiguous window; the window is
then compared with catalog patterns after trimming whiskers and undoing a
uniform index shift, so one catalog entry serves every placement.

Every step recorded in a path is literal: `replay` reproduces the target
movie exactly, swap by swap.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Union

from .cells import (
    Movie, Slice, TwoCell, height_shift_source, movie_key, normal_form_swaps, subword, swap_pair,
    swap_sides, tensor_movie, whisker,
)
from .errors import BoundaryMismatch, NotApplicable
from .relations import VARIANTS, RelationInstance, all_instances, instantiate, swap_cell
from .words import KINDS, Word, bar_word, dual_word, identity

# --------------------------------------------------------------------------
# steps


@dataclass(frozen=True)
class InterchangeSwap:
    """Exchange slices k and k+1; `side` says where the later cell sits."""

    k: int
    side: str

    def inverse(self) -> "InterchangeSwap":
        return InterchangeSwap(self.k, "right" if self.side == "left" else "left")

    def __str__(self) -> str:
        return f"swap\t{self.k}\t{self.side}"


@dataclass(frozen=True)
class RelationStep:
    """Replace the window `pattern` starting at slice `start` by `replacement`.

    Both movies are full-width (whiskers included).  The window equals the
    instance side shifted by `shift` and whiskered by `u`, `v`, up to
    interchange inside the window.
    """

    instance: RelationInstance
    direction: str
    start: int
    pattern: Movie
    replacement: Movie
    u: Word
    v: Word
    shift: tuple[int, int] = (0, 0)

    @property
    def length(self) -> int:
        return len(self.pattern)

    def inverse(self) -> "RelationStep":
        back = "backward" if self.direction == "forward" else "forward"
        return RelationStep(self.instance, back, self.start, self.replacement, self.pattern,
                            self.u, self.v, self.shift)

    def __str__(self) -> str:
        r = self.instance
        return (f"relation\t{r.id}\t{r.param_text}\t{r.variant_text}\t{self.direction}\t"
                f"start={self.start}\tshift={self.shift[0]},{self.shift[1]}\t"
                f"u={self.u}\tv={self.v}")


RewriteStep = Union[InterchangeSwap, RelationStep]


@dataclass(frozen=True)
class Equal:
    path: tuple = ()

    @property
    def relation_steps(self) -> int:
        return sum(isinstance(s, RelationStep) for s in self.path)

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Unknown:
    explored: int
    depth: int

    def __bool__(self) -> bool:
        return False


Verdict = Union[Equal, Unknown]


def frame_at(m: Movie, k: int) -> Word:
    return m.source if k == 0 else m.slices[k - 1].target


def apply_rewrite(m: Movie, s: RewriteStep) -> Movie:
    if isinstance(s, InterchangeSwap):
        if not 0 <= s.k < len(m.slices) - 1:
            raise NotApplicable(f"no slices {s.k},{s.k + 1}")
        s1, s2 = m.slices[s.k], m.slices[s.k + 1]
        if s.side not in swap_sides(s1, s2):
            raise NotApplicable(f"slices {s.k},{s.k + 1} do not commute on the {s.side}")
        n1, n2 = swap_pair(s1, s2, s.side)
        sl = m.slices[:s.k] + (n1, n2) + m.slices[s.k + 2:]
        return Movie(m.source, sl)
    k = s.length
    if not 0 <= s.start <= len(m.slices) - k:
        raise NotApplicable(f"window {s.start}+{k} outside a movie of {len(m.slices)} slices")
    if frame_at(m, s.start) != s.pattern.source or m.slices[s.start:s.start + k] != s.pattern.slices:
        raise NotApplicable(f"relation {s.instance.id} does not match at slice {s.start}")
    sl = m.slices[:s.start] + s.replacement.slices + m.slices[s.start + k:]
    return Movie(m.source, sl)


def replay(m: Movie, path) -> Movie:
    for s in path:
        m = apply_rewrite(m, s)
    return m


def invert_path(path) -> list:
    return [s.inverse() for s in reversed(path)]


# --------------------------------------------------------------------------
# shift normalization


def margins(m: Movie) -> tuple[int, int] | None:
    """Untouched strands on the left and right of every generator and cell."""
    lo_l = lo_r = None

    def see(a, b):
        nonlocal lo_l, lo_r
        lo_l = a if lo_l is None else min(lo_l, a)
        lo_r = b if lo_r is None else min(lo_r, b)

    for g in m.source.gens:
        see(g.left, g.right)
    for s in m.slices:
        for g in s.target.gens:
            see(g.left, g.right)
        c = s.cell
        if c.kind == "N":
            for g in (c.y, c.z, *height_shift_source(c.y, c.z)):
                see(g.left, g.right)
        elif c.kind != "id":
            see(c.m, c.n)
    if lo_l is None:
        return None
    return lo_l, lo_r


def unshift(m: Movie, lr: tuple[int, int]) -> Movie:
    return tensor_movie(-lr[0], m, -lr[1])


def shape(c: TwoCell) -> tuple:
    """Index-free part of a cell, used to prune window gathering."""
    if c.kind == "N":
        return ("N", c.y.kind, c.z.kind, c.star)
    return (c.kind, c.bar, c.dagger, c.star)


def _nf(m: Movie) -> Movie:
    return normal_form_swaps(m)[0]


@dataclass(frozen=True)
class Rule:
    instance: RelationInstance
    direction: str
    pattern: Movie        # shifted so the whole rule has zero margins
    replacement: Movie
    offset: tuple[int, int]  # pattern's own margins inside the rule


@dataclass
class Catalog:
    bound: int
    by_key: dict = field(default_factory=lambda: defaultdict(list))
    empty: list = field(default_factory=list)  # patterns that are identities on identity words
    shapes: set = field(default_factory=set)
    max_len: int = 0
    instances: int = 0

    def add(self, r: RelationInstance) -> None:
        self.instances += 1
        lr = margins(r.lhs)
        lr2 = margins(r.rhs)
        if lr is None and lr2 is None:
            return
        if lr is None or lr2 is None:
            joint = lr or lr2
        else:
            joint = (min(lr[0], lr2[0]), min(lr[1], lr2[1]))
        lhs, rhs = unshift(r.lhs, joint), unshift(r.rhs, joint)
        for direction, pat, rep in (("forward", lhs, rhs), ("backward", rhs, lhs)):
            own = margins(pat)
            if own is None:
                self.empty.append(Rule(r, direction, pat, rep, (0, 0)))
                continue
            nf = unshift(_nf(pat), own)
            key = movie_key(nf)
            bucket = self.by_key[key]
            if any(rule.replacement == rep and rule.offset == own for rule in bucket):
                continue
            bucket.append(Rule(r, direction, pat, rep, own))
            shapes = sorted(shape(s.cell) for s in pat.slices)
            self.max_len = max(self.max_len, len(shapes))
            _add_submultisets(self.shapes, shapes)


def _add_submultisets(out: set, items: list) -> None:
    n = len(items)
    if n > 12:
        raise ValueError("pattern too long for shape pruning")
    for mask in range(1, 1 << n):
        out.add(tuple(items[i] for i in range(n) if mask >> i & 1))


@lru_cache(maxsize=4)
def build_catalog(bound: int = 1) -> Catalog:
    cat = Catalog(bound)
    for r in all_instances(bound):
        cat.add(r)
    # the unbounded height-shift families are matched on demand
    n_shapes = sorted({("N", a, b, st) for a in KINDS for b in KINDS for st in (False, True)})
    for a in n_shapes:
        for b in n_shapes:
            cat.shapes.add(tuple(sorted((a, b))))
            for c in n_shapes:
                cat.shapes.add(tuple(sorted((a, b, c))))
    cat.max_len = max(cat.max_len, 3)
    return cat


def _hexagon_params(w: Word) -> dict | None:
    g = w.gens
    if len(g) != 3 or g[1].left < g[0].left + g[0].b or g[2].left < g[1].left + g[1].b:
        return None
    return {"Y": g[0], "Y'": g[1], "Y''": g[2]}


@lru_cache(maxsize=1 << 14)
def _dynamic_matches(core: Movie) -> tuple:
    """Height-shift relations (families 15 and 16) whose side is literally `core`."""
    sl = core.slices
    out = []
    if len(sl) == 2:
        c1, c2 = sl[0].cell, sl[1].cell
        if (c1.y, c1.z) == (c2.y, c2.z) and c1.star != c2.star and sl[0].pos == sl[1].pos:
            inst = instantiate(15, {"form": "b" if c1.star else "a", "Y": c1.y, "Z": c1.z})
            if inst.lhs == core:
                out.append((inst, "forward", inst.lhs, inst.rhs))
    elif len(sl) == 3:
        seen = set()
        for v in VARIANTS:
            for w in (core.source, core.target):
                for t in (w, bar_word(w), dual_word(w), dual_word(bar_word(w))):
                    p = _hexagon_params(t)
                    if p is None or (v, t) in seen:
                        continue
                    seen.add((v, t))
                    inst = instantiate(16, p, v)
                    if inst.lhs == core:
                        out.append((inst, "forward", inst.lhs, inst.rhs))
                    elif inst.rhs == core:
                        out.append((inst, "backward", inst.rhs, inst.lhs))
    return tuple(out)


# --------------------------------------------------------------------------
# window matching


def _window_rules(cat: Catalog, frame: Word, block: list[Slice]) -> Iterator[tuple]:
    """(rule, l, r, joint shift) for every catalog pattern the window matches."""
    m = Movie(frame, tuple(block))
    nf = _nf(m)
    lmax = min(s.pos for s in block)
    rmax = min(len(s.after.gens) for s in block)
    n = len(frame.gens)
    seen_inst = set()
    for l in range(lmax + 1):
        for r in range(rmax + 1):
            core = Movie(subword(frame, l, n - r), tuple(
                Slice(subword(s.before, l, len(s.before.gens)), s.cell,
                      subword(s.after, 0, len(s.after.gens) - r)) for s in nf.slices))
            own = margins(core)
            key = movie_key(unshift(core, own))
            for rule in cat.by_key.get(key, ()):
                joint = (own[0] - rule.offset[0], own[1] - rule.offset[1])
                if joint[0] >= 0 and joint[1] >= 0:
                    seen_inst.add((rule.instance.id, rule.instance.params, rule.instance.variant))
                    yield rule, l, r, joint
    if len(block) in (2, 3) and all(s.cell.kind == "N" for s in block):
        core = Movie(subword(frame, lmax, n - rmax), tuple(
            Slice(subword(s.before, lmax, len(s.before.gens)), s.cell,
                  subword(s.after, 0, len(s.after.gens) - rmax)) for s in block))
        for inst, direction, pat, rep in _dynamic_matches(core):
            if (inst.id, inst.params, inst.variant) in seen_inst:
                continue
            yield Rule(inst, direction, pat, rep, (0, 0)), lmax, rmax, (0, 0)


@lru_cache(maxsize=1 << 15)
def _placed(u: Word, rep: Movie, joint: tuple[int, int], v: Word) -> Movie:
    return whisker(u, tensor_movie(joint[0], rep, joint[1]), v)


def _make_step(rule: Rule, start: int, frame: Word, block: tuple, l: int, r: int,
               joint: tuple[int, int]) -> RelationStep:
    n = len(frame.gens)
    u, v = subword(frame, 0, l), subword(frame, n - r, n)
    rep = _placed(u, rule.replacement, joint, v)
    return RelationStep(rule.instance, rule.direction, start, Movie(frame, block), rep, u, v, joint)


def _insertions(cat: Catalog, m: Movie, max_slices: int | None) -> Iterator[RelationStep]:
    frames = m.frames()
    for f, fr in enumerate(frames):
        n = len(fr.gens)
        objs = fr.objects()
        for l in range(n + 1):
            # empty subword at position l
            s = objs[l]
            u, v = subword(fr, 0, l), subword(fr, l, n)
            for rule in cat.empty:
                k0 = rule.pattern.source.source
                if max_slices is not None and len(m.slices) + len(rule.replacement) > max_slices:
                    continue
                for a in range(s - k0 + 1):
                    joint = (a, s - k0 - a)
                    rep = _placed(u, rule.replacement, joint, v)
                    yield RelationStep(rule.instance, rule.direction, f, Movie(fr, ()), rep, u, v, joint)
            if l + 2 <= n:
                yield from _pair_insertions(m, f, fr, l, max_slices)
            for r in range(n - l):
                core = Movie(subword(fr, l, n - r), ())
                own = margins(core)
                for rule in cat.by_key.get(movie_key(unshift(core, own)), ()):
                    if max_slices is not None and len(m.slices) + len(rule.replacement) > max_slices:
                        continue
                    joint = (own[0] - rule.offset[0], own[1] - rule.offset[1])
                    if joint[0] < 0 or joint[1] < 0:
                        continue
                    yield _make_step(rule, f, fr, (), l, r, joint)


def _pair_insertions(m: Movie, f: int, fr: Word, l: int, max_slices: int | None) -> Iterator[RelationStep]:
    """Insert a height shift followed by its inverse at generators l, l+1 (family 15 read backwards)."""
    if max_slices is not None and len(m.slices) + 2 > max_slices:
        return
    n = len(fr.gens)
    g1, g2 = fr.gens[l], fr.gens[l + 1]
    done = set()
    for first_left in (True, False):
        c = swap_cell(g1, g2, first_left)
        if c is None or c in done:
            continue
        done.add(c)
        inst = instantiate(15, {"form": "b" if c.star else "a", "Y": c.y, "Z": c.z})
        u, v = subword(fr, 0, l), subword(fr, l + 2, n)
        yield RelationStep(inst, "backward", f, Movie(fr, ()), whisker(u, inst.lhs, v), u, v, (0, 0))


def applicable_rewrites(m: Movie, catalog_bound: int = 1, max_slices: int | None = None) -> list:
    """Swaps and relation steps applicable to contiguous windows of `m` as it stands."""
    cat = build_catalog(catalog_bound)
    out: list = []
    sl = m.slices
    for k in range(len(sl) - 1):
        for side in swap_sides(sl[k], sl[k + 1]):
            out.append(InterchangeSwap(k, side))
    for start in range(len(sl)):
        frame = frame_at(m, start)
        for k in range(1, min(cat.max_len, len(sl) - start) + 1):
            block = list(sl[start:start + k])
            if tuple(sorted(shape(s.cell) for s in block)) not in cat.shapes:
                continue
            for rule, l, r, joint in _window_rules(cat, frame, block):
                if max_slices is not None and len(sl) - k + len(rule.replacement) > max_slices:
                    continue
                out.append(_make_step(rule, start, frame, tuple(block), l, r, joint))
    out.extend(_insertions(cat, m, max_slices))
    return out


# --------------------------------------------------------------------------
# gathering slices into windows


def _bring(arr: list, start: int, k: int, j: int):
    """Move arr[j] to just below the block arr[start:start+k]; None if blocked."""
    arr = list(arr)
    swaps = []

    def swap(q):
        sides = swap_sides(arr[q][1], arr[q + 1][1])
        if not sides:
            return False
        n1, n2 = swap_pair(arr[q][1], arr[q + 1][1], sides[0])
        arr[q], arr[q + 1] = (arr[q + 1][0], n1), (arr[q][0], n2)
        swaps.append(InterchangeSwap(q, sides[0]))
        return True

    q = j
    while q > start + k:
        if swap(q - 1):
            q -= 1
            continue
        # the slice in the way has to go above the block instead
        mark = len(swaps)
        saved = list(arr)
        p = q - 1
        while p > start:
            if not swap(p - 1):
                break
            p -= 1
        if p > start:
            del swaps[mark:]
            arr[:] = saved
            return None
        start += 1
    return arr, start, swaps


def gather(m: Movie, max_len: int, shapes: set) -> Iterator[tuple]:
    """(arrangement slices, start, length, swaps) for every gatherable window."""
    base = [(i, s) for i, s in enumerate(m.slices)]
    seen = set()

    def rec(arr, start, k, swaps, members, shp):
        if members in seen:
            return
        seen.add(members)
        yield [s for _, s in arr], start, k, swaps
        if k >= max_len:
            return
        for j in range(start + k, len(arr)):
            sid, s = arr[j]
            new_shp = tuple(sorted(shp + (shape(s.cell),)))
            if new_shp not in shapes:
                continue
            if members | {sid} in seen:
                continue
            got = _bring(arr, start, k, j)
            if got is None:
                continue
            arr2, start2, sw = got
            yield from rec(arr2, start2, k + 1, swaps + sw, members | {sid}, new_shp)

    for i in range(len(base)):
        sh = (shape(base[i][1].cell),)
        if sh in shapes:
            yield from rec(base, i, 1, [], frozenset({base[i][0]}), sh)


def neighbours(m: Movie, cat: Catalog, max_slices: int | None = None) -> Iterator[tuple[Movie, list]]:
    """(normal-form result, literal steps from m) for every single relation application."""
    for arr, start, k, swaps in gather(m, cat.max_len, cat.shapes):
        block = arr[start:start + k]
        cur = Movie(m.source, tuple(arr)) if swaps else m
        frame = frame_at(cur, start)
        for rule, l, r, joint in _window_rules(cat, frame, block):
            if max_slices is not None and len(arr) - k + len(rule.replacement) > max_slices:
                continue
            step = _make_step(rule, start, frame, tuple(block), l, r, joint)
            out = apply_rewrite(cur, step)
            nf, nsw = normal_form_swaps(out)
            if len(nf.slices) != len(out.slices):
                continue
            yield nf, list(swaps) + [step] + [InterchangeSwap(q, side) for q, side in nsw]
    for step in _insertions(cat, m, max_slices):
        out = apply_rewrite(m, step)
        nf, nsw = normal_form_swaps(out)
        if len(nf.slices) != len(out.slices):
            continue
        yield nf, [step] + [InterchangeSwap(q, side) for q, side in nsw]


# --------------------------------------------------------------------------
# equality


def canonical_key(m: Movie) -> tuple:
    return movie_key(normal_form_swaps(m)[0])


def _normalize(m: Movie) -> tuple[Movie, list]:
    nf, sw = normal_form_swaps(m)
    if len(nf.slices) != len(m.slices):
        # identity slices carry no swaps; drop them literally first
        raise NotApplicable("movies with identity slices must be cleaned with drop_identities")
    return nf, [InterchangeSwap(q, side) for q, side in sw]


def shorten(m: Movie, cat: Catalog) -> tuple[Movie, list]:
    """Greedily apply slice-removing relations until none applies.

    `m` must already be in interchange normal form.  At each round the
    shortest result wins, ties broken by structural key, so the outcome is
    deterministic.
    """
    path: list = []
    while m.slices:
        best = None
        for nf, steps in neighbours(m, cat, len(m.slices) - 1):
            cand = (len(nf.slices), movie_key(nf))
            if best is None or cand < best[0]:
                best = (cand, nf, steps)
        if best is None:
            break
        _, m, steps = best
        path += steps
    return m, path


def decide_equal(a: Movie, b: Movie, depth: int = 3, node_budget: int = 20000,
                 catalog_bound: int = 1, growth: int = 2, simplify: bool = True) -> Verdict:
    """Bidirectional breadth-first search for a rewrite path from a to b.

    `depth` bounds the relation steps taken by the search, `node_budget`
    the number of distinct normal forms visited, and `growth` how many
    slices an intermediate movie may gain over the longer input.  With
    `simplify`, unless b is one step from a, both sides are first
    shortened greedily; those steps are part of the returned path but do
    not count against `depth`.
    """
    if a.source != b.source or a.target != b.target:
        raise BoundaryMismatch(f"{a.source} => {a.target} vs {b.source} => {b.target}")
    na, pa = _normalize(a)
    nb, pb = _normalize(b)
    ka, kb = movie_key(na), movie_key(nb)
    if ka == kb:
        return Equal(tuple(pa + invert_path(pb)))
    cat = build_catalog(catalog_bound)
    max_slices = max(len(a), len(b)) + growth
    if simplify and depth >= 1:
        # one step to b is cheaper to look for than shortening both sides;
        # only neighbours with as many slices as b can match it
        for nf, steps in neighbours(na, cat, len(nb.slices)):
            if movie_key(nf) == kb:
                return Equal(tuple(pa + steps + invert_path(pb)))
        na, ga = shorten(na, cat)
        nb, gb = shorten(nb, cat)
        pa, pb = pa + ga, pb + gb
        ka, kb = movie_key(na), movie_key(nb)
        if ka == kb:
            return Equal(tuple(pa + invert_path(pb)))
    # parent maps: key -> (parent key, steps from parent nf to this nf)
    parents = ({ka: None}, {kb: None})
    movies = ({ka: na}, {kb: nb})
    frontiers = ([ka], [kb])
    levels = [0, 0]
    explored = 2
    while levels[0] + levels[1] < depth:
        # grow the smaller frontier; ties go to the forward side
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        if not frontiers[side]:
            break
        nxt = []
        par, other = parents[side], parents[1 - side]
        for key in sorted(frontiers[side]):
            for nf, steps in neighbours(movies[side][key], cat, max_slices):
                nk = movie_key(nf)
                if nk in par:
                    continue
                par[nk] = (key, steps)
                movies[side][nk] = nf
                nxt.append(nk)
                explored += 1
                if nk in other:
                    return Equal(tuple(_assemble(parents, nk, side, pa, pb)))
                if explored >= node_budget:
                    return Unknown(explored, levels[0] + levels[1])
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
        levels[side] += 1
    return Unknown(explored, levels[0] + levels[1])


def _chain(par: dict, key) -> list:
    steps: list = []
    while par[key] is not None:
        key, st = par[key]
        steps = st + steps
    return steps


def _assemble(parents, meet, side, pa, pb) -> list:
    fwd = _chain(parents[0], meet)
    bwd = _chain(parents[1], meet)
    return pa + fwd + invert_path(bwd) + invert_path(pb)


def equal_depth(v: Verdict) -> int | None:
    return v.relation_steps if isinstance(v, Equal) else None

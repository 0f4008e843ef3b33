"""Euler characteristic and components of the surface a movie traces out.

Time is the Morse function: births (I) and deaths (I*) are index 0 and 2
critical points, saddles (E and E*) index 1; every other generator is an
isotopy of the frame and contributes nothing.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cells import Movie, Slice, canonicalize, cell_typing
from .errors import NotClosed
from .words import CAP, CUP, Word, word_boundary_matching


@dataclass(frozen=True)
class SurfaceInvariants:
    euler: int
    components: int | None
    closed: bool
    births: int
    deaths: int
    saddles: int
    component_euler: tuple[int, ...] = ()

    def genus(self) -> tuple[int, ...]:
        """Genus of each component; only meaningful for orientable closed surfaces."""
        if not self.closed:
            raise NotClosed("genus needs a closed surface")
        out = []
        for chi in self.component_euler:
            if chi % 2:
                raise ValueError(f"odd Euler characteristic {chi}: the surface is not orientable")
            out.append((2 - chi) // 2)
        return tuple(out)


def morse_counts(m: Movie) -> tuple[int, int, int]:
    births = deaths = saddles = 0
    for s in m.slices:
        c = canonicalize(s.cell)
        if c.kind == "I":
            if c.star:
                deaths += 1
            else:
                births += 1
        elif c.kind == "E":
            saddles += 1
    return births, deaths, saddles


def euler_characteristic(m: Movie) -> int:
    b, d, s = morse_counts(m)
    return word_boundary_matching(m.source).arc_count + b + d - s


# --------------------------------------------------------------------------
# components


class _UF:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def frame_strands(f: Word) -> tuple[dict, dict, dict]:
    """Split a word's 1-manifold into components.

    Returns (edge label -> component, component -> is_closed, vertex ->
    component).  Vertices are (level, strand); an edge label is (generator
    index, tag) with tag ("p", k) for the k-th strand passing the
    generator, ("x", 0|1) for crossing strands, "cap" or "cup".
    """
    uf = _UF()
    edges = {}
    n = f.source
    for v in range(n):
        uf.add((0, v))
    for h, g in enumerate(f.gens):
        i = g.left
        top = [(h, p) for p in range(n)]
        bot_n = g.target
        bot = [(h + 1, p) for p in range(bot_n)]
        for v in bot:
            uf.add(v)
        if g.kind == CAP:
            pairs = [(top[p], bot[p if p < i else p + 2], ("p", p)) for p in range(n)]
            edges[(h, "cap")] = (bot[i], bot[i + 1])
        elif g.kind == CUP:
            pairs = [(top[p if p < i else p + 2], bot[p], ("p", p)) for p in range(bot_n)]
            edges[(h, "cup")] = (top[i], top[i + 1])
        else:
            pairs = [(top[p], bot[p], ("p", p)) for p in range(n) if p not in (i, i + 1)]
            edges[(h, ("x", 0))] = (top[i], bot[i + 1])
            edges[(h, ("x", 1))] = (top[i + 1], bot[i])
        for a, b, tag in pairs:
            edges[(h, tag)] = (a, b)
        n = bot_n
    for a, b in edges.values():
        uf.union(a, b)
    vroot = {v: uf.find(v) for v in uf.parent}
    open_roots = {vroot[(0, p)] for p in range(f.source)}
    open_roots |= {vroot[(len(f.gens), p)] for p in range(f.target)}
    closed = {r: r not in open_roots for r in set(vroot.values())}
    comp = {lab: vroot[a] for lab, (a, b) in edges.items()}
    return comp, closed, vroot


def _context_map(sl: Slice) -> dict:
    """Generator indices of the slice source that survive unchanged into its target."""
    src, tgt = cell_typing(sl.cell)
    ls, lt = len(src.gens), len(tgt.gens)
    pos = sl.pos
    return {h: (h if h < pos else h - ls + lt)
            for h in range(len(sl.source.gens)) if h < pos or h >= pos + ls}


def _circle_graph(m: Movie) -> tuple[_UF, list]:
    """Union-find over (frame, circle) nodes, plus the critical points located on them.

    Circles in consecutive frames are linked when they share a generator
    outside the slice's cell.  Each frame word fixes its own strand
    connectivity, so which circles meet at a saddle is always determined.
    """
    uf = _UF()
    comps = [frame_strands(f) for f in m.frames()]
    crit = []  # (node, +1 for a birth or death, -1 for a saddle)
    for k, (_, closed, _) in enumerate(comps):
        for r, is_closed in closed.items():
            if is_closed:
                uf.add((k, r))
    for k, sl in enumerate(m.slices):
        a_comp, a_closed, a_v = comps[k]
        b_comp, b_closed, _ = comps[k + 1]
        cmap = _context_map(sl)
        linked_a, linked_b = set(), set()
        for (h, tag), ra in a_comp.items():
            rb = b_comp.get((cmap[h], tag)) if h in cmap else None
            if rb is not None and a_closed[ra] and b_closed[rb]:
                uf.union((k, ra), (k + 1, rb))
                linked_a.add(ra)
                linked_b.add(rb)
        lone_a = sorted(r for r, cl in a_closed.items() if cl and r not in linked_a)
        lone_b = sorted(r for r, cl in b_closed.items() if cl and r not in linked_b)
        c = canonicalize(sl.cell)
        if c.kind == "I" and not c.star:
            crit.extend(((k + 1, rb), 1) for rb in lone_b)
        elif c.kind == "I":
            crit.extend(((k, ra), 1) for ra in lone_a)
        else:
            # an isotopy never strands a circle; keep any leftovers attached
            for ra in lone_a:
                for rb in lone_b:
                    uf.union((k, ra), (k + 1, rb))
        if c.kind == "E":
            r = a_v[(sl.pos, c.m)]
            if a_closed[r]:
                crit.append(((k, r), -1))
    return uf, crit


def component_count(m: Movie) -> int:
    if not m.is_closed():
        raise NotClosed("component count needs source and target 1_0")
    uf, _ = _circle_graph(m)
    return len({uf.find(x) for x in uf.parent})


def _component_euler(m: Movie) -> tuple[int, ...]:
    uf, crit = _circle_graph(m)
    roots = sorted({uf.find(x) for x in uf.parent})
    chi = {r: 0 for r in roots}
    for node, w in crit:
        chi[uf.find(node)] += w
    return tuple(chi[r] for r in roots)


def surface_invariants(m: Movie) -> SurfaceInvariants:
    b, d, s = morse_counts(m)
    chi = euler_characteristic(m)
    closed = m.is_closed()
    if closed:
        per = _component_euler(m)
        return SurfaceInvariants(chi, len(per), True, b, d, s, per)
    return SurfaceInvariants(chi, None, False, b, d, s)


def genus(m: Movie, assume_orientable: bool = False) -> tuple[int, ...]:
    if not assume_orientable:
        raise ValueError("genus is only defined here for surfaces asserted orientable")
    return surface_invariants(m).genus()


# --------------------------------------------------------------------------
# invariance under rewriting


@dataclass
class InvarianceReport:
    trials: int = 0
    steps_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _signature(m: Movie) -> tuple:
    return (euler_characteristic(m), component_count(m) if m.is_closed() else None)


def verify_invariance(m: Movie, trials: int = 50, seed: int = 0, catalog_bound: int = 1,
                      max_slices: int | None = None) -> InvarianceReport:
    """Walk `trials` random rewrite steps from m, checking the invariants after each."""
    from .rewrite import RelationStep, apply_rewrite, applicable_rewrites

    rng = random.Random(seed)
    rep = InvarianceReport()
    want = _signature(m)
    cap = max_slices if max_slices is not None else len(m.slices) + 4
    cur = m
    for _ in range(trials):
        steps = applicable_rewrites(cur, catalog_bound, max_slices=cap)
        if not steps:
            break
        step = steps[rng.randrange(len(steps))]
        nxt = apply_rewrite(cur, step)
        rep.trials += 1
        rep.steps_checked += 1
        got = _signature(nxt)
        if got != want:
            label = str(step.instance) if isinstance(step, RelationStep) else str(step)
            rep.violations.append((label, want, got))
        cur = nxt
    return rep

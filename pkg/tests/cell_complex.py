"""Brute-force oracle: build an explicit 2-complex for a movie's surface.

Each frame is subdivided into vertices (level, strand) and one edge per
strand per generator.  Between two frames the strands outside the cell
sweep out squares; inside the cell's box the surface is assembled from
its local model (arc pairs bound disks, a saddle is one disk through all
four arcs, a birth or death caps its circle).  V - E + F and connected
components are then counted directly.
"""
from __future__ import annotations

from dataclasses import dataclass

from twotangles.cells import Movie, canonicalize, cell_typing
from twotangles.words import CAP, CUP, Word


def _frame_graph(k: int, f: Word):
    verts = set()
    edges = {}
    n = f.source
    verts |= {(k, 0, p) for p in range(n)}
    for h, g in enumerate(f.gens):
        i = g.left
        m = g.target
        verts |= {(k, h + 1, p) for p in range(m)}
        if g.kind == CAP:
            for p in range(n):
                edges[(k, h, "p", p)] = ((k, h, p), (k, h + 1, p if p < i else p + 2))
            edges[(k, h, "cap")] = ((k, h + 1, i), (k, h + 1, i + 1))
        elif g.kind == CUP:
            for p in range(m):
                edges[(k, h, "p", p)] = ((k, h, p if p < i else p + 2), (k, h + 1, p))
            edges[(k, h, "cup")] = ((k, h, i), (k, h, i + 1))
        else:
            for p in range(n):
                if p not in (i, i + 1):
                    edges[(k, h, "p", p)] = ((k, h, p), (k, h + 1, p))
            edges[(k, h, "x0")] = ((k, h, i), (k, h + 1, i + 1))
            edges[(k, h, "x1")] = ((k, h, i + 1), (k, h + 1, i))
        n = m
    return verts, edges


class _UF:
    def __init__(self):
        self.p = {}

    def find(self, x):
        self.p.setdefault(x, x)
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        self.p[self.find(a)] = self.find(b)


def _box_components(verts, edges, lo, hi, k):
    """Local components of a frame inside levels lo..hi: list of (labels, is_circle)."""
    uf = _UF()
    box_v = [v for v in verts if lo <= v[1] <= hi]
    for v in box_v:
        uf.find(v)
    for lab, (a, b) in edges.items():
        if lo <= lab[1] < hi:
            uf.union(a, b)
    groups = {}
    for v in box_v:
        groups.setdefault(uf.find(v), set())
    for v in box_v:
        labels = groups[uf.find(v)]
        if v[1] == lo:
            labels.add(("b", v[2]))
        if v[1] == hi:
            labels.add(("t", v[2]))
    return [(frozenset(ls), not ls) for ls in groups.values()]


@dataclass
class Complex:
    vertices: int
    edges: int
    faces: int
    components: int

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces


def build_complex(m: Movie) -> Complex:
    frames = m.frames()
    graphs = [_frame_graph(k, f) for k, f in enumerate(frames)]
    V = set()
    E = {}
    for verts, edges in graphs:
        V |= verts
        E.update(edges)
    faces = 0
    for k, sl in enumerate(m.slices):
        c = canonicalize(sl.cell)
        src, tgt = cell_typing(c)
        ls, lt = len(src.gens), len(tgt.gens)
        pos = sl.pos
        av, ae = graphs[k]
        bv, be = graphs[k + 1]

        vertical = set()
        for (_, h, p) in av:
            if h <= pos:
                vertical.add(((k, h, p), (k + 1, h, p)))
            if h >= pos + ls:
                vertical.add(((k, h, p), (k + 1, h - ls + lt, p)))
        for v in vertical:
            E[("v",) + v] = v
        # squares swept by generators outside the box
        for lab in ae:
            h = lab[1]
            if h < pos or h >= pos + ls:
                twin = (k + 1, h if h < pos else h - ls + lt) + lab[2:]
                assert twin in be, (lab, twin)
                faces += 1
        a_loc = _box_components(av, ae, pos, pos + ls, k)
        b_loc = _box_components(bv, be, pos, pos + lt, k + 1)
        a_arcs = [ls_ for ls_, circ in a_loc if not circ]
        b_arcs = [ls_ for ls_, circ in b_loc if not circ]
        a_circ = sum(circ for _, circ in a_loc)
        b_circ = sum(circ for _, circ in b_loc)
        if c.kind == "I":
            assert (a_circ, b_circ) == ((1, 0) if c.star else (0, 1)), c
            faces += 1
        else:
            assert a_circ == b_circ == 0, (c, a_circ, b_circ)
        # disks: connected clusters of arcs sharing box endpoints
        uf = _UF()
        nodes = [("a", i) for i in range(len(a_arcs))] + [("b", i) for i in range(len(b_arcs))]
        for nd in nodes:
            uf.find(nd)
        for i, la in enumerate(a_arcs):
            for j, lb in enumerate(b_arcs):
                if la & lb:
                    uf.union(("a", i), ("b", j))
        faces += len({uf.find(nd) for nd in nodes})
    uf = _UF()
    for v in V:
        uf.find(v)
    for a, b in E.values():
        uf.union(a, b)
    comps = len({uf.find(v) for v in V})
    return Complex(len(V), len(E), faces, comps)

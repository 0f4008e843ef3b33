"""Objects A_n, the four 1-morphism generators, and typed generator words.

A word is stored source-to-target: ``Word(2, (X(0,0), cup(0,0)))`` is the
composite "X_{0,0} then cup_{0,0}" from A_2 to A_0.  An empty word is the
identity 1_n and remembers its object n.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import TypeMismatch

X, XB, CUP, CAP = "X", "Xb", "cup", "cap"
KINDS = (X, XB, CUP, CAP)

# input / output strand counts a(.), b(.)
ARITY_IN = {X: 2, XB: 2, CUP: 2, CAP: 0}
ARITY_OUT = {X: 2, XB: 2, CUP: 0, CAP: 2}
_DUAL_KIND = {X: XB, XB: X, CUP: CAP, CAP: CUP}
_BAR_KIND = {X: XB, XB: X, CUP: CUP, CAP: CAP}


@dataclass(frozen=True, slots=True, order=True)
class Gen:
    """One generator Y_{left,right}: `left` strands pass on its left, `right` on its right."""

    kind: str
    left: int
    right: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.left < 0 or self.right < 0:
            raise ValueError(f"negative index in {self}")

    @property
    def a(self) -> int:
        return ARITY_IN[self.kind]

    @property
    def b(self) -> int:
        return ARITY_OUT[self.kind]

    @property
    def source(self) -> int:
        return self.left + self.right + ARITY_IN[self.kind]

    @property
    def target(self) -> int:
        return self.left + self.right + ARITY_OUT[self.kind]

    def shifted(self, left: int = 0, right: int = 0) -> "Gen":
        return Gen(self.kind, self.left + left, self.right + right)

    def dual(self) -> "Gen":
        return Gen(_DUAL_KIND[self.kind], self.left, self.right)

    def bar(self) -> "Gen":
        if self.kind in (CUP, CAP):
            return self
        return Gen(_BAR_KIND[self.kind], self.left, self.right)

    def __str__(self) -> str:
        return f"{self.kind}({self.left},{self.right})"


def gen_typing(g: Gen) -> tuple[int, int]:
    return g.source, g.target


@dataclass(frozen=True, slots=True, order=True)
class Word:
    """A 1-morphism A_source -> A_target of the tangle 2-category."""

    source: int
    gens: tuple[Gen, ...] = ()

    def __post_init__(self):
        if self.source < 0:
            raise ValueError("negative object")
        n = self.source
        for k, g in enumerate(self.gens):
            if g.source != n:
                raise TypeMismatch(f"generator {k} ({g}) expects A_{g.source}, got A_{n}")
            n = g.target

    @property
    def target(self) -> int:
        return self.gens[-1].target if self.gens else self.source

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, k):
        return self.gens[k]

    def is_identity(self) -> bool:
        return not self.gens

    def objects(self) -> list[int]:
        """Object sizes between generators: len(self)+1 entries."""
        out = [self.source]
        for g in self.gens:
            out.append(g.target)
        return out

    def max_index(self) -> int:
        return max((max(g.left, g.right) for g in self.gens), default=0)

    def __str__(self) -> str:
        if not self.gens:
            return f"id({self.source})"
        return " ".join(str(g) for g in self.gens)


def identity(n: int) -> Word:
    return Word(n, ())


def word(*gens: Gen, source: int | None = None) -> Word:
    """Build a word from generators; `source` is only needed when `gens` is empty."""
    if not gens:
        if source is None:
            raise ValueError("empty word needs an explicit source object")
        return Word(source, ())
    if source is not None and gens[0].source != source:
        raise TypeMismatch(f"word starts at A_{gens[0].source}, not A_{source}")
    return Word(gens[0].source, tuple(gens))


def from_gens(gens: Sequence[Gen], source: int) -> Word:
    return Word(source, tuple(gens))


def compose(*ws: Word) -> Word:
    """Composite in diagrammatic order: compose(f, g) is f then g."""
    if not ws:
        raise ValueError("compose needs at least one word")
    out = ws[0]
    gens = list(out.gens)
    n = out.target
    for w in ws[1:]:
        if w.source != n:
            raise TypeMismatch(f"cannot compose: target A_{n} vs source A_{w.source}")
        gens.extend(w.gens)
        n = w.target
    return Word(ws[0].source, tuple(gens))


def tensor_left(n: int, f: Word) -> Word:
    """A_n (x) f: every left subscript grows by n."""
    if n == 0:
        return f
    return Word(f.source + n, tuple(g.shifted(left=n) for g in f.gens))


def tensor_right(f: Word, n: int) -> Word:
    """f (x) A_n: every right subscript grows by n."""
    if n == 0:
        return f
    return Word(f.source + n, tuple(g.shifted(right=n) for g in f.gens))


def tensor_object_word(n: int, f: Word, side: str = "left") -> Word:
    if side == "left":
        return tensor_left(n, f)
    if side == "right":
        return tensor_right(f, n)
    raise ValueError(side)


def pad(left: int, f: Word, right: int) -> Word:
    return tensor_right(tensor_left(left, f), right)


def dual_word(f: Word) -> Word:
    return Word(f.target, tuple(g.dual() for g in reversed(f.gens)))


def bar_word(f: Word) -> Word:
    return Word(f.source, tuple(g.bar() for g in f.gens))


def find_subword(f: Word, pattern: Sequence[Gen]) -> list[int]:
    """Start offsets where `pattern` occurs as a contiguous run of generators."""
    k = len(pattern)
    gs = f.gens
    if k == 0:
        return list(range(len(gs) + 1))
    first = pattern[0]
    return [p for p in range(len(gs) - k + 1) if gs[p] == first and tuple(gs[p:p + k]) == tuple(pattern)]


@dataclass(frozen=True)
class BoundaryMatching:
    """Endpoint pairing of the planar 1-manifold a word draws.

    Endpoints are ("s", k) on the source object and ("t", k) on the target
    object.  `bottom_arcs` pair two source points, `top_arcs` two target
    points and `through_arcs` a source point with a target point.
    """

    bottom_arcs: tuple[tuple[int, int], ...]
    top_arcs: tuple[tuple[int, int], ...]
    through_arcs: tuple[tuple[int, int], ...]
    closed_loops: int

    @property
    def arc_count(self) -> int:
        return len(self.bottom_arcs) + len(self.top_arcs) + len(self.through_arcs)


class _Sweep:
    """Strand bookkeeping shared by the boundary matching and the invariants.

    Every position of the running object holds the id of the partial arc
    passing through it.  An arc records its fixed endpoints (at most two).
    """

    def __init__(self, n: int):
        self.ends: dict[int, list] = {}
        self.pos: list[int] = []
        self.loops = 0
        self._next = 0
        for k in range(n):
            a = self._new()
            self.ends[a].append(("s", k))
            self.pos.append(a)

    def _new(self) -> int:
        a = self._next
        self._next += 1
        self.ends[a] = []
        return a

    def step(self, g: Gen) -> None:
        i = g.left
        if g.kind in (X, XB):
            self.pos[i], self.pos[i + 1] = self.pos[i + 1], self.pos[i]
        elif g.kind == CAP:
            a = self._new()
            self.pos[i:i] = [a, a]
        else:
            a, b = self.pos[i], self.pos[i + 1]
            del self.pos[i:i + 2]
            if a == b:
                self.loops += 1
                del self.ends[a]
            else:
                self.ends[a].extend(self.ends.pop(b))
                self.pos = [a if p == b else p for p in self.pos]


def word_boundary_matching(f: Word) -> BoundaryMatching:
    sw = _Sweep(f.source)
    for g in f.gens:
        sw.step(g)
    for k, a in enumerate(sw.pos):
        sw.ends[a].append(("t", k))
    bottom, top, through = [], [], []
    for pts in sw.ends.values():
        (s1, k1), (s2, k2) = sorted(pts)
        if s1 == s2 == "s":
            bottom.append((k1, k2))
        elif s1 == s2 == "t":
            top.append((k1, k2))
        else:
            through.append((k1, k2))
    return BoundaryMatching(tuple(sorted(bottom)), tuple(sorted(top)), tuple(sorted(through)), sw.loops)


def gens_applicable(n: int, max_index: int | None = None) -> list[Gen]:
    """All generators whose source is A_n (indices optionally bounded)."""
    out = []
    for kind in KINDS:
        total = n - ARITY_IN[kind]
        for i in range(total + 1):
            j = total - i
            if max_index is not None and max(i, j) > max_index:
                continue
            out.append(Gen(kind, i, j))
    return out


def parse_gens(items: Iterable[tuple[str, int, int]]) -> tuple[Gen, ...]:
    return tuple(Gen(k, i, j) for k, i, j in items)

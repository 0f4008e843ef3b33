"""The thirty movie-move relations, their parameter sweeps and variants.

Each schema enumerates admissible parameter assignments up to an index
bound and builds the two sides as movies.  Builders never patch a failed
composite: an ill-typed side raises `InternalTypingFailure`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator

from .cells import (
    Movie, Slice, TwoCell, cell_typing, dagger_movie, bar_movie, format_cell, identity_movie,
    make, star_movie, subword,
)
from .errors import BadParameters, InternalTypingFailure, TangleError
from .words import CAP, CUP, X, XB, Gen, Word, compose, identity

# --------------------------------------------------------------------------
# small term-building vocabulary


def Xg(i, j):
    return Gen(X, i, j)


def Xbg(i, j):
    return Gen(XB, i, j)


def capg(i, j):
    return Gen(CAP, i, j)


def cupg(i, j):
    return Gen(CUP, i, j)


def cell(kind: str, m: int, n: int, deco: str = "") -> TwoCell:
    """`deco` letters: b = bar, d = dagger, s = star."""
    if m < 0 or n < 0:
        raise BadParameters(f"{kind}({m},{n})")
    return make(kind, m, n, bar="b" in deco, dagger="d" in deco, star="s" in deco)


def N(y: Gen, z: Gen, star: bool = False) -> TwoCell:
    return TwoCell("N", y=y, z=z, star=star)


def Ns(y: Gen, z: Gen) -> TwoCell:
    return TwoCell("N", y=y, z=z, star=True)


def bar_kind(g: Gen) -> Gen:
    return g.bar()


def hs(*items) -> Slice:
    """Horizontal composite of generators and exactly one cell, as a slice."""
    before: list[Gen] = []
    after: list[Gen] = []
    the_cell = None
    for it in items:
        gens = it.gens if isinstance(it, Word) else (it,) if isinstance(it, Gen) else None
        if gens is None:
            if the_cell is not None:
                raise BadParameters("slice with two cells")
            the_cell = it
        elif the_cell is None:
            before.extend(gens)
        else:
            after.extend(gens)
    src, tgt = cell_typing(the_cell)
    bw = Word(before[0].source, tuple(before)) if before else identity(src.source)
    aw = Word(after[0].source, tuple(after)) if after else identity(src.target)
    return Slice(bw, the_cell, aw)


def mv(*slices: Slice) -> Movie:
    return Movie(slices[0].source, tuple(slices))


def wd(*gens: Gen) -> Word:
    return Word(gens[0].source, tuple(gens))


# --------------------------------------------------------------------------
# height shifting between distant generators


def swap_cell(g1: Gen, g2: Gen, first_left: bool | None = None) -> TwoCell | None:
    """The N-type cell exchanging the heights of adjacent distant generators g1 g2.

    A cup followed by a cap at the same place can be read either way round;
    `first_left` says whether g1 is the spatially left one.
    """
    left_ok = g2.left >= g1.left + g1.b
    right_ok = g1.left >= g2.left + g2.a
    if left_ok and right_ok and first_left is not None:
        left_ok = first_left
        right_ok = not first_left
    if left_ok:
        # g1 lies left of g2: the pair is the target of N_{g1,g2}
        return N(g1, g2, star=True)
    if right_ok:
        y = Gen(g2.kind, g2.left, g2.right - g1.b + g1.a)
        z = Gen(g1.kind, g1.left - g2.a + g2.b, g1.right)
        if y.right < 0 or z.left < 0:
            return None
        return N(y, z)
    return None


def swap_slice(frame: Word, k: int, first_left: bool | None = None) -> Slice:
    c = swap_cell(frame.gens[k], frame.gens[k + 1], first_left)
    if c is None:
        raise BadParameters(f"generators {k},{k+1} of {frame} are not distant")
    src = cell_typing(c)[0]
    if src.gens != frame.gens[k:k + 2]:
        raise InternalTypingFailure(f"swap cell {format_cell(c)} does not fit {frame} at {k}")
    return Slice(subword(frame, 0, k), c, subword(frame, k + 2, len(frame.gens)))


def transport(frame: Word, k: int, steps: int, direction: int,
              mover_left: bool | None = None) -> tuple[list[Slice], Word, int]:
    """Move the generator at offset k by `steps` places (direction +1 later, -1 earlier).

    `mover_left` records whether the moving generator lies spatially left
    of the ones it passes.
    """
    out = []
    for _ in range(steps):
        j = k if direction > 0 else k - 1
        first_left = None if mover_left is None else (mover_left if direction > 0 else not mover_left)
        sl = swap_slice(frame, j, first_left)
        out.append(sl)
        frame = sl.target
        k += direction
    return out, frame, k


def place(frame: Word, pos: int, c: TwoCell) -> Slice:
    src = cell_typing(c)[0]
    end = pos + len(src.gens)
    if frame.gens[pos:end] != src.gens or frame.objects()[pos] != src.source:
        raise BadParameters(f"{format_cell(c)} does not fit {frame} at {pos}")
    return Slice(subword(frame, 0, pos), c, subword(frame, end, len(frame.gens)))


def shifted(c: TwoCell, dl: int, dr: int) -> TwoCell:
    if c.m + dl < 0 or c.n + dr < 0:
        raise BadParameters("negative shifted index")
    return TwoCell(c.kind, c.m + dl, c.n + dr, bar=c.bar, dagger=c.dagger, star=c.star)


def _y_side(y: Gen, c: TwoCell, obj: int) -> str:
    """Where Y (placed just before c) sits relative to c's strands."""
    if y.left + y.b <= c.m:
        return "left"
    if y.left >= obj - c.n:
        return "right"
    raise BadParameters(f"{y} overlaps {format_cell(c)}")


def naturality(c: TwoCell, y: Gen, form: str) -> tuple[Movie, Movie]:
    """Sliding a distant generator Y through the cell c.

    `c` and `y` describe the configuration with Y just before c's source.
    form "before": Y starts before the block; form "after": Y starts after it.
    """
    src, tgt = cell_typing(c)
    obj = src.source
    if y.target != obj:
        raise BadParameters("Y does not end where the cell starts")
    side = _y_side(y, c, obj)
    delta = y.a - y.b
    left = side == "left"
    c2 = shifted(c, delta, 0) if left else shifted(c, 0, delta)
    ls, lt = len(src.gens), len(tgt.gens)
    if form == "before":
        frame = Word(y.source, (y,) + src.gens)
        lhs, f1, _ = transport(frame, 0, ls, +1, left)
        lhs.append(place(f1, 0, c2))
        r0 = place(frame, 1, c)
        rhs_rest, _, _ = transport(r0.target, 0, lt, +1, left)
        return Movie(frame, tuple(lhs)), Movie(frame, (r0, *rhs_rest))
    if form == "after":
        # Y after the block: build the frame by pushing Y through the source
        f0 = Word(y.source, (y,) + src.gens)
        _, frame, _ = transport(f0, 0, ls, +1, left)
        lhs, f1, _ = transport(frame, ls, ls, -1, left)
        lhs.append(place(f1, 1, c))
        r0 = place(frame, 0, c2)
        rhs_rest, _, _ = transport(r0.target, lt, lt, -1, left)
        return Movie(frame, tuple(lhs)), Movie(frame, (r0, *rhs_rest))
    raise ValueError(form)


# --------------------------------------------------------------------------
# schemas

Params = dict


@dataclass(frozen=True)
class RelationSchema:
    id: int
    name: str
    enumerate: Callable[[int], Iterable[Params]]
    build: Callable[[Params], tuple[Movie, Movie]]


@dataclass(frozen=True)
class RelationInstance:
    id: int
    params: tuple
    variant: tuple[str, ...]
    lhs: Movie
    rhs: Movie

    @property
    def param_text(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params) or "-"

    @property
    def variant_text(self) -> str:
        return "+".join(self.variant) or "plain"

    def __str__(self) -> str:
        return f"R{self.id}[{self.param_text}]{{{self.variant_text}}}"


VARIANTS: tuple[tuple[str, ...], ...] = (
    (), ("bar",), ("dagger",), ("star",),
    ("bar", "dagger"), ("bar", "star"), ("dagger", "star"), ("bar", "dagger", "star"),
)


def _mn(bound: int) -> Iterator[Params]:
    for m, n in product(range(bound + 1), repeat=2):
        yield {"m": m, "n": n}


def _with(forms, base: Callable[[int], Iterable[Params]]):
    def enum(bound):
        for p in base(bound):
            for f in forms:
                yield {"form": f, **p}
    return enum


def _r1(p):
    m, n = p["m"], p["n"]
    return mv(hs(cell("W", m, n)), hs(cell("W", m, n, "s"))), identity_movie(wd(capg(m, n)))


def _r2(p):
    m, n = p["m"], p["n"]
    return mv(hs(cell("W", m, n, "s")), hs(cell("W", m, n))), identity_movie(wd(capg(m, n), Xg(m, n)))


def _r3(p):
    m, n = p["m"], p["n"]
    return mv(hs(cell("II", m, n)), hs(cell("II", m, n, "s"))), identity_movie(identity(m + n + 2))


def _r4(p):
    m, n = p["m"], p["n"]
    return mv(hs(cell("II", m, n, "s")), hs(cell("II", m, n))), identity_movie(wd(Xg(m, n), Xbg(m, n)))


def _r5(p):
    m, n, i = p["m"], p["n"], p["i"]
    s = cell(f"S{i}", m, n)
    ss = cell(f"S{i}", m, n, "s")
    if p["form"] == "a":
        lhs = mv(hs(s), hs(ss))
    else:
        lhs = mv(hs(ss), hs(s))
    return lhs, identity_movie(lhs.source)


def _s_cell(v: str, m: int, n: int, deco: str = "") -> TwoCell:
    """v is "S0".."S2" or "~S0".."~S2" (barred)."""
    if v.startswith("~"):
        return cell(v[1:], m, n, "b" + deco)
    return cell(v, m, n, deco)


S_VARIANTS = ("S0", "S1", "S2", "~S0", "~S1", "~S2")


def _zam_z(kind: str, j: int, k: int) -> TwoCell:
    # Z_{Y;j,k} = S_{0;j,k} for Y = X, barred S_{2;j,k} for Y = Xbar
    return cell("S0", j, k) if kind == X else cell("S2", j, k, "b")


def _r6(p):
    m, n, v = p["m"], p["n"], p["Z"]
    z = _s_cell(v, m, n + 1)
    a_, b_, c_ = (g.kind for g in cell_typing(z)[0].gens)

    def A(i, j):
        return Gen(a_, i, j)

    def B(i, j):
        return Gen(b_, i, j)

    def C(i, j):
        return Gen(c_, i, j)

    lhs = mv(
        hs(z, Xg(m + 2, n), Xg(m + 1, n + 1), Xg(m, n + 2)),
        hs(C(m + 1, n + 1), B(m, n + 2), _zam_z(a_, m + 1, n), Xg(m, n + 2)),
        hs(C(m + 1, n + 1), Ns(B(m, n + 2), Xg(m + 2, n)), Xg(m + 1, n + 1), A(m + 2, n), Xg(m, n + 2)),
        hs(C(m + 1, n + 1), Xg(m + 2, n), B(m, n + 2), Xg(m + 1, n + 1), N(Xg(m, n + 2), A(m + 2, n))),
        hs(C(m + 1, n + 1), Xg(m + 2, n), _zam_z(b_, m, n + 1), A(m + 2, n)),
        hs(_zam_z(c_, m + 1, n), Xg(m, n + 2), B(m + 1, n + 1), A(m + 2, n)),
        hs(Xg(m + 2, n), Xg(m + 1, n + 1), N(Xg(m, n + 2), C(m + 2, n)), B(m + 1, n + 1), A(m + 2, n)),
    )
    rhs = mv(
        hs(A(m, n + 2), B(m + 1, n + 1), Ns(C(m, n + 2), Xg(m + 2, n)), Xg(m + 1, n + 1), Xg(m, n + 2)),
        hs(A(m, n + 2), B(m + 1, n + 1), Xg(m + 2, n), _zam_z(c_, m, n + 1)),
        hs(A(m, n + 2), _zam_z(b_, m + 1, n), Xg(m, n + 2), C(m + 1, n + 1)),
        hs(Ns(A(m, n + 2), Xg(m + 2, n)), Xg(m + 1, n + 1), B(m + 2, n), Xg(m, n + 2), C(m + 1, n + 1)),
        hs(Xg(m + 2, n), A(m, n + 2), Xg(m + 1, n + 1), N(Xg(m, n + 2), B(m + 2, n)), C(m + 1, n + 1)),
        hs(Xg(m + 2, n), _zam_z(a_, m, n + 1), B(m + 2, n), C(m + 1, n + 1)),
        hs(Xg(m + 2, n), Xg(m + 1, n + 1), Xg(m, n + 2), _s_cell(v, m + 1, n)),
    )
    return lhs, rhs


def _r7(p):
    m, n = p["m"], p["n"]
    if p["form"] == "a":
        lhs = mv(
            hs(capg(m + 1, n), cell("II", m, n + 1), Xbg(m + 1, n), Xg(m, n + 1)),
            hs(cell("H", m, n, "bs"), Xbg(m, n + 1), Xbg(m + 1, n), Xg(m, n + 1)),
            hs(capg(m, n + 1), Xbg(m + 1, n), cell("S1", m, n, "b")),
            hs(capg(m, n + 1), cell("II", m + 1, n, "bs"), Xbg(m, n + 1), Xbg(m + 1, n)),
            hs(cell("W", m, n + 1, "bs"), Xbg(m + 1, n)),
        )
        rhs = mv(hs(cell("W", m + 1, n, "bs"), Xg(m, n + 1)), hs(cell("H", m, n, "bs")))
    else:
        lhs = mv(
            hs(capg(m + 1, n), cell("II", m, n + 1), Xg(m + 1, n), Xg(m, n + 1)),
            hs(cell("H", m, n, "bs"), Xbg(m, n + 1), Xg(m + 1, n), Xg(m, n + 1)),
            hs(capg(m, n + 1), Xbg(m + 1, n), cell("S2", m, n, "b")),
            hs(capg(m, n + 1), cell("II", m + 1, n, "bs"), Xg(m, n + 1), Xbg(m + 1, n)),
            hs(cell("W", m, n + 1, "s"), Xbg(m + 1, n)),
        )
        rhs = mv(hs(cell("W", m + 1, n, "s"), Xg(m, n + 1)), hs(cell("H", m, n, "bs")))
    return lhs, rhs


def _r8(p):
    m, n = p["m"], p["n"]
    return mv(hs(cell("T", m, n, "s")), hs(cell("T", m, n))), identity_movie(identity(m + n + 1))


def _r9(p):
    m, n = p["m"], p["n"]
    lhs = mv(hs(cell("T", m, n)), hs(cell("T", m, n, "s")))
    return lhs, identity_movie(lhs.source)


def _r10(p):
    m, n = p["m"], p["n"]
    lhs = mv(
        hs(capg(m, n), cell("T", m + 1, n, "d")),
        hs(Ns(capg(m, n), capg(m + 2, n)), cupg(m + 1, n + 1)),
        hs(capg(m, n), cell("T", m, n + 1)),
    )
    return lhs, identity_movie(wd(capg(m, n)))


def _r11(p):
    m, n = p["m"], p["n"]
    h, hs_ = cell("H", m, n), cell("H", m, n, "s")
    lhs = mv(hs(h), hs(hs_)) if p["form"] == "a" else mv(hs(hs_), hs(h))
    return lhs, identity_movie(lhs.source)


def _r12(p):
    m, n = p["m"], p["n"]
    if p["form"] == "a":
        lhs = mv(
            hs(capg(m + 1, n), cell("H", m, n, "d")),
            hs(cell("W", m + 1, n, "bs"), cupg(m, n + 1)),
            hs(cell("T", m, n, "ds")),
        )
        rhs = mv(
            hs(cell("H", m, n, "bs"), cupg(m + 1, n)),
            hs(capg(m, n + 1), cell("W", m + 1, n, "d")),
            hs(cell("T", m, n)),
        )
    else:
        lhs = mv(
            hs(capg(m, n + 1), cell("H", m, n, "bds")),
            hs(cell("W", m, n + 1, "bs"), cupg(m + 1, n)),
            hs(cell("T", m, n)),
        )
        rhs = mv(
            hs(cell("H", m, n), cupg(m, n + 1)),
            hs(capg(m + 1, n), cell("W", m, n + 1, "d")),
            hs(cell("T", m, n, "ds")),
        )
    return lhs, rhs


def _r13(p):
    m, n = p["m"], p["n"]
    lhs = mv(
        hs(capg(m, n + 2), cell("H", m + 1, n, "d")),
        hs(Ns(capg(m, n + 2), Xbg(m + 2, n)), cupg(m + 1, n + 1)),
        hs(Xbg(m, n), cell("T", m, n + 1)),
    )
    rhs = mv(
        hs(cell("H", m, n + 1), cupg(m + 2, n)),
        hs(capg(m + 1, n + 1), Ns(Xbg(m, n + 2), cupg(m + 2, n))),
        hs(cell("T", m + 1, n), Xbg(m, n)),
    )
    return lhs, rhs


# relation 14 tables: (A_i, B_i, Z_i, Z~_i)
_R14 = {
    0: (X, X, ("S0", "s"), ("S1", "b")),
    1: (X, XB, ("S2", "bs"), ("S0", "b")),
    2: (XB, XB, ("S1", "bs"), ("S2", "")),
}


def _r14_J(kind: str, j: int, k: int) -> TwoCell:
    return cell("H", j, k, "bs") if kind == X else cell("H", j, k, "s")


def _r14(p):
    m, n, i = p["m"], p["n"], p["i"]
    a_, b_, (zk, zd), (tk, td) = _R14[i]
    abar = XB if a_ == X else X

    def A(j, k):
        return Gen(a_, j, k)

    def Ab(j, k):
        return Gen(abar, j, k)

    def B(j, k):
        return Gen(b_, j, k)

    # the fourth left-hand factor is read as J_{A;m+1,n}: its source must be
    # the cap-crossing pair cap_{m+2,n} A_{m+1,n+1} left by the third factor
    lhs = mv(
        hs(cell("H", m + 1, n, "b"), A(m, n + 2), B(m + 1, n + 1)),
        hs(capg(m + 2, n), cell(zk, m, n + 1, zd)),
        hs(N(B(m, n), capg(m + 2, n)), A(m + 1, n + 1), Xg(m, n + 2)),
        hs(B(m, n), _r14_J(a_, m + 1, n), Xg(m, n + 2)),
        hs(B(m, n), capg(m + 1, n + 1), N(Xg(m, n + 2), Ab(m + 2, n))),
    )
    rhs = mv(
        hs(capg(m + 1, n + 1), N(A(m, n + 2), Xbg(m + 2, n)), B(m + 1, n + 1)),
        hs(_r14_J(a_, m, n + 1), Xbg(m + 2, n), B(m + 1, n + 1)),
        hs(capg(m, n + 2), cell(tk, m + 1, n, td)),
        hs(Ns(capg(m, n + 2), B(m + 2, n)), Xbg(m + 1, n + 1), Ab(m + 2, n)),
        hs(B(m, n), cell("H", m, n + 1, "b"), Ab(m + 2, n)),
    )
    return lhs, rhs


GEN_KINDS = (X, XB, CAP, CUP)


def _all_gens(bound: int) -> Iterator[Gen]:
    for k in GEN_KINDS:
        for i, j in product(range(bound + 1), repeat=2):
            yield Gen(k, i, j)


def _enum15(bound):
    for y in _all_gens(bound):
        for z in _all_gens(bound):
            if z.left >= y.left + y.b and y.target == z.source:
                for f in ("a", "b"):
                    yield {"form": f, "Y": y, "Z": z}


def _r15(p):
    c = N(p["Y"], p["Z"])
    lhs = mv(hs(c), hs(Ns(p["Y"], p["Z"]))) if p["form"] == "a" else mv(hs(Ns(p["Y"], p["Z"])), hs(c))
    return lhs, identity_movie(lhs.source)


def _enum16(bound):
    for g1 in _all_gens(bound):
        for g2 in _all_gens(bound):
            if g2.source != g1.target or g2.left < g1.left + g1.b:
                continue
            for g3 in _all_gens(bound):
                if g3.source != g2.target or g3.left < g2.left + g2.b:
                    continue
                yield {"Y": g1, "Y'": g2, "Y''": g3}


def _r16(p):
    f = Word(p["Y"].source, (p["Y"], p["Y'"], p["Y''"]))
    sides = []
    for order in ((0, 1, 0), (1, 0, 1)):
        out, w, labels = [], f, [0, 1, 2]
        for k in order:
            s = swap_slice(w, k, labels[k] < labels[k + 1])
            out.append(s)
            w = s.target
            labels[k], labels[k + 1] = labels[k + 1], labels[k]
        sides.append(Movie(f, tuple(out)))
    return sides[0], sides[1]


def _placed_y(kind: str, obj: int, side: str, outer: int) -> Gen | None:
    """Y with `outer` strands on its far side, ending at A_obj."""
    inner = obj - outer - (2 if kind != CUP else 0)
    if inner < 0:
        return None
    return Gen(kind, outer, inner) if side == "left" else Gen(kind, inner, outer)


def _enum_natural(cells_at: Callable[[int, int], Iterable[TwoCell]], form: str):
    # Y's subscript on the cell's side is derived, so only its outer
    # subscript counts towards the index bound
    def enum(bound):
        for j, k in product(range(bound + 1), repeat=2):
            for c in cells_at(j, k):
                obj = cell_typing(c)[0].source
                for kind, side, outer in product(GEN_KINDS, ("left", "right"), range(bound + 1)):
                    y = _placed_y(kind, obj, side, outer)
                    if y is None:
                        continue
                    try:
                        if _y_side(y, c, obj) != side:
                            continue
                        naturality(c, y, form)
                    except TangleError:
                        continue
                    yield {"cell": c, "Y": y, "side": side}
    return enum


def _natural_builder(form):
    def build(p):
        return naturality(p["cell"], p["Y"], form)
    return build


def _r17_cells(j, k):
    return [_s_cell(v, j, k) for v in S_VARIANTS]


def _r18_cells(j, k):
    return [cell("T", j, k)]


def _r19_cells(j, k):
    return [cell("W", j, k)]


def _r20_cells(j, k):
    return [cell("H", j, k, "s")]


def _r21(p):
    m, n = p["m"], p["n"]
    lhs = mv(
        hs(capg(m + 1, n + 1), Ns(Xg(m, n + 2), Xbg(m + 2, n)), cupg(m + 1, n + 1)),
        hs(capg(m + 1, n + 1), Xbg(m + 2, n), cell("H", m, n + 1, "d")),
        hs(cell("H", m + 1, n, "b"), Xbg(m + 1, n + 1), cupg(m, n + 2)),
        hs(capg(m + 2, n), cell("II", m + 1, n + 1, "s"), cupg(m, n + 2)),
        hs(N(cupg(m, n), capg(m, n))),
    )
    rhs = mv(
        hs(cell("H", m, n + 1, "bs"), Xbg(m + 2, n), cupg(m + 1, n + 1)),
        hs(capg(m, n + 2), Xbg(m + 1, n + 1), cell("H", m + 1, n, "ds")),
        hs(capg(m, n + 2), cell("II", m + 1, n + 1, "bs"), cupg(m + 2, n)),
        hs(Ns(capg(m, n + 2), cupg(m + 2, n))),
    )
    return lhs, rhs


def _birth_cells(i, j):
    return [cell("II", i, j), cell("I", i, j), cell("E", i, j, "s")]


def birth_transport(y: Gen, z: TwoCell, zpos: str) -> tuple[Movie, Movie]:
    """A birth-type cell Z (empty source, target chi chi*) next to Y.

    Both sides end with Y between chi and chi*: on the left Z is born after
    Y and Y moves later past chi, on the right Z is born before Y and Y moves
    earlier past chi*.
    """
    src, tgt = cell_typing(z)
    if src.gens or len(tgt.gens) != 2 or y.target != src.source:
        raise BadParameters("Z must be a birth next to Y")
    side = _y_side(y, z, src.source)
    delta = y.a - y.b
    z2 = shifted(z, delta, 0) if side == "left" else shifted(z, 0, delta)
    frame = Word(y.source, (y,))
    left = side == "left"
    l0 = place(frame, 1, z)
    l1 = swap_slice(l0.target, 0, left)
    r0 = place(frame, 0, z2)
    r1 = swap_slice(r0.target, 1, not left)
    return Movie(frame, (l0, l1)), Movie(frame, (r0, r1))


def _enum22(bound):
    for i, j in product(range(bound + 1), repeat=2):
        for z in _birth_cells(i, j):
            obj = cell_typing(z)[0].source
            for kind, side, outer in product(GEN_KINDS, ("left", "right"), range(bound + 1)):
                y = _placed_y(kind, obj, side, outer)
                if y is None:
                    continue
                try:
                    if _y_side(y, z, obj) != side:
                        continue
                    birth_transport(y, z, side)
                except TangleError:
                    continue
                yield {"Y": y, "cell": z, "side": side}


def _r22(p):
    return birth_transport(p["Y"], p["cell"], p["side"])


def _r23(p):
    m, n = p["m"], p["n"]
    if p["form"] == "a":
        lhs = mv(hs(Xg(m, n), cell("II", m, n, "b")), hs(cell("II", m, n, "s"), Xg(m, n)))
    else:
        lhs = mv(hs(cell("I", m, n), capg(m, n)), hs(capg(m, n), cell("E", m, n)))
    return lhs, identity_movie(lhs.source)


def _r24(p):
    m, n = p["m"], p["n"]
    lhs = mv(hs(capg(m + 1, n), cell("E", m, n + 1, "s")), hs(cell("T", m, n, "ds"), capg(m, n + 1)))
    rhs = mv(hs(cell("T", m, n, "s"), capg(m + 1, n)), hs(capg(m, n + 1), cell("E", m + 1, n)))
    return lhs, rhs


def _enum25(bound):
    for m, n in _mn_pairs(bound):
        for i in (0, 1, 2):
            yield {"m": m, "n": n, "i": i}


def _mn_pairs(bound):
    return list(product(range(bound + 1), repeat=2))


def _r25(p):
    m, n, i = p["m"], p["n"], p["i"]
    sb = cell(f"S{i}", m, n, "b")
    _, a_, b_ = (g.kind for g in cell_typing(sb)[0].gens)
    # Z_i: the starred S-cell whose source is A_{m+1,n} B_{m,n+1} X_{m+1,n}
    want = (Gen(a_, m + 1, n), Gen(b_, m, n + 1), Xg(m + 1, n))
    zs = [c for v in S_VARIANTS for c in [_s_cell(v, m, n, "s")] if cell_typing(c)[0].gens == want]
    if len(zs) != 1:
        raise InternalTypingFailure(f"relation 25: no unique Z for i={i}")
    lhs = mv(hs(cell("II", m, n + 1), Gen(a_, m + 1, n), Gen(b_, m, n + 1)), hs(Xg(m, n + 1), sb))
    rhs = mv(hs(Gen(a_, m + 1, n), Gen(b_, m, n + 1), cell("II", m + 1, n)), hs(zs[0], Xbg(m + 1, n)))
    return lhs, rhs


def _r26(p):
    m, n = p["m"], p["n"]
    lhs = mv(hs(capg(m, n), cell("II", m, n)), hs(cell("W", m, n, "s"), Xbg(m, n)))
    return lhs, mv(hs(cell("W", m, n, "b")))


def _r27(p):
    m, n = p["m"], p["n"]
    lhs = mv(hs(cell("I", m, n)), hs(cell("W", m, n), cupg(m, n)))
    rhs = mv(hs(cell("I", m, n)), hs(capg(m, n), cell("W", m, n, "bds")))
    return lhs, rhs


def _r28(p):
    m, n = p["m"], p["n"]
    lhs = mv(
        hs(cell("I", m, n + 1)),
        hs(capg(m, n + 1), cell("II", m + 1, n), cupg(m, n + 1)),
        hs(cell("H", m, n), Xbg(m + 1, n), cupg(m, n + 1)),
    )
    rhs = mv(
        hs(cell("I", m + 1, n)),
        hs(capg(m + 1, n), cell("II", m, n + 1, "b"), cupg(m + 1, n)),
        hs(capg(m + 1, n), Xbg(m, n + 1), cell("H", m, n, "d")),
    )
    return lhs, rhs


def _r29(p):
    m, n = p["m"], p["n"]
    lhs = mv(hs(cupg(m, n), cell("W", m, n)), hs(cell("E", m, n), Xg(m, n)))
    rhs = mv(hs(cell("W", m, n, "bds"), capg(m, n)), hs(Xg(m, n), cell("E", m, n)))
    return lhs, rhs


def _r30(p):
    m, n = p["m"], p["n"]
    lhs = mv(
        hs(cell("H", m, n, "ds"), capg(m + 1, n), Xbg(m, n + 1)),
        hs(Xg(m, n + 1), cell("E", m + 1, n), Xbg(m, n + 1)),
        hs(cell("II", m, n + 1, "s")),
    )
    rhs = mv(
        hs(Xbg(m + 1, n), cupg(m, n + 1), cell("H", m, n, "s")),
        hs(Xbg(m + 1, n), cell("E", m, n + 1), Xg(m + 1, n)),
        hs(cell("II", m + 1, n, "bs")),
    )
    return lhs, rhs


def _enum_i(values):
    def enum(bound):
        for p in _mn(bound):
            for i in values:
                yield {**p, "i": i}
    return enum


def _enum6(bound):
    for p in _mn(bound):
        for v in S_VARIANTS:
            yield {**p, "Z": v}


SCHEMAS: tuple[RelationSchema, ...] = (
    RelationSchema(1, "elliptic confluence of branch points", _mn, _r1),
    RelationSchema(2, "hyperbolic confluence of branch points", _mn, _r2),
    RelationSchema(3, "elliptic confluence of double points", _mn, _r3),
    RelationSchema(4, "hyperbolic confluence of double points", _mn, _r4),
    RelationSchema(5, "cancelling triple points", _with(("a", "b"), _enum_i((0, 1, 2))), _r5),
    RelationSchema(6, "quadruple point (tetrahedron equation)", _enum6, _r6),
    RelationSchema(7, "branch point through a triple point", _with(("a", "b"), _mn), _r7),
    RelationSchema(8, "elliptic confluence of cusps", _mn, _r8),
    RelationSchema(9, "hyperbolic confluence of cusps", _mn, _r9),
    RelationSchema(10, "swallowtail on the fold lines", _mn, _r10),
    RelationSchema(11, "redundant double points across fold lines", _with(("a", "b"), _mn), _r11),
    RelationSchema(12, "branch point through a cusp", _with(("a", "b"), _mn), _r12),
    RelationSchema(13, "double arc over a fold line near a cusp", _mn, _r13),
    RelationSchema(14, "triple point near a fold line", _enum_i((0, 1, 2)), _r14),
    RelationSchema(15, "height shift is unitary", _enum15, _r15),
    RelationSchema(16, "height shifts of three distant generators", _enum16, _r16),
    RelationSchema(17, "height shift past a triple point", _enum_natural(_r17_cells, "before"),
                   _natural_builder("before")),
    RelationSchema(18, "height shift past a cusp", _enum_natural(_r18_cells, "before"),
                   _natural_builder("before")),
    RelationSchema(19, "height shift past a branch point", _enum_natural(_r19_cells, "after"),
                   _natural_builder("after")),
    RelationSchema(20, "height shift past a fold crossing", _enum_natural(_r20_cells, "before"),
                   _natural_builder("before")),
    RelationSchema(21, "double point arc tangent to the projection plane", _mn, _r21),
    RelationSchema(22, "height shift past a birth", _enum22, _r22),
    RelationSchema(23, "cusp on the double point set or fold lines", _with(("a", "b"), _mn), _r23),
    RelationSchema(24, "horizontal cusp", _mn, _r24),
    RelationSchema(25, "triple point through a double point maximum", _enum25, _r25),
    RelationSchema(26, "double point maximum through a branch point", _mn, _r26),
    RelationSchema(27, "branch point over a surface maximum", _mn, _r27),
    RelationSchema(28, "double point arc over a fold near a maximum", _mn, _r28),
    RelationSchema(29, "branch point over a saddle", _mn, _r29),
    RelationSchema(30, "double point arc over a fold near a saddle", _mn, _r30),
)

SCHEMA_BY_ID = {s.id: s for s in SCHEMAS}


def _freeze(params: Params) -> tuple:
    def fmt(v):
        if isinstance(v, TwoCell):
            return format_cell(v)
        return str(v)
    return tuple((k, fmt(v)) for k, v in params.items())


def _param_max(params: Params) -> int:
    best = 0
    if "side" in params:
        y, c = params["Y"], params["cell"]
        return max(c.max_index(), y.left if params["side"] == "left" else y.right)
    for k, v in params.items():
        if k in ("m", "n"):
            best = max(best, v)
        elif isinstance(v, Gen):
            best = max(best, v.left, v.right)
        elif isinstance(v, TwoCell):
            best = max(best, v.max_index())
    return best


def instantiate(rid: int, params: Params, variant: Iterable[str] = ()) -> RelationInstance:
    try:
        schema = SCHEMA_BY_ID[rid]
    except KeyError:
        raise BadParameters(f"no relation {rid}") from None
    try:
        lhs, rhs = schema.build(params)
    except BadParameters:
        raise
    except (TangleError, KeyError) as e:
        raise InternalTypingFailure(f"relation {rid} {params}: {e}") from e
    if lhs.source != rhs.source or lhs.target != rhs.target:
        raise InternalTypingFailure(
            f"relation {rid} {params}: boundaries differ: {lhs.source} => {lhs.target} vs {rhs.source} => {rhs.target}")
    variant = tuple(variant)
    for op in variant:
        f = {"bar": bar_movie, "dagger": dagger_movie, "star": star_movie}[op]
        lhs, rhs = f(lhs), f(rhs)
    return RelationInstance(rid, _freeze(params), variant, lhs, rhs)


def schema_params(rid: int, max_index: int) -> list[Params]:
    schema = SCHEMA_BY_ID[rid]
    return [p for p in schema.enumerate(max_index) if _param_max(p) <= max_index]


def all_instances(max_index: int, ids: Iterable[int] | None = None,
                  variants: Iterable[tuple[str, ...]] = VARIANTS) -> Iterator[RelationInstance]:
    variants = tuple(variants)
    for schema in SCHEMAS:
        if ids is not None and schema.id not in ids:
            continue
        for p in schema_params(schema.id, max_index):
            for v in variants:
                yield instantiate(schema.id, p, v)


def check_typing(r: RelationInstance) -> bool:
    try:
        for m in (r.lhs, r.rhs):
            Movie(m.source, m.slices)
    except TangleError:
        return False
    return r.lhs.source == r.rhs.source and r.lhs.target == r.rhs.target


def check_schema(rid: int, max_index: int = 2) -> list[str]:
    """Diagnostic: the transcription failures of one schema (empty when clean)."""
    out = []
    for p in schema_params(rid, max_index):
        try:
            instantiate(rid, p)
        except TangleError as e:
            out.append(f"{p}: {e}")
    return out

"""Braided monoidal structure with duals, built from words and movies.

Objects are sizes n (A_n); every object is self-dual.  Inverses of the
unitary structural 2-morphisms are stars.  Juxtaposing a 2-morphism with
a 1-morphism whiskers it; juxtaposing two 2-morphisms composes them
horizontally (left factor first).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cells import (
    Movie, TwoCell, dagger_movie, hcompose, identity_movie, make, single, star_movie,
    tensor_movie, vcompose, whisker,
)
from .errors import BadParameters, TypeMismatch, Unsupported
from .words import (
    CAP, CUP, X, XB, Gen, Word, compose, dual_word, identity, pad, tensor_left, tensor_right,
)


def _w(*gens: Gen) -> Word:
    return Word(gens[0].source, gens)


def _wh(u: Word | None, m: Movie, v: Word | None = None) -> Movie:
    u = u if u is not None else identity(m.source.source)
    v = v if v is not None else identity(m.source.target)
    return whisker(u, m, v)


def _expect(m: Movie, src: Word, tgt: Word, what: str) -> Movie:
    if m.source != src or m.target != tgt:
        raise TypeMismatch(f"{what}: built {m.source} => {m.target}, expected {src} => {tgt}")
    return m


# --------------------------------------------------------------------------
# objects


@lru_cache(maxsize=None)
def braiding_objects(n: int, m: int) -> Word:
    """R_{A_n,A_m}: A_{n+m} -> A_{m+n}, n*m positive crossings."""
    if n < 0 or m < 0:
        raise BadParameters("negative object")
    if n == 0 or m == 0:
        return identity(n + m)
    if n == 1:
        if m == 1:
            return _w(Gen(X, 0, 0))
        # R_{A_1,A_1 (x) A_{m-1}} = (R_{A_1,A_1} (x) A_{m-1})(A_1 (x) R_{A_1,A_{m-1}})
        return compose(_w(Gen(X, 0, m - 1)), tensor_left(1, braiding_objects(1, m - 1)))
    # R_{A_1 (x) A_{n-1},A_m} = (A_1 (x) R_{A_{n-1},A_m})(R_{A_1,A_m} (x) A_{n-1})
    return compose(tensor_left(1, braiding_objects(n - 1, m)), tensor_right(braiding_objects(1, m), n - 1))


@lru_cache(maxsize=None)
def unit_object(n: int) -> Word:
    """i_{A_n}: A_0 -> A_{2n}."""
    if n == 0:
        return identity(0)
    return compose(_w(Gen(CAP, 0, 0)), pad(1, unit_object(n - 1), 1))


@lru_cache(maxsize=None)
def counit_object(n: int) -> Word:
    """e_{A_n}: A_{2n} -> A_0."""
    if n == 0:
        return identity(0)
    return compose(pad(1, counit_object(n - 1), 1), _w(Gen(CUP, 0, 0)))


def balancing(n: int) -> Word:
    """(e*_A (x) A)(A (x) R_{A,A})(e_A (x) A) for A = A_n."""
    if n < 1:
        raise BadParameters("balancing needs at least one strand")
    return compose(tensor_right(dual_word(counit_object(n)), n),
                   tensor_left(n, braiding_objects(n, n)),
                   tensor_right(counit_object(n), n))


def hat_1morphism(f: Word) -> Word:
    """(A_y (x) i_{A_x})(A_y (x) f (x) A_x)(e_{A_y} (x) A_x) for f: A_x -> A_y."""
    x, y = f.source, f.target
    return compose(tensor_left(y, unit_object(x)), pad(y, f, x), tensor_right(counit_object(y), x))


# --------------------------------------------------------------------------
# tensorator


def tensorator(f: Word, g: Word) -> Movie:
    """(A (x) g)(f (x) B') => (f (x) B)(A' (x) g) for f: A -> A', g: B -> B'."""
    a, a2 = f.source, f.target
    b, b2 = g.source, g.target
    src = compose(tensor_left(a, g), tensor_right(f, b2))
    tgt = compose(tensor_right(f, b), tensor_left(a2, g))
    if not f.gens or not g.gens:
        return identity_movie(src)
    if len(g.gens) > 1:
        g1, g2 = Word(b, g.gens[:1]), Word(g.gens[0].target, g.gens[1:])
        m = vcompose(_wh(tensor_left(a, g1), tensorator(f, g2)),
                     _wh(None, tensorator(f, g1), tensor_left(a2, g2)))
        return _expect(m, src, tgt, "tensorator")
    if len(f.gens) > 1:
        f1, f2 = Word(a, f.gens[:1]), Word(f.gens[0].target, f.gens[1:])
        b1 = g.target
        m = vcompose(_wh(None, tensorator(f1, g), tensor_right(f2, b1)),
                     _wh(tensor_right(f1, b), tensorator(f2, g)))
        return _expect(m, src, tgt, "tensorator")
    y, z = f.gens[0], g.gens[0]
    c = TwoCell("N", y=Gen(y.kind, y.left, y.right + z.source), z=Gen(z.kind, y.target + z.left, z.right))
    return _expect(single(c), src, tgt, "tensorator")


# --------------------------------------------------------------------------
# units and counits of 1-morphisms


def _unit_gen(g: Gen) -> Movie:
    m, n = g.left, g.right
    c = {CAP: make("I", m, n), CUP: make("E", m, n, star=True),
         X: make("II", m, n), XB: make("II", m, n, bar=True)}[g.kind]
    return single(c)


def _counit_gen(g: Gen) -> Movie:
    m, n = g.left, g.right
    c = {CAP: make("E", m, n), CUP: make("I", m, n, star=True),
         X: make("II", m, n, bar=True, star=True), XB: make("II", m, n, star=True)}[g.kind]
    return single(c)


def unit_1morphism(f: Word) -> Movie:
    """i_f: 1 => f f*."""
    if not f.gens:
        return identity_movie(f)
    g0 = Word(f.source, f.gens[:1])
    rest = Word(f.gens[0].target, f.gens[1:])
    m = _unit_gen(f.gens[0])
    if rest.gens:
        m = vcompose(m, _wh(g0, unit_1morphism(rest), dual_word(g0)))
    return _expect(m, identity(f.source), compose(f, dual_word(f)), "unit")


def counit_1morphism(f: Word) -> Movie:
    """e_f: f* f => 1."""
    if not f.gens:
        return identity_movie(f)
    head = Word(f.source, f.gens[:-1])
    last = Word(f.gens[-1].source, f.gens[-1:])
    m = _counit_gen(f.gens[-1])
    if head.gens:
        m = vcompose(_wh(dual_word(last), counit_1morphism(head), last), m)
    return _expect(m, compose(dual_word(f), f), identity(f.target), "counit")


# --------------------------------------------------------------------------
# triangulator and braiding coherence


@lru_cache(maxsize=None)
def triangulator(n: int) -> Movie:
    """T_{A_n}: (i_{A_n} (x) A_n)(A_n (x) e_{A_n}) => 1_n."""
    src = compose(tensor_right(unit_object(n), n), tensor_left(n, counit_object(n)))
    if n == 0:
        return identity_movie(src)
    if n == 1:
        return single(make("T", 0, 0))
    k = n - 1
    # A = A_1, B = A_k; the tensorator inverse is its star
    inv = star_movie(tensorator(unit_object(k), counit_object(1)))
    first = vcompose(
        _wh(tensor_right(unit_object(1), n), tensor_movie(1, inv, k), tensor_left(n, counit_object(k))))
    second = hcompose(tensor_movie(0, triangulator(1), k), tensor_movie(1, triangulator(k), 0))
    return _expect(vcompose(first, second), src, identity(n), "triangulator")


@lru_cache(maxsize=None)
def braid_coherence(a: int, b: int, c: int, form: str = "left") -> Movie:
    """R~_{(A|B,C)} (form "left") or R~_{(A,B|C)} (form "right")."""
    if form == "right":
        return identity_movie(compose(tensor_left(a, braiding_objects(b, c)),
                                      tensor_right(braiding_objects(a, c), b)))
    if form != "left":
        raise BadParameters(form)
    src = compose(tensor_right(braiding_objects(a, b), c), tensor_left(b, braiding_objects(a, c)))
    tgt = braiding_objects(a, b + c)
    if a <= 1 or b == 0 or c == 0:
        return _expect(identity_movie(src), src, tgt, "braid coherence")
    x, y = _coherence_halves(a, b, c)
    return _expect(vcompose(star_movie(x), y), src, tgt, "braid coherence")


def _coherence_halves(a: int, b: int, c: int) -> tuple[Movie, Movie]:
    """The two sides of the recursion for R~_{(A_1 (x) A_k|B,C)}: x . R~ = y."""
    k = a - 1
    ten = tensorator(braiding_objects(1, b), braiding_objects(k, c))
    x = _wh(pad(1, braiding_objects(k, b), c), ten, pad(b, braiding_objects(1, c), k))
    y = hcompose(tensor_movie(1, braid_coherence(k, b, c, "left"), 0),
                 tensor_movie(0, braid_coherence(1, b, c, "left"), k))
    return x, y


@dataclass(frozen=True)
class CoherenceCheck:
    condition: str
    params: tuple[int, ...]
    verdict: object  # rewrite.Equal or rewrite.Unknown

    @property
    def ok(self) -> bool:
        return bool(self.verdict)


def coherence_sides(condition: str, a: int, b: int, c: int, d: int = 1) -> tuple[Movie, Movie]:
    """Both sides of a braided-monoidal coherence condition on R~.

    "split": x . R~_{(A_a|B,C)} = y, the equation the recursion solves.
    "triple": the associativity condition for R~_{(A|B,C(x)D)} against
    R~_{(A|B(x)C,D)}, which the recursion does not build in.
    """
    if condition == "split":
        x, y = _coherence_halves(a, b, c)
        return vcompose(x, braid_coherence(a, b, c)), y
    if condition == "triple":
        R = braiding_objects
        lhs = vcompose(_wh(pad(0, R(a, b), c + d), tensor_movie(b, braid_coherence(a, c, d), 0)),
                       braid_coherence(a, b, c + d))
        rhs = vcompose(_wh(None, tensor_movie(0, braid_coherence(a, b, c), d), pad(b + c, R(a, d), 0)),
                       braid_coherence(a, b + c, d))
        return lhs, rhs
    raise BadParameters(condition)


def check_coherence(max_n: int = 2, depth: int = 6, node_budget: int = 20000) -> list[CoherenceCheck]:
    """Decide the R~ coherence conditions for all objects up to A_max_n."""
    from .rewrite import decide_equal

    out = []
    for a in range(2, max_n + 1):
        for b in range(1, max_n + 1):
            for c in range(1, max_n + 1):
                lhs, rhs = coherence_sides("split", a, b, c)
                out.append(CoherenceCheck("split", (a, b, c),
                                          decide_equal(lhs, rhs, depth=depth, node_budget=node_budget)))
    for a, b, c, d in product(range(1, max_n + 1), repeat=4):
        lhs, rhs = coherence_sides("triple", a, b, c, d)
        out.append(CoherenceCheck("triple", (a, b, c, d),
                                  decide_equal(lhs, rhs, depth=depth, node_budget=node_budget)))
    return out


# --------------------------------------------------------------------------
# braiding of an object with a 1-morphism


def _braid_left_type(a: int, f: Word) -> tuple[Word, Word]:
    c, c2 = f.source, f.target
    return (compose(tensor_left(a, f), braiding_objects(a, c2)),
            compose(braiding_objects(a, c), tensor_right(f, a)))


def _braid_right_type(f: Word, b: int) -> tuple[Word, Word]:
    c, c2 = f.source, f.target
    return (compose(tensor_right(f, b), braiding_objects(c2, b)),
            compose(braiding_objects(c, b), tensor_left(b, f)))


def _left_base(g: Gen) -> Movie:
    k = g.kind
    if k == X:
        return single(make("S0", star=True))
    if k == XB:
        return single(make("S1", star=True))
    if k == CAP:
        return vcompose(_wh(None, single(make("H", bar=True, star=True)), _w(Gen(X, 1, 0))),
                        _wh(_w(Gen(CAP, 0, 1)), single(make("II", 1, 0, bar=True, star=True))))
    return vcompose(_wh(None, single(make("II", 0, 1)), _w(Gen(CUP, 1, 0))),
                    _wh(_w(Gen(X, 0, 1)), single(make("H", bar=True, dagger=True))))


def _right_base(g: Gen) -> Movie:
    k = g.kind
    if k == X:
        return single(make("S0"))
    if k == XB:
        return single(make("S2", bar=True))
    if k == CAP:
        return vcompose(_wh(None, single(make("H")), _w(Gen(X, 0, 1))),
                        _wh(_w(Gen(CAP, 1, 0)), single(make("II", 0, 1, bar=True, star=True))))
    return vcompose(_wh(None, single(make("II", 1, 0)), _w(Gen(CUP, 0, 1))),
                    _wh(_w(Gen(X, 1, 0)), single(make("H", dagger=True, star=True))))


def braid_left(a: int, f: Word) -> Movie:
    """R_{A_a,f}: (A (x) f) R_{A,C'} => R_{A,C} (f (x) A)."""
    src, tgt = _braid_left_type(a, f)
    if a == 0 or not f.gens:
        return _expect(identity_movie(src), src, tgt, "R_{A,f}")
    if len(f.gens) > 1:
        g, g2 = Word(f.source, f.gens[:1]), Word(f.gens[0].target, f.gens[1:])
        m = vcompose(_wh(tensor_left(a, g), braid_left(a, g2)),
                     _wh(None, braid_left(a, g), tensor_right(g2, a)))
        return _expect(m, src, tgt, "R_{A,gg'}")
    if a > 1:
        # A_a = A_1 (x) A_{a-1}
        k = a - 1
        c, c2 = f.source, f.target
        m = vcompose(_wh(None, tensor_movie(1, braid_left(k, f), 0), tensor_right(braiding_objects(1, c2), k)),
                     _wh(tensor_left(1, braiding_objects(k, c)), tensor_movie(0, braid_left(1, f), k)))
        return _expect(m, src, tgt, "R_{A (x) B,f}")
    g = f.gens[0]
    if g.left > 0:
        # R_{A_1,B (x) f'} with B = A_i
        i = g.left
        f1 = Word(f.source - i, (g.shifted(left=-i),))
        c1, c12 = f1.source, f1.target
        ten = tensorator(braiding_objects(1, i), f1)
        m = vcompose(_wh(None, ten, tensor_left(i, braiding_objects(1, c12))),
                     _wh(tensor_right(braiding_objects(1, i), c1), tensor_movie(i, braid_left(1, f1), 0)))
        return _expect(m, src, tgt, "R_{A,B (x) f}")
    if g.right > 0:
        # R_{A_1,f' (x) B} with B = A_j
        j = g.right
        f1 = Word(f.source - j, (g.shifted(right=-j),))
        c1, c12 = f1.source, f1.target
        ten = star_movie(tensorator(f1, braiding_objects(1, j)))
        m = vcompose(_wh(None, tensor_movie(0, braid_left(1, f1), j), tensor_left(c12, braiding_objects(1, j))),
                     _wh(tensor_right(braiding_objects(1, c1), j), ten))
        return _expect(m, src, tgt, "R_{A,f (x) B}")
    return _expect(_left_base(g), src, tgt, "R_{A_1,Y}")


def braid_right(f: Word, b: int) -> Movie:
    """R_{f,A_b}: (f (x) B) R_{A',B} => R_{A,B} (B (x) f)."""
    src, tgt = _braid_right_type(f, b)
    if b == 0 or not f.gens:
        return _expect(identity_movie(src), src, tgt, "R_{f,B}")
    if len(f.gens) > 1:
        g, g2 = Word(f.source, f.gens[:1]), Word(f.gens[0].target, f.gens[1:])
        m = vcompose(_wh(tensor_right(g, b), braid_right(g2, b)),
                     _wh(None, braid_right(g, b), tensor_left(b, g2)))
        return _expect(m, src, tgt, "R_{ff',B}")
    c, c2 = f.source, f.target
    if b > 1:
        # B_b = A_1 (x) A_{b-1}
        k = b - 1
        m = vcompose(
            _wh(tensor_right(f, b), star_movie(braid_coherence(c2, 1, k, "left"))),
            _wh(None, tensor_movie(0, braid_right(f, 1), k), tensor_left(1, braiding_objects(c2, k))),
            _wh(tensor_right(braiding_objects(c, 1), k), tensor_movie(1, braid_right(f, k), 0)),
            _wh(None, braid_coherence(c, 1, k, "left"), tensor_left(b, f)),
        )
        return _expect(m, src, tgt, "R_{f,B (x) C}")
    g = f.gens[0]
    if g.left > 0:
        # R_{C (x) f',B} with C = A_i
        i = g.left
        f1 = Word(f.source - i, (g.shifted(left=-i),))
        a1, a12 = f1.source, f1.target
        ten = tensorator(braiding_objects(i, 1), f1)
        m = vcompose(_wh(None, tensor_movie(i, braid_right(f1, 1), 0), tensor_right(braiding_objects(i, 1), a12)),
                     _wh(tensor_left(i, braiding_objects(a1, 1)), ten))
        return _expect(m, src, tgt, "R_{C (x) f,B}")
    if g.right > 0:
        # R_{f' (x) C,B} with C = A_j
        j = g.right
        f1 = Word(f.source - j, (g.shifted(right=-j),))
        a1, a12 = f1.source, f1.target
        ten = star_movie(tensorator(f1, braiding_objects(j, 1)))
        m = vcompose(_wh(None, ten, tensor_right(braiding_objects(a12, 1), j)),
                     _wh(tensor_left(a1, braiding_objects(j, 1)), tensor_movie(0, braid_right(f1, 1), j)))
        return _expect(m, src, tgt, "R_{f (x) C,B}")
    return _expect(_right_base(g), src, tgt, "R_{Y,A_1}")


def braid_obj_1morphism(side: str, n: int, f: Word) -> Movie:
    if side == "left":
        return braid_left(n, f)
    if side == "right":
        return braid_right(f, n)
    raise BadParameters(side)


# --------------------------------------------------------------------------
# writhing, H composites, adjoints


def writhing() -> Movie:
    return single(make("W"))


def wbar() -> Movie:
    """(i_Z i_{R_{Z,Z}}) . (W*_Z R*_{Z,Z})."""
    cap = _w(Gen(CAP, 0, 0))
    first = _wh(cap, unit_1morphism(braiding_objects(1, 1)))
    second = _wh(None, star_movie(writhing()), dual_word(braiding_objects(1, 1)))
    return vcompose(first, second)


def h_composite(variant: str = "plain") -> Movie:
    """H_{Z,Z} or its barred companion, as the three-phase composite."""
    iz = _w(Gen(CAP, 0, 0))
    r = braiding_objects(1, 1)
    rs = dual_word(r)
    if variant == "plain":
        first = _wh(compose(tensor_right(iz, 1), tensor_left(1, r)), tensor_movie(0, unit_1morphism(r), 1))
        mid = identity_movie(first.target)
        last = _wh(None, braid_right(iz, 1), tensor_right(rs, 1))
    elif variant == "barred":
        first = _wh(compose(tensor_right(iz, 1), tensor_left(1, rs)), tensor_movie(0, unit_1morphism(rs), 1))
        mid = identity_movie(first.target)
        last = _wh(None, dagger_movie(braid_left(1, dual_word(iz))), tensor_right(r, 1))
    else:
        raise BadParameters(variant)
    m = vcompose(first, mid, last)
    hc = make("H", bar=variant == "barred")
    return _expect(m, hc.source, hc.target, "H composite")


def adjoint_2cell(m: Movie) -> Movie:
    """alpha^dagger = (g* i_f) . (g* alpha f*) . (e_g f*) for alpha: f => g."""
    f, g = m.source, m.target
    fs, gs = dual_word(f), dual_word(g)
    out = vcompose(_wh(gs, unit_1morphism(f)), whisker(gs, m, fs), _wh(None, counit_1morphism(g), fs))
    return _expect(out, gs, fs, "adjoint")


def expand_generator(c: TwoCell) -> Movie:
    """Structural composite for an undecorated generator."""
    if c.bar or c.dagger or c.star:
        raise Unsupported("decorated generators expand through the closure laws")
    if c.kind == "N":
        y, z = c.y, c.z
        n2 = y.right - z.right - z.a
        if n2 < 0:
            raise BadParameters(f"N({y},{z}) has no tensorator reading")
        out = tensorator(Word(y.source - y.right + n2, (Gen(y.kind, y.left, n2),)),
                         Word(z.source - z.left, (Gen(z.kind, 0, z.right),)))
        return _expect(out, c.source, c.target, "expand N")
    if c.kind == "id":
        return identity_movie(c.word)
    if (c.m, c.n) != (0, 0):
        # a generator at (m,n) is A_m (x) generator(0,0) (x) A_n
        out = tensor_movie(c.m, expand_generator(make(c.kind)), c.n)
        return _expect(out, c.source, c.target, f"expand {c.kind}")
    cap = _w(Gen(CAP, 0, 0))
    k = c.kind
    if k == "I":
        out = unit_1morphism(cap)
    elif k == "E":
        out = counit_1morphism(cap)
    elif k == "W":
        out = writhing()
    elif k == "II":
        out = unit_1morphism(braiding_objects(1, 1))
    elif k == "S0":
        out = braid_right(braiding_objects(1, 1), 1)
    elif k == "S1":
        out = star_movie(braid_left(1, dual_word(braiding_objects(1, 1))))
    elif k == "S2":
        out = dagger_movie(braid_left(1, dual_word(braiding_objects(1, 1))))
    elif k == "H":
        out = h_composite("plain")
    elif k == "T":
        out = triangulator(1)
    else:
        raise Unsupported(k)
    return _expect(out, c.source, c.target, f"expand {k}")

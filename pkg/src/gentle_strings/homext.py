"""Factor strings, substrings, admissible pairs, Hom dimensions and the
combinatorial Ext^1 criterion for string modules over gentle algebras.

A triple ``(D, E, F)`` with ``w = DEF`` is encoded by cut positions ``i <= j``
into the walk of ``w``: ``D`` = letters ``[0, i)``, ``E`` = ``[i, j)``,
``F`` = ``[j, n)``.  Trivial middles are the cut ``i == j`` and sit at walk
vertex ``i``; their orientation is read off the neighbouring letters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import AlgebraPresentation
from .strings import canonical, is_valid_string, pair_ok, source, target, walk
from .words import Letter, StringWord

FACTOR = "factor"
SUB = "sub"
SAME = "same"
REVERSED = "reversed"
BOTH = "both"


@dataclass(frozen=True)
class Factorization:
    word: StringWord
    i: int
    j: int
    kind: str

    @property
    def n(self):
        return len(self.word)

    @property
    def middle_letters(self) -> tuple[Letter, ...]:
        return self.word.letters[self.i:self.j]

    def middle_vertex(self, p) -> str:
        return walk(p, self.word)[self.i]

    def parts(self, p) -> tuple[StringWord, StringWord, StringWord]:
        """``(D, E, F)`` as words (empty parts as trivial words at the cut)."""
        vs = walk(p, self.word)

        def part(a, b):
            if a == b:
                return StringWord.trivial(vs[a])
            return StringWord(self.word.letters[a:b])

        return part(0, self.i), part(self.i, self.j), part(self.j, self.n)

    def describe(self, p) -> str:
        return "(" + ", ".join(
            str(x) if not x.is_trivial else f"1_{x.vertex}" for x in self.parts(p)
        ) + ")"


def _triples(w: StringWord, kind: str) -> list[Factorization]:
    n = len(w)
    letters = w.letters
    # factor: the letter before E is inverse, the letter after E is direct
    # sub:    the letter before E is direct,  the letter after E is inverse
    want_left_inverted = kind == FACTOR
    out = []
    for i in range(n + 1):
        if i > 0 and letters[i - 1].inverted != want_left_inverted:
            continue
        for j in range(i, n + 1):
            if j < n and letters[j].inverted == want_left_inverted:
                continue
            out.append(Factorization(w, i, j, kind))
    return out


def factor_triples(w: StringWord) -> list[Factorization]:
    return _triples(w, FACTOR)


def sub_triples(w: StringWord) -> list[Factorization]:
    return _triples(w, SUB)


@dataclass(frozen=True)
class AdPair:
    factor: Factorization
    sub: Factorization
    orientation: str

    def describe(self, p) -> str:
        return f"{self.factor.describe(p)} x {self.sub.describe(p)} [{self.orientation}]"


def _cut_side(f: Factorization):
    """A letter arriving at the cut on the D-side, plus a flip flag.

    Only used for trivial middles.  When D is empty the first letter of F is
    reversed, which lands on the opposite side, hence the flip.
    """
    if f.i > 0:
        return f.word.letters[f.i - 1], False
    if f.i < f.n:
        return f.word.letters[f.i].inverse(), True
    return None


def _trivial_orientation(p, f: Factorization, s: Factorization) -> str:
    """Orientation of a trivial-middle pair.

    Two letters arriving at a vertex lie on the same side of it exactly when
    the first cannot be followed by the inverse of the second.
    """
    a, b = _cut_side(f), _cut_side(s)
    if a is None or b is None:
        return BOTH
    same_side = not pair_ok(p, a[0], b[0].inverse())
    return SAME if same_side != (a[1] != b[1]) else REVERSED


def _match(p, f: Factorization, s: Factorization) -> Optional[str]:
    e, e2 = f.middle_letters, s.middle_letters
    if len(e) != len(e2):
        return None
    if not e:
        if f.middle_vertex(p) != s.middle_vertex(p):
            return None
        return _trivial_orientation(p, f, s)
    if e == e2:
        return SAME
    if e == tuple(x.inverse() for x in reversed(e2)):
        return REVERSED
    return None


def ad_pairs(p: AlgebraPresentation, x: StringWord, y: StringWord, mode: str = "hom") -> list[AdPair]:
    """Admissible pairs.

    ``mode="hom"``: pairs in F(x) x S(y), a basis of Hom(M(x), M(y)).
    ``mode="ext"``: ``x`` is ``w`` and ``y`` is ``v``; pairs in F(v) x S(w).
    """
    if mode == "ext":
        x, y = y, x
    elif mode != "hom":
        raise ValueError(f"unknown mode {mode!r}")
    subs = sub_triples(y)
    out = []
    for f in factor_triples(x):
        for s in subs:
            o = _match(p, f, s)
            if o is not None:
                out.append(AdPair(f, s, o))
    return out


def is_two_sided(pair: AdPair) -> bool:
    f, s = pair.factor, pair.sub
    d0, f0 = f.i == 0, f.j == f.n
    d1, f1 = s.i == 0, s.j == s.n
    one_sided = False
    if pair.orientation in (SAME, BOTH):
        one_sided |= (d0 and d1) or (f0 and f1)
    if pair.orientation in (REVERSED, BOTH):
        one_sided |= (d0 and f1) or (f0 and d1)
    return not one_sided


def hom_dim_combinatorial(p: AlgebraPresentation, w: StringWord, v: StringWord) -> int:
    return len(ad_pairs(p, w, v))


@dataclass(frozen=True)
class ExtensionWitness:
    kind: str                       # "E1", "E2" or "E3"
    arrow: Optional[str] = None     # E1/E2
    w_inverted: bool = False        # E2 uses w^-1
    v_inverted: bool = False
    pair: Optional[AdPair] = None   # E3

    def data(self, p) -> dict:
        if self.kind == "E3":
            return {"pair": self.pair.describe(p)}
        left = "w-" if self.w_inverted else "w"
        right = "v-" if self.v_inverted else "v"
        return {"arrow": self.arrow, "word": f"{left} {self.arrow} {right}"}


def _joined_is_string(p, left: StringWord, arrow, right: StringWord) -> bool:
    a = p.quiver.arrow(arrow)
    if target(p, left) != a.source or source(p, right) != a.target:
        return False
    return is_valid_string(p, StringWord(left.letters + (Letter(arrow),) + right.letters))


def _has_extension_unchecked(p: AlgebraPresentation, w: StringWord, v: StringWord):
    """The extension predicate without the gentleness guard (test hook)."""
    v_inv = v.inverse()
    for kind, left, w_inv in (("E1", w, False), ("E2", w.inverse(), True)):
        for a in p.arrows:
            for right, v_flag in ((v, False), (v_inv, True)):
                if _joined_is_string(p, left, a.name, right):
                    return ExtensionWitness(kind, a.name, w_inv, v_flag)
    for pair in ad_pairs(p, w, v, mode="ext"):
        if is_two_sided(pair):
            return ExtensionWitness("E3", pair=pair)
    return None


def has_extension(p: AlgebraPresentation, w: StringWord, v: StringWord) -> Optional[ExtensionWitness]:
    """First witness of an extension from ``w`` to ``v`` (E1, then E2, then E3)."""
    p.require_gentle()
    return _has_extension_unchecked(p, w, v)


def ext_nonzero(p: AlgebraPresentation, w: StringWord, v: StringWord) -> bool:
    """Whether Ext^1(M(w), M(v)) is nonzero, decided combinatorially."""
    return has_extension(p, w, v) is not None


def is_exceptional(p: AlgebraPresentation, w: StringWord) -> bool:
    return not ext_nonzero(p, w, w)


def ext_table(p: AlgebraPresentation, words) -> list[list[Optional[ExtensionWitness]]]:
    """Witness (or None) for every ordered pair; row = w, column = v."""
    p.require_gentle()
    words = list(words)
    return [[_has_extension_unchecked(p, w, v) for v in words] for w in words]


def same_module(p, w: StringWord, v: StringWord) -> bool:
    return canonical(p, w) == canonical(p, v)

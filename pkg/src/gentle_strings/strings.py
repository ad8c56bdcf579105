"""Strings and bands over a presentation: validity, canonical forms,
enumeration, and sign assignments for trivial strings.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .algebra import AlgebraPresentation
from .errors import NotGentle, Unsatisfiable, UnknownArrow
from .words import Letter, StringWord, inverse, parse_word

__all__ = [
    "Letter", "StringWord", "SignAssignment", "inverse", "parse_word",
    "letter_source", "letter_target", "source", "target", "walk",
    "pair_ok", "is_valid_string", "canonical", "sort_key",
    "enumerate_strings", "is_band", "canonical_band", "enumerate_bands",
    "assign_signs", "parse_string", "dimension_vector",
]


def letter_source(p: AlgebraPresentation, x: Letter) -> str:
    a = p.quiver.arrow(x.arrow)
    return a.target if x.inverted else a.source


def letter_target(p: AlgebraPresentation, x: Letter) -> str:
    a = p.quiver.arrow(x.arrow)
    return a.source if x.inverted else a.target


def source(p, w: StringWord) -> str:
    return w.vertex if w.is_trivial else letter_source(p, w.letters[0])


def target(p, w: StringWord) -> str:
    return w.vertex if w.is_trivial else letter_target(p, w.letters[-1])


def walk(p, w: StringWord) -> list[str]:
    """Vertices visited by the walk: ``len(w) + 1`` entries."""
    if w.is_trivial:
        return [w.vertex]
    return [source(p, w)] + [letter_target(p, x) for x in w.letters]


def pair_ok(p: AlgebraPresentation, x: Letter, y: Letter) -> bool:
    """Can ``y`` follow ``x`` in a string (length-2 relations only)."""
    if letter_target(p, x) != letter_source(p, y):
        return False
    if x.arrow == y.arrow and x.inverted != y.inverted:
        return False
    if not x.inverted and not y.inverted:
        return (x.arrow, y.arrow) not in p.relations
    if x.inverted and y.inverted:
        return (y.arrow, x.arrow) not in p.relations
    return True


def _runs_allowed(p: AlgebraPresentation, letters) -> bool:
    """Check maximal direct and inverse runs against the long relations."""
    run: list[str] = []
    inv = None
    for x in list(letters) + [None]:
        if x is None or x.inverted != inv:
            if len(run) > 2:
                path = list(reversed(run)) if inv else run
                if not p.path_allowed(path):
                    return False
            run = []
            inv = None if x is None else x.inverted
        if x is not None:
            run.append(x.arrow)
    return True


def is_valid_string(p: AlgebraPresentation, w: StringWord) -> bool:
    if w.is_trivial:
        p.quiver.check_vertex(w.vertex)
        return True
    for x in w.letters:
        if x.arrow not in p.quiver.arrow_map:
            raise UnknownArrow(x.arrow)
    letters = w.letters
    for x, y in zip(letters, letters[1:]):
        if not pair_ok(p, x, y):
            return False
    if p.long_relations and not _runs_allowed(p, letters):
        return False
    return True


def parse_string(p: AlgebraPresentation, text: str) -> StringWord:
    """Parse a literal and insist that it is a valid string over ``p``."""
    from .errors import InvalidString

    w = parse_word(text)
    if not is_valid_string(p, w):
        raise InvalidString(f"{text!r} is not a string over this presentation")
    return w


def _letter_key(p, x: Letter):
    return (p.quiver.arrow_index[x.arrow], x.inverted)


def sort_key(p: AlgebraPresentation, w: StringWord):
    """Total order: trivial < word; words by length then letters (direct < inverse)."""
    if w.is_trivial:
        return (0, p.quiver.vertex_index[w.vertex], 0 if w.sign > 0 else 1)
    return (1, len(w), tuple(_letter_key(p, x) for x in w.letters))


def canonical(p: AlgebraPresentation, w: StringWord) -> StringWord:
    """The smaller of ``w`` and ``w^-1``; trivial strings get sign +1."""
    return min(w, w.inverse(), key=lambda u: sort_key(p, u))


def _all_letters(p):
    out = []
    for a in p.arrows:
        out.append(Letter(a.name))
        out.append(Letter(a.name, True))
    return out


def enumerate_strings(p: AlgebraPresentation, max_len: int) -> list[StringWord]:
    """All canonical strings of length <= max_len, sorted by ``sort_key``."""
    found = {StringWord.trivial(v) for v in p.vertices}
    letters = _all_letters(p)
    frontier = [(x,) for x in letters]
    length = 1
    while frontier and length <= max_len:
        nxt = []
        for word in frontier:
            w = StringWord(word)
            if p.long_relations and not is_valid_string(p, w):
                continue
            found.add(canonical(p, w))
            if length < max_len:
                last = word[-1]
                for y in letters:
                    if pair_ok(p, last, y):
                        nxt.append(word + (y,))
        frontier = nxt
        length += 1
    return sorted(found, key=lambda u: sort_key(p, u))


def _power_valid(p, w: StringWord, times: int) -> bool:
    return is_valid_string(p, StringWord(w.letters * times))


def is_band(p: AlgebraPresentation, w: StringWord) -> bool:
    if w.is_trivial or not is_valid_string(p, w):
        return False
    if source(p, w) != target(p, w):
        return False
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w.letters == w.letters[:d] * (n // d):
            return False
    # every power is a string iff the square is (length-2 relations); long
    # relations need enough copies to cover one relation across the seam
    longest = max([2] + [len(r) for r in p.long_relations])
    times = max(2, -(-longest // n) + 1)
    return _power_valid(p, w, times)


def canonical_band(p: AlgebraPresentation, b: StringWord) -> StringWord:
    """Representative up to rotation and inversion."""
    n = len(b)
    cands = []
    for word in (b, b.inverse()):
        for k in range(n):
            cands.append(StringWord(word.letters[k:] + word.letters[:k]))
    return min(cands, key=lambda u: sort_key(p, u))


def enumerate_bands(p: AlgebraPresentation, max_len: int) -> list[StringWord]:
    bands = set()
    for w in enumerate_strings(p, max_len):
        if is_band(p, w):
            bands.add(canonical_band(p, w))
    return sorted(bands, key=lambda u: sort_key(p, u))


@dataclass(frozen=True)
class SignAssignment:
    sigma: dict
    epsilon: dict

    def __hash__(self):
        return hash((tuple(sorted(self.sigma.items())), tuple(sorted(self.epsilon.items()))))

    def sigma_of(self, x: Letter) -> int:
        return self.epsilon[x.arrow] if x.inverted else self.sigma[x.arrow]

    def epsilon_of(self, x: Letter) -> int:
        return self.sigma[x.arrow] if x.inverted else self.epsilon[x.arrow]

    def violations(self, p: AlgebraPresentation) -> list[str]:
        out = []
        for kind, (x, y) in _sign_constraints(p):
            lhs = self.sigma if x[0] == "s" else self.epsilon
            rhs = self.sigma if y[0] == "s" else self.epsilon
            if lhs[x[1]] != -rhs[y[1]]:
                out.append(f"{kind}: {x} vs {y}")
        return out


def _sign_constraints(p: AlgebraPresentation):
    """Pairs of sign variables that must differ: ("s"|"e", arrow)."""
    q = p.quiver
    for v in q.vertices:
        outs = q.out_arrows(v)
        for i in range(len(outs)):
            for j in range(i + 1, len(outs)):
                yield "coinitial", (("s", outs[i].name), ("s", outs[j].name))
        ins = q.in_arrows(v)
        for i in range(len(ins)):
            for j in range(i + 1, len(ins)):
                yield "coterminal", (("e", ins[i].name), ("e", ins[j].name))
    for a in q.arrows:
        for b in q.out_arrows(a.target):
            if (a.name, b.name) not in p.relations:
                yield "composable", (("s", b.name), ("e", a.name))


def assign_signs(p: AlgebraPresentation) -> SignAssignment:
    """Two-colour the constraint graph; the first variable of each component
    (sigma before epsilon, arrows in declaration order) gets +1."""
    if not p.report.gentle:
        raise NotGentle("sign assignment needs a gentle presentation")
    adj: dict = {}
    for _, (x, y) in _sign_constraints(p):
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    order = [(k, a.name) for a in p.arrows for k in ("s", "e")]
    value: dict = {}
    parent: dict = {}
    for root in order:
        if root in value:
            continue
        value[root] = 1
        parent[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj.get(x, ()):
                if y not in value:
                    value[y] = -value[x]
                    parent[y] = x
                    queue.append(y)
                elif value[y] == value[x]:
                    raise Unsatisfiable(_odd_cycle(parent, x, y))
    sigma = {a.name: value[("s", a.name)] for a in p.arrows}
    eps = {a.name: value[("e", a.name)] for a in p.arrows}
    return SignAssignment(sigma, eps)


def _odd_cycle(parent, x, y):
    def chain(z):
        out = []
        while z is not None:
            out.append(z)
            z = parent[z]
        return out

    cx, cy = chain(x), chain(y)
    common = next(z for z in cx if z in set(cy))
    path = cx[:cx.index(common) + 1] + list(reversed(cy[:cy.index(common)]))
    return [f"{'sigma' if k == 's' else 'epsilon'}({a})" for k, a in path]


def dimension_vector(p: AlgebraPresentation, w: StringWord) -> tuple[int, ...]:
    """Multiplicity of each vertex (declaration order) along the walk of ``w``."""
    vs = walk(p, w)
    return tuple(vs.count(v) for v in p.vertices)

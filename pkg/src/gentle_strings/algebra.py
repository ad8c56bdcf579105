"""Quivers with monomial relations: validation, path bases, projective and
injective strings.

Composition convention: the path ``a b`` means ``a`` first, then ``b``; the
relation ``(a, b)`` kills that path.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .errors import (
    InfiniteDimensional,
    NotGentle,
    PresentationError,
    UnknownArrow,
    UnknownVertex,
)
from .words import Letter, StringWord


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(Arrow(*map(str, a)) for a in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex id")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate arrow id")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise PresentationError(f"arrow {a.name} has an undeclared endpoint")

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, name) -> Arrow:
        try:
            return self.arrow_map[name]
        except KeyError:
            raise UnknownArrow(name) from None

    def check_vertex(self, v):
        if v not in self.vertex_index:
            raise UnknownVertex(v)

    def out_arrows(self, v) -> tuple[Arrow, ...]:
        return self._out.get(v, ())

    def in_arrows(self, v) -> tuple[Arrow, ...]:
        return self._in.get(v, ())

    @cached_property
    def _out(self):
        out: dict[str, list] = {}
        for a in self.arrows:
            out.setdefault(a.source, []).append(a)
        return {v: tuple(x) for v, x in out.items()}

    @cached_property
    def _in(self):
        out: dict[str, list] = {}
        for a in self.arrows:
            out.setdefault(a.target, []).append(a)
        return {v: tuple(x) for v, x in out.items()}


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: str


@dataclass(frozen=True)
class ValidationReport:
    gentle: bool
    string_algebra: bool
    finite_dimensional: bool
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self):
        return not self.violations


@dataclass(frozen=True)
class AlgebraPresentation:
    """``kQ/I`` with ``I`` generated by paths.

    ``relations`` holds length-2 generators as ordered arrow pairs.
    ``long_relations`` holds generators of length >= 3; a presentation with
    any of them is in string-algebra mode and never gentle.
    """

    quiver: Quiver
    relations: frozenset = field(default_factory=frozenset)
    long_relations: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        rels = frozenset(tuple(map(str, r)) for r in self.relations)
        longs = tuple(tuple(map(str, r)) for r in self.long_relations)
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "long_relations", longs)
        for rel in list(rels) + list(longs):
            if len(rel) < 2:
                raise PresentationError(f"relation {rel} is shorter than 2")
            for x in rel:
                if x not in self.quiver.arrow_map:
                    raise PresentationError(f"relation mentions unknown arrow {x}")
            for x, y in zip(rel, rel[1:]):
                if self.quiver.arrow_map[x].target != self.quiver.arrow_map[y].source:
                    raise PresentationError(f"relation {' '.join(rel)} is not composable")
            if len(rel) != 2 and rel in rels:
                raise PresentationError("relations set must hold pairs only")

    @classmethod
    def build(cls, vertices, arrows, relations=(), long_relations=()):
        quiver = Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))
        pairs, longs = [], list(long_relations)
        for r in relations:
            r = tuple(r)
            (pairs if len(r) == 2 else longs).append(r)
        return cls(quiver, frozenset(pairs), tuple(longs))

    # convenience views
    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    @property
    def string_mode(self) -> bool:
        return bool(self.long_relations)

    @cached_property
    def report(self) -> ValidationReport:
        return validate(self)

    @property
    def status(self) -> str:
        r = self.report
        if r.gentle and r.finite_dimensional:
            return "Gentle"
        if r.string_algebra and r.finite_dimensional:
            return "StringOnly"
        return "Invalid"

    @property
    def is_gentle(self) -> bool:
        return self.status == "Gentle"

    def require_gentle(self):
        if not self.is_gentle:
            raise NotGentle(f"presentation is {self.status}")

    @cached_property
    def _max_relation_length(self):
        return max([2] + [len(r) for r in self.long_relations])

    def composes(self, a: str, b: str) -> bool:
        """True if ``a`` then ``b`` is composable and not a length-2 relation."""
        qa, qb = self.quiver.arrow(a), self.quiver.arrow(b)
        return qa.target == qb.source and (a, b) not in self.relations

    def path_allowed(self, path) -> bool:
        """True if the direct path (arrow names, in order) is nonzero in A."""
        q = self.quiver
        for x, y in zip(path, path[1:]):
            if q.arrow(x).target != q.arrow(y).source or (x, y) in self.relations:
                return False
        if self.long_relations:
            path = tuple(path)
            for rel in self.long_relations:
                n = len(rel)
                for i in range(len(path) - n + 1):
                    if path[i:i + n] == rel:
                        return False
        return True

    def extends(self, path, arrow) -> bool:
        """True if appending ``arrow`` to the allowed path ``path`` stays allowed."""
        if not path:
            return True
        tail = tuple(path[-(self._max_relation_length - 1):]) + (arrow,)
        return self.path_allowed(tail)


def validate(p: AlgebraPresentation) -> ValidationReport:
    q = p.quiver
    g1, g2, g3, g4, fin = [], [], [], [], []
    for v in q.vertices:
        if len(q.out_arrows(v)) > 2:
            g1.append(Violation("G1", f"{len(q.out_arrows(v))} arrows start at {v}"))
        if len(q.in_arrows(v)) > 2:
            g1.append(Violation("G1", f"{len(q.in_arrows(v))} arrows stop at {v}"))
    for a in q.arrows:
        succ = [b.name for b in q.out_arrows(a.target)]
        pred = [c.name for c in q.in_arrows(a.source)]
        ok_succ = [b for b in succ if (a.name, b) not in p.relations]
        ok_pred = [c for c in pred if (c, a.name) not in p.relations]
        bad_succ = [b for b in succ if (a.name, b) in p.relations]
        bad_pred = [c for c in pred if (c, a.name) in p.relations]
        if len(ok_succ) > 1:
            g2.append(Violation("G2", f"{a.name} composes with {', '.join(ok_succ)}"))
        if len(ok_pred) > 1:
            g2.append(Violation("G2", f"{', '.join(ok_pred)} compose with {a.name}"))
        if len(bad_succ) > 1:
            g4.append(Violation("G4", f"{a.name} is killed by {', '.join(bad_succ)}"))
        if len(bad_pred) > 1:
            g4.append(Violation("G4", f"{', '.join(bad_pred)} kill {a.name}"))
    for rel in p.long_relations:
        g3.append(Violation("G3", f"relation {' '.join(rel)} has length {len(rel)}"))
    cycle = _infinite_path_witness(p)
    if cycle is not None:
        fin.append(Violation("FinDim", "relation-free cycle " + " ".join(cycle)))
    string_algebra = not g1 and not g2
    gentle = string_algebra and not g3 and not g4
    return ValidationReport(
        gentle=gentle,
        string_algebra=string_algebra,
        finite_dimensional=not fin,
        violations=tuple(g1 + g2 + g3 + g4 + fin),
    )


def _infinite_path_witness(p: AlgebraPresentation):
    """Cycle in the graph of allowed windows of length L-1, or None.

    L is the longest relation length; a window of L-1 arrows determines which
    arrows may follow, so an infinite allowed path exists iff this finite
    graph has a cycle.
    """
    width = p._max_relation_length - 1
    states = []

    def grow(path):
        if len(path) == width:
            states.append(tuple(path))
            return
        last = p.quiver.arrow(path[-1]).target
        for b in p.quiver.out_arrows(last):
            if p.extends(path, b.name):
                grow(path + [b.name])

    for a in p.quiver.arrows:
        grow([a.name])

    def successors(state):
        last = p.quiver.arrow(state[-1]).target
        for b in p.quiver.out_arrows(last):
            if p.extends(state, b.name):
                yield (state + (b.name,))[1:] if width > 0 else state

    color: dict = {}
    for start in states:
        if start in color:
            continue
        stack = [(start, iter(successors(start)))]
        color[start] = 1
        trail = [start]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = 2
                stack.pop()
                trail.pop()
                continue
            c = color.get(nxt)
            if c == 1:
                i = trail.index(nxt)
                return [s[-1] for s in trail[i:]] + [nxt[-1]]
            if c is None:
                color[nxt] = 1
                stack.append((nxt, iter(successors(nxt))))
                trail.append(nxt)
    return None


class Path(NamedTuple):
    start: str
    arrows: tuple[str, ...]

    def __str__(self):
        return " ".join(self.arrows) if self.arrows else f"e_{self.start}"


def end_vertex(p: AlgebraPresentation, path: Path) -> str:
    return p.quiver.arrow(path.arrows[-1]).target if path.arrows else path.start


def paths_from(p: AlgebraPresentation, v) -> list[Path]:
    """All nonzero paths starting at ``v`` (trivial path first, then by length)."""
    if not p.report.finite_dimensional:
        raise InfiniteDimensional("presentation has a relation-free cycle")
    p.quiver.check_vertex(v)
    out = [Path(v, ())]
    frontier = [()]
    while frontier:
        nxt = []
        for arrows in frontier:
            last = p.quiver.arrow(arrows[-1]).target if arrows else v
            for b in p.quiver.out_arrows(last):
                if p.extends(arrows, b.name):
                    nxt.append(arrows + (b.name,))
        nxt.sort(key=lambda a: [p.quiver.arrow_index[x] for x in a])
        out.extend(Path(v, a) for a in nxt)
        frontier = nxt
    return out


def path_basis(p: AlgebraPresentation) -> list[Path]:
    """Basis of A: trivial paths, then nontrivial paths by length."""
    per = [paths_from(p, v) for v in p.vertices]
    trivial = [ps[0] for ps in per]
    rest = sorted(
        (x for ps in per for x in ps[1:]),
        key=lambda x: (len(x.arrows), [p.quiver.arrow_index[a] for a in x.arrows]),
    )
    return trivial + rest


def _max_chain_forward(p, first: str) -> list[str]:
    chain = [first]
    while True:
        last = p.quiver.arrow(chain[-1]).target
        nxt = [b.name for b in p.quiver.out_arrows(last) if p.extends(chain, b.name)]
        if not nxt:
            return chain
        if len(nxt) > 1:
            raise NotGentle(f"path {' '.join(chain)} continues in more than one way")
        chain.append(nxt[0])


def _max_chain_backward(p, last: str) -> list[str]:
    chain = [last]
    while True:
        first = p.quiver.arrow(chain[0]).source
        prv = [c.name for c in p.quiver.in_arrows(first)
               if p.path_allowed([c.name] + chain[:p._max_relation_length - 1])]
        if not prv:
            return chain
        if len(prv) > 1:
            raise NotGentle(f"path {' '.join(chain)} is preceded in more than one way")
        chain.insert(0, prv[0])


def _require_string_algebra(p):
    r = p.report
    if not (r.string_algebra and r.finite_dimensional):
        raise NotGentle(f"presentation is {p.status}")


def projective_string(p: AlgebraPresentation, v) -> StringWord:
    """String ``w`` with ``M(w)`` the indecomposable projective at ``v``.

    With outgoing maximal paths ``p1`` (earlier arrow) and ``p2`` the string
    is ``p1^-1 p2``.
    """
    _require_string_algebra(p)
    p.quiver.check_vertex(v)
    chains = [_max_chain_forward(p, a.name) for a in p.quiver.out_arrows(v)]
    if not chains:
        return StringWord.trivial(v)
    right = [Letter(x) for x in chains[-1]]
    if len(chains) == 1:
        return StringWord.of(right)
    left = [Letter(x, True) for x in reversed(chains[0])]
    return StringWord.of(left + right)


def injective_string(p: AlgebraPresentation, v) -> StringWord:
    """String ``w`` with ``M(w)`` the indecomposable injective at ``v``.

    With incoming maximal paths ``p1`` (earlier arrow) and ``p2`` the string
    is ``p1 p2^-1``.
    """
    _require_string_algebra(p)
    p.quiver.check_vertex(v)
    chains = [_max_chain_backward(p, a.name) for a in p.quiver.in_arrows(v)]
    if not chains:
        return StringWord.trivial(v)
    left = [Letter(x) for x in chains[0]]
    if len(chains) == 1:
        return StringWord.of(left)
    right = [Letter(x, True) for x in reversed(chains[1])]
    return StringWord.of(left + right)


def is_projective(p: AlgebraPresentation, w: StringWord) -> bool:
    from .strings import canonical

    c = canonical(p, w)
    return any(canonical(p, projective_string(p, v)) == c for v in p.vertices)


def is_injective(p: AlgebraPresentation, w: StringWord) -> bool:
    from .strings import canonical

    c = canonical(p, w)
    return any(canonical(p, injective_string(p, v)) == c for v in p.vertices)

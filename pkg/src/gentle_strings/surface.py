"""Gentle algebras of triangulated unpunctured surfaces and the string of a
curve given by its crossing sequence.

Triangles are listed with their sides in clockwise order.  Inside a triangle
there is an arrow from each internal side to the next internal side, and an
internal triangle (three internal sides) kills every two-arrow subpath of its
3-cycle.  Triangles are numbered from 0 in declaration order.

Curves are input data: a record lists the arcs crossed in order, together
with the triangle joining each crossing to the next.  Intersection numbers are
the crossing counts, boundary segments count zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional

from .algebra import AlgebraPresentation
from .errors import (DatasetInvalid, InconsistentRecord, InvalidCrossing,
                     NotAString, NotTriangulation)
from .homext import is_exceptional
from .strings import canonical, dimension_vector as _dims, enumerate_strings, is_valid_string
from .words import Letter, StringWord

ARC = "arc"
RIGID = "rigid"
SELFINT = ("start", "end", "both", "none")


@dataclass(frozen=True)
class Triangulation:
    internal_arcs: tuple[str, ...]
    boundary_segments: tuple[str, ...]
    triangles: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        arcs, segs = set(self.internal_arcs), set(self.boundary_segments)
        if len(arcs) != len(self.internal_arcs) or len(segs) != len(self.boundary_segments):
            raise NotTriangulation("duplicate side names")
        if arcs & segs:
            raise NotTriangulation(f"sides declared twice: {sorted(arcs & segs)}")
        count = {s: 0 for s in self.internal_arcs + self.boundary_segments}
        for n, tri in enumerate(self.triangles):
            if len(tri) != 3:
                raise NotTriangulation(f"triangle {n} has {len(tri)} sides")
            if len(set(tri)) != 3:
                raise NotTriangulation(f"triangle {n} repeats a side")
            for s in tri:
                if s not in count:
                    raise NotTriangulation(f"triangle {n} uses undeclared side {s}")
                count[s] += 1
        for s, c in count.items():
            want = 2 if s in arcs else 1
            if c != want:
                raise NotTriangulation(f"side {s} appears in {c} triangle slots, expected {want}")

    def is_internal(self, side) -> bool:
        return side in self.internal_arcs

    def triangles_of(self, arc) -> list[int]:
        return [n for n, tri in enumerate(self.triangles) if arc in tri]

    def other_triangle(self, arc, n) -> int:
        rest = [m for m in self.triangles_of(arc) if m != n]
        if len(rest) != 1:
            raise InvalidCrossing(f"arc {arc} does not border triangle {n}")
        return rest[0]


def arrow_name(a, b, n) -> str:
    return f"{a}>{b}@{n}"


def _triangle_arrows(t: Triangulation, n: int):
    """``(name, source, target)`` for the arrows drawn inside triangle ``n``."""
    tri = t.triangles[n]
    out = []
    for k in range(3):
        a, b = tri[k], tri[(k + 1) % 3]
        if t.is_internal(a) and t.is_internal(b):
            out.append((arrow_name(a, b, n), a, b))
    return out


def algebra_from_triangulation(t: Triangulation) -> AlgebraPresentation:
    arrows, relations = [], []
    for n, tri in enumerate(t.triangles):
        mine = _triangle_arrows(t, n)
        arrows.extend(mine)
        if all(t.is_internal(s) for s in tri):
            for k in range(3):
                relations.append((mine[k][0], mine[(k + 1) % 3][0]))
    return AlgebraPresentation.build(t.internal_arcs, arrows, relations)


def match_presentation(p: AlgebraPresentation, q: AlgebraPresentation) -> Optional[dict]:
    """Arrow renaming ``p -> q`` fixing vertex ids and carrying relations onto
    relations, or ``None``.  Parallel arrows are matched by brute force."""
    if set(p.vertices) != set(q.vertices) or len(p.arrows) != len(q.arrows):
        return None
    if p.long_relations or q.long_relations:
        raise ValueError("only quadratic presentations are compared")
    groups: dict = {}
    for a in p.arrows:
        groups.setdefault((a.source, a.target), [[], []])[0].append(a.name)
    for a in q.arrows:
        key = (a.source, a.target)
        if key not in groups:
            return None
        groups[key][1].append(a.name)
    keys = sorted(groups, key=str)
    if any(len(groups[k][0]) != len(groups[k][1]) for k in keys):
        return None

    def search(i, acc):
        if i == len(keys):
            mapped = {(acc[x], acc[y]) for x, y in p.relations}
            return dict(acc) if mapped == set(q.relations) else None
        src, dst = groups[keys[i]]
        for perm in permutations(dst):
            acc.update(zip(src, perm))
            found = search(i + 1, acc)
            if found is not None:
                return found
        for x in src:
            acc.pop(x, None)
        return None

    return search(0, {})


def rename(w: StringWord, mapping: dict) -> StringWord:
    if w.is_trivial:
        return w
    return StringWord(tuple(Letter(mapping[x.arrow], x.inverted) for x in w.letters))


@dataclass(frozen=True)
class CurveRecord:
    kind: str
    crossings: tuple[tuple[str, Optional[int]], ...]
    start_triangle: int
    end_triangle: int
    self_intersection: str = "none"
    label: str = ""

    def __post_init__(self):
        if self.kind not in (ARC, RIGID):
            raise InconsistentRecord(f"unknown curve kind {self.kind!r}")
        if self.self_intersection not in SELFINT:
            raise InconsistentRecord(f"unknown self-intersection end {self.self_intersection!r}")
        if self.kind == ARC and self.self_intersection != "none":
            raise InconsistentRecord("an arc has no self-intersection")
        if not self.crossings:
            raise InconsistentRecord("a curve not in the triangulation crosses at least one arc")

    @property
    def arcs(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.crossings)


def _check_terminals(t: Triangulation, c: CurveRecord):
    first, last = c.crossings[0][0], c.crossings[-1][0]
    for arc in (first, last):
        if not t.is_internal(arc):
            raise InvalidCrossing(f"{arc} is not an internal arc")
    if len(c.crossings) == 1:
        expect = set(t.triangles_of(first))
        if {c.start_triangle, c.end_triangle} != expect:
            raise InconsistentRecord(
                f"terminal triangles of a single crossing of {first} must be {sorted(expect)}")
        return
    start = t.other_triangle(first, c.crossings[0][1])
    end = t.other_triangle(last, c.crossings[-2][1])
    if c.start_triangle != start:
        raise InconsistentRecord(f"start triangle should be {start}, record says {c.start_triangle}")
    if c.end_triangle != end:
        raise InconsistentRecord(f"end triangle should be {end}, record says {c.end_triangle}")


def string_from_crossings(t: Triangulation, c: CurveRecord,
                          p: Optional[AlgebraPresentation] = None) -> StringWord:
    p = p if p is not None else algebra_from_triangulation(t)
    for arc, _ in c.crossings:
        if not t.is_internal(arc):
            raise InvalidCrossing(f"{arc} is not an internal arc")
    _check_terminals(t, c)
    if len(c.crossings) == 1:
        return StringWord.trivial(c.crossings[0][0])
    letters = []
    for (a, via), (b, _) in zip(c.crossings, c.crossings[1:]):
        if via is None or not 0 <= via < len(t.triangles):
            raise InvalidCrossing(f"crossing {a} names no valid triangle")
        found = None
        for name, s, e in _triangle_arrows(t, via):
            if (s, e) == (a, b):
                found = Letter(name)
            elif (s, e) == (b, a):
                found = Letter(name, True)
        if found is None:
            raise InvalidCrossing(f"{a} and {b} are not joined inside triangle {via}")
        letters.append(found)
    w = StringWord(tuple(letters))
    if not is_valid_string(p, w):
        raise NotAString(f"crossings give {w}, which is not a string")
    return w


def dimension_vector(p: AlgebraPresentation, w: StringWord) -> dict:
    return dict(zip(p.vertices, _dims(p, w)))


# triangle conditions

def _orderings(values):
    """``(k, j, l)`` value triples with every side in the ``l`` slot once."""
    x, y, z = values
    return [(y, z, x), (x, z, y), (x, y, z)]


def pattern_star(values) -> bool:
    # no terminal segment: triangle inequality and even total
    return sum(values) % 2 == 0 and all(k + j >= l for k, j, l in _orderings(values))


def pattern_two_star(values, allowed) -> bool:
    # one terminal segment ending on side l
    return sum(values) % 2 == 1 and any(
        k + j + 1 == l for (k, j, l), ok in zip(_orderings(values), allowed) if ok)


def pattern_three_star(values, allowed) -> bool:
    # both terminal segments end on side l
    return sum(values) % 2 == 0 and any(
        k + j + 2 == l for (k, j, l), ok in zip(_orderings(values), allowed) if ok)


def pattern_four_star(values) -> bool:
    return (sum(values) % 2 == 1 and all(values)
            and all(k + j >= l + 1 for k, j, l in _orderings(values)))


def pattern_five_star(values) -> bool:
    return all(values) and pattern_star(values)


@dataclass
class TriangleCheck:
    index: int
    sides: tuple
    values: tuple
    role: str
    required: str
    patterns: tuple
    ok: bool


@dataclass
class ConditionReport:
    word: StringWord
    dims: dict
    triangles: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(tc.ok for tc in self.triangles)

    @property
    def first_violation(self) -> Optional[TriangleCheck]:
        return next((tc for tc in self.triangles if not tc.ok), None)


def _required(c: CurveRecord, n: int) -> tuple[str, str]:
    start, end = c.start_triangle, c.end_triangle
    if n not in (start, end):
        return "inner", "*"
    if start == end:
        if c.kind == ARC:
            return "terminal", "***"
        return "terminal", "*****"
    role = "start" if n == start else "end"
    if c.kind == RIGID and c.self_intersection in (role, "both"):
        return role, "****"
    return role, "**"


def evaluate_conditions(t: Triangulation, c: CurveRecord,
                        p: Optional[AlgebraPresentation] = None) -> ConditionReport:
    p = p if p is not None else algebra_from_triangulation(t)
    w = string_from_crossings(t, c, p)
    dims = dimension_vector(p, w)
    first, last = c.arcs[0], c.arcs[-1]
    report = ConditionReport(w, dims)
    for n, tri in enumerate(t.triangles):
        values = tuple(dims.get(s, 0) for s in tri)
        role, required = _required(c, n)
        if role == "start":
            ends = {first}
        elif role == "end":
            ends = {last}
        else:
            ends = {first} & {last}
        allowed = [s in ends for s in tri]
        found = []
        if pattern_star(values):
            found.append("*")
        if pattern_two_star(values, allowed):
            found.append("**")
        if pattern_three_star(values, allowed):
            found.append("***")
        if pattern_four_star(values):
            found.append("****")
        if pattern_five_star(values):
            found.append("*****")
        report.triangles.append(TriangleCheck(
            n, tri, values, role, required, tuple(found), required in found))
    return report


def curve_conditions(t: Triangulation, c: CurveRecord,
                     p: Optional[AlgebraPresentation] = None) -> ConditionReport:
    """Evaluate the triangle conditions; raise on the first violated one."""
    report = evaluate_conditions(t, c, p)
    bad = report.first_violation
    if bad is not None:
        raise InconsistentRecord(
            f"triangle {bad.index} {bad.sides} has values {bad.values}: "
            f"condition ({bad.required}) fails for the {bad.role} triangle")
    return report


# the dimension-vector audit

@dataclass
class AuditReport:
    checked: int = 0
    strings: int = 0
    exceptional: int = 0
    violations: list = field(default_factory=list)           # clause (a)
    arc_vector_clashes: list = field(default_factory=list)   # clause (b)
    nonexceptional_collisions: list = field(default_factory=list)  # clause (c)
    exceptional_collisions: list = field(default_factory=list)     # clause (d)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.arc_vector_clashes


def dimension_vector_audit(t: Triangulation, dataset, max_len: int = 8) -> AuditReport:
    """Check that every arc string is the only exceptional string with its
    dimension vector, over all strings up to ``max_len``."""
    p = algebra_from_triangulation(t)
    records = list(dataset)
    words = []
    for i, c in enumerate(records):
        try:
            curve_conditions(t, c, p)
            w = string_from_crossings(t, c, p)
        except InconsistentRecord as e:
            raise DatasetInvalid(f"record {i} ({c.label or c.kind}): {e}") from e
        if not is_exceptional(p, w):
            raise DatasetInvalid(f"record {i} ({c.label or c.kind}): {w} has self-extensions")
        words.append(canonical(p, w))
    report = AuditReport()
    if not records:
        return report
    by_vector: dict = {}
    strings = enumerate_strings(p, max_len)
    report.strings = len(strings)
    for u in strings:
        exc = is_exceptional(p, u)
        report.exceptional += exc
        by_vector.setdefault(_dims(p, u), []).append((u, exc))
    arc_words = {}
    for c, w in zip(records, words):
        vec = _dims(p, w)
        if c.kind == ARC:
            if vec in arc_words and arc_words[vec] != w:
                report.arc_vector_clashes.append((arc_words[vec], w))
            arc_words[vec] = w
    for vec, w in arc_words.items():
        report.checked += 1
        for u, exc in by_vector.get(vec, ()):
            if u == w:
                continue
            if exc:
                report.violations.append((w, u))
            else:
                report.nonexceptional_collisions.append((w, u))
    for vec, items in by_vector.items():
        if vec in arc_words:
            continue
        exc = [u for u, e in items if e]
        if len(exc) > 1:
            report.exceptional_collisions.append((vec, tuple(exc)))
    return report

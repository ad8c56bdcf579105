"""Readers and writers for the plain-text input formats.

Presentation (``.alg``)::

    vertex 1
    arrow a 1 2
    rel a b          # a then b is zero; three or more arrows: a long relation

Triangulation (``.tri``), triangle sides clockwise, numbered from 0::

    arc t1
    bseg b1
    tri t1 t2 t3

Curve dataset (``.curves``), one record per line; the last crossing has no
triangle::

    arc   start=1 end=0 selfint=none crossings=t2:0,t1:1,t2 label=winding

``#`` starts a comment everywhere.
"""
from __future__ import annotations

from pathlib import Path

from .algebra import AlgebraPresentation, Arrow, Quiver
from .errors import GentleError, ParseError
from .surface import ARC, RIGID, SELFINT, CurveRecord, Triangulation


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_presentation(text: str, path=None) -> AlgebraPresentation:
    vertices: list[str] = []
    arrows: dict[str, Arrow] = {}
    pairs, longs = [], []
    for no, toks in _lines(text):
        head, args = toks[0], toks[1:]
        if head == "vertex":
            if len(args) != 1:
                raise ParseError(no, "expected: vertex <id>", path)
            if args[0] in vertices:
                raise ParseError(no, f"duplicate vertex {args[0]}", path)
            vertices.append(args[0])
        elif head == "arrow":
            if len(args) != 3:
                raise ParseError(no, "expected: arrow <id> <source> <target>", path)
            name, s, t = args
            if name in arrows:
                raise ParseError(no, f"duplicate arrow {name}", path)
            for v in (s, t):
                if v not in vertices:
                    raise ParseError(no, f"unknown vertex {v}", path)
            if name.endswith("-") or name.startswith("1_"):
                raise ParseError(no, f"arrow id {name!r} clashes with the string syntax", path)
            arrows[name] = Arrow(name, s, t)
        elif head == "rel":
            if len(args) < 2:
                raise ParseError(no, "a relation has at least two arrows", path)
            for x in args:
                if x not in arrows:
                    raise ParseError(no, f"unknown arrow {x}", path)
            for x, y in zip(args, args[1:]):
                if arrows[x].target != arrows[y].source:
                    raise ParseError(no, f"relation {' '.join(args)} is not composable at {x} {y}", path)
            (pairs if len(args) == 2 else longs).append(tuple(args))
        else:
            raise ParseError(no, f"unknown directive {head!r}", path)
    if not vertices:
        raise ParseError(0, "no vertices declared", path)
    quiver = Quiver(tuple(vertices), tuple(arrows.values()))
    return AlgebraPresentation(quiver, frozenset(pairs), tuple(longs))


def format_presentation(p: AlgebraPresentation) -> str:
    out = [f"vertex {v}" for v in p.vertices]
    out += [f"arrow {a.name} {a.source} {a.target}" for a in p.arrows]
    rels = sorted(p.relations, key=lambda r: [p.quiver.arrow_index[x] for x in r])
    out += ["rel " + " ".join(r) for r in list(rels) + list(p.long_relations)]
    return "\n".join(out) + "\n"


def parse_triangulation(text: str, path=None) -> Triangulation:
    arcs: list[str] = []
    segs: list[str] = []
    tris = []
    for no, toks in _lines(text):
        head, args = toks[0], toks[1:]
        if head in ("arc", "bseg"):
            if len(args) != 1:
                raise ParseError(no, f"expected: {head} <id>", path)
            if args[0] in arcs or args[0] in segs:
                raise ParseError(no, f"duplicate side {args[0]}", path)
            (arcs if head == "arc" else segs).append(args[0])
        elif head == "tri":
            if len(args) != 3:
                raise ParseError(no, "expected: tri <side> <side> <side>", path)
            for s in args:
                if s not in arcs and s not in segs:
                    raise ParseError(no, f"undeclared side {s}", path)
            tris.append(tuple(args))
        else:
            raise ParseError(no, f"unknown directive {head!r}", path)
    return Triangulation(tuple(arcs), tuple(segs), tuple(tris))


def format_triangulation(t: Triangulation) -> str:
    out = [f"arc {a}" for a in t.internal_arcs]
    out += [f"bseg {s}" for s in t.boundary_segments]
    out += ["tri " + " ".join(tri) for tri in t.triangles]
    return "\n".join(out) + "\n"


def _int(value, no, key, path):
    try:
        return int(value)
    except ValueError:
        raise ParseError(no, f"{key} must be an integer, got {value!r}", path) from None


def parse_curves(text: str, path=None) -> list[CurveRecord]:
    records = []
    for no, toks in _lines(text):
        kind = toks[0]
        if kind not in (ARC, RIGID):
            raise ParseError(no, f"record kind must be arc or rigid, got {kind!r}", path)
        fields = {}
        for tok in toks[1:]:
            key, sep, value = tok.partition("=")
            if not sep:
                raise ParseError(no, f"expected key=value, got {tok!r}", path)
            fields[key] = value
        missing = {"start", "end", "crossings"} - set(fields)
        if missing:
            raise ParseError(no, f"missing field(s): {', '.join(sorted(missing))}", path)
        unknown = set(fields) - {"start", "end", "selfint", "crossings", "label"}
        if unknown:
            raise ParseError(no, f"unknown field(s): {', '.join(sorted(unknown))}", path)
        selfint = fields.get("selfint", "none")
        if selfint not in SELFINT:
            raise ParseError(no, f"selfint must be one of {', '.join(SELFINT)}", path)
        items = [x for x in fields["crossings"].split(",") if x]
        if not items:
            raise ParseError(no, "empty crossing list", path)
        crossings = []
        for i, item in enumerate(items):
            arc, _, via = item.partition(":")
            last = i == len(items) - 1
            if not arc:
                raise ParseError(no, f"bad crossing {item!r}", path)
            if last:
                if via:
                    raise ParseError(no, "the last crossing takes no triangle", path)
                crossings.append((arc, None))
            else:
                if not via:
                    raise ParseError(no, f"crossing {arc} needs a triangle to the next crossing", path)
                crossings.append((arc, _int(via, no, "triangle", path)))
        try:
            records.append(CurveRecord(
                kind, tuple(crossings),
                _int(fields["start"], no, "start", path),
                _int(fields["end"], no, "end", path),
                selfint, fields.get("label", ""),
            ))
        except GentleError as e:
            raise ParseError(no, str(e), path) from e
    return records


def format_curve(c: CurveRecord) -> str:
    cross = ",".join(a if via is None else f"{a}:{via}" for a, via in c.crossings)
    line = (f"{c.kind} start={c.start_triangle} end={c.end_triangle} "
            f"selfint={c.self_intersection} crossings={cross}")
    if c.label:
        line += f" label={c.label}"
    return line


def _read(path):
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(0, f"not UTF-8: {e}", str(path)) from e


def load_presentation(path) -> AlgebraPresentation:
    return parse_presentation(_read(path), str(path))


def load_triangulation(path) -> Triangulation:
    return parse_triangulation(_read(path), str(path))


def load_curves(path) -> list[CurveRecord]:
    return parse_curves(_read(path), str(path))


def fixture_path(name: str) -> Path:
    return Path(__file__).parent / "fixtures" / name


__all__ = [
    "parse_presentation", "format_presentation", "parse_triangulation",
    "format_triangulation", "parse_curves", "format_curve", "load_presentation",
    "load_triangulation", "load_curves", "fixture_path",
]

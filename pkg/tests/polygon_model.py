"""Triangulated convex polygons with straight diagonals as curves.

Vertices 0..n-1 sit counterclockwise on a circle.  A diagonal that is not in
the triangulation is an arc; its crossings are the triangulation diagonals it
meets, ordered along the segment.
"""
from __future__ import annotations

import math

from gentle_strings.surface import ARC, CurveRecord, Triangulation


def side_name(a, b):
    a, b = sorted((a, b))
    return f"d{a}_{b}"


def random_triangulation(rng, n):
    """``(Triangulation, diagonals, triangles as vertex triples)``."""
    tris = []

    def split(poly):
        if len(poly) == 3:
            tris.append(tuple(poly))
            return
        k = rng.randrange(1, len(poly) - 1)
        # triangle on the base (poly[0], poly[-1]) with apex poly[k]
        tris.append((poly[0], poly[k], poly[-1]))
        if k >= 2:
            split(poly[:k + 1])
        if len(poly) - k >= 3:
            split(poly[k:])

    split(list(range(n)))
    boundary = {side_name(i, (i + 1) % n) for i in range(n)}
    diagonals = sorted({side_name(x, y) for t in tris for x, y in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))}
                       - boundary)
    triangles = []
    for a, b, c in (tuple(sorted(t)) for t in tris):
        # a < b < c counterclockwise, so clockwise is a -> c -> b
        triangles.append((side_name(a, c), side_name(c, b), side_name(b, a)))
    t = Triangulation(tuple(diagonals), tuple(sorted(boundary)), tuple(triangles))
    return t, [tuple(sorted(x)) for x in tris]


def _point(i, n):
    ang = 2 * math.pi * i / n
    return math.cos(ang), math.sin(ang)


def _crossing_param(p, q, r, s):
    """Parameter along p->q where it crosses segment r-s properly, or None."""
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p, q, r, s
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if abs(den) < 1e-12:
        return None
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
    u = -((x1 - x2) * (y1 - y3) - (y1 - y2) * (x1 - x3)) / den
    if 1e-9 < t < 1 - 1e-9 and 1e-9 < u < 1 - 1e-9:
        return t
    return None


def diagonal_record(t: Triangulation, tris, n, i, j) -> CurveRecord:
    """Crossing record of the straight segment from vertex i to vertex j."""
    p, q = _point(i, n), _point(j, n)
    hits = []
    for d in t.internal_arcs:
        a, b = (int(x) for x in d[1:].split("_"))
        par = _crossing_param(p, q, _point(a, n), _point(b, n))
        if par is not None:
            hits.append((par, d))
    hits.sort()
    arcs = [d for _, d in hits]
    vias = []
    for x, y in zip(arcs, arcs[1:]):
        (k,) = [m for m, tri in enumerate(t.triangles) if x in tri and y in tri]
        vias.append(k)
    corner = lambda m: set(tris[m])
    if len(arcs) == 1:
        start = next(m for m in t.triangles_of(arcs[0]) if i in corner(m))
        end = next(m for m in t.triangles_of(arcs[0]) if m != start)
    else:
        start = t.other_triangle(arcs[0], vias[0])
        end = t.other_triangle(arcs[-1], vias[-1])
    crossings = tuple(zip(arcs, vias + [None]))
    return CurveRecord(ARC, crossings, start, end, label=f"{i}-{j}")


def non_triangulation_diagonals(t: Triangulation, n):
    inner = set(t.internal_arcs)
    out = []
    for i in range(n):
        for j in range(i + 2, n):
            if (i, j) == (0, n - 1) or side_name(i, j) in inner:
                continue
            out.append((i, j))
    return out

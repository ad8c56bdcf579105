"""Explicit representations and exact Hom / Ext^1 dimensions.

This is the ground truth the combinatorial modules are checked against.
A representation stores one dimension per vertex and one matrix per arrow,
``matrix[a]`` of shape ``dims[target] x dims[source]``; entries are ints or
Fractions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exact
from .algebra import AlgebraPresentation, end_vertex, paths_from
from .errors import ShapeMismatch
from .strings import walk
from .words import StringWord


@dataclass
class Representation:
    dims: dict
    matrices: dict

    def dim(self, v) -> int:
        return self.dims.get(v, 0)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self, p) -> tuple[int, ...]:
        return tuple(self.dim(v) for v in p.vertices)


def zero_rep(p: AlgebraPresentation) -> Representation:
    return Representation({v: 0 for v in p.vertices},
                          {a.name: [] for a in p.arrows})


def _check_shapes(p, m: Representation):
    for a in p.arrows:
        mat = m.matrices[a.name]
        rows, cols = m.dim(a.target), m.dim(a.source)
        if len(mat) != rows or any(len(r) != cols for r in mat):
            raise ShapeMismatch(f"arrow {a.name}: expected {rows}x{cols}")


def string_to_rep(p: AlgebraPresentation, w: StringWord) -> Representation:
    """Basis = walk positions; letters act as 0/1 maps between positions."""
    vs = walk(p, w)
    local = []
    counts: dict = {v: 0 for v in p.vertices}
    for v in vs:
        local.append(counts[v])
        counts[v] += 1
    mats = {a.name: exact.zeros(counts[a.target], counts[a.source]) for a in p.arrows}
    for k, x in enumerate(w.letters, start=1):
        if x.inverted:
            src, dst = k, k - 1
        else:
            src, dst = k - 1, k
        mats[x.arrow][local[dst]][local[src]] = 1
    return Representation(counts, mats)


def direct_sum(p: AlgebraPresentation, reps) -> Representation:
    reps = list(reps)
    dims = {v: sum(r.dim(v) for r in reps) for v in p.vertices}
    mats = {}
    for a in p.arrows:
        big = exact.zeros(dims[a.target], dims[a.source])
        r0 = c0 = 0
        for r in reps:
            for i, row in enumerate(r.matrices[a.name]):
                for j, x in enumerate(row):
                    if x:
                        big[r0 + i][c0 + j] = x
            r0 += r.dim(a.target)
            c0 += r.dim(a.source)
        mats[a.name] = big
    return Representation(dims, mats)


def satisfies_relations(p: AlgebraPresentation, m: Representation) -> bool:
    """Every relation path acts as zero (left letter acts first)."""
    for rel in list(p.relations) + list(p.long_relations):
        d0 = m.dim(p.quiver.arrow(rel[0]).source)
        prod = exact.identity(d0)
        for a in rel:
            prod = exact.matmul(m.matrices[a], prod, n=d0)
        if any(x for row in prod for x in row):
            return False
    return True


def _hom_rows(p, m: Representation, n: Representation):
    """Sparse equations ``f_t M(a) - N(a) f_s = 0`` in the entries of f."""
    offset = {}
    k = 0
    for v in p.vertices:
        offset[v] = k
        k += n.dim(v) * m.dim(v)

    def var(v, r, c):
        return offset[v] + r * m.dim(v) + c

    rows = []
    for a in p.arrows:
        s, t = a.source, a.target
        ma, na = m.matrices[a.name], n.matrices[a.name]
        ms, mt, ns, nt = m.dim(s), m.dim(t), n.dim(s), n.dim(t)
        if not ms or not nt:
            continue
        mcols = [[(kk, ma[kk][j]) for kk in range(mt) if ma[kk][j]] for j in range(ms)]
        nrows = [[(kk, x) for kk, x in enumerate(na[i]) if x] for i in range(nt)]
        for i in range(nt):
            for j in range(ms):
                row: dict = {}
                for kk, x in mcols[j]:
                    c = var(t, i, kk)
                    row[c] = row.get(c, 0) + x
                for kk, x in nrows[i]:
                    c = var(s, kk, j)
                    row[c] = row.get(c, 0) - x
                row = {c: x for c, x in row.items() if x}
                if row:
                    rows.append(row)
    return k, rows


def hom_dim_linalg(p: AlgebraPresentation, m: Representation, n: Representation) -> int:
    _check_shapes(p, m)
    _check_shapes(p, n)
    nvars, rows = _hom_rows(p, m, n)
    if not nvars:
        return 0
    return nvars - exact.sparse_rank(rows)


@lru_cache(maxsize=None)
def projective_rep(p: AlgebraPresentation, v) -> tuple[Representation, tuple]:
    """``P_v`` on the basis of nonzero paths from ``v``; also returns the
    paths grouped per vertex in basis order."""
    paths = paths_from(p, v)
    per: dict = {u: [] for u in p.vertices}
    for path in paths:
        per[end_vertex(p, path)].append(path)
    index = {path: i for u in p.vertices for i, path in enumerate(per[u])}
    mats = {}
    for a in p.arrows:
        mat = exact.zeros(len(per[a.target]), len(per[a.source]))
        for j, path in enumerate(per[a.source]):
            longer = type(path)(path.start, path.arrows + (a.name,))
            if longer in index:
                mat[index[longer]][j] = 1
        mats[a.name] = mat
    dims = {u: len(per[u]) for u in p.vertices}
    return Representation(dims, mats), tuple((u, tuple(per[u])) for u in p.vertices)


def _apply_path(m: Representation, p, path, vec):
    for a in path.arrows:
        mat = m.matrices[a]
        vec = [sum(x * y for x, y in zip(row, vec)) for row in mat]
    return vec


def top_vectors(p: AlgebraPresentation, m: Representation) -> list[tuple[str, list]]:
    """Basis vectors spanning a complement of rad M, as ``(vertex, vector)``."""
    tops = []
    for v in p.vertices:
        d = m.dim(v)
        if not d:
            continue
        rad_cols = []
        for a in p.quiver.in_arrows(v):
            mat = m.matrices[a.name]
            for j in range(m.dim(a.source)):
                col = [mat[i][j] for i in range(d)]
                if any(col):
                    rad_cols.append(col)
        basis = list(rad_cols)
        r = exact.rank(basis) if basis else 0
        for i in range(d):
            e = [int(k == i) for k in range(d)]
            if exact.rank(basis + [e]) > r:
                basis.append(e)
                r += 1
                tops.append((v, e))
    return tops


def projective_cover(p: AlgebraPresentation, m: Representation):
    """``(P0, cover)`` with ``cover[u]`` the matrix ``P0_u -> M_u``."""
    tops = top_vectors(p, m)
    summands = []
    cover_blocks: dict = {u: [] for u in p.vertices}
    for v, vec in tops:
        pv, per = projective_rep(p, v)
        summands.append(pv)
        for u, paths in per:
            cols = [_apply_path(m, p, path, vec) for path in paths]
            cover_blocks[u].append(cols)
    p0 = direct_sum(p, summands)
    cover = {}
    for u in p.vertices:
        cols = [c for block in cover_blocks[u] for c in block]
        cover[u] = [[c[i] for c in cols] for i in range(m.dim(u))]
    return p0, cover


def syzygy(p: AlgebraPresentation, m: Representation) -> Representation:
    """Kernel of the projective cover, with the induced arrow actions."""
    p0, cover = projective_cover(p, m)
    kernels = {}
    free = {}
    for u in p.vertices:
        ncols = p0.dim(u)
        mat = cover[u] if m.dim(u) else []
        kernels[u] = exact.nullspace(mat, ncols)
        free[u] = exact.free_columns(mat, ncols)
    dims = {u: len(kernels[u]) for u in p.vertices}
    mats = {}
    for a in p.arrows:
        pa = p0.matrices[a.name]
        cols = []
        for x in kernels[a.source]:
            y = [sum(c * z for c, z in zip(row, x)) for row in pa]
            cols.append([y[c] for c in free[a.target]])
        mats[a.name] = [[_norm(cols[j][i]) for j in range(len(cols))]
                        for i in range(dims[a.target])]
    return Representation(dims, mats)


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def ext1_dim_linalg(p: AlgebraPresentation, m: Representation, n: Representation) -> int:
    """dim Ext^1(M, N) = hom(Omega M, N) - hom(P0, N) + hom(M, N)."""
    omega = syzygy(p, m)
    hom_p0 = sum(n.dim(v) for v, _ in top_vectors(p, m))
    return hom_dim_linalg(p, omega, n) - hom_p0 + hom_dim_linalg(p, m, n)


# cached string-level helpers for sweeps

@lru_cache(maxsize=None)
def string_rep(p: AlgebraPresentation, w: StringWord) -> Representation:
    return string_to_rep(p, w)


@lru_cache(maxsize=None)
def _string_syzygy(p, w):
    m = string_rep(p, w)
    return syzygy(p, m), tuple(v for v, _ in top_vectors(p, m))


@lru_cache(maxsize=None)
def string_hom_dim(p: AlgebraPresentation, w: StringWord, v: StringWord) -> int:
    return hom_dim_linalg(p, string_rep(p, w), string_rep(p, v))


@lru_cache(maxsize=None)
def string_ext1_dim(p: AlgebraPresentation, w: StringWord, v: StringWord) -> int:
    omega, tops = _string_syzygy(p, w)
    n = string_rep(p, v)
    return (hom_dim_linalg(p, omega, n) - sum(n.dim(t) for t in tops)
            + string_hom_dim(p, w, v))

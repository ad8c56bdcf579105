"""Exact rank and nullspace over the rationals.

Rows are reduced fraction-free: entries stay integers and every row is divided
by the gcd of its entries after each combination.  Rational input is scaled
to integers row by row first.  No floating point is used anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _content(values) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def integer_row(row) -> list[int]:
    """Scale a row of ints/Fractions to a primitive integer row (same kernel)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = _content(ints)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _sparse_integer_row(row: dict) -> dict[int, int]:
    den = 1
    for x in row.values():
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    out = {c: int(x * den) for c, x in row.items() if x != 0}
    g = _content(out.values())
    if g > 1:
        out = {c: x // g for c, x in out.items()}
    return out


def sparse_rank(rows) -> int:
    """Rank of a matrix given as an iterable of ``{column: value}`` dicts."""
    pivots: list[tuple[int, dict[int, int]]] = []
    for raw in rows:
        row = _sparse_integer_row(raw)
        if not row:
            continue
        # later pivot rows are zero in earlier pivot columns, so one pass in
        # insertion order clears every pivot column
        for col, prow in pivots:
            a = row.get(col)
            if not a:
                continue
            p = prow[col]
            new = {c: x * p for c, x in row.items()}
            for c, y in prow.items():
                v = new.get(c, 0) - a * y
                if v:
                    new[c] = v
                else:
                    new.pop(c, None)
            g = _content(new.values())
            if g > 1:
                new = {c: x // g for c, x in new.items()}
            row = new
            if not row:
                break
        if row:
            pivots.append((min(row), row))
    return len(pivots)


def rank(matrix) -> int:
    """Rank of a dense matrix (list of rows)."""
    return sparse_rank({j: x for j, x in enumerate(r) if x} for r in matrix)


def rref(matrix):
    """Fraction-free Gauss-Jordan elimination.

    Returns ``(rows, pivot_columns)`` where ``rows`` are primitive integer rows
    of the reduced echelon form (pivot entries positive, not normalised to 1).
    """
    rows = [integer_row(r) for r in matrix]
    ncols = len(rows[0]) if rows else 0
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        p = rows[r][c]
        for i in range(len(rows)):
            if i == r or not rows[i][c]:
                continue
            a = rows[i][c]
            new = [x * p - a * y for x, y in zip(rows[i], rows[r])]
            g = _content(new)
            rows[i] = [x // g for x in new] if g > 1 else new
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivot_cols


def nullspace(matrix, ncols=None) -> list[list[Fraction]]:
    """Basis of ``{x : matrix @ x = 0}``.

    Basis vector ``k`` is 1 at the k-th free column and 0 at the other free
    columns, so the coordinates of any kernel vector ``y`` in this basis are
    simply ``[y[c] for c in free_columns(...)]``.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            if row[f]:
                x[pc] = Fraction(-row[f], row[pc])
        basis.append(x)
    return basis


def free_columns(matrix, ncols=None) -> list[int]:
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return list(range(ncols))
    _, pivots = rref(matrix)
    pv = set(pivots)
    return [c for c in range(ncols) if c not in pv]


def matmul(a, b, n=None):
    """Dense product; ``a`` is m x k, ``b`` is k x n.  Pass ``n`` when k == 0."""
    if not a:
        return []
    if n is None:
        n = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * n
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]

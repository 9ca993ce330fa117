"""Exact dense linear algebra over any field-like scalar type exposing
is_zero(), inv(), and +,-,* (used with the q-rational scalars)."""
from __future__ import annotations


def rref(rows, ncols):
    """Reduced row echelon form in place; returns (rows, pivot column list)."""
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if not rows[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inv()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols, zero, one):
    """Basis of the right nullspace as a list of column vectors."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(v)
    return basis


def in_row_span(red, pivots, vec):
    """Whether vec lies in the span of rref rows (red, pivots)."""
    v = list(vec)
    for i, pc in enumerate(pivots):
        if not v[pc].is_zero():
            f = v[pc]
            v = [a - f * b for a, b in zip(v, red[i])]
    return all(x.is_zero() for x in v)


def determinant(rows):
    """Determinant by fraction-free-ish Gaussian elimination with division."""
    n = len(rows)
    m = [list(r) for r in rows]
    det = None
    sign = 1
    for col in range(n):
        piv = None
        for i in range(col, n):
            if not m[i][col].is_zero():
                piv = i
                break
        if piv is None:
            return rows[0][0] - rows[0][0]  # zero of the scalar type
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        det = p if det is None else det * p
        pinv = p.inv()
        for i in range(col + 1, n):
            if not m[i][col].is_zero():
                f = m[i][col] * pinv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    if sign < 0:
        det = -det
    return det


def solve(rows, rhs):
    """Solve a square exact linear system; raises on singular matrix."""
    n = len(rows)
    m = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    red, pivots = rref(m, n)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]

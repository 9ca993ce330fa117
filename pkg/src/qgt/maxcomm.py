"""Bounded-degree maximal-commutativity certificate at rank one.

Inside the PBW box {F^r K_1^l1 K_2^l2 E^k : 0 <= r,k <= D, -D <= l_i <= D},
the space of elements commuting with all three subalgebra generators d_11,
d_21, d_22 is computed by exact nullspace, and compared with the span of
subalgebra monomials d_11^a d_21^b d_22^c (a, c ranging over Z, b >= 0)
whose expansions stay inside the box.  The certificate passes when the two
spaces coincide.
"""
from __future__ import annotations

from qgt.gtsub import d_gen
from qgt.linalg import nullspace, rref
from qgt.scalar import ONE, ZERO


def box_monomials(D):
    out = []
    for r in range(D + 1):
        for l1 in range(-D, D + 1):
            for l2 in range(-D, D + 1):
                for k in range(D + 1):
                    out.append(((r,), (l1, l2), (k,)))
    return out


def _pbw_vector(a, index):
    """Coordinates of an element over an indexed monomial set; None if the
    element has support outside the set."""
    vec = [ZERO] * len(index)
    for mono, c in a.pbw_terms():
        p = index.get(mono)
        if p is None:
            return None
        vec[p] = c
    return vec


def commutant_in_box(engine, D):
    """Nullspace basis of u -> ([u, d_11], [u, d_21], [u, d_22]) inside the
    box, as vectors over the box monomial index."""
    box = box_monomials(D)
    index = {m: p for p, m in enumerate(box)}
    dgens = [d_gen(engine, 1, 1), d_gen(engine, 2, 1), d_gen(engine, 2, 2)]
    basis_elems = [engine.from_pbw(*m) for m in box]
    # rows indexed by (generator, output monomial), columns by box monomials
    out_index = {}
    cols = []
    for b in basis_elems:
        col = {}
        for gi, d in enumerate(dgens):
            for mono, c in b.commutator(d).pbw_terms():
                key = (gi, mono)
                row = out_index.setdefault(key, len(out_index))
                col[row] = c
        cols.append(col)
    rows = [[ZERO] * len(box) for _ in range(len(out_index))]
    for j, col in enumerate(cols):
        for i, c in col.items():
            rows[i][j] = c
    return box, index, nullspace(rows, len(box), ZERO, ONE)


def gamma_box_intersection(engine, box, index, D):
    """Basis (over box coordinates) of {subalgebra elements inside the box}.

    The subalgebra is spanned by products w^j K_1^l1 K_2^l2 where
    w = d_21 - (K-part of d_21) is a scalar multiple of FE, and K_i^{+-1}
    are scalar multiples of d_11^{-+1} and (d_11 d_22^{-1})^{+-1}.  Any
    member lying inside the box uses j <= D (the top FE-degree survives) and
    K-offsets within 2D of the box, so the listed products span everything
    relevant; members of the intersection may combine products whose
    out-of-box terms cancel.  The intersection with the box coordinate
    subspace is read off from a reduced row echelon form in which all
    out-of-box columns are ordered first: the rows whose pivot lands in the
    box block are supported on the box alone and span the intersection.
    """
    d21 = d_gen(engine, 2, 1)
    w = d21 - d21.k_part()
    R = 2 * D
    products = []
    p_j = engine.scalar(ONE)
    for j in range(D + 1):
        for l1 in range(-R, R + 1):
            for l2 in range(-R, R + 1):
                products.append(p_j * engine.from_pbw((0,), (l1, l2), (0,)))
        if j < D:
            p_j = p_j * w
    outside = {}
    rows_sparse = []
    for p in products:
        row = {}
        for mono, c in p.pbw_terms():
            b = index.get(mono)
            if b is None:
                col = outside.setdefault(mono, len(outside))
                row[("out", col)] = c
            else:
                row[("box", b)] = c
        rows_sparse.append(row)
    n_out = len(outside)
    ncols = n_out + len(box)
    rows = []
    for row in rows_sparse:
        v = [ZERO] * ncols
        for (kind, i), c in row.items():
            v[i if kind == "out" else n_out + i] = c
        rows.append(v)
    red, pivots = rref(rows, ncols)
    basis = []
    for r, p in zip(red, pivots):
        if p >= n_out:
            assert all(x.is_zero() for x in r[:n_out])
            basis.append(r[n_out:])
    return basis


def certificate(engine, D):
    """Exact comparison of the bounded commutant with the subalgebra span."""
    box, index, null_basis = commutant_in_box(engine, D)
    gamma_vecs = gamma_box_intersection(engine, box, index, D)
    red_n, piv_n = rref([list(v) for v in null_basis], len(box))
    red_g, piv_g = rref([list(v) for v in gamma_vecs], len(box))
    equal = piv_n == piv_g and all(
        all((x - y).is_zero() for x, y in zip(rn, rg))
        for rn, rg in zip(red_n, red_g)
    )
    return {
        "D": D,
        "box_size": len(box),
        "commutant_dim": len(piv_n),
        "gamma_dim": len(piv_g),
        "equal": equal,
    }

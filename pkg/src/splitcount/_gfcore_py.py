"""Pure-Python row-reduction and matrix-multiply kernels over small GF(q).

Matrices are flat row-major byte buffers of field elements (0 <= x < q);
arithmetic goes through flat lookup tables (see fields.FieldSpec.tables) so
the same code serves prime and prime-power fields.  splitcount._gfcore is
the compiled drop-in replacement; both must stay behaviorally identical.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def rref_in_place(data, nrows, ncols, add, mul, neg, inv, q):
    """Reduce ``data`` (bytearray, nrows x ncols) to reduced row echelon form.

    Returns (rank, pivot_columns).  Rows below the rank are garbage after
    the call; callers slice the first ``rank`` rows for the canonical form.
    """
    rank = 0
    pivots = []
    for col in range(ncols):
        prow = -1
        for i in range(rank, nrows):
            if data[i * ncols + col]:
                prow = i
                break
        if prow < 0:
            continue
        if prow != rank:
            a, b = rank * ncols, prow * ncols
            for j in range(col, ncols):
                data[a + j], data[b + j] = data[b + j], data[a + j]
        base = rank * ncols
        piv = data[base + col]
        if piv != 1:
            s = inv[piv] * q
            for j in range(col, ncols):
                data[base + j] = mul[s + data[base + j]]
        for i in range(nrows):
            if i == rank:
                continue
            f = data[i * ncols + col]
            if f:
                fi = f * q
                bi = i * ncols
                for j in range(col, ncols):
                    data[bi + j] = add[data[bi + j] * q + neg[mul[fi + data[base + j]]]]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, tuple(pivots)


def mat_mul(a, ar, ac, b, br, bc, add, mul, q):
    """Product of an ar x ac by an ac x bc flat matrix; returns bytes."""
    out = bytearray(ar * bc)
    for i in range(ar):
        ai = i * ac
        oi = i * bc
        for k in range(ac):
            f = a[ai + k]
            if f:
                fk = f * q
                bk = k * bc
                for j in range(bc):
                    v = mul[fk + b[bk + j]]
                    if v:
                        out[oi + j] = add[out[oi + j] * q + v]
    return bytes(out)

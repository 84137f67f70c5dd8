# cython: language_level=3
"""Compiled row-reduction and matrix-multiply kernels over small GF(q).

Behavioral twin of splitcount._gfcore_py; see that module for the buffer
and lookup-table conventions.
"""

BACKEND_NAME = "compiled"


def rref_in_place(data, Py_ssize_t nrows, Py_ssize_t ncols,
                  const unsigned char[::1] add, const unsigned char[::1] mul,
                  const unsigned char[::1] neg, const unsigned char[::1] inv,
                  Py_ssize_t q):
    """Reduce ``data`` (bytearray, nrows x ncols) to reduced row echelon form.

    Returns (rank, pivot_columns); only the first ``rank`` rows are
    meaningful afterwards.
    """
    cdef unsigned char[::1] m = data
    cdef Py_ssize_t rank = 0, col, i, j, prow, a, b, base, bi
    cdef unsigned char piv, f, tmp
    cdef Py_ssize_t s, fi
    pivots = []
    for col in range(ncols):
        prow = -1
        for i in range(rank, nrows):
            if m[i * ncols + col]:
                prow = i
                break
        if prow < 0:
            continue
        if prow != rank:
            a = rank * ncols
            b = prow * ncols
            for j in range(col, ncols):
                tmp = m[a + j]
                m[a + j] = m[b + j]
                m[b + j] = tmp
        base = rank * ncols
        piv = m[base + col]
        if piv != 1:
            s = inv[piv] * q
            for j in range(col, ncols):
                m[base + j] = mul[s + m[base + j]]
        for i in range(nrows):
            if i == rank:
                continue
            f = m[i * ncols + col]
            if f:
                fi = f * q
                bi = i * ncols
                for j in range(col, ncols):
                    m[bi + j] = add[m[bi + j] * q + neg[mul[fi + m[base + j]]]]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, tuple(pivots)


def mat_mul(const unsigned char[::1] a, Py_ssize_t ar, Py_ssize_t ac,
            const unsigned char[::1] b, Py_ssize_t br, Py_ssize_t bc,
            const unsigned char[::1] add, const unsigned char[::1] mul,
            Py_ssize_t q):
    """Product of an ar x ac by an ac x bc flat matrix; returns bytes."""
    out = bytearray(ar * bc)
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t i, j, k, ai, oi, bk, fk
    cdef unsigned char f, v
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
                        o[oi + j] = add[o[oi + j] * q + v]
    return bytes(out)

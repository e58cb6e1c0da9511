# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) row reduction on 64-bit-word-packed matrices.

The matrix is a flat buffer of uint64 words, `nwords` per row; bit j of a
row lives in word j >> 6 at position j & 63.  This is the hot kernel
behind every rank / kernel / span computation in the package;
``lscat.gf2`` falls back to a pure-Python twin when this module is not
built.
"""


def rref_words(unsigned long long[::1] data, Py_ssize_t nrows,
               Py_ssize_t nwords, Py_ssize_t pivot_limit):
    """In-place reduced row echelon form.

    Pivots are searched only in bit columns [0, pivot_limit); higher bits
    (used as bookkeeping tags by the caller) are carried along by the row
    operations.  Returns the list of pivot columns; after the call rows
    0..rank-1 are the pivot rows in ascending pivot order.
    """
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, w, r, i, pivot, base, pbase
    cdef int b
    cdef unsigned long long tmp
    pivots = []
    for col in range(pivot_limit):
        if rank == nrows:
            break
        w = col >> 6
        b = col & 63
        pivot = -1
        for r in range(rank, nrows):
            if (data[r * nwords + w] >> b) & 1:
                pivot = r
                break
        if pivot < 0:
            continue
        pbase = rank * nwords
        if pivot != rank:
            base = pivot * nwords
            for i in range(nwords):
                tmp = data[pbase + i]
                data[pbase + i] = data[base + i]
                data[base + i] = tmp
        for r in range(nrows):
            base = r * nwords
            if r != rank and ((data[base + w] >> b) & 1):
                for i in range(nwords):
                    data[base + i] ^= data[pbase + i]
        pivots.append(col)
        rank += 1
    return pivots

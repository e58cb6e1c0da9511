"""Pure-Python GF(2) row reduction on int bitsets.

Fallback twin of the compiled kernel in ``_gf2c``; same contract, with
rows held as arbitrary-precision Python ints (bit j = column j).
"""

from __future__ import annotations


def rref_ints(rows: list[int], pivot_limit: int) -> list[int]:
    """In-place reduced row echelon form of `rows`.

    Pivots are searched only in columns [0, pivot_limit); higher bits are
    carried along.  Returns the pivot columns; rows 0..rank-1 end up as
    the pivot rows in ascending pivot order.
    """
    rank = 0
    nrows = len(rows)
    pivots: list[int] = []
    for col in range(pivot_limit):
        if rank == nrows:
            break
        mask = 1 << col
        pivot = -1
        for r in range(rank, nrows):
            if rows[r] & mask:
                pivot = r
                break
        if pivot < 0:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        piv_row = rows[rank]
        for r in range(nrows):
            if r != rank and (rows[r] & mask):
                rows[r] ^= piv_row
        pivots.append(col)
        rank += 1
    return pivots

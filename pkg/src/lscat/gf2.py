"""GF(2) linear algebra on int bitsets, with a compiled core when available.

Vectors are Python ints (bit j = coordinate j).  The row-reduction
primitive is dispatched at import time: the Cython kernel ``_gf2c`` if it
was built, otherwise the pure-Python twin ``_gf2py``.  Set
``LSCAT_GF2_BACKEND=py`` (or ``c``) to force a backend.
"""

from __future__ import annotations

import os
from array import array

from lscat import _gf2py

try:
    from lscat import _gf2c
except ImportError:
    _gf2c = None

_choice = os.environ.get("LSCAT_GF2_BACKEND", "auto")
if _choice == "c" and _gf2c is None:
    raise ImportError("LSCAT_GF2_BACKEND=c but the compiled kernel is not built")
if _choice not in ("auto", "c", "py"):
    raise ValueError(f"bad LSCAT_GF2_BACKEND value: {_choice!r}")

BACKEND = "c" if (_gf2c is not None and _choice != "py") else "py"


def _rref_c(rows: list[int], pivot_limit: int, total_bits: int) -> list[int]:
    nwords = max(1, (total_bits + 63) >> 6)
    data = array("Q")
    for row in rows:
        data.frombytes(row.to_bytes(nwords * 8, "little"))
    pivots = _gf2c.rref_words(data, len(rows), nwords, pivot_limit)
    raw = data.tobytes()
    for r in range(len(rows)):
        rows[r] = int.from_bytes(raw[r * nwords * 8:(r + 1) * nwords * 8], "little")
    return pivots


def rref(rows: list[int], pivot_limit: int, total_bits: int | None = None) -> list[int]:
    """Reduced row echelon form of `rows`, in place.

    Pivots only in columns [0, pivot_limit); higher bits ride along as
    tags.  `total_bits` bounds the full row width (tags included) and is
    only needed by the packed backend; it defaults to pivot_limit.
    Returns the pivot columns.
    """
    if total_bits is None:
        total_bits = pivot_limit
    if BACKEND == "c":
        return _rref_c(rows, pivot_limit, total_bits)
    return _gf2py.rref_ints(rows, pivot_limit)


def rank(rows: list[int], ncols: int) -> int:
    return len(rref(list(rows), ncols))


def reduce_mod(vec: int, reduced_rows: list[int], pivots: list[int]) -> int:
    """Reduce `vec` against rows already in RREF (rows aligned with pivots)."""
    for row, col in zip(reduced_rows, pivots):
        if (vec >> col) & 1:
            vec ^= row
    return vec


def in_span(vec: int, rows: list[int], ncols: int) -> bool:
    work = list(rows)
    pivots = rref(work, ncols)
    return reduce_mod(vec, work[: len(pivots)], pivots) == 0


def span_basis(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """RREF basis of the span: (rows in pivot order, pivot columns)."""
    work = list(rows)
    pivots = rref(work, ncols)
    return work[: len(pivots)], pivots


def left_kernel(rows: list[int], ncols: int) -> list[int]:
    """Basis of {c : XOR of rows[i] over set bits i of c == 0}.

    Coefficient vectors are ints with bit i <-> rows[i].
    """
    n = len(rows)
    if n == 0:
        return []
    tagged = [rows[i] | (1 << (ncols + i)) for i in range(n)]
    npiv = len(rref(tagged, ncols, ncols + n))
    kernel = [row >> ncols for row in tagged[npiv:]]
    return [c for c in kernel if c]


def quotient_basis(
    cycles: list[int], boundaries: list[int], ncols: int
) -> tuple[list[int], list[int]]:
    """Representatives of span(cycles)/span(boundaries), fully reduced.

    Returns (representative rows, their pivot columns); each
    representative's pivot is its leading coordinate, distinct from every
    boundary pivot.
    """
    bnd, bnd_pivots = span_basis(boundaries, ncols)
    work = list(bnd) + list(cycles)
    pivots = rref(work, ncols)
    bnd_set = set(bnd_pivots)
    reps = []
    rep_pivots = []
    for row, col in zip(work[: len(pivots)], pivots):
        if col not in bnd_set:
            reps.append(row)
            rep_pivots.append(col)
    return reps, rep_pivots

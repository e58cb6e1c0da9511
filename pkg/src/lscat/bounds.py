"""Arithmetic ledger for category bounds and the certified bracket.

Quantities tracked per space: cat (L-S category), Cat (strong category /
cone length), cuplen, wgt, Mwgt.  Lower entries for cuplen/wgt/Mwgt
propagate to cat lower bounds (cuplen <= wgt <= Mwgt <= cat); a Cat upper
entry gives a cat upper bound (cat <= Cat).
"""

from __future__ import annotations

from dataclasses import dataclass, field

QUANTITIES = ("cat", "Cat", "cuplen", "wgt", "Mwgt")
KINDS = ("lower", "upper", "exact")


class LedgerError(ValueError):
    pass


class InconsistentLedger(LedgerError):
    def __init__(self, lower_entry, upper_entry):
        self.lower_entry = lower_entry
        self.upper_entry = upper_entry
        super().__init__(
            f"inconsistent ledger: lower bound {lower_entry} "
            f"exceeds upper bound {upper_entry}"
        )


@dataclass(frozen=True)
class BoundEntry:
    quantity: str
    kind: str
    value: int
    provenance: str

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise LedgerError(f"unknown quantity {self.quantity!r}")
        if self.kind not in KINDS:
            raise LedgerError(f"unknown kind {self.kind!r}")
        if self.value < 0:
            raise LedgerError("bound values must be >= 0")

    def __str__(self):
        return f"{self.quantity} {self.kind} {self.value} ({self.provenance})"


@dataclass
class BoundsLedger:
    space: str
    entries: list[BoundEntry] = field(default_factory=list)

    def add(self, quantity: str, kind: str, value: int, provenance: str):
        self.entries.append(BoundEntry(quantity, kind, value, provenance))

    def cat_lower_entries(self) -> list[BoundEntry]:
        out = []
        for e in self.entries:
            if e.kind == "upper":
                continue
            # Any lower/exact bound in the ladder bounds cat from below.
            if e.quantity in ("cat", "cuplen", "wgt", "Mwgt"):
                out.append(e)
        return out

    def cat_upper_entries(self) -> list[BoundEntry]:
        out = []
        for e in self.entries:
            if e.kind == "lower":
                continue
            if e.quantity in ("cat", "Cat"):
                out.append(e)
        return out


def ganea_product_bound(cat_fibre: int, cat_base: int) -> int:
    """cat of a fibre bundle total space: (cat F + 1)(cat B + 1) - 1."""
    if cat_fibre < 0 or cat_base < 0:
        raise LedgerError("category inputs must be >= 0")
    return (cat_fibre + 1) * (cat_base + 1) - 1


def bundle_upper_bound(m: int, n: int) -> int:
    """Upper bound max(m + n, m + 2) for a principal bundle over a double
    suspension whose characteristic map compresses into stage n of a
    length-m cone decomposition with vanishing higher Hopf invariant.

    The hypotheses are homotopy-theoretic and must be attested by the
    caller; this is pure arithmetic.
    """
    if m < 0:
        raise LedgerError("cone length must be >= 0")
    if n < 1:
        raise LedgerError("compression stage must be >= 1")
    return max(m + n, m + 2)


def strong_category_fallback(cat_strong_g: int) -> int:
    """Unconditional strong-category bound for such bundles: 2 Cat G + 1."""
    if cat_strong_g < 0:
        raise LedgerError("Cat input must be >= 0")
    return 2 * cat_strong_g + 1


def assemble_bracket(ledger: BoundsLedger) -> tuple[int, int]:
    """Close the bracket for cat: (max of lower bounds, min of upper bounds).

    Raises InconsistentLedger (naming the two conflicting entries) if the
    bracket is empty.
    """
    lowers = ledger.cat_lower_entries()
    uppers = ledger.cat_upper_entries()
    if not lowers or not uppers:
        raise LedgerError("need at least one lower and one upper entry for cat")
    lo_entry = max(lowers, key=lambda e: e.value)
    hi_entry = min(uppers, key=lambda e: e.value)
    if lo_entry.value > hi_entry.value:
        raise InconsistentLedger(lo_entry, hi_entry)
    return lo_entry.value, hi_entry.value

"""Griesmer bound machinery and the ledger of known largest minimum
weights d(n, k) for binary LCD codes.

Exact values come from closed forms (k <= 3, k >= n-4, and the settled
length residues for k = 4, 5), from the shipped length-17..24 table, or
from a candidate range narrowed by the nonexistence list; anything else
is reported as unknown rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import tables


def griesmer_sum(d: int, k: int) -> int:
    return sum((d + (1 << i) - 1) >> i for i in range(k))


def griesmer_dmax(n: int, k: int) -> int:
    """Largest d with sum_{i<k} ceil(d / 2^i) <= n."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if griesmer_sum(mid, k) <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def closed_form_bound(n: int, k: int) -> int:
    """Case formula for the Griesmer maximum at k = 4 or 5."""
    if k == 4:
        if n < 4:
            raise ValueError("need n >= 4")
        base = 8 * n // 15
        return base if n % 15 in tables.DIM4_BOUND_RESIDUES_0 else base - 1
    if k == 5:
        if n < 5:
            raise ValueError("need n >= 5")
        base = 16 * n // 31
        r = n % 31
        if r in tables.DIM5_BOUND_RESIDUES_0:
            return base
        if r in tables.DIM5_BOUND_RESIDUES_1:
            return base - 1
        return base - 2
    raise ValueError(f"closed form only for k in {{4, 5}}, got {k}")


@dataclass(frozen=True)
class DTableEntry:
    n: int
    k: int
    values: tuple[int, ...]  # singleton when exact, candidates descending
    status: str              # "exact" | "range" | "unknown"
    provenance: str

    @property
    def exact(self) -> int | None:
        return self.values[0] if self.status == "exact" else None


def _exact(n, k, d, why) -> DTableEntry:
    return DTableEntry(n, k, (d,), "exact", why)


def _range(n, k, cands, why) -> DTableEntry:
    cands = tuple(sorted(set(cands), reverse=True))
    # nonexistence results knock candidates out; a singleton becomes exact
    cands = tuple(d for d in cands if (n, k, d) not in tables.NONEXISTENT_LCD)
    if len(cands) == 1:
        return DTableEntry(n, k, cands, "exact", why + "+nonexistence")
    return DTableEntry(n, k, cands, "range", why)


def known_lcd_d(n: int, k: int) -> DTableEntry:
    """Largest minimum weight among LCD [n, k] codes, where established."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if k == n:
        return _exact(n, k, 1, "full-space")
    if k == 1:
        return _exact(n, k, n if n % 2 else n - 1, "dimension-1")
    if k == n - 1:
        return _exact(n, k, 2 if n % 2 else 1, "codimension-1")
    if k == 2 and n >= 2:
        d = 2 * n // 3
        return _exact(n, k, d if n % 6 in (1, 2, 3, 4) else d - 1, "dimension-2")
    if k == 3 and n >= 3:
        d = 4 * n // 7
        return _exact(n, k, d if n % 7 in (3, 5) else d - 1, "dimension-3")
    if k == n - 2 and n >= 4:
        return _exact(n, k, 2, "codimension-2")
    if k == n - 3 and n >= 8:
        return _exact(n, k, 2, "codimension-3")
    if k == n - 4 and n >= 16:
        return _exact(n, k, 2, "codimension-4")
    if k == 4 and n >= 4:
        base = 8 * n // 15
        r = n % 15
        if r in tables.DIM4_EXACT_RESIDUES_0:
            return _exact(n, k, base, "dimension-4-residue")
        if r in tables.DIM4_EXACT_RESIDUES_1:
            return _exact(n, k, base - 1, "dimension-4-residue")
        if (n, k) in tables.KNOWN_LCD_D:
            return _exact(n, k, tables.KNOWN_LCD_D[(n, k)], "length-17-24-table")
        if r == 0:
            return _range(n, k, (base, base - 1, base - 2), "dimension-4-range")
        return _range(n, k, (base, base - 1), "dimension-4-range")
    if k == 5 and n >= 5:
        base = 16 * n // 31
        r = n % 31
        if r in tables.DIM5_EXACT_RESIDUES_1:
            return _exact(n, k, base - 1, "dimension-5-residue")
        if r in tables.DIM5_EXACT_RESIDUES_2:
            return _exact(n, k, base - 2, "dimension-5-residue")
        if (n, k) in tables.KNOWN_LCD_D:
            return _exact(n, k, tables.KNOWN_LCD_D[(n, k)], "length-17-24-table")
        if r in (1, 9, 13, 15, 17, 21, 23, 24, 25, 27, 28, 29, 30):
            return _range(n, k, (base, base - 1), "dimension-5-range")
        if r in (2, 6, 8, 10, 12, 14, 18):
            # residue 12: family witness gives base-2, Griesmer caps at base-1
            return _range(n, k, (base - 1, base - 2), "dimension-5-range")
        return _range(n, k, (base, base - 1, base - 2), "dimension-5-range")
    if (n, k) in tables.KNOWN_LCD_D:
        return _exact(n, k, tables.KNOWN_LCD_D[(n, k)], "length-17-24-table")
    return DTableEntry(n, k, (), "unknown", "open")


def d_all(n: int, k: int) -> int:
    """Largest d for which an [n, k, d] code exists, found by classifying
    downward from the Griesmer maximum."""
    from .classify import classify_by_columns
    for d in range(griesmer_dmax(n, k), 0, -1):
        if classify_by_columns(n, k, d).count > 0:
            return d
    raise AssertionError("unreachable: repetition codes always exist")

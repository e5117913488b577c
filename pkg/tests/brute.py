"""Independent oracles used by the tests.

Nothing here shares enumeration logic with the package: subspaces are
walked through their unique reduced-echelon generators, and equivalence
is decided by trying every column permutation.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from lcdlab.canonical import canonical_counts
from lcdlab.code import LinearCode
from lcdlab.gf2 import BitMatrix, rref

CHUNK_BITS = 18


def subspace_class_counts(n: int, k: int) -> dict[int, int]:
    """Number of permutation-equivalence classes of [n, k] codes per
    minimum weight, by exhaustive subspace enumeration."""
    hists: set[tuple[int, ...]] = set()
    for pivots in combinations(range(n), k):
        free = [(i, j) for i in range(k) for j in range(n)
                if j > pivots[i] and j not in pivots]
        f = len(free)
        for lo in range(0, 1 << f, 1 << CHUNK_BITS):
            hi = min(1 << f, lo + (1 << CHUNK_BITS))
            w = np.arange(lo, hi, dtype=np.uint32)
            types = np.zeros((hi - lo, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                types[:, p] = 1 << i
            for bit, (i, j) in enumerate(free):
                types[:, j] |= ((w >> bit) & 1).astype(np.int64) << i
            offs = types + (np.arange(hi - lo, dtype=np.int64)[:, None] << k)
            counts = np.bincount(offs.ravel(),
                                 minlength=(hi - lo) << k).reshape(-1, 1 << k)
            for row in np.unique(counts.astype(np.int16), axis=0):
                hists.add(tuple(int(x) for x in row))
    by_d: dict[int, set[tuple[int, ...]]] = {}
    for counts in hists:
        d = min(_message_weight(counts, k, m) for m in range(1, 1 << k))
        by_d.setdefault(d, set()).add(canonical_counts(counts, k))
    return {d: len(classes) for d, classes in by_d.items()}


def _message_weight(counts, k: int, m: int) -> int:
    return sum(c for v, c in enumerate(counts)
               if v and (m & v).bit_count() & 1)


def _apply_column_perm(rows, n: int, perm) -> tuple[int, ...]:
    out = []
    for r in rows:
        acc = 0
        for j in range(n):
            if (r >> j) & 1:
                acc |= 1 << perm[j]
        out.append(acc)
    return tuple(out)


def perm_equivalent(c1: LinearCode, c2: LinearCode) -> bool:
    """Equivalence by trying all column permutations (n <= 8 sane)."""
    if (c1.n, c1.k) != (c2.n, c2.k):
        return False
    target = c2.generator.data
    n = c1.n
    for perm in permutations(range(n)):
        rows = _apply_column_perm(c1.generator.data, n, perm)
        if rref(BitMatrix(c1.k, n, rows)).matrix.data == target:
            return True
    return False

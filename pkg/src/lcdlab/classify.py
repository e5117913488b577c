"""Isomorph-free classification of [n, k, d] binary codes.

Two engines share one deduplication layer:

* direct enumeration over column-type multiplicity vectors, either as
  plain compositions or, when d is large, through the bijection between
  multiplicity vectors and message-weight vectors (inverted exactly by
  a Walsh-Hadamard transform);
* length/dimension extension: every [n, k, d] code with d >= 2 arises
  by adjoining a new coordinate and a generator row (1|v) to some
  [n-1, k-1, d' >= d] code, with v ranging over cosets of the seed of
  coset weight >= d-1.  The minimum weight of the extended code is
  min(d_seed, 1 + coset weight), so filtering needs only the syndrome
  table of the seed.

Equivalence classes are orbits of multiplicity vectors under basis
change; deduplication closes whole orbits at once for k <= 4 and falls
back to the backtracking canonical form for k = 5.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .bounds import griesmer_dmax
from .canonical import (GL_TABLE_CAP, canonical_counts, counts_key,
                        gl2_type_permutations)
from .code import LinearCode, TypeMultiplicity
from .gf2 import BitMatrix, rref

SYNDROME_BITS_CAP = 26
DEFAULT_LIMIT = 20_000_000


@dataclass(frozen=True)
class CodeDB:
    """Deduplicated classification result: one representative per class."""

    n: int
    k: int
    d: int
    method: str
    records: tuple[tuple[bytes, tuple[int, ...]], ...]  # (key, RREF rows), key-sorted

    @property
    def count(self) -> int:
        return len(self.records)

    def keys(self) -> tuple[bytes, ...]:
        return tuple(key for key, _ in self.records)

    def codes(self) -> list[LinearCode]:
        return [LinearCode(BitMatrix(self.k, self.n, rows), _reduced=True)
                for _, rows in self.records]


@dataclass(frozen=True)
class CensusResult:
    n: int
    k: int
    d: int
    count: int
    lcd_count: int
    lcd_keys: tuple[bytes, ...]


# -- shared numeric tables -----------------------------------------------------


@lru_cache(maxsize=None)
def _message_weight_matrix(k: int) -> np.ndarray:
    """(2^k - 1, 2^k - 1) 0/1 matrix: row m-1, column v-1 is [m . v = 1]."""
    q = (1 << k) - 1
    m = np.arange(1, q + 1, dtype=np.uint32)
    v = np.arange(1, q + 1, dtype=np.uint32)
    return (np.bitwise_count(m[:, None] & v[None, :]) & 1).astype(np.int16)


@lru_cache(maxsize=None)
def _sign_matrix(k: int) -> np.ndarray:
    """(2^k, 2^k) matrix of (-1)^(m . v)."""
    idx = np.arange(1 << k, dtype=np.uint32)
    par = np.bitwise_count(idx[:, None] & idx[None, :]) & 1
    return (1 - 2 * par.astype(np.int64))


def compositions(total: int, parts: int) -> np.ndarray:
    """All vectors in Z_{>=0}^parts with the given sum, lexicographic order."""
    if parts < 1:
        raise ValueError("need at least one part")
    out = np.empty((comb(total + parts - 1, parts - 1), parts), dtype=np.int16)

    def fill(view, total, parts):
        if parts == 1:
            view[:, 0] = total
            return
        if parts == 2:
            ar = np.arange(total + 1, dtype=np.int16)
            view[:, 0] = ar
            view[:, 1] = total - ar
            return
        row = 0
        for first in range(total + 1):
            cnt = comb(total - first + parts - 2, parts - 2)
            view[row:row + cnt, 0] = first
            fill(view[row:row + cnt, 1:], total - first, parts - 1)
            row += cnt

    fill(out, total, parts)
    return out


def _spans_mask(sel: np.ndarray, k: int) -> np.ndarray:
    """Per row of nonzero-type multiplicities: does the support span F2^k?"""
    q = (1 << k) - 1
    weights = (np.int64(1) << np.arange(q, dtype=np.int64))
    masks = (sel > 0).astype(np.int64) @ weights
    uniq, inverse = np.unique(masks, return_inverse=True)
    ok = np.zeros(uniq.shape, dtype=bool)
    for i, m in enumerate(uniq):
        basis: list[int] = []
        mm = int(m)
        while mm and len(basis) < k:
            v = (mm & -mm).bit_length()  # type int is bit index + 1
            mm &= mm - 1
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
        ok[i] = len(basis) == k
    return ok[inverse]


# -- deduplication -------------------------------------------------------------


def _dedupe_canonical(vec_arrays: list[np.ndarray], k: int) -> list[tuple[int, ...]]:
    """Distinct canonical multiplicity vectors among the candidates."""
    stacked = [a for a in vec_arrays if a.size]
    if not stacked:
        return []
    uniq = np.unique(np.vstack(stacked).astype(np.int16), axis=0)
    if k <= GL_TABLE_CAP:
        perms = gl2_type_permutations(k)
        pend = {row.tobytes(): row for row in uniq}
        canon = []
        while pend:
            row = pend[min(pend)]
            orbit = np.unique(np.asarray(row)[perms], axis=0)
            canon.append(tuple(int(x) for x in orbit[0]))
            for img in orbit:
                pend.pop(img.tobytes(), None)
        return sorted(canon)
    out = {canonical_counts(tuple(int(x) for x in row), k) for row in uniq}
    return sorted(out)


def _build_db(n: int, k: int, d: int, method: str,
              canon_list: list[tuple[int, ...]]) -> CodeDB:
    records = []
    for counts in canon_list:
        code = LinearCode(TypeMultiplicity(k, counts).generator())
        if code.n != n or code.k != k or code.min_weight() != d:
            raise AssertionError(
                f"representative verification failed for {counts}: "
                f"[{code.n},{code.k},{code.min_weight()}] != [{n},{k},{d}]")
        records.append((counts_key(n, k, counts), code.generator.data))
    records.sort(key=lambda r: r[0])
    return CodeDB(n, k, d, method, tuple(records))


# -- direct classification over column multisets -------------------------------


def _column_candidates(n: int, k: int, d: int, limit: int):
    """Yield (z, vecs) arrays of full multiplicity vectors with min weight
    exactly d, z zero columns among n."""
    q = (1 << k) - 1
    half = 1 << (k - 1)
    a_mat = _message_weight_matrix(k)
    sign = _sign_matrix(k)
    for z in range(0, n - k + 1):
        s = n - z
        if s < k or half * s < q * d:
            break
        n_direct = comb(s + q - 1, q - 1)
        u_total = half * s - q * d
        n_wht = comb(u_total + q - 1, q - 1)
        if min(n_direct, n_wht) > limit:
            raise ValueError(
                f"enumeration infeasible for [{n},{k},{d}] at z={z}: "
                f"~{min(n_direct, n_wht):.3e} candidate vectors (limit {limit})")
        if n_direct <= n_wht:
            comps = compositions(s, q)
            w = comps.astype(np.int32) @ a_mat.T.astype(np.int32)
            sel = comps[w.min(axis=1) == d]
        else:
            ups = compositions(u_total, q)
            cap = s - d
            keep = (ups.max(axis=1) <= cap) & (ups.min(axis=1) == 0)
            ups = ups[keep]
            if not len(ups):
                continue
            t = np.empty((len(ups), 1 << k), dtype=np.int64)
            t[:, 0] = s
            t[:, 1:] = s - 2 * (d + ups.astype(np.int64))
            prod = t @ sign
            good = (np.remainder(prod, 1 << k) == 0).all(axis=1)
            a = prod >> k
            good &= (a >= 0).all(axis=1) & (a[:, 0] == 0)
            sel = a[good][:, 1:].astype(np.int16)
        if not len(sel):
            continue
        sel = sel[_spans_mask(sel, k)]
        if not len(sel):
            continue
        vecs = np.empty((len(sel), q + 1), dtype=np.int16)
        vecs[:, 0] = z
        vecs[:, 1:] = sel
        yield z, vecs


def classify_by_columns(n: int, k: int, d: int, *,
                        limit: int = DEFAULT_LIMIT) -> CodeDB:
    """All inequivalent [n, k, d] codes by direct multiset enumeration.

    Practical for k <= 4 (and k = 5 when d is near the Griesmer maximum).
    Zero columns are allowed and tracked.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    arrays = [vecs for _, vecs in _column_candidates(n, k, d, limit)]
    canon = _dedupe_canonical(arrays, k)
    return _build_db(n, k, d, "columns", canon)


# -- syndrome tables and extension ----------------------------------------------


def _systematic_checks(gen_rows: tuple[int, ...], n: int, k: int):
    """Pivot/free positions and per-position syndrome columns of the dual."""
    red = rref(BitMatrix(k, n, gen_rows))
    if red.rank != k:
        raise ValueError("seed generator is rank deficient")
    rows = red.matrix.data
    pivots = list(red.pivots)
    pivot_set = set(pivots)
    frees = [j for j in range(n) if j not in pivot_set]
    col_synd = [0] * n
    for q_idx, j in enumerate(frees):
        col_synd[j] = 1 << q_idx
    for i, p in enumerate(pivots):
        acc = 0
        for q_idx, j in enumerate(frees):
            acc |= ((rows[i] >> j) & 1) << q_idx
        col_synd[p] = acc
    return frees, col_synd


def _coset_leader_weights(col_synd: list[int], r: int) -> np.ndarray:
    """Minimum number of positions XORing to each syndrome (BFS layers)."""
    size = 1 << r
    dist = np.full(size, 255, dtype=np.uint8)
    dist[0] = 0
    cols = np.unique(np.array([c for c in col_synd if c], dtype=np.uint32))
    frontier = np.zeros(1, dtype=np.uint32)
    w = 0
    chunk = max(1, 4_000_000 // max(1, len(cols)))
    while frontier.size:
        w += 1
        parts = []
        for lo in range(0, frontier.size, chunk):
            cand = (frontier[lo:lo + chunk, None] ^ cols[None, :]).ravel()
            cand = cand[dist[cand] == 255]
            if cand.size:
                dist[cand] = w
                parts.append(np.unique(cand))
        frontier = np.concatenate(parts) if parts else np.empty(0, dtype=np.uint32)
    return dist


def _extend_seed(gen_rows: tuple[int, ...], n1: int, k1: int,
                 seed_d: int, d: int):
    """Candidate extensions of one seed: multiplicity vectors and exact
    minimum weights of span((1|v), 0-prefixed seed rows), v over cosets of
    weight >= d-1."""
    r = n1 - k1
    if r > SYNDROME_BITS_CAP:
        raise ValueError(
            f"syndrome table for redundancy {r} exceeds cap {SYNDROME_BITS_CAP}")
    k = k1 + 1
    frees, col_synd = _systematic_checks(gen_rows, n1, k1)
    if r == 0:
        synd = np.zeros(1, dtype=np.uint64)
        w = np.zeros(1, dtype=np.int64)
    else:
        dist = _coset_leader_weights(col_synd, r)
        sel = np.nonzero(dist >= d - 1)[0]
        synd = sel.astype(np.uint64)
        w = dist[sel].astype(np.int64)
    minw = np.minimum(seed_d, 1 + w)
    keep = minw >= d
    synd, minw = synd[keep], minw[keep]
    if not synd.size:
        return (np.empty((0, 1 << k), dtype=np.int16),
                np.empty(0, dtype=np.int64))
    v = np.zeros(synd.shape, dtype=np.uint64)
    for q_idx, pos in enumerate(frees):
        v |= ((synd >> np.uint64(q_idx)) & np.uint64(1)) << np.uint64(pos)
    # column types of the extended generator: new row is bit 0
    seed_types = [0] * n1
    for j in range(n1):
        seed_types[j] = sum(((gen_rows[i] >> j) & 1) << i for i in range(k1))
    hist = np.zeros((synd.size, 1 << k), dtype=np.int16)
    for st in range(1 << k1):
        mask = 0
        for j in range(n1):
            if seed_types[j] == st:
                mask |= 1 << j
        if not mask:
            continue
        tot = mask.bit_count()
        ones = np.bitwise_count(v & np.uint64(mask)).astype(np.int16)
        hist[:, (st << 1) | 1] += ones
        hist[:, st << 1] += tot - ones
    hist[:, 1] += 1  # the adjoined coordinate
    return hist, minw


def _seed_list(dbs) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for db in dbs:
        for _, rows in db.records:
            out.append((rows, db.d))
    return out


def _validate_seeds(dbs, d: int):
    if not dbs:
        raise ValueError("no seed databases given")
    n1 = dbs[0].n
    k1 = dbs[0].k
    if any(db.n != n1 or db.k != k1 for db in dbs):
        raise ValueError("seed databases disagree on (n, k)")
    have = {db.d for db in dbs}
    need = set(range(d, griesmer_dmax(n1, k1) + 1))
    missing = sorted(need - have)
    if missing:
        raise ValueError(
            f"incomplete seed set for [{n1 + 1},{k1 + 1},{d}]: "
            f"missing [{n1},{k1},d'] levels d' in {missing}")
    return n1, k1


def _extend_all(dbs, d: int, jobs: int = 1) -> dict[int, CodeDB]:
    """All [n, k, d''] classes for every d'' >= d from complete seed levels."""
    if d < 2:
        raise ValueError("extension needs d >= 2")
    n1, k1 = _validate_seeds(dbs, d)
    n, k = n1 + 1, k1 + 1
    seeds = _seed_list(dbs)
    args = [(rows, n1, k1, sd, d) for rows, sd in seeds]
    if jobs > 1 and len(args) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_extend_seed_star, args))
    else:
        results = [_extend_seed(*a) for a in args]
    top = griesmer_dmax(n, k)
    buckets: dict[int, list[np.ndarray]] = {dd: [] for dd in range(d, top + 1)}
    for hist, minw in results:
        if minw.size:
            assert int(minw.max()) <= top, "extension exceeded the Griesmer maximum"
        for dd in buckets:
            sel = hist[minw == dd]
            if sel.size:
                buckets[dd].append(sel)
    out = {}
    for dd, arrays in buckets.items():
        out[dd] = _build_db(n, k, dd, "extension", _dedupe_canonical(arrays, k))
    return out


def _extend_seed_star(a):
    return _extend_seed(*a)


def extend_by_inverse_shortening(seed_dbs, d: int, *, jobs: int = 1) -> CodeDB:
    """All inequivalent [n, k, d] codes from the complete set of
    [n-1, k-1, d' >= d] databases."""
    return _extend_all(seed_dbs, d, jobs=jobs)[d]


# -- the full pipeline -----------------------------------------------------------


def _db_path(db_dir: str, n: int, k: int, d: int) -> str:
    return os.path.join(db_dir, f"n{n}k{k}d{d}.codedb")


def _load_or(db_dir, n, k, d, maker) -> CodeDB:
    if db_dir:
        from . import formats
        path = _db_path(db_dir, n, k, d)
        if os.path.exists(path):
            return formats.load_codedb(path)
    db = maker()
    if db_dir:
        from . import formats
        os.makedirs(db_dir, exist_ok=True)
        formats.save_codedb(db, _db_path(db_dir, n, k, d))
    return db


def classify(n: int, k: int, d: int, *, db_dir: str | None = None,
             bottom_k: int = 3, jobs: int = 1,
             limit: int = DEFAULT_LIMIT) -> CodeDB:
    """Classify [n, k, d] codes through the shortening ladder.

    Levels at dimension <= bottom_k are enumerated directly over column
    multisets; each higher level is built by inverse shortening from the
    complete d' >= d databases one dimension below.  Every intermediate
    level is persisted into db_dir and reused on re-runs.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if k < 2:
        raise ValueError("classification pipeline needs k >= 2")
    base_k = max(2, min(bottom_k, k))
    if d == 1:
        # extension requires d >= 2; fall back to direct enumeration
        return _load_or(db_dir, n, k, d,
                        lambda: classify_by_columns(n, k, d, limit=limit))
    base_n = n - (k - base_k)
    if base_n < base_k:
        raise ValueError(f"ladder bottoms out below length 0 for [{n},{k},{d}]")
    level: dict[int, CodeDB] = {}
    for dd in range(d, griesmer_dmax(base_n, base_k) + 1):
        level[dd] = _load_or(db_dir, base_n, base_k, dd,
                             lambda dd=dd: classify_by_columns(
                                 base_n, base_k, dd, limit=limit))
    for kk in range(base_k + 1, k + 1):
        nn = n - (k - kk)
        todo = [dd for dd in range(d, griesmer_dmax(nn, kk) + 1)]
        if db_dir and all(os.path.exists(_db_path(db_dir, nn, kk, dd))
                          for dd in todo):
            from . import formats
            level = {dd: formats.load_codedb(_db_path(db_dir, nn, kk, dd))
                     for dd in todo}
            continue
        new_level = _extend_all(list(level.values()), d, jobs=jobs)
        if db_dir:
            from . import formats
            os.makedirs(db_dir, exist_ok=True)
            for dd, db in new_level.items():
                formats.save_codedb(db, _db_path(db_dir, nn, kk, dd))
        level = new_level
    return level[d]


def lcd_census(db: CodeDB) -> CensusResult:
    """Count classes and LCD classes in a classification."""
    lcd_keys = [key for (key, _), code in zip(db.records, db.codes())
                if code.is_lcd()]
    return CensusResult(db.n, db.k, db.d, db.count, len(lcd_keys),
                        tuple(lcd_keys))

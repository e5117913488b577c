"""Heuristic discovery of LCD [n, k, d] codes to witness lower bounds.

The state space is the column-type multiplicity vector; a move shifts
one column between types.  Steepest ascent on the minimum weight with
deterministic tie-breaking, LCD enforced as a hard constraint on
acceptance, random restarts under a fixed seed.  Not finding a code
proves nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .bounds import griesmer_dmax
from .classify import _column_candidates, _message_weight_matrix
from .code import LinearCode, TypeMultiplicity
from .gf2 import BitMatrix, det_f2


@dataclass(frozen=True)
class SearchBudget:
    max_iterations: int = 1_000_000
    rng_seed: int = 0
    restarts: int = 64

    def __post_init__(self):
        if self.max_iterations < 1 or self.restarts < 1:
            raise ValueError("budget fields must be positive")


def _counts_gram_det(counts, k: int) -> int:
    rows = []
    for i in range(k):
        row = 0
        for j in range(k):
            acc = 0
            for v in range(1, 1 << k):
                if (v >> i) & 1 and (v >> j) & 1:
                    acc += counts[v]
            row |= (acc & 1) << j
        rows.append(row)
    return det_f2(BitMatrix(k, k, tuple(rows)))


def _verify(counts, k: int, n: int, d: int) -> LinearCode | None:
    tm = TypeMultiplicity(k, tuple(int(c) for c in counts))
    if tm.n != n or not tm.spans():
        return None
    code = LinearCode(tm.generator())
    if code.min_weight() >= d and code.is_lcd():
        return code
    return None


def search_lcd(n: int, k: int, d: int,
               budget: SearchBudget | None = None) -> LinearCode | None:
    """Look for an LCD [n, k, >= d] code; None when the budget runs out.

    Every success is re-verified through the code object before return,
    and identical budgets give identical outcomes.
    """
    budget = budget or SearchBudget()
    if d > griesmer_dmax(n, k):
        raise ValueError(
            f"d={d} exceeds the Griesmer maximum {griesmer_dmax(n, k)} for [{n},{k}]")
    q = (1 << k) - 1
    a_mat = _message_weight_matrix(k).astype(np.int32)  # (messages, types)
    # delta[i, j] = weight change per message when a column moves i -> j
    delta = a_mat.T[None, :, :] - a_mat.T[:, None, :]
    big = 1 << 10
    rng = random.Random(budget.rng_seed)
    steps = 0
    for _restart in range(budget.restarts):
        if steps >= budget.max_iterations:
            break
        counts = np.zeros(q, dtype=np.int32)
        for _ in range(n):
            counts[rng.randrange(q)] += 1
        plateau = 8 * n
        while steps < budget.max_iterations:
            steps += 1
            w = a_mat @ counts
            cur_min = int(w.min())
            # score: raise the minimum weight, then thin out the codewords at it
            cur_score = big * cur_min - int((w == cur_min).sum())
            if cur_min >= d:
                full = (0,) + tuple(int(c) for c in counts)
                if _counts_gram_det(full, k):
                    code = _verify(full, k, n, d)
                    if code is not None:
                        return code
            neigh = w[None, None, :] + delta  # (from, to, messages)
            minw = neigh.min(axis=2)
            at_min = (neigh == minw[:, :, None]).sum(axis=2)
            score = big * minw - at_min
            score[counts == 0, :] = -1
            np.fill_diagonal(score, -1)
            best = int(score.max())
            if best > cur_score:
                i, j = np.unravel_index(int(score.argmax()), score.shape)
                counts[i] -= 1
                counts[j] += 1
                continue
            if best == cur_score and plateau > 0:
                plateau -= 1
                ties = np.argwhere(score == best)
                i, j = ties[rng.randrange(len(ties))]
                counts[i] -= 1
                counts[j] += 1
                continue
            break  # stuck: restart
    return None


def search_lcd_exhaustive(n: int, k: int, d: int, *,
                          limit: int = 2_000_000) -> LinearCode | None:
    """Deterministic sweep over multiplicity vectors with exact minimum
    weight d' for d' from the Griesmer maximum down to d; first LCD hit
    wins.  Levels whose enumeration would exceed the limit are skipped
    (like the randomized search, a miss proves nothing)."""
    for dd in range(griesmer_dmax(n, k), d - 1, -1):
        try:
            batches = list(_column_candidates(n, k, dd, limit))
        except ValueError:
            continue
        for _z, vecs in batches:
            for row in vecs:
                counts = tuple(int(x) for x in row)
                if _counts_gram_det(counts, k):
                    code = _verify(counts, k, n, d)
                    if code is not None:
                        return code
    return None

"""Greedy comparison mechanism.

Beams are processed in availability order; each newly available beam is
handed to the still-unassigned terminal with the smallest bid for it.
Locally optimal, globally not: the optimal assignment never totals more,
and strictly less on instances where an early beam steals the terminal a
later beam needed.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .model import Assignment, BidMatrix, as_bid_matrix

__all__ = ["greedy_allocate"]


def greedy_allocate(
    bids: BidMatrix | np.ndarray | Sequence, beam_order: Sequence[int]
) -> Assignment:
    """Assign beams greedily in ``beam_order`` (a permutation of 1..N).

    Each beam takes the unassigned terminal with the minimum bid for it,
    ties broken toward the smallest terminal id. Terminals are never
    reused; when terminals run out the remaining beams stay unserved.
    """
    bids = as_bid_matrix(bids)
    m, n = bids.values.shape
    order = [int(j) for j in beam_order]
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"beam_order must be a permutation of 1..{n}, got {order}")

    taken = [False] * m
    pairs: list[tuple[int, int]] = []
    for j in order:
        column = bids.values[:, j - 1]
        best_i = -1
        best_bid = np.inf
        for i in range(m):
            if not taken[i] and column[i] < best_bid:
                best_i = i
                best_bid = float(column[i])
        if best_i < 0:
            break  # every terminal already serves a beam
        taken[best_i] = True
        pairs.append((best_i + 1, j))

    pairs.sort(key=lambda p: p[1])
    total = 0.0
    for i, j in pairs:
        total += float(bids.values[i - 1, j - 1])
    return Assignment(tuple(pairs), total)

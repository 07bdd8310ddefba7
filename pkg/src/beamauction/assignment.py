"""Minimum-cost bipartite assignment.

The square solver is an O(n^3) shortest-augmenting-path method that also
returns dual potentials. Rectangular bid matrices are squared up with
constant-cost dummy rows or columns before solving; dummy pairs are
stripped from the result and totals are computed over real pairs only,
so the dummy cost never leaks into reported totals.

Tie-breaking is deterministic everywhere: among equal-cost optima, the
assignment whose (beam, terminal) pairs, sorted by beam, compare
lexicographically smallest is returned. The potentials make this exact:
every edge of an equal-cost optimum has zero reduced cost, so the
canonical optimum is the lexicographically smallest perfect matching of
the tight-edge subgraph.

``brute_force_min_assignment`` is the enumeration oracle used by the
test suite; it shares the tie-break but nothing else with the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Collection, Sequence

import numpy as np

from .model import Assignment, BidMatrix, as_bid_matrix

__all__ = [
    "PaddedMatrix",
    "default_dummy_cost",
    "pad_to_square",
    "solve_square",
    "solve_rectangular",
    "solve_rectangular_forbidden",
    "brute_force_min_assignment",
]

_INF = float("inf")

# Reduced-cost slack treated as tight, relative to the largest entry.
# Exact ties (the only ones the tie-break has to arbitrate in practice)
# produce exactly-zero reduced costs, so this only has to absorb float
# dust from the potential updates.
_TIGHT_RTOL = 1e-12

_ORACLE_MAX_DIM = 8
_ORACLE_MAX_SIDE = 512  # column recursion depth; stays clear of the stack limit


@dataclass(frozen=True)
class PaddedMatrix:
    """A bid matrix squared up with constant-cost dummy rows or columns.

    ``values`` is n x n with n = max(M, N); the top-left M x N block is
    ``base`` and every dummy entry costs ``dummy_cost``.
    """

    base: np.ndarray
    dummy_cost: float
    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]


def default_dummy_cost(bids: BidMatrix | np.ndarray | Sequence) -> float:
    """Smallest conforming integer dummy cost: floor(max bid) + 1."""
    return float(math.floor(as_bid_matrix(bids).max_bid) + 1)


def pad_to_square(
    bids: BidMatrix | np.ndarray | Sequence, dummy_cost: float
) -> PaddedMatrix:
    """Extend a rectangular bid matrix to square with dummy rows/columns.

    ``dummy_cost`` must strictly exceed every bid; otherwise a dummy pair
    could displace a real one and corrupt optimality.
    """
    bids = as_bid_matrix(bids)
    dummy_cost = float(dummy_cost)
    if not math.isfinite(dummy_cost) or dummy_cost <= bids.max_bid:
        raise ValueError(
            f"dummy cost {dummy_cost} must be finite and strictly greater "
            f"than the largest bid {bids.max_bid}"
        )
    m, n = bids.values.shape
    size = max(m, n)
    values = np.full((size, size), dummy_cost, dtype=float)
    values[:m, :n] = bids.values
    values.setflags(write=False)
    return PaddedMatrix(base=bids.values, dummy_cost=dummy_cost, values=values)


def _shortest_path_assignment(
    cost: list[list[float]],
) -> tuple[list[int], list[float], list[float]]:
    """Min-cost perfect matching on a square cost matrix.

    Returns ``(row_of_col, u, v)``: the matched row for every column plus
    dual potentials with ``u[i] + v[j] <= cost[i][j]`` (up to roundoff)
    and equality on matched pairs.
    """
    n = len(cost)
    # 1-based scratch arrays; column 0 is the virtual start of each
    # augmenting search.
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    match = [0] * (n + 1)  # match[j] = row matched to column j
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [_INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = _INF
            j1 = 0
            row = cost[i0 - 1]
            u_i0 = u[i0]
            for j in range(1, n + 1):
                if not used[j]:
                    cur = row[j - 1] - u_i0 - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    row_of_col = [match[j] - 1 for j in range(1, n + 1)]
    return row_of_col, u[1:], v[1:]


def _lex_min_matching(
    cost: list[list[float]],
    row_of_col: list[int],
    u: list[float],
    v: list[float],
    n_real_rows: int,
    n_real_cols: int,
    forbidden0: frozenset[tuple[int, int]],
    eps: float,
) -> list[int]:
    """Rearrange an optimal matching into the canonical equal-cost one.

    Walks real columns in ascending order and, for each, swaps in the
    smallest real row that still admits a perfect matching over tight
    edges. Every perfect matching of the tight subgraph has the same
    cost, so the total is preserved.
    """
    n = len(cost)
    row_of_col = list(row_of_col)
    col_of_row: list[int | None] = [None] * n
    for j, i in enumerate(row_of_col):
        col_of_row[i] = j

    tight = [
        [cost[i][j] - u[i] - v[j] <= eps for j in range(n)] for i in range(n)
    ]
    for j, i in enumerate(row_of_col):
        tight[i][j] = True  # matched edges are tight by optimality

    fixed_row = [False] * n

    def rematch(col: int, visited: list[bool]) -> bool:
        # Kuhn-style augmenting search for a free row, over tight edges.
        for x in range(n):
            if fixed_row[x] or visited[x] or not tight[x][col]:
                continue
            visited[x] = True
            nxt = col_of_row[x]
            if nxt is None or rematch(nxt, visited):
                row_of_col[col] = x
                col_of_row[x] = col
                return True
        return False

    def try_fix(i: int, j: int) -> bool:
        saved_roc = row_of_col.copy()
        saved_cor = col_of_row.copy()
        freed = row_of_col[j]
        displaced = col_of_row[i]
        row_of_col[j] = i
        col_of_row[i] = j
        col_of_row[freed] = None
        visited = [False] * n
        visited[i] = True  # pin the forced edge against the augmenting search
        if displaced is None or rematch(displaced, visited):
            return True
        row_of_col[:] = saved_roc
        col_of_row[:] = saved_cor
        return False

    for j in range(n_real_cols):
        current = row_of_col[j]
        current_is_real = current < n_real_rows and (current, j) not in forbidden0
        limit = current if current_is_real else n_real_rows
        for i in range(limit):
            if fixed_row[i] or (i, j) in forbidden0 or not tight[i][j]:
                continue
            if try_fix(i, j):
                break
        final = row_of_col[j]
        if final < n_real_rows and (final, j) not in forbidden0:
            # Pin decided real pairs. A column left on a dummy row or a
            # blocked edge stays unpinned: which row parks there is
            # unobservable, and a later column may still need it.
            fixed_row[final] = True

    return row_of_col


def _solve_padded(
    bids: BidMatrix,
    forbidden0: frozenset[tuple[int, int]],
    dummy_cost: float | None,
) -> Assignment:
    m, n = bids.values.shape
    z = default_dummy_cost(bids) if dummy_cost is None else float(dummy_cost)
    padded = pad_to_square(bids, z)
    size = padded.n
    cost = padded.values.tolist()
    # Sentinel for forbidden pairs: dominates any achievable total, so a
    # blocked pair is matched only when nothing feasible remains.
    blocked = z * (size + 1)
    for i, j in forbidden0:
        cost[i][j] = blocked

    row_of_col, u, v = _shortest_path_assignment(cost)
    eps = _TIGHT_RTOL * max(1.0, blocked if forbidden0 else z)
    row_of_col = _lex_min_matching(cost, row_of_col, u, v, m, n, forbidden0, eps)

    pairs: list[tuple[int, int]] = []
    total = 0.0
    for j in range(n):
        i = row_of_col[j]
        if i < m and (i, j) not in forbidden0:
            pairs.append((i + 1, j + 1))
            total += float(bids.values[i, j])
    return Assignment(tuple(pairs), total)


def solve_square(
    costs: np.ndarray | Sequence,
) -> tuple[list[tuple[int, int]], float]:
    """Minimum-cost perfect matching of a square non-negative matrix.

    Returns the matching as 1-based ``(row, col)`` pairs sorted by
    column, plus the total cost. Ties between equal-cost optima break
    toward the lexicographically smallest (col, row) sequence.
    """
    values = np.asarray(costs, dtype=float)
    if values.ndim != 2 or values.shape[0] != values.shape[1] or values.size == 0:
        raise ValueError("cost matrix must be square, 2-D and non-empty")
    if not np.all(np.isfinite(values)):
        raise ValueError("cost matrix entries must be finite")
    if np.any(values < 0):
        raise ValueError("cost matrix entries must be non-negative")
    n = values.shape[0]
    cost = values.tolist()
    row_of_col, u, v = _shortest_path_assignment(cost)
    eps = _TIGHT_RTOL * max(1.0, float(values.max()))
    row_of_col = _lex_min_matching(cost, row_of_col, u, v, n, n, frozenset(), eps)
    pairs = [(row_of_col[j] + 1, j + 1) for j in range(n)]
    total = 0.0
    for j in range(n):
        total += float(values[row_of_col[j], j])
    return pairs, total


def solve_rectangular(
    bids: BidMatrix | np.ndarray | Sequence, dummy_cost: float | None = None
) -> Assignment:
    """Optimal beam-saturating assignment of a rectangular bid matrix.

    Pads to square (dummy cost floor(max bid) + 1 unless overridden),
    solves, and strips dummy pairs; the reported total covers real pairs
    only. When M >= N every beam is assigned; when N > M every terminal
    is.
    """
    return _solve_padded(as_bid_matrix(bids), frozenset(), dummy_cost)


def _check_forbidden(
    bids: BidMatrix, forbidden: Collection[tuple[int, int]]
) -> frozenset[tuple[int, int]]:
    pairs = set()
    for i, j in forbidden:
        i, j = int(i), int(j)
        if not (1 <= i <= bids.n_terminals and 1 <= j <= bids.n_beams):
            raise ValueError(
                f"forbidden pair ({i}, {j}) out of bounds for a "
                f"{bids.n_terminals}x{bids.n_beams} bid matrix"
            )
        pairs.add((i - 1, j - 1))
    return frozenset(pairs)


def solve_rectangular_forbidden(
    bids: BidMatrix | np.ndarray | Sequence,
    forbidden: Collection[tuple[int, int]],
    dummy_cost: float | None = None,
) -> Assignment:
    """Like :func:`solve_rectangular` but ``forbidden`` pairs cannot win.

    Forbidden entries are overwritten with a sentinel cost large enough
    that no optimum uses them unless the instance is otherwise
    infeasible; in that case the unreachable beams are dropped and the
    best maximum-cardinality assignment is returned (possibly empty).
    """
    bids = as_bid_matrix(bids)
    return _solve_padded(bids, _check_forbidden(bids, forbidden), dummy_cost)


def _max_matching_size(allowed: list[list[bool]], m: int, n: int) -> int:
    match_row_of_col: list[int | None] = [None] * n

    def augment(i: int, seen: list[bool]) -> bool:
        for j in range(n):
            if not allowed[i][j] or seen[j]:
                continue
            seen[j] = True
            if match_row_of_col[j] is None or augment(match_row_of_col[j], seen):
                match_row_of_col[j] = i
                return True
        return False

    size = 0
    for i in range(m):
        if augment(i, [False] * n):
            size += 1
    return size


def brute_force_min_assignment(
    bids: BidMatrix | np.ndarray | Sequence,
    forbidden: Collection[tuple[int, int]] = (),
) -> Assignment:
    """Exhaustive oracle: best maximum-cardinality assignment.

    Enumerates every injective assignment of maximum feasible cardinality
    that avoids ``forbidden`` and keeps the cheapest, breaking ties
    exactly like the solver. Enumeration is factorial, so the smaller
    dimension is capped at 8; this exists for testing, not production.
    """
    bids = as_bid_matrix(bids)
    m, n = bids.values.shape
    if min(m, n) > _ORACLE_MAX_DIM or max(m, n) > _ORACLE_MAX_SIDE:
        raise ValueError(
            f"brute-force enumeration supports min(M, N) <= {_ORACLE_MAX_DIM} "
            f"and max(M, N) <= {_ORACLE_MAX_SIDE}, got {m}x{n}"
        )
    forbidden0 = _check_forbidden(bids, forbidden)
    values = bids.values
    allowed = [
        [(i, j) not in forbidden0 for j in range(n)] for i in range(m)
    ]
    target = _max_matching_size(allowed, m, n)

    best_total: float | None = None
    best_pairs: tuple[tuple[int, int], ...] = ()
    used = [False] * m
    chosen: list[tuple[int, int]] = []

    # Columns ascending, terminals ascending before skipping: candidates
    # are visited in canonical lexicographic order, so the first optimum
    # found is the tie-broken one and equal-cost revisits can be pruned.
    def search(j: int, count: int, total: float) -> None:
        nonlocal best_total, best_pairs
        if best_total is not None and total >= best_total:
            return
        if j == n:
            if count == target:
                best_total = total
                best_pairs = tuple(chosen)
            return
        if count + (n - j) < target:
            return
        for i in range(m):
            if used[i] or not allowed[i][j]:
                continue
            used[i] = True
            chosen.append((i + 1, j + 1))
            search(j + 1, count + 1, total + float(values[i, j]))
            chosen.pop()
            used[i] = False
        if count + (n - j - 1) >= target:
            search(j + 1, count, total)

    search(0, 0, 0.0)
    if best_total is None:  # pragma: no cover - target is always reachable
        raise AssertionError("enumeration failed to reach the matching bound")
    return Assignment(best_pairs, best_total)

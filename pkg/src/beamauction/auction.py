"""Sealed-bid VCG mechanism over a spare-capacity bid matrix.

Winner determination picks the beam-saturating assignment with the
smallest total bid. Each winning pair then pays its opportunity cost:
the best total the rest of the system could reach if that pair were
unavailable, minus the winning total without the pair's own bid. Losing
pairs pay nothing, because removing a losing bid changes nothing.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .assignment import solve_rectangular, solve_rectangular_forbidden
from .model import Assignment, AuctionOutcome, BidMatrix, as_bid_matrix

__all__ = ["determine_winners", "payment", "run_auction", "utility_of_report"]


def determine_winners(bids: BidMatrix | np.ndarray | Sequence) -> Assignment:
    """The minimum-total beam-saturating assignment of the bid matrix."""
    return solve_rectangular(bids)


def payment(
    bids: BidMatrix | np.ndarray | Sequence,
    winners: Assignment,
    terminal: int,
    beam: int,
) -> float:
    """Opportunity-cost payment for one (terminal, beam) pair.

    Re-solves the auction with the pair excluded and returns that total
    minus the winning total without the pair's own bid. Evaluates to
    exactly zero for non-winning pairs; for winning pairs it is at least
    the pair's bid whenever the re-solve can still serve every beam.
    """
    bids = as_bid_matrix(bids)
    bid = bids.bid(terminal, beam)  # also validates bounds
    x = 1.0 if (terminal, beam) in winners.pair_set else 0.0
    without = solve_rectangular_forbidden(bids, [(terminal, beam)]).total_cost
    return without - (winners.total_cost - x * bid)


def run_auction(bids: BidMatrix | np.ndarray | Sequence) -> AuctionOutcome:
    """Determine winners and compute every winning pair's payment."""
    bids = as_bid_matrix(bids)
    winners = determine_winners(bids)
    payments = {
        (i, j): payment(bids, winners, i, j) for i, j in winners.pairs
    }
    return AuctionOutcome(winners, payments)


def utility_of_report(
    true_bids: BidMatrix | np.ndarray | Sequence,
    reported_row: Sequence[float] | np.ndarray,
    terminal: int,
) -> float:
    """Procurement utility of submitting ``reported_row`` for ``terminal``.

    Substitutes the row, runs the auction, and returns payment received
    minus the terminal's *true* bid over its winning pairs; zero when it
    wins nothing. Under this utility, reporting the true row is a
    dominant strategy.
    """
    true_bids = as_bid_matrix(true_bids)
    if not 1 <= terminal <= true_bids.n_terminals:
        raise ValueError(
            f"terminal {terminal} out of bounds for a matrix with "
            f"{true_bids.n_terminals} terminals"
        )
    row = np.asarray(reported_row, dtype=float)
    if row.shape != (true_bids.n_beams,):
        raise ValueError(
            f"reported row must have one entry per beam "
            f"({true_bids.n_beams}), got shape {row.shape}"
        )
    if not np.all(np.isfinite(row)) or np.any(row < 0):
        raise ValueError("reported bids must be non-negative and finite")

    reported = true_bids.values.copy()
    reported[terminal - 1, :] = row
    outcome = run_auction(reported)
    utility = 0.0
    for (i, j), paid in outcome.payments.items():
        if i == terminal:
            utility += paid - true_bids.bid(i, j)
    return utility

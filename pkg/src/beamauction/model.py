"""Domain types for auction-based spot-beam scheduling.

Ground terminals compete for spot beams that become available at known
future epochs. A terminal's bid for a beam is the beam's *spare* data
capacity if it served that terminal: capacity minus the terminal's
aggregate demand rate at the beam's availability epoch, clamped at zero.
Lower bids mean better-utilized beams, so the auction minimizes the total
winning bid. All rates are in Mbps; ids are 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "ConfigurationError",
    "UserTerminal",
    "SpotBeam",
    "BidMatrix",
    "Assignment",
    "AuctionOutcome",
    "Scenario",
    "as_bid_matrix",
    "availability_order",
    "compute_bid",
    "build_bid_matrix",
]


class ConfigurationError(ValueError):
    """Scenario data is inconsistent or incomplete."""


@dataclass(frozen=True)
class UserTerminal:
    """A bidder: one ground terminal with a time-varying demand rate.

    ``demand`` maps scheduling epochs to the aggregate demand rate (Mbps)
    the terminal has collected for that epoch.
    """

    id: int
    demand: Mapping[int, float]

    def __post_init__(self) -> None:
        if self.id < 1:
            raise ConfigurationError(f"terminal id must be >= 1, got {self.id}")
        demand = {int(epoch): float(rate) for epoch, rate in self.demand.items()}
        for epoch, rate in demand.items():
            if not math.isfinite(rate) or rate < 0:
                raise ConfigurationError(
                    f"terminal {self.id}: demand at epoch {epoch} must be a "
                    f"non-negative finite rate, got {rate}"
                )
        object.__setattr__(self, "demand", demand)

    def demand_at(self, epoch: int) -> float:
        try:
            return self.demand[epoch]
        except KeyError:
            raise ConfigurationError(
                f"terminal {self.id} has no demand sample at epoch {epoch}"
            ) from None


@dataclass(frozen=True)
class SpotBeam:
    """An auctioneer: a spot beam predicted to free up at ``available_at``."""

    id: int
    capacity: float
    available_at: int

    def __post_init__(self) -> None:
        if self.id < 1:
            raise ConfigurationError(f"beam id must be >= 1, got {self.id}")
        if not math.isfinite(self.capacity) or self.capacity <= 0:
            raise ConfigurationError(
                f"beam {self.id}: capacity must be positive and finite, "
                f"got {self.capacity}"
            )

    @property
    def availability_key(self) -> tuple[int, int]:
        """Sort key for availability order (epoch first, id breaks ties)."""
        return (self.available_at, self.id)


def availability_order(beams: Iterable[SpotBeam]) -> list[int]:
    """Beam ids sorted by availability epoch, ties broken by id."""
    return [beam.id for beam in sorted(beams, key=lambda b: b.availability_key)]


@dataclass(frozen=True, eq=False)
class BidMatrix:
    """Non-negative bids: one row per terminal, one column per beam.

    ``values`` is an (M, N) read-only float array; entry (i-1, j-1) is
    terminal i's bid for beam j.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.size == 0:
            raise ValueError("bid matrix must be a non-empty 2-D array")
        if not np.all(np.isfinite(values)):
            raise ValueError("bid matrix entries must be finite")
        if np.any(values < 0):
            raise ValueError("bid matrix entries must be non-negative")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n_terminals(self) -> int:
        return self.values.shape[0]

    @property
    def n_beams(self) -> int:
        return self.values.shape[1]

    @property
    def max_bid(self) -> float:
        return float(self.values.max())

    def bid(self, terminal: int, beam: int) -> float:
        """The bid of ``terminal`` for ``beam`` (both 1-based)."""
        if not (1 <= terminal <= self.n_terminals and 1 <= beam <= self.n_beams):
            raise ValueError(
                f"pair ({terminal}, {beam}) out of bounds for a "
                f"{self.n_terminals}x{self.n_beams} bid matrix"
            )
        return float(self.values[terminal - 1, beam - 1])


def as_bid_matrix(bids: BidMatrix | np.ndarray | Sequence) -> BidMatrix:
    """Coerce an array-like into a validated :class:`BidMatrix`."""
    if isinstance(bids, BidMatrix):
        return bids
    return BidMatrix(np.asarray(bids, dtype=float))


@dataclass(frozen=True)
class Assignment:
    """An injective terminal-to-beam matching and its total bid.

    ``pairs`` holds (terminal_id, beam_id) tuples, 1-based, normalized to
    beam-ascending order. ``total_cost`` is the sum of the matched bids.
    """

    pairs: tuple[tuple[int, int], ...]
    total_cost: float

    def __post_init__(self) -> None:
        pairs = tuple(
            sorted(((int(i), int(j)) for i, j in self.pairs), key=lambda p: (p[1], p[0]))
        )
        terminals = [i for i, _ in pairs]
        beams = [j for _, j in pairs]
        if len(set(terminals)) != len(terminals):
            raise ValueError("each terminal may be assigned at most one beam")
        if len(set(beams)) != len(beams):
            raise ValueError("each beam may be assigned at most once")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def pair_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.pairs)

    @property
    def terminals(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.pairs)

    @property
    def beams(self) -> frozenset[int]:
        return frozenset(j for _, j in self.pairs)

    def terminal_for(self, beam: int) -> int | None:
        """The terminal assigned to ``beam``, or None if the beam is unserved."""
        for i, j in self.pairs:
            if j == beam:
                return i
        return None


@dataclass(frozen=True)
class AuctionOutcome:
    """Winning assignment plus the payment owed for each winning pair."""

    assignment: Assignment
    payments: Mapping[tuple[int, int], float]

    def __post_init__(self) -> None:
        payments = {(int(i), int(j)): float(p) for (i, j), p in self.payments.items()}
        if set(payments) != set(self.assignment.pair_set):
            raise ValueError("payments must cover exactly the winning pairs")
        object.__setattr__(self, "payments", payments)


@dataclass(frozen=True)
class Scenario:
    """A full auction instance: terminals, beams, and generation metadata.

    Scenarios keep terminals oversubscribed (M >= N); the solvers accept
    rectangular matrices either way.
    """

    terminals: tuple[UserTerminal, ...]
    beams: tuple[SpotBeam, ...]
    rng_seed: int
    capacity_default: float = 150.0

    def __post_init__(self) -> None:
        terminals = tuple(self.terminals)
        beams = tuple(self.beams)
        object.__setattr__(self, "terminals", terminals)
        object.__setattr__(self, "beams", beams)
        if not beams:
            raise ConfigurationError("a scenario needs at least one beam")
        if [t.id for t in terminals] != list(range(1, len(terminals) + 1)):
            raise ConfigurationError("terminal ids must be contiguous 1..M")
        if [b.id for b in beams] != list(range(1, len(beams) + 1)):
            raise ConfigurationError("beam ids must be contiguous 1..N")
        if len(terminals) < len(beams):
            raise ConfigurationError(
                f"scenarios keep terminals oversubscribed: need at least as many "
                f"terminals ({len(terminals)}) as beams ({len(beams)})"
            )

    @property
    def n_terminals(self) -> int:
        return len(self.terminals)

    @property
    def n_beams(self) -> int:
        return len(self.beams)


def compute_bid(terminal: UserTerminal, beam: SpotBeam) -> float:
    """Spare capacity the beam would have if it served this terminal.

    Evaluates ``max(0, capacity - demand)`` at the epoch the beam becomes
    available. Demand above capacity clamps the bid to zero rather than
    letting it go negative, which keeps the minimization well-posed.

    Raises :class:`ConfigurationError` if the terminal has no demand
    sample at the beam's availability epoch.
    """
    epoch = beam.available_at
    if epoch not in terminal.demand:
        raise ConfigurationError(
            f"terminal {terminal.id} has no demand sample at epoch {epoch}, "
            f"required by beam {beam.id}"
        )
    return max(0.0, beam.capacity - terminal.demand[epoch])


def build_bid_matrix(scenario: Scenario) -> BidMatrix:
    """Evaluate every terminal's bid for every beam of a scenario."""
    values = np.empty((scenario.n_terminals, scenario.n_beams), dtype=float)
    for i, terminal in enumerate(scenario.terminals):
        for j, beam in enumerate(scenario.beams):
            values[i, j] = compute_bid(terminal, beam)
    return BidMatrix(values)

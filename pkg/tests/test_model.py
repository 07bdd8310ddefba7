"""Domain types and spare-capacity bid construction."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from beamauction import (
    Assignment,
    AuctionOutcome,
    BidMatrix,
    ConfigurationError,
    Scenario,
    SpotBeam,
    UserTerminal,
    as_bid_matrix,
    availability_order,
    build_bid_matrix,
    compute_bid,
)


def beam(j=1, capacity=150.0, available_at=1):
    return SpotBeam(id=j, capacity=capacity, available_at=available_at)


class TestComputeBid:
    def test_bid_is_spare_capacity(self):
        terminal = UserTerminal(id=1, demand={1: 100.0})
        assert compute_bid(terminal, beam(capacity=150.0)) == 50.0

    def test_zero_spare_capacity(self):
        terminal = UserTerminal(id=1, demand={1: 150.0})
        assert compute_bid(terminal, beam(capacity=150.0)) == 0.0

    def test_demand_above_capacity_clamps_to_zero(self):
        terminal = UserTerminal(id=1, demand={1: 200.0})
        assert compute_bid(terminal, beam(capacity=150.0)) == 0.0

    def test_missing_epoch_names_terminal_beam_and_epoch(self):
        terminal = UserTerminal(id=3, demand={1: 10.0})
        with pytest.raises(ConfigurationError, match=r"terminal 3.*epoch 7.*beam 2"):
            compute_bid(terminal, beam(j=2, available_at=7))

    @given(
        capacity=st.floats(1.0, 1000.0),
        demand=st.floats(0.0, 2000.0),
        extra=st.floats(0.0, 500.0),
    )
    def test_more_demand_never_raises_the_bid(self, capacity, demand, extra):
        b = beam(capacity=capacity)
        low = compute_bid(UserTerminal(id=1, demand={1: demand}), b)
        high = compute_bid(UserTerminal(id=1, demand={1: demand + extra}), b)
        assert high <= low
        assert high >= 0.0


class TestBuildBidMatrix:
    def test_single_entry(self):
        scenario = Scenario(
            terminals=(UserTerminal(id=1, demand={1: 100.0}),),
            beams=(beam(),),
            rng_seed=0,
        )
        assert build_bid_matrix(scenario).values.tolist() == [[50.0]]

    def test_time_varying_demands(self):
        # Beams read the demand at their own availability epoch, so the
        # same terminal bids differently per beam.
        scenario = Scenario(
            terminals=(
                UserTerminal(id=1, demand={1: 100.0, 2: 140.0}),
                UserTerminal(id=2, demand={1: 120.0, 2: 130.0}),
            ),
            beams=(beam(j=1, available_at=1), beam(j=2, available_at=2)),
            rng_seed=0,
        )
        expected = [[50.0, 10.0], [30.0, 20.0]]
        assert build_bid_matrix(scenario).values.tolist() == expected

    def test_saturated_demand_gives_all_zero_matrix(self):
        scenario = Scenario(
            terminals=(
                UserTerminal(id=1, demand={1: 150.0, 2: 900.0}),
                UserTerminal(id=2, demand={1: 151.0, 2: 150.0}),
            ),
            beams=(beam(j=1, available_at=1), beam(j=2, available_at=2)),
            rng_seed=0,
        )
        assert np.all(build_bid_matrix(scenario).values == 0.0)

    def test_deterministic_bit_for_bit(self):
        scenario = Scenario(
            terminals=(
                UserTerminal(id=1, demand={1: 99.5, 2: 140.25}),
                UserTerminal(id=2, demand={1: 120.125, 2: 130.0}),
            ),
            beams=(beam(j=1, available_at=1), beam(j=2, available_at=2)),
            rng_seed=0,
        )
        first = build_bid_matrix(scenario).values
        second = build_bid_matrix(scenario).values
        assert np.array_equal(first, second)


class TestBidMatrix:
    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError, match="non-negative"):
            BidMatrix(np.array([[1.0, -0.5]]))

    def test_rejects_non_finite_entries(self):
        with pytest.raises(ValueError, match="finite"):
            BidMatrix(np.array([[np.nan, 1.0]]))
        with pytest.raises(ValueError, match="finite"):
            BidMatrix(np.array([[np.inf, 1.0]]))

    def test_rejects_empty_or_non_2d(self):
        with pytest.raises(ValueError):
            BidMatrix(np.empty((0, 3)))
        with pytest.raises(ValueError):
            BidMatrix(np.array([1.0, 2.0]))

    def test_values_are_read_only(self):
        bids = as_bid_matrix([[1.0, 2.0]])
        with pytest.raises(ValueError):
            bids.values[0, 0] = 9.0

    def test_bid_accessor_is_one_based(self):
        bids = as_bid_matrix([[1.0, 2.0], [3.0, 4.0]])
        assert bids.bid(2, 1) == 3.0
        with pytest.raises(ValueError, match="out of bounds"):
            bids.bid(0, 1)
        with pytest.raises(ValueError, match="out of bounds"):
            bids.bid(1, 3)

    def test_as_bid_matrix_passthrough(self):
        bids = as_bid_matrix([[1.0]])
        assert as_bid_matrix(bids) is bids


class TestTerminalAndBeam:
    def test_terminal_rejects_negative_demand(self):
        with pytest.raises(ConfigurationError):
            UserTerminal(id=1, demand={1: -1.0})

    def test_terminal_rejects_bad_id(self):
        with pytest.raises(ConfigurationError):
            UserTerminal(id=0, demand={1: 1.0})

    def test_demand_at_missing_epoch(self):
        with pytest.raises(ConfigurationError, match="epoch 9"):
            UserTerminal(id=1, demand={1: 1.0}).demand_at(9)

    def test_beam_rejects_non_positive_capacity(self):
        with pytest.raises(ConfigurationError):
            SpotBeam(id=1, capacity=0.0, available_at=1)

    def test_availability_order_breaks_ties_by_id(self):
        beams = [
            SpotBeam(id=3, capacity=1.0, available_at=2),
            SpotBeam(id=1, capacity=1.0, available_at=5),
            SpotBeam(id=2, capacity=1.0, available_at=2),
        ]
        assert availability_order(beams) == [2, 3, 1]


class TestScenario:
    def test_requires_contiguous_ids(self):
        with pytest.raises(ConfigurationError, match="contiguous"):
            Scenario(
                terminals=(UserTerminal(id=2, demand={1: 1.0}),),
                beams=(beam(),),
                rng_seed=0,
            )

    def test_requires_oversubscribed_terminals(self):
        with pytest.raises(ConfigurationError, match="oversubscribed"):
            Scenario(
                terminals=(UserTerminal(id=1, demand={1: 1.0}),),
                beams=(beam(j=1), beam(j=2)),
                rng_seed=0,
            )


class TestAssignment:
    def test_pairs_normalize_to_beam_order(self):
        a = Assignment(pairs=((2, 2), (1, 1)), total_cost=0.0)
        assert a.pairs == ((1, 1), (2, 2))

    def test_rejects_duplicate_terminal(self):
        with pytest.raises(ValueError, match="terminal"):
            Assignment(pairs=((1, 1), (1, 2)), total_cost=0.0)

    def test_rejects_duplicate_beam(self):
        with pytest.raises(ValueError, match="beam"):
            Assignment(pairs=((1, 1), (2, 1)), total_cost=0.0)

    def test_lookup_helpers(self):
        a = Assignment(pairs=((2, 1), (1, 2)), total_cost=3.0)
        assert len(a) == 2
        assert a.terminal_for(1) == 2
        assert a.terminal_for(3) is None
        assert (1, 2) in a.pair_set
        assert a.terminals == {1, 2}
        assert a.beams == {1, 2}


class TestAuctionOutcome:
    def test_payments_must_cover_winning_pairs_exactly(self):
        a = Assignment(pairs=((1, 1),), total_cost=5.0)
        with pytest.raises(ValueError, match="exactly"):
            AuctionOutcome(assignment=a, payments={})
        with pytest.raises(ValueError, match="exactly"):
            AuctionOutcome(assignment=a, payments={(1, 1): 5.0, (2, 2): 1.0})

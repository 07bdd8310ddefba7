"""Opportunity-cost payments.

Each winning pair pays the difference between the best total the system
could reach *without* that pair and the winning total without the pair's
own bid. Losing pairs pay exactly zero: excluding a bid nobody used
changes nothing. With a single beam the rule collapses to the familiar
second-price auction.
"""

from beamauction import payment, run_auction

bids = [[1.0, 3.0], [2.0, 5.0]]
outcome = run_auction(bids)
print("bids:", bids)
print("winners:", outcome.assignment.pairs, "total:", outcome.assignment.total_cost)
for (i, j), p in sorted(outcome.payments.items()):
    print(f"  terminal {i} on beam {j}: bid {bids[i-1][j-1]}, pays/receives {p}")

# Walk one payment by hand. Excluding (1, 2) leaves only the straight
# matching {(1,1), (2,2)} at 1 + 5 = 6, so p = 6 - (5 - 3) = 4.
winners = outcome.assignment
assert payment(bids, winners, 1, 2) == 6.0 - (5.0 - 3.0)

# Losing pairs: the re-solve without them finds the same optimum.
print("\nlosing pair (1,1) payment:", payment(bids, winners, 1, 1))
print("losing pair (2,2) payment:", payment(bids, winners, 2, 2))

# One beam, three bidders: second-price in disguise.
column = [[7.0], [3.0], [9.0]]
single = run_auction(column)
print("\nsingle-beam auction, bids 7/3/9:")
print("  winner:", single.assignment.pairs)
print("  payment:", single.payments[(2, 1)], "(the runner-up's bid)")
assert single.payments[(2, 1)] == 7.0

# Every winner is paid at least its bid whenever the re-solve can still
# serve every beam (all shapes except a single-cell matrix).
for (i, j), p in outcome.payments.items():
    assert p >= bids[i - 1][j - 1]
print("\nwinner payments never fall below the winning bids")

"""What misreporting buys a terminal.

Utility here is procurement-style: a winner's payment minus its true
bid, zero for losers. With one beam per auction the per-pair payment
rule is a second-price auction and no misreport helps. With several
beams it is manipulable: the re-solve behind a winner's payment may
route through the same terminal's *other* reported entries, so inflating
bids you do not intend to win pumps the payment for the one you do.
"""

import numpy as np

from beamauction import utility_of_report

# Single beam: second-price, truthful. Terminal 2 (true bid 3) cannot
# beat truth-telling on any report.
column = np.array([[7.0], [3.0], [9.0]])
truthful = utility_of_report(column, [3.0], 2)
print(f"single beam, truthful utility for terminal 2: {truthful}")
best = max(
    utility_of_report(column, [r], 2) for r in np.linspace(0.0, 150.0, 31)
)
print(f"best utility over 31 reports: {best}")
assert best <= truthful + 1e-9

# Two beams: manipulable. Terminal 1's true row is [1, 3]; it wins beam 2
# and nets 4 - 3 = 1. Reporting [1, 100] instead moves it onto beam 1,
# and the payment's counterfactual -- the best assignment without
# (1, 1) -- now contains its own inflated 100: p = (100 + 2) - (6 - 1).
bids = np.array([[1.0, 3.0], [2.0, 5.0]])
honest = utility_of_report(bids, [1.0, 3.0], 1)
inflated = utility_of_report(bids, [1.0, 100.0], 1)
print(f"\ntwo beams, terminal 1: truthful utility {honest}, "
      f"utility after inflating the beam-2 entry {inflated}")
assert honest == 1.0 and inflated == 96.0

# The lesson: excluding a single (terminal, beam) pair is not the same
# as excluding the terminal. A bidder with several live bids shapes its
# own counterfactual, so dominant-strategy truthfulness fails for every
# multi-beam instance family.

"""Command-line front end.

Subcommands:

* ``solve``     reads a CSV bid matrix, print the winning pairs (and,
                  optionally, VCG payments).
* ``simulate``  runs the beam-count sweep and write a plot-ready CSV
                  comparing VCG with the greedy baseline.
* ``verify``    cross-checks the solver, payments, and baseline against
                  the brute-force oracle on random instances.

All human-facing indices are 1-based; totals and payments print with six
decimal places. Exit status is 0 on success and nonzero on parse,
configuration, or verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from .assignment import (
    brute_force_min_assignment,
    default_dummy_cost,
    solve_rectangular,
)
from .auction import determine_winners, payment, run_auction
from .baseline import greedy_allocate
from .model import BidMatrix, ConfigurationError
from .sim import ExperimentConfig, run_experiment

__all__ = [
    "BidMatrixParseError",
    "parse_bid_matrix",
    "format_bid_matrix",
    "main",
    "entry_point",
]

_ORACLE_LIMIT = 8


class BidMatrixParseError(ValueError):
    """A bid-matrix file could not be parsed; the message names the cell."""


def parse_bid_matrix(text: str) -> BidMatrix:
    """Parse headerless CSV (one row per terminal) into a bid matrix."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise BidMatrixParseError("bid matrix file is empty")
    rows: list[list[float]] = []
    width = None
    for r, line in enumerate(lines, start=1):
        cells = line.split(",")
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise BidMatrixParseError(
                f"row {r} has {len(cells)} entries, expected {width}"
            )
        row = []
        for c, cell in enumerate(cells, start=1):
            try:
                value = float(cell)
            except ValueError:
                raise BidMatrixParseError(
                    f"row {r}, column {c}: cannot parse {cell.strip()!r} as a number"
                ) from None
            if not np.isfinite(value) or value < 0:
                raise BidMatrixParseError(
                    f"row {r}, column {c}: bids must be non-negative finite "
                    f"numbers, got {cell.strip()}"
                )
            row.append(value)
        rows.append(row)
    return BidMatrix(np.array(rows, dtype=float))


def format_bid_matrix(bids: BidMatrix) -> str:
    """Render a bid matrix as headerless CSV that re-parses exactly."""
    lines = [
        ",".join(repr(float(v)) for v in row) for row in bids.values
    ]
    return "\n".join(lines) + "\n"


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        with open(args.matrix, "r", encoding="utf-8") as handle:
            bids = parse_bid_matrix(handle.read())
    except OSError as exc:
        print(f"error: cannot read {args.matrix}: {exc}", file=sys.stderr)
        return 1
    except BidMatrixParseError as exc:
        print(f"error: {args.matrix}: {exc}", file=sys.stderr)
        return 1

    if bids.n_terminals < bids.n_beams:
        print(
            f"warning: matrix has more beams ({bids.n_beams}) than terminals "
            f"({bids.n_terminals}); scheduling scenarios normally keep "
            f"terminals oversubscribed",
            file=sys.stderr,
        )

    if args.payments:
        outcome = run_auction(bids)
        winners = outcome.assignment
    else:
        outcome = None
        winners = determine_winners(bids)

    for i, j in sorted(winners.pairs):
        print(f"{i},{j},{bids.bid(i, j):.6f}")
    print(f"total,{winners.total_cost:.6f}")
    if outcome is not None:
        for i, j in sorted(winners.pairs):
            print(f"payment,{i},{j},{outcome.payments[(i, j)]:.6f}")
    return 0


def _parse_range(spec: str) -> tuple[int, ...]:
    spec = spec.strip()
    if ".." in spec:
        lo_text, hi_text = spec.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {spec!r}")
        return tuple(range(lo, hi + 1))
    return (int(spec),)


def _parse_demand(spec: str) -> tuple[float, float]:
    parts = spec.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected LOW,HIGH, got {spec!r}")
    return float(parts[0]), float(parts[1])


def _cmd_simulate(args: argparse.Namespace) -> int:
    settings = {
        "terminals": args.terminals,
        "fasb_range": args.fasb_range,
        "capacity": args.capacity,
        "demand": args.demand,
        "reps": args.reps,
        "seed": args.seed,
    }
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as handle:
                loaded = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read config {args.config}: {exc}", file=sys.stderr)
            return 1
        unknown = set(loaded) - set(settings)
        if unknown:
            print(
                f"error: unknown config keys: {', '.join(sorted(unknown))}",
                file=sys.stderr,
            )
            return 1
        for key, value in loaded.items():
            if settings[key] is None:  # explicit flags override the file
                settings[key] = value

    defaults = {
        "terminals": 30,
        "fasb_range": "2..8",
        "capacity": 150.0,
        "demand": "50,150",
        "reps": 100,
        "seed": 42,
    }
    for key, value in defaults.items():
        if settings[key] is None:
            settings[key] = value

    try:
        fasb = settings["fasb_range"]
        beam_counts = (
            tuple(int(n) for n in fasb)
            if isinstance(fasb, (list, tuple))
            else _parse_range(str(fasb))
        )
        demand = settings["demand"]
        if isinstance(demand, (list, tuple)):
            demand_low, demand_high = (float(demand[0]), float(demand[1]))
        else:
            demand_low, demand_high = _parse_demand(str(demand))
        config = ExperimentConfig(
            n_terminals=int(settings["terminals"]),
            beam_counts=beam_counts,
            capacity=float(settings["capacity"]),
            demand_low=demand_low,
            demand_high=demand_high,
            replications=int(settings["reps"]),
            rng_seed=int(settings["seed"]),
        )
    except (ValueError, ConfigurationError) as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return 1

    report = run_experiment(config)
    try:
        report.write_csv(args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1

    print(f"{'n_fasb':>6}  {'vcg mean':>12}  {'greedy mean':>12}  {'gap':>10}")
    for row in sorted(report.rows, key=lambda r: r.n_fasb):
        gap = row.greedy_mean - row.vcg_mean
        print(
            f"{row.n_fasb:>6}  {row.vcg_mean:>12.6f}  "
            f"{row.greedy_mean:>12.6f}  {gap:>10.6f}"
        )
    print(f"report written to {args.out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_dim > _ORACLE_LIMIT:
        print(
            f"error: --max-dim {args.max_dim} exceeds the brute-force oracle "
            f"limit of {_ORACLE_LIMIT}",
            file=sys.stderr,
        )
        return 2
    if args.max_dim < 1:
        print("error: --max-dim must be >= 1", file=sys.stderr)
        return 2
    if args.cases < 0:
        print("error: --cases must be >= 0", file=sys.stderr)
        return 2
    if args.cases == 0:
        print("warning: --cases 0 requested; nothing checked", file=sys.stderr)
        print("0/0 passed")
        return 0

    tol = 1e-9
    passed = 0
    failures: list[str] = []
    for case in range(args.cases):
        rng = np.random.default_rng(np.random.SeedSequence((args.seed, case)))
        m = int(rng.integers(1, args.max_dim + 1))
        n = int(rng.integers(1, m + 1))
        bids = BidMatrix(rng.uniform(0.0, 150.0, size=(m, n)))
        problems = []

        winners = solve_rectangular(bids)
        oracle = brute_force_min_assignment(bids)
        if abs(winners.total_cost - oracle.total_cost) > tol:
            problems.append(
                f"solver total {winners.total_cost!r} != oracle "
                f"{oracle.total_cost!r}"
            )

        z1 = default_dummy_cost(bids)
        alt = solve_rectangular(bids, 10.0 * z1)
        if alt.pairs != winners.pairs or alt.total_cost != winners.total_cost:
            problems.append("padding-constant invariance violated")

        for i in range(1, m + 1):
            for j in range(1, n + 1):
                pay = payment(bids, winners, i, j)
                if (i, j) in winners.pair_set:
                    relaxed = brute_force_min_assignment(bids, [(i, j)])
                    expected = relaxed.total_cost - (
                        oracle.total_cost - bids.bid(i, j)
                    )
                    if abs(pay - expected) > tol:
                        problems.append(f"payment mismatch at ({i},{j})")
                    if (m, n) != (1, 1) and pay < bids.bid(i, j) - tol:
                        problems.append(f"payment below bid at ({i},{j})")
                elif pay != 0.0:
                    problems.append(f"losing pair ({i},{j}) pays {pay!r}")

        greedy = greedy_allocate(bids, range(1, n + 1))
        if winners.total_cost > greedy.total_cost + tol:
            problems.append("greedy beat the optimal assignment")

        if problems:
            failures.append(f"case {case} ({m}x{n}): " + "; ".join(problems))
        else:
            passed += 1

    for line in failures[:20]:
        print(f"FAIL {line}", file=sys.stderr)
    print(f"{passed}/{args.cases} passed")
    return 0 if passed == args.cases else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="beamauction",
        description=(
            "Auction-based spot-beam scheduling: solve bid matrices, sweep "
            "beam counts against a greedy baseline, verify against oracles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser(
        "solve", help="solve a CSV bid matrix and print winners"
    )
    p_solve.add_argument("matrix", help="path to a headerless CSV bid matrix")
    p_solve.add_argument(
        "--payments",
        action="store_true",
        help="also print the VCG payment for each winning pair",
    )
    p_solve.set_defaults(func=_cmd_solve)

    p_sim = sub.add_parser(
        "simulate", help="sweep beam counts and write a VCG-vs-greedy report"
    )
    p_sim.add_argument("--config", help="JSON config file (flags override it)")
    p_sim.add_argument("--terminals", type=int, help="number of terminals (default 30)")
    p_sim.add_argument(
        "--fasb-range",
        help="beam counts to sweep, e.g. 2..8 or a single count (default 2..8)",
    )
    p_sim.add_argument("--capacity", type=float, help="beam capacity in Mbps (default 150)")
    p_sim.add_argument(
        "--demand",
        help="uniform demand bounds LOW,HIGH in Mbps (default 50,150)",
    )
    p_sim.add_argument("--reps", type=int, help="replications per beam count (default 100)")
    p_sim.add_argument("--seed", type=int, help="base RNG seed (default 42)")
    p_sim.add_argument(
        "--out", default="report.csv", help="output CSV path (default report.csv)"
    )
    p_sim.set_defaults(func=_cmd_simulate)

    p_verify = sub.add_parser(
        "verify", help="cross-check solver and payments against the oracle"
    )
    p_verify.add_argument(
        "--max-dim", type=int, default=5, help="largest terminal count (<= 8)"
    )
    p_verify.add_argument(
        "--cases", type=int, default=200, help="number of random instances"
    )
    p_verify.add_argument("--seed", type=int, default=0, help="RNG seed")
    p_verify.set_defaults(func=_cmd_verify)

    args = parser.parse_args(argv)
    return args.func(args)


def entry_point() -> None:  # pragma: no cover - thin console-script wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

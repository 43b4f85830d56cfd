#!/usr/bin/env python3
"""Dual-route sweep: backward induction vs exhaustive policy enumeration.

Generates the frozen 200-game corpus, decides each game on both routes,
and reports the disagreement count (expected: zero) plus a size profile
of the games exercised.
"""

import statistics
import time

from colgame import build, oracle_cases, reachable_states, solve, solve_oracle


def main() -> int:
    t0 = time.perf_counter()
    sizes = []
    disagreements = []
    for case in oracle_cases(200):
        game = build(case.formula, case.interp, case.budget)
        sizes.append(len(reachable_states(game)))
        a = solve(game, max_states=20000)
        b = solve_oracle(game, max_states=20000)
        if a.winnable != b.winnable:
            disagreements.append(case)
    dt = time.perf_counter() - t0

    print(f"200 games in {dt:.2f}s")
    print(f"states per game: min {min(sizes)}, median {statistics.median(sizes):.0f}, "
          f"p90 {sorted(sizes)[179]}, max {max(sizes)}")
    print(f"disagreements: {len(disagreements)}")
    for case in disagreements:
        print("  !!", case.formula)
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())

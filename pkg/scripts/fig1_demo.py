#!/usr/bin/env python3
"""The worked tree-game example, end to end.

Solves the bundled fig1 game, prints the machine's strategy table,
verifies the hand-scripted strategy exhaustively, and plays one run
against a scripted environment.
"""

from colgame import (
    ScriptBehavior,
    make_fixture_game,
    make_strategy,
    simulate,
    solve,
    verify_strategy,
)


def main() -> None:
    game, _ = make_fixture_game("fig1")
    verdict = solve(game, want_strategy=True)
    print(f"winnable: {verdict.winnable} (states explored {verdict.states_explored})")
    for label, action in verdict.strategy_table:
        print(f"  at {label or '<root>'!r}: move {action!r}")

    strat = make_strategy("fig1", game)
    report = verify_strategy(game, strat)
    print(f"scripted strategy holds: {report.ok} ({report.nodes} nodes)")

    # One concrete run: the environment answers gamma, then stops.
    env = ScriptBehavior(["gamma"])
    transcript = simulate(game, strat, env)
    moves = " ".join(f"{p.symbol}:{m}" for p, m in transcript.moves)
    print(f"sample run: {moves}  ->  {transcript.outcome.symbol} wins")


if __name__ == "__main__":
    main()

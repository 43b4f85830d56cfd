"""Interactive sessions: a human environment against the machine's strategy.

A session owns one game. The human plays ENVIRONMENT; after every human
move the machine strategy is consulted repeatedly until it waits. The
machine plays the winning policy whenever the game is machine-winnable,
and otherwise a best-effort policy (winning moves from any state the
environment blunders into, wait elsewhere).
"""

from __future__ import annotations

from typing import Any, Optional

from .errors import ColError, IllegalMoveError, LimitExceededError
from .fixtures import FIXTURES, make_fixture_game
from .formula import parse
from .game import ENVIRONMENT, MACHINE, Game, Move, Player, TreeGame, validate_tree
from .semantics import (
    BlindGame,
    BrecGame,
    ChoiceGame,
    LeafGame,
    NegGame,
    ParallelGame,
    UniformGame,
    build,
    load_interpretation,
)
from .solver import Strategy, _evaluate, _GameArena
from .strategies import BUILDERS, make_strategy

SESSION_SOLVE_CAP = 200_000


class BestEffortStrategy(Strategy):
    """Policy read off the winnability table of the whole reachable graph.

    On winnable states this coincides with the solver's extracted winning
    policy (least winning move where stopping is unsafe, wait elsewhere);
    on losing states it still grabs a winning move if the environment has
    blundered into offering one.
    """

    kind = "best-effort"

    def __init__(self, game: Game, max_states: int = SESSION_SOLVE_CAP):
        self.arena = _GameArena(game)
        try:
            self.memo, _ = _evaluate(self.arena, max_states)
        except LimitExceededError:
            self.memo = {}  # too large to analyze: always wait
        self.winnable: Optional[bool] = (
            self.memo.get(self.arena.init) if self.memo else None
        )
        if self.winnable:
            self.kind = "table"

    def action(self, game: Game, state: Any, history: Any) -> Optional[str]:
        if self.memo.get(state) and self.arena.stop_ok(state):
            return None
        for move, succ in sorted(self.arena.mach_succs(state)):
            if self.memo.get(succ):
                return move
        return None


def game_structure(game: Game) -> dict:
    """Static operator outline of a game, for panel-per-component rendering."""
    if isinstance(game, UniformGame):
        return {"kind": "uniform", "members": game.members, "children": [game_structure(game.root)]}
    if isinstance(game, LeafGame):
        return {"kind": "leaf", "winner": game.winner.symbol, "label": game.label}
    if isinstance(game, TreeGame):
        t = game.tree
        return {
            "kind": "tree",
            "label": game.label,
            "nodes": t.node_count(),
            "depth": t.depth(),
        }
    if isinstance(game, NegGame):
        return {"kind": "neg", "label": game.label, "children": [game_structure(game.inner)]}
    if isinstance(game, ChoiceGame):
        return {
            "kind": "choice",
            "flavor": game.kind,
            "chooser": game.chooser.symbol,
            "label": game.label,
            "children": [game_structure(c) for c in game.children],
        }
    if isinstance(game, ParallelGame):
        return {
            "kind": "parallel",
            "flavor": game.kind,
            "label": game.label,
            "children": [game_structure(game.left), game_structure(game.right)],
        }
    if isinstance(game, BlindGame):
        return {
            "kind": "blind",
            "flavor": game.kind,
            "width": len(game.instances),
            "label": game.label,
            "children": [game_structure(game.instances[0])],
        }
    if isinstance(game, BrecGame):
        return {
            "kind": "brec",
            "flavor": game.kind,
            "maxSplits": game.max_splits,
            "label": game.label,
            "children": [game_structure(game.inner)],
        }
    return {"kind": "game", "label": game.label}


class Session:
    """One live play. Mutations go through step(); payload() is read-only."""

    def __init__(self, game: Game, strategy: Strategy, machine_winnable: Optional[bool]):
        self.game = game
        self.strategy = strategy
        self.machine_winnable = machine_winnable
        self.state = game.initial()
        self.history: list[Move] = []
        self.status = "open"
        self.winner: Optional[Player] = None
        self._autoplay()  # the machine may open (Fig-1's strategy leads with alpha)

    def _autoplay(self) -> None:
        while True:
            move = self.strategy.action(self.game, self.state, tuple(self.history))
            if move is None:
                return
            self.state = self.game.apply(self.state, MACHINE, move)
            self.history.append((MACHINE, move))

    def step(self, label: Optional[str] = None, stop: bool = False) -> None:
        if self.status != "open":
            raise IllegalMoveError("session is finished")
        if stop:
            self._autoplay()
            self.status = "finished"
            self.winner = self.game.stop_winner(self.state)
            return
        if label is None:
            raise IllegalMoveError("a move label or stop:true is required")
        if label not in self.game.moves(self.state, ENVIRONMENT):
            raise IllegalMoveError(f"move {label!r} is not legal for the environment here")
        self.state = self.game.apply(self.state, ENVIRONMENT, label)
        self.history.append((ENVIRONMENT, label))
        self._autoplay()

    def payload(self) -> dict:
        legal = (
            sorted(self.game.moves(self.state, ENVIRONMENT)) if self.status == "open" else []
        )
        return {
            "stateLabel": " ".join(f"{p.symbol}:{m}" for p, m in self.history),
            "legalHumanMoves": legal,
            "history": [{"by": p.symbol, "label": m} for p, m in self.history],
            "stopWinnerNow": self.game.stop_winner(self.state).symbol,
            "status": self.status,
            "winner": self.winner.symbol if self.winner else None,
            "machineWinnable": self.machine_winnable,
            "strategyKind": self.strategy.kind,
            "structure": game_structure(self.game),
        }


def create_session(request: dict) -> Session:
    """Build a session from a create payload.

    Game source (exactly one): {"formula": text, "interp"?: object,
    "budget"?: int} | {"tree": object} | {"fixture": name}.
    Optional {"strategy": name} forces a named scripted strategy; the
    default is the fixture's bundled strategy, else the solver policy.
    """
    if not isinstance(request, dict):
        raise ColError("request body must be a JSON object")
    sources = [k for k in ("formula", "tree", "fixture") if request.get(k) is not None]
    if len(sources) != 1:
        raise ColError("exactly one of formula, tree, fixture is required")
    strategy_name = request.get("strategy")

    if request.get("fixture") is not None:
        name = request["fixture"]
        if name not in FIXTURES:
            raise ColError(f"unknown fixture {name!r}")
        game, spec = make_fixture_game(name)
        if strategy_name is None:
            strategy_name = spec.default_strategy
    elif request.get("tree") is not None:
        game = TreeGame(validate_tree(request["tree"]))
    else:
        formula = parse(str(request["formula"]))
        interp = load_interpretation(request.get("interp") or {"universe": 1})
        budget = request.get("budget", 1)
        if not isinstance(budget, int) or budget < 0:
            raise ColError("budget must be an integer >= 0")
        game = build(formula, interp, budget=budget)

    fallback = BestEffortStrategy(game)
    if strategy_name is not None:
        if strategy_name not in BUILDERS:
            raise ColError(f"unknown strategy {strategy_name!r}")
        strategy: Strategy = make_strategy(strategy_name, game)
    else:
        strategy = fallback
    return Session(game, strategy, fallback.winnable)

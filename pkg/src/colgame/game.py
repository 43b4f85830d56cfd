"""Game model: players, explicit game trees, the behavioral game contract, runs.

A game is a finite acyclic state machine. Both players may have legal moves
at the same state; the run model (see the solver) resolves simultaneity with
an adversarial priority choice. stopWinner labels every state with the player
who wins if the play stops there.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Optional, Sequence

from .errors import IllegalMoveError, NonDelayTolerantError, TreeFormatError

State = Any  # hashable, immutable; concrete shape depends on the game class
Move = tuple["Player", str]


class Player(enum.Enum):
    MACHINE = "T"
    ENVIRONMENT = "F"

    @property
    def opponent(self) -> "Player":
        return Player.ENVIRONMENT if self is Player.MACHINE else Player.MACHINE

    @property
    def symbol(self) -> str:
        return self.value

    def __repr__(self) -> str:  # keeps failure output readable
        return self.value


MACHINE = Player.MACHINE
ENVIRONMENT = Player.ENVIRONMENT


def player_from_symbol(s: str) -> Player:
    if s == "T":
        return Player.MACHINE
    if s == "F":
        return Player.ENVIRONMENT
    raise TreeFormatError(f"player must be 'T' or 'F', got {s!r}")


# ---------------------------------------------------------------------------
# Explicit game trees


@dataclass(frozen=True)
class GameTree:
    """Ordered game tree: a winner label plus (mover, label, child) edges."""

    winner: Player
    edges: tuple[tuple[Player, str, "GameTree"], ...] = ()

    def depth(self) -> int:
        return 0 if not self.edges else 1 + max(c.depth() for _, _, c in self.edges)

    def node_count(self) -> int:
        return 1 + sum(c.node_count() for _, _, c in self.edges)

    def leaf_count(self) -> int:
        return 1 if not self.edges else sum(c.leaf_count() for _, _, c in self.edges)


def leaf(winner: Player) -> GameTree:
    return GameTree(winner)


def validate_tree(data: Any) -> GameTree:
    """Parse and validate a raw tree description (winner/moves/by/label/to)."""
    if isinstance(data, GameTree):
        _check_tree(data)
        return data
    if not isinstance(data, dict):
        raise TreeFormatError(f"tree node must be an object, got {type(data).__name__}")
    if "winner" not in data:
        raise TreeFormatError("tree node missing 'winner'")
    winner = player_from_symbol(data["winner"])
    moves = data.get("moves", [])
    if not isinstance(moves, list):
        raise TreeFormatError("'moves' must be a list")
    seen: set[tuple[Player, str]] = set()
    edges = []
    for entry in moves:
        if not isinstance(entry, dict) or not {"by", "label", "to"} <= set(entry):
            raise TreeFormatError("each move needs 'by', 'label' and 'to'")
        by = player_from_symbol(entry["by"])
        label = entry["label"]
        if not isinstance(label, str) or not label:
            raise TreeFormatError("move label must be a non-empty string")
        if (by, label) in seen:
            raise TreeFormatError(f"duplicate move ({by.symbol}, {label!r}) at one node")
        seen.add((by, label))
        edges.append((by, label, validate_tree(entry["to"])))
    return GameTree(winner, tuple(edges))


def _check_tree(t: GameTree) -> None:
    seen: set[tuple[Player, str]] = set()
    for by, label, child in t.edges:
        if (by, label) in seen:
            raise TreeFormatError(f"duplicate move ({by.symbol}, {label!r}) at one node")
        seen.add((by, label))
        _check_tree(child)


def tree_to_data(t: GameTree) -> dict:
    return {
        "winner": t.winner.symbol,
        "moves": [
            {"by": by.symbol, "label": label, "to": tree_to_data(child)}
            for by, label, child in t.edges
        ],
    }


# ---------------------------------------------------------------------------
# Behavioral game contract


class Game:
    """Finite acyclic game described behaviorally.

    States must be hashable values. moves() returns labels in a fixed
    deterministic order; apply() accepts exactly those labels.
    """

    label: str = ""
    tree_origin: bool = False

    def initial(self) -> State:
        raise NotImplementedError

    def moves(self, state: State, player: Player) -> tuple[str, ...]:
        raise NotImplementedError

    def apply(self, state: State, player: Player, label: str) -> State:
        raise NotImplementedError

    def stop_winner(self, state: State) -> Player:
        raise NotImplementedError

    def rank(self, state: State) -> int:
        """Upper bound on the number of moves still playable from state."""
        raise NotImplementedError

    # convenience
    def all_moves(self, state: State) -> Iterator[Move]:
        for p in (Player.MACHINE, Player.ENVIRONMENT):
            for m in self.moves(state, p):
                yield (p, m)


class TreeGame(Game):
    """A game played literally on an explicit tree; states are tree nodes."""

    tree_origin = True

    def __init__(self, tree: GameTree, label: str = ""):
        self.tree = tree
        self.label = label

    def initial(self) -> GameTree:
        return self.tree

    def moves(self, state: GameTree, player: Player) -> tuple[str, ...]:
        return tuple(lbl for by, lbl, _ in state.edges if by is player)

    def apply(self, state: GameTree, player: Player, label: str) -> GameTree:
        for by, lbl, child in state.edges:
            if by is player and lbl == label:
                return child
        raise IllegalMoveError(f"no move ({player.symbol}, {label!r}) at this node")

    def stop_winner(self, state: GameTree) -> Player:
        return state.winner

    def rank(self, state: GameTree) -> int:
        return state.depth()


def tree_game(tree: GameTree, label: str = "") -> TreeGame:
    return TreeGame(tree, label)


# ---------------------------------------------------------------------------
# Runs


@dataclass(frozen=True)
class Transcript:
    """A stopped run together with its outcome."""

    moves: tuple[Move, ...]
    outcome: Player


def play_run(game: Game, moves: Sequence[Move]) -> tuple[State, Player]:
    """Fold a run through the game; returns (final state, outcome if stopped).

    Raises IllegalMoveError naming the offending step if any move is not
    legal for its mover at the state where it is played.
    """
    state = game.initial()
    for i, (player, label) in enumerate(moves):
        if label not in game.moves(state, player):
            raise IllegalMoveError(
                f"step {i}: move ({player.symbol}, {label!r}) is not legal here"
            )
        state = game.apply(state, player, label)
    return state, game.stop_winner(state)


def reachable_states(game: Game, cap: Optional[int] = None) -> Optional[set[State]]:
    """All states reachable by any interleaving of legal moves.

    Returns None if the count would exceed ``cap``.
    """
    seen = {game.initial()}
    frontier = [game.initial()]
    while frontier:
        s = frontier.pop()
        for p, m in game.all_moves(s):
            t = game.apply(s, p, m)
            if t not in seen:
                seen.add(t)
                if cap is not None and len(seen) > cap:
                    return None
                frontier.append(t)
    return seen


def canonical_state_labels(game: Game, limit: int = 200000) -> dict[State, str]:
    """Map each reachable state to its canonical move-history string.

    Canonical history: the first one found by breadth-first search taking
    moves in sorted (player symbol, label) order, so it is the shortest and
    lexicographically least history reaching the state. The empty history
    renders as "".
    """
    init = game.initial()
    labels: dict[State, str] = {init: ""}
    queue = [init]
    while queue:
        next_queue = []
        for s in queue:
            base = labels[s]
            for p, m in sorted(game.all_moves(s), key=lambda pm: (pm[0].symbol, pm[1])):
                t = game.apply(s, p, m)
                if t not in labels:
                    token = f"{p.symbol}:{m}"
                    labels[t] = f"{base} {token}".strip()
                    next_queue.append(t)
                    if len(labels) > limit:
                        raise NonDelayTolerantError("state space too large to label")
        queue = next_queue
    return labels


# ---------------------------------------------------------------------------
# Structural comparison and export


def games_equal(g1: Game, g2: Game) -> bool:
    """State-by-state behavioral equality of the reachable structures."""
    return first_divergence(g1, g2) is None


def first_divergence(g1: Game, g2: Game) -> Optional[str]:
    """Human-readable description of the first behavioral mismatch, if any."""
    seen: set[tuple[State, State]] = set()
    stack: list[tuple[State, State, str]] = [(g1.initial(), g2.initial(), "")]
    while stack:
        s1, s2, hist = stack.pop()
        if (s1, s2) in seen:
            continue
        seen.add((s1, s2))
        if g1.stop_winner(s1) is not g2.stop_winner(s2):
            return f"stop winner differs at [{hist}]"
        for p in (Player.MACHINE, Player.ENVIRONMENT):
            m1, m2 = set(g1.moves(s1, p)), set(g2.moves(s2, p))
            if m1 != m2:
                return f"legal {p.symbol}-moves differ at [{hist}]: {sorted(m1)} vs {sorted(m2)}"
            for m in sorted(m1):
                stack.append((g1.apply(s1, p, m), g2.apply(s2, p, m),
                              f"{hist} {p.symbol}:{m}".strip()))
    return None


def export_tree(game: Game, state: Optional[State] = None) -> GameTree:
    """Export the reachable structure from a state as an explicit tree.

    Edges are emitted machine moves first, then environment moves, each in
    the game's own move order. For a TreeGame this reproduces the input.
    """
    if isinstance(game, TreeGame):
        return state if state is not None else game.tree
    s = state if state is not None else game.initial()
    edges = []
    for p in (Player.MACHINE, Player.ENVIRONMENT):
        for m in game.moves(s, p):
            edges.append((p, m, export_tree(game, game.apply(s, p, m))))
    return GameTree(game.stop_winner(s), tuple(edges))


# ---------------------------------------------------------------------------
# Delay-tolerance spot check for explicit trees


def _random_run(game: Game, rng: random.Random) -> list[Move]:
    state = game.initial()
    run: list[Move] = []
    while True:
        options = list(game.all_moves(state))
        if not options or rng.random() < 0.2:
            return run
        mv = rng.choice(options)
        run.append(mv)
        state = game.apply(state, mv[0], mv[1])


def check_delay_tolerance(game: Game, samples: int = 60, seed: int = 0) -> None:
    """Empirical spot check: swapping adjacent opposite-mover moves in a
    sampled run must not change the outcome (when the swap is still legal).

    Raises NonDelayTolerantError on the first violating swap found.
    """
    rng = random.Random(seed)
    for _ in range(samples):
        run = _random_run(game, rng)
        if len(run) < 2:
            continue
        _, outcome = play_run(game, run)
        for i in range(len(run) - 1):
            if run[i][0] is run[i + 1][0]:
                continue
            swapped = run[:i] + [run[i + 1], run[i]] + run[i + 2 :]
            try:
                _, other = play_run(game, swapped)
            except IllegalMoveError:
                continue
            if other is not outcome:
                raise NonDelayTolerantError(
                    f"outcome changes when steps {i} and {i + 1} of a sampled run swap; "
                    "pass force=True to solve anyway"
                )

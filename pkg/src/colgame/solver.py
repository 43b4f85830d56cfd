"""Deciding winnability, extracting strategies, and verifying them.

Three deliberately independent routes:

* solve():        backward induction over reachable states of one game;
* solve_uniform(): belief-state induction over a family of games, finding
                   one strategy that wins every member without knowing which
                   member is being played;
* solve_oracle():  brute-force search over machine policies with explicit
                   backtracking. Slow, kept as a cross-check for solve().

The run model resolves simultaneous actions adversarially: if both players
want to move, the environment's priority map decides who goes first, and the
other side is consulted again afterwards. A play stops when both sides pass.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

from .errors import (
    IllegalStrategyMoveError,
    LimitExceededError,
    NonDelayTolerantError,
)
from .game import (
    ENVIRONMENT,
    MACHINE,
    Game,
    Move,
    Player,
    State,
    Transcript,
    check_delay_tolerance,
)

DEFAULT_MAX_STATES = 10**6

History = tuple[Move, ...]


# ---------------------------------------------------------------------------
# Strategies and environment behaviors


class Strategy:
    """Machine policy: per (state, history) either wait (None) or a move."""

    kind: str = "strategy"

    def action(self, game: Game, state: State, history: History) -> Optional[str]:
        raise NotImplementedError


class StateStrategy(Strategy):
    """History-free policy: a mapping from states to moves; absent = wait."""

    kind = "table"

    def __init__(self, policy: dict[State, str]):
        self.policy = policy

    def action(self, game: Game, state: State, history: History) -> Optional[str]:
        return self.policy.get(state)


class UniformStrategy(Strategy):
    """One policy for a whole family, indexed by the belief consistent with
    the history: the set of (member, state) pairs the play could be in."""

    kind = "uniform"

    def __init__(self, games: Sequence[Game], policy: dict[Any, str], lockstep: bool):
        self.games = list(games)
        self.policy = policy
        self.lockstep = lockstep

    def action(self, game: Game, state: State, history: History) -> Optional[str]:
        if self.lockstep:
            return self.policy.get(state)
        belief = frozenset((i, g.initial()) for i, g in enumerate(self.games))
        for player, label in history:
            belief = frozenset(
                (i, self.games[i].apply(s, player, label))
                for i, s in belief
                if label in self.games[i].moves(s, player)
            )
        return self.policy.get(belief)


class EnvironmentBehavior:
    """Environment side of a simulated play: a choice map plus a priority
    map saying who moves first when both sides want to act."""

    def choice(self, game: Game, state: State, history: History) -> Optional[str]:
        raise NotImplementedError

    def priority(self, game: Game, state: State) -> Player:
        return ENVIRONMENT


class ScriptBehavior(EnvironmentBehavior):
    """Plays a fixed list of labels in order, skipping illegal ones, then stops."""

    def __init__(self, labels: Sequence[str], env_first: bool = True):
        self.labels = list(labels)
        self.env_first = env_first

    def choice(self, game: Game, state: State, history: History) -> Optional[str]:
        played = sum(1 for p, _ in history if p is ENVIRONMENT)
        for label in self.labels[played:]:
            if label in game.moves(state, ENVIRONMENT):
                return label
        return None

    def priority(self, game: Game, state: State) -> Player:
        return ENVIRONMENT if self.env_first else MACHINE


class RandomBehavior(EnvironmentBehavior):
    def __init__(self, rng: random.Random, stop_chance: float = 0.15):
        self.rng = rng
        self.stop_chance = stop_chance

    def choice(self, game: Game, state: State, history: History) -> Optional[str]:
        options = game.moves(state, ENVIRONMENT)
        if not options or self.rng.random() < self.stop_chance:
            return None
        return self.rng.choice(options)

    def priority(self, game: Game, state: State) -> Player:
        return ENVIRONMENT if self.rng.random() < 0.5 else MACHINE


def simulate(game: Game, strategy: Strategy, behavior: EnvironmentBehavior) -> Transcript:
    """Run one play of the game under the simultaneous-consultation model."""
    state = game.initial()
    history: list[Move] = []
    while True:
        a = strategy.action(game, state, tuple(history))
        b = behavior.choice(game, state, tuple(history))
        if a is not None and a not in game.moves(state, MACHINE):
            raise IllegalStrategyMoveError(f"strategy played illegal move {a!r}")
        if a is None and b is None:
            return Transcript(tuple(history), game.stop_winner(state))
        if a is not None and (b is None or behavior.priority(game, state) is MACHINE):
            mover, label = MACHINE, a
        else:
            mover, label = ENVIRONMENT, b  # type: ignore[assignment]
        state = game.apply(state, mover, label)
        history.append((mover, label))


# ---------------------------------------------------------------------------
# Verdicts


@dataclass
class Verdict:
    winnable: bool
    mode: str  # "single" | "uniform" | "oracle"
    states_explored: int
    budget: Optional[int] = None
    strategy: Optional[Strategy] = None
    strategy_table: Optional[list[tuple[str, str]]] = None  # (state label, move)
    witness: Optional[list[Move]] = None

    def to_data(self) -> dict:
        out: dict[str, Any] = {
            "winnable": self.winnable,
            "mode": self.mode,
            "statesExplored": self.states_explored,
        }
        if self.budget is not None:
            out["budget"] = self.budget
        if self.strategy_table is not None:
            out["strategy"] = [
                {"state": lbl, "action": mv} for lbl, mv in self.strategy_table
            ]
        if self.witness is not None:
            out["witness"] = [
                {"by": p.symbol, "label": label} for p, label in self.witness
            ]
        return out


# ---------------------------------------------------------------------------
# Shared induction engine over an abstract arena
#
# A node is winnable iff every environment successor is winnable AND
# (stopping now is safe OR some machine successor is winnable). This is the
# run model folded into one recurrence: environment priority means the
# machine must survive every environment move regardless of its own plans.


class _Arena:
    init: Any

    def env_succs(self, node: Any) -> list[tuple[str, Any]]:
        raise NotImplementedError

    def mach_succs(self, node: Any) -> list[tuple[str, Any]]:
        raise NotImplementedError

    def stop_ok(self, node: Any) -> bool:
        raise NotImplementedError


class _GameArena(_Arena):
    def __init__(self, game: Game):
        self.game = game
        self.init = game.initial()

    def env_succs(self, s: State) -> list[tuple[str, State]]:
        g = self.game
        return [(m, g.apply(s, ENVIRONMENT, m)) for m in g.moves(s, ENVIRONMENT)]

    def mach_succs(self, s: State) -> list[tuple[str, State]]:
        g = self.game
        return [(m, g.apply(s, MACHINE, m)) for m in g.moves(s, MACHINE)]

    def stop_ok(self, s: State) -> bool:
        return self.game.stop_winner(s) is MACHINE


class _LockstepArena(_Arena):
    """Family whose members share one move structure: the belief collapses
    to the shared state, only the stop check consults every member."""

    def __init__(self, games: Sequence[Game]):
        self.games = list(games)
        self.lead = games[0]
        self.init = self.lead.initial()

    def env_succs(self, s: State) -> list[tuple[str, State]]:
        g = self.lead
        return [(m, g.apply(s, ENVIRONMENT, m)) for m in g.moves(s, ENVIRONMENT)]

    def mach_succs(self, s: State) -> list[tuple[str, State]]:
        g = self.lead
        return [(m, g.apply(s, MACHINE, m)) for m in g.moves(s, MACHINE)]

    def stop_ok(self, s: State) -> bool:
        return all(g.stop_winner(s) is MACHINE for g in self.games)


class _BeliefArena(_Arena):
    """General uniform search. A node is the set of (member, state) pairs
    consistent with the play so far. The machine may only use moves legal in
    every consistent member; an environment move refines the belief to the
    members where it was legal."""

    def __init__(self, games: Sequence[Game]):
        self.games = list(games)
        self.init = frozenset((i, g.initial()) for i, g in enumerate(games))

    def env_succs(self, belief: Any) -> list[tuple[str, Any]]:
        labels: set[str] = set()
        for i, s in belief:
            labels.update(self.games[i].moves(s, ENVIRONMENT))
        out = []
        for m in sorted(labels):
            nxt = frozenset(
                (i, self.games[i].apply(s, ENVIRONMENT, m))
                for i, s in belief
                if m in self.games[i].moves(s, ENVIRONMENT)
            )
            out.append((m, nxt))
        return out

    def mach_succs(self, belief: Any) -> list[tuple[str, Any]]:
        common: Optional[set[str]] = None
        for i, s in belief:
            ms = set(self.games[i].moves(s, MACHINE))
            common = ms if common is None else common & ms
        if not common:
            return []
        return [
            (
                m,
                frozenset((i, self.games[i].apply(s, MACHINE, m)) for i, s in belief),
            )
            for m in sorted(common)
        ]

    def stop_ok(self, belief: Any) -> bool:
        return all(self.games[i].stop_winner(s) is MACHINE for i, s in belief)


def _evaluate(arena: _Arena, max_states: int) -> tuple[dict, int]:
    """Iterative post-order evaluation of the winnability recurrence."""
    memo: dict[Any, bool] = {}
    seen: set[Any] = {arena.init}
    stack: list[Any] = [arena.init]
    while stack:
        u = stack[-1]
        if u in memo:
            stack.pop()
            continue
        env = arena.env_succs(u)
        mach = arena.mach_succs(u)
        pending = {v for _, v in env + mach if v not in memo}
        if pending:
            for v in pending:
                if v not in seen:
                    seen.add(v)
                    if len(seen) > max_states:
                        raise LimitExceededError(
                            f"more than {max_states} states explored",
                            states_explored=len(seen),
                        )
            stack.extend(pending)
            continue
        env_ok = all(memo[v] for _, v in env)
        mach_ok = arena.stop_ok(u) or any(memo[v] for _, v in mach)
        memo[u] = env_ok and mach_ok
        stack.pop()
    return memo, len(seen)


def _canonical_labels(arena: _Arena) -> dict[Any, str]:
    """Shortest, lexicographically least move history per reachable node."""
    labels = {arena.init: ""}
    queue = deque([arena.init])
    while queue:
        u = queue.popleft()
        base = labels[u]
        succs = [(ENVIRONMENT, m, v) for m, v in arena.env_succs(u)] + [
            (MACHINE, m, v) for m, v in arena.mach_succs(u)
        ]
        for p, m, v in sorted(succs, key=lambda e: (e[0].symbol, e[1])):
            if v not in labels:
                labels[v] = f"{base} {p.symbol}:{m}".strip()
                queue.append(v)
    return labels


def _extract_policy(arena: _Arena, memo: dict) -> dict[Any, str]:
    """Winning policy over the nodes reachable while following it: move with
    the least winnable move where stopping is unsafe, wait everywhere else."""
    policy: dict[Any, str] = {}
    visited = {arena.init}
    queue = deque([arena.init])
    while queue:
        u = queue.popleft()
        if not arena.stop_ok(u):
            for m, v in sorted(arena.mach_succs(u), key=lambda e: e[0]):
                if memo[v]:
                    policy[u] = m
                    if v not in visited:
                        visited.add(v)
                        queue.append(v)
                    break
        for _, v in arena.env_succs(u):
            if v not in visited:
                visited.add(v)
                queue.append(v)
    return policy


def _extract_witness(arena: _Arena, memo: dict) -> list[Move]:
    """Environment line refuting every machine policy: keep playing a move
    into an unwinnable node; when none is needed, stop and collect the win."""
    line: list[Move] = []
    u = arena.init
    while True:
        bad = sorted(
            ((m, v) for m, v in arena.env_succs(u) if not memo[v]),
            key=lambda e: e[0],
        )
        if not bad:
            return line
        m, v = bad[0]
        line.append((ENVIRONMENT, m))
        u = v


def _policy_table(arena: _Arena, policy: dict[Any, str]) -> list[tuple[str, str]]:
    labels = _canonical_labels(arena)
    table = [(labels[u], m) for u, m in policy.items() if u in labels]
    return sorted(table, key=lambda e: (len(e[0]), e[0]))


# ---------------------------------------------------------------------------
# Public solvers


def solve(
    game: Game,
    *,
    max_states: int = DEFAULT_MAX_STATES,
    want_strategy: bool = False,
    budget: Optional[int] = None,
    force: bool = False,
) -> Verdict:
    """Decide whether the machine can win the game from its initial state.

    Games taken from explicit trees get a delay-tolerance spot check first
    (swapping adjacent opposite-mover moves must not change outcomes), since
    an arbitrary tree need not denote a meaningful simultaneous-play game.
    force=True skips the check.
    """
    if game.tree_origin and not force:
        check_delay_tolerance(game)
    arena = _GameArena(game)
    memo, explored = _evaluate(arena, max_states)
    verdict = Verdict(memo[arena.init], "single", explored, budget=budget)
    if memo[arena.init]:
        policy = _extract_policy(arena, memo)
        verdict.strategy = StateStrategy(policy)
        if want_strategy:
            verdict.strategy_table = _policy_table(arena, policy)
    else:
        verdict.witness = _extract_witness(arena, memo)
    return verdict


def solve_uniform(
    games: Sequence[Game],
    *,
    max_states: int = DEFAULT_MAX_STATES,
    want_strategy: bool = False,
    budget: Optional[int] = None,
    lockstep: bool = False,
) -> Verdict:
    """Decide whether one machine strategy wins every member of the family.

    The machine is not told which member it is playing: it may only make
    moves legal in every member consistent with the play so far, and it must
    be safe to stop only when every consistent member is won.
    """
    if not games:
        raise ValueError("empty family")
    arena: _Arena = _LockstepArena(games) if lockstep else _BeliefArena(games)
    memo, explored = _evaluate(arena, max_states)
    verdict = Verdict(memo[arena.init], "uniform", explored, budget=budget)
    if memo[arena.init]:
        policy = _extract_policy(arena, memo)
        verdict.strategy = UniformStrategy(games, policy, lockstep)
        if want_strategy:
            verdict.strategy_table = _policy_table(arena, policy)
    else:
        verdict.witness = _extract_witness(arena, memo)
    return verdict


def solve_oracle(game: Game, *, max_states: int = 20000) -> Verdict:
    """Independent cross-check: explicit search over machine policies.

    Assigns an action (wait or a specific move) to each state the first time
    a play reaches it, keeps the assignment consistent across converging
    branches, and backtracks exhaustively. No winnability recurrence is
    consulted anywhere on this route.
    """
    from .game import reachable_states

    reach = reachable_states(game, cap=max_states)
    if reach is None:
        raise LimitExceededError(
            f"oracle limited to games with at most {max_states} states",
            states_explored=max_states,
        )

    assign: dict[State, str] = {}
    settled: set[State] = set()
    trail: list[tuple[str, State]] = []
    calls = 0

    def undo(mark: int) -> None:
        while len(trail) > mark:
            kind, s = trail.pop()
            if kind == "assign":
                del assign[s]
            else:
                settled.discard(s)

    WAIT = "\x00wait"

    def check(s: State, a: str) -> bool:
        if a == WAIT:
            if game.stop_winner(s) is not MACHINE:
                return False
        else:
            if not win(game.apply(s, MACHINE, a)):
                return False
        for n in game.moves(s, ENVIRONMENT):
            if not win(game.apply(s, ENVIRONMENT, n)):
                return False
        settled.add(s)
        trail.append(("settle", s))
        return True

    def win(s: State) -> bool:
        nonlocal calls
        calls += 1
        if s in settled:
            return True
        for a in (WAIT, *game.moves(s, MACHINE)):
            mark = len(trail)
            assign[s] = a
            trail.append(("assign", s))
            if check(s, a):
                return True
            undo(mark)
        return False

    winnable = win(game.initial())
    verdict = Verdict(winnable, "oracle", len(reach))
    if not winnable:
        # refute the all-wait policy: walk environment moves to a lost stop
        parent: dict[State, tuple[State, str]] = {}
        seen = {game.initial()}
        queue = deque([game.initial()])
        target = None
        while queue:
            s = queue.popleft()
            if game.stop_winner(s) is not MACHINE:
                target = s
                break
            for n in game.moves(s, ENVIRONMENT):
                t = game.apply(s, ENVIRONMENT, n)
                if t not in seen:
                    seen.add(t)
                    parent[t] = (s, n)
                    queue.append(t)
        line: list[Move] = []
        while target is not None and target in parent:
            s, n = parent[target]
            line.append((ENVIRONMENT, n))
            target = s
        verdict.witness = list(reversed(line))
    return verdict


# ---------------------------------------------------------------------------
# Strategy verification


@dataclass
class VerifyResult:
    ok: bool
    nodes: int
    failing_run: Optional[History] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_strategy(
    game: Game,
    strategy: Strategy,
    *,
    max_nodes: int = DEFAULT_MAX_STATES,
) -> VerifyResult:
    """Check that the strategy wins every play of the game.

    Explores the full tree of (state, history) pairs: wherever the strategy
    waits the stop must already be won and every environment move must stay
    winning; wherever it moves, both the move landing first and every
    environment move landing first must stay winning. Histories are kept
    because strategies may consult them, so no memoization happens here.
    """
    stack: list[tuple[State, History]] = [(game.initial(), ())]
    nodes = 0
    while stack:
        state, hist = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            raise LimitExceededError(
                f"verification exceeded {max_nodes} nodes", states_explored=nodes
            )
        a = strategy.action(game, state, hist)
        if a is None:
            if game.stop_winner(state) is not MACHINE:
                return VerifyResult(
                    False,
                    nodes,
                    hist,
                    "strategy waits where stopping loses",
                )
        else:
            if a not in game.moves(state, MACHINE):
                raise IllegalStrategyMoveError(
                    f"strategy plays {a!r}, not legal after {hist}"
                )
            stack.append((game.apply(state, MACHINE, a), hist + ((MACHINE, a),)))
        for n in game.moves(state, ENVIRONMENT):
            stack.append((game.apply(state, ENVIRONMENT, n), hist + ((ENVIRONMENT, n),)))
    return VerifyResult(True, nodes)

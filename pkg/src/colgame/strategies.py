"""Hand-written strategies for particular game shapes.

Each builder takes the game it is meant to play, checks structurally that
the game really has the expected shape, and returns a Strategy; a mismatch
raises StrategyShapeError rather than silently playing garbage.
"""

from __future__ import annotations

from typing import Optional

from .errors import StrategyShapeError
from .fixtures import load_tree
from .game import ENVIRONMENT, MACHINE, Game, State, TreeGame, games_equal
from .semantics import ChoiceGame, LeafGame, NegGame, ParallelGame
from .solver import History, Strategy


class CopycatStrategy(Strategy):
    """Mirror play between the two components of neg(A) par-or A.

    Environment moves in one component are replayed verbatim in the other,
    oldest first. Once the queues drain, both components hold the same
    position with roles swapped, so exactly one of them is won and the
    disjunction is safe to stop.
    """

    kind = "copycat"

    def action(self, game: Game, state: State, history: History) -> Optional[str]:
        env0: list[str] = []
        env1: list[str] = []
        mach0 = mach1 = 0
        for player, label in history:
            side, rest = label[0], label[2:]
            if player is ENVIRONMENT:
                (env0 if side == "0" else env1).append(rest)
            elif side == "0":
                mach0 += 1
            else:
                mach1 += 1
        if mach0 < len(env1):
            return "0." + env1[mach0]
        if mach1 < len(env0):
            return "1." + env0[mach1]
        return None


def copycat(game: Game) -> CopycatStrategy:
    if not (
        isinstance(game, ParallelGame)
        and game.kind == "disj"
        and isinstance(game.left, NegGame)
        and games_equal(game.left.inner, game.right)
    ):
        raise StrategyShapeError(
            "copycat needs a parallel disjunction whose left component is "
            "the negation of (a behavioral copy of) the right one"
        )
    return CopycatStrategy()


class Fig1Strategy(Strategy):
    """Scripted play for the fig1 fixture: open with alpha, and answer the
    environment's gamma with beta whenever gamma has appeared."""

    kind = "fig1"

    def action(self, game: Game, state: State, history: History) -> Optional[str]:
        legal = game.moves(state, MACHINE)
        if "alpha" in legal and (MACHINE, "alpha") not in history:
            return "alpha"
        if (
            "beta" in legal
            and (ENVIRONMENT, "gamma") in history
            and (MACHINE, "beta") not in history
        ):
            return "beta"
        return None


def fig1_strategy(game: Game) -> Fig1Strategy:
    reference = TreeGame(load_tree("fig1"))
    if not games_equal(game, reference):
        raise StrategyShapeError("this script only plays the fig1 fixture game")
    return Fig1Strategy()


class GrandmotherStrategy(Strategy):
    """Scripted reduction play: relay the consequent question through the
    two antecedent conjuncts and echo the final answer back.

    Reads the composite state directly: ((father, mother), consequent).
    """

    kind = "grandmother"

    def action(self, game: Game, state: State, history: History) -> Optional[str]:
        (father, mother), cons = state
        if cons == ():
            return None  # nobody asked anything yet
        asked, answer = cons
        if answer != ():
            return None  # we already answered; nothing left to do
        if father == ():
            return "0.0." + str(asked)
        _, fans = father
        if fans == ():
            return None  # waiting for the father answer
        b = fans[0]
        if mother == ():
            return "0.1." + str(b)
        _, mans = mother
        if mans == ():
            return None  # waiting for the mother answer
        return "1." + str(mans[0])


def _is_question_game(g: Game) -> Optional[int]:
    """Recognize choice-conj over choice-disj over leaves; returns N."""
    if not (isinstance(g, ChoiceGame) and g.kind == "conj"):
        return None
    n = len(g.children)
    for child in g.children:
        if not (
            isinstance(child, ChoiceGame)
            and child.kind == "disj"
            and len(child.children) == n
            and all(isinstance(leaf, LeafGame) for leaf in child.children)
        ):
            return None
    return n


def grandmother_strategy(game: Game) -> GrandmotherStrategy:
    ok = (
        isinstance(game, ParallelGame)
        and game.kind == "disj"
        and isinstance(game.left, NegGame)
        and isinstance(game.left.inner, ParallelGame)
        and game.left.inner.kind == "conj"
    )
    if ok:
        parts = [game.left.inner.left, game.left.inner.right, game.right]
        sizes = [_is_question_game(p) for p in parts]
        ok = None not in sizes and len(set(sizes)) == 1
    if not ok:
        raise StrategyShapeError(
            "grandmother script needs (question /\\ question) -> question "
            "with matching universe sizes"
        )
    return GrandmotherStrategy()


BUILDERS = {
    "copycat": copycat,
    "fig1": fig1_strategy,
    "grandmother": grandmother_strategy,
}


def make_strategy(name: str, game: Game) -> Strategy:
    builder = BUILDERS.get(name)
    if builder is None:
        raise StrategyShapeError(
            f"unknown strategy {name!r}; known: {', '.join(sorted(BUILDERS))}"
        )
    return builder(game)

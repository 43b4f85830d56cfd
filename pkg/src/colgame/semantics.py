"""Interpretations and the compilation of formulas into games.

An interpretation fixes a finite universe {0..N-1}, truth tables for
elementary atoms, value tables for function symbols, and explicit game
trees for general atoms. build() then compiles a closed formula into a
finite game by structural recursion, with a split budget bounding every
branching-recurrence occurrence.
"""

from __future__ import annotations

from typing import Any, Optional

from .errors import BuildError, IllegalMoveError, InterpretationError
from .formula import (
    App,
    BlindAll,
    BlindEx,
    Bot,
    Brec,
    Brefute,
    Brimpl,
    ChoAll,
    ChoAnd,
    ChoEx,
    ChoOr,
    Corec,
    Elem,
    Eq,
    Formula,
    Gen,
    Neg,
    Num,
    ParAnd,
    ParImpl,
    ParOr,
    Term,
    Top,
    Var,
    has_general_atoms,
    print_formula,
    substitute,
)
from .game import (
    ENVIRONMENT,
    MACHINE,
    Game,
    GameTree,
    Player,
    State,
    TreeGame,
    validate_tree,
)

# ---------------------------------------------------------------------------
# Interpretations


def _truth(v: Any, where: str) -> bool:
    if v is True or v == "T":
        return True
    if v is False or v == "F":
        return False
    raise InterpretationError(f"{where}: truth value must be T/F, got {v!r}")


def _parse_key(key: str, where: str) -> tuple[str, int]:
    name, sep, ar = key.partition("/")
    if not sep or not ar.isdigit() or not name:
        raise InterpretationError(f"{where}: key must look like 'name/arity', got {key!r}")
    return name, int(ar)


class Interpretation:
    """Finite interpretation: universe size plus row-major symbol tables.

    Tables are flat, first argument most significant:
    index(a1..ak) = ((a1*N + a2)*N + ...)*N + ak.
    """

    def __init__(
        self,
        universe: int,
        predicates: Optional[dict[tuple[str, int], tuple[bool, ...]]] = None,
        functions: Optional[dict[tuple[str, int], tuple[int, ...]]] = None,
        games: Optional[dict[tuple[str, int], tuple[GameTree, ...]]] = None,
    ):
        if universe < 1:
            raise InterpretationError("universe size must be at least 1")
        self.universe = universe
        self.predicates = predicates or {}
        self.functions = functions or {}
        self.games = games or {}

    def index(self, args: tuple[int, ...]) -> int:
        idx = 0
        for a in args:
            if not 0 <= a < self.universe:
                raise InterpretationError(f"value {a} outside universe 0..{self.universe - 1}")
            idx = idx * self.universe + a
        return idx

    def eval_term(self, term: Term, env: dict[str, int]) -> int:
        if isinstance(term, Num):
            if term.value >= self.universe:
                raise InterpretationError(
                    f"numeral {term.value} outside universe 0..{self.universe - 1}"
                )
            return term.value
        if isinstance(term, Var):
            try:
                return env[term.name]
            except KeyError:
                raise InterpretationError(f"unbound variable {term.name}") from None
        if isinstance(term, App):
            key = (term.fn, len(term.args))
            if key not in self.functions:
                raise InterpretationError(f"no table for function {term.fn}/{len(term.args)}")
            vals = tuple(self.eval_term(a, env) for a in term.args)
            return self.functions[key][self.index(vals)]
        raise InterpretationError(f"cannot evaluate term {term!r}")

    def elem_value(self, name: str, args: tuple[int, ...]) -> bool:
        key = (name, len(args))
        if key not in self.predicates:
            raise InterpretationError(f"no table for elementary atom {name}/{len(args)}")
        return self.predicates[key][self.index(args)]

    def game_tree(self, name: str, args: tuple[int, ...]) -> GameTree:
        key = (name, len(args))
        if key not in self.games:
            raise InterpretationError(f"no game for general atom {name}/{len(args)}")
        return self.games[key][self.index(args)]


def load_interpretation(data: Any) -> Interpretation:
    """Build an Interpretation from its JSON object form.

    {"universe": N,
     "predicates": {"p/1": ["T","F",...]},       # row-major, N^arity entries
     "functions":  {"f/2": [0,1,...]},           # row-major, values in 0..N-1
     "games":      {"P/0": tree, "Q/1": [tree,...]}}
    """
    if not isinstance(data, dict):
        raise InterpretationError("interpretation must be a JSON object")
    if "universe" not in data or not isinstance(data["universe"], int):
        raise InterpretationError("interpretation needs an integer 'universe'")
    n = data["universe"]
    if n < 1:
        raise InterpretationError("universe size must be at least 1")

    predicates: dict[tuple[str, int], tuple[bool, ...]] = {}
    for key, val in data.get("predicates", {}).items():
        name, ar = _parse_key(key, "predicates")
        if not name[0].islower():
            raise InterpretationError(f"elementary atom {name} must start lowercase")
        rows = val if isinstance(val, list) else [val]
        if len(rows) != n**ar:
            raise InterpretationError(
                f"predicates[{key}]: expected {n**ar} entries, got {len(rows)}"
            )
        predicates[(name, ar)] = tuple(_truth(v, f"predicates[{key}]") for v in rows)

    functions: dict[tuple[str, int], tuple[int, ...]] = {}
    for key, val in data.get("functions", {}).items():
        name, ar = _parse_key(key, "functions")
        if not isinstance(val, list) or len(val) != n**ar:
            raise InterpretationError(
                f"functions[{key}]: expected a list of {n**ar} entries"
            )
        for v in val:
            if not isinstance(v, int) or not 0 <= v < n:
                raise InterpretationError(
                    f"functions[{key}]: value {v!r} outside universe 0..{n - 1}"
                )
        functions[(name, ar)] = tuple(val)

    games: dict[tuple[str, int], tuple[GameTree, ...]] = {}
    for key, val in data.get("games", {}).items():
        name, ar = _parse_key(key, "games")
        if not name[0].isupper():
            raise InterpretationError(f"general atom {name} must start uppercase")
        rows = val if isinstance(val, list) else [val]
        if len(rows) != n**ar:
            raise InterpretationError(f"games[{key}]: expected {n**ar} trees, got {len(rows)}")
        games[(name, ar)] = tuple(validate_tree(t) for t in rows)

    return Interpretation(n, predicates, functions, games)


def interpretation_to_data(interp: Interpretation) -> dict:
    from .game import tree_to_data

    out: dict[str, Any] = {"universe": interp.universe}
    if interp.predicates:
        out["predicates"] = {
            f"{name}/{ar}": ["T" if v else "F" for v in rows]
            for (name, ar), rows in interp.predicates.items()
        }
    if interp.functions:
        out["functions"] = {
            f"{name}/{ar}": list(rows) for (name, ar), rows in interp.functions.items()
        }
    if interp.games:
        out["games"] = {
            f"{name}/{ar}": [tree_to_data(t) for t in rows] if ar else tree_to_data(rows[0])
            for (name, ar), rows in interp.games.items()
        }
    return out


# ---------------------------------------------------------------------------
# Operator game constructions


class LeafGame(Game):
    """Moveless game with a fixed winner (elementary atoms, T, F, equality).

    In a family build the leaf also carries a bitmask saying in which family
    members the machine wins here; see build_uniform().
    """

    def __init__(self, winner: Player, label: str = "", mask: Optional[int] = None):
        self.winner = winner
        self.label = label
        self.mask = mask

    def initial(self) -> State:
        return ()

    def moves(self, state: State, player: Player) -> tuple[str, ...]:
        return ()

    def apply(self, state: State, player: Player, label: str) -> State:
        raise IllegalMoveError("leaf game has no moves")

    def stop_winner(self, state: State) -> Player:
        return self.winner

    def stop_mask(self, state: State, full: int) -> int:
        if self.mask is not None:
            return self.mask
        return full if self.winner is MACHINE else 0

    def rank(self, state: State) -> int:
        return 0


class NegGame(Game):
    """Role swap: both players trade moves and outcomes. States pass through."""

    def __init__(self, inner: Game, label: str = ""):
        self.inner = inner
        self.label = label
        self.tree_origin = inner.tree_origin

    def initial(self) -> State:
        return self.inner.initial()

    def moves(self, state: State, player: Player) -> tuple[str, ...]:
        return self.inner.moves(state, player.opponent)

    def apply(self, state: State, player: Player, label: str) -> State:
        return self.inner.apply(state, player.opponent, label)

    def stop_winner(self, state: State) -> Player:
        return self.inner.stop_winner(state).opponent

    def stop_mask(self, state: State, full: int) -> int:
        return self.inner.stop_mask(state, full) ^ full

    def rank(self, state: State) -> int:
        return self.inner.rank(state)


class ChoiceGame(Game):
    """Choice conjunction/disjunction over finitely many children.

    The chooser commits with a single move "0".."k-1"; play then continues
    inside the chosen child. Before the choice the non-chooser wins a stop.
    """

    def __init__(self, kind: str, children: list[Game], label: str = ""):
        if kind not in ("conj", "disj"):
            raise ValueError(kind)
        if not children:
            raise BuildError("choice over an empty universe")
        self.kind = kind
        self.children = children
        self.chooser = ENVIRONMENT if kind == "conj" else MACHINE
        self.label = label

    def initial(self) -> State:
        return ()

    def moves(self, state: State, player: Player) -> tuple[str, ...]:
        if state == ():
            if player is self.chooser:
                return tuple(str(i) for i in range(len(self.children)))
            return ()
        i, s = state
        return self.children[i].moves(s, player)

    def apply(self, state: State, player: Player, label: str) -> State:
        if state == ():
            if player is not self.chooser or label not in self.moves(state, player):
                raise IllegalMoveError(f"only the chooser may pick a component, got {label!r}")
            i = int(label)
            return (i, self.children[i].initial())
        i, s = state
        return (i, self.children[i].apply(s, player, label))

    def stop_winner(self, state: State) -> Player:
        if state == ():
            return self.chooser.opponent
        i, s = state
        return self.children[i].stop_winner(s)

    def stop_mask(self, state: State, full: int) -> int:
        if state == ():
            return full if self.chooser is ENVIRONMENT else 0
        i, s = state
        return self.children[i].stop_mask(s, full)

    def rank(self, state: State) -> int:
        if state == ():
            return 1 + max(c.rank(c.initial()) for c in self.children)
        i, s = state
        return self.children[i].rank(s)


class ParallelGame(Game):
    """Parallel conjunction/disjunction: both components stay live.

    Moves carry a component prefix, "0.m" for the left, "1.m" for the right.
    A stopped play is won by AND (conj) / OR (disj) of component winners.
    """

    def __init__(self, kind: str, left: Game, right: Game, label: str = ""):
        if kind not in ("conj", "disj"):
            raise ValueError(kind)
        self.kind = kind
        self.left = left
        self.right = right
        self.label = label

    def initial(self) -> State:
        return (self.left.initial(), self.right.initial())

    def moves(self, state: State, player: Player) -> tuple[str, ...]:
        sl, sr = state
        return tuple(f"0.{m}" for m in self.left.moves(sl, player)) + tuple(
            f"1.{m}" for m in self.right.moves(sr, player)
        )

    def apply(self, state: State, player: Player, label: str) -> State:
        sl, sr = state
        side, _, rest = label.partition(".")
        if side == "0":
            return (self.left.apply(sl, player, rest), sr)
        if side == "1":
            return (sl, self.right.apply(sr, player, rest))
        raise IllegalMoveError(f"parallel move must start with '0.' or '1.', got {label!r}")

    def stop_winner(self, state: State) -> Player:
        sl, sr = state
        lw = self.left.stop_winner(sl) is MACHINE
        rw = self.right.stop_winner(sr) is MACHINE
        won = (lw and rw) if self.kind == "conj" else (lw or rw)
        return MACHINE if won else ENVIRONMENT

    def stop_mask(self, state: State, full: int) -> int:
        sl, sr = state
        lm = self.left.stop_mask(sl, full)
        rm = self.right.stop_mask(sr, full)
        return (lm & rm) if self.kind == "conj" else (lm | rm)

    def rank(self, state: State) -> int:
        sl, sr = state
        return self.left.rank(sl) + self.right.rank(sr)


class BlindGame(Game):
    """Blind quantifier: one synchronized play across all instances.

    Requires the instances to be unistructural (identical move structure
    everywhere); build() checks this eagerly. Every move applies to all
    instances at once, so the state is the tuple of instance states.
    """

    def __init__(self, kind: str, instances: list[Game], label: str = ""):
        if kind not in ("all", "ex"):
            raise ValueError(kind)
        self.kind = kind
        self.instances = instances
        self.label = label

    def initial(self) -> State:
        return tuple(g.initial() for g in self.instances)

    def moves(self, state: State, player: Player) -> tuple[str, ...]:
        return self.instances[0].moves(state[0], player)

    def apply(self, state: State, player: Player, label: str) -> State:
        return tuple(g.apply(s, player, label) for g, s in zip(self.instances, state))

    def stop_winner(self, state: State) -> Player:
        wins = (g.stop_winner(s) is MACHINE for g, s in zip(self.instances, state))
        won = all(wins) if self.kind == "all" else any(wins)
        return MACHINE if won else ENVIRONMENT

    def stop_mask(self, state: State, full: int) -> int:
        acc = full if self.kind == "all" else 0
        for g, s in zip(self.instances, state):
            m = g.stop_mask(s, full)
            acc = (acc & m) if self.kind == "all" else (acc | m)
        return acc

    def rank(self, state: State) -> int:
        return self.instances[0].rank(state[0])


def check_unistructural(instances: list[Game], label: str) -> None:
    """Verify all instances offer identical move sets at every synchronized
    state, both players. Raises BuildError naming the divergent history."""
    first = instances[0]
    rest = instances[1:]
    seen: set[tuple] = set()
    stack: list[tuple[tuple, str]] = [(tuple(g.initial() for g in instances), "")]
    while stack:
        states, hist = stack.pop()
        if states in seen:
            continue
        seen.add(states)
        for p in (MACHINE, ENVIRONMENT):
            base = set(first.moves(states[0], p))
            for k, g in enumerate(rest, start=1):
                other = set(g.moves(states[k], p))
                if other != base:
                    raise BuildError(
                        f"blind quantifier {label!r} is not unistructural: after "
                        f"[{hist}] instance 0 allows {sorted(base)} for "
                        f"{p.symbol} but instance {k} allows {sorted(other)}"
                    )
            for m in sorted(base):
                nxt = tuple(g.apply(s, p, m) for g, s in zip(instances, states))
                stack.append((nxt, f"{hist} {p.symbol}:{m}".strip()))


class BrecGame(Game):
    """Branching recurrence (and its dual) with a finite split budget.

    A state is a sorted tuple of (address, inner state) leaves; addresses
    are bitstrings, the root copy being "". The splitter (environment for
    the recurrence, machine for the dual) may play "split:w" to fork leaf w
    into w0/w1 while the budget allows; either player may play "w.m" to make
    inner move m in copy w.
    """

    def __init__(self, kind: str, inner: Game, max_splits: int, label: str = ""):
        if kind not in ("rec", "corec"):
            raise ValueError(kind)
        self.kind = kind
        self.inner = inner
        self.max_splits = max_splits
        self.splitter = ENVIRONMENT if kind == "rec" else MACHINE
        self.label = label
        self._inner_rank0 = inner.rank(inner.initial())

    def initial(self) -> State:
        return (("", self.inner.initial()),)

    def moves(self, state: State, player: Player) -> tuple[str, ...]:
        out: list[str] = []
        if player is self.splitter and len(state) - 1 < self.max_splits:
            out.extend(f"split:{w}" for w, _ in state)
        for w, s in state:
            out.extend(f"{w}.{m}" for m in self.inner.moves(s, player))
        return tuple(out)

    def apply(self, state: State, player: Player, label: str) -> State:
        if label.startswith("split:"):
            if player is not self.splitter:
                raise IllegalMoveError(f"only {self.splitter.symbol} may split here")
            if len(state) - 1 >= self.max_splits:
                raise IllegalMoveError("split budget exhausted")
            w = label[len("split:") :]
            for i, (addr, s) in enumerate(state):
                if addr == w:
                    rest = state[:i] + state[i + 1 :]
                    return tuple(sorted(rest + ((w + "0", s), (w + "1", s))))
            raise IllegalMoveError(f"no copy at address {w!r}")
        addr, _, m = label.partition(".")
        for i, (w, s) in enumerate(state):
            if w == addr:
                new = (w, self.inner.apply(s, player, m))
                return tuple(sorted(state[:i] + (new,) + state[i + 1 :]))
        raise IllegalMoveError(f"no copy at address {addr!r}")

    def stop_winner(self, state: State) -> Player:
        wins = (self.inner.stop_winner(s) is MACHINE for _, s in state)
        won = all(wins) if self.kind == "rec" else any(wins)
        return MACHINE if won else ENVIRONMENT

    def stop_mask(self, state: State, full: int) -> int:
        acc = full if self.kind == "rec" else 0
        for _, s in state:
            m = self.inner.stop_mask(s, full)
            acc = (acc & m) if self.kind == "rec" else (acc | m)
        return acc

    def rank(self, state: State) -> int:
        splits_left = self.max_splits - (len(state) - 1)
        return sum(self.inner.rank(s) for _, s in state) + splits_left * (
            self._inner_rank0 + 1
        )


# ---------------------------------------------------------------------------
# Compilation


def build(formula: Formula, interp: Interpretation, budget: int = 1) -> Game:
    """Compile a closed formula into a finite game under an interpretation.

    budget bounds the number of splits available inside each branching
    recurrence occurrence (including those induced by o-> and o~).
    """
    if budget < 0:
        raise BuildError("split budget must be non-negative")
    return _build(formula, interp, budget, {})


def _leaf(value: bool, label: str) -> LeafGame:
    return LeafGame(MACHINE if value else ENVIRONMENT, label)


def _build(f: Formula, interp: Interpretation, budget: int, env: dict[str, int]) -> Game:
    label = print_formula(_ground(f, env, interp))

    if isinstance(f, Top):
        return LeafGame(MACHINE, label)
    if isinstance(f, Bot):
        return LeafGame(ENVIRONMENT, label)
    if isinstance(f, Elem):
        args = tuple(interp.eval_term(a, env) for a in f.args)
        return _leaf(interp.elem_value(f.name, args), label)
    if isinstance(f, Eq):
        lv = interp.eval_term(f.left, env)
        rv = interp.eval_term(f.right, env)
        return _leaf(lv == rv, label)
    if isinstance(f, Gen):
        args = tuple(interp.eval_term(a, env) for a in f.args)
        g = TreeGame(interp.game_tree(f.name, args), label)
        return g
    if isinstance(f, Neg):
        return NegGame(_build(f.body, interp, budget, env), label)
    if isinstance(f, ParAnd):
        return ParallelGame(
            "conj",
            _build(f.left, interp, budget, env),
            _build(f.right, interp, budget, env),
            label,
        )
    if isinstance(f, ParOr):
        return ParallelGame(
            "disj",
            _build(f.left, interp, budget, env),
            _build(f.right, interp, budget, env),
            label,
        )
    if isinstance(f, ParImpl):
        return ParallelGame(
            "disj",
            NegGame(_build(f.left, interp, budget, env)),
            _build(f.right, interp, budget, env),
            label,
        )
    if isinstance(f, ChoAnd):
        return ChoiceGame(
            "conj",
            [_build(f.left, interp, budget, env), _build(f.right, interp, budget, env)],
            label,
        )
    if isinstance(f, ChoOr):
        return ChoiceGame(
            "disj",
            [_build(f.left, interp, budget, env), _build(f.right, interp, budget, env)],
            label,
        )
    if isinstance(f, (ChoAll, ChoEx)):
        kind = "conj" if isinstance(f, ChoAll) else "disj"
        children = [
            _build(f.body, interp, budget, {**env, f.var: i})
            for i in range(interp.universe)
        ]
        return ChoiceGame(kind, children, label)
    if isinstance(f, (BlindAll, BlindEx)):
        kind = "all" if isinstance(f, BlindAll) else "ex"
        instances = [
            _build(f.body, interp, budget, {**env, f.var: i})
            for i in range(interp.universe)
        ]
        check_unistructural(instances, label)
        return BlindGame(kind, instances, label)
    if isinstance(f, Brec):
        return BrecGame("rec", _build(f.body, interp, budget, env), budget, label)
    if isinstance(f, Corec):
        return BrecGame("corec", _build(f.body, interp, budget, env), budget, label)
    if isinstance(f, Brimpl):
        rec = BrecGame("rec", _build(f.left, interp, budget, env), budget)
        return ParallelGame("disj", NegGame(rec), _build(f.right, interp, budget, env), label)
    if isinstance(f, Brefute):
        rec = BrecGame("rec", _build(f.body, interp, budget, env), budget)
        return ParallelGame("disj", NegGame(rec), LeafGame(ENVIRONMENT, "F"), label)
    raise BuildError(f"cannot build a game for {f!r}")


def _ground(f: Formula, env: dict[str, int], interp: Interpretation) -> Formula:
    """Substitute the current environment into f, for display labels."""
    out = f
    for name, val in env.items():
        out = substitute(out, name, val, universe=interp.universe)
    return out


# ---------------------------------------------------------------------------
# Uniform play over a family of interpretations
#
# When the members share a universe and the formula has no general atoms,
# every member compiles to the *same* move structure; only the leaf winners
# differ. One game with bitmask leaves then decides uniform winnability:
# stopping is safe exactly where the mask says every member is won. For
# mixed-structure families solve_uniform() falls back to belief-state search.


class UniformGame(Game):
    """One game standing for a whole same-structure family.

    stop_winner says MACHINE only where *every* member wins, so ordinary
    backward induction on this game decides uniform winnability. States are
    identical to each member's states, so an extracted policy can be replayed
    and verified on any member directly.
    """

    def __init__(self, root: Game, members: int):
        self.root = root
        self.members = members
        self.full = (1 << members) - 1
        self.label = root.label

    def initial(self) -> State:
        return self.root.initial()

    def moves(self, state: State, player: Player) -> tuple[str, ...]:
        return self.root.moves(state, player)

    def apply(self, state: State, player: Player, label: str) -> State:
        return self.root.apply(state, player, label)

    def stop_winner(self, state: State) -> Player:
        won = self.root.stop_mask(state, self.full) == self.full
        return MACHINE if won else ENVIRONMENT

    def member_mask(self, state: State) -> int:
        """Bitmask of members the machine would win by stopping here."""
        return self.root.stop_mask(state, self.full)

    def rank(self, state: State) -> int:
        return self.root.rank(state)


def family_lockstep(formula: Formula, interps: list[Interpretation]) -> bool:
    """True when the family compiles to one shared move structure."""
    if has_general_atoms(formula):
        return False
    return len({i.universe for i in interps}) == 1


def build_uniform(formula: Formula, interps: list[Interpretation], budget: int = 1) -> UniformGame:
    """Compile a closed, general-atom-free formula over a same-universe
    family into a single mask game; see UniformGame."""
    if not interps:
        raise BuildError("empty interpretation family")
    if not family_lockstep(formula, interps):
        raise BuildError(
            "family members must share a universe and the formula must be "
            "free of general atoms for a lockstep build"
        )
    if budget < 0:
        raise BuildError("split budget must be non-negative")
    root = _build_mask(formula, interps, budget, {})
    return UniformGame(root, len(interps))


def _mask_leaf(values: list[bool], label: str) -> LeafGame:
    mask = 0
    for k, v in enumerate(values):
        if v:
            mask |= 1 << k
    won_everywhere = all(values)
    return LeafGame(MACHINE if won_everywhere else ENVIRONMENT, label, mask=mask)


def _build_mask(
    f: Formula, interps: list[Interpretation], budget: int, env: dict[str, int]
) -> Game:
    label = print_formula(_ground(f, env, interps[0]))
    universe = interps[0].universe

    if isinstance(f, Top):
        return LeafGame(MACHINE, label, mask=(1 << len(interps)) - 1)
    if isinstance(f, Bot):
        return LeafGame(ENVIRONMENT, label, mask=0)
    if isinstance(f, Elem):
        vals = []
        for it in interps:
            args = tuple(it.eval_term(a, env) for a in f.args)
            vals.append(it.elem_value(f.name, args))
        return _mask_leaf(vals, label)
    if isinstance(f, Eq):
        vals = [
            it.eval_term(f.left, env) == it.eval_term(f.right, env) for it in interps
        ]
        return _mask_leaf(vals, label)
    if isinstance(f, Neg):
        return NegGame(_build_mask(f.body, interps, budget, env), label)
    if isinstance(f, ParAnd):
        return ParallelGame(
            "conj",
            _build_mask(f.left, interps, budget, env),
            _build_mask(f.right, interps, budget, env),
            label,
        )
    if isinstance(f, ParOr):
        return ParallelGame(
            "disj",
            _build_mask(f.left, interps, budget, env),
            _build_mask(f.right, interps, budget, env),
            label,
        )
    if isinstance(f, ParImpl):
        return ParallelGame(
            "disj",
            NegGame(_build_mask(f.left, interps, budget, env)),
            _build_mask(f.right, interps, budget, env),
            label,
        )
    if isinstance(f, (ChoAnd, ChoOr)):
        kind = "conj" if isinstance(f, ChoAnd) else "disj"
        return ChoiceGame(
            kind,
            [
                _build_mask(f.left, interps, budget, env),
                _build_mask(f.right, interps, budget, env),
            ],
            label,
        )
    if isinstance(f, (ChoAll, ChoEx)):
        kind = "conj" if isinstance(f, ChoAll) else "disj"
        children = [
            _build_mask(f.body, interps, budget, {**env, f.var: i})
            for i in range(universe)
        ]
        return ChoiceGame(kind, children, label)
    if isinstance(f, (BlindAll, BlindEx)):
        kind = "all" if isinstance(f, BlindAll) else "ex"
        instances = [
            _build_mask(f.body, interps, budget, {**env, f.var: i})
            for i in range(universe)
        ]
        # general-atom-free instances share their structure by construction,
        # but keep the same error surface as the single-game build
        check_unistructural(instances, label)
        return BlindGame(kind, instances, label)
    if isinstance(f, Brec):
        return BrecGame("rec", _build_mask(f.body, interps, budget, env), budget, label)
    if isinstance(f, Corec):
        return BrecGame("corec", _build_mask(f.body, interps, budget, env), budget, label)
    if isinstance(f, Brimpl):
        rec = BrecGame("rec", _build_mask(f.left, interps, budget, env), budget)
        return ParallelGame(
            "disj", NegGame(rec), _build_mask(f.right, interps, budget, env), label
        )
    if isinstance(f, Brefute):
        rec = BrecGame("rec", _build_mask(f.body, interps, budget, env), budget)
        return ParallelGame("disj", NegGame(rec), LeafGame(ENVIRONMENT, "F", mask=0), label)
    raise BuildError(f"cannot build a game for {f!r}")


def solve_formula_uniform(
    formula: Formula,
    interps: list[Interpretation],
    *,
    budget: int = 1,
    max_states: Optional[int] = None,
    want_strategy: bool = False,
):
    """Uniform verdict for a formula over an interpretation family.

    Routes same-structure families through the mask game (fast, exact) and
    everything else through belief-state search; both return a Verdict with
    mode "uniform".
    """
    from . import solver

    limit = solver.DEFAULT_MAX_STATES if max_states is None else max_states
    if not interps:
        raise BuildError("empty interpretation family")
    if family_lockstep(formula, interps):
        game = build_uniform(formula, interps, budget)
        verdict = solver.solve(
            game, max_states=limit, want_strategy=want_strategy, budget=budget
        )
        verdict.mode = "uniform"
        return verdict
    games = [build(formula, it, budget) for it in interps]
    return solver.solve_uniform(
        games, max_states=limit, want_strategy=want_strategy, budget=budget
    )

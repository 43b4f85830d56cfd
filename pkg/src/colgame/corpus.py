"""Reproducible generated corpora for the dual-route and identity checks.

Every generator takes an explicit seed and is deterministic for a given
seed, so the pinned seeds below name exact corpora. Sizes are filtered
at generation time to keep exhaustive downstream checks cheap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import ColError
from .formula import (
    BOT,
    TOP,
    BlindAll,
    BlindEx,
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
    Var,
    atom_signature,
)
from .game import ENVIRONMENT, MACHINE, Game, GameTree, reachable_states
from .intlogic import IAnd, IAtom, IBot, IImpl, INeg, IOr, IntFormula, print_int
from .semantics import (
    BrecGame,
    ChoiceGame,
    Interpretation,
    LeafGame,
    NegGame,
    ParallelGame,
    build,
)

ORACLE_SEED = 20260816
IDENTITY_SEED = 20260817
MONOTONE_SEED = 20260818
COPYCAT_SEED = 20260819
INT_SEED = 20260820

# reachable-state ceiling for corpus membership; keeps the oracle's
# backtracking search and exhaustive strategy verification tractable
ORACLE_STATE_CAP = 1500
COPYCAT_STATE_CAP = 4000


@dataclass(frozen=True)
class GeneratedCase:
    """One solver input: a closed formula, an interpretation, a budget."""

    formula: Formula
    interp: Interpretation
    budget: int


# ---------------------------------------------------------------------------
# Random formulas


@dataclass
class _Opts:
    allow_gen: bool = True
    allow_rec: bool = True
    allow_quant: bool = True
    allow_blind: bool = True
    elem_names: tuple[str, ...] = ("p", "q", "r")
    gen_names: tuple[str, ...] = ("P", "Q")


def _gen_formula(rng: random.Random, depth: int, bound: tuple[str, ...], o: _Opts) -> Formula:
    if depth <= 0 or rng.random() < 0.25:
        return _gen_leaf(rng, bound, o)
    roll = rng.random()
    sub = depth - 1
    if o.allow_quant and roll < 0.15 and len(bound) < 2:
        v = "xy"[len(bound)]
        kinds = [ChoAll, ChoEx] + ([BlindAll, BlindEx] if o.allow_blind else [])
        return rng.choice(kinds)(v, _gen_formula(rng, sub, bound + (v,), o))
    if roll < 0.30:
        return Neg(_gen_formula(rng, sub, bound, o))
    if o.allow_rec and roll < 0.42:
        inner = _gen_formula(rng, sub, bound, o)
        return rng.choice([Brec, Corec, Brefute])(inner)
    ctor = rng.choice(
        [ParAnd, ParOr, ParImpl, ChoAnd, ChoOr] + ([Brimpl] if o.allow_rec else [])
    )
    return ctor(_gen_formula(rng, sub, bound, o), _gen_formula(rng, sub, bound, o))


def _gen_leaf(rng: random.Random, bound: tuple[str, ...], o: _Opts) -> Formula:
    roll = rng.random()
    if roll < 0.08:
        return TOP if rng.random() < 0.5 else BOT
    if bound and roll < 0.20:
        return Eq(Var(rng.choice(bound)), Num(rng.randrange(2)))
    if o.allow_gen and roll < 0.35:
        # arity 0 keeps general-atom tables small and always unistructural
        return Gen(rng.choice(o.gen_names))
    name = rng.choice(o.elem_names)
    if bound and rng.random() < 0.5:
        return Elem(name, (Var(rng.choice(bound)),))
    return Elem(name)


def _gen_tree(rng: random.Random, depth: int) -> GameTree:
    if depth <= 0 or rng.random() < 0.4:
        return GameTree(rng.choice((MACHINE, ENVIRONMENT)))
    mover = rng.choice((MACHINE, ENVIRONMENT))
    labels = rng.sample(["alpha", "beta", "gamma"], k=rng.randrange(1, 3))
    edges = tuple((mover, lab, _gen_tree(rng, depth - 1)) for lab in labels)
    return GameTree(rng.choice((MACHINE, ENVIRONMENT)), edges)


def _random_interp(rng: random.Random, f: Formula, n: int) -> Interpretation:
    predicates: dict[tuple[str, int], tuple[bool, ...]] = {}
    games: dict[tuple[str, int], tuple[GameTree, ...]] = {}
    for (name, arity), sort in sorted(atom_signature(f).items()):
        if sort == "elem":
            predicates[(name, arity)] = tuple(
                rng.random() < 0.5 for _ in range(n**arity)
            )
        else:
            games[(name, arity)] = tuple(_gen_tree(rng, 2) for _ in range(n**arity))
    return Interpretation(universe=n, predicates=predicates, games=games)


def _case_game(case: GeneratedCase) -> Optional[Game]:
    try:
        return build(case.formula, case.interp, budget=case.budget)
    except ColError:
        return None


# cycling per-slot floors on reachable-state counts; rejection sampling
# against these keeps the corpora from collapsing into moveless games
_ORACLE_FLOORS = (1, 4, 8, 16, 30)
_COPYCAT_FLOORS = (1, 6, 12, 24, 48)


def oracle_cases(count: int = 200, seed: int = ORACLE_SEED) -> list[GeneratedCase]:
    """Dual-route corpus: operator-built games, depth <= 3, N <= 2, budget <= 1."""
    rng = random.Random(seed)
    out: list[GeneratedCase] = []
    opts = _Opts()
    while len(out) < count:
        f = _gen_formula(rng, rng.randrange(1, 4), (), opts)
        case = GeneratedCase(f, _random_interp(rng, f, rng.randrange(1, 3)), rng.randrange(2))
        game = _case_game(case)
        if game is None:
            continue
        states = reachable_states(game, cap=ORACLE_STATE_CAP)
        if states is None or len(states) < _ORACLE_FLOORS[len(out) % len(_ORACLE_FLOORS)]:
            continue
        out.append(case)
    return out


# ---------------------------------------------------------------------------
# Operator-built raw games for the behavioral identities


def _gen_game(rng: random.Random, depth: int) -> Game:
    if depth <= 0 or rng.random() < 0.3:
        return LeafGame(rng.choice((MACHINE, ENVIRONMENT)))
    roll = rng.random()
    sub = depth - 1
    if roll < 0.2:
        return NegGame(_gen_game(rng, sub))
    if roll < 0.5:
        kids = [_gen_game(rng, sub) for _ in range(rng.randrange(2, 4))]
        return ChoiceGame(rng.choice(("conj", "disj")), kids)
    if roll < 0.8:
        return ParallelGame(
            rng.choice(("conj", "disj")), _gen_game(rng, sub), _gen_game(rng, sub)
        )
    return BrecGame(rng.choice(("rec", "corec")), _gen_game(rng, sub), rng.randrange(2))


def identity_games(count: int = 100, seed: int = IDENTITY_SEED) -> list[Game]:
    rng = random.Random(seed)
    return [_gen_game(rng, rng.randrange(1, 4)) for _ in range(count)]


def demorgan_pairs(count: int = 100, seed: int = IDENTITY_SEED) -> list[tuple[Game, Game]]:
    """(neg of a choice-conjunction, choice-disjunction of negs) pairs.

    Children counts vary 2..4, so binary connectives and quantifier-style
    fans are both exercised.
    """
    rng = random.Random(seed + 1)
    out = []
    for _ in range(count):
        kids = [_gen_game(rng, rng.randrange(0, 3)) for _ in range(rng.randrange(2, 5))]
        lhs = NegGame(ChoiceGame("conj", kids))
        rhs = ChoiceGame("disj", [NegGame(k) for k in kids])
        out.append((lhs, rhs))
    return out


def monotonicity_cases(count: int = 50, seed: int = MONOTONE_SEED) -> list[tuple[str, Game]]:
    """(kind, inner) pairs for the budget-monotonicity law."""
    rng = random.Random(seed)
    out: list[tuple[str, Game]] = []
    while len(out) < count:
        kind = "rec" if len(out) % 2 == 0 else "corec"
        inner = _gen_game(rng, rng.randrange(1, 3))
        states = reachable_states(BrecGame(kind, inner, 1), cap=ORACLE_STATE_CAP)
        # every other slot must have real split interaction, not a bare leaf
        if states is None or (len(out) % 4 >= 2 and len(states) < 6):
            continue
        out.append((kind, inner))
    return out


# ---------------------------------------------------------------------------
# Copycat bodies
#
# A ranges over recurrence-free, general-atom-free formulas: there the
# positions of not-A par A are determined by the two per-side move
# sequences alone, which is exactly what label mirroring relies on.
# Recurrence splits and foreign tree atoms can break that alignment.


def copycat_bodies(count: int = 50, seed: int = COPYCAT_SEED) -> list[GeneratedCase]:
    rng = random.Random(seed)
    opts = _Opts(allow_gen=False, allow_rec=False)
    out: list[GeneratedCase] = []
    while len(out) < count:
        f = _gen_formula(rng, rng.randrange(1, 4), (), opts)
        case = GeneratedCase(f, _random_interp(rng, f, rng.randrange(1, 3)), 0)
        paired = GeneratedCase(ParOr(Neg(f), f), case.interp, 0)
        game = _case_game(paired)
        if game is None:
            continue
        states = reachable_states(game, cap=COPYCAT_STATE_CAP)
        if states is None or len(states) < _COPYCAT_FLOORS[len(out) % len(_COPYCAT_FLOORS)]:
            continue
        out.append(case)
    return out


# ---------------------------------------------------------------------------
# Intuitionistic formulas for the prover/Kripke agreement check


def _gen_int(rng: random.Random, depth: int) -> IntFormula:
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.08:
            return IBot()
        return IAtom(rng.choice("abc"))
    roll = rng.random()
    sub = depth - 1
    if roll < 0.2:
        return INeg(_gen_int(rng, sub))
    ctor = rng.choice((IAnd, IOr, IImpl, IImpl))
    return ctor(_gen_int(rng, sub), _gen_int(rng, sub))


def int_formulas(count: int = 500, seed: int = INT_SEED) -> list[IntFormula]:
    """At least `count` distinct formulas over <= 3 atoms, depth <= 3."""
    rng = random.Random(seed)
    seen: set[str] = set()
    out: list[IntFormula] = []
    while len(out) < count:
        f = _gen_int(rng, 3)
        key = print_int(f)
        if key in seen:
            continue
        seen.add(key)
        out.append(f)
    return out

"""Packaged example games, interpretations, and the prover corpus.

Every fixture referenced by the CLI, the session server, or the test suite
is loaded through this module so there is exactly one source of truth for
what e.g. "fig1" means.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .errors import InterpretationError
from .formula import parse
from .game import Game, GameTree, TreeGame, validate_tree
from .semantics import Interpretation, build, load_interpretation


def _read(name: str) -> str:
    return resources.files("colgame").joinpath("data", name).read_text()


def load_tree(name: str) -> GameTree:
    """Load a packaged game tree by base name (fig1, fig2, fig5, fig5_neg)."""
    return validate_tree(json.loads(_read(name + ".json")))


def load_interp(name: str) -> Interpretation:
    """Load a packaged interpretation by base name.

    The family interpretation is additionally checked for the composition
    law it exists to illustrate: nainai must equal mother after father.
    """
    interp = load_interpretation(json.loads(_read(name + ".json")))
    if name == "family":
        _check_family(interp)
    return interp


def _check_family(interp: Interpretation) -> None:
    father = interp.functions[("father", 1)]
    mother = interp.functions[("mother", 1)]
    nainai = interp.functions[("nainai", 1)]
    for x in range(interp.universe):
        if mother[father[x]] != nainai[x]:
            raise InterpretationError(
                f"family fixture broken: nainai({x}) = {nainai[x]} but "
                f"mother(father({x})) = {mother[father[x]]}"
            )


def corpus_lines() -> list[str]:
    """The shipped 30-formula intuitionistic corpus (comments stripped)."""
    out = []
    for line in _read("intcorpus.txt").splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            out.append(s)
    return out


# ---------------------------------------------------------------------------
# Named playable setups


@dataclass(frozen=True)
class FixtureSpec:
    name: str
    kind: str  # "tree" | "formula"
    source: str  # tree base name, or formula text
    interp: Optional[str] = None
    budget: int = 1
    default_strategy: Optional[str] = None
    note: str = ""


GRANDMOTHER_FORMULA = (
    "(chall x . chex y . y = father(x)) /\\ (chall x . chex y . y = mother(x))"
    " -> chall x . chex y . y = nainai(x)"
)

PARITY_FORMULA = (
    "all x . (even(x) | odd(x) -> chall y . (even(plus(x, y)) | odd(plus(x, y))))"
)

FIXTURES: dict[str, FixtureSpec] = {
    "fig1": FixtureSpec(
        "fig1", "tree", "fig1", default_strategy="fig1",
        note="the opening three-move example game",
    ),
    "fig2": FixtureSpec(
        "fig2", "tree", "fig2",
        note="successor game over {0..3}: answer x+1 mod 4",
    ),
    "fig5": FixtureSpec(
        "fig5", "tree", "fig5",
        note="(T choice-or F) choice-and (F choice-or T)",
    ),
    "copycat": FixtureSpec(
        "copycat", "formula", "~P \\/ P", interp="fig1_as_P", budget=0,
        default_strategy="copycat",
        note="mirroring wins the parallel disjunction of a game and its negation",
    ),
    "grandmother": FixtureSpec(
        "grandmother", "formula", GRANDMOTHER_FORMULA, interp="family", budget=0,
        default_strategy="grandmother",
        note="reduce grandmotherhood to fatherhood and motherhood, N=6",
    ),
    "parity": FixtureSpec(
        "parity", "formula", PARITY_FORMULA, interp="parity", budget=0,
        note="blind x: answer the parity of x+y from the claimed parity of x",
    ),
    "succ": FixtureSpec(
        "succ", "formula", "chall x . chex y . y = succ(x)", interp="succ", budget=0,
        note="the successor problem as a choice-quantifier formula",
    ),
}


def fixture_names() -> list[str]:
    return sorted(FIXTURES)


def make_fixture_game(name: str) -> tuple[Game, FixtureSpec]:
    spec = FIXTURES.get(name)
    if spec is None:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
    if spec.kind == "tree":
        game: Game = TreeGame(load_tree(spec.source), label=spec.name)
    else:
        game = build(parse(spec.source), load_interp(spec.interp), spec.budget)
    return game, spec

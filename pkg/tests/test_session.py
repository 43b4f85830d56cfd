"""Tests for the session layer driving a strategy against a human."""

import pytest

from colgame.errors import ColError, IllegalMoveError
from colgame.formula import parse
from colgame.semantics import build, load_interpretation
from colgame.session import BestEffortStrategy, create_session, game_structure


def test_create_session_requires_exactly_one_source():
    with pytest.raises(ColError):
        create_session({})
    with pytest.raises(ColError):
        create_session({"fixture": "fig1", "formula": "p"})


def test_machine_autoplays_at_creation():
    s = create_session({"fixture": "fig1"})
    assert [m for _, m in s.history] == ["alpha"]
    assert s.status == "open"
    assert s.machine_winnable is True


def test_step_and_stop():
    s = create_session({"fixture": "fig1"})
    s.step(label="gamma")
    assert [m for _, m in s.history] == ["alpha", "gamma", "beta"]
    s.step(stop=True)
    assert s.status == "finished"
    assert s.winner is not None and s.winner.symbol == "T"
    with pytest.raises(IllegalMoveError):
        s.step(label="gamma")


def test_illegal_human_move():
    s = create_session({"fixture": "fig1"})
    with pytest.raises(IllegalMoveError):
        s.step(label="alpha")  # machine move, not a legal env move


def test_best_effort_on_unwinnable_game_waits():
    it = load_interpretation({"universe": 1, "predicates": {"p/0": ["T"], "q/0": ["F"]}})
    g = build(parse("p & q"), it, 0)
    strat = BestEffortStrategy(g)
    assert strat.winnable is False
    assert strat.kind == "best-effort"
    assert strat.action(g, g.initial(), ()) is None


def test_best_effort_grabs_wins_after_blunders():
    # p & q is not machine-winnable (the environment picks q), but when the
    # environment commits to the true conjunct the machine happily stops won
    s = create_session({"formula": "p & q", "interp": {
        "universe": 1, "predicates": {"p/0": ["T"], "q/0": ["F"]}
    }})
    assert s.machine_winnable is False
    assert s.strategy.kind == "best-effort"
    s.step(label="0")
    s.step(stop=True)
    assert s.winner.symbol == "T"


def test_payload_shape():
    s = create_session({"fixture": "fig1"})
    p = s.payload()
    assert p["stateLabel"] == "T:alpha"
    assert p["legalHumanMoves"] == ["beta", "gamma"]
    assert p["status"] == "open"
    assert p["winner"] is None
    assert p["strategyKind"] == "fig1"
    assert p["structure"]["kind"] == "tree"


def test_structure_outline_kinds():
    s = create_session({
        "formula": "$ (p & q) -> all x . p",
        "interp": {"universe": 1, "predicates": {"p/0": ["T"], "q/0": ["T"]}},
        "budget": 1,
    })
    outline = game_structure(s.game)
    assert outline["kind"] == "parallel" and outline["flavor"] == "disj"
    neg = outline["children"][0]
    assert neg["kind"] == "neg"
    brec = neg["children"][0]
    assert brec["kind"] == "brec" and brec["flavor"] == "rec" and brec["maxSplits"] == 1
    choice = brec["children"][0]
    assert choice["kind"] == "choice" and choice["chooser"] == "F"
    blind = outline["children"][1]
    assert blind["kind"] == "blind" and blind["width"] == 1


def test_named_strategy_must_fit():
    with pytest.raises(ColError):
        create_session({"fixture": "fig2", "strategy": "fig1"})
    with pytest.raises(ColError):
        create_session({"fixture": "fig1", "strategy": "unheard-of"})

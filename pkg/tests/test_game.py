"""Tests for the explicit-tree game layer: trees, runs, comparison, export."""

import pytest

from colgame.errors import IllegalMoveError, NonDelayTolerantError, TreeFormatError
from colgame.fixtures import load_tree
from colgame.game import (
    ENVIRONMENT,
    MACHINE,
    GameTree,
    Player,
    TreeGame,
    canonical_state_labels,
    check_delay_tolerance,
    export_tree,
    first_divergence,
    games_equal,
    leaf,
    play_run,
    player_from_symbol,
    reachable_states,
    tree_to_data,
    validate_tree,
)
from colgame.semantics import NegGame


def test_players():
    assert MACHINE.symbol == "T"
    assert ENVIRONMENT.symbol == "F"
    assert MACHINE.opponent is ENVIRONMENT
    assert ENVIRONMENT.opponent is MACHINE
    assert player_from_symbol("T") is MACHINE
    assert player_from_symbol("F") is ENVIRONMENT
    with pytest.raises(TreeFormatError):
        player_from_symbol("X")


def test_fig1_shape():
    t = load_tree("fig1")
    assert t.node_count() == 16
    assert t.leaf_count() == 8
    assert t.depth() == 3


def test_fig1_three_move_run():
    g = TreeGame(load_tree("fig1"))
    _, outcome = play_run(g, [(MACHINE, "alpha"), (ENVIRONMENT, "gamma"), (MACHINE, "beta")])
    assert outcome is MACHINE
    # the machine loses if it stops right after the environment replies
    _, outcome = play_run(g, [(MACHINE, "alpha"), (ENVIRONMENT, "gamma")])
    assert outcome is ENVIRONMENT


def test_illegal_run_names_the_step():
    g = TreeGame(load_tree("fig1"))
    with pytest.raises(IllegalMoveError, match="step 1"):
        play_run(g, [(MACHINE, "alpha"), (ENVIRONMENT, "alpha")])


def test_tree_game_moves_and_rank():
    g = TreeGame(load_tree("fig1"))
    root = g.initial()
    assert g.moves(root, MACHINE) == ("alpha",)
    assert g.moves(root, ENVIRONMENT) == ("beta", "gamma")
    assert g.rank(root) == 3
    with pytest.raises(IllegalMoveError):
        g.apply(root, MACHINE, "gamma")


@pytest.mark.parametrize(
    "data",
    [
        "not a dict",
        {},  # missing winner
        {"winner": "Q"},
        {"winner": "T", "moves": "nope"},
        {"winner": "T", "moves": [{"by": "T", "label": "a"}]},  # missing 'to'
        {"winner": "T", "moves": [{"by": "T", "label": "", "to": {"winner": "F"}}]},
        {
            "winner": "T",
            "moves": [
                {"by": "T", "label": "a", "to": {"winner": "F"}},
                {"by": "T", "label": "a", "to": {"winner": "T"}},
            ],
        },
    ],
)
def test_validate_tree_rejects_malformed(data):
    with pytest.raises(TreeFormatError):
        validate_tree(data)


def test_validate_tree_checks_gametree_instances():
    dup = GameTree(MACHINE, (
        (MACHINE, "a", leaf(ENVIRONMENT)),
        (MACHINE, "a", leaf(MACHINE)),
    ))
    with pytest.raises(TreeFormatError):
        validate_tree(dup)


def test_tree_data_round_trip():
    t = load_tree("fig2")
    assert validate_tree(tree_to_data(t)) == t


def test_games_equal_and_divergence():
    g5 = TreeGame(load_tree("fig5"))
    g5n = TreeGame(load_tree("fig5_neg"))
    # the negation of one explicit tree is behaviorally the other
    assert games_equal(g5, NegGame(g5n))
    assert games_equal(g5n, NegGame(g5))
    d = first_divergence(g5, g5n)
    assert d is not None and "stop winner differs" in d


def test_export_tree_reproduces_tree_games():
    t = load_tree("fig5")
    g = TreeGame(t)
    assert export_tree(g) is t
    # exporting a composite gives an explicit tree with the same behavior
    exported = export_tree(NegGame(g))
    assert games_equal(TreeGame(exported), NegGame(g))


def test_reachable_states_and_cap():
    g = TreeGame(load_tree("fig1"))
    states = reachable_states(g)
    # structurally equal subtrees collapse, so fewer states than tree nodes
    assert states is not None and len(states) == 8
    assert reachable_states(g, cap=3) is None
    assert reachable_states(g, cap=8) is not None


def test_canonical_state_labels():
    g = TreeGame(load_tree("fig1"))
    labels = canonical_state_labels(g)
    assert len(labels) == 8
    assert labels[g.initial()] == ""
    assert "T:alpha" in labels.values()
    # BFS takes moves in (symbol, label) order, so F-moves come first and
    # each state's label is the least history among those reaching it
    assert "F:beta T:alpha" in labels.values()
    # every label replays to its state
    for state, text in labels.items():
        moves = []
        for token in text.split():
            sym, _, lbl = token.partition(":")
            moves.append((player_from_symbol(sym), lbl))
        replayed, _ = play_run(g, moves)
        assert replayed == state


def test_delay_tolerance_check():
    check_delay_tolerance(TreeGame(load_tree("fig1")))
    check_delay_tolerance(TreeGame(load_tree("fig2")))
    # a tree whose outcome depends on interleaving order is flagged
    violating = GameTree(ENVIRONMENT, (
        (MACHINE, "a", GameTree(ENVIRONMENT, ((ENVIRONMENT, "b", leaf(MACHINE)),))),
        (ENVIRONMENT, "b", GameTree(MACHINE, ((MACHINE, "a", leaf(ENVIRONMENT)),))),
    ))
    with pytest.raises(NonDelayTolerantError):
        check_delay_tolerance(TreeGame(violating))


def test_all_moves_enumeration():
    g = TreeGame(load_tree("fig1"))
    assert list(g.all_moves(g.initial())) == [
        (MACHINE, "alpha"),
        (ENVIRONMENT, "beta"),
        (ENVIRONMENT, "gamma"),
    ]

"""Acceptance suite: one test per shipped claim, pinned tolerances.

Run with -v to get one pass/fail line per criterion. Bounds are chosen so
the whole file finishes within minutes on a laptop.
"""

import time

import pytest

from colgame.corpus import (
    copycat_bodies,
    demorgan_pairs,
    identity_games,
    int_formulas,
    monotonicity_cases,
    oracle_cases,
)
from colgame.fixtures import (
    PARITY_FORMULA,
    corpus_lines,
    load_interp,
    make_fixture_game,
)
from colgame.formula import Neg, ParOr, parse
from colgame.game import games_equal
from colgame.intlogic import (
    assignment_family,
    audit,
    audit_line,
    int_prove,
    kripke_countermodel,
    parse_int,
)
from colgame.semantics import (
    BrecGame,
    NegGame,
    build,
    load_interpretation,
    solve_formula_uniform,
)
from colgame.solver import solve, solve_oracle, verify_strategy
from colgame.strategies import make_strategy


def test_criterion_01_fig1_script():
    # winnable, and the scripted strategy survives every environment line,
    # exhaustively, within one second of wall clock
    t0 = time.perf_counter()
    game, _ = make_fixture_game("fig1")
    assert solve(game).winnable is True
    result = verify_strategy(game, make_strategy("fig1", game))
    elapsed = time.perf_counter() - t0
    assert result.ok, result.reason
    assert elapsed < 1.0, f"fig1 suite took {elapsed:.3f}s"


def test_criterion_02_successor_game():
    game, _ = make_fixture_game("fig2")
    v = solve(game, want_strategy=True)
    assert v.winnable is True
    # the extracted strategy answers exactly by the successor table
    table = load_interp("succ").functions[("succ", 1)]
    answers = {lbl.removeprefix("F:"): move for lbl, move in v.strategy_table}
    assert answers == {str(x): str(table[x]) for x in range(4)}


def test_criterion_03_oracle_equivalence():
    cases = oracle_cases(200)
    assert len(cases) == 200
    disagreements = []
    for case in cases:
        game = build(case.formula, case.interp, case.budget)
        a = solve(game, max_states=20000)
        b = solve_oracle(game, max_states=20000)
        if a.winnable != b.winnable:
            disagreements.append(case.formula)
    assert disagreements == []


def test_criterion_04_algebraic_identities():
    # double negation is the identity, behaviorally
    for g in identity_games(100):
        assert games_equal(NegGame(NegGame(g)), g)
    # negation distributes over choice (DeMorgan), behaviorally
    for lhs, rhs in demorgan_pairs(100):
        assert games_equal(lhs, rhs)
    # split budgets are monotone: an extra split never helps the machine in
    # a recurrence (the splitter is the environment) and never hurts it in
    # the dual (the machine splits)
    for kind, inner in monotonicity_cases(50):
        wins = [
            solve(BrecGame(kind, inner, k), max_states=100000).winnable
            for k in (0, 1, 2)
        ]
        for lo, hi in ((0, 1), (1, 2)):
            if kind == "rec":
                assert not (wins[hi] and not wins[lo]), (kind, wins)
            else:
                assert not (wins[lo] and not wins[hi]), (kind, wins)


EM_ELEM = assignment_family(["p"])
EM_GEN = [load_interp(f"em_general_{i}") for i in (1, 2, 3)]


def test_criterion_05_excluded_middle_table():
    outcomes = [
        ("~p \\/ p", EM_ELEM, True),
        ("~P \\/ P", EM_GEN, True),
        ("~p | p", EM_ELEM, False),
        ("~P | P", EM_GEN, False),
        ("(~p /\\ ~p) \\/ p", EM_ELEM, True),
        ("(~P /\\ ~P) \\/ P", EM_GEN, False),
    ]
    for text, family, expected in outcomes:
        v = solve_formula_uniform(parse(text), family, budget=0)
        assert v.winnable is expected, text


def test_criterion_06_quantifier_table():
    parity = load_interp("parity")
    assert solve(build(parse("chall x . (even(x) | odd(x))"), parity, 0)).winnable is True
    assert solve(build(parse("all x . (even(x) | odd(x))"), parity, 0)).winnable is False
    assert solve(build(parse(PARITY_FORMULA), parity, 0)).winnable is True

    ptables = [
        load_interpretation({"universe": 2, "predicates": {"p/1": [a, b]}})
        for a in "TF"
        for b in "TF"
    ]
    body = "(p(x) \\/ ~p(y))"
    for text, expected in [
        (f"ex x . all y . {body}", True),
        (f"chex x . chall y . {body}", False),
        (f"all y . ex x . {body}", True),
    ]:
        v = solve_formula_uniform(parse(text), ptables, budget=0)
        assert v.winnable is expected, text


def test_criterion_07_copycat():
    cases = copycat_bodies(50)
    assert len(cases) == 50
    for case in cases:
        game = build(ParOr(Neg(case.formula), case.formula), case.interp, 0)
        s = make_strategy("copycat", game)
        assert verify_strategy(game, s, max_nodes=500000).ok, case.formula


def test_criterion_08_blass_principle():
    elem = parse("(a /\\ b) \\/ (c /\\ d) -> (a \\/ c) /\\ (b \\/ d)")
    fam16 = assignment_family(["a", "b", "c", "d"])
    assert len(fam16) == 16
    assert solve_formula_uniform(elem, fam16, budget=0).winnable is True

    gen = parse("(A /\\ B) \\/ (C /\\ D) -> (A \\/ C) /\\ (B \\/ D)")
    fam4 = [load_interp(f"blass_general_{i}") for i in (1, 2, 3, 4)]
    v = solve_formula_uniform(gen, fam4, budget=0, max_states=2000000)
    assert v.winnable is True


def test_criterion_09_grandmother_reduction():
    game, _ = make_fixture_game("grandmother")
    s = make_strategy("grandmother", game)
    result = verify_strategy(game, s)
    assert result.ok, result.reason


FORMULA_3 = (
    "(~p -> a \\/ b) /\\ (~q -> c \\/ d) /\\ ~(p /\\ q)"
    " -> (~p -> a) \\/ (~p -> b) \\/ (~q -> c) \\/ (~q -> d)"
)


def test_criterion_10_intuitionistic_audit():
    # prover vs the small-model oracle on the frozen generated corpus:
    # full agreement (every unprovable formula here has a <= 3-world
    # countermodel, every provable one has none)
    formulas = int_formulas(500)
    assert len(formulas) == 500
    for f in formulas:
        assert int_prove(f) is (kripke_countermodel(f) is None), f

    # shipped corpus: every row settles at some budget <= 2, none anomalous
    rows = audit(corpus_lines(), budgets=(0, 1, 2), max_states=200000)
    assert len(rows) == 30
    assert all(r.classification != "ANOMALY" for r in rows)
    assert all(r.winnable is not None for r in rows)

    assert int_prove(parse_int("((a -> b) -> a) -> a")) is False  # Peirce
    assert int_prove(parse_int("a \\/ ~a")) is False  # excluded middle

    # the six-atom separation candidate: unprovable; the solver reports the
    # smallest sufficient budget if it finds one within the state cap and
    # is otherwise inconclusive (never anomalous)
    row = audit_line(FORMULA_3, budgets=(0, 1, 2), max_states=500000)
    assert row.provable is False
    assert row.classification in ("separation-witness", "inconclusive")


@pytest.mark.skip(reason="secondary: covered by the frontend suite (frontend/, vitest)")
def test_criterion_11_ui_replay_fidelity():
    pass

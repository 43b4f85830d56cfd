"""Tests for the intuitionistic side: prover, countermodels, translation."""

import random

import pytest

from colgame.corpus import INT_SEED, _gen_int, int_formulas
from colgame.errors import ParseError
from colgame.fixtures import corpus_lines
from colgame.formula import print_formula
from colgame.intlogic import (
    IAnd,
    IAtom,
    IBot,
    IImpl,
    INeg,
    IOr,
    assignment_family,
    audit,
    audit_line,
    int_atoms,
    int_prove,
    kripke_countermodel,
    parse_int,
    print_int,
    render_audit,
    translate_int,
)
from colgame.semantics import solve_formula_uniform


# ---------------------------------------------------------------------------
# Syntax


def test_parse_int_basics():
    assert parse_int("a") == IAtom("a")
    assert parse_int("F") == IBot()
    assert parse_int("~a") == INeg(IAtom("a"))
    assert parse_int("a -> b -> c") == IImpl(IAtom("a"), IImpl(IAtom("b"), IAtom("c")))
    assert parse_int("a /\\ b \\/ c") == IOr(IAnd(IAtom("a"), IAtom("b")), IAtom("c"))


@pytest.mark.parametrize("bad", ["", "A", "a & b", "a | b", "a o-> b", "(a", "a ->", "$a"])
def test_parse_int_rejects(bad):
    with pytest.raises(ParseError):
        parse_int(bad)


def test_print_int_round_trips():
    rng = random.Random(5)
    for _ in range(300):
        f = _gen_int(rng, 3)
        assert parse_int(print_int(f)) == f


def test_print_int_parenthesization():
    assert print_int(parse_int("a -> b -> c")) == "a -> b -> c"
    assert print_int(parse_int("(a -> b) -> c")) == "(a -> b) -> c"
    assert print_int(parse_int("~a \\/ b /\\ c")) == "~a \\/ b /\\ c"
    assert print_int(parse_int("~(a \\/ b)")) == "~(a \\/ b)"


def test_int_atoms():
    assert int_atoms(parse_int("b -> a /\\ ~c")) == ["a", "b", "c"]
    assert int_atoms(parse_int("F")) == []


# ---------------------------------------------------------------------------
# Prover pins


PROVABLE = [
    "a -> a",
    "a /\\ b -> a",
    "a -> a \\/ b",
    "~~(a \\/ ~a)",
    "(a -> b) -> (b -> c) -> a -> c",
    "F -> a",
    "(a \\/ b -> c) -> (a -> c) /\\ (b -> c)",
    "~(a /\\ ~a)",
]

UNPROVABLE = [
    "a \\/ ~a",
    "~~a -> a",
    "((a -> b) -> a) -> a",
    "~(a /\\ b) -> ~a \\/ ~b",
    "(a -> b) \\/ (b -> a)",
    "a",
]


@pytest.mark.parametrize("text", PROVABLE)
def test_prover_accepts(text):
    assert int_prove(parse_int(text)) is True


@pytest.mark.parametrize("text", UNPROVABLE)
def test_prover_rejects(text):
    assert int_prove(parse_int(text)) is False


def test_kripke_countermodels():
    # peirce and excluded middle both fail on the two-world chain
    frame, val = kripke_countermodel(parse_int("a \\/ ~a"))
    assert frame == "chain2" and val == {"a": frozenset({1})}
    frame, _ = kripke_countermodel(parse_int("((a -> b) -> a) -> a"))
    assert frame == "chain2"
    assert kripke_countermodel(parse_int("a -> a")) is None
    # weak excluded middle needs a frame that branches
    frame, _ = kripke_countermodel(parse_int("~a \\/ ~~a"))
    assert frame == "vee"


def test_prover_agrees_with_kripke_on_generated_formulas():
    # quick subset of the independent-route check; the 500-formula sweep
    # runs in the acceptance suite
    for f in int_formulas(120, seed=INT_SEED + 7):
        provable = int_prove(f)
        counter = kripke_countermodel(f)
        if counter is not None:
            assert provable is False, print_int(f)


def test_prover_is_sound_on_the_shipped_corpus():
    # every provable corpus line must have no countermodel
    for line in corpus_lines():
        f = parse_int(line)
        if int_prove(f):
            assert kripke_countermodel(f) is None, line


# ---------------------------------------------------------------------------
# Translation


def test_translate_choice_reading():
    assert print_formula(translate_int(parse_int("a \\/ ~a"))) == "A | o~A"
    assert print_formula(translate_int(parse_int("a -> b"))) == "A o-> B"
    assert print_formula(translate_int(parse_int("a /\\ b"))) == "A & B"
    assert print_formula(translate_int(parse_int("F"))) == "F"


def test_translate_elementary_reading():
    assert print_formula(translate_int(parse_int("a \\/ ~a"), elementary=True)) == "a | o~a"


def test_assignment_family_enumerates_truth_assignments():
    fam = assignment_family(["a", "b"])
    assert len(fam) == 4
    assert all(it.universe == 1 for it in fam)
    values = {
        (it.predicates[("a", 0)][0], it.predicates[("b", 0)][0]) for it in fam
    }
    assert values == {(False, False), (False, True), (True, False), (True, True)}


def test_provable_formulas_are_uniformly_winnable():
    # soundness direction, spot-checked: a proof yields a uniform win over
    # every truth assignment of the elementary reading
    for text in PROVABLE[:4]:
        f = parse_int(text)
        fam = assignment_family(int_atoms(f) or ["a"])
        v = solve_formula_uniform(translate_int(f, elementary=True), fam, budget=1)
        assert v.winnable is True, text


# ---------------------------------------------------------------------------
# Audit


def test_audit_line_pins():
    row = audit_line("a -> a", budgets=(0,))
    assert (row.provable, row.winnable, row.budget) == (True, True, 0)
    assert row.classification == "consistent"

    row = audit_line("((a -> b) -> a) -> a", budgets=(0,))
    assert (row.provable, row.winnable, row.budget) == (False, True, 0)
    assert row.classification == "separation-witness"

    row = audit_line("a \\/ ~a", budgets=(0, 1))
    assert (row.provable, row.winnable, row.budget) == (False, False, None)
    assert row.classification == "consistent"


def test_audit_line_inconclusive_on_limit():
    row = audit_line("a \\/ ~a", budgets=(0, 1), max_states=2)
    assert row.winnable is None
    assert row.classification == "inconclusive"


def test_render_audit_format():
    text = render_audit(audit(["a -> a", "a \\/ ~a"], budgets=(0,)))
    lines = text.splitlines()
    assert lines[0] == "formula\tprovable\twinnable\tbudget\tclassification"
    assert lines[1] == "a -> a\tyes\tyes\t0\tconsistent"
    assert lines[2].startswith("a \\/ ~a\tno\t")


def test_audit_of_shipped_corpus_has_no_anomalies():
    rows = audit(corpus_lines()[:12], budgets=(0, 1))
    assert all(r.classification != "ANOMALY" for r in rows)

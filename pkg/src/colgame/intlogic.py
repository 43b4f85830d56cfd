"""Intuitionistic propositional fragment and its audit against the solver.

parse_int reads the corpus sub-grammar (~ /\\ \\/ -> F over lowercase
atoms), int_prove decides provability with a contraction-free sequent
calculus, kripke_countermodel searches all rooted Kripke models with at
most three worlds, translate_int maps formulas into the game language
(-> as brimplication, /\\ \\/ as choice connectives, ~ as brefutation),
and audit() cross-checks provability against uniform winnability over
the family of all truth assignments.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .errors import LimitExceededError, ParseError
from .formula import (
    BOT,
    Brefute,
    Brimpl,
    ChoAnd,
    ChoOr,
    Elem,
    Formula,
    Gen,
)
from .semantics import Interpretation, solve_formula_uniform


# ---------------------------------------------------------------------------
# Formulas of the intuitionistic sub-grammar


class IntFormula:
    __slots__ = ()

    def __str__(self) -> str:
        return print_int(self)


@dataclass(frozen=True)
class IAtom(IntFormula):
    __slots__ = ("name",)
    name: str


@dataclass(frozen=True)
class IBot(IntFormula):
    __slots__ = ()


@dataclass(frozen=True)
class IAnd(IntFormula):
    __slots__ = ("left", "right")
    left: IntFormula
    right: IntFormula


@dataclass(frozen=True)
class IOr(IntFormula):
    __slots__ = ("left", "right")
    left: IntFormula
    right: IntFormula


@dataclass(frozen=True)
class IImpl(IntFormula):
    __slots__ = ("left", "right")
    left: IntFormula
    right: IntFormula


@dataclass(frozen=True)
class INeg(IntFormula):
    __slots__ = ("body",)
    body: IntFormula


_IBOT = IBot()


def parse_int(text: str) -> IntFormula:
    """Parse one corpus line. Only ~ /\\ \\/ -> F ( ) and lowercase atoms."""
    tokens = _tokenize_int(text)
    pos = 0

    def peek() -> str:
        return tokens[pos][0]

    def take(expected: Optional[str] = None) -> tuple[str, int]:
        nonlocal pos
        kind, col = tokens[pos]
        if expected is not None and kind != expected:
            raise ParseError(f"expected {expected}, got {kind}", 1, col)
        pos += 1
        return kind, col

    def atom() -> IntFormula:
        kind, col = take()
        if kind == "(":
            f = impl()
            take(")")
            return f
        if kind == "F":
            return _IBOT
        if kind == "~":
            return INeg(atom())
        if kind.startswith("id:"):
            return IAtom(kind[3:])
        raise ParseError(f"unexpected {kind!r}", 1, col)

    def conj() -> IntFormula:
        f = atom()
        while peek() == "/\\":
            take()
            f = IAnd(f, atom())
        return f

    def disj() -> IntFormula:
        f = conj()
        while peek() == "\\/":
            take()
            f = IOr(f, conj())
        return f

    def impl() -> IntFormula:
        f = disj()
        if peek() == "->":
            take()
            return IImpl(f, impl())
        return f

    f = impl()
    if peek() != "eof":
        raise ParseError(f"trailing input at {peek()!r}", 1, tokens[pos][1])
    return f


def _tokenize_int(text: str) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c in " \t":
            i += 1
            continue
        if text.startswith("/\\", i) or text.startswith("\\/", i) or text.startswith("->", i):
            out.append((text[i : i + 2], i + 1))
            i += 2
            continue
        if c in "()~":
            out.append((c, i + 1))
            i += 1
            continue
        if c == "F":
            out.append(("F", i + 1))
            i += 1
            continue
        if c.isalpha() and c.islower():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("id:" + text[i:j], i + 1))
            i = j
            continue
        raise ParseError(
            f"unexpected character {c!r} in the intuitionistic sub-grammar", 1, i + 1
        )
    out.append(("eof", len(text) + 1))
    return out


def print_int(f: IntFormula) -> str:
    def render(g: IntFormula, ctx: int) -> str:
        # ctx: 0 impl, 1 disj, 2 conj, 3 atom
        if isinstance(g, IAtom):
            return g.name
        if isinstance(g, IBot):
            return "F"
        if isinstance(g, INeg):
            return "~" + render(g.body, 3)
        if isinstance(g, IAnd):
            s = f"{render(g.left, 2)} /\\ {render(g.right, 3)}"
            return f"({s})" if ctx > 2 else s
        if isinstance(g, IOr):
            s = f"{render(g.left, 1)} \\/ {render(g.right, 2)}"
            return f"({s})" if ctx > 1 else s
        if isinstance(g, IImpl):
            s = f"{render(g.left, 1)} -> {render(g.right, 0)}"
            return f"({s})" if ctx > 0 else s
        raise TypeError(g)

    return render(f, 0)


def int_atoms(f: IntFormula) -> list[str]:
    seen: set[str] = set()

    def walk(g: IntFormula) -> None:
        if isinstance(g, IAtom):
            seen.add(g.name)
        elif isinstance(g, INeg):
            walk(g.body)
        elif isinstance(g, (IAnd, IOr, IImpl)):
            walk(g.left)
            walk(g.right)

    walk(f)
    return sorted(seen)


# ---------------------------------------------------------------------------
# Provability: contraction-free sequent calculus (G4ip-style)
#
# Negation is expanded to ->F up front. Left rules on conjunctions,
# disjunctions, and non-implication antecedents of implications are
# invertible and applied to saturation; the only branching left is the
# right-disjunction split and the implication-antecedent-implication rule,
# whose premise weights strictly decrease, so no loop check is needed.


def _strip(f: IntFormula) -> IntFormula:
    if isinstance(f, INeg):
        return IImpl(_strip(f.body), _IBOT)
    if isinstance(f, IAnd):
        return IAnd(_strip(f.left), _strip(f.right))
    if isinstance(f, IOr):
        return IOr(_strip(f.left), _strip(f.right))
    if isinstance(f, IImpl):
        return IImpl(_strip(f.left), _strip(f.right))
    return f


def int_prove(f: IntFormula) -> bool:
    return _prove(frozenset(), _strip(f), {})


def _prove(ctx: frozenset, goal: IntFormula, memo: dict) -> bool:
    key = (ctx, goal)
    hit = memo.get(key)
    if hit is not None:
        return hit
    result = _prove_raw(ctx, goal, memo)
    memo[key] = result
    return result


def _prove_raw(ctx: frozenset, goal: IntFormula, memo: dict) -> bool:
    work = set(ctx)

    # saturate invertible left rules
    changed = True
    while changed:
        changed = False
        for a in list(work):
            if isinstance(a, IBot):
                return True
            if isinstance(a, IAnd):
                work.discard(a)
                work.add(a.left)
                work.add(a.right)
                changed = True
            elif isinstance(a, IOr):
                work.discard(a)
                base = frozenset(work)
                return _prove(base | {a.left}, goal, memo) and _prove(
                    base | {a.right}, goal, memo
                )
            elif isinstance(a, IImpl):
                p = a.left
                if isinstance(p, IBot):
                    work.discard(a)
                    changed = True
                elif isinstance(p, IAtom) and p in work:
                    work.discard(a)
                    work.add(a.right)
                    changed = True
                elif isinstance(p, IAnd):
                    work.discard(a)
                    work.add(IImpl(p.left, IImpl(p.right, a.right)))
                    changed = True
                elif isinstance(p, IOr):
                    work.discard(a)
                    work.add(IImpl(p.left, a.right))
                    work.add(IImpl(p.right, a.right))
                    changed = True

    if goal in work:
        return True

    # invertible right rules
    if isinstance(goal, IAnd):
        base = frozenset(work)
        return _prove(base, goal.left, memo) and _prove(base, goal.right, memo)
    if isinstance(goal, IImpl):
        return _prove(frozenset(work) | {goal.left}, goal.right, memo)

    base = frozenset(work)
    if isinstance(goal, IOr):
        if _prove(base, goal.left, memo) or _prove(base, goal.right, memo):
            return True

    # implication whose antecedent is itself an implication
    for a in work:
        if isinstance(a, IImpl) and isinstance(a.left, IImpl):
            rest = base - {a}
            inner = a.left
            if _prove(rest | {IImpl(inner.right, a.right)}, inner, memo) and _prove(
                rest | {a.right}, goal, memo
            ):
                return True
    return False


# ---------------------------------------------------------------------------
# Kripke countermodels over rooted partial orders with at most three worlds

# frames as (name, per-world upward cones); world 0 is the root
_FRAMES: list[tuple[str, tuple[tuple[int, ...], ...]]] = [
    ("point", ((0,),)),
    ("chain2", ((0, 1), (1,))),
    ("chain3", ((0, 1, 2), (1, 2), (2,))),
    ("vee", ((0, 1, 2), (1,), (2,))),
]


def _upsets(cones: tuple[tuple[int, ...], ...]) -> list[frozenset[int]]:
    worlds = range(len(cones))
    out = []
    for bits in product((False, True), repeat=len(cones)):
        s = frozenset(w for w in worlds if bits[w])
        if all(set(cones[w]) <= s for w in s):
            out.append(s)
    return out


def _forces(f: IntFormula, w: int, cones, val) -> bool:
    if isinstance(f, IAtom):
        return w in val[f.name]
    if isinstance(f, IBot):
        return False
    if isinstance(f, IAnd):
        return _forces(f.left, w, cones, val) and _forces(f.right, w, cones, val)
    if isinstance(f, IOr):
        return _forces(f.left, w, cones, val) or _forces(f.right, w, cones, val)
    if isinstance(f, IImpl):
        return all(
            not _forces(f.left, v, cones, val) or _forces(f.right, v, cones, val)
            for v in cones[w]
        )
    if isinstance(f, INeg):
        return all(not _forces(f.body, v, cones, val) for v in cones[w])
    raise TypeError(f)


def kripke_countermodel(
    f: IntFormula,
) -> Optional[tuple[str, dict[str, frozenset[int]]]]:
    """Search every rooted model with <= 3 worlds for one refuting f."""
    atoms = int_atoms(f)
    for name, cones in _FRAMES:
        for assignment in product(_upsets(cones), repeat=len(atoms)):
            val = dict(zip(atoms, assignment))
            if not _forces(f, 0, cones, val):
                return name, val
    return None


# ---------------------------------------------------------------------------
# Translation into the game language


def translate_int(f: IntFormula, elementary: bool = False) -> Formula:
    """Map the intuitionistic connectives onto their game-language readings.

    Atoms become general (uppercase) atoms unless elementary=True keeps them
    as elementary ones, which is what the truth-assignment audit needs.
    """
    if isinstance(f, IAtom):
        return Elem(f.name) if elementary else Gen(f.name.upper())
    if isinstance(f, IBot):
        return BOT
    if isinstance(f, IAnd):
        return ChoAnd(translate_int(f.left, elementary), translate_int(f.right, elementary))
    if isinstance(f, IOr):
        return ChoOr(translate_int(f.left, elementary), translate_int(f.right, elementary))
    if isinstance(f, IImpl):
        return Brimpl(translate_int(f.left, elementary), translate_int(f.right, elementary))
    if isinstance(f, INeg):
        return Brefute(translate_int(f.body, elementary))
    raise TypeError(f)


def assignment_family(atoms: list[str]) -> list[Interpretation]:
    """All 2^k truth assignments to the atoms, as 1-element interpretations."""
    fam = []
    for bits in product((False, True), repeat=len(atoms)):
        fam.append(
            Interpretation(
                universe=1,
                predicates={(name, 0): (value,) for name, value in zip(atoms, bits)},
            )
        )
    return fam


# ---------------------------------------------------------------------------
# The audit


@dataclass
class AuditRow:
    formula: str
    provable: bool
    winnable: Optional[bool]  # None = could not be decided within limits
    budget: Optional[int]  # smallest winning budget, if any
    classification: str  # consistent | separation-witness | ANOMALY | inconclusive


def audit_line(
    text: str,
    budgets: tuple[int, ...] = (0, 1, 2),
    max_states: Optional[int] = None,
) -> AuditRow:
    f = parse_int(text)
    provable = int_prove(f)
    col = translate_int(f, elementary=True)
    family = assignment_family(int_atoms(f))

    winnable: Optional[bool] = None
    won_at: Optional[int] = None
    limit_hit = False
    for b in sorted(budgets):
        try:
            verdict = solve_formula_uniform(col, family, budget=b, max_states=max_states)
        except LimitExceededError:
            limit_hit = True
            continue
        if verdict.winnable:
            winnable = True
            won_at = b
            break
        winnable = False if winnable is None else winnable

    if won_at is not None:
        classification = "consistent" if provable else "separation-witness"
        winnable = True
    elif limit_hit:
        classification = "inconclusive"
        winnable = None
    else:
        classification = "ANOMALY" if provable else "consistent"
        winnable = False

    return AuditRow(print_int(f), provable, winnable, won_at, classification)


def audit(
    lines: list[str],
    budgets: tuple[int, ...] = (0, 1, 2),
    max_states: Optional[int] = None,
) -> list[AuditRow]:
    return [audit_line(line, budgets, max_states) for line in lines]


def render_audit(rows: list[AuditRow]) -> str:
    """Tab-delimited audit report, one row per corpus formula."""
    out = ["formula\tprovable\twinnable\tbudget\tclassification"]
    for r in rows:
        w = "unknown" if r.winnable is None else ("yes" if r.winnable else "no")
        b = "-" if r.budget is None else str(r.budget)
        out.append(f"{r.formula}\t{'yes' if r.provable else 'no'}\t{w}\t{b}\t{r.classification}")
    return "\n".join(out)

"""Formula syntax: terms, formula AST, parser, canonical printer, substitution.

The concrete grammar is ASCII. Operator spellings, tight to loose:

    unary   ~  $  @  o~
    level 3 /\  &
    level 2 \/  |
    level 1 ->  o->        (right associative)

Quantifier bodies (``all x .``, ``ex x .``, ``chall x .``, ``chex x .``)
extend maximally to the right. Parentheses override. Lowercase atom names
are elementary, uppercase are general; ``T`` and ``F`` are the constant
games. Equality between terms is built in (``y = succ(x)``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import ParseError


# ---------------------------------------------------------------------------
# Terms


class Term:
    """Base class for individual-level terms."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Num(Term):
    value: int


@dataclass(frozen=True)
class App(Term):
    fn: str
    args: tuple[Term, ...]


# ---------------------------------------------------------------------------
# Formulas


class Formula:
    """Base class for formula AST nodes."""

    __slots__ = ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Elem(Formula):
    """Elementary atom: a predicate-table lookup, no moves of its own."""

    name: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Gen(Formula):
    """General atom: interpreted by an arbitrary game tree."""

    name: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula


@dataclass(frozen=True)
class ParAnd(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ParOr(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ParImpl(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ChoAnd(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ChoOr(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class BlindAll(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class BlindEx(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class ChoAll(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class ChoEx(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Brec(Formula):
    body: Formula


@dataclass(frozen=True)
class Corec(Formula):
    body: Formula


@dataclass(frozen=True)
class Brimpl(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Brefute(Formula):
    body: Formula


TOP = Top()
BOT = Bot()

_QUANT_BY_KW = {"all": BlindAll, "ex": BlindEx, "chall": ChoAll, "chex": ChoEx}
_KEYWORDS = frozenset(_QUANT_BY_KW)


# ---------------------------------------------------------------------------
# Tokenizer

_TOKEN_RE = re.compile(
    r"(?P<OP>o->|o~|/\\|\\/|->|[~&|$@=(),.])"
    r"|(?P<NUM>\d+)"
    r"|(?P<NAME>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<WS>[ \t\r]+)"
    r"|(?P<NL>\n)"
)


@dataclass(frozen=True)
class Token:
    kind: str  # OP, NUM, NAME, EOF
    text: str
    line: int
    column: int


def _tokenize(text: str) -> Iterator[Token]:
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "NL":
            line += 1
            line_start = m.end()
        elif kind != "WS":
            yield Token(kind, m.group(), line, m.start() - line_start + 1)
        pos = m.end()
    yield Token("EOF", "", line, len(text) - line_start + 1)


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Optional[Token] = None) -> ParseError:
        tok = tok or self.cur
        return ParseError(message, tok.line, tok.column)

    def expect_op(self, text: str) -> Token:
        if self.cur.kind == "OP" and self.cur.text == text:
            return self.advance()
        raise self.error(f"expected {text!r}, found {self.cur.text or 'end of input'!r}")

    def at_op(self, *texts: str) -> bool:
        return self.cur.kind == "OP" and self.cur.text in texts

    # formula := impl-level; quantifier bodies re-enter here
    def parse_formula(self, scope: frozenset[str]) -> Formula:
        return self.parse_impl(scope)

    def parse_impl(self, scope: frozenset[str]) -> Formula:
        left = self.parse_or(scope)
        if self.at_op("->"):
            self.advance()
            return ParImpl(left, self.parse_impl(scope))
        if self.at_op("o->"):
            self.advance()
            return Brimpl(left, self.parse_impl(scope))
        return left

    def parse_or(self, scope: frozenset[str]) -> Formula:
        left = self.parse_and(scope)
        while self.at_op("\\/", "|"):
            op = self.advance().text
            right = self.parse_and(scope)
            left = ParOr(left, right) if op == "\\/" else ChoOr(left, right)
        return left

    def parse_and(self, scope: frozenset[str]) -> Formula:
        left = self.parse_unary(scope)
        while self.at_op("/\\", "&"):
            op = self.advance().text
            right = self.parse_unary(scope)
            left = ParAnd(left, right) if op == "/\\" else ChoAnd(left, right)
        return left

    def parse_unary(self, scope: frozenset[str]) -> Formula:
        if self.at_op("~"):
            self.advance()
            return Neg(self.parse_unary(scope))
        if self.at_op("o~"):
            self.advance()
            return Brefute(self.parse_unary(scope))
        if self.at_op("$"):
            self.advance()
            return Brec(self.parse_unary(scope))
        if self.at_op("@"):
            self.advance()
            return Corec(self.parse_unary(scope))
        if self.cur.kind == "NAME" and self.cur.text in _KEYWORDS:
            return self.parse_quantifier(scope)
        return self.parse_primary(scope)

    def parse_quantifier(self, scope: frozenset[str]) -> Formula:
        kw = self.advance()
        node = _QUANT_BY_KW[kw.text]
        name_tok = self.cur
        if name_tok.kind != "NAME":
            raise self.error(f"expected a variable after {kw.text!r}")
        if not name_tok.text[0].islower():
            raise self.error(f"case violation: cannot quantify uppercase name {name_tok.text!r}")
        if name_tok.text in _KEYWORDS:
            raise self.error(f"{name_tok.text!r} is a reserved word")
        if name_tok.text in scope:
            raise self.error(f"variable {name_tok.text!r} is already bound by an enclosing quantifier")
        self.advance()
        self.expect_op(".")
        body = self.parse_formula(scope | {name_tok.text})
        return node(name_tok.text, body)

    def parse_primary(self, scope: frozenset[str]) -> Formula:
        tok = self.cur
        if self.at_op("("):
            self.advance()
            inner = self.parse_formula(scope)
            self.expect_op(")")
            return inner
        if tok.kind == "NUM":
            left = Num(int(self.advance().text))
            self.expect_op("=")
            return Eq(left, self.parse_term(scope))
        if tok.kind == "NAME":
            if tok.text in _KEYWORDS:
                raise self.error(f"{tok.text!r} is a reserved word")
            if tok.text[0].isupper():
                return self.parse_uppercase(scope)
            return self.parse_lowercase(scope)
        raise self.error(f"expected a formula, found {tok.text or 'end of input'!r}")

    def parse_uppercase(self, scope: frozenset[str]) -> Formula:
        tok = self.advance()
        if tok.text == "T":
            return TOP
        if tok.text == "F":
            return BOT
        args: tuple[Term, ...] = ()
        if self.at_op("("):
            args = self.parse_args(scope)
        if self.at_op("="):
            raise self.error(f"case violation: uppercase name {tok.text!r} used as a term", tok)
        return Gen(tok.text, args)

    def parse_lowercase(self, scope: frozenset[str]) -> Formula:
        tok = self.advance()
        args: Optional[tuple[Term, ...]] = None
        if self.at_op("("):
            args = self.parse_args(scope)
        if self.at_op("="):
            self.advance()
            if args is None:
                if tok.text not in scope:
                    raise self.error(f"unbound variable {tok.text!r}", tok)
                left: Term = Var(tok.text)
            else:
                left = App(tok.text, args)
            return Eq(left, self.parse_term(scope))
        if args is None and tok.text in scope:
            raise self.error(f"variable {tok.text!r} used as an atom", tok)
        return Elem(tok.text, args or ())

    def parse_args(self, scope: frozenset[str]) -> tuple[Term, ...]:
        self.expect_op("(")
        args = [self.parse_term(scope)]
        while self.at_op(","):
            self.advance()
            args.append(self.parse_term(scope))
        self.expect_op(")")
        return tuple(args)

    def parse_term(self, scope: frozenset[str]) -> Term:
        tok = self.cur
        if tok.kind == "NUM":
            self.advance()
            return Num(int(tok.text))
        if tok.kind == "NAME":
            if tok.text in _KEYWORDS:
                raise self.error(f"{tok.text!r} is a reserved word")
            if tok.text[0].isupper():
                raise self.error(f"case violation: uppercase name {tok.text!r} in term position")
            self.advance()
            if self.at_op("("):
                return App(tok.text, self.parse_args(scope))
            if tok.text not in scope:
                raise self.error(f"unbound variable {tok.text!r}", tok)
            return Var(tok.text)
        raise self.error(f"expected a term, found {tok.text or 'end of input'!r}")


def parse(text: str) -> Formula:
    """Parse formula text, enforcing closedness and the case discipline."""
    p = _Parser(text)
    f = p.parse_formula(frozenset())
    if p.cur.kind != "EOF":
        raise p.error(f"unexpected trailing input {p.cur.text!r}")
    return f


# ---------------------------------------------------------------------------
# Printer

# Precedence levels used for minimal parenthesization. Quantifiers print at
# level 0 so they are parenthesized inside any operator context, matching the
# maximal-right-extension parse rule.
_PREC_IMPL, _PREC_OR, _PREC_AND, _PREC_UNARY, _PREC_ATOM = 1, 2, 3, 4, 5


def print_term(t: Term) -> str:
    match t:
        case Var(name):
            return name
        case Num(value):
            return str(value)
        case App(fn, args):
            return f"{fn}({','.join(print_term(a) for a in args)})"
    raise TypeError(f"not a term: {t!r}")


def _render(f: Formula, ctx: int) -> str:
    def wrap(s: str, prec: int) -> str:
        return f"({s})" if prec < ctx else s

    match f:
        case Elem(name, args) | Gen(name, args):
            return name if not args else f"{name}({','.join(print_term(a) for a in args)})"
        case Eq(left, right):
            return f"{print_term(left)} = {print_term(right)}"
        case Top():
            return "T"
        case Bot():
            return "F"
        case Neg(body):
            return wrap("~" + _render(body, _PREC_UNARY), _PREC_UNARY)
        case Brefute(body):
            return wrap("o~" + _render(body, _PREC_UNARY), _PREC_UNARY)
        case Brec(body):
            return wrap("$" + _render(body, _PREC_UNARY), _PREC_UNARY)
        case Corec(body):
            return wrap("@" + _render(body, _PREC_UNARY), _PREC_UNARY)
        case ParAnd(a, b):
            return wrap(f"{_render(a, _PREC_AND)} /\\ {_render(b, _PREC_AND + 1)}", _PREC_AND)
        case ChoAnd(a, b):
            return wrap(f"{_render(a, _PREC_AND)} & {_render(b, _PREC_AND + 1)}", _PREC_AND)
        case ParOr(a, b):
            return wrap(f"{_render(a, _PREC_OR)} \\/ {_render(b, _PREC_OR + 1)}", _PREC_OR)
        case ChoOr(a, b):
            return wrap(f"{_render(a, _PREC_OR)} | {_render(b, _PREC_OR + 1)}", _PREC_OR)
        case ParImpl(a, b):
            return wrap(f"{_render(a, _PREC_IMPL + 1)} -> {_render(b, _PREC_IMPL)}", _PREC_IMPL)
        case Brimpl(a, b):
            return wrap(f"{_render(a, _PREC_IMPL + 1)} o-> {_render(b, _PREC_IMPL)}", _PREC_IMPL)
        case BlindAll(v, b):
            return wrap(f"all {v} . {_render(b, 0)}", 0)
        case BlindEx(v, b):
            return wrap(f"ex {v} . {_render(b, 0)}", 0)
        case ChoAll(v, b):
            return wrap(f"chall {v} . {_render(b, 0)}", 0)
        case ChoEx(v, b):
            return wrap(f"chex {v} . {_render(b, 0)}", 0)
    raise TypeError(f"not a formula: {f!r}")


def print_formula(f: Formula) -> str:
    """Render a formula in canonical concrete syntax (parse . print == id)."""
    return _render(f, 0)


# ---------------------------------------------------------------------------
# Substitution and inspection helpers


def _subst_term(t: Term, var: str, value: int) -> Term:
    match t:
        case Var(name):
            return Num(value) if name == var else t
        case Num(_):
            return t
        case App(fn, args):
            new_args = tuple(_subst_term(a, var, value) for a in args)
            return t if new_args == args else App(fn, new_args)
    raise TypeError(f"not a term: {t!r}")


def substitute(f: Formula, var: str, value: int, universe: Optional[int] = None) -> Formula:
    """Replace free occurrences of ``var`` by the numeral ``value``.

    Untouched subtrees are returned as the same objects. When ``universe``
    is given, the numeral must lie inside it.
    """
    if universe is not None and not 0 <= value < universe:
        raise ValueError(f"numeral {value} outside universe of size {universe}")

    def walk(g: Formula) -> Formula:
        match g:
            case Elem(name, args) | Gen(name, args):
                new_args = tuple(_subst_term(a, var, value) for a in args)
                if new_args == args:
                    return g
                return type(g)(name, new_args)
            case Eq(left, right):
                nl, nr = _subst_term(left, var, value), _subst_term(right, var, value)
                return g if (nl, nr) == (left, right) else Eq(nl, nr)
            case Top() | Bot():
                return g
            case Neg(b) | Brec(b) | Corec(b) | Brefute(b):
                nb = walk(b)
                return g if nb is b else type(g)(nb)
            case ParAnd(a, b) | ParOr(a, b) | ParImpl(a, b) | ChoAnd(a, b) | ChoOr(a, b) | Brimpl(a, b):
                na, nb = walk(a), walk(b)
                return g if (na is a and nb is b) else type(g)(na, nb)
            case BlindAll(v, b) | BlindEx(v, b) | ChoAll(v, b) | ChoEx(v, b):
                if v == var:
                    # cannot happen for parsed formulas (no shadowing); guard anyway
                    return g
                nb = walk(b)
                return g if nb is b else type(g)(v, nb)
        raise TypeError(f"not a formula: {g!r}")

    return walk(f)


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    match f:
        case Neg(b) | Brec(b) | Corec(b) | Brefute(b):
            yield from subformulas(b)
        case (ParAnd(a, b) | ParOr(a, b) | ParImpl(a, b) | ChoAnd(a, b)
              | ChoOr(a, b) | Brimpl(a, b)):
            yield from subformulas(a)
            yield from subformulas(b)
        case BlindAll(_, b) | BlindEx(_, b) | ChoAll(_, b) | ChoEx(_, b):
            yield from subformulas(b)
        case _:
            pass


def atom_signature(f: Formula) -> dict[tuple[str, int], str]:
    """Map (name, arity) of every atom to its sort, "elem" or "gen"."""
    sig: dict[tuple[str, int], str] = {}
    for g in subformulas(f):
        match g:
            case Elem(name, args):
                sig[(name, len(args))] = "elem"
            case Gen(name, args):
                sig[(name, len(args))] = "gen"
            case _:
                pass
    return sig


def has_general_atoms(f: Formula) -> bool:
    return any(sort == "gen" for sort in atom_signature(f).values())

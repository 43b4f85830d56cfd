"""Command-line entry point.

Subcommands: parse | solve | uniform | verify | translate | audit | play | serve.
Exit codes: 0 success, 1 usage or input error, 2 state-limit exceeded,
3 false verdict (not winnable under --expect-winnable, failed verify,
audit anomaly).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .errors import ColError, LimitExceededError
from .fixtures import corpus_lines, load_interp, make_fixture_game
from .formula import parse, print_formula
from .game import Game
from .intlogic import audit, parse_int, print_int, render_audit, translate_int
from .semantics import build, load_interpretation, solve_formula_uniform
from .session import create_session
from .solver import DEFAULT_MAX_STATES, solve, verify_strategy
from .strategies import make_strategy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LIMIT = 2
EXIT_FALSE = 3


def _read_formula(args: argparse.Namespace) -> str:
    if getattr(args, "formula", None) and getattr(args, "file", None):
        raise ColError("--formula and --file are mutually exclusive")
    if getattr(args, "formula", None):
        return args.formula
    if getattr(args, "file", None):
        with open(args.file) as fh:
            return fh.read().strip()
    raise ColError("one of --formula or --file is required")


def _load_interp_arg(path: Optional[str]):
    if path is None:
        return load_interpretation({"universe": 1})
    if os.path.exists(path):
        with open(path) as fh:
            return load_interpretation(json.load(fh))
    name = path[: -len(".json")] if path.endswith(".json") else path
    try:
        return load_interp(name)  # bundled interpretations by bare name
    except FileNotFoundError:
        raise ColError(f"{path!r} is neither a file nor a bundled interpretation")


def _game_from_args(args: argparse.Namespace) -> tuple[Game, Optional[str]]:
    """Game plus the fixture's default strategy name, if a fixture was used."""
    if getattr(args, "fixture", None):
        game, spec = make_fixture_game(args.fixture)
        return game, spec.default_strategy
    formula = parse(_read_formula(args))
    interp = _load_interp_arg(getattr(args, "interp", None))
    return build(formula, interp, budget=args.budget), None


def _emit(args: argparse.Namespace, data: dict, text: str) -> None:
    print(json.dumps(data, indent=2) if args.json else text)


def cmd_parse(args: argparse.Namespace) -> int:
    f = parse(_read_formula(args))
    _emit(args, {"ok": True, "rendered": print_formula(f)}, print_formula(f))
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    game, _ = _game_from_args(args)
    verdict = solve(game, max_states=args.max_states, want_strategy=True, budget=args.budget)
    _emit(
        args,
        verdict.to_data(),
        f"winnable: {str(verdict.winnable).lower()} "
        f"(mode {verdict.mode}, states {verdict.states_explored}, budget {args.budget})",
    )
    if args.expect_winnable and not verdict.winnable:
        return EXIT_FALSE
    return EXIT_OK


def cmd_uniform(args: argparse.Namespace) -> int:
    if not args.family:
        raise ColError("--family <path,...> is required for uniform")
    formula = parse(_read_formula(args))
    interps = [_load_interp_arg(p.strip()) for p in args.family.split(",") if p.strip()]
    verdict = solve_formula_uniform(
        formula, interps, budget=args.budget, max_states=args.max_states, want_strategy=True
    )
    _emit(
        args,
        verdict.to_data(),
        f"winnable: {str(verdict.winnable).lower()} "
        f"(mode {verdict.mode}, members {len(interps)}, states {verdict.states_explored})",
    )
    if args.expect_winnable and not verdict.winnable:
        return EXIT_FALSE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    game, default = _game_from_args(args)
    name = args.strategy or default
    if not name:
        raise ColError("--strategy <name> is required (no fixture default applies)")
    strategy = make_strategy(name, game)
    result = verify_strategy(game, strategy, max_nodes=args.max_states)
    _emit(
        args,
        {"holds": result.ok, "nodes": result.nodes, "reason": result.reason},
        f"{'holds' if result.ok else 'fails'} ({result.nodes} nodes"
        + (f"; {result.reason}" if result.reason else "")
        + ")",
    )
    return EXIT_OK if result.ok else EXIT_FALSE


def cmd_translate(args: argparse.Namespace) -> int:
    f = parse_int(_read_formula(args))
    out = print_formula(translate_int(f, elementary=args.elementary))
    _emit(args, {"input": print_int(f), "translated": out}, out)
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    if getattr(args, "file", None):
        with open(args.file) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.strip().startswith("#")]
    elif getattr(args, "formula", None):
        lines = [args.formula]
    else:
        lines = corpus_lines()
    budgets = tuple(range(args.budget + 1))
    rows = audit(lines, budgets=budgets, max_states=args.max_states)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "formula": r.formula,
                        "provable": r.provable,
                        "winnable": r.winnable,
                        "budget": r.budget,
                        "classification": r.classification,
                    }
                    for r in rows
                ],
                indent=2,
            )
        )
    else:
        print(render_audit(rows))
    return EXIT_FALSE if any(r.classification == "ANOMALY" for r in rows) else EXIT_OK


def cmd_play(args: argparse.Namespace) -> int:
    request: dict = {"budget": args.budget}
    if args.fixture:
        request["fixture"] = args.fixture
    else:
        request["formula"] = _read_formula(args)
        if args.interp:
            with open(args.interp) as fh:
                request["interp"] = json.load(fh)
    if args.strategy:
        request["strategy"] = args.strategy
    session = create_session(request)

    def show() -> None:
        p = session.payload()
        if args.json:
            print(json.dumps(p))
        else:
            print(f"position: {p['stateLabel'] or '(start)'}")
            print(f"stop would award: {p['stopWinnerNow']}")
            if p["status"] == "open":
                print(f"your moves: {', '.join(p['legalHumanMoves']) or '(none; stop or wait)'}")
            else:
                print(f"finished: {p['winner']} wins")

    show()
    for line in sys.stdin:
        cmd = line.strip()
        if not cmd or session.status != "open":
            break
        try:
            if cmd == "stop":
                session.step(stop=True)
            else:
                session.step(label=cmd)
        except ColError as exc:
            print(f"error: {exc}", file=sys.stderr)
        show()
        if session.status != "open":
            break
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from .server import run

    run(port=args.port, persist=args.persist)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="col", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, formula: bool = True) -> None:
        if formula:
            p.add_argument("--formula", help="formula text")
            p.add_argument("--file", help="read the formula from a file")
        p.add_argument("--budget", type=int, default=1, help="recurrence split budget")
        p.add_argument(
            "--max-states", type=int, default=DEFAULT_MAX_STATES, help="state cap"
        )
        p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("parse", help="parse and re-render a formula")
    common(p)
    p.set_defaults(fn=cmd_parse)

    p = sub.add_parser("solve", help="decide machine winnability")
    common(p)
    p.add_argument("--interp", help="interpretation JSON path (or bundled name)")
    p.add_argument("--fixture", help="solve a bundled fixture instead")
    p.add_argument("--expect-winnable", action="store_true", help="exit 3 if not winnable")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("uniform", help="uniform winnability over a family")
    common(p)
    p.add_argument("--family", help="comma-separated interpretation paths")
    p.add_argument("--expect-winnable", action="store_true")
    p.set_defaults(fn=cmd_uniform)

    p = sub.add_parser("verify", help="exhaustively verify a named strategy")
    common(p)
    p.add_argument("--interp", help="interpretation JSON path")
    p.add_argument("--fixture", help="bundled fixture name")
    p.add_argument("--strategy", help="strategy name (copycat, fig1, grandmother)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("translate", help="intuitionistic formula into the game language")
    common(p)
    p.add_argument("--elementary", action="store_true", help="keep atoms elementary")
    p.set_defaults(fn=cmd_translate)

    p = sub.add_parser("audit", help="provability vs uniform winnability report")
    common(p)
    # audit probes budgets 0..k; the corpus needs k=2 to settle every row
    p.set_defaults(fn=cmd_audit, budget=2)

    p = sub.add_parser("play", help="interactive terminal session (env = you)")
    common(p)
    p.add_argument("--interp", help="interpretation JSON path")
    p.add_argument("--fixture", help="bundled fixture name")
    p.add_argument("--strategy", help="force a named machine strategy")
    p.set_defaults(fn=cmd_play)

    p = sub.add_parser("serve", help="run the HTTP session API")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--persist", help="session journal path")
    p.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(fn=cmd_serve)

    return top


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except LimitExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ColError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Game-semantics engine for a computability-logic fragment.

Formulas compile to finite games against an adversarial environment;
winnability, uniform winnability over interpretation families, strategy
extraction/verification, and an intuitionistic-logic audit sit on top.
"""

from .errors import (
    BuildError,
    ColError,
    IllegalMoveError,
    IllegalStrategyMoveError,
    InterpretationError,
    LimitExceededError,
    NonDelayTolerantError,
    ParseError,
    StrategyShapeError,
    TreeFormatError,
)
from .formula import Formula, parse, print_formula, substitute
from .game import (
    ENVIRONMENT,
    MACHINE,
    Game,
    GameTree,
    Player,
    Transcript,
    TreeGame,
    export_tree,
    first_divergence,
    games_equal,
    play_run,
    reachable_states,
    tree_to_data,
    validate_tree,
)
from .corpus import (
    GeneratedCase,
    copycat_bodies,
    demorgan_pairs,
    identity_games,
    int_formulas,
    monotonicity_cases,
    oracle_cases,
)
from .semantics import (
    Interpretation,
    UniformGame,
    build,
    build_uniform,
    family_lockstep,
    interpretation_to_data,
    load_interpretation,
    solve_formula_uniform,
)
from .solver import (
    DEFAULT_MAX_STATES,
    EnvironmentBehavior,
    RandomBehavior,
    ScriptBehavior,
    StateStrategy,
    Strategy,
    Verdict,
    VerifyResult,
    simulate,
    solve,
    solve_oracle,
    solve_uniform,
    verify_strategy,
)
from .strategies import BUILDERS, copycat, fig1_strategy, grandmother_strategy, make_strategy
from .fixtures import FIXTURES, corpus_lines, fixture_names, load_interp, load_tree, make_fixture_game
from .intlogic import (
    AuditRow,
    IntFormula,
    assignment_family,
    audit,
    audit_line,
    int_prove,
    kripke_countermodel,
    parse_int,
    print_int,
    render_audit,
    translate_int,
)
from .session import BestEffortStrategy, Session, create_session, game_structure
from .server import create_app

__version__ = "0.1.0"

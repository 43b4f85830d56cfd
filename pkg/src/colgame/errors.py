"""Error taxonomy shared across the engine."""

from __future__ import annotations


class ColError(Exception):
    """Base class for all engine errors."""


class ParseError(ColError):
    """Syntax, binding, or case-discipline violation in formula text."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class TreeFormatError(ColError):
    """Malformed game-tree description."""


class InterpretationError(ColError):
    """Malformed or inconsistent interpretation data."""


class BuildError(ColError):
    """Formula cannot be realized as a game under the given interpretation."""


class IllegalMoveError(ColError):
    """A move was not legal for its mover at the state where it was played."""


class IllegalStrategyMoveError(ColError):
    """A strategy returned a move that is not legal at the consulted state."""


class StrategyShapeError(ColError):
    """A scripted strategy was applied to a game of the wrong shape."""


class LimitExceededError(ColError):
    """State or enumeration budget exhausted before a verdict was reached.

    Deliberately distinct from a false verdict: callers must never conflate
    "not winnable" with "ran out of budget".
    """

    def __init__(self, message: str, states_explored: int = 0):
        super().__init__(message)
        self.states_explored = states_explored


class NonDelayTolerantError(ColError):
    """An explicit tree failed the empirical delay-tolerance spot check."""

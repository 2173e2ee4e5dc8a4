"""Exception hierarchy shared across the package."""

from __future__ import annotations


class FlexSkylineError(Exception):
    """Base class for all library errors."""


class ArityError(FlexSkylineError):
    """Dimension mismatch between vectors, tuples, or constraint rows."""


class ValidationError(FlexSkylineError):
    """Input violates a structural invariant (monotonicity guard, empty polytope, bad k, ...)."""


class ConfigurationError(FlexSkylineError):
    """Incompatible combination of options, e.g. an LP back end on a finite family."""


class ParseError(FlexSkylineError):
    """Malformed external input (CSV cell, schema JSON, constraint or family JSON)."""

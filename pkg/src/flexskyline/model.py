"""Relational data model and monotone scoring functions.

Everything here is an immutable value object: relations, tuples, and
scoring functions can be shared freely across threads. The canonical
attribute direction is lower-is-better; raw data in maximize form is
flipped during normalization (see :mod:`flexskyline.data_io`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import ArityError, ValidationError


class Direction(str, Enum):
    """Polarity of a raw attribute: is smaller or larger preferable?"""

    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class AttributeSpec:
    name: str
    direction: Direction = Direction.MIN

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("attribute name must be nonempty")


@dataclass(frozen=True)
class Schema:
    """Ordered attribute list; arity is the number of attributes."""

    attributes: tuple[AttributeSpec, ...]

    def __post_init__(self) -> None:
        if len(self.attributes) < 1:
            raise ValidationError("schema needs at least one attribute")
        names = [a.name for a in self.attributes]
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate attribute names in schema: {names}")

    @property
    def d(self) -> int:
        return len(self.attributes)

    @property
    def names(self) -> list[str]:
        return [a.name for a in self.attributes]

    @property
    def directions(self) -> list[Direction]:
        return [a.direction for a in self.attributes]


@dataclass(frozen=True)
class Tuple:
    """One record: canonical (lower-is-better) values plus the values as ingested.

    ``id`` is the ingestion ordinal and doubles as the deterministic
    tie-breaker everywhere ranking semantics would otherwise be ambiguous.
    Canonical values are non-negative; relations built by the ingestion
    pipeline additionally live in [0, 1].
    """

    id: int
    values: tuple[float, ...]
    raw_values: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.id < 0:
            raise ValidationError(f"tuple id must be non-negative, got {self.id}")
        if len(self.values) != len(self.raw_values):
            raise ArityError(
                f"tuple {self.id}: {len(self.values)} values vs "
                f"{len(self.raw_values)} raw values"
            )
        if any(v < 0.0 for v in self.values):
            raise ValidationError(f"tuple {self.id}: canonical values must be >= 0")

    @property
    def arity(self) -> int:
        return len(self.values)


def make_tuple(id: int, values: Sequence[float]) -> Tuple:
    """Build a tuple whose canonical and raw values coincide (test/desk helper)."""
    vals = tuple(float(v) for v in values)
    return Tuple(id=id, values=vals, raw_values=vals)


@dataclass(frozen=True)
class Relation:
    """An instance: schema plus tuples with ids equal to their position."""

    schema: Schema
    tuples: tuple[Tuple, ...]

    def __post_init__(self) -> None:
        d = self.schema.d
        for pos, t in enumerate(self.tuples):
            if t.id != pos:
                raise ValidationError(f"tuple at position {pos} has id {t.id}")
            if t.arity != d:
                raise ArityError(f"tuple {t.id} has arity {t.arity}, schema has {d}")

    @property
    def size(self) -> int:
        return len(self.tuples)

    def __len__(self) -> int:
        return len(self.tuples)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Canonical values as an (N, d) float array (row i is tuple i)."""
        if not self.tuples:
            return np.empty((0, self.schema.d))
        m = np.array([t.values for t in self.tuples], dtype=float)
        m.setflags(write=False)
        return m

    @cached_property
    def raw_matrix(self) -> np.ndarray:
        """Raw values as ingested, same layout as :attr:`matrix`."""
        if not self.tuples:
            return np.empty((0, self.schema.d))
        m = np.array([t.raw_values for t in self.tuples], dtype=float)
        m.setflags(write=False)
        return m


class ScoreTerm(NamedTuple):
    attr: int
    coeff: float
    exp: float


@dataclass(frozen=True)
class ScoringFunction:
    """Sum of power terms ``coeff * x[attr] ** exp``.

    Coefficients are non-negative and exponents at least 1, which makes the
    function monotone non-decreasing on the non-negative orthant; with
    canonical lower-is-better values, a smaller score always means a better
    tuple. The all-exponent-one case is the linear (weighted sum) family.
    """

    terms: tuple[ScoreTerm, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValidationError("scoring function needs at least one term")
        for t in self.terms:
            if t.attr < 0:
                raise ValidationError(f"negative attribute index {t.attr}")
            if t.coeff < 0.0:
                raise ValidationError(f"negative coefficient {t.coeff} breaks monotonicity")
            if t.exp < 1.0:
                raise ValidationError(f"exponent {t.exp} < 1 breaks the function class")
        if not any(t.coeff > 0.0 for t in self.terms):
            raise ValidationError("scoring function needs a positive coefficient")

    @classmethod
    def from_weights(cls, weights: Sequence[float]) -> "ScoringFunction":
        """Linear function with the given weight vector."""
        return cls(terms=tuple(ScoreTerm(i, float(w), 1.0) for i, w in enumerate(weights)))

    @property
    def is_linear(self) -> bool:
        return all(t.exp == 1.0 for t in self.terms)

    @property
    def max_attr(self) -> int:
        return max(t.attr for t in self.terms)

    def coefficients(self, d: int) -> np.ndarray:
        """Dense weight vector of a linear function, length ``d``."""
        if not self.is_linear:
            raise ValidationError("coefficients() requires a linear function")
        if self.max_attr >= d:
            raise ArityError(f"term index {self.max_attr} out of range for d={d}")
        w = np.zeros(d)
        for t in self.terms:
            w[t.attr] += t.coeff
        return w


@dataclass(frozen=True)
class FiniteFamily:
    """Explicitly enumerated set of scoring functions."""

    members: tuple[ScoringFunction, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValidationError("finite family needs at least one member")


@dataclass(frozen=True)
class LinearFamily:
    """All weighted sums whose weight vector lies in a weight polytope."""

    polytope: "WeightPolytope"  # defined in flexskyline.polytope


FunctionFamily = Union[FiniteFamily, LinearFamily]


def evaluate(f: ScoringFunction, t: Tuple) -> float:
    """Score of tuple ``t`` under ``f`` (canonical space, lower is better)."""
    if f.max_attr >= t.arity:
        raise ArityError(
            f"function references attribute {f.max_attr}, tuple has arity {t.arity}"
        )
    return float(sum(c * t.values[a] ** e for a, c, e in f.terms))


def evaluate_matrix(f: ScoringFunction, values: np.ndarray) -> np.ndarray:
    """Vectorized :func:`evaluate` over the rows of an (N, d) value matrix."""
    if values.ndim != 2:
        raise ArityError("values must be a 2-D matrix")
    if f.max_attr >= values.shape[1]:
        raise ArityError(
            f"function references attribute {f.max_attr}, matrix has {values.shape[1]} columns"
        )
    out = np.zeros(values.shape[0])
    for a, c, e in f.terms:
        if e == 1.0:
            out += c * values[:, a]
        else:
            out += c * values[:, a] ** e
    return out


def linear_score(w: Sequence[float], t: Tuple) -> float:
    """Dot product of a weight vector with the tuple's canonical values."""
    if len(w) != t.arity:
        raise ArityError(f"weight vector has length {len(w)}, tuple arity is {t.arity}")
    return float(np.dot(np.asarray(w, dtype=float), t.values))

"""Exact-rational density matrices for finite discrete probability.

The diagonal form conditions a point distribution on a subset and keeps the
outcomes distinct; the paradigm form puts sqrt(p_j * p_k) / Pr(S) coherences
between every pair of members. Entries are SqrtRational, so everything in
this module is exact: trace checks, probabilities, and the rank-1
certificate of the paradigm form compare rationals, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParadigmError, UndefinedDensityError
from .exact import SqrtRational
from .incidence import IncidenceMatrix
from .universe import Partition, Subset, Universe, _check_same_universe


@dataclass(frozen=True)
class PointDistribution:
    """Exact probabilities, one per universe element, summing to 1."""

    universe: Universe
    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        probs = tuple(Fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if len(probs) != self.universe.size:
            raise ParadigmError("need one probability per element")
        if any(p < 0 for p in probs):
            raise ParadigmError("probabilities must be non-negative")
        if sum(probs) != 1:
            raise ParadigmError("probabilities must sum to exactly 1")

    @classmethod
    def uniform(cls, universe: Universe) -> "PointDistribution":
        return cls(universe, (Fraction(1, universe.size),) * universe.size)

    @classmethod
    def from_fractions(cls, universe: Universe, values: Iterable) -> "PointDistribution":
        return cls(universe, tuple(Fraction(v) for v in values))

    def prob(self, s: Subset) -> Fraction:
        _check_same_universe(self, s)
        return sum((self.probs[j] for j in s.indices), Fraction(0))


@dataclass(frozen=True)
class ClassicalDensity:
    """Symmetric, trace-1, entrywise non-negative exact matrix.

    The form tag is derived from the entries: "diagonal" when there are no
    off-diagonal coherences, "paradigm" when the matrix is rank-1 on its
    support (entry(j,k)^2 == entry(j,j) * entry(k,k) everywhere), and
    "mixed" for partially sharpened states in between.
    """

    universe: Universe
    entries: tuple[tuple[SqrtRational, ...], ...]

    def __post_init__(self) -> None:
        n = self.universe.size
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ParadigmError(f"expected a {n}x{n} matrix")
        trace = Fraction(0)
        for j in range(n):
            diag = entries[j][j].try_fraction()
            if diag is None:
                raise ParadigmError("diagonal entries must be rational")
            trace += diag
            for k in range(n):
                if entries[j][k] != entries[k][j]:
                    raise ParadigmError("density matrix must be symmetric")
        if trace != 1:
            raise ParadigmError(f"trace must be exactly 1, got {trace}")

    @property
    def n(self) -> int:
        return self.universe.size

    def entry(self, j: int, k: int) -> SqrtRational:
        return self.entries[j][k]

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[j][j].as_fraction() for j in range(self.n))

    @property
    def form(self) -> str:
        n = self.n
        if all(self.entries[j][k].is_zero for j in range(n) for k in range(n) if j != k):
            return "diagonal"
        d = self.diagonal()
        if all(
            self.entries[j][k].square == d[j] * d[k]
            for j in range(n)
            for k in range(n)
        ):
            return "paradigm"
        return "mixed"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "form": self.form,
            "entries": [[str(e) for e in row] for row in self.entries],
        }

    def render_grid(self) -> str:
        cells = [[str(e) for e in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _zero_row(n: int) -> list[SqrtRational]:
    return [SqrtRational.zero() for _ in range(n)]


def rho_from_incidence(a: IncidenceMatrix) -> ClassicalDensity:
    """Normalize an incidence matrix by its trace."""
    trace = sum(a.diagonal())
    if trace == 0:
        raise UndefinedDensityError("incidence matrix has empty support")
    n = a.n
    entries = tuple(
        tuple(SqrtRational.from_value(Fraction(a.rows[j][k], trace)) for k in range(n))
        for j in range(n)
    )
    return ClassicalDensity(a.universe, entries)


def rho_diag(s: Subset, p: PointDistribution) -> ClassicalDensity:
    """Diagonal density of the distribution conditioned on a subset."""
    _check_same_universe(s, p)
    pr = p.prob(s)
    if pr == 0:
        raise UndefinedDensityError("cannot condition on a probability-0 subset")
    n = s.universe.size
    rows = [_zero_row(n) for _ in range(n)]
    for j in s.indices:
        rows[j][j] = SqrtRational.from_value(p.probs[j] / pr)
    return ClassicalDensity(s.universe, tuple(tuple(row) for row in rows))


def rho_paradigm(s: Subset, p: PointDistribution) -> ClassicalDensity:
    """Rank-1 density on the subset: entry (j, k) is sqrt(p_j * p_k) / Pr(S)."""
    _check_same_universe(s, p)
    pr = p.prob(s)
    if pr == 0:
        raise UndefinedDensityError("cannot condition on a probability-0 subset")
    n = s.universe.size
    rows = [_zero_row(n) for _ in range(n)]
    for j in s.indices:
        for k in s.indices:
            rows[j][k] = SqrtRational(p.probs[j] * p.probs[k] / (pr * pr))
    return ClassicalDensity(s.universe, tuple(tuple(row) for row in rows))


def prob_block(rho: ClassicalDensity, b: Subset) -> Fraction:
    """Probability of landing in a block: the trace of the block-projected density."""
    _check_same_universe(rho, b)
    return sum((rho.entries[j][j].as_fraction() for j in b.indices), Fraction(0))


def sharpen_classical(rho: ClassicalDensity, p: Partition) -> ClassicalDensity:
    """Zero every coherence between elements lying in different blocks."""
    _check_same_universe(rho, p)
    n = rho.n
    block_of = [p.block_index_of(j) for j in range(n)]
    entries = tuple(
        tuple(
            rho.entries[j][k] if block_of[j] == block_of[k] else SqrtRational.zero()
            for k in range(n)
        )
        for j in range(n)
    )
    return ClassicalDensity(rho.universe, entries)


def project_conditional(rho: ClassicalDensity, b: Subset) -> tuple[Fraction, ClassicalDensity]:
    """Project onto a block and renormalize.

    Returns the block probability together with the post-state
    P_B rho P_B / tr[P_B rho].
    """
    pr = prob_block(rho, b)
    if pr == 0:
        raise UndefinedDensityError("cannot condition on a probability-0 block")
    n = rho.n
    entries = tuple(
        tuple(
            rho.entries[j][k] / pr if (b.contains(j) and b.contains(k)) else SqrtRational.zero()
            for k in range(n)
        )
        for j in range(n)
    )
    return pr, ClassicalDensity(rho.universe, entries)

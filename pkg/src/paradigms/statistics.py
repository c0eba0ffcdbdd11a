"""Uniform-weight particle statistics over finite single-particle states.

Three ways to count the configurations of n identical particles over m
states: weight ordered tuples uniformly and aggregate by multiset
(Maxwell-Boltzmann), weight the multisets themselves uniformly
(Bose-Einstein), or weight only the repeat-free subsets uniformly
(Fermi-Dirac). All probabilities are exact rationals.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import ExclusionError, ParadigmError, SizeLimitError
from .incidence import IncidenceMatrix, in_product
from .universe import Subset, Universe

MAX_PARTICLES = 8
MAX_ORDERED_CONFIGS = 10 ** 6

_KINDS = ("tuple", "multiset", "subset")


@dataclass(frozen=True)
class Configuration:
    """Occupancy of single-particle states by a fixed number of particles.

    A "tuple" keeps particle order; a "multiset" forgets it; a "subset"
    additionally forbids repeats. Multisets and subsets are canonicalized
    to sorted state order.
    """

    kind: str
    states: tuple[str, ...]

    def __post_init__(self) -> None:
        states = tuple(str(s) for s in self.states)
        if self.kind not in _KINDS:
            raise ParadigmError(f"kind must be one of {_KINDS}")
        if not states:
            raise ParadigmError("configuration needs at least one particle")
        if self.kind in ("multiset", "subset"):
            states = tuple(sorted(states))
        if self.kind == "subset" and len(set(states)) != len(states):
            raise ParadigmError("subset configurations cannot repeat a state")
        object.__setattr__(self, "states", states)

    @property
    def particles(self) -> int:
        return len(self.states)

    def __str__(self) -> str:
        if self.kind == "tuple":
            return "(" + ", ".join(self.states) + ")"
        return "{" + ", ".join(self.states) + "}"


@dataclass(frozen=True)
class DistributionTable:
    """Configurations with exact probabilities summing to 1."""

    rows: tuple[tuple[Configuration, Fraction], ...]

    def __post_init__(self) -> None:
        rows = tuple((c, Fraction(p)) for c, p in self.rows)
        object.__setattr__(self, "rows", rows)
        configs = [c for c, _ in rows]
        if len(set(configs)) != len(configs):
            raise ParadigmError("configurations must be pairwise distinct")
        if sum((p for _, p in rows), Fraction(0)) != 1:
            raise ParadigmError("probabilities must sum to exactly 1")

    def probability(self, config: Configuration) -> Fraction:
        for c, p in self.rows:
            if c == config:
                return p
        return Fraction(0)

    def support(self) -> set[tuple[str, ...]]:
        return {c.states for c, _ in self.rows}

    def to_markdown(self) -> str:
        lines = ["| configuration | probability |", "| --- | --- |"]
        lines += [f"| {config} | {prob} |" for config, prob in self.rows]
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "rows": [
                {"kind": c.kind, "states": list(c.states), "probability": str(p)}
                for c, p in self.rows
            ]
        }


def _check_guards(state_labels: Sequence[str], n_particles: int) -> tuple[str, ...]:
    labels = tuple(str(s) for s in state_labels)
    m = len(labels)
    if m < 1:
        raise SizeLimitError("need at least one single-particle state")
    if len(set(labels)) != m:
        raise ParadigmError("state labels must be distinct")
    if not 1 <= n_particles <= MAX_PARTICLES:
        raise SizeLimitError(f"particle count must be between 1 and {MAX_PARTICLES}")
    if m ** n_particles > MAX_ORDERED_CONFIGS:
        raise SizeLimitError(
            f"{m}^{n_particles} ordered configurations exceed the {MAX_ORDERED_CONFIGS} limit"
        )
    return labels


def mb_distribution(state_labels: Sequence[str], n_particles: int) -> DistributionTable:
    """Maxwell-Boltzmann: uniform over ordered tuples, aggregated by multiset."""
    labels = _check_guards(state_labels, n_particles)
    total = len(labels) ** n_particles
    counts: Counter[tuple[str, ...]] = Counter(
        tuple(sorted(t)) for t in itertools.product(labels, repeat=n_particles)
    )
    rows = tuple(
        (Configuration("multiset", states), Fraction(counts[states], total))
        for states in sorted(counts)
    )
    return DistributionTable(rows)


def be_distribution(state_labels: Sequence[str], n_particles: int) -> DistributionTable:
    """Bose-Einstein: uniform over the multisets themselves."""
    labels = _check_guards(state_labels, n_particles)
    multisets = list(itertools.combinations_with_replacement(sorted(labels), n_particles))
    weight = Fraction(1, comb(len(labels) + n_particles - 1, n_particles))
    assert len(multisets) == weight.denominator
    rows = tuple((Configuration("multiset", states), weight) for states in multisets)
    return DistributionTable(rows)


def fd_distribution(state_labels: Sequence[str], n_particles: int) -> DistributionTable:
    """Fermi-Dirac: uniform over repeat-free subsets."""
    labels = _check_guards(state_labels, n_particles)
    if n_particles > len(labels):
        raise ExclusionError(
            f"cannot place {n_particles} exclusive particles in {len(labels)} states"
        )
    subsets = list(itertools.combinations(sorted(labels), n_particles))
    weight = Fraction(1, comb(len(labels), n_particles))
    rows = tuple((Configuration("subset", states), weight) for states in subsets)
    return DistributionTable(rows)


def tuple_universe(state_labels: Sequence[str], n_particles: int) -> Universe:
    """Universe of all ordered occupation tuples, in product order."""
    labels = _check_guards(state_labels, n_particles)
    names = [
        "(" + ",".join(t) + ")" for t in itertools.product(labels, repeat=n_particles)
    ]
    return Universe(tuple(names))


def orbit_paradigm(
    state_labels: Sequence[str], n_particles: int, config: Configuration
) -> IncidenceMatrix:
    """Product-form matrix of one permutation orbit inside the tuple universe.

    The orbit of a multiset is the set of ordered tuples that sort to it;
    its product matrix is the indefinite counterpart of the orbit, and its
    trace recovers the Maxwell-Boltzmann multiplicity.
    """
    labels = _check_guards(state_labels, n_particles)
    if config.kind == "tuple":
        raise ParadigmError("orbit is defined for multiset or subset configurations")
    if config.particles != n_particles:
        raise ParadigmError("configuration size must equal the particle count")
    universe = tuple_universe(labels, n_particles)
    members = [
        i
        for i, t in enumerate(itertools.product(labels, repeat=n_particles))
        if tuple(sorted(t)) == config.states
    ]
    if not members:
        raise ParadigmError("configuration uses states outside the given labels")
    return in_product(Subset.from_indices(universe, members))

"""Finite universes of labeled elements, with subsets, attributes,
partitions, DNF properties, and the participation order on subsets.

Element identity is positional: the universe fixes a total index order and
labels are display-only. Everything here is immutable and hashable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import (
    IncompletePredicatesError,
    ParadigmError,
    SizeLimitError,
    UniverseMismatchError,
)

MAX_TRUTH_TABLE_PREDICATES = 20


@dataclass(frozen=True)
class Universe:
    """An ordered, finite set of distinct element labels."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ParadigmError("universe must contain at least one element")
        if len(set(self.labels)) != len(self.labels):
            raise ParadigmError("universe labels must be distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ParadigmError(f"unknown element label: {label!r}") from None

    def subset(self, membership: Iterable[int]) -> "Subset":
        return Subset(self, tuple(membership))

    def empty_subset(self) -> "Subset":
        return Subset(self, (0,) * self.size)

    def full_subset(self) -> "Subset":
        return Subset(self, (1,) * self.size)

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r})"


def _check_same_universe(a, b) -> None:
    if a.universe != b.universe:
        raise UniverseMismatchError("operands belong to different universes")


@dataclass(frozen=True)
class Subset:
    """A subset of a universe as a 0/1 membership vector."""

    universe: Universe
    membership: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "membership", tuple(int(b) for b in self.membership))
        if len(self.membership) != self.universe.size:
            raise ParadigmError("membership vector length must equal universe size")
        if any(b not in (0, 1) for b in self.membership):
            raise ParadigmError("membership entries must be 0 or 1")

    @classmethod
    def from_indices(cls, universe: Universe, indices: Iterable[int]) -> "Subset":
        bits = [0] * universe.size
        for j in indices:
            if not 0 <= j < universe.size:
                raise ParadigmError(f"element index out of range: {j}")
            bits[j] = 1
        return cls(universe, tuple(bits))

    @classmethod
    def from_labels(cls, universe: Universe, labels: Iterable[str]) -> "Subset":
        return cls.from_indices(universe, (universe.index_of(s) for s in labels))

    @classmethod
    def from_bits(cls, universe: Universe, bits: str) -> "Subset":
        if len(bits) != universe.size or any(c not in "01" for c in bits):
            raise ParadigmError(f"expected a 0/1 string of length {universe.size}")
        return cls(universe, tuple(int(c) for c in bits))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(j for j, b in enumerate(self.membership) if b)

    @property
    def size(self) -> int:
        return sum(self.membership)

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    def contains(self, index: int) -> bool:
        return bool(self.membership[index])

    def labels(self) -> tuple[str, ...]:
        return tuple(self.universe.labels[j] for j in self.indices)

    def union(self, other: "Subset") -> "Subset":
        _check_same_universe(self, other)
        return Subset(self.universe, tuple(a | b for a, b in zip(self.membership, other.membership)))

    def intersection(self, other: "Subset") -> "Subset":
        _check_same_universe(self, other)
        return Subset(self.universe, tuple(a & b for a, b in zip(self.membership, other.membership)))

    def complement(self) -> "Subset":
        return Subset(self.universe, tuple(1 - b for b in self.membership))

    def issubset(self, other: "Subset") -> bool:
        _check_same_universe(self, other)
        return all(a <= b for a, b in zip(self.membership, other.membership))


@dataclass(frozen=True)
class Attribute:
    """A total assignment of one value label per universe element."""

    universe: Universe
    name: str
    values: tuple[Hashable, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.universe.size:
            raise ParadigmError("attribute must assign exactly one value per element")

    def value_of(self, index: int) -> Hashable:
        return self.values[index]

    def distinct_values(self) -> tuple[Hashable, ...]:
        seen: list[Hashable] = []
        for v in self.values:
            if v not in seen:
                seen.append(v)
        return tuple(seen)

    @property
    def is_binary(self) -> bool:
        return all(v in (0, 1) for v in self.values)


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty blocks covering the universe.

    Blocks are normalized to ascending order of their smallest element, so
    structurally equal partitions compare equal.
    """

    universe: Universe
    blocks: tuple[Subset, ...]

    def __post_init__(self) -> None:
        blocks = tuple(self.blocks)
        if not blocks:
            raise ParadigmError("partition needs at least one block")
        counts = [0] * self.universe.size
        for block in blocks:
            if block.universe != self.universe:
                raise UniverseMismatchError("partition block over a different universe")
            if block.is_empty:
                raise ParadigmError("partition blocks must be non-empty")
            for j in block.indices:
                counts[j] += 1
        if any(c != 1 for c in counts):
            raise ParadigmError("blocks must be disjoint and cover the universe")
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=lambda b: b.indices[0])))

    @classmethod
    def from_index_blocks(cls, universe: Universe, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(universe, tuple(Subset.from_indices(universe, b) for b in blocks))

    @classmethod
    def discrete(cls, universe: Universe) -> "Partition":
        return cls.from_index_blocks(universe, ([j] for j in range(universe.size)))

    @classmethod
    def indiscrete(cls, universe: Universe) -> "Partition":
        return cls(universe, (universe.full_subset(),))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_index_of(self, element: int) -> int:
        for i, block in enumerate(self.blocks):
            if block.contains(element):
                return i
        raise ParadigmError(f"element index out of range: {element}")

    def same_block(self, j: int, k: int) -> bool:
        return self.block_index_of(j) == self.block_index_of(k)


@dataclass(frozen=True)
class DnfFormula:
    """A disjunction of full conjunctions over named binary predicates.

    Each conjunct fixes a sign for every predicate: True for the positive
    literal, False for the negated one. Zero conjuncts is the constant false.
    """

    predicates: tuple[str, ...]
    conjuncts: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "predicates", tuple(self.predicates))
        object.__setattr__(self, "conjuncts", tuple(tuple(bool(s) for s in c) for c in self.conjuncts))
        if any(len(c) != len(self.predicates) for c in self.conjuncts):
            raise ParadigmError("each conjunct needs one sign per predicate")
        if len(set(self.conjuncts)) != len(self.conjuncts):
            raise ParadigmError("conjuncts must be distinct")

    def evaluate(self, row: Sequence[int]) -> bool:
        """Evaluate on one row of predicate values (0/1, one per predicate)."""
        if len(row) != len(self.predicates):
            raise ParadigmError("row length must match predicate count")
        signs = tuple(bool(v) for v in row)
        return signs in self.conjuncts

    def __str__(self) -> str:
        if not self.conjuncts:
            return "false"
        parts = []
        for conjunct in self.conjuncts:
            literals = [
                name if sign else f"~{name}"
                for name, sign in zip(self.predicates, conjunct)
            ]
            parts.append("[" + " & ".join(literals) + "]")
        return " | ".join(parts)


def truth_table_universe(predicate_names: Sequence[str]) -> tuple[Universe, list[Attribute]]:
    """Universe of all 2^k boolean rows over k named predicates.

    Rows are ordered by descending binary code, so the first element takes
    value 1 on every predicate and the last takes 0 on every predicate.
    """
    k = len(predicate_names)
    if not 1 <= k <= MAX_TRUTH_TABLE_PREDICATES:
        raise SizeLimitError(
            f"predicate count must be between 1 and {MAX_TRUTH_TABLE_PREDICATES}, got {k}"
        )
    if len(set(predicate_names)) != k:
        raise ParadigmError("predicate names must be distinct")
    n = 2 ** k
    universe = Universe(tuple(f"u{i + 1}" for i in range(n)))
    attributes = []
    for t, name in enumerate(predicate_names):
        values = tuple(((n - 1 - i) >> (k - 1 - t)) & 1 for i in range(n))
        attributes.append(Attribute(universe, name, values))
    return universe, attributes


def inverse_image_partition(attribute: Attribute) -> Partition:
    """Partition whose blocks are the maximal constant sets of an attribute."""
    universe = attribute.universe
    blocks = [
        [j for j in range(universe.size) if attribute.values[j] == value]
        for value in attribute.distinct_values()
    ]
    return Partition.from_index_blocks(universe, blocks)


def partition_join(p: Partition, q: Partition) -> Partition:
    """Common refinement: blocks are the non-empty pairwise intersections."""
    _check_same_universe(p, q)
    blocks = []
    for bp in p.blocks:
        for bq in q.blocks:
            both = bp.intersection(bq)
            if not both.is_empty:
                blocks.append(both)
    return Partition(p.universe, tuple(blocks))


def is_discrete(p: Partition) -> bool:
    """True iff every block is a singleton."""
    return all(block.size == 1 for block in p.blocks)


def attributes_complete(attributes: Sequence[Attribute]) -> bool:
    """True iff the attributes jointly separate every pair of elements."""
    if not attributes:
        raise ParadigmError("need at least one attribute")
    universe = attributes[0].universe
    joined = inverse_image_partition(attributes[0])
    for attribute in attributes[1:]:
        if attribute.universe != universe:
            raise UniverseMismatchError("attributes over different universes")
        joined = partition_join(joined, inverse_image_partition(attribute))
    return is_discrete(joined)


def dnf_of_subset(predicates: Sequence[Attribute], s: Subset) -> DnfFormula:
    """The disjunctive-normal-form property holding exactly on a subset.

    One conjunct per member of the subset, in universe index order, reading
    each predicate's value off that element's row. Requires the predicates
    to be binary and jointly complete, otherwise two member rows could
    collide and the formula would overcount.
    """
    if not predicates:
        raise ParadigmError("need at least one predicate")
    for predicate in predicates:
        if predicate.universe != s.universe:
            raise UniverseMismatchError("predicates and subset over different universes")
        if not predicate.is_binary:
            raise ParadigmError(f"predicate {predicate.name!r} is not 0/1 valued")
    if not attributes_complete(predicates):
        raise IncompletePredicatesError(
            "predicates do not distinguish all elements of the universe"
        )
    names = tuple(p.name for p in predicates)
    conjuncts = tuple(
        tuple(bool(p.values[j]) for p in predicates) for j in s.indices
    )
    return DnfFormula(names, conjuncts)


def participates(t: Subset, s: Subset) -> bool:
    """Participation order on paradigms: t's paradigm participates in s's iff t is contained in s."""
    _check_same_universe(t, s)
    return t.issubset(s)


@dataclass(frozen=True)
class UniverseDocument:
    """A universe plus named attributes and subsets, as loaded from JSON.

    Document schema::

        {"labels": [...],
         "attributes": {"name": [...], ...},
         "subsets": {"name": [0, 1, ...], ...}}
    """

    universe: Universe
    attributes: dict[str, Attribute]
    subsets: dict[str, Subset]

    @classmethod
    def from_dict(cls, data: dict) -> "UniverseDocument":
        if "labels" not in data:
            raise ParadigmError("universe document needs a 'labels' field")
        universe = Universe(tuple(str(s) for s in data["labels"]))
        attributes = {
            str(name): Attribute(universe, str(name), tuple(values))
            for name, values in data.get("attributes", {}).items()
        }
        subsets = {
            str(name): Subset(universe, tuple(bits))
            for name, bits in data.get("subsets", {}).items()
        }
        return cls(universe, attributes, subsets)

    @classmethod
    def from_json(cls, text: str) -> "UniverseDocument":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_file(cls, path) -> "UniverseDocument":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_json(handle.read())

    def to_dict(self) -> dict:
        return {
            "labels": list(self.universe.labels),
            "attributes": {name: list(a.values) for name, a in self.attributes.items()},
            "subsets": {name: list(s.membership) for name, s in self.subsets.items()},
        }

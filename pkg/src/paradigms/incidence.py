"""Boolean incidence matrices for the two readings of a subset.

A subset S has a diagonal representation (the set of distinct S-things) and
a product representation (one indefinite S-thing, all-ones block on S). The
product matrices form a Boolean algebra under blob-sum, meet, and negation;
partitions act on matrices by masking with their indistinction relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotProductFormError, ParadigmError
from .universe import Partition, Subset, Universe, _check_same_universe


@dataclass(frozen=True)
class IncidenceMatrix:
    """A symmetric n x n matrix of 0/1 entries over a universe."""

    universe: Universe
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.universe.size
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ParadigmError(f"expected a {n}x{n} matrix")
        for j in range(n):
            for k in range(n):
                if rows[j][k] not in (0, 1):
                    raise ParadigmError("entries must be 0 or 1")
                if rows[j][k] != rows[k][j]:
                    raise ParadigmError("incidence matrix must be symmetric")

    @property
    def n(self) -> int:
        return self.universe.size

    def entry(self, j: int, k: int) -> int:
        return self.rows[j][k]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[j][j] for j in range(self.n))

    def support(self) -> Subset:
        """Subset read off the diagonal."""
        return Subset(self.universe, self.diagonal())

    def is_diagonal(self) -> bool:
        return all(
            self.rows[j][k] == 0
            for j in range(self.n)
            for k in range(self.n)
            if j != k
        )

    def is_product_form(self) -> bool:
        """True iff the matrix is the all-ones block over its diagonal support."""
        d = self.diagonal()
        return all(
            self.rows[j][k] == d[j] * d[k]
            for j in range(self.n)
            for k in range(self.n)
        )

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json_dict(cls, universe: Universe, data: dict) -> "IncidenceMatrix":
        if data.get("n") != universe.size:
            raise ParadigmError("matrix size does not match universe")
        return cls(universe, tuple(tuple(row) for row in data["rows"]))

    def render_grid(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


def in_diagonal(s: Subset) -> IncidenceMatrix:
    """Diagonal matrix with the subset's membership on the diagonal."""
    n = s.universe.size
    rows = tuple(
        tuple(s.membership[j] if j == k else 0 for k in range(n)) for j in range(n)
    )
    return IncidenceMatrix(s.universe, rows)


def in_product(s: Subset) -> IncidenceMatrix:
    """All-ones block on S: entry (j, k) is 1 iff both elements are in S."""
    n = s.universe.size
    rows = tuple(
        tuple(s.membership[j] * s.membership[k] for k in range(n)) for j in range(n)
    )
    return IncidenceMatrix(s.universe, rows)


def _require_product_form(a: IncidenceMatrix) -> Subset:
    if not a.is_product_form():
        raise NotProductFormError(
            "operation is defined on product-form (paradigm) matrices only"
        )
    return a.support()


def blob_sum(a: IncidenceMatrix, b: IncidenceMatrix) -> IncidenceMatrix:
    """Join of paradigms: the product matrix of the union of the supports.

    Equals the entrywise disjunction of the two operands together with both
    cross blocks, i.e. union of supports plus all cross coherences.
    """
    _check_same_universe(a, b)
    sa = _require_product_form(a)
    sb = _require_product_form(b)
    return in_product(sa.union(sb))


def paradigm_meet(a: IncidenceMatrix, b: IncidenceMatrix) -> IncidenceMatrix:
    """Meet of paradigms: the product matrix of the intersected supports."""
    _check_same_universe(a, b)
    sa = _require_product_form(a)
    sb = _require_product_form(b)
    return in_product(sa.intersection(sb))


def paradigm_negate(a: IncidenceMatrix) -> IncidenceMatrix:
    """Negation of a paradigm: the product matrix of the complement support."""
    sa = _require_product_form(a)
    return in_product(sa.complement())


def indit(p: Partition) -> IncidenceMatrix:
    """Incidence matrix of a partition's indistinction (equivalence) relation."""
    n = p.universe.size
    block_of = [p.block_index_of(j) for j in range(n)]
    rows = tuple(
        tuple(1 if block_of[j] == block_of[k] else 0 for k in range(n))
        for j in range(n)
    )
    return IncidenceMatrix(p.universe, rows)


def _bool_matmul(x: Sequence[Sequence[int]], y: Sequence[Sequence[int]], n: int):
    return tuple(
        tuple(
            1 if any(x[j][t] and y[t][k] for t in range(n)) else 0
            for k in range(n)
        )
        for j in range(n)
    )


def _projection_rows(block: Subset, n: int):
    return tuple(
        tuple(block.membership[j] if j == k else 0 for k in range(n))
        for j in range(n)
    )


def sharpen(a: IncidenceMatrix, p: Partition) -> IncidenceMatrix:
    """Render a matrix more definite by a partition.

    Masks the matrix with the partition's indistinction relation. The same
    result is computed a second time as the Boolean sum of the projection
    sandwiches P_B a P_B over the blocks, and the two routes are required
    to agree; a mismatch would be a bug here, not a bad input.
    """
    _check_same_universe(a, p)
    n = a.n
    relation = indit(p)
    masked = tuple(
        tuple(a.rows[j][k] & relation.rows[j][k] for k in range(n)) for j in range(n)
    )
    sandwiched = tuple((0,) * n for _ in range(n))
    for block in p.blocks:
        proj = _projection_rows(block, n)
        piece = _bool_matmul(proj, _bool_matmul(a.rows, proj, n), n)
        sandwiched = tuple(
            tuple(sandwiched[j][k] | piece[j][k] for k in range(n)) for j in range(n)
        )
    if sandwiched != masked:
        raise AssertionError("projection sandwich disagrees with indistinction mask")
    return IncidenceMatrix(a.universe, masked)


def permute_conjugate(a: IncidenceMatrix, perm: Sequence[int]) -> IncidenceMatrix:
    """Relabel rows and columns: entry (j, k) becomes entry (perm[j], perm[k])."""
    n = a.n
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ParadigmError(f"permutation must be a bijection on 0..{n - 1}")
    rows = tuple(
        tuple(a.rows[perm[j]][perm[k]] for k in range(n)) for j in range(n)
    )
    return IncidenceMatrix(a.universe, rows)

"""Complex density matrices, projective measurement, and basis rotation.

Works in binary64 with two fixed tolerances: ATOL_ALGEBRAIC for algebraic
identities (Hermiticity, trace, normalization) and ATOL_SPECTRAL for
eigenvalue-based checks (positivity, unitarity).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ParadigmError
from .universe import Partition, Universe, _check_same_universe

ATOL_ALGEBRAIC = 1e-12
ATOL_SPECTRAL = 1e-10


def _frozen_array(values, shape_name: str, shape: tuple[int, ...]) -> np.ndarray:
    arr = np.array(values, dtype=np.complex128)
    if arr.shape != shape:
        raise ParadigmError(f"{shape_name} must have shape {shape}, got {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class AmplitudeVector:
    """A normalized complex amplitude per basis element of the universe."""

    universe: Universe
    amps: np.ndarray

    def __post_init__(self) -> None:
        arr = _frozen_array(self.amps, "amplitude vector", (self.universe.size,))
        object.__setattr__(self, "amps", arr)
        norm_sq = float(np.sum(np.abs(arr) ** 2))
        if abs(norm_sq - 1.0) > ATOL_ALGEBRAIC:
            raise ParadigmError(
                f"amplitudes are not normalized: sum of squared moduli is {norm_sq!r}"
            )

    @classmethod
    def normalized(cls, universe: Universe, amps: Sequence[complex]) -> "AmplitudeVector":
        arr = np.array(amps, dtype=np.complex128)
        norm = np.linalg.norm(arr)
        if norm == 0:
            raise ParadigmError("cannot normalize the zero vector")
        return cls(universe, arr / norm)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2


@dataclass(frozen=True, eq=False)
class QuantumDensity:
    """Hermitian, trace-1, positive-semidefinite complex matrix."""

    universe: Universe
    matrix: np.ndarray

    def __post_init__(self) -> None:
        n = self.universe.size
        arr = _frozen_array(self.matrix, "density matrix", (n, n))
        object.__setattr__(self, "matrix", arr)
        if not np.allclose(arr, arr.conj().T, rtol=0, atol=ATOL_ALGEBRAIC):
            raise ParadigmError("density matrix must be Hermitian")
        trace = complex(np.trace(arr))
        if abs(trace - 1.0) > ATOL_ALGEBRAIC:
            raise ParadigmError(f"trace must be 1, got {trace!r}")
        if float(np.min(np.linalg.eigvalsh(arr))) < -ATOL_SPECTRAL:
            raise ParadigmError("density matrix must be positive semidefinite")

    @property
    def n(self) -> int:
        return self.universe.size

    def diagonal_probabilities(self) -> np.ndarray:
        return np.real(np.diag(self.matrix))

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def to_json_dict(self) -> dict:
        return matrix_to_json(self.matrix)


@dataclass(frozen=True)
class Observable:
    """Eigenvalue blocks over the universe's basis indices.

    Blocks partition 0..n-1 and each block carries one distinct real
    eigenvalue; basis states sharing an eigenvalue sit in the same block.
    """

    universe: Universe
    blocks: tuple[tuple[int, ...], ...]
    eigenvalues: tuple[float, ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(int(j) for j in block) for block in self.blocks)
        eigenvalues = tuple(float(v) for v in self.eigenvalues)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "eigenvalues", eigenvalues)
        seen = sorted(j for block in blocks for j in block)
        if seen != list(range(self.universe.size)):
            raise ParadigmError("blocks must partition the basis indices")
        if len(eigenvalues) != len(blocks):
            raise ParadigmError("need exactly one eigenvalue per block")
        if len(set(eigenvalues)) != len(eigenvalues):
            raise ParadigmError("eigenvalues must be pairwise distinct")

    @classmethod
    def from_partition(
        cls, p: Partition, eigenvalues: Sequence[float] | None = None
    ) -> "Observable":
        blocks = tuple(block.indices for block in p.blocks)
        if eigenvalues is None:
            eigenvalues = tuple(float(i + 1) for i in range(len(blocks)))
        return cls(p.universe, blocks, tuple(eigenvalues))

    @classmethod
    def finest(cls, universe: Universe) -> "Observable":
        n = universe.size
        return cls(universe, tuple((j,) for j in range(n)), tuple(float(j) for j in range(n)))

    def projector(self, block_index: int) -> np.ndarray:
        proj = np.zeros((self.universe.size, self.universe.size), dtype=np.complex128)
        for j in self.blocks[block_index]:
            proj[j, j] = 1.0
        return proj

    def block_of(self, basis_index: int) -> int:
        for i, block in enumerate(self.blocks):
            if basis_index in block:
                return i
        raise ParadigmError(f"basis index out of range: {basis_index}")


def rho_pure(psi: AmplitudeVector) -> QuantumDensity:
    """Outer product |psi><psi|: full coherences between all basis states."""
    return QuantumDensity(psi.universe, np.outer(psi.amps, psi.amps.conj()))


def rho_decohered(psi: AmplitudeVector) -> QuantumDensity:
    """Squared moduli laid out along the diagonal, no coherences."""
    return QuantumDensity(psi.universe, np.diag(psi.probabilities()).astype(np.complex128))


def luders(rho: QuantumDensity, obs: Observable) -> QuantumDensity:
    """Post-measurement mixture: sum of P_B rho P_B over eigenvalue blocks.

    Computed both as the projection-sandwich sum and as an entrywise
    same-block mask; the two must agree to ATOL_ALGEBRAIC.
    """
    _check_same_universe(rho, obs)
    n = rho.n
    sandwiched = np.zeros((n, n), dtype=np.complex128)
    for i in range(len(obs.blocks)):
        proj = obs.projector(i)
        sandwiched += proj @ rho.matrix @ proj
    block_of = [obs.block_of(j) for j in range(n)]
    mask = np.array(
        [[1.0 if block_of[j] == block_of[k] else 0.0 for k in range(n)] for j in range(n)]
    )
    masked = rho.matrix * mask
    if float(np.max(np.abs(sandwiched - masked))) > ATOL_ALGEBRAIC:
        raise AssertionError("projection sandwich disagrees with block mask")
    return QuantumDensity(rho.universe, sandwiched)


def measure_prob(rho: QuantumDensity, obs: Observable) -> list[tuple[float, float]]:
    """Outcome distribution: (eigenvalue, tr[P_B rho]) per block."""
    _check_same_universe(rho, obs)
    diag = rho.diagonal_probabilities()
    return [
        (obs.eigenvalues[i], float(sum(diag[j] for j in block)))
        for i, block in enumerate(obs.blocks)
    ]


def sample_measurement(
    rho: QuantumDensity, obs: Observable, seed: int
) -> tuple[float, QuantumDensity]:
    """Draw one outcome and collapse.

    Block i is drawn with probability tr[P_B rho] using a generator seeded
    per call, so results are reproducible. Returns the eigenvalue and the
    renormalized post-state P_B rho P_B / tr[P_B rho].
    """
    _check_same_universe(rho, obs)
    probs = np.array([p for _, p in measure_prob(rho, obs)])
    probs = np.clip(probs, 0.0, None)
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    i = int(rng.choice(len(probs), p=probs))
    proj = obs.projector(i)
    collapsed = proj @ rho.matrix @ proj
    post = QuantumDensity(rho.universe, collapsed / np.real(np.trace(collapsed)))
    return obs.eigenvalues[i], post


def change_basis(rho: QuantumDensity, u: np.ndarray) -> QuantumDensity:
    """Conjugate by a unitary: u rho u^dagger."""
    n = rho.n
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (n, n):
        raise ParadigmError(f"unitary must be {n}x{n}")
    if not np.allclose(u.conj().T @ u, np.eye(n), rtol=0, atol=ATOL_SPECTRAL):
        raise ParadigmError("matrix is not unitary")
    return QuantumDensity(rho.universe, u @ rho.matrix @ u.conj().T)


@dataclass(frozen=True)
class DistinguishReport:
    """Per-basis outcome probabilities for the pure and decohered states
    after a basis rotation, plus the largest absolute gap between them."""

    pure_probs: tuple[tuple[float, float], ...]
    decohered_probs: tuple[tuple[float, float], ...]
    gap: float

    def to_json_dict(self) -> dict:
        return {
            "pure": [{"eigenvalue": e, "probability": p} for e, p in self.pure_probs],
            "decohered": [
                {"eigenvalue": e, "probability": p} for e, p in self.decohered_probs
            ],
            "gap": self.gap,
        }


def distinguish(psi: AmplitudeVector, u: np.ndarray) -> DistinguishReport:
    """Compare the pure and decohered states of psi under a rotated measurement.

    Both states are conjugated by u and measured in the finest observable
    (singleton blocks). The gap is 0 exactly when the rotation leaves the
    two diagonals equal, as for the identity; a rotation that mixes basis
    states exposes the coherences of the pure state.
    """
    pure = change_basis(rho_pure(psi), u)
    decohered = change_basis(rho_decohered(psi), u)
    obs = Observable.finest(psi.universe)
    pure_probs = tuple(measure_prob(pure, obs))
    decohered_probs = tuple(measure_prob(decohered, obs))
    gap = max(
        abs(p - q) for (_, p), (_, q) in zip(pure_probs, decohered_probs)
    )
    return DistinguishReport(pure_probs, decohered_probs, gap)


def identity_unitary(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def hadamard_unitary() -> np.ndarray:
    return np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)


def unitary_by_name(name: str, n: int) -> np.ndarray:
    """Resolve a built-in unitary. Supported: 'identity', 'hadamard' (n=2)."""
    if name == "identity":
        return identity_unitary(n)
    if name == "hadamard":
        if n != 2:
            raise ParadigmError("the built-in hadamard is 2x2")
        return hadamard_unitary()
    raise ParadigmError(f"unknown built-in unitary: {name!r}")


def matrix_to_json(matrix: np.ndarray) -> dict:
    """Complex matrix as {"re": [[...]], "im": [[...]]}."""
    return {
        "re": [[float(v) for v in row] for row in np.real(matrix)],
        "im": [[float(v) for v in row] for row in np.imag(matrix)],
    }


def matrix_from_json(data: dict) -> np.ndarray:
    if "re" not in data or "im" not in data:
        raise ParadigmError("complex matrix JSON needs 're' and 'im' fields")
    re = np.array(data["re"], dtype=float)
    im = np.array(data["im"], dtype=float)
    if re.shape != im.shape or re.ndim != 2:
        raise ParadigmError("'re' and 'im' must be equal-shape 2d arrays")
    return re + 1j * im


def render_complex_grid(matrix: np.ndarray) -> str:
    """Aligned grid of complex entries for terminal output."""

    def fmt(z: complex) -> str:
        re, im = float(np.real(z)), float(np.imag(z))
        if abs(im) < 1e-15:
            return f"{re:.6g}"
        return f"{re:.6g}{im:+.6g}j"

    cells = [[fmt(z) for z in row] for row in matrix]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

"""Provides the bipartite pure-state and density-operator containers evolved by the coupled-top dynamics.

Composite indices follow one convention throughout: row index = subsystem-1 basis index (slow), column index =
subsystem-2 basis index (fast), so a pure state's amplitude grid flattens row-major to its state vector.
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from dataclasses import dataclass, field
from typing import Tuple

from numpy import abs as np_abs
from numpy import complex128, trace
from numpy.linalg import norm
from numpy.typing import NDArray

from coupledtops.exceptions import DimensionMismatch, InvalidParameterValue

STATE_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """A pure state on H₁ ⊗ H₂ stored as its N×M amplitude grid ψ[a, b]."""

    grid: NDArray[complex128] = field(repr=False)
    """Amplitudes, row index on subsystem 1 and column index on subsystem 2. Frobenius norm 1."""
    kick_count: int = 0
    """Number of Floquet steps applied since the initial state."""

    def __post_init__(self) -> None:
        if self.grid.ndim != 2:
            raise DimensionMismatch(f"amplitude grid must be two-dimensional, got shape {self.grid.shape}")
        deviation = abs(float(norm(self.grid)) - 1.0)
        if deviation > STATE_TOLERANCE:
            raise InvalidParameterValue(f"bipartite state is not normalised (|‖ψ‖ - 1| = {deviation:.3e})")

    @property
    def n1(self) -> int:
        return self.grid.shape[0]

    @property
    def n2(self) -> int:
        return self.grid.shape[1]

    def vector(self) -> NDArray[complex128]:
        """The state as a flat vector of length n1·n2."""
        return self.grid.reshape(-1)

    def density_operator(self) -> "DensityOperator":
        """|ψ⟩⟨ψ| as a `DensityOperator` with the same kick count."""
        vec = self.vector()
        return DensityOperator(
            matrix=vec[:, None] * vec.conj()[None, :], dims=(self.n1, self.n2), kick_count=self.kick_count
        )


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """A density operator on H₁ ⊗ H₂, or on a single space with dims (N, 1)."""

    matrix: NDArray[complex128] = field(repr=False)
    """d×d Hermitian matrix with unit trace."""
    dims: Tuple[int, int]
    """Subsystem dimensions (N, M) with N·M = d."""
    kick_count: int = 0
    """Number of Floquet steps applied since the initial state."""

    def __post_init__(self) -> None:
        d = self.dims[0] * self.dims[1]
        if self.matrix.shape != (d, d):
            raise DimensionMismatch(f"density matrix of shape {self.matrix.shape} does not match dims {self.dims}")
        asymmetry = float(np_abs(self.matrix - self.matrix.conj().T).max(initial=0.0))
        if asymmetry > STATE_TOLERANCE:
            raise InvalidParameterValue(f"density operator is not Hermitian (max |ρ - ρ†| = {asymmetry:.3e})")
        trace_error = abs(complex(trace(self.matrix)) - 1.0)
        if trace_error > STATE_TOLERANCE:
            raise InvalidParameterValue(f"density operator does not have unit trace (|Tr ρ - 1| = {trace_error:.3e})")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        """Tr ρ²."""
        return float(norm(self.matrix) ** 2)

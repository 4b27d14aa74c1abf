"""Provides the |j, m⟩ basis of a single top, coherent-state parameters and normalised state vectors."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import math
from dataclasses import dataclass, field
from typing import Union

from numpy import arange, complex128, float64
from numpy.linalg import norm
from numpy.typing import NDArray

from coupledtops.exceptions import InvalidParameterValue

NORMALISATION_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SpinBasis:
    """The standard basis |j, m⟩ of one spin-j top. Basis index a ∈ [0, N) corresponds to m = j - a, so index 0 is
    the highest weight state m = j."""

    j: float
    """Spin quantum number; 2j must be a nonnegative integer."""

    def __post_init__(self) -> None:
        two_j = 2 * self.j
        if not (math.isfinite(two_j) and two_j >= 0 and float(two_j).is_integer()):
            raise InvalidParameterValue(f"spin j must be a nonnegative half-integer, got {self.j}")

    @classmethod
    def from_dim(cls, dim: int) -> "SpinBasis":
        """The basis of dimension N = 2j + 1."""
        if dim < 1:
            raise InvalidParameterValue(f"basis dimension must be at least 1, got {dim}")
        return cls((dim - 1) / 2)

    @property
    def two_j(self) -> int:
        return int(round(2 * self.j))

    @property
    def dim(self) -> int:
        """N = 2j + 1."""
        return self.two_j + 1

    @property
    def m_values(self) -> NDArray[float64]:
        """The J_z eigenvalues m = j, j - 1, ..., -j in basis order."""
        return self.j - arange(self.dim, dtype=float64)


@dataclass(frozen=True)
class CoherentParams:
    """Polar angles (θ₀, φ₀) at which an SU(2) coherent state is centred on the sphere."""

    theta0: float
    """Polar angle in radians, within [0, π]."""
    phi0: float
    """Azimuthal angle in radians."""

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta0 <= math.pi:
            raise InvalidParameterValue(f"theta0 must lie in [0, π], got {self.theta0}")
        if not math.isfinite(self.phi0):
            raise InvalidParameterValue(f"phi0 must be finite, got {self.phi0}")


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalised amplitudes of a single-top state in a `SpinBasis`."""

    basis: SpinBasis
    amplitudes: NDArray[complex128] = field(repr=False)

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (self.basis.dim,):
            raise InvalidParameterValue(
                f"expected {self.basis.dim} amplitudes for j={self.basis.j}, got shape {self.amplitudes.shape}"
            )
        deviation = abs(float(norm(self.amplitudes)) ** 2 - 1.0)
        if deviation > NORMALISATION_TOLERANCE:
            raise InvalidParameterValue(f"state vector is not normalised (|Σ|c|² - 1| = {deviation:.3e})")


SpinLike = Union[SpinBasis, float]


def as_basis(spin: SpinLike) -> SpinBasis:
    """Accepts either a `SpinBasis` or a bare j."""
    return spin if isinstance(spin, SpinBasis) else SpinBasis(float(spin))

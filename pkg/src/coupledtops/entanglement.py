"""Entanglement measures: the Schmidt spectrum, von Neumann and linear entropies of pure bipartite states, and the
partial transpose and log-negativity of density operators. All logarithms are natural."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from numpy import abs as np_abs
from numpy import asarray, diff, float64, int64, isfinite, log, sort, where
from numpy.typing import NDArray
from scipy.special import entr

from coupledtops.dynamics import (
    BipartiteState,
    CoupledTopParams,
    DensityOperator,
    iterate_density,
    iterate_pure,
)
from coupledtops.exceptions import DimensionMismatch, EmptyInput, InvalidParameterValue
from coupledtops.numkernel import ComplexMatrix, hermitian_eig, singular_values
from coupledtops.settings import EigenBackend

logger = logging.getLogger(__name__)

CLAMP_TOLERANCE = 1e-12
SPECTRUM_SUM_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class SchmidtSpectrum:
    """Squared Schmidt coefficients λ_i, the shared spectrum of both reduced density matrices."""

    lambdas: NDArray[float64] = field(repr=False)
    """Descending values in [0, 1] summing to 1; roundoff negatives down to -1e-12 are clamped to 0."""

    def __post_init__(self) -> None:
        values = asarray(self.lambdas, dtype=float64)
        if (values < -CLAMP_TOLERANCE).any():
            raise InvalidParameterValue(f"Schmidt spectrum has a negative value {values.min():.3e}")
        values = sort(where(values < 0.0, 0.0, values))[::-1]
        if abs(values.sum() - 1.0) > SPECTRUM_SUM_TOLERANCE:
            raise InvalidParameterValue(f"Schmidt spectrum sums to {values.sum():.12f}, not 1")
        object.__setattr__(self, "lambdas", values)


class MeasureKind(Enum):
    """Enum naming the entanglement measures recorded in a `MeasureSeries`."""

    VON_NEUMANN = "S_V"
    """von Neumann entropy -Σ λ ln λ of a pure state's reduced density matrix."""
    LINEAR = "S_R"
    """Linear entropy 1 - Σ λ² of a pure state's reduced density matrix."""
    LOG_NEGATIVITY = "E_N"
    """Log-negativity ln ‖ρ^T₂‖₁ of a density operator."""


@dataclass(frozen=True, eq=False)
class MeasureSeries:
    """A time series of one entanglement measure against kick index."""

    kind: MeasureKind
    kicks: NDArray[int64]
    """Kick indices n, strictly increasing."""
    values: NDArray[float64]
    """Measure values at each kick; finite."""

    def __post_init__(self) -> None:
        if self.kicks.shape != self.values.shape or self.kicks.ndim != 1:
            raise DimensionMismatch(f"kicks {self.kicks.shape} and values {self.values.shape} must be equal-length 1D")
        if (diff(self.kicks) <= 0).any():
            raise InvalidParameterValue("kick indices must be strictly increasing")
        if not isfinite(self.values).all():
            raise InvalidParameterValue("measure values must be finite")

    def __len__(self) -> int:
        return int(self.kicks.size)


def schmidt_spectrum(s: BipartiteState, backend: EigenBackend = EigenBackend.JACOBI) -> SchmidtSpectrum:
    """λ_i = squared singular values of the amplitude grid; min(N, M) of them."""
    return SchmidtSpectrum(singular_values(s.grid, backend) ** 2)


def reduced_density_matrix(s: BipartiteState, subsystem: int = 1) -> DensityOperator:
    """ρ₁ = Tr₂ |ψ⟩⟨ψ| = ψ ψ† or ρ₂ = Tr₁ |ψ⟩⟨ψ| = ψᵀ ψ*, with dims (n, 1)."""
    if subsystem == 1:
        rho = s.grid @ s.grid.conj().T
    elif subsystem == 2:
        rho = s.grid.T @ s.grid.conj()
    else:
        raise InvalidParameterValue(f"subsystem must be 1 or 2, got {subsystem}")
    return DensityOperator(matrix=(rho + rho.conj().T) / 2, dims=(rho.shape[0], 1), kick_count=s.kick_count)


def von_neumann(sp: SchmidtSpectrum) -> float:
    """S_V = -Σ λ_i ln λ_i, with 0 ln 0 = 0."""
    return float(entr(sp.lambdas).sum())


def linear_entropy(sp: SchmidtSpectrum) -> float:
    """S_R = 1 - Σ λ_i²."""
    return float(1.0 - (sp.lambdas**2).sum())


def partial_transpose(
    rho: DensityOperator, dims: Optional[Tuple[int, int]] = None, subsystem: int = 2
) -> ComplexMatrix:
    """Transposes the indices of one subsystem: ((a, b), (c, d)) ↦ ((a, d), (c, b)) for subsystem 2.

    Raises:
        DimensionMismatch: If N·M differs from the dimension of ρ.
    """
    n, m = dims if dims is not None else rho.dims
    if n * m != rho.dim:
        raise DimensionMismatch(f"dims ({n}, {m}) do not factor the {rho.dim}-dimensional density operator")
    tensor = rho.matrix.reshape(n, m, n, m)
    if subsystem == 2:
        transposed = tensor.transpose(0, 3, 2, 1)
    elif subsystem == 1:
        transposed = tensor.transpose(2, 1, 0, 3)
    else:
        raise InvalidParameterValue(f"subsystem must be 1 or 2, got {subsystem}")
    return transposed.reshape(n * m, n * m)


def trace_norm_of_partial_transpose(
    rho: DensityOperator,
    dims: Optional[Tuple[int, int]] = None,
    subsystem: int = 2,
    backend: EigenBackend = EigenBackend.JACOBI,
) -> float:
    """‖ρ^T‖₁ = Σ |eigenvalues of ρ^T|."""
    spectrum = hermitian_eig(partial_transpose(rho, dims, subsystem), backend=backend)
    return float(np_abs(spectrum.eigenvalues).sum())


def log_negativity(
    rho: DensityOperator, dims: Optional[Tuple[int, int]] = None, backend: EigenBackend = EigenBackend.JACOBI
) -> float:
    """E_N = ln ‖ρ^T₂‖₁; zero for separable states, and never below zero beyond roundoff."""
    return float(log(trace_norm_of_partial_transpose(rho, dims, backend=backend)))


def negativity(
    rho: DensityOperator, dims: Optional[Tuple[int, int]] = None, backend: EigenBackend = EigenBackend.JACOBI
) -> float:
    """(‖ρ^T₂‖₁ - 1)/2, the total magnitude of the negative eigenvalues of ρ^T₂."""
    return (trace_norm_of_partial_transpose(rho, dims, backend=backend) - 1.0) / 2.0


def measure_series_pure(
    params: CoupledTopParams,
    initial: BipartiteState,
    n_max: int,
    stride: int = 1,
    backend: EigenBackend = EigenBackend.JACOBI,
) -> Dict[MeasureKind, MeasureSeries]:
    """Evolves a pure state for n_max kicks, recording S_V and S_R at kick 0 and every `stride` kicks after it.

    Returns:
        series (Dict[MeasureKind, MeasureSeries]): The `VON_NEUMANN` and `LINEAR` series.
    """
    _check_run_length(n_max, stride)
    kicks, entropies, linear = [], [], []
    for state in iterate_pure(initial, params, n_max):
        if (state.kick_count - initial.kick_count) % stride:
            continue
        spectrum = schmidt_spectrum(state, backend)
        kicks.append(state.kick_count)
        entropies.append(von_neumann(spectrum))
        linear.append(linear_entropy(spectrum))
    logger.debug(f"pure run {params} finished: S_V({kicks[-1]}) = {entropies[-1]:.6f}")
    kick_array = asarray(kicks, dtype=int64)
    return {
        MeasureKind.VON_NEUMANN: MeasureSeries(MeasureKind.VON_NEUMANN, kick_array, asarray(entropies)),
        MeasureKind.LINEAR: MeasureSeries(MeasureKind.LINEAR, kick_array.copy(), asarray(linear)),
    }


def measure_series_mixed(
    params: CoupledTopParams,
    initial: DensityOperator,
    n_max: int,
    stride: int = 1,
    backend: EigenBackend = EigenBackend.JACOBI,
) -> MeasureSeries:
    """Evolves a density operator for n_max kicks, recording E_N at kick 0 and every `stride` kicks after it."""
    _check_run_length(n_max, stride)
    kicks, values = [], []
    for rho in iterate_density(initial, params, n_max):
        if (rho.kick_count - initial.kick_count) % stride:
            continue
        kicks.append(rho.kick_count)
        values.append(log_negativity(rho, backend=backend))
        logger.debug(f"mixed run {params}: E_N({rho.kick_count}) = {values[-1]:.6f}")
    return MeasureSeries(MeasureKind.LOG_NEGATIVITY, asarray(kicks, dtype=int64), asarray(values))


def _check_run_length(n_max: int, stride: int) -> None:
    if n_max < 1:
        raise InvalidParameterValue(f"n_max must be at least 1, got {n_max}")
    if stride < 1:
        raise InvalidParameterValue(f"stride must be at least 1, got {stride}")


def time_average(series: MeasureSeries, n_lo: int, n_hi: int) -> float:
    """Mean of the series over kicks n_lo ≤ n ≤ n_hi.

    Raises:
        EmptyInput: If no recorded kick falls in the window.
    """
    mask = (series.kicks >= n_lo) & (series.kicks <= n_hi)
    if not mask.any():
        raise EmptyInput(f"no {series.kind.value} values recorded for kicks in [{n_lo}, {n_hi}]")
    return float(series.values[mask].mean())


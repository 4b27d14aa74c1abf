"""SU(2) coherent states and the pure and mixed initial states of the coupled tops."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import math

from numpy import arange, complex128, exp, kron, outer
from numpy.linalg import norm
from scipy.special import xlogy

from coupledtops.dynamics.states import BipartiteState, DensityOperator
from coupledtops.exceptions import WeightOutOfRange
from coupledtops.numkernel import log_factorials
from coupledtops.spin.basis import CoherentParams, SpinBasis, StateVector


def coherent_state(basis: SpinBasis, p: CoherentParams) -> StateVector:
    """The SU(2) coherent state |θ₀, φ₀⟩.

    ⟨j, m|θ₀, φ₀⟩ = cos(θ₀/2)^(j+m) sin(θ₀/2)^(j-m) e^{i(j-m)φ₀} √C(2j, j+m), which equals
    (1 + |γ|²)^(-j) γ^(j-m) √C(2j, j+m) with γ = e^{iφ₀} tan(θ₀/2). Magnitudes are assembled in log space so that
    nothing overflows at large j.
    """
    two_j = basis.two_j
    lower = arange(basis.dim)  # j - m
    upper = two_j - lower  # j + m
    lf = log_factorials(two_j)
    log_binomial = lf[two_j] - lf[upper] - lf[lower]
    log_magnitude = (
        xlogy(upper, math.cos(p.theta0 / 2)) + xlogy(lower, math.sin(p.theta0 / 2)) + log_binomial / 2
    )
    amplitudes = exp(log_magnitude) * exp(1j * lower * p.phi0)
    amplitudes = amplitudes.astype(complex128) / norm(amplitudes)
    return StateVector(basis=basis, amplitudes=amplitudes)


def product_initial_state(basis: SpinBasis, p1: CoherentParams, p2: CoherentParams) -> BipartiteState:
    """|ψ(0)⟩ = |θ₀⁽¹⁾, φ₀⁽¹⁾⟩ |θ₀⁽²⁾, φ₀⁽²⁾⟩ as an N×N amplitude grid."""
    grid = outer(coherent_state(basis, p1).amplitudes, coherent_state(basis, p2).amplitudes)
    return BipartiteState(grid=grid, kick_count=0)


def mixed_initial_state(
    basis: SpinBasis, pa: CoherentParams, pb: CoherentParams, weight: float, p2: CoherentParams
) -> DensityOperator:
    """ρ(0) = [p |a⟩⟨a| + (1 - p) |b⟩⟨b|] ⊗ |ψ₂⟩⟨ψ₂| with coherent states |a⟩, |b⟩ on the first top and |ψ₂⟩ on
    the second.

    Raises:
        WeightOutOfRange: If the weight p is outside [0, 1].
    """
    if not 0.0 <= weight <= 1.0:
        raise WeightOutOfRange(f"p = {weight}")
    a = coherent_state(basis, pa).amplitudes
    b = coherent_state(basis, pb).amplitudes
    psi2 = coherent_state(basis, p2).amplitudes
    rho1 = weight * outer(a, a.conj()) + (1.0 - weight) * outer(b, b.conj())
    rho = kron(rho1, outer(psi2, psi2.conj()))
    return DensityOperator(matrix=(rho + rho.conj().T) / 2, dims=(basis.dim, basis.dim), kick_count=0)

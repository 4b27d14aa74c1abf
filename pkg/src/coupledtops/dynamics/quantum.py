"""Builds the coupled-top Floquet step U_T = U₁₂ (U₁ ⊗ U₂) and applies it to pure states and density operators.

Each single-top factor is U_i = exp(-i (k_i/2j) J_z²) exp(-i (π/2) J_y), the rotation acting first. The coupling
U₁₂ = exp(-i (ε/j) J_z₁ J_z₂) is diagonal in the product basis, so states are evolved factor by factor and the d×d
matrix is only formed on request (`materialize_ut`).
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import logging
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterator, List, Optional

from numpy import complex128, einsum, exp, eye, kron, outer
from numpy.typing import NDArray

from coupledtops.dynamics.states import BipartiteState, DensityOperator
from coupledtops.exceptions import DimensionMismatch, DimensionTooLarge, InvalidParameterValue
from coupledtops.numkernel import ComplexMatrix, hermitian_eig
from coupledtops.settings import EigenBackend
from coupledtops.spin.basis import SpinBasis
from coupledtops.spin.operators import rotation_y_half, rotation_y_quarter

logger = logging.getLogger(__name__)

MATERIALIZE_MAX_DIM = 4096
SYMMETRY_TOLERANCE = 1e-8


@dataclass(frozen=True)
class CoupledTopParams:
    """Parameters of the coupled-top Floquet operator."""

    j: float
    """Spin of each top."""
    k1: float
    """Torsion strength of top 1."""
    eps: float
    """Coupling strength ε."""
    k2: Optional[float] = None
    """Torsion strength of top 2. Defaults to k1."""

    def __post_init__(self) -> None:
        if self.k2 is None:
            object.__setattr__(self, "k2", self.k1)
        SpinBasis(self.j)
        if self.j <= 0:
            raise InvalidParameterValue(f"the Floquet operator needs j > 0, got {self.j}")
        for name in ("k1", "k2", "eps"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameterValue(f"{name} must be finite, got {getattr(self, name)}")

    @property
    def basis(self) -> SpinBasis:
        return SpinBasis(self.j)

    @property
    def torsion2(self) -> float:
        """k2 as a float (it is never None after construction)."""
        return float(self.k2 if self.k2 is not None else self.k1)


@dataclass(frozen=True, eq=False)
class FloquetFactors:
    """The factors of U_T for one parameter set."""

    top1: ComplexMatrix
    """U₁, N×N."""
    top2: ComplexMatrix
    """U₂, N×N."""
    coupling: NDArray[complex128]
    """Coupling phases e^{-i(ε/j) m_a m_b} on the N×N composite grid."""


def build_single_floquet(basis: SpinBasis, k: float) -> ComplexMatrix:
    """U = diag(e^{-i(k/2j)m²}) · exp(-i (π/2) J_y): the kick applied after the rotation."""
    if basis.j <= 0:
        raise InvalidParameterValue(f"the kick exp(-i (k/2j) J_z²) needs j > 0, got j={basis.j}")
    m = basis.m_values
    kick = exp(-1j * k * m * m / (2 * basis.j))
    return kick[:, None] * rotation_y_quarter(basis)


def coupling_phases(basis: SpinBasis, eps: float) -> NDArray[complex128]:
    m = basis.m_values
    return exp(-1j * eps * outer(m, m) / basis.j)


@lru_cache(maxsize=32)
def floquet_factors(p: CoupledTopParams) -> FloquetFactors:
    basis = p.basis
    factors = FloquetFactors(
        top1=build_single_floquet(basis, p.k1),
        top2=build_single_floquet(basis, p.torsion2),
        coupling=coupling_phases(basis, p.eps),
    )
    for array in (factors.top1, factors.top2, factors.coupling):
        array.setflags(write=False)
    return factors


def _check_dims(n1: int, n2: int, p: CoupledTopParams) -> None:
    dim = p.basis.dim
    if (n1, n2) != (dim, dim):
        raise DimensionMismatch(f"state dims ({n1}, {n2}) do not match 2j + 1 = {dim} for j = {p.j}")


def floquet_step_pure(s: BipartiteState, p: CoupledTopParams) -> BipartiteState:
    """One kick: ψ ← U₁ ψ U₂ᵀ, then ψ[a, b] ← e^{-i(ε/j) m_a m_b} ψ[a, b].

    Raises:
        DimensionMismatch: If the grid is not (2j+1)×(2j+1).
    """
    _check_dims(s.n1, s.n2, p)
    factors = floquet_factors(p)
    grid = (factors.top1 @ s.grid @ factors.top2.T) * factors.coupling
    return BipartiteState(grid=grid, kick_count=s.kick_count + 1)


def floquet_step_density(rho: DensityOperator, p: CoupledTopParams) -> DensityOperator:
    """One kick of ρ ← U_T ρ U_T†, applied factor by factor on the four composite indices.

    Raises:
        DimensionMismatch: If ρ is not (2j+1)²×(2j+1)².
    """
    _check_dims(rho.dims[0], rho.dims[1], p)
    n = p.basis.dim
    factors = floquet_factors(p)
    tensor = rho.matrix.reshape(n, n, n, n)
    tensor = einsum("ia,abcd->ibcd", factors.top1, tensor)
    tensor = einsum("jb,ibcd->ijcd", factors.top2, tensor)
    tensor = einsum("ijcd,kc->ijkd", tensor, factors.top1.conj())
    tensor = einsum("ijkd,ld->ijkl", tensor, factors.top2.conj())
    tensor = tensor * factors.coupling[:, :, None, None] * factors.coupling.conj()[None, None, :, :]
    matrix = tensor.reshape(n * n, n * n)
    return DensityOperator(matrix=(matrix + matrix.conj().T) / 2, dims=rho.dims, kick_count=rho.kick_count + 1)


def iterate_pure(initial: BipartiteState, p: CoupledTopParams, n_max: int) -> Iterator[BipartiteState]:
    """Yields the initial state and then the state after each of n_max kicks."""
    state = initial
    yield state
    for _ in range(n_max):
        state = floquet_step_pure(state, p)
        yield state


def uncoupled_burn_in(initial: BipartiteState, p: CoupledTopParams, kicks: int) -> BipartiteState:
    """Evolves the state for `kicks` kicks of the uncoupled tops (ε = 0) and restarts the kick count at 0.

    Both tops stay in a product state, so a coherent packet can spread over the chaotic sea before the coupling is
    switched on.

    Raises:
        InvalidParameterValue: If kicks is negative.
    """
    if kicks < 0:
        raise InvalidParameterValue(f"the uncoupled burn-in needs kicks >= 0, got {kicks}")
    uncoupled = replace(p, eps=0.0)
    state = initial
    for _ in range(kicks):
        state = floquet_step_pure(state, uncoupled)
    return BipartiteState(grid=state.grid, kick_count=0)


def iterate_density(initial: DensityOperator, p: CoupledTopParams, n_max: int) -> Iterator[DensityOperator]:
    """Yields the initial density operator and then the density operator after each of n_max kicks."""
    rho = initial
    yield rho
    for _ in range(n_max):
        rho = floquet_step_density(rho, p)
        yield rho


def materialize_ut(p: CoupledTopParams) -> ComplexMatrix:
    """The explicit d×d Floquet matrix, for spectral statistics.

    Raises:
        DimensionTooLarge: If d = (2j+1)² exceeds 4096.
    """
    dim = p.basis.dim**2
    if dim > MATERIALIZE_MAX_DIM:
        raise DimensionTooLarge(f"d = {dim} exceeds the {MATERIALIZE_MAX_DIM} limit for an explicit Floquet matrix")
    factors = floquet_factors(p)
    return factors.coupling.reshape(-1)[:, None] * kron(factors.top1, factors.top2)


def parity_operator(basis: SpinBasis) -> ComplexMatrix:
    """Π = R_y(π) ⊗ R_y(π), which commutes with U_T for all k1, k2 and ε."""
    half_turn = rotation_y_half(basis)
    return kron(half_turn, half_turn)


def swap_operator(basis: SpinBasis) -> ComplexMatrix:
    """S |a, b⟩ = |b, a⟩, which commutes with U_T when k1 = k2."""
    n = basis.dim
    identity = eye(n)
    swap = einsum("ad,bc->abcd", identity, identity)
    return swap.reshape(n * n, n * n).astype(complex128)


def _split_by_sign(operator: ComplexMatrix, backend: EigenBackend) -> List[ComplexMatrix]:
    spectrum = hermitian_eig(operator, backend=backend)
    values = spectrum.eigenvalues
    if (abs(abs(values) - 1.0) > SYMMETRY_TOLERANCE).any():
        raise InvalidParameterValue("symmetry operator eigenvalues must be ±1")
    return [spectrum.eigenvectors[:, values < 0], spectrum.eigenvectors[:, values > 0]]


def symmetry_sector_bases(p: CoupledTopParams, backend: EigenBackend = EigenBackend.JACOBI) -> List[ComplexMatrix]:
    """Orthonormal bases (as d×d_s column blocks) of the invariant subspaces of U_T.

    U_T always commutes with the joint parity Π = R_y(π) ⊗ R_y(π), and with the swap of the two tops when k1 = k2.
    Sectors are returned in a fixed order; empty sectors are dropped.
    """
    basis = p.basis
    sectors = _split_by_sign(parity_operator(basis), backend)
    if p.k1 == p.torsion2:
        swap = swap_operator(basis)
        refined = []
        for block in sectors:
            if block.shape[1] == 0:
                continue
            inner = _split_by_sign(block.conj().T @ swap @ block, backend)
            refined.extend(block @ part for part in inner)
        sectors = refined
    return [block for block in sectors if block.shape[1] > 0]

"""Seeded random matrices and states for unit testing."""

from typing import Tuple

from numpy import complex128, eye, sqrt
from numpy.linalg import norm
from numpy.random import Generator, default_rng
from scipy.stats import unitary_group

from coupledtops.dynamics import BipartiteState, CoupledTopParams, DensityOperator
from coupledtops.numkernel import ComplexMatrix
from coupledtops.spin import CoherentParams, mixed_initial_state, product_initial_state
from tests.configuration import MIXTURE_POINT_B, PACKET, RANDOM_SEED


def create_rng(stream: int = 0) -> Generator:
    """An independent, reproducible generator for each stream number."""
    return default_rng([RANDOM_SEED, stream])


def random_complex_matrix(rows: int, cols: int, rng: Generator) -> ComplexMatrix:
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))).astype(complex128)


def random_hermitian(n: int, rng: Generator) -> ComplexMatrix:
    a = random_complex_matrix(n, n, rng)
    return (a + a.conj().T) / 2


def random_unitary(n: int, rng: Generator) -> ComplexMatrix:
    """Haar-random unitary."""
    return unitary_group.rvs(n, random_state=rng).astype(complex128)


def random_bipartite_state(n1: int, n2: int, rng: Generator) -> BipartiteState:
    grid = random_complex_matrix(n1, n2, rng)
    return BipartiteState(grid=grid / norm(grid))


def bell_state() -> BipartiteState:
    """(|00⟩ + |11⟩)/√2."""
    return BipartiteState(grid=eye(2, dtype=complex128) / sqrt(2.0))


def random_density_operator(n1: int, n2: int, rank: int, rng: Generator) -> DensityOperator:
    """An equal-weight mixture of `rank` random pure states."""
    vectors = [random_bipartite_state(n1, n2, rng).vector() for _ in range(rank)]
    matrix = sum(v[:, None] * v.conj()[None, :] for v in vectors) / rank
    return DensityOperator(matrix=(matrix + matrix.conj().T) / 2, dims=(n1, n2))


def packet_product_state(params: CoupledTopParams, packet: Tuple[float, float] = PACKET) -> BipartiteState:
    """Both tops in the coherent state centred on `packet`."""
    angles = CoherentParams(*packet)
    return product_initial_state(params.basis, angles, angles)


def packet_mixed_state(params: CoupledTopParams, weight: float = 0.5) -> DensityOperator:
    """The two-point mixture on top 1 with top 2 in the default packet."""
    point_a = CoherentParams(*PACKET)
    return mixed_initial_state(params.basis, point_a, CoherentParams(*MIXTURE_POINT_B), weight, point_a)

"""The classical limit of the kicked tops: the single-top and coupled-top maps on the unit sphere, and phase-space
sections in (θ, φ) with X = sin θ cos φ, Y = sin θ sin φ, Z = cos θ."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from numpy import (
    arange,
    arccos,
    asarray,
    arctan2,
    clip,
    concatenate,
    cos,
    empty,
    float64,
    int64,
    meshgrid,
    pi,
    repeat,
    sin,
    sqrt,
    tile,
    unique,
    where,
)
from numpy.typing import NDArray

from coupledtops.exceptions import InvalidParameterValue

SPHERE_TOLERANCE = 1e-12
RENORMALISATION_INTERVAL = 1024
DEFAULT_SECTION_GRID = (20, 20)


@dataclass(frozen=True)
class ClassicalTopState:
    """Rescaled angular momentum (X, Y, Z) = J/j of one top, on the unit sphere."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        deviation = abs(self.x * self.x + self.y * self.y + self.z * self.z - 1.0)
        if deviation > SPHERE_TOLERANCE:
            raise InvalidParameterValue(f"classical top state is off the unit sphere by {deviation:.3e}")

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "ClassicalTopState":
        return cls(math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta))

    @property
    def angles(self) -> Tuple[float, float]:
        """(θ, φ) with θ ∈ [0, π] and φ ∈ (-π, π]."""
        theta = math.acos(max(-1.0, min(1.0, self.z)))
        phi = math.atan2(self.y, self.x)
        return theta, (math.pi if phi == -math.pi else phi)

    def normalised(self) -> "ClassicalTopState":
        r = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        return ClassicalTopState(self.x / r, self.y / r, self.z / r)


@dataclass(frozen=True)
class ClassicalPairState:
    top1: ClassicalTopState
    top2: ClassicalTopState


def _torsion(x: float, y: float, z: float, angle: float) -> Tuple[float, float, float]:
    c = math.cos(angle)
    s = math.sin(angle)
    return z * c + y * s, -z * s + y * c, -x


def single_map_step(s: ClassicalTopState, k: float) -> ClassicalTopState:
    """X' = Z cos kX + Y sin kX, Y' = -Z sin kX + Y cos kX, Z' = -X."""
    return ClassicalTopState(*_torsion(s.x, s.y, s.z, k * s.x))


def coupled_map_step(s: ClassicalPairState, k: float, eps: float, k2: Optional[float] = None) -> ClassicalPairState:
    """Each top is twisted by Δ₁₂ = k X₁ + ε X₂ and Δ₂₁ = k X₂ + ε X₁ respectively (k2 replaces k for top 2 when
    given). With ε = 0 this is exactly two independent `single_map_step`s."""
    one, two = s.top1, s.top2
    torsion2 = k if k2 is None else k2
    return ClassicalPairState(
        top1=ClassicalTopState(*_torsion(one.x, one.y, one.z, k * one.x + eps * two.x)),
        top2=ClassicalTopState(*_torsion(two.x, two.y, two.z, torsion2 * two.x + eps * one.x)),
    )


def iterate_single(s: ClassicalTopState, k: float, steps: int) -> ClassicalTopState:
    """Applies `single_map_step` `steps` times, projecting back onto the sphere every 1024 steps."""
    x, y, z = s.x, s.y, s.z
    for step in range(1, steps + 1):
        x, y, z = _torsion(x, y, z, k * x)
        if step % RENORMALISATION_INTERVAL == 0:
            r = math.sqrt(x * x + y * y + z * z)
            x, y, z = x / r, y / r, z / r
    return ClassicalTopState(x, y, z)


def iterate_coupled(
    s: ClassicalPairState, k: float, eps: float, steps: int, k2: Optional[float] = None
) -> ClassicalPairState:
    state = s
    for step in range(1, steps + 1):
        state = coupled_map_step(state, k, eps, k2)
        if step % RENORMALISATION_INTERVAL == 0:
            state = ClassicalPairState(state.top1.normalised(), state.top2.normalised())
    return state


@dataclass(frozen=True)
class SectionGrid:
    """Initial conditions of a phase-space section: a grid uniform in (cos θ, φ), which samples the sphere with
    uniform measure, plus any listed (θ, φ) points."""

    n_cos_theta: int = DEFAULT_SECTION_GRID[0]
    """Number of cos θ values (cell centres on [-1, 1]). Zero disables the grid."""
    n_phi: int = DEFAULT_SECTION_GRID[1]
    """Number of φ values (cell centres on (-π, π])."""
    points: Tuple[Tuple[float, float], ...] = field(default_factory=tuple)
    """Extra initial conditions, as (θ, φ) pairs, appended after the grid."""

    def initial_angles(self) -> Tuple[NDArray[float64], NDArray[float64]]:
        cos_theta = -1.0 + (arange(self.n_cos_theta) + 0.5) * 2.0 / max(self.n_cos_theta, 1)
        phi = -pi + (arange(self.n_phi) + 0.5) * 2.0 * pi / max(self.n_phi, 1)
        grid_cos, grid_phi = meshgrid(cos_theta, phi, indexing="ij")
        listed = list(self.points)
        theta = concatenate([arccos(grid_cos.ravel()), [t for t, _ in listed]]).astype(float64)
        phis = concatenate([grid_phi.ravel(), [p for _, p in listed]]).astype(float64)
        return theta, phis


@dataclass(frozen=True, eq=False)
class SectionPoints:
    """Points of a phase-space section, in initial-condition order then iterate order."""

    orbit_id: NDArray[int64]
    iteration: NDArray[int64]
    theta: NDArray[float64]
    phi: NDArray[float64]


def _to_angles(
    x: NDArray[float64], y: NDArray[float64], z: NDArray[float64]
) -> Tuple[NDArray[float64], NDArray[float64]]:
    phi = arctan2(y, x)
    return arccos(clip(z, -1.0, 1.0)), where(phi == -pi, pi, phi)


def phase_space_section(k: float, grid: SectionGrid, iters: int) -> SectionPoints:
    """Iterates the single-top map from every initial condition of `grid` and records (θ = arccos Z,
    φ = atan2(Y, X)) for iterations 0..iters. All orbits are advanced together as arrays; the output is
    deterministic given (k, grid, iters).
    """
    if iters < 0:
        raise InvalidParameterValue(f"iteration count must be nonnegative, got {iters}")
    theta0, phi0 = grid.initial_angles()
    n_orbits = theta0.size
    x, y, z = sin(theta0) * cos(phi0), sin(theta0) * sin(phi0), cos(theta0)
    thetas = empty((n_orbits, iters + 1), dtype=float64)
    phis = empty((n_orbits, iters + 1), dtype=float64)
    thetas[:, 0], phis[:, 0] = _to_angles(x, y, z)
    for step in range(1, iters + 1):
        angle = k * x
        c, s = cos(angle), sin(angle)
        x, y, z = z * c + y * s, -z * s + y * c, -x
        if step % RENORMALISATION_INTERVAL == 0:
            r = sqrt(x * x + y * y + z * z)
            x, y, z = x / r, y / r, z / r
        thetas[:, step], phis[:, step] = _to_angles(x, y, z)
    return SectionPoints(
        orbit_id=repeat(arange(n_orbits, dtype=int64), iters + 1),
        iteration=tile(arange(iters + 1, dtype=int64), n_orbits),
        theta=thetas.ravel(),
        phi=phis.ravel(),
    )


def sphere_coverage(theta: Sequence[float], phi: Sequence[float], bins: int = 20) -> float:
    """Fraction of the bins × bins equal-area cells (uniform in cos θ and φ) visited by the given points."""
    theta_values = asarray(theta, dtype=float64)
    phi_values = asarray(phi, dtype=float64)
    cos_index = clip(((1.0 - cos(theta_values)) / 2.0 * bins).astype(int64), 0, bins - 1)
    phi_index = clip(((pi + phi_values) / (2 * pi) * bins).astype(int64), 0, bins - 1)
    return float(unique(cos_index * bins + phi_index).size) / (bins * bins)


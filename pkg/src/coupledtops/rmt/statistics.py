"""Histogram statistics tested against random-matrix predictions: pooled reduced-density-matrix spectra against the
Marchenko-Pastur-type density, and unfolded eigenangle spacings against the Wigner surmise and the Poisson law."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from numpy import asarray, clip, concatenate, diff, exp, float64, histogram, int64, linspace, pi, sort
from numpy import sum as np_sum
from numpy.linalg import norm
from numpy.typing import ArrayLike, NDArray

from coupledtops.dynamics import BipartiteState, CoupledTopParams, materialize_ut
from coupledtops.entanglement import schmidt_spectrum
from coupledtops.exceptions import DimensionMismatch, EmptyInput, InvalidParameterValue
from coupledtops.numkernel import ComplexMatrix, unitary_eigenangles, unitary_eigensystem
from coupledtops.rmt.density import MpDensityParams, mp_bin_probabilities
from coupledtops.settings import EigenBackend

logger = logging.getLogger(__name__)

DEFAULT_RDM_BINS = 24
RDM_RANGE_FACTOR = 1.2
DEFAULT_SPACING_BINS = 10
DEFAULT_SPACING_MAX = 3.0
MIN_EXPECTED_COUNT = 5.0


@dataclass(frozen=True)
class ChiSquare:
    statistic: float
    """Σ (observed - expected)² / expected over the bins used."""
    bins_used: int
    """Number of bins whose expected count reached the minimum."""

    @property
    def per_bin(self) -> float:
        return self.statistic / self.bins_used if self.bins_used else math.inf


def chi_square(observed: ArrayLike, expected: ArrayLike, min_expected: float = MIN_EXPECTED_COUNT) -> ChiSquare:
    """Pearson's statistic over the bins whose expected count is at least `min_expected`."""
    counts = asarray(observed, dtype=float64)
    theory = asarray(expected, dtype=float64)
    if counts.shape != theory.shape:
        raise DimensionMismatch(f"observed {counts.shape} and expected {theory.shape} counts differ in shape")
    used = theory >= min_expected
    statistic = float(np_sum((counts[used] - theory[used]) ** 2 / theory[used]))
    return ChiSquare(statistic=statistic, bins_used=int(used.sum()))


@dataclass(frozen=True, eq=False)
class Histogram:
    """Counts of pooled reduced-density-matrix eigenvalues with the expected count of each bin under the
    Marchenko-Pastur-type density."""

    edges: NDArray[float64]
    """Bin edges, equal-width over [0, 1.2 λ_max]."""
    counts: NDArray[int64]
    """Eigenvalues per bin. Values above the last edge are counted in the top bin."""
    expected: NDArray[float64]
    """Expected count per bin: the total count times the density's mass in the bin."""
    params: MpDensityParams
    outside_fraction: float
    """Fraction of eigenvalues outside [λ_min, λ_max]."""

    @property
    def bin_low(self) -> NDArray[float64]:
        return self.edges[:-1]

    @property
    def bin_high(self) -> NDArray[float64]:
        return self.edges[1:]

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def chi_square(self, min_expected: float = MIN_EXPECTED_COUNT) -> ChiSquare:
        return chi_square(self.counts, self.expected, min_expected)


@dataclass(frozen=True, eq=False)
class SpacingHistogram:
    """Counts of unfolded nearest-neighbour eigenangle spacings, with the expected count of each bin under the GOE
    Wigner surmise and under the Poisson law. The last bin collects every spacing beyond its lower edge."""

    edges: NDArray[float64]
    counts: NDArray[int64]
    wigner_expected: NDArray[float64]
    poisson_expected: NDArray[float64]
    spacings: NDArray[float64] = field(repr=False)
    """All unfolded spacings, pooled over sectors."""

    @property
    def mean_spacing(self) -> float:
        return float(self.spacings.mean())

    def chi_square_wigner(self, min_expected: float = MIN_EXPECTED_COUNT) -> ChiSquare:
        return chi_square(self.counts, self.wigner_expected, min_expected)

    def chi_square_poisson(self, min_expected: float = MIN_EXPECTED_COUNT) -> ChiSquare:
        return chi_square(self.counts, self.poisson_expected, min_expected)


def _clipped_histogram(values: NDArray[float64], edges: NDArray[float64]) -> NDArray[int64]:
    counts, _ = histogram(clip(values, edges[0], edges[-1]), bins=edges)
    return counts.astype(int64)


def rdm_eigenvalue_histogram(
    states: Iterable[BipartiteState],
    bins: int = DEFAULT_RDM_BINS,
    backend: EigenBackend = EigenBackend.JACOBI,
) -> Histogram:
    """Pools the Schmidt spectra of `states` into `bins` equal-width bins over [0, 1.2 λ_max].

    Raises:
        EmptyInput: If no states are given.
        DimensionMismatch: If the states do not all share one pair of subsystem dimensions.
    """
    if bins < 1:
        raise InvalidParameterValue(f"bin count must be at least 1, got {bins}")
    spectra: List[NDArray[float64]] = []
    dims: Optional[Tuple[int, int]] = None
    for state in states:
        if dims is None:
            dims = (state.n1, state.n2)
        elif (state.n1, state.n2) != dims:
            raise DimensionMismatch(f"state of dims ({state.n1}, {state.n2}) pooled with states of dims {dims}")
        spectra.append(schmidt_spectrum(state, backend).lambdas)
    if dims is None:
        raise EmptyInput("no states to histogram")

    params = MpDensityParams.from_dims(*dims)
    values = concatenate(spectra)
    edges = linspace(0.0, RDM_RANGE_FACTOR * params.lambda_max, bins + 1)
    counts = _clipped_histogram(values, edges)
    expected = values.size * mp_bin_probabilities(params, edges)
    outside = float(((values < params.lambda_min) | (values > params.lambda_max)).mean())
    logger.debug(f"pooled {len(spectra)} spectra of dims {dims}: {100 * outside:.2f}% outside the support")
    return Histogram(edges=edges, counts=counts, expected=expected, params=params, outside_fraction=outside)


def eigenstate_ensemble(p: CoupledTopParams, backend: EigenBackend = EigenBackend.JACOBI) -> List[BipartiteState]:
    """The eigenvectors of the explicit Floquet matrix, each reshaped into a bipartite amplitude grid.

    Raises:
        DimensionTooLarge: If (2j+1)² exceeds the explicit-matrix limit.
    """
    n = p.basis.dim
    _, vectors = unitary_eigensystem(materialize_ut(p), backend)
    return [BipartiteState(grid=vectors[:, i].reshape(n, n) / norm(vectors[:, i])) for i in range(vectors.shape[1])]


def unfolded_spacings(angles: ArrayLike) -> NDArray[float64]:
    """Nearest-neighbour spacings of eigenangles on the circle, scaled by dim/2π to unit mean.

    The spacing across ±π is included, so the spacings sum to exactly dim and their mean is 1.

    Raises:
        EmptyInput: If fewer than two angles are given.
    """
    theta = sort(asarray(angles, dtype=float64))
    if theta.size < 2:
        raise EmptyInput(f"spacings need at least two eigenangles, got {theta.size}")
    gaps = concatenate([diff(theta), [theta[0] + 2 * pi - theta[-1]]])
    return gaps * theta.size / (2 * pi)


def wigner_surmise(s: ArrayLike) -> NDArray[float64]:
    """GOE Wigner surmise P(s) = (πs/2) e^{-πs²/4}."""
    values = asarray(s, dtype=float64)
    return 0.5 * pi * values * exp(-0.25 * pi * values**2)


def poisson_spacing(s: ArrayLike) -> NDArray[float64]:
    """Spacing density e^{-s} of uncorrelated levels."""
    return exp(-asarray(s, dtype=float64))


def _wigner_cdf(s: NDArray[float64]) -> NDArray[float64]:
    return 1.0 - exp(-0.25 * pi * s**2)


def _poisson_cdf(s: NDArray[float64]) -> NDArray[float64]:
    return 1.0 - exp(-s)


def _expected_counts(cdf_at_edges: NDArray[float64], total: int) -> NDArray[float64]:
    masses = diff(cdf_at_edges)
    masses[-1] = 1.0 - cdf_at_edges[-2]
    return total * masses


def spacing_distribution(
    u: ComplexMatrix,
    bins: int = DEFAULT_SPACING_BINS,
    s_max: float = DEFAULT_SPACING_MAX,
    sectors: Optional[Sequence[ComplexMatrix]] = None,
    backend: EigenBackend = EigenBackend.JACOBI,
) -> SpacingHistogram:
    """Histogram of unfolded nearest-neighbour eigenangle spacings of a unitary matrix.

    Args:
        u: The unitary, at most 4096×4096.
        bins: Number of equal-width bins on [0, s_max]; the last one also takes every larger spacing.
        s_max: Upper edge of the binned range.
        sectors: Orthonormal column blocks spanning invariant subspaces of u (see `symmetry_sector_bases`). Each
            block's spectrum is unfolded on its own and the spacings are pooled; blocks of dimension below 2 are
            skipped. Without sectors the full spectrum is unfolded at once.
        backend: Which eigensolver to use.
    Returns:
        histogram (SpacingHistogram): Observed and expected counts.
    Raises:
        NotUnitary: If u (or a projected block) is not unitary.
        EmptyInput: If no spacings result.
    """
    if bins < 1 or not s_max > 0:
        raise InvalidParameterValue(f"need bins >= 1 and s_max > 0, got bins={bins}, s_max={s_max}")
    if sectors is None:
        spacings = unfolded_spacings(unitary_eigenangles(u, backend))
    else:
        pooled = []
        for block in sectors:
            if block.shape[1] < 2:
                continue
            pooled.append(unfolded_spacings(unitary_eigenangles(block.conj().T @ u @ block, backend)))
        if not pooled:
            raise EmptyInput("no symmetry sector of dimension 2 or more")
        spacings = concatenate(pooled)

    edges = linspace(0.0, s_max, bins + 1)
    counts = _clipped_histogram(spacings, edges)
    return SpacingHistogram(
        edges=edges,
        counts=counts,
        wigner_expected=_expected_counts(_wigner_cdf(edges), spacings.size),
        poisson_expected=_expected_counts(_poisson_cdf(edges), spacings.size),
        spacings=spacings,
    )

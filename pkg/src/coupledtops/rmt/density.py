"""The Marchenko-Pastur-type density of reduced-density-matrix eigenvalues for random bipartite pure states, and the
entropy bound it implies."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import logging
import math
from dataclasses import dataclass, field

from numpy import asarray, float64, zeros
from numpy.typing import ArrayLike, NDArray
from scipy.integrate import quad

from coupledtops.exceptions import DomainError, InvalidParameterValue
from coupledtops.numkernel import hyp3f2

logger = logging.getLogger(__name__)

QUADRATURE_TOLERANCE = 1e-12
QUADRATURE_LIMIT = 200


@dataclass(frozen=True)
class MpDensityParams:
    """Eigenvalue density of the N×N reduced density matrix of a random pure state on an N×M space."""

    N: int
    """Dimension of the smaller subsystem."""
    Q: float
    """Ratio M/N ≥ 1 of the larger to the smaller subsystem dimension."""
    lambda_min: float = field(init=False)
    """Lower support edge (1/N)(1 + 1/Q - 2/√Q)."""
    lambda_max: float = field(init=False)
    """Upper support edge (1/N)(1 + 1/Q + 2/√Q)."""

    def __post_init__(self) -> None:
        if self.N < 1:
            raise InvalidParameterValue(f"subsystem dimension must be at least 1, got {self.N}")
        if not self.Q >= 1.0 or not math.isfinite(self.Q):
            raise InvalidParameterValue(f"dimension ratio Q must be a finite number >= 1, got {self.Q}")
        centre = 1.0 + 1.0 / self.Q
        half_width = 2.0 / math.sqrt(self.Q)
        object.__setattr__(self, "lambda_min", max(0.0, (centre - half_width) / self.N))
        object.__setattr__(self, "lambda_max", (centre + half_width) / self.N)

    @classmethod
    def from_dims(cls, n1: int, n2: int) -> "MpDensityParams":
        """Parameters for subsystems of dimension n1 and n2, in either order."""
        small, large = sorted((n1, n2))
        return cls(N=small, Q=large / small)


def mp_density(p: MpDensityParams, lam: float) -> float:
    """f(λ) = (NQ/2π) √((λ_max - λ)(λ - λ_min)) / λ on the support, and 0 elsewhere.

    N f(λ) dλ is the expected number of eigenvalues in [λ, λ + dλ]; f integrates to 1.
    """
    if not p.lambda_min < lam < p.lambda_max:
        return 0.0
    return p.N * p.Q / (2 * math.pi) * math.sqrt((p.lambda_max - lam) * (lam - p.lambda_min)) / lam


def _substituted_integrand(p: MpDensityParams, u: float, weight_power: int = 0, log_weight: bool = False) -> float:
    """The density under λ = λ_min + u², which removes the inverse square root at λ_min when Q = 1."""
    lam = p.lambda_min + u * u
    if lam >= p.lambda_max or u <= 0.0:
        return 0.0
    value = p.N * p.Q / math.pi * math.sqrt(p.lambda_max - lam) * u / lam * u
    if weight_power:
        value *= lam**weight_power
    if log_weight:
        value *= math.log(lam)
    return value


def _integrate_support(
    p: MpDensityParams, lo: float, hi: float, weight_power: int = 0, log_weight: bool = False
) -> float:
    lo = max(lo, p.lambda_min)
    hi = min(hi, p.lambda_max)
    if hi <= lo:
        return 0.0
    u_lo = math.sqrt(lo - p.lambda_min)
    u_hi = math.sqrt(hi - p.lambda_min)
    value, _ = quad(
        lambda u: _substituted_integrand(p, u, weight_power, log_weight),
        u_lo,
        u_hi,
        epsabs=QUADRATURE_TOLERANCE,
        epsrel=QUADRATURE_TOLERANCE,
        limit=QUADRATURE_LIMIT,
    )
    return float(value)


def mp_moment(p: MpDensityParams, power: int) -> float:
    """∫ λ^power f(λ) dλ over the support by quadrature. The zeroth moment is 1 and the first is 1/N."""
    return _integrate_support(p, p.lambda_min, p.lambda_max, weight_power=power)


def mp_bin_probabilities(p: MpDensityParams, edges: ArrayLike) -> NDArray[float64]:
    """Probability mass of f in each bin [edges[i], edges[i+1]]; bins outside the support get 0."""
    bounds = asarray(edges, dtype=float64)
    if bounds.ndim != 1 or bounds.size < 2:
        raise InvalidParameterValue("bin edges must be a 1D array of at least two values")
    probabilities = zeros(bounds.size - 1, dtype=float64)
    for i in range(bounds.size - 1):
        probabilities[i] = _integrate_support(p, float(bounds[i]), float(bounds[i + 1]))
    return probabilities


def rmt_entropy_bound(N: int, Q: float) -> float:
    """The saturation value ln(γN) of the von Neumann entropy for random states, with

        γ = (Q/(Q+1)) exp[(Q/2(Q+1)²) 3F2(1, 1, 3/2; 2, 3; 4Q/(Q+1)²)].

    Q = 1 gives γ = e^(-1/2) and Q → ∞ gives γ → 1.

    Args:
        N (int): Dimension of the smaller subsystem, at least 2.
        Q (float): Dimension ratio M/N, at least 1.

    Returns:
        bound (float): ln N + ln γ.

    Raises:
        DomainError: If N < 2 or Q < 1.
    """
    if N < 2:
        raise DomainError(f"the entropy bound needs N >= 2, got {N}")
    if not Q >= 1.0:
        raise DomainError(f"the entropy bound needs Q >= 1, got {Q}")
    z = 4.0 * Q / (Q + 1.0) ** 2
    series = hyp3f2(1.0, 1.0, 1.5, 2.0, 3.0, min(z, 1.0))
    log_gamma = math.log(Q / (Q + 1.0)) + Q / (2.0 * (Q + 1.0) ** 2) * series.value
    logger.debug(f"entropy bound N={N} Q={Q}: ln γ = {log_gamma:.12f} (3F2 error {series.est_error:.1e})")
    return math.log(N) + log_gamma


def entropy_bound_by_quadrature(N: int, Q: float) -> float:
    """-N ∫ λ ln λ f(λ) dλ evaluated by adaptive quadrature, independently of the 3F2 closed form."""
    return -N * _integrate_support(MpDensityParams(N, Q), 0.0, math.inf, weight_power=1, log_weight=True)

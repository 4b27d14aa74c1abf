"""Random-matrix estimate of linear-entropy growth for coupled chaotic tops started in a product state.

For a coupling exp(-i ε J_z₁ J_z₂ / j), each kick multiplies the purity of the reduced state by |p(ε)|⁴, where

    p(ε) = (1/N²) Σ_{α,β} exp(-i ε m_α m_β / j)

averages the coupling phase over both spectra. The closed forms below are the large-j limits of these sums; the exact
sums are kept alongside them as oracles.
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from numpy import abs as np_abs
from numpy import arange, exp, float64, int64, outer
from numpy.typing import NDArray

from coupledtops.entanglement import MeasureKind, MeasureSeries
from coupledtops.exceptions import DimensionTooLarge, DomainError, InvalidParameterValue
from coupledtops.numkernel import entire_cos_integral, sin_integral
from coupledtops.settings import PModel

logger = logging.getLogger(__name__)

EXACT_SUM_MAX_DIM = 512


@dataclass(frozen=True)
class SrTheoryParams:
    """Parameters of the linear-entropy growth estimate."""

    N: int
    """Subsystem dimension 2j + 1."""
    eps: float
    """Coupling strength ε."""

    def __post_init__(self) -> None:
        if self.N < 2:
            raise InvalidParameterValue(f"the growth estimate needs N >= 2, got {self.N}")
        if not math.isfinite(self.eps):
            raise InvalidParameterValue(f"coupling strength must be finite, got {self.eps}")

    @property
    def j(self) -> float:
        return (self.N - 1) / 2


def _m_values(N: int) -> NDArray[float64]:
    j = (N - 1) / 2
    return j - arange(N, dtype=float64)


def _check_coupling(eps: float) -> None:
    if not eps >= 0.0:
        raise DomainError(f"coupling strength must be nonnegative, got {eps}")


def p_epsilon_exact(N: int, eps: float) -> float:
    """(1/N²) Σ_{α,β} exp(-i ε m_α m_β / j) with m = -j..j. The sum is real by the m → -m symmetry."""
    if N < 2:
        raise InvalidParameterValue(f"p(ε) needs N >= 2, got {N}")
    _check_coupling(eps)
    m = _m_values(N)
    return float(exp(-1j * eps * outer(m, m) / ((N - 1) / 2)).real.mean())


def p_epsilon_approx(N: int, eps: float) -> float:
    """Large-j closed form (2/N)[1 + Si(Nε/2)/ε].

    Tends to 1 + 2/N, not 1, as ε → 0; ε = 0 returns that limit.
    """
    _check_coupling(eps)
    if eps == 0.0:
        return 1.0 + 2.0 / N
    return 2.0 / N * (1.0 + sin_integral(N * eps / 2).value / eps)


def closed_form_bracket(N: int, eps: float) -> float:
    """Large-j limit of (1/N⁴) Σ exp[-i ε (m_α - m_β)(m_γ - m_δ)/j]:

        (2/N)[1 + Si(2Nε)/ε] - (1/Nε)² [1 - cos(2Nε) + γ + ln(2Nε) - Ci(2Nε)].

    γ + ln x - Ci(x) is evaluated as the entire cosine integral and 1 - cos x as 2 sin²(x/2), so small couplings do
    not cancel. Like p(ε), the bracket tends to 1 + 2/N as ε → 0.

    The cosine-integral term is subtracted. Over the differences u, v of the m values, weighted by (N - |u|)(N - |v|),
    the sum tends to (4/x)Si(x) - (4/x²)[1 - cos x + Cin(x)] with x = 2Nε and Cin(x) = γ + ln x - Ci(x).

    Raises:
        DomainError: If 2Nε ≤ 0.
    """
    x = 2 * N * eps
    if not x > 0:
        raise DomainError(f"the growth estimate needs 2Nε > 0, got {x}")
    one_minus_cos = 2.0 * math.sin(x / 2) ** 2
    return 2.0 / N * (1.0 + sin_integral(x).value / eps) - (one_minus_cos + entire_cos_integral(x).value) / (
        N * eps
    ) ** 2


@lru_cache(maxsize=64)
def coupling_phase_sum(N: int, eps: float) -> complex:
    """(1/N⁴) Σ_{α,β,γ,δ} exp[-i ε (m_α - m_β)(m_γ - m_δ)/j], reduced to a double sum over the differences
    u = m_α - m_β and v = m_γ - m_δ weighted by their multiplicities N - |u| and N - |v|.

    Raises:
        DimensionTooLarge: If N exceeds 512.
    """
    if N > EXACT_SUM_MAX_DIM:
        raise DimensionTooLarge(f"exact coupling sum is limited to N <= {EXACT_SUM_MAX_DIM}, got {N}")
    if N < 2:
        raise InvalidParameterValue(f"the coupling sum needs N >= 2, got {N}")
    _check_coupling(eps)
    differences = arange(-(N - 1), N, dtype=float64)
    weights = N - np_abs(differences)
    phases = exp(-1j * eps * outer(differences, differences) / ((N - 1) / 2))
    return complex(weights @ phases @ weights) / float(N) ** 4


def sr_exact_sum(N: int, eps: float, n: int) -> float:
    """S_R(n) ≃ 1 - |p(ε)|^(4(n-1)) (1/N⁴) Σ exp[-i ε (m_α - m_β)(m_γ - m_δ)/j], with p(ε) and the quadruple
    sum both evaluated exactly.

    Raises:
        DimensionTooLarge: If N exceeds 512.
    """
    if n < 1:
        raise InvalidParameterValue(f"kick index must be at least 1, got {n}")
    bracket = coupling_phase_sum(N, eps).real
    decay = abs(p_epsilon_exact(N, eps)) ** (4 * (n - 1))
    return min(1.0, max(0.0, 1.0 - decay * bracket))


def saturation_onset(curve: MeasureSeries, N: int) -> int:
    """First kick at which a growth curve reaches the random-state plateau 1 - 2N/(N² + 1), or its last kick if it
    never does."""
    plateau = 1.0 - 2.0 * N / (N * N + 1)
    reached = (curve.values >= plateau).nonzero()[0]
    return int(curve.kicks[reached[0]] if reached.size else curve.kicks[-1])


def _series(kicks: NDArray[int64], p_value: float, bracket: float) -> MeasureSeries:
    return MeasureSeries(MeasureKind.LINEAR, kicks, 1.0 - p_value ** (4 * (kicks - 1)) * bracket)


def sr_theory_curve(p: SrTheoryParams, n_max: int, p_model: PModel = PModel.CLOSED_FORM) -> MeasureSeries:
    """The closed-form growth law S_R(n) ≃ 1 - p(ε)^(4(n-1)) · bracket for n = 1..n_max.

    Args:
        p (SrTheoryParams): Dimension and coupling.
        n_max (int): Last kick, at least 1.
        p_model (PModel): How p(ε) is evaluated. `PModel.CLOSED_FORM` takes the large-j formula literally, which
            exceeds 1 for Nε ≲ 1 and then makes the curve decrease; `PModel.EXACT_SUM` uses the exact double sum.

    Returns:
        series (MeasureSeries): A `MeasureKind.LINEAR` series over kicks 1..n_max.

    Raises:
        DomainError: If 2Nε ≤ 0.
    """
    if n_max < 1:
        raise InvalidParameterValue(f"n_max must be at least 1, got {n_max}")
    bracket = closed_form_bracket(p.N, p.eps)
    if p_model is PModel.EXACT_SUM:
        p_value = p_epsilon_exact(p.N, p.eps)
    else:
        p_value = p_epsilon_approx(p.N, p.eps)
        if abs(p_value) >= 1.0:
            logger.warning(f"closed-form p(ε) = {p_value:.6f} >= 1 at N={p.N}, ε={p.eps}; the curve will not saturate")
    return _series(arange(1, n_max + 1, dtype=int64), p_value, bracket)


def sr_exact_curve(p: SrTheoryParams, n_max: int) -> MeasureSeries:
    """`sr_exact_sum` for n = 1..n_max, evaluating both sums once."""
    if n_max < 1:
        raise InvalidParameterValue(f"n_max must be at least 1, got {n_max}")
    bracket = coupling_phase_sum(p.N, p.eps).real
    series = _series(arange(1, n_max + 1, dtype=int64), abs(p_epsilon_exact(p.N, p.eps)), bracket)
    return MeasureSeries(MeasureKind.LINEAR, series.kicks, series.values.clip(0.0, 1.0))

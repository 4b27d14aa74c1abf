"""Special functions needed by the random-matrix predictions: log-factorials, the sine and cosine integrals, and the
generalized hypergeometric function 3F2 on 0 ≤ z ≤ 1. Every evaluation reports an error estimate alongside its value.
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import cmath
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from numpy import arange, concatenate, cumprod, euler_gamma, float64, flatnonzero
from numpy.typing import NDArray
from scipy.special import gammaln

from coupledtops.exceptions import DomainError, NoConvergence

logger = logging.getLogger(__name__)

SERIES_CROSSOVER = 16.0
"""Below this argument Si and Ci are summed from their power series, above it from a continued fraction."""
HYP3F2_MAX_TERMS = 1_000_000
HYP3F2_BLOCK = 65_536
_EPS = 2.220446049250313e-16
_CONTINUED_FRACTION_LIMIT = 1000


@dataclass(frozen=True)
class SpecialFnValue:
    value: float
    """The function value."""
    est_error: float
    """A nonnegative estimate of the absolute error in `value`."""

    def __post_init__(self) -> None:
        if not self.est_error >= 0.0:
            raise ValueError(f"est_error must be nonnegative, got {self.est_error}")


@lru_cache(maxsize=16)
def log_factorials(n_max: int) -> NDArray[float64]:
    """Read-only table of ln(n!) for n = 0..n_max."""
    table = gammaln(arange(n_max + 1, dtype=float64) + 1.0)
    table.setflags(write=False)
    return table


def _sici_series(x: float) -> tuple[float, float, float, float]:
    """Power series of Si(x) and of Cin(x) = γ + ln x - Ci(x), with error estimates, for 0 < x < 16."""
    x2 = x * x
    si_term = x
    si_total = x
    cin_term = 1.0
    cin_total = 0.0
    largest = abs(x)
    k = 0
    while True:
        k += 1
        # (-1)^k x^(2k+1) / (2k+1)! and (-1)^k x^(2k) / (2k)!
        si_term *= -x2 / ((2 * k) * (2 * k + 1))
        cin_term *= -x2 / ((2 * k - 1) * (2 * k))
        si_add = si_term / (2 * k + 1)
        cin_add = -cin_term / (2 * k)
        si_total += si_add
        cin_total += cin_add
        largest = max(largest, abs(si_add), abs(cin_add))
        if abs(si_add) < _EPS * abs(si_total) and abs(cin_add) < _EPS * abs(cin_total):
            break
    rounding = largest * _EPS * k
    return si_total, abs(si_add) + rounding, cin_total, abs(cin_add) + rounding


def _sici_continued_fraction(x: float) -> tuple[float, float, float]:
    """Si(x) and Ci(x) for x ≥ 16 from the continued fraction of E1(ix) (modified Lentz)."""
    tiny = 1e-300
    b = complex(1.0, x)
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(2, _CONTINUED_FRACTION_LIMIT):
        a = -float((i - 1) ** 2)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 4 * _EPS:
            break
    else:
        raise NoConvergence(f"sine/cosine integral continued fraction at x={x}")
    h *= cmath.exp(complex(0.0, -x))
    return math.pi / 2 + h.imag, -h.real, 4 * _EPS * abs(h)


def sin_integral(x: float) -> SpecialFnValue:
    """Si(x) = ∫₀ˣ sin(t)/t dt for any real x. Odd by construction: Si(-x) is computed as -Si(x)."""
    if x < 0:
        positive = sin_integral(-x)
        return SpecialFnValue(-positive.value, positive.est_error)
    if x == 0:
        return SpecialFnValue(0.0, 0.0)
    if x < SERIES_CROSSOVER:
        si, si_error, _, _ = _sici_series(x)
        return SpecialFnValue(si, si_error)
    si, _, error = _sici_continued_fraction(x)
    return SpecialFnValue(si, error)


def cos_integral(x: float) -> SpecialFnValue:
    """Ci(x) = γ + ln x + ∫₀ˣ (cos t - 1)/t dt for x > 0.

    Raises:
        DomainError: If x ≤ 0.
    """
    if not x > 0:
        raise DomainError(f"Ci(x) requires x > 0, got {x}")
    if x < SERIES_CROSSOVER:
        _, _, cin, cin_error = _sici_series(x)
        return SpecialFnValue(euler_gamma + math.log(x) - cin, cin_error + _EPS * abs(math.log(x)))
    _, ci, error = _sici_continued_fraction(x)
    return SpecialFnValue(ci, error)


def entire_cos_integral(x: float) -> SpecialFnValue:
    """Cin(x) = γ + ln x - Ci(x) = ∫₀ˣ (1 - cos t)/t dt, summed directly for small x where the difference would
    cancel."""
    if x == 0:
        return SpecialFnValue(0.0, 0.0)
    x = abs(x)
    if x < SERIES_CROSSOVER:
        _, _, cin, cin_error = _sici_series(x)
        return SpecialFnValue(cin, cin_error)
    ci = cos_integral(x)
    return SpecialFnValue(euler_gamma + math.log(x) - ci.value, ci.est_error + _EPS * math.log(x))


def hyp3f2(a1: float, a2: float, a3: float, b1: float, b2: float, z: float, tol: float = 1e-15) -> SpecialFnValue:
    """Generalized hypergeometric series 3F2(a1, a2, a3; b1, b2; z) for 0 ≤ z ≤ 1 and positive parameters.

    Terms are summed in vectorised blocks until one drops below `tol`; that term is returned as `est_error`. At z = 1
    the series converges only because s = b1 + b2 - a1 - a2 - a3 > 0: the terms then decay like n^-(s+1), far too
    slowly to reach `tol`, so once the term cap is hit the remainder is added from that power law.

    Raises:
        DomainError: If z is outside [0, 1], a parameter is not positive, or z = 1 with s ≤ 0.
        NoConvergence: If the term cap is exceeded for z < 1.
    """
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"3F2 requires 0 <= z <= 1, got z={z}")
    if min(a1, a2, a3, b1, b2) <= 0:
        raise DomainError(f"3F2 series parameters must be positive, got ({a1}, {a2}, {a3}; {b1}, {b2})")
    excess = b1 + b2 - a1 - a2 - a3
    if z == 1.0 and excess <= 0:
        raise DomainError(f"3F2 diverges at z=1 when b1 + b2 - a1 - a2 - a3 = {excess} <= 0")
    if z == 0.0:
        return SpecialFnValue(1.0, 0.0)

    total = 0.0
    leading = 1.0
    summed = 0
    for start in range(0, HYP3F2_MAX_TERMS, HYP3F2_BLOCK):
        n = arange(start, start + HYP3F2_BLOCK, dtype=float64)
        ratios = (a1 + n) * (a2 + n) * (a3 + n) / ((b1 + n) * (b2 + n) * (n + 1.0)) * z
        terms = leading * concatenate(([1.0], cumprod(ratios[:-1])))
        below = flatnonzero(terms < tol)
        if below.size:
            stop = int(below[0])
            total += math.fsum(terms[: stop + 1])
            return SpecialFnValue(total, float(terms[stop]))
        total += math.fsum(terms)
        leading = float(terms[-1] * ratios[-1])
        summed = start + HYP3F2_BLOCK

    if z == 1.0:
        k = float(summed)
        power = excess + 1.0
        tail = leading * k**power * (k - 0.5) ** (1.0 - power) / (power - 1.0)
        logger.debug(f"3F2 at z=1: added power-law remainder {tail:.3e} after {summed} terms")
        return SpecialFnValue(total + tail, leading + abs(tail) / k)
    raise NoConvergence(f"3F2 series exceeded {HYP3F2_MAX_TERMS} terms at z={z}")

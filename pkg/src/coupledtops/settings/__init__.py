"""Provides Enums and constants used for configuring simulations and experiments."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from typing import Tuple

from coupledtops.settings.experiment_modes import ExperimentKind, InitialStateKind
from coupledtops.settings.numerics import EigenBackend, PModel

__all__ = [
    "EigenBackend",
    "PModel",
    "ExperimentKind",
    "InitialStateKind",
    "DEFAULT_PACKET",
    "DEFAULT_MIXED_POINT_B",
    "DEFAULT_MIXTURE_WEIGHT",
    "DEFAULT_SR_BURN_IN",
]

DEFAULT_PACKET: Tuple[float, float] = (0.89, 0.63)
"""(θ₀, φ₀) of the initial coherent packet on both tops, a point inside the chaotic sea at k = 6."""
DEFAULT_MIXED_POINT_B: Tuple[float, float] = (2.25, -0.63)
"""(θ₀, φ₀) of the second point of the two-point mixed initial state."""
DEFAULT_MIXTURE_WEIGHT = 0.5
"""Weight p of the first point of the two-point mixed initial state."""
DEFAULT_SR_BURN_IN = 30
"""Uncoupled kicks that spread the packet before the coupling starts, in S_R growth-law comparisons."""

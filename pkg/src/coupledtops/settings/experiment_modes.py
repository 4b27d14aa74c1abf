"""Provides Enums naming the kinds of experiment and initial state understood by the experiment runner."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from enum import Enum


class ExperimentKind(Enum):
    """Enum representing the experiments that can be run from a config file or the command line."""

    PHASE_SPACE = "phase_space"
    """Classical single-top phase-space section in (θ, φ)."""
    PURE_ENTROPY = "pure_entropy"
    """von Neumann and linear entropy of an evolving pure product state."""
    MIXED_ENTROPY = "mixed_entropy"
    """Log-negativity of an evolving two-point mixed state."""
    RMT_BOUND = "rmt_bound"
    """Random-matrix saturation bound ln(γN) over a grid of N and Q."""
    SR_OVERLAY = "sr_overlay"
    """Simulated linear entropy overlaid with the random-matrix growth law."""
    RDM_HISTOGRAM = "rdm_histogram"
    """Pooled reduced-density-matrix eigenvalue histogram against the Marchenko-Pastur-type density."""
    SPACING = "spacing"
    """Nearest-neighbour eigenangle spacing histogram of the coupled Floquet operator."""


class InitialStateKind(Enum):
    """Enum representing the two supported initial states."""

    PURE = "pure"
    """Product of two SU(2) coherent states."""
    MIXED = "mixed"
    """Two-point mixture on the first top, coherent state on the second."""

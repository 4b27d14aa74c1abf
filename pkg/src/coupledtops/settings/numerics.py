"""Provides Enums selecting the numerical routes used when computing spectra and growth-law predictions."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from enum import Enum


class EigenBackend(Enum):
    """Enum selecting the dense eigensolver used for reduced density matrices, partial transposes and Floquet
    spectra."""

    JACOBI = "jacobi"
    """The self-contained parallel-ordered cyclic Jacobi solver in `coupledtops.numkernel`. The default."""
    LAPACK = "lapack"
    """numpy's LAPACK drivers (`eigh`, `svd`). Much faster for the d = 441 partial transposes of long mixed-state
    runs."""


class PModel(Enum):
    """Enum selecting how the per-kick decay factor p(ε) of the linear-entropy growth law is evaluated."""

    CLOSED_FORM = "closed_form"
    """The large-j closed form in terms of the sine integral. Exceeds 1 when Nε is small."""
    EXACT_SUM = "exact_sum"
    """The exact double sum over the J_z eigenvalues of both tops."""

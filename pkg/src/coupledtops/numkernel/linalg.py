"""Dense complex linear algebra used by the entanglement and spectral-statistics code: a Hermitian eigensolver
(parallel-ordered cyclic Jacobi), singular values and vectors built on it, and eigenangles of unitary matrices."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from numpy import (
    abs as np_abs,
    angle,
    argsort,
    array,
    asarray,
    clip,
    complex128,
    conj,
    count_nonzero,
    diag,
    einsum,
    eye,
    float64,
    hstack,
    inf,
    intp,
    isfinite,
    pi,
    sqrt,
    where,
)
from numpy.linalg import LinAlgError, eigh, norm, qr
from numpy.linalg import svd as lapack_svd
from numpy.typing import ArrayLike, NDArray

from coupledtops.exceptions import DimensionMismatch, InvalidParameterValue, NoConvergence, NotHermitian, NotUnitary
from coupledtops.settings import EigenBackend

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[complex128]
"""A dense two-dimensional complex128 array with finite entries."""

JACOBI_SWEEP_LIMIT = 100
JACOBI_TOLERANCE = 1e-13
"""Convergence threshold on the off-diagonal Frobenius norm, relative to the Frobenius norm of the input."""
JACOBI_STALL_TOLERANCE = 1e-10
"""A sweep that fails to reduce the off-diagonal norm is accepted as converged below this relative level."""
HERMITICITY_TOLERANCE = 1e-10
UNITARITY_TOLERANCE = 1e-8
DEGENERACY_TOLERANCE = 1e-9
GRAM_SVD_MAX_DIM = 256
SVD_RANK_TOLERANCE = 1e-8


@dataclass(frozen=True, eq=False)
class HermitianSpectrum:
    """Eigendecomposition of a Hermitian matrix."""

    eigenvalues: NDArray[float64]
    """Real eigenvalues, sorted ascending."""
    eigenvectors: ComplexMatrix
    """Orthonormal eigenvectors, one per column, in the order of `eigenvalues`."""


def as_complex_matrix(values: ArrayLike) -> ComplexMatrix:
    """Converts array-like input to a complex128 matrix, rejecting anything that is not two-dimensional and finite.

    Args:
        values: Any input accepted by `numpy.asarray`.
    Returns:
        matrix (ComplexMatrix): The input as a complex128 array (a copy only if a conversion was needed).
    """
    matrix = asarray(values, dtype=complex128)
    if matrix.ndim != 2:
        raise DimensionMismatch(f"expected a two-dimensional matrix, got an array of shape {matrix.shape}")
    if not isfinite(matrix).all():
        raise InvalidParameterValue("matrix entries must be finite (no NaN or Inf)")
    return matrix


def _square(values: ArrayLike) -> ComplexMatrix:
    matrix = as_complex_matrix(values)
    if matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {matrix.shape}")
    return matrix


@lru_cache(maxsize=64)
def _round_robin_schedule(n: int) -> Tuple[Tuple[NDArray[intp], NDArray[intp]], ...]:
    """Rounds of disjoint (p, q) index pairs which together cover every pair of [0, n) exactly once (circle method).
    A dummy index is added when n is odd and its pairs are dropped."""
    players = list(range(n + n % 2))
    count = len(players)
    rounds = []
    for _ in range(count - 1):
        top = players[: count // 2]
        bottom = players[count // 2 :][::-1]
        pairs = [(min(a, b), max(a, b)) for a, b in zip(top, bottom) if a < n and b < n]
        if pairs:
            rounds.append((array([p for p, _ in pairs], dtype=intp), array([q for _, q in pairs], dtype=intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_diagonal_norm(a: ComplexMatrix) -> float:
    return float(norm(a - diag(diag(a))))


def _rotate(a: ComplexMatrix, v: ComplexMatrix, p: NDArray[intp], q: NDArray[intp]) -> None:
    """Annihilates a[p, q] for a set of disjoint pairs at once, updating a and the accumulated eigenvectors v in place.

    For each pair the rotation is G = diag(1, e^{-iφ}) R(c, s) with a_pq = r e^{iφ}, so that G† a G has a real
    symmetric (p, q) block which the classical Jacobi rotation diagonalises.
    """
    apq = a[p, q]
    r = np_abs(apq)
    active = r > 0.0
    if not active.any():
        return
    p, q, apq, r = p[active], q[active], apq[active], r[active]
    tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
    t = where(tau >= 0.0, 1.0, -1.0) / (np_abs(tau) + sqrt(1.0 + tau * tau))
    c = 1.0 / sqrt(1.0 + t * t)
    s = t * c
    phase = conj(apq) / r

    col_p, col_q = a[:, p], a[:, q]
    a[:, p] = col_p * c - col_q * (s * phase)
    a[:, q] = col_p * s + col_q * (c * phase)
    row_p, row_q = a[p, :], a[q, :]
    a[p, :] = c[:, None] * row_p - (s * conj(phase))[:, None] * row_q
    a[q, :] = s[:, None] * row_p + (c * conj(phase))[:, None] * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0

    vec_p, vec_q = v[:, p], v[:, q]
    v[:, p] = vec_p * c - vec_q * (s * phase)
    v[:, q] = vec_p * s + vec_q * (c * phase)


def _jacobi_eigh(h: ComplexMatrix, tol: float) -> Tuple[NDArray[float64], ComplexMatrix]:
    a = array(h, dtype=complex128, copy=True)
    n = a.shape[0]
    v = eye(n, dtype=complex128)
    scale = float(norm(a))
    if n < 2 or scale == 0.0:
        return diag(a).real.copy(), v

    schedule = _round_robin_schedule(n)
    previous_off = inf
    for sweep in range(JACOBI_SWEEP_LIMIT + 1):
        off = _off_diagonal_norm(a)
        if off <= tol * scale:
            logger.debug(f"Jacobi converged after {sweep} sweeps (n={n}, off-diagonal norm {off:.3e})")
            break
        if off >= previous_off and off <= JACOBI_STALL_TOLERANCE * scale:
            logger.debug(f"Jacobi stalled at roundoff after {sweep} sweeps (n={n}, relative off {off / scale:.3e})")
            break
        if sweep == JACOBI_SWEEP_LIMIT:
            raise NoConvergence(
                f"Jacobi eigensolver exceeded {JACOBI_SWEEP_LIMIT} sweeps (n={n}, relative off-diagonal norm "
                f"{off / scale:.3e})"
            )
        previous_off = off
        for p, q in schedule:
            _rotate(a, v, p, q)
    return diag(a).real.copy(), v


def _hermitian_part(values: ArrayLike) -> ComplexMatrix:
    m = _square(values)
    asymmetry = float(np_abs(m - m.conj().T).max(initial=0.0))
    if asymmetry > HERMITICITY_TOLERANCE * max(1.0, float(np_abs(m).max(initial=0.0))):
        raise NotHermitian(f"max |m - m†| = {asymmetry:.3e}")
    return (m + m.conj().T) / 2


def hermitian_eig(
    m: ArrayLike, tol: float = JACOBI_TOLERANCE, backend: EigenBackend = EigenBackend.JACOBI
) -> HermitianSpectrum:
    """Eigendecomposition of a Hermitian matrix.

    Args:
        m: Square matrix with max |m - m†| ≤ 1e-10 (relative to its largest entry when that exceeds 1).
        tol: Jacobi convergence threshold on the off-diagonal Frobenius norm, relative to ‖m‖_F. Ignored by the
            LAPACK backend.
        backend: Which eigensolver to use.
    Returns:
        spectrum (HermitianSpectrum): Ascending eigenvalues and orthonormal eigenvectors.
    Raises:
        NotHermitian: If the symmetry check fails.
        NoConvergence: If the Jacobi sweep limit is exceeded, or LAPACK fails to converge.
    """
    h = _hermitian_part(m)
    if backend is EigenBackend.LAPACK:
        try:
            values, vectors = eigh(h)
        except LinAlgError as e:
            raise NoConvergence(str(e)) from e
    else:
        values, vectors = _jacobi_eigh(h, tol)
    order = argsort(values, kind="stable")
    return HermitianSpectrum(eigenvalues=values[order], eigenvectors=vectors[:, order])


def _complete_orthonormal_columns(projected: ComplexMatrix, s: NDArray[float64], n_cols: int) -> ComplexMatrix:
    """Right singular vectors from the columns s_i v_i = m† u_i: the well-resolved columns are normalised and the
    set is completed and re-orthogonalised with a QR factorisation."""
    dim = projected.shape[0]
    good = s > SVD_RANK_TOLERANCE * max(float(s[0]), 1e-300) if s.size else s.astype(bool)
    rank = int(count_nonzero(good))
    basis = hstack([projected[:, :rank] / s[:rank], eye(dim, dtype=complex128)])
    q, r = qr(basis)
    if rank:
        leading = diag(r)[:rank]
        q[:, :rank] *= leading / np_abs(leading)
    return q[:, :n_cols]


def svd(
    m: ArrayLike, backend: EigenBackend = EigenBackend.JACOBI
) -> Tuple[ComplexMatrix, NDArray[float64], ComplexMatrix]:
    """Thin singular value decomposition m = U diag(s) V†.

    For N ≤ 256 rows (after transposing so that N ≤ M) the left singular vectors and s² come from `hermitian_eig` of
    the Gram matrix m m†; larger inputs and the LAPACK backend use `numpy.linalg.svd`.

    Args:
        m: An N×M matrix.
        backend: Which eigensolver to use for the Gram matrix.
    Returns:
        u (ComplexMatrix): N×min(N, M) matrix with orthonormal columns.
        s (NDArray[float64]): Singular values, sorted descending.
        v (ComplexMatrix): M×min(N, M) matrix with orthonormal columns.
    """
    matrix = as_complex_matrix(m)
    n_rows, n_cols = matrix.shape
    if n_rows > n_cols:
        v, s, u = svd(matrix.conj().T, backend)
        return u, s, v
    if backend is EigenBackend.LAPACK or n_rows > GRAM_SVD_MAX_DIM:
        try:
            u, s, vh = lapack_svd(matrix, full_matrices=False)
        except LinAlgError as e:
            raise NoConvergence(str(e)) from e
        return u, s, vh.conj().T

    gram = hermitian_eig(matrix @ matrix.conj().T, backend=backend)
    u = gram.eigenvectors[:, ::-1]
    s = sqrt(clip(gram.eigenvalues[::-1], 0.0, None))
    v = _complete_orthonormal_columns(matrix.conj().T @ u, s, n_rows)
    return u, s, v


def singular_values(m: ArrayLike, backend: EigenBackend = EigenBackend.JACOBI) -> NDArray[float64]:
    """Singular values of m, sorted descending, without forming the singular vectors."""
    matrix = as_complex_matrix(m)
    if matrix.shape[0] > matrix.shape[1]:
        matrix = matrix.conj().T
    if backend is EigenBackend.LAPACK or matrix.shape[0] > GRAM_SVD_MAX_DIM:
        return lapack_svd(matrix, compute_uv=False)
    gram = hermitian_eig(matrix @ matrix.conj().T, backend=backend)
    return sqrt(clip(gram.eigenvalues[::-1], 0.0, None))


def _degenerate_clusters(sorted_values: NDArray[float64]) -> List[slice]:
    clusters = []
    start = 0
    for i in range(1, sorted_values.size + 1):
        if i == sorted_values.size or sorted_values[i] - sorted_values[i - 1] > DEGENERACY_TOLERANCE:
            if i - start > 1:
                clusters.append(slice(start, i))
            start = i
    return clusters


def unitary_eigensystem(
    u: ArrayLike, backend: EigenBackend = EigenBackend.JACOBI
) -> Tuple[NDArray[float64], ComplexMatrix]:
    """Eigenangles and eigenvectors of a unitary matrix.

    The commuting Hermitian pair (u + u†)/2 and (u - u†)/2i is diagonalised jointly: eigenvectors of the first are
    rotated within each cos-degenerate cluster (eigenvalues within 1e-9) so that they also diagonalise the projected
    second matrix. Angles are the phases of the Rayleigh quotients v† u v.

    Args:
        u: Square matrix with max |u†u - I| ≤ 1e-8.
        backend: Which eigensolver to use.
    Returns:
        angles (NDArray[float64]): Eigenangles in (-π, π], sorted ascending.
        vectors (ComplexMatrix): Matching orthonormal eigenvectors, one per column.
    Raises:
        NotUnitary: If the unitarity check fails.
    """
    matrix = _square(u)
    dim = matrix.shape[0]
    deviation = float(np_abs(matrix.conj().T @ matrix - eye(dim)).max(initial=0.0))
    if deviation > UNITARITY_TOLERANCE:
        raise NotUnitary(f"max |u†u - I| = {deviation:.3e}")

    cosines = hermitian_eig((matrix + matrix.conj().T) / 2, backend=backend)
    sines = (matrix - matrix.conj().T) / 2j
    vectors = cosines.eigenvectors.copy()
    for cluster in _degenerate_clusters(cosines.eigenvalues):
        block = vectors[:, cluster]
        projected = block.conj().T @ sines @ block
        inner = hermitian_eig((projected + projected.conj().T) / 2, backend=backend)
        vectors[:, cluster] = block @ inner.eigenvectors

    angles = angle(einsum("ij,ij->j", vectors.conj(), matrix @ vectors))
    angles = where(angles <= -pi, angles + 2 * pi, angles)
    order = argsort(angles, kind="stable")
    return angles[order], vectors[:, order]


def unitary_eigenangles(u: ArrayLike, backend: EigenBackend = EigenBackend.JACOBI) -> NDArray[float64]:
    """Eigenangles θ_i ∈ (-π, π] of a unitary matrix, sorted ascending; e^{iθ_i} are its eigenvalues.

    Raises:
        NotUnitary: If max |u†u - I| exceeds 1e-8.
    """
    angles, _ = unitary_eigensystem(u, backend)
    return angles

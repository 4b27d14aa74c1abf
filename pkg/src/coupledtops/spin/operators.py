"""Angular-momentum matrices of one top and its rotations about the y axis by π/2 and π."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import math
from functools import lru_cache

from numpy import array, complex128, concatenate, cumsum, diag, float64, sqrt, zeros

from coupledtops.numkernel import ComplexMatrix
from coupledtops.spin.basis import SpinBasis


def jz_matrix(basis: SpinBasis) -> ComplexMatrix:
    return diag(basis.m_values).astype(complex128)


def raising_matrix(basis: SpinBasis) -> ComplexMatrix:
    """J_+ with (J_+)_{a-1, a} = √(j(j+1) - m_a(m_a + 1))."""
    m = basis.m_values[1:]
    j = basis.j
    return diag(sqrt(j * (j + 1) - m * (m + 1)), k=1).astype(complex128)


def jx_matrix(basis: SpinBasis) -> ComplexMatrix:
    raising = raising_matrix(basis)
    return (raising + raising.conj().T) / 2


def jy_matrix(basis: SpinBasis) -> ComplexMatrix:
    raising = raising_matrix(basis)
    return (raising - raising.conj().T) / 2j


@lru_cache(maxsize=32)
def _quarter_turn(basis: SpinBasis) -> ComplexMatrix:
    two_j = basis.two_j
    n = basis.dim
    binomials = [math.comb(two_j, a) for a in range(n)]
    scale = 2**two_j
    # Column a holds the coefficients of (1 - x)^(2j - a) (1 + x)^a: entry a' is the Wigner sum for m' = j - a'.
    coefficients = array([(-1) ** i * binomials[i] for i in range(n)], dtype=object)
    d = zeros((n, n), dtype=float64)
    for a in range(n):
        for a_prime in range(n):
            wigner_sum = int(coefficients[a_prime])
            if wigner_sum:
                # d² = S² C(2j, a) / (C(2j, a') 4^j), evaluated as an exact rational and rounded once
                magnitude = math.sqrt(wigner_sum * wigner_sum * binomials[a] / (binomials[a_prime] * scale))
                d[a_prime, a] = magnitude if (wigner_sum > 0) == ((a - a_prime) % 2 == 0) else -magnitude
        quotient = cumsum(coefficients)
        coefficients = quotient + concatenate(([0], quotient[:-1]))
    matrix = d.astype(complex128)
    matrix.setflags(write=False)
    return matrix


def rotation_y_quarter(basis: SpinBasis) -> ComplexMatrix:
    """exp(-i (π/2) J_y) from the closed-form Wigner small-d matrix at π/2.

    Entries are d_{m'm} = 2^{-j} √((j+m')!(j-m')!/((j+m)!(j-m)!)) Σ_s (-1)^{m'-m+s} C(j+m, s) C(j-m, m'-m+s), with
    the alternating sum and the factorial ratio both carried out in exact integer arithmetic so that nothing cancels
    at large j. Cached per basis; the returned array is read-only.
    """
    return _quarter_turn(basis)


@lru_cache(maxsize=32)
def _half_turn(basis: SpinBasis) -> ComplexMatrix:
    n = basis.dim
    matrix = zeros((n, n), dtype=complex128)
    for a in range(n):
        matrix[n - 1 - a, a] = (-1) ** a
    matrix.setflags(write=False)
    return matrix


def rotation_y_half(basis: SpinBasis) -> ComplexMatrix:
    """exp(-i π J_y), which maps |j, m⟩ to (-1)^(j-m) |j, -m⟩. Read-only."""
    return _half_turn(basis)

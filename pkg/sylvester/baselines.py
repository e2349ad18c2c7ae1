"""
Comparison solvers for AX + XB = C that work on dense matrices.

hss_solve
    Hermitian/skew-Hermitian splitting iteration.  Each half-step is a
    diagonal Sylvester equation in the eigenbasis of the Hermitian (or
    skew-Hermitian) parts.

bssor_solve
    Block symmetric SOR: a forward block SOR sweep followed by a backward
    one, each solved by triangular substitutions.

bartels_stewart_solve
    Direct solve through complex Schur forms of A and B.

kron_oracle_solve
    Dense solve of the vectorized system (I (x) A + B^T (x) I) vec(X) =
    vec(C).  Only for small problems; the ground truth in tests.

A and B may be passed as dense arrays or as toeplitz.ToeplitzSpec objects.

:date: 16-Oct-2026
"""

import logging
from time import perf_counter

import numpy as np
import scipy.linalg

from toeplitz import ToeplitzSpec, to_dense, real_output
from . import Breakdown, SingularEquation, Unsupported
from .cscs import (
    SolveReport, kron_spectra, select_shifts, _as_split, _Iteration,
    _rhs, _initial_guess, _check_stopping, _check_shift, _is_real,
    _dense_solve, BREAKDOWN, _EPS,
)

__all__ = [
    'HermitianSplit', 'TriangularSplit',
    'hss_solve', 'bssor_solve', 'bartels_stewart_solve', 'kron_oracle_solve',
    'bssor_forward', 'bssor_backward', 'complex_schur', 'dense_residual',
]

_log = logging.getLogger(__name__)

def _square(K, name):
    """K as a dense square array, and whether it is real."""
    if isinstance(K, ToeplitzSpec):
        return to_dense(K), K.is_real
    K = np.asarray(K)
    if K.ndim != 2 or K.shape[0] != K.shape[1]:
        raise ValueError('{0} must be a square matrix, got shape {1}'.format(name, K.shape))
    return K, _is_real(K)

def dense_residual(A, B, C, X):
    """C - A X - X B with ordinary matrix products."""
    return C - A @ X - X @ B

def _check_floor(denom, scale, floor, what):
    bad = np.abs(denom) < floor * _EPS * scale
    if np.any(bad):
        i, j = np.argwhere(bad)[0]
        raise Breakdown('{0} diagonal {1:.3g} at ({2}, {3}) is below the solvability floor'.format(
            what, denom[i, j], i, j))

#######################################################################
# Hermitian/skew-Hermitian splitting
#######################################################################

class HermitianSplit(object):
    """K = H + S with H Hermitian and S skew-Hermitian, both diagonalized.

    Data members:
        H, S
            (K + K*)/2 and (K - K*)/2.

        QH, dH
            Unitary Q and real d with H = QH diag(dH) QH*.

        QS, dS
            Unitary Q and imaginary d with S = QS diag(dS) QS*.
    """

    def __init__(self, K):
        K = np.asarray(K)
        Kh = K.conj().T
        self.H = (K + Kh) / 2
        self.S = (K - Kh) / 2
        self.dH, self.QH = scipy.linalg.eigh(self.H)
        # -iS is Hermitian, so S = Q diag(i w) Q*.
        w, self.QS = scipy.linalg.eigh(-1j * self.S)
        self.dS = 1j * w

    @property
    def n(self):
        return self.H.shape[0]


def _diagonal_step(R, QA, dA, QB, dB, alpha, beta, floor, what):
    """Solve (alpha I + A) Z + Z (beta I + B) = R where A = QA diag(dA) QA*
    and B likewise."""
    a = alpha + dA
    b = beta + dB
    denom = a[:, None] + b[None, :]
    _check_floor(denom, 1 + np.abs(a)[:, None] + np.abs(b)[None, :], floor, what)
    W = (QA.conj().T @ R @ QB) / denom
    return QA @ W @ QB.conj().T

def hss_solve(A, B, C, alpha=None, beta=None, tol=1e-6, maxit=5000, X0=None,
        shift_multiplier=1.0, floor=1e3, history_every=1):
    """Solve AX + XB = C by the Hermitian/skew-Hermitian splitting iteration.

    Shifts follow the same rules as cscs_solve.  Automatic shifts come from
    select_shifts on the circulant and skew-circulant spectra, so they need
    A and B as ToeplitzSpec.

    Returns a SolveReport with method 'hss'.
    """
    start = perf_counter()
    _check_stopping(tol, maxit, history_every)

    shifts = None
    if alpha is None and beta is None:
        if not (isinstance(A, ToeplitzSpec) and isinstance(B, ToeplitzSpec)):
            raise ValueError('Automatic HSS shifts need A and B as ToeplitzSpec')
        sa, sb = _as_split(A), _as_split(B)
        shifts = select_shifts(*kron_spectra(sa.lam, sb.lam, sa.sig, sb.sig),
            multiplier=shift_multiplier)
        alpha, beta = shifts.alpha, shifts.beta
    elif alpha is None:
        alpha = beta
    elif beta is None:
        beta = alpha
    alpha = _check_shift('alpha', alpha)
    beta = _check_shift('beta', beta)

    A, real_A = _square(A, 'A')
    B, real_B = _square(B, 'B')
    n, m = A.shape[0], B.shape[0]
    real_inputs = real_A and real_B and _is_real(C)
    C = _rhs(C, n, m)

    ha, hb = HermitianSplit(A), HermitianSplit(B)
    state = _Iteration(tol, maxit, history_every)

    normC = np.linalg.norm(C)
    if normC == 0:
        state.record(0.0)
        return SolveReport(np.zeros((n, m)), 0, state.finish(), perf_counter() - start,
            'converged', 'hss', alpha, beta, shifts=shifts)

    X = _initial_guess(X0, n, m)
    R = dense_residual(A, B, C, X)
    state.record(np.linalg.norm(R) / normC)

    while True:
        status = state.check()
        if status is not None:
            break
        X = X + _diagonal_step(R, ha.QH, ha.dH, hb.QH, hb.dH, alpha, beta, floor, 'Hermitian')
        R = dense_residual(A, B, C, X)
        X = X + _diagonal_step(R, ha.QS, ha.dS, hb.QS, hb.dS, alpha, beta, floor, 'Skew-Hermitian')
        R = dense_residual(A, B, C, X)
        state.iterations += 1
        state.record(np.linalg.norm(R) / normC)
        _log.debug('iteration %d: relative residual %.3e', state.iterations, state.last)

    history = state.finish()
    if status == BREAKDOWN:
        _log.warning('HSS diverged at iteration %d (relative residual %.3g)',
            state.iterations, state.last)
    _log.info('HSS %dx%d, alpha=%.6g beta=%.6g: %s after %d iterations, residual %.3e',
        n, m, alpha, beta, status, state.iterations, state.last)
    return SolveReport(real_output(X, real_inputs), state.iterations, history,
        perf_counter() - start, status, 'hss', alpha, beta, shifts=shifts)

#######################################################################
# Block symmetric SOR
#######################################################################

class TriangularSplit(object):
    """K = diag(D) + L + U with L strictly lower and U strictly upper."""

    def __init__(self, K):
        K = np.asarray(K)
        self.D = np.diag(K).copy()
        self.L = np.tril(K, -1)
        self.U = np.triu(K, 1)
        if not np.all(self.D):
            raise ValueError('Block SOR needs a nonzero diagonal; zero at index {0}'.format(
                int(np.flatnonzero(self.D == 0)[0])))

    @property
    def n(self):
        return len(self.D)

    def dense(self):
        return np.diag(self.D) + self.L + self.U


def bssor_forward(R, sa, sb, omega):
    """Solve (D1/w + L1) Z + Z (D2/w + U2) = R, one column of Z at a time."""
    n, m = R.shape
    Z = np.zeros((n, m), dtype=np.result_type(R, sa.L, sb.U))
    base = np.diag(sa.D / omega) + sa.L
    eye = np.eye(n)
    for k in range(m):
        rhs = R[:, k] - Z[:, :k] @ sb.U[:k, k]
        Z[:, k] = scipy.linalg.solve_triangular(base + (sb.D[k] / omega) * eye, rhs,
            lower=True, check_finite=False)
    return Z

def bssor_backward(R, sa, sb, omega):
    """Solve (D1/w + U1) Z + Z (D2/w + L2) = R, rows of Z from the bottom up."""
    n, m = R.shape
    Z = np.zeros((n, m), dtype=np.result_type(R, sa.U, sb.L))
    base = np.diag(sb.D / omega) + sb.L
    eye = np.eye(m)
    for i in range(n - 1, -1, -1):
        rhs = R[i, :] - sa.U[i, i+1:] @ Z[i+1:, :]
        # z_i M = rhs with M lower triangular, i.e. M^T z_i^T = rhs^T.
        Z[i, :] = scipy.linalg.solve_triangular(base + (sa.D[i] / omega) * eye, rhs,
            trans='T', lower=True, check_finite=False)
    return Z

def bssor_solve(A, B, C, omega=1.0, tol=1e-6, maxit=5000, X0=None, history_every=1):
    """Solve AX + XB = C by block symmetric SOR with relaxation omega in (0, 2).

    Every iteration is a forward sweep then a backward sweep, with the
    residual recomputed after each.  Returns a SolveReport with method
    'bssor'; a relative residual above 1e8 ends the run with status
    'breakdown'.
    """
    start = perf_counter()
    _check_stopping(tol, maxit, history_every)
    if not 0 < omega < 2:
        raise ValueError('omega must lie in (0, 2), got {0}'.format(omega))

    A, real_A = _square(A, 'A')
    B, real_B = _square(B, 'B')
    n, m = A.shape[0], B.shape[0]
    real_inputs = real_A and real_B and _is_real(C)
    sa, sb = TriangularSplit(A), TriangularSplit(B)
    C = _rhs(C, n, m)

    state = _Iteration(tol, maxit, history_every)
    normC = np.linalg.norm(C)
    if normC == 0:
        state.record(0.0)
        return SolveReport(np.zeros((n, m)), 0, state.finish(), perf_counter() - start,
            'converged', 'bssor', omega=omega)

    X = _initial_guess(X0, n, m)
    R = dense_residual(A, B, C, X)
    state.record(np.linalg.norm(R) / normC)

    while True:
        status = state.check()
        if status is not None:
            break
        X = X + bssor_forward(R, sa, sb, omega)
        R = dense_residual(A, B, C, X)
        X = X + bssor_backward(R, sa, sb, omega)
        R = dense_residual(A, B, C, X)
        state.iterations += 1
        state.record(np.linalg.norm(R) / normC)
        _log.debug('iteration %d: relative residual %.3e', state.iterations, state.last)

    history = state.finish()
    if status == BREAKDOWN:
        _log.warning('BSSOR diverged at iteration %d (relative residual %.3g)',
            state.iterations, state.last)
    _log.info('BSSOR %dx%d, omega=%.6g: %s after %d iterations, residual %.3e',
        n, m, omega, status, state.iterations, state.last)
    return SolveReport(real_output(X, real_inputs), state.iterations, history,
        perf_counter() - start, status, 'bssor', omega=omega)

#######################################################################
# Direct solvers
#######################################################################

def complex_schur(M, lower=False):
    """Return (T, Q) with M = Q T Q*, Q unitary and T triangular.

    T is upper triangular, or lower triangular with lower=True (taken from
    the Schur form of M*).
    """
    M = np.asarray(M)
    if lower:
        U, Q = scipy.linalg.schur(M.conj().T, output='complex')
        return U.conj().T, Q
    return scipy.linalg.schur(M, output='complex')

def bartels_stewart_solve(A, B, C, floor=1e3):
    """Solve AX + XB = C directly.

    With A = Q1 T1 Q1* (T1 lower) and B = Q2 T2 Q2* (T2 upper) the
    transformed equation T1 Y + Y T2 = Q1* C Q2 is solved column by
    column, each column a lower-triangular system.  Raises
    SingularEquation if A and -B share an eigenvalue to within the floor.
    """
    A, real_A = _square(A, 'A')
    B, real_B = _square(B, 'B')
    n, m = A.shape[0], B.shape[0]
    real_inputs = real_A and real_B and _is_real(C)
    C = _rhs(C, n, m)

    T1, Q1 = complex_schur(A, lower=True)
    T2, Q2 = complex_schur(B)
    d1, d2 = np.diag(T1), np.diag(T2)
    denom = d1[:, None] + d2[None, :]
    bad = np.abs(denom) < floor * _EPS * (1 + np.abs(d1)[:, None] + np.abs(d2)[None, :])
    if np.any(bad):
        i, j = np.argwhere(bad)[0]
        raise SingularEquation('A and -B share the eigenvalue {0:.6g}'.format(d1[i]))

    F = Q1.conj().T @ C @ Q2
    Y = np.zeros((n, m), dtype=np.complex128)
    eye = np.eye(n)
    for k in range(m):
        rhs = F[:, k] - Y[:, :k] @ T2[:k, k]
        Y[:, k] = scipy.linalg.solve_triangular(T1 + d2[k] * eye, rhs,
            lower=True, check_finite=False)
    X = Q1 @ Y @ Q2.conj().T
    return real_output(X, real_inputs)

def kron_oracle_solve(A, B, C, limit=4096):
    """Solve (I_m (x) A + B^T (x) I_n) vec(X) = vec(C) densely.

    vec stacks columns.  n*m above limit raises Unsupported, which is also
    a ValueError.  A singular system raises SingularEquation.
    """
    A, real_A = _square(A, 'A')
    B, real_B = _square(B, 'B')
    n, m = A.shape[0], B.shape[0]
    if n * m > limit:
        raise Unsupported('Kronecker system of order {0} exceeds the limit of {1}'.format(
            n * m, limit))
    real_inputs = real_A and real_B and _is_real(C)
    C = _rhs(C, n, m)

    K = np.kron(np.eye(m), A) + np.kron(B.T, np.eye(n))
    try:
        x = _dense_solve(K, C.ravel(order='F'))
    except np.linalg.LinAlgError as e:
        raise SingularEquation('Kronecker system is singular: {0}'.format(e))
    return real_output(x.reshape((n, m), order='F'), real_inputs)

"""
The circulant and skew-circulant splitting (CSCS) iteration.

Write A = C_A + S_A and B = C_B + S_B.  Given shifts alpha, beta > 0, one
CSCS iteration takes X to X' by two corrections::

    R  = C - A X - X B
    (alpha I + C_A) Z + Z (beta I + C_B) = R          X += Z
    R  = C - A X - X B
    (alpha I + S_A) Z + Z (beta I + S_B) = R          X += Z

In the Fourier basis of each side both shifted equations are diagonal, so
each correction is four FFT sweeps and an entrywise division by the
precomputed denominators held in a CSCSContext.  The residual is also
formed through the spectra, so no dense n x n matrix is ever built.

Shift selection
---------------
Convergence is governed by gamma = alpha + beta.  Let the spectra of the
Kronecker sums C~ = I (x) C_A + C_B^T (x) I and S~ (likewise) lie in the box
theta_min <= Re <= theta_max, eta_min <= |Im| <= eta_max.  The aggregate
shift minimising the box estimate of the contraction factor is::

    eta~   = sqrt(theta_min (theta_max - theta_min) / 2)
    gamma* = sqrt(theta_min theta_max - eta_max^2)    if eta_max < eta~
             sqrt(theta_min^2 + eta_max^2)            otherwise

and select_shifts returns alpha = beta = gamma*/2 (times a multiplier).

:date: 15-Oct-2026
"""

import logging
import warnings
from time import perf_counter

import numpy as np
import scipy.linalg

from toeplitz import ToeplitzSpec, SpectralSplit, spectral_split, to_dense, real_output
from toeplitz.fourier import (
    conj_circulant_basis, conj_skew_basis, LEFT, RIGHT, FORWARD, ADJOINT,
)
from . import Breakdown

__all__ = [
    'CSCSContext', 'ShiftSelection', 'SolveReport',
    'kron_spectra', 'select_shifts', 'box_bound', 'contraction_bound',
    'residual', 'half_step_circulant', 'half_step_skew', 'cscs_sweep', 'cscs_solve',
    'iteration_matrix_dense',
    'CONVERGED', 'MAX_ITERATIONS', 'BREAKDOWN', 'COMPLETED', 'DIVERGENCE_LIMIT',
]

_log = logging.getLogger(__name__)

_EPS = np.finfo(np.float64).eps

CONVERGED = 'converged'
MAX_ITERATIONS = 'max_iterations'
BREAKDOWN = 'breakdown'
COMPLETED = 'completed'

# Relative residuals above this count as divergence.
DIVERGENCE_LIMIT = 1e8

#######################################################################
# Shared helpers for the iterative solvers.
#######################################################################

def _as_split(T, workers=None):
    if isinstance(T, SpectralSplit):
        return T
    if isinstance(T, ToeplitzSpec):
        return spectral_split(T, workers)
    raise TypeError('Expected a ToeplitzSpec or SpectralSplit, not {0}'.format(type(T).__name__))

def _is_real(M):
    return np.isrealobj(M) or not np.any(np.imag(M))

def _rhs(C, n, m):
    """C as a complex n x m array, with a shape check."""
    C = np.asarray(C)
    if C.shape != (n, m):
        raise ValueError('C has shape {0}, expected ({1}, {2})'.format(C.shape, n, m))
    return C.astype(np.complex128)

def _initial_guess(X0, n, m):
    if X0 is None:
        return np.zeros((n, m), dtype=np.complex128)
    X0 = np.asarray(X0)
    if X0.shape != (n, m):
        raise ValueError('X0 has shape {0}, expected ({1}, {2})'.format(X0.shape, n, m))
    return X0.astype(np.complex128)

def _check_stopping(tol, maxit, history_every=1):
    if not tol > 0:
        raise ValueError('tol must be positive, got {0}'.format(tol))
    if int(maxit) != maxit or maxit < 0:
        raise ValueError('maxit must be a non-negative integer, got {0}'.format(maxit))
    if int(history_every) != history_every or history_every < 1:
        raise ValueError('history_every must be a positive integer, got {0}'.format(history_every))

def _dense_solve(K, rhs):
    """Solve K x = rhs through an LU factorization.

    Raises numpy.linalg.LinAlgError when a pivot is at roundoff level,
    |u_ii| <= order * eps * max|K|, or the solution is not finite.
    """
    with warnings.catch_warnings(), np.errstate(all='ignore'):
        warnings.simplefilter('ignore', scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(K, check_finite=False)
        pivots = np.abs(np.diag(lu))
        limit = K.shape[0] * _EPS * np.max(np.abs(K))
        bad = ~np.isfinite(pivots) | (pivots <= limit)
        if np.any(bad):
            i = int(np.argmax(bad))
            raise np.linalg.LinAlgError('pivot {0} is {1:.3g}'.format(i, pivots[i]))
        x = scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)
    if not np.all(np.isfinite(x)):
        raise np.linalg.LinAlgError('solution is not finite')
    return x

def _check_shift(name, value):
    if not (np.isfinite(value) and value > 0):
        raise ValueError('{0} must be a positive real, got {1}'.format(name, value))
    return float(value)


class _Iteration(object):
    """Bookkeeping shared by the stationary iterations.

    Tracks the residual history and decides when to stop.  Call check()
    with the current relative residual before each sweep; it returns the
    final status or None to keep going.
    """

    def __init__(self, tol, maxit, history_every=1, keep_half_residuals=False):
        self.tol = tol
        self.maxit = maxit
        self.history_every = history_every
        self.iterations = 0
        self.history = []
        self.half_history = [] if keep_half_residuals else None
        self._recorded = -1
        self.last = None

    def record(self, rel, half=None):
        self.last = rel
        if half is not None and self.half_history is not None:
            self.half_history.append(half)
        if self.iterations % self.history_every == 0:
            self.history.append(rel)
            self._recorded = self.iterations

    def check(self):
        rel = self.last
        if not np.isfinite(rel) or rel > DIVERGENCE_LIMIT:
            return BREAKDOWN
        if rel <= self.tol:
            return CONVERGED
        if self.iterations >= self.maxit:
            return MAX_ITERATIONS
        return None

    def finish(self):
        if self._recorded != self.iterations:
            self.history.append(self.last)
            self._recorded = self.iterations
        return np.array(self.history, dtype=np.float64)

#######################################################################
# Result and parameter types
#######################################################################

class SolveReport(object):
    """The outcome of an iterative solve.

    Data members:
        X
            The final iterate, n x m.  Real when the problem was real and
            the imaginary part was negligible.

        iterations
            Number of full iterations performed.

        residual_history
            Relative residuals ||C - AX - XB||_F / ||C||_F.  Entry 0 is for
            the initial guess; later entries are every history_every-th
            iteration, and the last entry is always the final iterate.

        elapsed_seconds
            Wall-clock time of the solve, setup included.

        status
            'converged', 'max_iterations' or 'breakdown'.

        method, alpha, beta, omega
            Which solver ran and the parameters it used.  Parameters a
            method does not use are None.

        shifts
            The ShiftSelection behind automatically chosen shifts, or None.

        half_residual_history
            Relative residuals after each first half-step, if requested.
    """

    def __init__(self, X, iterations, residual_history, elapsed_seconds, status,
            method='cscs', alpha=None, beta=None, omega=None, shifts=None,
            half_residual_history=None):
        self.X = X
        self.iterations = iterations
        self.residual_history = residual_history
        self.elapsed_seconds = elapsed_seconds
        self.status = status
        self.method = method
        self.alpha = alpha
        self.beta = beta
        self.omega = omega
        self.shifts = shifts
        self.half_residual_history = half_residual_history

    @property
    def residual(self):
        """The final relative residual."""
        return float(self.residual_history[-1])

    @property
    def converged(self):
        return self.status == CONVERGED

    def __repr__(self):
        return '{0}(method={1!r}, status={2!r}, iterations={3}, residual={4:.3e})'.format(
            self.__class__.__name__, self.method, self.status, self.iterations, self.residual)


class ShiftSelection(object):
    """Spectral bounds of the Kronecker sums and the shifts derived from them.

    theta_min, theta_max
        Bounds on the real parts over the union of both spectra.  Real parts
        within roundoff of zero are counted as zero.

    eta_min, eta_max
        Bounds on the absolute imaginary parts.

    eta_tilde
        The branch point of the gamma* formula (nan when theta_min < 0).

    gamma_star, sigma_star
        The bound-minimising aggregate shift and the box estimate it
        achieves.  sigma_star is nan on fallback.

    alpha, beta
        The shifts to use, multiplier * gamma_star / 2 each.

    circulant_definiteness, skew_definiteness
        'definite', 'semidefinite' or 'indefinite' for C~ and S~.

    definiteness
        'definite' when neither is indefinite and at least one is definite,
        so the contraction bound is below one for every gamma > 0;
        'semidefinite' when both are only semidefinite; 'fallback' when
        gamma* was undefined and 1 was used instead.
    """

    _fields = (
        'theta_min', 'theta_max', 'eta_min', 'eta_max', 'eta_tilde',
        'gamma_star', 'sigma_star', 'alpha', 'beta',
        'circulant_definiteness', 'skew_definiteness', 'definiteness',
    )

    def __init__(self, **kwargs):
        missing = [f for f in self._fields if f not in kwargs]
        unknown = sorted(k for k in kwargs if k not in self._fields)
        if missing or unknown:
            raise TypeError('ShiftSelection fields missing: {0}; unknown: {1}'.format(
                missing, unknown))
        for f in self._fields:
            setattr(self, f, kwargs[f])

    @property
    def fallback(self):
        return self.definiteness == 'fallback'

    def keys(self):
        return list(self._fields)

    def items(self):
        return [(f, getattr(self, f)) for f in self._fields]

    def __repr__(self):
        return '{0}({1})'.format(self.__class__.__name__,
            ', '.join('{0}={1!r}'.format(k, v) for k, v in self.items()))


class CSCSContext(object):
    """Everything a CSCS half-step needs, computed once per solve.

    A and B are ToeplitzSpec or SpectralSplit objects.  Construction fails
    with Breakdown if any shifted diagonal entry is below the floor
    ``floor * eps * (1 + |alpha + lam_A[i]| + |beta + lam_B[j]|)``.
    """

    def __init__(self, A, B, alpha, beta, floor=1e3, workers=None):
        self.split_A = _as_split(A, workers)
        self.split_B = _as_split(B, workers)
        self.alpha = _check_shift('alpha', alpha)
        self.beta = _check_shift('beta', beta)
        self.floor = floor
        self.workers = workers

        sa, sb = self.split_A, self.split_B
        self.denom_circ = self._denominator(sa.lam, sb.lam, 'circulant')
        self.denom_skew = self._denominator(sa.sig, sb.sig, 'skew-circulant')
        self.denom_circ.flags.writeable = False
        self.denom_skew.flags.writeable = False

    def _denominator(self, left, right, what):
        a = self.alpha + left
        b = self.beta + right
        denom = a[:, None] + b[None, :]
        limit = self.floor * _EPS * (1 + np.abs(a)[:, None] + np.abs(b)[None, :])
        bad = np.abs(denom) < limit
        if np.any(bad):
            i, j = np.argwhere(bad)[0]
            raise Breakdown('Shifted {0} equation is singular: denominator {1:.3g} at ({2}, {3})'.format(
                what, denom[i, j], i, j))
        return denom

    @property
    def n(self):
        return self.split_A.n

    @property
    def m(self):
        return self.split_B.n

    @property
    def is_real(self):
        return self.split_A.T.is_real and self.split_B.T.is_real

    def apply_left(self, X):
        """A X, through the spectra of C_A and S_A."""
        sa, w = self.split_A, self.workers
        Y = conj_circulant_basis(X, LEFT, FORWARD, w)
        AX = conj_circulant_basis(sa.lam[:, None] * Y, LEFT, ADJOINT, w)
        Y = conj_skew_basis(X, LEFT, FORWARD, sa.mod, w)
        AX += conj_skew_basis(sa.sig[:, None] * Y, LEFT, ADJOINT, sa.mod, w)
        return AX

    def apply_right(self, X):
        """X B, through the spectra of C_B and S_B."""
        sb, w = self.split_B, self.workers
        Y = conj_circulant_basis(X, RIGHT, FORWARD, w)
        XB = conj_circulant_basis(Y * sb.lam[None, :], RIGHT, ADJOINT, w)
        Y = conj_skew_basis(X, RIGHT, FORWARD, sb.mod, w)
        XB += conj_skew_basis(Y * sb.sig[None, :], RIGHT, ADJOINT, sb.mod, w)
        return XB

    def __repr__(self):
        return '{0}(n={1}, m={2}, alpha={3:.6g}, beta={4:.6g})'.format(
            self.__class__.__name__, self.n, self.m, self.alpha, self.beta)

#######################################################################
# Spectra, bounds and shifts
#######################################################################

def kron_spectra(lam_A, lam_B, sig_A, sig_B):
    """Spectra of C~ = I (x) C_A + C_B^T (x) I and of S~, as flat vectors.

    Entry i + j*n is lam_A[i] + lam_B[j], matching column-major vec order.
    """
    lam_A, lam_B, sig_A, sig_B = (np.asarray(v, dtype=np.complex128).ravel()
        for v in (lam_A, lam_B, sig_A, sig_B))
    if not (len(lam_A) and len(lam_B) and len(sig_A) and len(sig_B)):
        raise ValueError('kron_spectra needs non-empty eigenvalue vectors')
    circ = (lam_A[:, None] + lam_B[None, :]).ravel(order='F')
    skew = (sig_A[:, None] + sig_B[None, :]).ravel(order='F')
    return circ, skew

def _classify(real_parts):
    low = np.min(real_parts)
    if low > 0:
        return 'definite'
    elif low == 0:
        return 'semidefinite'
    return 'indefinite'

def box_bound(gamma, theta_min, theta_max, eta_min, eta_max):
    """Largest ((gamma-theta)^2 + eta^2) / ((gamma+theta)^2 + eta^2) over the
    box theta_min <= theta <= theta_max, eta_min <= eta <= eta_max.

    For theta_min >= 0 the maximum sits on a corner of the box.
    """
    best = 0.0
    for theta in (theta_min, theta_max):
        for eta in (eta_min, eta_max):
            value = ((gamma - theta)**2 + eta**2) / ((gamma + theta)**2 + eta**2)
            best = max(best, value)
    return best

def select_shifts(circ_spectrum, skew_spectrum, multiplier=1.0):
    """Choose alpha = beta = multiplier * gamma* / 2 from the spectra of C~ and S~.

    If theta_min < 0, or gamma* comes out as zero, gamma* = 1 is used with
    a warning and definiteness is 'fallback'.
    """
    circ = np.asarray(circ_spectrum, dtype=np.complex128).ravel()
    skew = np.asarray(skew_spectrum, dtype=np.complex128).ravel()
    if not (len(circ) and len(skew)):
        raise ValueError('select_shifts needs non-empty spectra')
    if not multiplier > 0:
        raise ValueError('multiplier must be positive, got {0}'.format(multiplier))

    both = np.concatenate((circ, skew))
    snap = 1e3 * _EPS * np.max(np.abs(both))

    def snapped(v):
        return np.where(np.abs(v) <= snap, 0.0, v)

    re_circ, re_skew = snapped(circ.real), snapped(skew.real)
    im = snapped(np.abs(both.imag))
    re = np.concatenate((re_circ, re_skew))

    theta_min, theta_max = float(np.min(re)), float(np.max(re))
    eta_min, eta_max = float(np.min(im)), float(np.max(im))

    circ_def = _classify(re_circ)
    skew_def = _classify(re_skew)
    if 'indefinite' in (circ_def, skew_def):
        definiteness = 'fallback'
    elif 'definite' in (circ_def, skew_def):
        definiteness = 'definite'
    else:
        definiteness = 'semidefinite'

    eta_tilde = gamma = sigma = float('nan')
    if theta_min >= 0:
        eta_tilde = np.sqrt(theta_min * (theta_max - theta_min) / 2)
        if eta_max < eta_tilde:
            gamma = np.sqrt(theta_min * theta_max - eta_max**2)
            sigma = (theta_min + theta_max - 2*gamma) / (theta_min + theta_max + 2*gamma)
        else:
            gamma = np.sqrt(theta_min**2 + eta_max**2)
            if gamma > 0:
                sigma = (gamma - theta_min) / (gamma + theta_min)

    if not gamma > 0:
        _log.warning('No usable optimal shift (theta_min = %.3g, eta_max = %.3g); using gamma = 1',
            theta_min, eta_max)
        gamma = 1.0
        sigma = float('nan')
        definiteness = 'fallback'

    gamma = float(gamma)
    alpha = beta = multiplier * gamma / 2
    _log.debug('theta in [%.6g, %.6g], eta in [%.6g, %.6g]: gamma* = %.6g, sigma* = %.6g',
        theta_min, theta_max, eta_min, eta_max, gamma, sigma)

    return ShiftSelection(
        theta_min=theta_min, theta_max=theta_max,
        eta_min=eta_min, eta_max=eta_max, eta_tilde=float(eta_tilde),
        gamma_star=gamma, sigma_star=float(sigma),
        alpha=alpha, beta=beta,
        circulant_definiteness=circ_def, skew_definiteness=skew_def,
        definiteness=definiteness,
    )

def contraction_bound(circ_spectrum, skew_spectrum, gamma, floor=1e3):
    """The bound max|(g-l)/(g+l)| * max|(g-m)/(g+m)| on the spectral radius
    of the iteration matrix, l over the spectrum of C~ and m over S~.
    """
    if not gamma > 0:
        raise ValueError('gamma must be positive, got {0}'.format(gamma))
    factors = []
    for spectrum in (circ_spectrum, skew_spectrum):
        spectrum = np.asarray(spectrum, dtype=np.complex128).ravel()
        denom = gamma + spectrum
        if np.any(np.abs(denom) < floor * _EPS * (1 + gamma + np.abs(spectrum))):
            raise Breakdown('gamma = {0:.6g} is an eigenvalue of a negated Kronecker sum'.format(gamma))
        factors.append(np.max(np.abs((gamma - spectrum) / denom)))
    return float(factors[0] * factors[1])

#######################################################################
# The iteration
#######################################################################

def residual(X, C, ctx):
    """R = C - A X - X B, without forming A or B."""
    X = np.asarray(X)
    if X.shape != (ctx.n, ctx.m):
        raise ValueError('X has shape {0}, expected ({1}, {2})'.format(X.shape, ctx.n, ctx.m))
    return C - ctx.apply_left(X) - ctx.apply_right(X)

def half_step_circulant(R, ctx):
    """Solve (alpha I + C_A) Z + Z (beta I + C_B) = R for Z."""
    w = ctx.workers
    Rt = conj_circulant_basis(conj_circulant_basis(R, LEFT, FORWARD, w), RIGHT, FORWARD, w)
    Zt = Rt / ctx.denom_circ
    return conj_circulant_basis(conj_circulant_basis(Zt, LEFT, ADJOINT, w), RIGHT, ADJOINT, w)

def half_step_skew(R, ctx):
    """Solve (alpha I + S_A) Z + Z (beta I + S_B) = R for Z."""
    w = ctx.workers
    da, db = ctx.split_A.mod, ctx.split_B.mod
    Rt = conj_skew_basis(conj_skew_basis(R, LEFT, FORWARD, da, w), RIGHT, FORWARD, db, w)
    Zt = Rt / ctx.denom_skew
    return conj_skew_basis(conj_skew_basis(Zt, LEFT, ADJOINT, da, w), RIGHT, ADJOINT, db, w)

_ORDERS = {
    'circulant': (half_step_circulant, half_step_skew),
    'skew': (half_step_skew, half_step_circulant),
}

def cscs_sweep(X, C, ctx, R=None, order='circulant'):
    """One full CSCS iteration from X.

    R may be passed in if the residual of X is already known.  Returns
    (X_new, R_new, R_half) where R_half is the residual between the two
    half-steps.
    """
    try:
        first, second = _ORDERS[order]
    except KeyError:
        raise ValueError("order must be 'circulant' or 'skew', not {0!r}".format(order))
    if R is None:
        R = residual(X, C, ctx)
    X = X + first(R, ctx)
    R_half = residual(X, C, ctx)
    X = X + second(R_half, ctx)
    return X, residual(X, C, ctx), R_half

def cscs_solve(A, B, C, alpha=None, beta=None, tol=1e-6, maxit=5000, X0=None,
        shift_multiplier=1.0, order='circulant', floor=1e3, history_every=1,
        keep_half_residuals=False, workers=None):
    """Solve AX + XB = C for Toeplitz A (n x n) and B (m x m).

    A, B
        ToeplitzSpec (or an already built SpectralSplit).

    C
        The n x m right-hand side.

    alpha, beta
        Shifts.  If both are omitted they come from select_shifts, scaled
        by shift_multiplier.  If only one is given the other matches it.

    tol, maxit
        Stop once ||C - AX - XB||_F <= tol * ||C||_F, or after maxit
        iterations.

    X0
        Initial guess, zero by default.

    order
        'circulant' runs the circulant half-step first, 'skew' the
        skew-circulant one.

    floor
        Breakdown threshold for the diagonal solves, in multiples of eps.

    history_every, keep_half_residuals
        Control how much of the residual history the report keeps.

    workers
        Thread count for the transforms.  The result does not depend on it.

    Returns a SolveReport.  Raises Breakdown if a shifted equation is
    singular; slow convergence or divergence is reported through status.
    """
    start = perf_counter()
    _check_stopping(tol, maxit, history_every)
    if order not in _ORDERS:
        raise ValueError("order must be 'circulant' or 'skew', not {0!r}".format(order))

    split_A = _as_split(A, workers)
    split_B = _as_split(B, workers)
    n, m = split_A.n, split_B.n
    real_inputs = split_A.T.is_real and split_B.T.is_real and _is_real(C)
    C = _rhs(C, n, m)

    shifts = None
    if alpha is None and beta is None:
        spectra = kron_spectra(split_A.lam, split_B.lam, split_A.sig, split_B.sig)
        shifts = select_shifts(*spectra, multiplier=shift_multiplier)
        alpha, beta = shifts.alpha, shifts.beta
    elif alpha is None:
        alpha = beta
    elif beta is None:
        beta = alpha

    ctx = CSCSContext(split_A, split_B, alpha, beta, floor, workers)
    state = _Iteration(tol, maxit, history_every, keep_half_residuals)

    normC = np.linalg.norm(C)
    if normC == 0:
        X = np.zeros((n, m), dtype=np.float64 if real_inputs else np.complex128)
        state.record(0.0)
        return SolveReport(X, 0, state.finish(), perf_counter() - start, CONVERGED,
            'cscs', ctx.alpha, ctx.beta, shifts=shifts,
            half_residual_history=state.half_history)

    X = _initial_guess(X0, n, m)
    R = residual(X, C, ctx)
    state.record(np.linalg.norm(R) / normC)

    while True:
        status = state.check()
        if status is not None:
            break
        X, R, R_half = cscs_sweep(X, C, ctx, R, order)
        state.iterations += 1
        rel = np.linalg.norm(R) / normC
        state.record(rel, np.linalg.norm(R_half) / normC)
        _log.debug('iteration %d: relative residual %.3e', state.iterations, rel)

    history = state.finish()
    if status == BREAKDOWN:
        _log.warning('CSCS diverged at iteration %d (relative residual %.3g)',
            state.iterations, state.last)
    _log.info('CSCS %dx%d, alpha=%.6g beta=%.6g: %s after %d iterations, residual %.3e',
        n, m, ctx.alpha, ctx.beta, status, state.iterations, state.last)

    return SolveReport(real_output(X, real_inputs), state.iterations, history,
        perf_counter() - start, status, 'cscs', ctx.alpha, ctx.beta, shifts=shifts,
        half_residual_history=state.half_history)

def iteration_matrix_dense(A, B, gamma, limit=400):
    """The CSCS iteration matrix for aggregate shift gamma, built densely::

        M = (gI + S~)^-1 (gI - C~) (gI + C~)^-1 (gI - S~)

    Only for small problems: n*m must not exceed limit.  Raises Breakdown
    if either shifted Kronecker sum is singular.
    """
    split_A = _as_split(A)
    split_B = _as_split(B)
    n, m = split_A.n, split_B.n
    if n * m > limit:
        raise ValueError('Dense iteration matrix of order {0} exceeds the limit of {1}'.format(
            n * m, limit))

    In, Im = np.eye(n), np.eye(m)
    Ct = (np.kron(Im, to_dense(split_A.circulant)) +
          np.kron(to_dense(split_B.circulant).T, In))
    St = (np.kron(Im, to_dense(split_A.skew)) +
          np.kron(to_dense(split_B.skew).T, In))
    gI = gamma * np.eye(n * m)

    try:
        inner = _dense_solve(gI + Ct, gI - St)
        return _dense_solve(gI + St, (gI - Ct) @ inner)
    except np.linalg.LinAlgError as e:
        raise Breakdown('Shifted Kronecker sum is singular at gamma = {0:.6g}: {1}'.format(
            gamma, e))

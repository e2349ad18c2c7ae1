"""
Test problem families for Toeplitz Sylvester equations.

Every generator returns a ProblemInstance holding A and B as
toeplitz.ToeplitzSpec, the right-hand side C as a dense array, a meta
dict naming the generator and its parameters, and the exact solution when
it is known by construction.

convection_diffusion_example1
    Five-point finite differences of -u_xx - u_yy + sigma u_x + tau u_y = f
    on the unit square, centered or upwind, written as AX + XA^T = V.

convection_diffusion_cd2
    The tridiagonal variant with A and B built from tau and sigma
    separately.

example2_instance
    Five-diagonal Toeplitz matrices of order n^2 with a uniform random C.

example3_instance
    A = B = tridiag(-1 + r, 2 + 100/(n+1)^2, -1 - r).

example4_instance
    Dense Toeplitz A = C_A + S_A from random circulant and skew-circulant
    parts translated to be positive definite, B = A, X = ones.

random_definite_toeplitz
    The same construction as a bare ToeplitzSpec, for tests.

Generation is deterministic: the same parameters and seed always give the
same instance.
"""

import logging

import numpy as np

from toeplitz import (
    ToeplitzSpec, CirculantSpec, SkewCirculantSpec,
    circulant_eigenvalues, skew_circulant_eigenvalues, to_dense,
)

__all__ = [
    'ProblemInstance',
    'convection_diffusion_example1', 'convection_diffusion_cd2',
    'example2_instance', 'example3_instance', 'example4_instance',
    'random_definite_toeplitz', 'GENERATORS',
]

_log = logging.getLogger(__name__)

class ProblemInstance(object):
    """A Sylvester problem AX + XB = C with Toeplitz A and B.

    A, B
        ToeplitzSpec of orders n and m.

    C
        Dense n x m right-hand side.

    meta
        Dict with at least 'generator'; the remaining keys are the
        parameters the generator was called with and any derived values.

    X_true
        The exact solution, or None if not known.
    """

    def __init__(self, A, B, C, meta=None, X_true=None):
        C = np.asarray(C)
        if C.shape != (A.n, B.n):
            raise ValueError('C has shape {0}, expected ({1}, {2})'.format(C.shape, A.n, B.n))
        if X_true is not None:
            X_true = np.asarray(X_true)
            if X_true.shape != C.shape:
                raise ValueError('X_true has shape {0}, expected {1}'.format(X_true.shape, C.shape))
        self.A = A
        self.B = B
        self.C = C
        self.meta = dict(meta or {})
        self.X_true = X_true

    @property
    def n(self):
        return self.A.n

    @property
    def m(self):
        return self.B.n

    @property
    def generator(self):
        return self.meta.get('generator', 'custom')

    @property
    def label(self):
        """A short identifier such as 'example3(r=0.01;rhs=ones)' for reports."""
        skip = ('generator', 'n', 'm', 'h', 'a', 'b', 'c', 'd', 'e', 'mu')
        params = ';'.join('{0}={1}'.format(k, v) for k, v in sorted(self.meta.items())
            if k not in skip)
        return '{0}({1})'.format(self.generator, params)

    def dense(self):
        """(A, B) as dense arrays."""
        return to_dense(self.A), to_dense(self.B)

    def relative_residual(self, X):
        """||C - AX - XB||_F / ||C||_F, with dense products."""
        A, B = self.dense()
        R = self.C - A @ X - X @ B
        return float(np.linalg.norm(R) / np.linalg.norm(self.C))

    def error(self, X):
        """max |X - X_true|."""
        if self.X_true is None:
            raise ValueError('{0} has no known solution'.format(self.label))
        return float(np.max(np.abs(np.asarray(X) - self.X_true)))

    def __repr__(self):
        return '{0}({1}, n={2}, m={3})'.format(self.__class__.__name__, self.label, self.n, self.m)

#######################################################################
# Helpers
#######################################################################

def _tridiagonal(n, sub, diag, sup):
    """ToeplitzSpec with the given constant sub-, main and superdiagonal."""
    col = np.zeros(n)
    row = np.zeros(n)
    col[0] = row[0] = diag
    col[1] = sub
    row[1] = sup
    return ToeplitzSpec(col, row)

def _check_order(n, name='n', least=2):
    if int(n) != n or n < least:
        raise ValueError('{0} must be an integer >= {1}, got {2}'.format(name, least, n))
    return int(n)

def _exponential_rhs(n, m):
    """v_ij = h^2 exp(x_i + y_j) on the interior grid points, h = 1/(n+1)."""
    h = 1.0 / (n + 1)
    x = h * np.arange(1, n + 1)
    y = h * np.arange(1, m + 1)
    return h**2 * np.exp(x[:, None] + y[None, :])

def _ones_rhs(A, B):
    """C = A 1 + 1 B, so that X = ones solves the equation."""
    X = np.ones((A.n, B.n))
    Ad, Bd = to_dense(A), to_dense(B)
    C = Ad @ X + X @ Bd
    if A.is_real and B.is_real:
        C = C.real
    return C, X

def centered_coefficients(sigma, tau, h):
    """Stencil values (a, b, c, d, e) of the centered difference scheme."""
    return (4.0,
        -(1 + tau * h / 2),
        -(1 + sigma * h / 2),
        -(1 - sigma * h / 2),
        -(1 - tau * h / 2))

def upwind_coefficients(sigma, tau, h):
    """Stencil values (a, b, c, d, e) of the upwind scheme, sigma, tau >= 0."""
    return (4.0 + (tau + sigma) * h,
        -(1 + tau * h),
        -(1 + sigma * h),
        -1.0,
        -1.0)

_SCHEMES = {
    'centered': centered_coefficients,
    'upwind': upwind_coefficients,
}

#######################################################################
# Generators
#######################################################################

def convection_diffusion_example1(n, sigma, tau, scheme='centered'):
    """The convection-diffusion problem as AX + XA^T = V.

    h = 1/(n+1), A = tridiag(c, a/2, d) of order n and v_ij = h^2 e^(ih + jh).
    Reducing the five-point system to this form needs b == c and d == e,
    so sigma must equal tau.
    """
    n = _check_order(n)
    try:
        coefficients = _SCHEMES[scheme]
    except KeyError:
        raise ValueError('Unknown scheme {0!r}; use one of {1}'.format(scheme, sorted(_SCHEMES)))
    if sigma != tau:
        raise ValueError('The Sylvester form needs sigma == tau, got sigma={0}, tau={1}'.format(
            sigma, tau))
    if scheme == 'upwind' and (sigma < 0 or tau < 0):
        raise ValueError('The upwind scheme needs sigma, tau >= 0')

    h = 1.0 / (n + 1)
    a, b, c, d, e = coefficients(sigma, tau, h)
    A = _tridiagonal(n, c, a / 2, d)
    meta = dict(generator='example1', n=n, sigma=sigma, tau=tau, scheme=scheme, h=h,
        a=a, b=b, c=c, d=d, e=e)
    return ProblemInstance(A, A.transpose(), _exponential_rhs(n, n), meta)

def convection_diffusion_cd2(n, sigma, tau):
    """A = tridiag(-1 + tau h/2, 2, -1 - tau h/2), B likewise with sigma."""
    n = _check_order(n)
    h = 1.0 / (n + 1)
    A = _tridiagonal(n, -1 + tau * h / 2, 2.0, -1 - tau * h / 2)
    B = _tridiagonal(n, -1 + sigma * h / 2, 2.0, -1 - sigma * h / 2)
    meta = dict(generator='cd2', n=n, sigma=sigma, tau=tau, h=h)
    return ProblemInstance(A, B, _exponential_rhs(n, n), meta)

def _five_diagonal(k, sigma):
    """Order k^2 Toeplitz matrix with the centered stencil on offsets 0, +-1, +-k."""
    h = 1.0 / (k + 1)
    a, b, c, d, e = centered_coefficients(sigma, sigma, h)
    size = k * k
    col = np.zeros(size)
    row = np.zeros(size)
    col[0] = row[0] = a
    col[1] = c
    row[1] = d
    col[k] = b
    row[k] = e
    return ToeplitzSpec(col, row)

def example2_instance(n, m, sigma1, sigma2, seed=0):
    """Five-diagonal A (order n^2, velocity sigma1) and B (order m^2,
    velocity sigma2) with C uniform on [0, 1)."""
    n = _check_order(n)
    m = _check_order(m, 'm')
    A = _five_diagonal(n, sigma1)
    B = _five_diagonal(m, sigma2)
    rng = np.random.default_rng(seed)
    C = rng.random((A.n, B.n))
    meta = dict(generator='example2', n=n, m=m, sigma1=sigma1, sigma2=sigma2, seed=seed)
    return ProblemInstance(A, B, C, meta)

def example3_instance(n, r, rhs='ones', seed=0):
    """A = B = tridiag(-1 + r, 2 + 100/(n+1)^2, -1 - r).

    rhs='ones' builds C so that X = ones is the solution.  rhs='random'
    draws C uniform on [0, 1) from seed, with no known solution.
    """
    n = _check_order(n)
    if not r > 0:
        raise ValueError('r must be positive, got {0}'.format(r))
    A = _tridiagonal(n, -1 + r, 2 + 100.0 / (n + 1)**2, -1 - r)
    meta = dict(generator='example3', n=n, r=r, rhs=rhs)
    if rhs == 'ones':
        C, X = _ones_rhs(A, A)
        return ProblemInstance(A, A, C, meta, X)
    elif rhs == 'random':
        meta['seed'] = seed
        C = np.random.default_rng(seed).random((n, n))
        return ProblemInstance(A, A, C, meta)
    raise ValueError("rhs must be 'ones' or 'random', not {0!r}".format(rhs))

def _translated_parts(n, rng, margin):
    """Random circulant and skew-circulant parts in canonical form
    (c_0 == s_0), both translated by the same mu so that the smaller of the
    two spectra has real parts >= margin, with equality at its minimum."""
    c = rng.random(n)
    s = rng.random(n)
    c[0] = s[0] = (c[0] + s[0]) / 2
    low = min(np.min(circulant_eigenvalues(CirculantSpec(c)).real),
        np.min(skew_circulant_eigenvalues(SkewCirculantSpec(s)).real))
    mu = margin - low
    c[0] += mu
    s[0] += mu
    return CirculantSpec(c), SkewCirculantSpec(s), float(mu)

def random_definite_toeplitz(n, rng, margin=1.0):
    """A random dense real Toeplitz matrix whose circulant and
    skew-circulant parts have spectra with real parts >= margin.

    rng is a numpy Generator or a seed.
    """
    n = _check_order(n, least=1)
    if not margin > 0:
        raise ValueError('margin must be positive, got {0}'.format(margin))
    CA, SA, _ = _translated_parts(n, np.random.default_rng(rng), margin)
    return ToeplitzSpec((CA.first_col + SA.first_col).real,
        (CA.first_row() + SA.first_row()).real)

def example4_instance(n, seed=0, margin=0.1):
    """Dense Toeplitz A = C_A + S_A, B = A, with X = ones.

    The first columns of C_A and S_A are uniform on [0, 1), with their
    shared diagonal averaged so that they are the parts cscs_split gives
    back.  Both are then translated by mu I, mu = margin - min Re over the
    two spectra.  mu is recorded in meta.
    """
    n = _check_order(n)
    if not margin > 0:
        raise ValueError('margin must be positive, got {0}'.format(margin))
    CA, SA, mu = _translated_parts(n, np.random.default_rng(seed), margin)
    _log.debug('Example 4, n=%d: translated by %.6g', n, mu)

    A = ToeplitzSpec((CA.first_col + SA.first_col).real,
        (CA.first_row() + SA.first_row()).real)
    C, X = _ones_rhs(A, A)
    meta = dict(generator='example4', n=n, seed=seed, margin=margin, mu=mu)
    return ProblemInstance(A, A, C, meta, X)


GENERATORS = {
    'example1': convection_diffusion_example1,
    'cd2': convection_diffusion_cd2,
    'example2': example2_instance,
    'example3': example3_instance,
    'example4': example4_instance,
}

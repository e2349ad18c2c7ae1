"""
Structured Toeplitz, circulant and skew-circulant matrices.

A Toeplitz matrix of order n is constant along its diagonals, T[j, k] =
t[j-k], and is fully described by its first column (t_0 .. t_{n-1}) and
its first row (t_0, t_{-1} .. t_{1-n}).  Every Toeplitz matrix splits
exactly into a circulant part and a skew-circulant part::

    >>> from toeplitz import ToeplitzSpec, cscs_split
    >>> T = ToeplitzSpec([2, -1, 0, 0], [2, -1, 0, 0])
    >>> C, S = cscs_split(T)
    >>> C.first_col.real
    array([ 1. , -0.5,  0. , -0.5])
    >>> S.first_col.real
    array([ 1. , -0.5,  0. ,  0.5])

Both parts are diagonalized by (modulated) Fourier matrices, so their
eigenvalues come out of a single FFT of the first column.  See
toeplitz.fourier for the transform convention.

All spec objects are immutable once built; the arrays they hold are
flagged read-only and can be shared between threads.

Splitting
---------
For l = 1 .. n-1 the circulant part C and skew-circulant part S have::

    c_0 = s_0 = t_0 / 2
    c_l = (t_l + t_{l-n}) / 2
    s_l = (t_l - t_{l-n}) / 2

so C + S == T and C[j,k] = c_{(j-k) mod n}, S[j,k] = +/- s_{|j-k|} with
the sign flipping on the wrapped-around diagonals.

:date: 14-Oct-2026
"""

import logging

import numpy as np
import scipy.linalg

from .fourier import get_modulation, get_plan, INVERSE

__all__ = [
    'SpecError',
    'ToeplitzSpec', 'CirculantSpec', 'SkewCirculantSpec', 'SpectralSplit',
    'cscs_split', 'circulant_eigenvalues', 'skew_circulant_eigenvalues',
    'to_dense', 'spectral_split', 'real_output',
]

_log = logging.getLogger(__name__)

class SpecError(ValueError):
    """A structured matrix description that breaks its own invariants."""
    pass

def _vector(values, name, n=None):
    """Return values as a read-only complex128 vector, checking its shape."""
    try:
        v = np.array(values, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise SpecError('{0} is not numeric: {1}'.format(name, e))
    if v.ndim != 1:
        raise SpecError('{0} must be 1-D, got shape {1}'.format(name, v.shape))
    if len(v) < 1:
        raise SpecError('{0} must have at least one entry'.format(name))
    if n is not None and len(v) != n:
        raise SpecError('{0} has length {1}, expected {2}'.format(name, len(v), n))
    if not np.all(np.isfinite(v)):
        raise SpecError('{0} has non-finite entries'.format(name))
    v.flags.writeable = False
    return v

#######################################################################
# Spec types
#######################################################################

class ToeplitzSpec(object):
    """A Toeplitz matrix T[j, k] = t[j-k] of order n.

    first_col
        t_0, t_1 .. t_{n-1}, the first column.

    first_row
        t_0, t_{-1} .. t_{1-n}, the first row.  If omitted the matrix is
        taken as symmetric and first_row is first_col.

    is_real is True when every entry has a zero imaginary part.
    """

    def __init__(self, first_col, first_row=None):
        col = _vector(first_col, 'first_col')
        row = col if first_row is None else _vector(first_row, 'first_row', len(col))
        if col[0] != row[0]:
            raise SpecError('first_col[0] = {0} does not match first_row[0] = {1}'.format(
                col[0], row[0]))
        self._col = col
        self._row = row

    first_col = property(lambda self: self._col)
    first_row = property(lambda self: self._row)

    @property
    def n(self):
        return len(self._col)

    @property
    def is_real(self):
        return not (np.any(self._col.imag) or np.any(self._row.imag))

    def diagonal(self, offset):
        """Return t_{-offset}, the value on diagonal k - j == offset."""
        if offset >= 0:
            return self._row[offset]
        return self._col[-offset]

    def transpose(self):
        """The ToeplitzSpec of T.T, which swaps first column and first row."""
        return ToeplitzSpec(self._row, self._col)

    def dense(self):
        return to_dense(self)

    def __eq__(self, other):
        if not isinstance(other, ToeplitzSpec):
            return NotImplemented
        return (np.array_equal(self._col, other._col) and
                np.array_equal(self._row, other._row))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return '{0}(n={1}, t0={2})'.format(self.__class__.__name__, self.n, self._col[0])


class CirculantSpec(object):
    """A circulant matrix C[j, k] = c[(j-k) mod n], given by its first column."""

    def __init__(self, first_col):
        self._col = _vector(first_col, 'first_col')

    first_col = property(lambda self: self._col)

    @property
    def n(self):
        return len(self._col)

    def first_row(self):
        """c_0, c_{n-1} .. c_1."""
        return np.concatenate((self._col[:1], self._col[:0:-1]))

    def dense(self):
        return to_dense(self)

    def __repr__(self):
        return '{0}(n={1})'.format(self.__class__.__name__, self.n)


class SkewCirculantSpec(object):
    """A skew-circulant matrix given by its first column s_0 .. s_{n-1}.

    S[j, k] = s_{j-k} for j >= k and -s_{n+j-k} above the diagonal.
    """

    def __init__(self, first_col):
        self._col = _vector(first_col, 'first_col')

    first_col = property(lambda self: self._col)

    @property
    def n(self):
        return len(self._col)

    def first_row(self):
        """s_0, -s_{n-1} .. -s_1."""
        return np.concatenate((self._col[:1], -self._col[:0:-1]))

    def dense(self):
        return to_dense(self)

    def __repr__(self):
        return '{0}(n={1})'.format(self.__class__.__name__, self.n)

#######################################################################
# Splitting and spectra
#######################################################################

def cscs_split(T):
    """Split a ToeplitzSpec into (CirculantSpec, SkewCirculantSpec).

    The two parts sum to T exactly, up to rounding in the halving.
    """
    if not isinstance(T, ToeplitzSpec):
        raise TypeError('cscs_split needs a ToeplitzSpec, not {0}'.format(type(T).__name__))
    col, row = T.first_col, T.first_row
    # row[:0:-1] is t_{-1}, t_{-2} .. t_{1-n} reversed, i.e. t_{l-n} for l = 1 .. n-1
    wrapped = row[:0:-1]
    c = np.empty(T.n, dtype=np.complex128)
    s = np.empty(T.n, dtype=np.complex128)
    c[0] = s[0] = col[0] / 2
    c[1:] = (col[1:] + wrapped) / 2
    s[1:] = (col[1:] - wrapped) / 2
    return CirculantSpec(c), SkewCirculantSpec(s)

def circulant_eigenvalues(C, workers=None):
    """Eigenvalues lam of C with dense(C) == F* diag(lam) F.

    lam[j] = sum_k c_k w^(jk), one unscaled inverse DFT of the first column.
    """
    return get_plan(C.n, INVERSE, 'forward').apply(C.first_col, workers=workers)

def skew_circulant_eigenvalues(S, mod=None, workers=None):
    """Eigenvalues sig of S with dense(S) == Fh* diag(sig) Fh, Fh = F D.

    sig[j] = sum_k s_k e^(i pi k/n) w^(jk).
    """
    if mod is None:
        mod = get_modulation(S.n)
    return get_plan(S.n, INVERSE, 'forward').apply(mod.values * S.first_col, workers=workers)

def to_dense(spec):
    """Build the full n x n complex matrix for a ToeplitzSpec, CirculantSpec or SkewCirculantSpec."""
    if isinstance(spec, ToeplitzSpec):
        return scipy.linalg.toeplitz(spec.first_col, spec.first_row)
    elif isinstance(spec, CirculantSpec):
        return scipy.linalg.circulant(spec.first_col)
    elif isinstance(spec, SkewCirculantSpec):
        return scipy.linalg.toeplitz(spec.first_col, spec.first_row())
    raise TypeError('No dense form for {0}'.format(type(spec).__name__))


class SpectralSplit(object):
    """A Toeplitz matrix with its circulant and skew-circulant factors
    already split off and diagonalized.

    Data members:
        T
            The source ToeplitzSpec.

        circulant, skew
            The CirculantSpec and SkewCirculantSpec with T == circulant + skew.

        lam, sig
            Eigenvalue vectors of circulant and skew, in transform order.

        mod
            The ModulationVector used to diagonalize skew.
    """

    def __init__(self, T, workers=None):
        self.T = T
        self.circulant, self.skew = cscs_split(T)
        self.mod = get_modulation(T.n)
        lam = circulant_eigenvalues(self.circulant, workers)
        sig = skew_circulant_eigenvalues(self.skew, self.mod, workers)
        lam.flags.writeable = False
        sig.flags.writeable = False
        self.lam = lam
        self.sig = sig

    @property
    def n(self):
        return self.T.n

    def __repr__(self):
        return '{0}(n={1})'.format(self.__class__.__name__, self.n)


def spectral_split(T, workers=None):
    """Split and diagonalize T once, for reuse across a whole solve."""
    return SpectralSplit(T, workers)

def real_output(X, real_inputs, rtol=1e-12):
    """Drop the imaginary part of X when the problem was real.

    If real_inputs is True and every imaginary part is below rtol * ||X||_F
    then X.real is returned.  A larger imaginary part on a real problem is
    logged as a warning and X comes back complex.
    """
    if not real_inputs or not np.iscomplexobj(X):
        return X
    imag = np.max(np.abs(X.imag)) if X.size else 0.0
    scale = np.linalg.norm(X)
    if imag <= rtol * scale:
        return np.ascontiguousarray(X.real)
    _log.warning('Real problem gave imaginary parts up to %.3g (||X|| = %.3g); keeping complex result',
        imag, scale)
    return X

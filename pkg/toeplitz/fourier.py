"""
Discrete Fourier transforms and the basis conjugations used to diagonalize
circulant and skew-circulant matrices.

Conventions
-----------
One transform convention is used throughout the package.  The unitary
Fourier matrix of order n is::

    F[j, k] = w**(j*k) / sqrt(n),   w = exp(2j*pi/n),   j, k = 0 .. n-1

so that F is symmetric and::

    F  @ x  == scipy.fft.ifft(x, norm='ortho')
    F* @ x  == scipy.fft.fft(x, norm='ortho')

A circulant matrix is then C = F* diag(lam) F and a skew-circulant matrix
is S = Fh* diag(sig) Fh, where Fh = F D and D = diag(exp(1j*pi*k/n)) is the
ModulationVector.  Eigenvalues are listed in the order j = 0 .. n-1 of
that transform.

The conjugation primitives are exactly unitary, which means rectangular
n x m matrices mix row and column transforms without any sqrt(m/n)
rescaling.

Sides and directions
--------------------
conj_circulant_basis and conj_skew_basis take a side ('left' or 'right')
and a direction ('forward' or 'adjoint')::

    side='left',  direction='forward'   ->  F  @ M
    side='left',  direction='adjoint'   ->  F* @ M
    side='right', direction='forward'   ->  M @ F*
    side='right', direction='adjoint'   ->  M @ F

So moving M into the Fourier basis is a forward conjugation on both
sides (F_A M F_B*), and moving back is an adjoint conjugation on both
sides (F_A* M F_B).

:date: 14-Oct-2026
"""

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import numpy as np
import scipy.fft

__all__ = [
    'ModulationVector', 'TransformPlan', 'get_plan', 'get_modulation',
    'dft_columns', 'idft_columns', 'dft_rows', 'idft_rows',
    'conj_circulant_basis', 'conj_skew_basis',
    'LEFT', 'RIGHT', 'FORWARD', 'ADJOINT', 'INVERSE',
]


LEFT = 'left'
RIGHT = 'right'
FORWARD = 'forward'
ADJOINT = 'adjoint'
INVERSE = 'inverse'

_NORMS = ('backward', 'ortho', 'forward')

# Lines (columns or rows) per transform call.  Fixed, so the split does
# not depend on the worker count.
_BLOCK = 64

#######################################################################
# Modulation vector and transform plans.
#######################################################################

class ModulationVector(object):
    """The diagonal of D = diag(1, e^{i pi/n}, ..., e^{i (n-1) pi/n}).

    values is a read-only complex vector; conj is its complex conjugate.
    """

    def __init__(self, n):
        n = int(n)
        if n < 1:
            raise ValueError('Modulation length must be positive, got {0}'.format(n))
        self.n = n
        values = np.exp(1j * np.pi * np.arange(n) / n)
        values[0] = 1.0
        values.flags.writeable = False
        conj = values.conj()
        conj.flags.writeable = False
        self.values = values
        self.conj = conj

    def __len__(self):
        return self.n

    def __repr__(self):
        return '{0}({1})'.format(self.__class__.__name__, self.n)


class TransformPlan(object):
    """A DFT of fixed length and direction.

    direction is 'forward' (exponent sign -, scipy.fft.fft) or 'inverse'
    (exponent sign +, scipy.fft.ifft).  norm follows scipy.fft: 'backward'
    leaves the forward transform unscaled and scales the inverse by 1/n,
    'ortho' scales both by 1/sqrt(n), and 'forward' is the mirror image
    of 'backward'.  Under 'ortho' the transform is unitary (s = 1);
    otherwise a forward 'backward' transform scales 2-norms by
    s = sqrt(n).

    workers is the default thread count for apply().  A matrix is always
    transformed in blocks of a fixed number of lines, one scipy.fft call
    per block, and the workers only decide how many blocks run at once.
    The output is therefore bitwise the same for any worker count.

    Plans are immutable and can be shared between threads.
    """

    __slots__ = ('length', 'direction', 'norm', 'workers')

    def __init__(self, length, direction=FORWARD, norm='backward', workers=None):
        length = int(length)
        if length < 1:
            raise ValueError('Transform length must be positive, got {0}'.format(length))
        if direction not in (FORWARD, INVERSE):
            raise ValueError("direction must be 'forward' or 'inverse', not {0!r}".format(direction))
        if norm not in _NORMS:
            raise ValueError('norm must be one of {0}, not {1!r}'.format(_NORMS, norm))
        object.__setattr__(self, 'length', length)
        object.__setattr__(self, 'direction', direction)
        object.__setattr__(self, 'norm', norm)
        object.__setattr__(self, 'workers', workers)

    def __setattr__(self, key, value):
        raise AttributeError('TransformPlan is immutable')

    @property
    def scale(self):
        """The factor s with ||transform(x)|| == s * ||x||."""
        if self.norm == 'ortho':
            return 1.0
        forward_unscaled = (self.direction == FORWARD) == (self.norm == 'backward')
        return np.sqrt(self.length) if forward_unscaled else 1.0 / np.sqrt(self.length)

    def inverse(self):
        """The plan that undoes this one."""
        direction = INVERSE if self.direction == FORWARD else FORWARD
        return TransformPlan(self.length, direction, self.norm, self.workers)

    def apply(self, M, axis=0, workers=None):
        """Transform M along axis, leaving the other axis independent.

        workers overrides the plan's own setting for this call.
        """
        M = np.asarray(M)
        if M.ndim not in (1, 2) or axis not in range(M.ndim):
            raise ValueError('Cannot transform axis {0} of an array of shape {1}'.format(
                axis, M.shape))
        if M.shape[axis] != self.length:
            raise ValueError('Plan length {0} does not match dimension {1} of size {2}'.format(
                self.length, axis, M.shape[axis]))
        fn = scipy.fft.fft if self.direction == FORWARD else scipy.fft.ifft
        if M.ndim == 1:
            return fn(M, norm=self.norm)

        lines = M.shape[1 - axis]
        blocks = [slice(start, start + _BLOCK) for start in range(0, lines, _BLOCK)]
        if axis == 0:
            index = [(slice(None), b) for b in blocks]
        else:
            index = [(b, slice(None)) for b in blocks]

        first = fn(M[index[0]], axis=axis, norm=self.norm)
        if len(index) == 1:
            return first
        out = np.empty(M.shape, dtype=first.dtype)
        out[index[0]] = first

        def run(ix):
            out[ix] = fn(M[ix], axis=axis, norm=self.norm)

        count = _worker_count(self.workers if workers is None else workers)
        if count > 1:
            list(_pool(count).map(run, index[1:]))
        else:
            for ix in index[1:]:
                run(ix)
        return out

    def __call__(self, x):
        return self.apply(x, axis=0)

    def __repr__(self):
        return '{0}(length={1}, direction={2!r}, norm={3!r})'.format(
            self.__class__.__name__, self.length, self.direction, self.norm)


def _worker_count(workers):
    """None means 1; negative counts back from os.cpu_count() as in scipy.fft."""
    if workers is None:
        return 1
    workers = int(workers)
    if workers == 0:
        raise ValueError('workers must not be 0')
    if workers < 0:
        workers = max(1, (os.cpu_count() or 1) + 1 + workers)
    return workers

@lru_cache(maxsize=8)
def _pool(workers):
    return ThreadPoolExecutor(max_workers=workers, thread_name_prefix='fourier')


@lru_cache(maxsize=64)
def get_plan(length, direction=FORWARD, norm='backward'):
    """Return a shared TransformPlan, created on first use."""
    return TransformPlan(length, direction, norm)


@lru_cache(maxsize=64)
def get_modulation(n):
    """Return a shared ModulationVector of length n."""
    return ModulationVector(n)

#######################################################################
# Column and row transforms.
#######################################################################

def _check_plan(plan, direction):
    if plan.direction != direction:
        raise ValueError('Expected a {0} plan, got {1!r}'.format(direction, plan))

def dft_columns(M, plan):
    """Forward-transform every column of M."""
    _check_plan(plan, FORWARD)
    return plan.apply(M, axis=0)

def idft_columns(M, plan):
    """Inverse-transform every column of M."""
    _check_plan(plan, INVERSE)
    return plan.apply(M, axis=0)

def dft_rows(M, plan):
    """Forward-transform every row of M."""
    _check_plan(plan, FORWARD)
    return plan.apply(M, axis=1)

def idft_rows(M, plan):
    """Inverse-transform every row of M."""
    _check_plan(plan, INVERSE)
    return plan.apply(M, axis=1)

#######################################################################
# Basis conjugations.  F is never formed.
#######################################################################

def _as_matrix(M):
    M = np.asarray(M)
    if M.ndim != 2:
        raise ValueError('Expected a 2-D matrix, got shape {0}'.format(M.shape))
    return M

def conj_circulant_basis(M, side, direction, workers=None):
    """Apply F or F* to one side of M without forming F.

    See the module docstring for the meaning of side and direction.
    """
    M = _as_matrix(M)
    if side == LEFT:
        axis = 0
    elif side == RIGHT:
        axis = 1
    else:
        raise ValueError("side must be 'left' or 'right', not {0!r}".format(side))

    # F x is an ortho inverse DFT.  On the right, M F* transforms rows by F*
    # because F is symmetric.
    if direction == FORWARD:
        use_inverse = (side == LEFT)
    elif direction == ADJOINT:
        use_inverse = (side == RIGHT)
    else:
        raise ValueError("direction must be 'forward' or 'adjoint', not {0!r}".format(direction))

    plan = get_plan(M.shape[axis], INVERSE if use_inverse else FORWARD, 'ortho')
    return plan.apply(M, axis, workers)

def conj_skew_basis(M, side, direction, mod=None, workers=None):
    """Apply Fh = F D or Fh* to one side of M.

    mod is the ModulationVector for the transformed dimension; if omitted
    the shared one of the right length is used.  The modulation is an
    entrywise scaling of rows (left) or columns (right)::

        Fh  M = F (D M)            M Fh* = (M D*) F*
        Fh* M = D* (F* M)          M Fh  = (M F) D
    """
    M = _as_matrix(M)
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be 'left' or 'right', not {0!r}".format(side))
    if direction not in (FORWARD, ADJOINT):
        raise ValueError("direction must be 'forward' or 'adjoint', not {0!r}".format(direction))

    size = M.shape[0] if side == LEFT else M.shape[1]
    if mod is None:
        mod = get_modulation(size)
    elif len(mod) != size:
        raise ValueError('Modulation length {0} does not match dimension of size {1}'.format(
            len(mod), size))

    if side == LEFT:
        if direction == FORWARD:
            return conj_circulant_basis(mod.values[:, None] * M, LEFT, FORWARD, workers)
        return mod.conj[:, None] * conj_circulant_basis(M, LEFT, ADJOINT, workers)
    else:
        if direction == FORWARD:
            return conj_circulant_basis(M * mod.conj[None, :], RIGHT, FORWARD, workers)
        return conj_circulant_basis(M, RIGHT, ADJOINT, workers) * mod.values[None, :]

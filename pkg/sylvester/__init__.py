"""
Iterative and direct solvers for Sylvester equations AX + XB = C whose
coefficient matrices A (n x n) and B (m x m) are Toeplitz.

The main solver is the circulant and skew-circulant splitting iteration
(CSCS).  Each of A and B is split into a circulant part and a
skew-circulant part (see the toeplitz package), and every iteration solves
two shifted Sylvester equations, one built from the circulant parts and
one from the skew-circulant parts.  Both are diagonal in a Fourier basis,
so a half-step costs a few FFTs and an entrywise division::

    >>> from sylvester import cscs_solve, example3_instance
    >>> problem = example3_instance(64, r=0.01)
    >>> report = cscs_solve(problem.A, problem.B, problem.C)
    >>> report.status
    'converged'

Shift parameters alpha and beta default to the choice that minimises the
convergence bound of the iteration (see select_shifts).

Baselines
---------
For comparison there are the Hermitian/skew-Hermitian splitting iteration
(hss_solve), a block symmetric SOR iteration (bssor_solve), a complex-Schur
Bartels-Stewart direct solver (bartels_stewart_solve) and a dense solve of
the Kronecker-vectorized system (kron_oracle_solve) used as ground truth in
tests.  These take dense matrices.

Problems and benchmarks
-----------------------
sylvester.problems generates the convection-diffusion and random Toeplitz
test families.  sylvester.bench is the command line harness, also run as
``python -m sylvester``.

Errors
------
Malformed input raises ValueError (or toeplitz.SpecError).  Numerical
failures raise a SylvesterError subclass whose status attribute is the
string recorded in benchmark output.  Iterative solvers never raise for
slow convergence; SolveReport.status tells you how the run ended.

:date: 15-Oct-2026
"""

class SylvesterError(Exception):
    """Base class for numerical failures of a Sylvester solve."""
    status = 'error'

class Breakdown(SylvesterError):
    """A shifted equation is too close to singular to solve."""
    status = 'breakdown'

class SingularEquation(SylvesterError):
    """A and -B share (or nearly share) an eigenvalue."""
    status = 'singular'

class Unsupported(SylvesterError, ValueError):
    """The method cannot take a problem of this size."""
    status = 'unsupported'

from .cscs import (
    CSCSContext, ShiftSelection, SolveReport,
    kron_spectra, select_shifts, box_bound, contraction_bound,
    residual, half_step_circulant, half_step_skew, cscs_sweep, cscs_solve,
    iteration_matrix_dense,
)
from .baselines import (
    HermitianSplit, TriangularSplit,
    hss_solve, bssor_solve, bartels_stewart_solve, kron_oracle_solve,
    dense_residual,
)
from .problems import (
    ProblemInstance,
    convection_diffusion_example1, convection_diffusion_cd2,
    example2_instance, example3_instance, example4_instance,
)

__all__ = [
    'SylvesterError', 'Breakdown', 'SingularEquation', 'Unsupported',
    'CSCSContext', 'ShiftSelection', 'SolveReport',
    'kron_spectra', 'select_shifts', 'box_bound', 'contraction_bound',
    'residual', 'half_step_circulant', 'half_step_skew', 'cscs_sweep', 'cscs_solve',
    'iteration_matrix_dense',
    'HermitianSplit', 'TriangularSplit',
    'hss_solve', 'bssor_solve', 'bartels_stewart_solve', 'kron_oracle_solve',
    'dense_residual',
    'ProblemInstance',
    'convection_diffusion_example1', 'convection_diffusion_cd2',
    'example2_instance', 'example3_instance', 'example4_instance',
]

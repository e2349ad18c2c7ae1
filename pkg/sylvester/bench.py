"""
Benchmark harness for the Sylvester solvers.

Runs one solver over one problem family at one or more sizes and reports
iteration counts, achieved relative residual and median wall time::

    cscs-bench --method cscs --problem example3 --n 64,128 --r 0.01 --alpha 0.13
    python -m sylvester --method bssor --problem example3 --n 64 --r 1 --omega 1.5

Each (method, problem, size) combination is a cell.  Every cell starts
from X = 0, is run once as warmup and then --reps more times, and reports
the median time of those runs.  Solver failures are recorded in the status
column instead of stopping the run.

The exit status is 0 if every cell finished 'converged' (iterative
methods) or 'completed' (direct methods), 1 otherwise, and 2 for bad
arguments.

Output Formats
--------------
csv
    Header method,problem,n,m,alpha,beta,omega,iters,resid,seconds,status
    and one line per cell.

markdown
    The same columns as a pipe table, padded to line up.

json
    A list of objects with the same keys and unformatted values.

Reals are printed with 6 significant digits in csv and markdown, and the
two carry identical text in each cell.
"""

import argparse
import csv
import io
import json
import logging
import statistics
import sys
from concurrent.futures import ThreadPoolExecutor
from time import perf_counter

import numpy as np

from . import SylvesterError
from .cscs import cscs_solve, CONVERGED, COMPLETED
from .baselines import hss_solve, bssor_solve, bartels_stewart_solve, kron_oracle_solve
from .problems import GENERATORS
from .problemfile import save_problem_file, load_problem_file

__all__ = [
    'BenchConfig', 'BenchRecord', 'run_bench', 'run_cell', 'emit_report',
    'build_parser', 'main', 'METHODS', 'FORMATS', 'COLUMNS',
]

_log = logging.getLogger(__name__)

METHODS = ('cscs', 'hss', 'bssor', 'bartels_stewart', 'oracle')
FORMATS = ('markdown', 'csv', 'json')
COLUMNS = ('method', 'problem', 'n', 'm', 'alpha', 'beta', 'omega',
    'iters', 'resid', 'seconds', 'status')

#######################################################################
# Configuration and records
#######################################################################

class BenchConfig(object):
    """What to run.

    method
        One of METHODS.

    problem, params
        A generator name from sylvester.problems.GENERATORS and the
        keyword arguments for it, less the size.  For example2 a missing
        or None m follows each size.

    sizes
        The values of n to run, one cell each.

    problem_file
        If given, the instance is read from this file instead and
        problem, params and sizes are ignored.

    tol, maxit
        Stopping rule for the iterative methods.

    alpha, beta, shift_multiplier
        Shift policy for cscs and hss.  With neither alpha nor beta the
        shifts are multiplier * gamma*/2.

    omega
        Relaxation for bssor.

    reps
        Timed repetitions per cell, after one warmup run.

    save_problem
        Path to write each generated instance to.  With several sizes it
        must contain '{n}'.

    parallel
        Run cells on a thread pool.  Results are the same either way.
    """

    def __init__(self, method='cscs', problem='example3', params=None, sizes=(64,),
            problem_file=None, tol=1e-6, maxit=5000, alpha=None, beta=None,
            shift_multiplier=1.0, omega=1.0, reps=3, save_problem=None, parallel=False):
        if method not in METHODS:
            raise ValueError('Unknown method {0!r}; use one of {1}'.format(method, METHODS))
        if problem_file is None and problem not in GENERATORS:
            raise ValueError('Unknown problem {0!r}; use one of {1}'.format(
                problem, sorted(GENERATORS)))
        if not tol > 0:
            raise ValueError('tol must be positive, got {0}'.format(tol))
        if int(maxit) != maxit or maxit < 0:
            raise ValueError('maxit must be a non-negative integer, got {0}'.format(maxit))
        if method == 'bssor' and not 0 < omega < 2:
            raise ValueError('omega must lie in (0, 2), got {0}'.format(omega))
        for name, value in (('alpha', alpha), ('beta', beta)):
            if value is not None and not value > 0:
                raise ValueError('{0} must be positive, got {1}'.format(name, value))
        if not shift_multiplier > 0:
            raise ValueError('shift multiplier must be positive, got {0}'.format(shift_multiplier))
        if int(reps) != reps or reps < 1:
            raise ValueError('reps must be a positive integer, got {0}'.format(reps))
        sizes = tuple(int(n) for n in sizes)
        if problem_file is None and not sizes:
            raise ValueError('At least one size is needed')
        if save_problem and len(sizes) > 1 and '{n}' not in save_problem:
            raise ValueError("save_problem needs '{n}' in the path when running several sizes")

        self.method = method
        self.problem = problem
        self.params = dict(params or {})
        self.sizes = sizes
        self.problem_file = problem_file
        self.tol = tol
        self.maxit = int(maxit)
        self.alpha = alpha
        self.beta = beta
        self.shift_multiplier = shift_multiplier
        self.omega = omega
        self.reps = int(reps)
        self.save_problem = save_problem
        self.parallel = parallel

    @classmethod
    def from_args(cls, args):
        """Build a BenchConfig from the parser in build_parser."""
        params = _problem_params(args)
        return cls(
            method=args.method, problem=args.problem, params=params, sizes=args.n,
            problem_file=args.problem_file, tol=args.tol, maxit=args.maxit,
            alpha=args.alpha, beta=args.beta, shift_multiplier=args.shift_mult,
            omega=args.omega, reps=args.reps, save_problem=args.save_problem,
            parallel=args.parallel)

    def instances(self):
        """Yield the ProblemInstance of every cell, in order."""
        if self.problem_file is not None:
            yield load_problem_file(self.problem_file)
            return
        generator = GENERATORS[self.problem]
        for n in self.sizes:
            params = self.params
            if self.problem == 'example2' and params.get('m') is None:
                params = dict(params, m=n)
            instance = generator(n, **params)
            if self.save_problem:
                save_problem_file(instance, self.save_problem.format(n=n))
            yield instance


class BenchRecord(object):
    """One result row.  n and m are the orders of A and B."""

    def __init__(self, method, problem, n, m, alpha, beta, omega, iters, resid, seconds, status):
        self.method = method
        self.problem = problem
        self.n = n
        self.m = m
        self.alpha = alpha
        self.beta = beta
        self.omega = omega
        self.iters = iters
        self.resid = resid
        self.seconds = seconds
        self.status = status

    @property
    def ok(self):
        return self.status in (CONVERGED, COMPLETED)

    def keys(self):
        return list(COLUMNS)

    def items(self):
        return [(k, getattr(self, k)) for k in COLUMNS]

    def formatted(self):
        """The row as strings, the same for every text format."""
        return [_format_field(v) for _, v in self.items()]

    def __repr__(self):
        return '{0}({1})'.format(self.__class__.__name__,
            ', '.join('{0}={1!r}'.format(k, v) for k, v in self.items()))


def _format_field(value):
    if value is None:
        return ''
    if isinstance(value, (float, np.floating)):
        return '{0:.6g}'.format(value)
    return str(value)

#######################################################################
# Running
#######################################################################

def _solve(config, instance):
    """Run the configured method once.  Returns (iters, resid, status, alpha, beta, omega)."""
    A, B, C = instance.A, instance.B, instance.C
    method = config.method
    if method == 'cscs':
        report = cscs_solve(A, B, C, alpha=config.alpha, beta=config.beta, tol=config.tol,
            maxit=config.maxit, shift_multiplier=config.shift_multiplier, history_every=config.maxit or 1)
    elif method == 'hss':
        report = hss_solve(A, B, C, alpha=config.alpha, beta=config.beta, tol=config.tol,
            maxit=config.maxit, shift_multiplier=config.shift_multiplier, history_every=config.maxit or 1)
    elif method == 'bssor':
        report = bssor_solve(A, B, C, omega=config.omega, tol=config.tol, maxit=config.maxit,
            history_every=config.maxit or 1)
    else:
        solver = bartels_stewart_solve if method == 'bartels_stewart' else kron_oracle_solve
        X = solver(A, B, C)
        return 1, instance.relative_residual(X), COMPLETED, None, None, None
    return report.iterations, report.residual, report.status, report.alpha, report.beta, report.omega

def run_cell(config, instance):
    """Time config.method on one instance and return its BenchRecord."""
    log = _log.getChild(config.method)
    times = []
    outcome = None
    try:
        for rep in range(config.reps + 1):
            start = perf_counter()
            outcome = _solve(config, instance)
            if rep:
                times.append(perf_counter() - start)
    except SylvesterError as e:
        log.warning('%s failed: %s', instance.label, e)
        alpha = beta = omega = None
        if config.method in ('cscs', 'hss'):
            alpha, beta = config.alpha, config.beta
        elif config.method == 'bssor':
            omega = config.omega
        return BenchRecord(config.method, instance.label, instance.n, instance.m,
            alpha, beta, omega, 0, float('nan'), float('nan'), e.status)

    iters, resid, status, alpha, beta, omega = outcome
    seconds = statistics.median(times)
    log.info('%s: %s, %d iterations, residual %.3e, %.4f s',
        instance.label, status, iters, resid, seconds)
    return BenchRecord(config.method, instance.label, instance.n, instance.m,
        alpha, beta, omega, iters, float(resid), seconds, status)

def run_bench(config):
    """Run every cell of config and return the BenchRecords in order."""
    instances = list(config.instances())
    if config.parallel and len(instances) > 1:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(lambda inst: run_cell(config, inst), instances))
    return [run_cell(config, inst) for inst in instances]

#######################################################################
# Reporting
#######################################################################

def _markdown(rows):
    widths = [
        max([len(h)] + [len(r[col]) for r in rows])
            for col, h in enumerate(COLUMNS)
    ]

    def line(cells):
        return '| ' + ' | '.join(c.ljust(w) for c, w in zip(cells, widths)) + ' |'

    out = [line(COLUMNS), '|' + '|'.join('-' * (w + 2) for w in widths) + '|']
    out.extend(line(r) for r in rows)
    return '\n'.join(out) + '\n'

def _csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()

def _json(records):
    def clean(v):
        if isinstance(v, (float, np.floating)):
            return float(v) if np.isfinite(v) else None
        if isinstance(v, np.integer):
            return int(v)
        return v
    return json.dumps([dict((k, clean(v)) for k, v in r.items()) for r in records],
        indent=2) + '\n'

def emit_report(records, fmt='markdown'):
    """Render records as text in one of FORMATS."""
    if fmt == 'json':
        return _json(records)
    rows = [r.formatted() for r in records]
    if fmt == 'csv':
        return _csv(rows)
    elif fmt == 'markdown':
        return _markdown(rows)
    raise ValueError('Unknown format {0!r}; use one of {1}'.format(fmt, FORMATS))

#######################################################################
# Command line
#######################################################################

def _sizes(text):
    try:
        sizes = [int(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('sizes must be integers, e.g. 64,128')
    if not sizes or min(sizes) < 2:
        raise argparse.ArgumentTypeError('sizes must be integers >= 2')
    return sizes

def _problem_params(args):
    """Keyword arguments for the chosen generator, apart from n."""
    sigma = args.sigma
    tau = sigma if args.tau is None else args.tau
    if args.problem == 'example1':
        return dict(sigma=sigma, tau=tau, scheme=args.scheme)
    elif args.problem == 'cd2':
        return dict(sigma=sigma, tau=tau)
    elif args.problem == 'example2':
        return dict(m=args.m, sigma1=sigma, sigma2=tau, seed=args.seed)
    elif args.problem == 'example3':
        return dict(r=args.r, rhs=args.rhs, seed=args.seed)
    elif args.problem == 'example4':
        return dict(seed=args.seed, margin=args.margin)
    return {}

def build_parser():
    p = argparse.ArgumentParser(prog='cscs-bench',
        description='Benchmark Sylvester solvers on Toeplitz test problems.')
    p.add_argument('--method', choices=METHODS, default='cscs')
    p.add_argument('--problem', choices=sorted(GENERATORS), default='example3')
    p.add_argument('--problem-file', help='read the instance from this file instead')
    p.add_argument('--save-problem', help="write each generated instance here ('{n}' is the size)")
    p.add_argument('--n', type=_sizes, default=[64], help='comma separated sizes (default 64)')
    p.add_argument('--m', type=int, help='second size for example2 (default n)')
    p.add_argument('--sigma', type=float, default=1.0,
        help='x velocity; sigma1 for example2 (default 1)')
    p.add_argument('--tau', type=float, help='y velocity; sigma2 for example2 (default sigma)')
    p.add_argument('--r', type=float, default=0.01, help='example3 parameter (default 0.01)')
    p.add_argument('--scheme', choices=('centered', 'upwind'), default='centered')
    p.add_argument('--rhs', choices=('ones', 'random'), default='ones',
        help='example3 right-hand side (default ones)')
    p.add_argument('--margin', type=float, default=0.1,
        help='example4 smallest real eigenvalue part (default 0.1)')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--tol', type=float, default=1e-6)
    p.add_argument('--maxit', type=int, default=5000)
    p.add_argument('--alpha', type=float)
    p.add_argument('--beta', type=float)
    p.add_argument('--shift-mult', type=float, default=1.0,
        help='scale the automatic shifts gamma*/2 by this')
    p.add_argument('--omega', type=float, default=1.0, help='BSSOR relaxation (default 1)')
    p.add_argument('--reps', type=int, default=3, help='timed repetitions per cell (default 3)')
    p.add_argument('--format', choices=FORMATS, default='markdown')
    p.add_argument('--out', help='write the report here instead of stdout')
    p.add_argument('--parallel', action='store_true', help='run cells concurrently')
    p.add_argument('--log-level', default='WARNING',
        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'))
    return p

def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level),
        format='%(levelname)s %(name)s: %(message)s')

    try:
        config = BenchConfig.from_args(args)
        records = run_bench(config)
    except ValueError as e:
        parser.error(str(e))

    text = emit_report(records, args.format)
    if args.out:
        with io.open(args.out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)

    failed = [r for r in records if not r.ok]
    if failed:
        print('{0} of {1} cells did not finish: {2}'.format(len(failed), len(records),
            ', '.join('{0} n={1} ({2})'.format(r.problem, r.n, r.status) for r in failed)),
            file=sys.stderr)
        return 1
    return 0

"""
Text files holding a single ProblemInstance.

The format is line oriented.  Blank lines and lines starting with '#' are
ignored.  Fields come in a fixed order::

    n 4
    m 3
    A.first_col 2.0 -1.0 0.0 0.0
    A.first_row 2.0 -1.0 0.0 0.0
    B.first_col ...
    B.first_row ...
    C
    <n lines of m values>
    meta {"generator": "example3", ...}
    X_true
    <n lines of m values>

X_true and its rows are optional.  Real values are written with repr(),
so they read back bit for bit.  Complex values are written as 're+imj'
(for instance 1.5-0.25j) and read back with complex().  meta is one line
of JSON with sorted keys.

Toeplitz matrices are stored by their first column and row, so a file is
O(n + m + nm) values.
"""

import io
import json

import numpy as np

from toeplitz import ToeplitzSpec, SpecError
from .problems import ProblemInstance

__all__ = ['ProblemFileError', 'save_problem_file', 'load_problem_file',
    'format_value', 'parse_values']

HEADER = '# toeplitz-sylvester problem file'

class ProblemFileError(ValueError):
    """A problem file that cannot be read.

    line is the 1-based line number the problem was found on (None at end
    of file) and field is the name of the field being read.
    """

    def __init__(self, message, line=None, field=None):
        where = []
        if field is not None:
            where.append('field {0}'.format(field))
        if line is not None:
            where.append('line {0}'.format(line))
        if where:
            message = '{0} ({1})'.format(message, ', '.join(where))
        super(ProblemFileError, self).__init__(message)
        self.line = line
        self.field = field

#######################################################################
# Values
#######################################################################

def format_value(z):
    """One number as text: repr() for reals, 're+imj' for complex."""
    z = complex(z)
    if z.imag == 0 and not np.signbit(z.imag):
        return repr(z.real)
    im = repr(z.imag)
    if not im.startswith('-'):
        im = '+' + im
    return '{0}{1}j'.format(repr(z.real), im)

def _format_row(values):
    return ' '.join(format_value(v) for v in values)

def parse_values(text, count=None, line=None, field=None):
    """Parse whitespace separated numbers, real if every imaginary part is 0."""
    tokens = text.split()
    if count is not None and len(tokens) != count:
        raise ProblemFileError('expected {0} values, found {1}'.format(count, len(tokens)),
            line, field)
    try:
        values = np.array([complex(t) for t in tokens], dtype=np.complex128)
    except ValueError as e:
        raise ProblemFileError('bad number: {0}'.format(e), line, field)
    if not np.any(values.imag):
        return values.real.copy()
    return values

def _jsonable(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError('{0!r} is not JSON serializable'.format(obj))

#######################################################################
# Writing
#######################################################################

def save_problem_file(instance, path):
    """Write instance to path in the problem file format."""
    lines = [HEADER]
    lines.append('n {0}'.format(instance.n))
    lines.append('m {0}'.format(instance.m))
    for name, spec in (('A', instance.A), ('B', instance.B)):
        lines.append('{0}.first_col {1}'.format(name, _format_row(spec.first_col)))
        lines.append('{0}.first_row {1}'.format(name, _format_row(spec.first_row)))
    lines.append('C')
    lines.extend(_format_row(row) for row in np.asarray(instance.C))
    lines.append('meta ' + json.dumps(instance.meta, sort_keys=True, default=_jsonable))
    if instance.X_true is not None:
        lines.append('X_true')
        lines.extend(_format_row(row) for row in np.asarray(instance.X_true))
    with io.open(path, 'w', encoding='utf-8') as f:
        f.write('\n'.join(lines))
        f.write('\n')

#######################################################################
# Reading
#######################################################################

class _LineReader(object):
    """Hands out the meaningful lines of a file with their line numbers."""

    def __init__(self, text):
        self._lines = [
            (number, line.strip())
                for number, line in enumerate(text.splitlines(), 1)
                if line.strip() and not line.lstrip().startswith('#')
        ]
        self._pos = 0

    def at_end(self):
        return self._pos >= len(self._lines)

    def next(self, field):
        if self.at_end():
            raise ProblemFileError('missing field {0}'.format(field), None, field)
        number, line = self._lines[self._pos]
        self._pos += 1
        return number, line

    def keyed(self, key):
        """Read a 'key rest' line and return (line number, rest)."""
        number, line = self.next(key)
        head, _, rest = line.partition(' ')
        if head != key:
            raise ProblemFileError('expected {0}, found {1!r}'.format(key, head), number, key)
        return number, rest.strip()

    def matrix(self, field, rows, cols):
        number, line = self.next(field)
        if line != field:
            raise ProblemFileError('expected {0}, found {1!r}'.format(field, line), number, field)
        data = []
        for i in range(rows):
            number, line = self.next('{0}[{1}]'.format(field, i))
            data.append(parse_values(line, cols, number, field))
        return np.array(data)


def _order(reader, key):
    number, rest = reader.keyed(key)
    try:
        value = int(rest)
    except ValueError:
        raise ProblemFileError('{0} must be an integer, found {1!r}'.format(key, rest), number, key)
    if value < 1:
        raise ProblemFileError('{0} must be positive, found {1}'.format(key, value), number, key)
    return value

def _toeplitz(reader, name, size):
    col_line, col = reader.keyed(name + '.first_col')
    col = parse_values(col, size, col_line, name + '.first_col')
    row_line, row = reader.keyed(name + '.first_row')
    row = parse_values(row, size, row_line, name + '.first_row')
    try:
        return ToeplitzSpec(col, row)
    except SpecError as e:
        raise ProblemFileError(str(e), row_line, name)

def load_problem_file(path):
    """Read a ProblemInstance written by save_problem_file.

    Raises ProblemFileError naming the offending line and field.
    """
    with io.open(path, 'r', encoding='utf-8') as f:
        reader = _LineReader(f.read())

    n = _order(reader, 'n')
    m = _order(reader, 'm')
    A = _toeplitz(reader, 'A', n)
    B = _toeplitz(reader, 'B', m)
    C = reader.matrix('C', n, m)

    number, text = reader.keyed('meta')
    try:
        meta = json.loads(text)
    except ValueError as e:
        raise ProblemFileError('meta is not valid JSON: {0}'.format(e), number, 'meta')
    if not isinstance(meta, dict):
        raise ProblemFileError('meta must be a JSON object', number, 'meta')

    X_true = None
    if not reader.at_end():
        X_true = reader.matrix('X_true', n, m)
    if not reader.at_end():
        number, line = reader.next('end of file')
        raise ProblemFileError('unexpected content {0!r}'.format(line[:40]), number, None)

    return ProblemInstance(A, B, C, meta, X_true)

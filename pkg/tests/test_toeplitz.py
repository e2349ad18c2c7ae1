"""
Unit tests for the toeplitz structured matrix library.

15-Oct-2026
"""

from toeplitz import *
from toeplitz.fourier import conj_circulant_basis, conj_skew_basis, LEFT, FORWARD, ADJOINT
import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
import unittest

EPS = np.finfo(float).eps

def random_spec(rng, n, complex_values=False):
	col = rng.standard_normal(n)
	row = rng.standard_normal(n)
	if complex_values:
		col = col + 1j * rng.standard_normal(n)
		row = row + 1j * rng.standard_normal(n)
	row[0] = col[0]
	return ToeplitzSpec(col, row)

def matched(a, b, tol):
	"""Every entry of a has an entry of b within tol."""
	return all(np.min(np.abs(b - x)) <= tol for x in a)

class SpecTest(unittest.TestCase):
	def test_dense_forms(self):
		"""The small dense forms come out right."""
		T = ToeplitzSpec([2, -1], [2, -1])
		assert_array_equal(T.dense(), [[2, -1], [-1, 2]])

		C = CirculantSpec([1, 0, 0])
		assert_array_equal(C.dense(), np.eye(3))

		S = SkewCirculantSpec([0, 1])
		assert_array_equal(S.dense(), [[0, -1], [1, 0]])

	def test_nonsymmetric(self):
		"""T[j, k] = t[j-k] from separate first column and row."""
		T = ToeplitzSpec([1, 2, 3], [1, 4, 5])
		assert_array_equal(T.dense(), [[1, 4, 5], [2, 1, 4], [3, 2, 1]])
		self.assertEqual(T.diagonal(0), 1)
		self.assertEqual(T.diagonal(1), 4)
		self.assertEqual(T.diagonal(-2), 3)
		assert_array_equal(T.transpose().dense(), T.dense().T)

	def test_symmetric_default(self):
		"""Leaving out first_row gives a symmetric matrix."""
		T = ToeplitzSpec([4, 1, 0.5])
		assert_array_equal(T.dense(), T.dense().T)
		self.assertEqual(T, T.transpose())

	def test_is_real(self):
		self.assertTrue(ToeplitzSpec([1, 2], [1, 3]).is_real)
		self.assertFalse(ToeplitzSpec([1, 2j], [1, 3]).is_real)

	def test_equality(self):
		"""Specs compare by value and are not hashable."""
		a = ToeplitzSpec([1, 2, 3], [1, 0, 0])
		b = ToeplitzSpec([1.0, 2.0, 3.0], [1.0, 0.0, 0.0])
		c = ToeplitzSpec([1, 2, 3])
		self.assertEqual(a, b)
		self.assertNotEqual(a, c)
		with self.assertRaises(TypeError):
			hash(a)

	def test_read_only(self):
		"""The arrays a spec holds cannot be changed."""
		T = ToeplitzSpec([1, 2, 3], [1, 4, 5])
		with self.assertRaises(ValueError):
			T.first_col[0] = 7
		with self.assertRaises(AttributeError):
			T.first_col = [0, 0, 0]

		source = np.array([1.0, 2.0])
		C = CirculantSpec(source)
		source[0] = 5.0
		self.assertEqual(C.first_col[0], 1.0)

	def test_errors(self):
		"""Malformed specs raise SpecError."""
		bad = [
			([1, 2], [3, 2]),				# corner mismatch
			([1, 2, 3], [1, 2]),			# length mismatch
			([], None),						# empty
			([[1, 2], [3, 4]], None),		# not 1-D
			([1, np.nan], None),			# not finite
			(['a', 'b'], None),				# not numeric
		]
		for col, row in bad:
			with self.assertRaises(SpecError):
				ToeplitzSpec(col, row)
		self.assertTrue(issubclass(SpecError, ValueError))

	def test_wrapped_rows(self):
		"""Circulant rows wrap around, skew-circulant rows wrap with a sign flip."""
		C = CirculantSpec([1, 2, 3, 4])
		S = SkewCirculantSpec([1, 2, 3, 4])
		assert_array_equal(C.first_row(), [1, 4, 3, 2])
		assert_array_equal(S.first_row(), [1, -4, -3, -2])
		assert_array_equal(C.dense()[0], C.first_row())
		assert_array_equal(S.dense()[0], S.first_row())

class SplitTest(unittest.TestCase):
	def setUp(self):
		self.rng = np.random.default_rng(0)

	def test_tridiagonal(self):
		"""The split of tridiag(-1, 2, -1)."""
		C, S = cscs_split(ToeplitzSpec([2, -1, 0, 0], [2, -1, 0, 0]))
		assert_allclose(C.first_col, [1, -0.5, 0, -0.5])
		assert_allclose(S.first_col, [1, -0.5, 0, 0.5])

	def test_exact(self):
		"""C + S reproduces T for random specs."""
		for trial in range(1000):
			n = int(self.rng.integers(2, 65))
			T = random_spec(self.rng, n, complex_values=(trial % 2 == 1))
			C, S = cscs_split(T)
			scale = max(np.max(np.abs(T.first_col)), np.max(np.abs(T.first_row)))
			err = np.max(np.abs(C.dense() + S.dense() - T.dense()))
			self.assertLessEqual(err, 4 * EPS * scale)

	def test_order_one(self):
		"""A 1 x 1 matrix splits into two halves."""
		C, S = cscs_split(ToeplitzSpec([3.0]))
		self.assertEqual(C.first_col[0], 1.5)
		self.assertEqual(S.first_col[0], 1.5)

	def test_needs_toeplitz(self):
		with self.assertRaises(TypeError):
			cscs_split(np.eye(3))

class SpectraTest(unittest.TestCase):
	def setUp(self):
		self.rng = np.random.default_rng(0)

	def test_known_values(self):
		"""Closed form eigenvalues of a few small matrices."""
		lam = circulant_eigenvalues(CirculantSpec([2, -0.5, 0, -0.5]))
		assert_allclose(lam, [1, 2, 3, 2], atol=1e-14)

		a, b = 1.5, -0.75
		sig = skew_circulant_eigenvalues(SkewCirculantSpec([a, b]))
		assert_allclose(sig, [a + 1j*b, a - 1j*b], atol=1e-14)

		lam = circulant_eigenvalues(CirculantSpec([1, 0, 0, 0, 0]))
		assert_allclose(lam, np.ones(5), atol=1e-15)

	def test_diagonalization(self):
		"""C == F* diag(lam) F and S == Fh* diag(sig) Fh."""
		for n in (1, 2, 3, 7, 16, 31):
			C, S = cscs_split(random_spec(self.rng, n, complex_values=True))
			I = np.eye(n)
			lam = circulant_eigenvalues(C)
			sig = skew_circulant_eigenvalues(S)

			rebuilt = conj_circulant_basis(lam[:, None] * conj_circulant_basis(I, LEFT, FORWARD),
				LEFT, ADJOINT)
			assert_allclose(rebuilt, C.dense(), atol=1e-12)
			rebuilt = conj_skew_basis(sig[:, None] * conj_skew_basis(I, LEFT, FORWARD),
				LEFT, ADJOINT)
			assert_allclose(rebuilt, S.dense(), atol=1e-12)

	def test_dense_eigenvalues(self):
		"""The closed forms match a dense eigensolver as multisets."""
		for trial in range(1000):
			n = int(self.rng.integers(1, 33))
			C, S = cscs_split(random_spec(self.rng, n, complex_values=(trial % 3 == 0)))
			for closed, dense in (
				(circulant_eigenvalues(C), np.linalg.eigvals(C.dense())),
				(skew_circulant_eigenvalues(S), np.linalg.eigvals(S.dense())),
			):
				tol = 1e-10 * max(1.0, np.max(np.abs(closed)))
				self.assertTrue(matched(closed, dense, tol))
				self.assertTrue(matched(dense, closed, tol))

	def test_spectral_split(self):
		"""SpectralSplit holds the split and both spectra."""
		T = random_spec(self.rng, 9)
		split = spectral_split(T)
		self.assertIs(split.T, T)
		self.assertEqual(split.n, 9)
		assert_allclose(split.circulant.dense() + split.skew.dense(), T.dense(), atol=1e-14)
		assert_allclose(split.lam, circulant_eigenvalues(split.circulant))
		assert_allclose(split.sig, skew_circulant_eigenvalues(split.skew))
		self.assertEqual(len(split.mod), 9)
		with self.assertRaises(ValueError):
			split.lam[0] = 0

	def test_real_spectrum_symmetry(self):
		"""A real symmetric Toeplitz matrix has real circulant eigenvalues."""
		T = ToeplitzSpec(self.rng.standard_normal(12))
		split = spectral_split(T)
		self.assertLess(np.max(np.abs(split.lam.imag)), 1e-12)

class RealOutputTest(unittest.TestCase):
	def test_drop_imaginary(self):
		"""Negligible imaginary parts are dropped for real problems."""
		X = np.ones((3, 3)) + 1e-17j
		Y = real_output(X, True)
		self.assertFalse(np.iscomplexobj(Y))
		assert_array_equal(Y, np.ones((3, 3)))

	def test_complex_problem(self):
		"""A complex problem keeps its complex solution."""
		X = np.ones((2, 2)) + 1e-17j
		self.assertIs(real_output(X, False), X)

	def test_warning(self):
		"""A real problem with a large imaginary part warns and stays complex."""
		X = np.ones((2, 2)) + 0.5j
		with self.assertLogs('toeplitz', 'WARNING'):
			Y = real_output(X, True)
		self.assertTrue(np.iscomplexobj(Y))

if __name__ == '__main__':
	unittest.main()

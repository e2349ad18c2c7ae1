"""
Unit tests for the test problem generators.

16-Oct-2026
"""

from sylvester.problems import *
from sylvester.problems import centered_coefficients, upwind_coefficients
from sylvester import kron_oracle_solve, select_shifts, kron_spectra
from toeplitz import spectral_split, cscs_split, circulant_eigenvalues, skew_circulant_eigenvalues
import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
import unittest

def shifts_for(problem):
	sa, sb = spectral_split(problem.A), spectral_split(problem.B)
	return select_shifts(*kron_spectra(sa.lam, sb.lam, sa.sig, sb.sig))

def oracle_residual(problem):
	X = kron_oracle_solve(problem.A, problem.B, problem.C)
	return problem.relative_residual(X)

class Example1Test(unittest.TestCase):
	def test_centered_values(self):
		"""The centered stencil at sigma = tau = 2, h = 0.04."""
		problem = convection_diffusion_example1(24, 2.0, 2.0)
		m = problem.meta
		self.assertAlmostEqual(m['h'], 0.04)
		self.assertEqual(m['a'], 4.0)
		self.assertAlmostEqual(m['b'], -1.04)
		self.assertAlmostEqual(m['c'], -1.04)
		self.assertAlmostEqual(m['d'], -0.96)
		self.assertAlmostEqual(m['e'], -0.96)

	def test_matrix(self):
		"""A = tridiag(c, a/2, d) and B is its transpose."""
		problem = convection_diffusion_example1(5, 3.0, 3.0)
		m = problem.meta
		A = problem.A.dense()
		self.assertEqual(A[0, 0], m['a'] / 2)
		self.assertEqual(A[1, 0], m['c'])
		self.assertEqual(A[0, 1], m['d'])
		self.assertEqual(A[2, 0], 0)
		assert_array_equal(problem.B.dense(), A.T)

	def test_rhs(self):
		"""v_ij = h^2 exp(ih + jh)."""
		problem = convection_diffusion_example1(4, 1.0, 1.0)
		h = 0.2
		self.assertAlmostEqual(problem.C[0, 0], h**2 * np.exp(2 * h))
		self.assertAlmostEqual(problem.C[3, 1], h**2 * np.exp(6 * h))

	def test_zero_velocity(self):
		"""Both schemes agree when there is no convection."""
		for scheme in (centered_coefficients, upwind_coefficients):
			assert_allclose(scheme(0.0, 0.0, 0.1), (4, -1, -1, -1, -1))
		a = convection_diffusion_example1(6, 0.0, 0.0, 'centered')
		b = convection_diffusion_example1(6, 0.0, 0.0, 'upwind')
		self.assertEqual(a.A, b.A)

	def test_upwind(self):
		problem = convection_diffusion_example1(9, 1.0, 1.0, 'upwind')
		m = problem.meta
		self.assertAlmostEqual(m['a'], 4.2)
		self.assertAlmostEqual(m['c'], -1.1)
		self.assertEqual(m['d'], -1.0)

	def test_oracle(self):
		self.assertLessEqual(oracle_residual(convection_diffusion_example1(6, 2.0, 2.0)), 1e-12)

	def test_semidefinite(self):
		"""The circulant part is only semidefinite, the skew part definite."""
		shifts = shifts_for(convection_diffusion_example1(24, 2.0, 2.0))
		self.assertEqual(shifts.theta_min, 0.0)
		self.assertEqual(shifts.circulant_definiteness, 'semidefinite')
		self.assertEqual(shifts.skew_definiteness, 'definite')
		self.assertFalse(shifts.fallback)

	def test_errors(self):
		with self.assertRaises(ValueError):
			convection_diffusion_example1(8, 1.0, 2.0)
		with self.assertRaises(ValueError):
			convection_diffusion_example1(8, -1.0, -1.0, 'upwind')
		with self.assertRaises(ValueError):
			convection_diffusion_example1(8, 1.0, 1.0, 'downwind')
		with self.assertRaises(ValueError):
			convection_diffusion_example1(1, 1.0, 1.0)

class CD2Test(unittest.TestCase):
	def test_values(self):
		"""sigma = 2, h = 0.05 gives off-diagonals -1 +- 0.05."""
		problem = convection_diffusion_cd2(19, 2.0, 2.0)
		A = problem.A.dense()
		self.assertAlmostEqual(A[1, 0], -0.95)
		self.assertAlmostEqual(A[0, 1], -1.05)
		self.assertEqual(A[0, 0], 2.0)
		self.assertEqual(problem.A, problem.B)

	def test_separate(self):
		"""A follows tau and B follows sigma."""
		problem = convection_diffusion_cd2(9, 2.0, 4.0)
		self.assertAlmostEqual(problem.A.dense()[1, 0], -1 + 4.0 * 0.1 / 2)
		self.assertAlmostEqual(problem.B.dense()[1, 0], -1 + 2.0 * 0.1 / 2)
		self.assertNotEqual(problem.A, problem.B)

	def test_oracle(self):
		self.assertLessEqual(oracle_residual(convection_diffusion_cd2(5, 1.0, 3.0)), 1e-12)
		shifts = shifts_for(convection_diffusion_cd2(12, 1.0, 3.0))
		self.assertGreaterEqual(shifts.theta_min, 0.0)

class Example2Test(unittest.TestCase):
	def test_structure(self):
		"""Five constant diagonals at offsets 0, +-1, +-n."""
		problem = example2_instance(3, 3, 1.0, 1.0)
		A = problem.A
		self.assertEqual(A.n, 9)
		nonzero = set(k for k in range(-8, 9) if A.diagonal(k) != 0)
		self.assertEqual(nonzero, {-3, -1, 0, 1, 3})
		self.assertEqual(problem.A, problem.B)
		self.assertEqual(problem.C.shape, (9, 9))

	def test_rectangular(self):
		problem = example2_instance(3, 2, 1.0, 5.0, seed=7)
		self.assertEqual((problem.n, problem.m), (9, 4))
		self.assertTrue(np.all((problem.C >= 0) & (problem.C < 1)))
		self.assertIsNone(problem.X_true)

	def test_seeded(self):
		one = example2_instance(3, 3, 1.0, 2.0, seed=5)
		two = example2_instance(3, 3, 1.0, 2.0, seed=5)
		three = example2_instance(3, 3, 1.0, 2.0, seed=6)
		assert_array_equal(one.C, two.C)
		self.assertFalse(np.array_equal(one.C, three.C))

class Example3Test(unittest.TestCase):
	def test_values(self):
		problem = example3_instance(64, 0.01)
		A = problem.A
		self.assertAlmostEqual(A.diagonal(0).real, 2.023669, places=6)
		self.assertAlmostEqual(A.diagonal(-1).real, -0.99)
		self.assertAlmostEqual(A.diagonal(1).real, -1.01)
		self.assertEqual(problem.A, problem.B)

	def test_bidiagonal(self):
		"""r = 1 zeroes the subdiagonal."""
		A = example3_instance(8, 1.0).A
		self.assertEqual(A.diagonal(-1), 0)
		self.assertEqual(A.diagonal(1), -2)

	def test_known_solution(self):
		problem = example3_instance(6, 0.1)
		assert_array_equal(problem.X_true, np.ones((6, 6)))
		self.assertLessEqual(problem.relative_residual(problem.X_true), 1e-14)
		self.assertLessEqual(oracle_residual(problem), 1e-12)
		X = kron_oracle_solve(problem.A, problem.B, problem.C)
		self.assertLessEqual(problem.error(X), 1e-10)

	def test_random_rhs(self):
		problem = example3_instance(6, 0.1, rhs='random', seed=3)
		self.assertIsNone(problem.X_true)
		self.assertEqual(problem.meta['seed'], 3)
		with self.assertRaises(ValueError):
			problem.error(np.ones((6, 6)))
		with self.assertRaises(ValueError):
			example3_instance(6, 0.1, rhs='zeros')
		with self.assertRaises(ValueError):
			example3_instance(6, 0.0)

	def test_definite(self):
		shifts = shifts_for(example3_instance(32, 0.01))
		self.assertGreater(shifts.theta_min, 0)
		self.assertEqual(shifts.definiteness, 'definite')

class Example4Test(unittest.TestCase):
	def test_margin(self):
		"""The split of A has both spectra at or above the margin, one on it."""
		for margin in (0.1, 2.0):
			problem = example4_instance(12, seed=1, margin=margin)
			C, S = cscs_split(problem.A)
			low_c = np.min(circulant_eigenvalues(C).real)
			low_s = np.min(skew_circulant_eigenvalues(S).real)
			self.assertAlmostEqual(min(low_c, low_s), margin)
			self.assertGreaterEqual(max(low_c, low_s), margin - 1e-12)
			self.assertIn('mu', problem.meta)

	def test_dense(self):
		"""Every diagonal carries a value."""
		A = example4_instance(10).A
		self.assertTrue(np.all(A.first_col != 0))
		self.assertTrue(np.all(A.first_row != 0))
		self.assertTrue(A.is_real)

	def test_definite(self):
		shifts = shifts_for(example4_instance(16))
		self.assertGreater(shifts.theta_min, 0)

	def test_seeded(self):
		self.assertEqual(example4_instance(9, seed=4).A, example4_instance(9, seed=4).A)
		self.assertNotEqual(example4_instance(9, seed=4).A, example4_instance(9, seed=5).A)

	def test_errors(self):
		with self.assertRaises(ValueError):
			example4_instance(8, margin=0)

	def test_random_definite(self):
		rng = np.random.default_rng(0)
		A = random_definite_toeplitz(7, rng, margin=1.5)
		split = spectral_split(A)
		self.assertGreaterEqual(np.min(split.lam.real), 1.5 - 1e-12)
		self.assertGreaterEqual(np.min(split.sig.real), 1.5 - 1e-12)
		self.assertEqual(random_definite_toeplitz(1, 3).n, 1)

class InstanceTest(unittest.TestCase):
	def test_label(self):
		"""The label names the generator and its free parameters."""
		problem = example3_instance(8, 0.1)
		self.assertEqual(problem.label, 'example3(r=0.1;rhs=ones)')
		self.assertEqual(problem.generator, 'example3')
		self.assertIn('example3', repr(problem))

	def test_shapes(self):
		problem = example3_instance(4, 0.1)
		with self.assertRaises(ValueError):
			ProblemInstance(problem.A, problem.B, np.ones((4, 5)))
		with self.assertRaises(ValueError):
			ProblemInstance(problem.A, problem.B, problem.C, X_true=np.ones(4))
		bare = ProblemInstance(problem.A, problem.B, problem.C)
		self.assertEqual(bare.generator, 'custom')

	def test_generators(self):
		self.assertEqual(sorted(GENERATORS),
			['cd2', 'example1', 'example2', 'example3', 'example4'])

if __name__ == '__main__':
	unittest.main()

from .test_toeplitz import SpecTest, SplitTest, SpectraTest, RealOutputTest
from .test_fourier import PlanTest, ModulationTest, ConjugationTest, PropertyTest
from .test_cscs import KronSpectraTest, ShiftTest, ContextTest, SolveTest, IterationMatrixTest
from .test_baselines import OracleTest, BartelsStewartTest, HSSTest, BSSORTest, AgreementTest
from .test_problems import Example1Test, CD2Test, Example2Test, Example3Test, Example4Test, InstanceTest
from .test_bench import ProblemFileTest, ReportTest, BenchTest, CommandLineTest
from .test_tables import (Example3CountTest, Example1CountTest, Example4CountTest,
	ContractionTest, OracleEquivalenceTest, CostTest)

from setuptools import setup  # Always prefer setuptools over distutils
from codecs import open  # To use a consistent encoding
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the relevant file
with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
	long_description = f.read()

setup(
	name='toeplitz-sylvester',

	# Versions should comply with PEP440.
	description='Circulant and skew-circulant splitting solvers for Toeplitz Sylvester equations',
	version='0.1.0',

	long_description=long_description,

	license='MIT',

	# See https://pypi.python.org/pypi?%3Aaction=list_classifiers
	classifiers=[
		'Development Status :: 3 - Alpha',

		'Intended Audience :: Science/Research',
		'Topic :: Scientific/Engineering :: Mathematics',

		'License :: OSI Approved :: MIT License',

		# numpy.fft norm='forward' needs numpy 1.20, so Python 3 only.
		'Programming Language :: Python :: 3',
		'Programming Language :: Python :: 3.8',
		'Programming Language :: Python :: 3.9',
		'Programming Language :: Python :: 3.10',
		'Programming Language :: Python :: 3.11',
	],

	keywords='toeplitz sylvester circulant fft iterative solver',

	packages=['toeplitz', 'sylvester'],
	python_requires='>=3.8',
	install_requires=['numpy>=1.20', 'scipy>=1.6'],

	entry_points={
		'console_scripts': [
			'cscs-bench=sylvester.bench:main',
		],
	},

	test_suite='tests',
)

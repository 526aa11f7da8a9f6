"""
Default parameters for an orbit analysis.
Modify these values to change what `orbit-engine` does when a config file
or a command-line flag leaves a parameter unset.
"""

from pathlib import Path

# Highest polynomial degree searched for invariant generators
MAX_DEGREE = 6

# Max-norm bound for K-type enumeration and shifted lattices
ENUMERATION_BOUND = 12

# Seed of the random.Random handed to every randomized check
RANDOM_SEED = 0

# Random Borel-orbit samples in the sphericity test and the rank estimate
SPHERICITY_SAMPLES = 8

# Random integer parameters are drawn from [-range, range]
SAMPLE_PARAMETER_RANGE = 3

# Fresh evaluation points tried by the Jacobian independence test
INDEPENDENCE_RETRIES = 3

# Reports are cached here as <sha256>.json
CACHE_DIR = Path.home() / ".cache" / "orbit-engine"

# Norm bound used by verify-speh for the shifted lattice at (1, 1)
SPEH_BOUND = 15

"""Toolkit constants and default configuration."""

# Protocol defaults
DEFAULT_PER_CHECK_K = 2  # EQ repetitions per walk test (error 1/4)
CHAIN_FACTOR = 4  # chain_len = CHAIN_FACTOR * ceil(log2(1/eps)) + CHAIN_OFFSET
CHAIN_OFFSET = 4
STEP_FACTOR = 8  # m = STEP_FACTOR * (ceil(log2 n) + ceil(log2(1/eps))) + chain_len

# Bit charges
RESULT_BITS = 1  # symmetric output announcement
KW_BRANCH_BITS = 2  # per search-tree node branch broadcast

# Cutting planes
BOOLEAN_AXIOMS = True  # implicit x_i >= 0 and x_i <= 1
MAX_BRUTE_FORCE_VARS = 12

# Experiments
DEFAULT_SEED = 0
DEFAULT_TRIALS = 1000
DEFAULT_EPSILON = 0.05
THRESHOLD_BENCH_COEFF_BITS = 64

BENCH_COLUMNS = (
    "protocol",
    "n",
    "epsilon",
    "trials",
    "empirical_error",
    "mean_bits",
    "max_bits",
    "bound_bits",
)

# Logging
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# CLI exit codes
EXIT_OK = 0
EXIT_FAILURE = 1  # verification, falsified-check or bound failure
EXIT_USAGE = 2  # usage, parse or I/O error

# Environment Constants
ENV_THREADS = "CONCORD_THREADS"
ENV_DENSE_CAP = "CONCORD_DENSE_CAP"
ENV_ENUMERATION_CAP = "CONCORD_ENUMERATION_CAP"
ENV_MC_BLOCK = "CONCORD_MC_BLOCK"

# Defaults used when the environment does not override them.
DEFAULT_THREADS = 1
DEFAULT_DENSE_CAP = 50_000_000
DEFAULT_ENUMERATION_CAP = 40
DEFAULT_MC_BLOCK = 4096

# Label file constants
DEFAULT_DELIMITER = ","
FORMAT_SINGLE = "single"
FORMAT_PAIR = "pair"

# Minimum item counts per index
MIN_ITEMS_PAIRS = 2
MIN_ITEMS_VARIANCE = 3
MIN_ITEMS_QUADRUPLETS = 4

# Largest n for which n**3 fits a signed 64-bit integer.
INT64_CUBE_LIMIT = 2_097_151

# Sparse sort digit width; numpy's stable sort is a radix sort on 16-bit keys.
RADIX_BITS = 16

# Tolerances
PROBABILITY_TOLERANCE = 1e-12

# Output constants
OUTPUT_JSON = "json"
OUTPUT_TSV = "tsv"
FLOAT_FORMAT = "{:.17g}"
CSV_SCHEMA_VERSION = 1
SIMULATE_SCHEMA = "concord-simulate"
BENCH_SCHEMA = "concord-bench"
SKIPPED_MARKER = "skipped"

# Exit codes
EXIT_INPUT_ERROR = 2
EXIT_DEGENERATE = 3

# Bias study grids
STUDY_K_GRID = (2, 4, 8, 16, 32, 64, 128)
STUDY_EPSILONS = (0.3, 0.8)
STUDY_SCENARIOS = (1, 2, 3)

# Vectorized Monte-Carlo keeps (sum_P c1)(sum_P c2) < n**4 / 4 inside int64.
MC_MAX_N = 50_000

# Default grids per subcommand
SIMULATE_N_GRID = (16, 32, 64, 128, 256, 512, 1024)
BENCH_N_GRID = (100_000, 200_000, 400_000, 800_000, 1_600_000)
BENCH_K_GRID = (50, 500, 5000)

# Uniform draws held in memory per Monte-Carlo block.
MC_BLOCK_DRAWS = 1 << 22

# constants
INF = float("inf")

# margins
EXPONENTIAL = 'exponential'
LAPLACE = 'laplace'

# joint extremes
DIRECTION_TOLERANCE = 1e-4
CORNER_SHRINK = 1e-6
# witnesses closer than this to the corner are re-checked on the coarser cap
ATTAINMENT_MARGIN = 1e-3
MAX_ENUMERATION_DIM = 12

# coefficients
ALPHA_ZERO_TOLERANCE = 1e-9
ALPHA_UNIT_TOLERANCE = 1e-4

# linear algebra
SYMMETRY_TOLERANCE = 1e-12
MAX_SPD_DIM = 32

# reporting
CSV_DIGITS = 9
EVAL_DIGITS = 12
STANDARD_GRID_POINTS = 21

THREADS_ENV_VAR = 'GAUGE_GRAPH_THREADS'

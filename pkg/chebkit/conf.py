"""
Default settings for chebkit.

Every function that depends on one of these values takes an explicit keyword
override, the CLI exposes the ones a user is expected to change.
"""

# Reproducibility
DEFAULT_SEED = 20240611

# Special functions: lift Re(z) to this value before the asymptotic series.
RECURRENCE_FLOOR = 10.0

# Below this |w| the removable singularity of (1 - e^-w)/w is summed as a series.
SMALL_ARGUMENT = 1e-4

# Low-lying zero bound
LAMBDA_MAX = 10.0
LIMIT_LAMBDA = 1e-6

# Deuring-Heilbronn optimisation
ALPHA_FLOOR = 1.0
ALPHA_CEILING = 2500.0
ALPHA_GRID_STEP = 0.01
ALPHA_REFINE_TOL = 1e-4

# Reported constants are rounded up at this decimal.
REPORT_DECIMALS = 4

# Certified repulsion constants C are rounded up at this decimal.
C_DECIMALS = 1

# Least margin kept by the small-lambda bracket when eta is chosen.
ETA_MARGIN = 1e-4

# Least prime search
SCAN_CAP = 10**9
SIEVE_LIMIT = 1 << 20

# Reports
SIGNIFICANT_DIGITS = 12

"""Hard-coded parameters for WeilKit. These should not change between runs."""
# Largest field (number of elements) any brute-force sweep may enumerate.
# Override with the WEILKIT_ENUM_BOUND environment variable or --enum-bound.
ENUM_BOUND = 2 ** 22
ENUM_BOUND_ENV = "WEILKIT_ENUM_BOUND"

# Largest field for which a full discrete-log table is built on request
DLOG_BOUND = 2 ** 20

# Largest cyclotomic order N for which Phi_N is computed
CYCLO_BOUND = 10 ** 4

# Exact determinant expansion and root lifting are only for tiny sizes
DET_MAX_ORDER = 8
LIFT_MAX_DEGREE = 6

# Simultaneous-iteration root finder
ROOT_TOL = 1e-12
ROOT_MAX_ITER = 500
ROOT_START_ANGLE = 0.4
ROOT_RESIDUAL_TOL = 1e-6

# Numeric checks after complex embedding
MODULUS_TOL = 1e-6
EMBED_TOL = 1e-9

# Elements per chunk when a sweep is split across worker processes
SWEEP_CHUNK_SIZE = 1 << 15

# Fields up to this size get a full element table from the 'field' command
FIELD_TABLE_MAX = 256

# Entries kept in each per-field cache (towers, lookup tables, G_u tables)
FIELD_CACHE_SIZE = 64
# Cyclotomic polynomials kept in memory
CYCLO_CACHE_SIZE = 1024

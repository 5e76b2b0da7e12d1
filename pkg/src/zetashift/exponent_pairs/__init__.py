from .core import (
    HALF,
    MAX_DEPTH,
    NAMED_PAIRS,
    TRIVIAL_SEEDS,
    ExponentPair,
    PairSet,
    a_process,
    as_fraction,
    b_process,
    convex_combine,
    fmt_fraction,
    generate_pairs,
    named_table,
    register_named,
    replay,
    seed,
)
from .hull import (
    HullPolyline,
    cross,
    is_admissible,
    log_exponent,
    lower_hull,
    optimize_theta,
    point_on_or_above,
    restricted_pair,
    sigma_bound,
    t_exponent,
)
from .ledger import LedgerEntry, ledger, lookup, propagate_mean_square

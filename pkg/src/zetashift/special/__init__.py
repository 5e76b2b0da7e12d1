from .gamma import complex_gamma, log_gamma, stirling_check
from .perron import (ComplexPoint, DecompositionReport, decomposition_check,
                     perron_remainder, randomized_suite)
from .zeta import (DEFAULT, T_MAX, EvalConfig, line_moments, zeta, zeta_line,
                   zeta_smoothed, zeta_smoothed_line)

STIRLING_X = tuple(round(0.1 * k, 1) for k in range(1, 11))
STIRLING_T = tuple(float(t) for t in range(1, 51))

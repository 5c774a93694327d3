"""Exact computer algebra for Charlier polynomials with a point mass at zero.

Everything is carried over Q[x, a, N] with arbitrary-precision rational
coefficients, so each identity in the package is certified as a structural
zero polynomial rather than sampled numerically.
"""

from .classical import (
    charlier,
    charlier_mirror,
    inner_product_classical,
    laguerre,
    moment,
    value_at_minus_one,
    value_at_zero,
)
from .diffeq import (
    CoeffTable,
    DiffOperator,
    DiffTerm,
    apply_difference_equation,
    build_coeff_table,
    classical_operator,
    coeff_a0,
    coeff_ai,
    leading_x_coeff,
    mass_operator,
    solve_coefficients,
)
from .pointmass import gen_charlier, inner_product_general, norm_general
from .polynomials import A, N, Poly, Rational, Var, X
from .verify import SuiteSpec, VerificationReport, run_suite
from .version import __version__

__all__ = [
    "A",
    "CoeffTable",
    "DiffOperator",
    "DiffTerm",
    "N",
    "Poly",
    "Rational",
    "SuiteSpec",
    "Var",
    "VerificationReport",
    "X",
    "__version__",
    "apply_difference_equation",
    "build_coeff_table",
    "charlier",
    "charlier_mirror",
    "classical_operator",
    "coeff_a0",
    "coeff_ai",
    "gen_charlier",
    "inner_product_classical",
    "inner_product_general",
    "laguerre",
    "leading_x_coeff",
    "mass_operator",
    "moment",
    "norm_general",
    "run_suite",
    "solve_coefficients",
    "value_at_minus_one",
    "value_at_zero",
]

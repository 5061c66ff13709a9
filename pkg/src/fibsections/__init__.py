"""Exact engine for convolved k-sections of the Fibonacci sequence.

The k-section of the Fibonacci sequence divides F_{nk} by F_k; its s-fold
self-convolutions generalize the convolved Fibonacci numbers. This package
computes those integers by seven mutually independent exact routes, checks
the identity catalog relating them to Fibonacci, Lucas and Chebyshev-
derivative closed forms, exports OEIS b-files, and demonstrates the
keystream/Vernam motivation.
"""

from .chebyshev import (
    u_derivative_closed,
    u_derivative_formal,
    u_eval_gauss,
    u_eval_rational,
    u_poly,
    verify_uderiv_difference_form,
    verify_uderiv_sum_form,
    verify_uderiv_u_expansion,
    verify_uderiv_u_expansion_poly,
)
from .combinatorics import binom
from .convolved import (
    ConvOracle,
    RecurrenceSpec,
    ROUTES,
    all_route_terms,
    build_recurrence,
    conv_binet,
    conv_chebyshev,
    conv_explicit,
    conv_lucas_power,
    conv_oracle,
    conv_recurrence,
    genfunc_series,
    lambda_coefficients,
    route_terms,
)
from .exact import (
    ExactnessError,
    GaussRational,
    InconsistencyError,
    NEG_PHI_INV,
    PHI,
    QuadRational,
    Rational,
    SQRT5,
    gauss_to_integer,
    minus_i_pow,
    quad_pow,
    quad_to_integer,
)
from .fib import fibonacci, fibonacci_binet, lucas, lucas_binet
from .identities import (
    IdentityRegistry,
    RegistryReport,
    default_registry,
    run_registry,
)
from .keystream import (
    PeriodResult,
    StreamParams,
    find_period,
    observed_period,
    residue_stream,
    vernam,
)
from .oeis import (
    OeisFixture,
    load_bundled_fixtures,
    read_bfile,
    verify_fixtures,
    write_bfile,
)
from .sections import (
    section_chebyshev,
    section_division,
    section_lucas_formula,
    section_recurrence,
)

__version__ = "0.1.0"

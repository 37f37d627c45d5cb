"""Exact arithmetic for interlaced-geometric continued fractions.

The package provides, in layers:

* exact algebra: integer polynomials, truncated power series, quadratic
  surds with exact ordering, and a precision-tagged big float
  (`polynomial`, `series`, `surd`, `bigfloat`);
* a generalized continued-fraction engine: forward-recurrence convergents,
  equivalence rescaling, tail-first numeric evaluation, and exact or
  validated simple-CF expansions (`cf`);
* the interlaced family itself: convergent polynomial tables, the identity
  catalogue, generating functions, truncation-error certificates, and
  closed forms (`families`);
* q-series behaviour of the symbolic member [1, x, 1, x^2, ...]
  (`qseries`);
* numeric experiments with validated digits (`lab`);
* a command-line interface (`cli`, installed as `geomcf`).
"""

__version__ = "0.1.0"

from .bigfloat import BigFloat
from .cf import (
    Convergent,
    EvaluatedValue,
    GCFSpec,
    SimpleCFExpansion,
    backward_value,
    convergent_iter,
    convergents,
    detect_period,
    determinant,
    equivalence_transform,
    eval_gcf_numeric,
    rational_simple_cf,
    real_simple_cf,
    surd_simple_cf,
)
from .errors import (
    BudgetExceeded,
    DomainError,
    IdentityViolation,
    PrecisionInsufficient,
    SingularEvaluation,
    UnsupportedFamily,
)
from .families import (
    ABSequence,
    Certificate,
    FibonacciAnalogy,
    IdentityReport,
    InterlaceParams,
    ab_polynomials,
    characteristic_form,
    check_identity,
    check_identity_suite,
    convergence_certificate,
    fibonacci_analogy_check,
    fibonacci_polynomial,
    gf_check,
    identity_names,
    interlace_scale_sequence,
    limit_root,
    make_interlaced,
    make_tilde,
    reference_rows,
    tilde_polynomial_spec,
)
from .lab import (
    EulerReport,
    QuadraticPatternResult,
    ScanReport,
    conjecture_scan,
    euler_check,
    euler_pattern,
    euler_value,
    f_value,
    quadratic_pattern,
)
from .polynomial import Polynomial, X, poly_gcd
from .qseries import (
    StabilizationReport,
    auluck_series,
    coprimality_witness,
    ramanujan_series,
    stabilization_report,
    truncation_rational,
    truncation_table,
)
from .series import PowerSeries
from .surd import QuadFieldElement, QuadraticSurd

__all__ = [name for name in dir() if not name.startswith("_")]

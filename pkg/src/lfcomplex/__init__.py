"""Local fractional complex analysis: fractal arithmetic, Mittag-Leffler kernels,
fractional-power Laurent series, circle-contour calculus and residues."""

from .algebra import (
    FractalComplex,
    FractalPolar,
    canonical_angle,
    fc_div,
    fc_mul,
    frac_polar,
    gamma,
    gamma_ratio,
    log_gamma,
    mittag_leffler,
)
from .conformance import (
    THEOREMS,
    ConformanceEntry,
    ConformanceReport,
    conformance_matrix,
    cr_residual,
    run_check,
)
from .contour import (
    CircleContour,
    MultiPoleFunction,
    arc_integral,
    cauchy_coefficient,
    cauchy_point_value,
    contour_integral,
    derivative_via_contour,
    gauss_mean_value,
    ml_bound,
    monomial_circle_integral,
    quadrature_diagnostic,
)
from .documents import parse_series, serialize_series
from .errors import (
    ConvergenceError,
    DocumentError,
    DomainError,
    FractalError,
    GammaPoleError,
    NoPrimitiveError,
    PoleEvaluationError,
)
from .residues import ResidueReport, all_residues, residue, residue_via_derivative
from .series import (
    CANONICAL,
    SCALED_CLASSICAL,
    DerivativeConvention,
    FractalSeries,
    Pole,
    Regular,
    chain_rule_affine,
    classify_singularity,
    maclaurin_ml,
    series_arith,
    series_derivative,
    series_derivative_n,
    series_divide,
    series_eval,
    series_primitive,
    tail_bound,
)

__version__ = "0.1.0"

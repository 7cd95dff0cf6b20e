"""Two-variable partial calculus and the theorem-conformance matrix.

A Taylor series ``f(w)`` centered at the origin is split into ``u + i^a v`` by
substituting ``w = x^a + i^a y^a`` and expanding binomially.  The resulting
:class:`PartialField` polynomials in ``x^a`` and ``y^a`` carry the partial
derivatives used by the Cauchy-Riemann and Laplace checks.

:func:`conformance_matrix` runs one numeric check per theorem, per order and
per derivative convention, on seeded random inputs, and records whether each
check's residual stays under the tolerance.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, NamedTuple

from .algebra import TWO_PI, FractalPolar, check_alpha, gamma
from .contour import (
    CircleContour,
    MultiPoleFunction,
    arc_integral,
    cauchy_coefficient,
    cauchy_point_value,
    contour_integral,
    derivative_via_contour,
    enclosed_residue_sum,
    gauss_mean_value,
    monomial_circle_integral,
    quadrature_diagnostic,
)
from .errors import DomainError
from .residues import residue_via_derivative
from .series import (
    CANONICAL,
    SCALED_CLASSICAL,
    DerivativeConvention,
    FractalSeries,
    Pole,
    classify_singularity,
    monomial_factor,
    series_derivative,
    series_derivative_n,
    series_eval,
    series_primitive,
)

DEFAULT_TOL = 1e-9
MAX_DEGREE = 12

THEOREMS = (
    "T1-CR",
    "T2-FTC",
    "T3-closed",
    "T5-deform",
    "T6-Cauchy",
    "C7-deriv",
    "T8/T9-orthogonality",
    "T10-Taylor",
    "T11-Laurent",
    "C12/13-residue",
    "T14-Gauss",
    "Laplace-harmonic",
    "rule-2.8-product",
)

CONVENTIONS = (CANONICAL, SCALED_CLASSICAL)


# -- partial fields ------------------------------------------------------------


@dataclass(frozen=True)
class PartialField:
    """``sum c[m, n] x**(m a) y**(n a)`` with non-negative integer ``m, n``."""

    alpha: float
    coeffs: Mapping[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        pruned = {}
        for (m, n), c in self.coeffs.items():
            if m < 0 or n < 0:
                raise DomainError(f"negative exponent {(m, n)!r} in a partial field")
            if c != 0:
                pruned[(int(m), int(n))] = float(c)
        object.__setattr__(self, "coeffs", dict(sorted(pruned.items())))

    def __add__(self, other: PartialField) -> PartialField:
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0.0) + c
        return PartialField(self.alpha, out)

    def __neg__(self) -> PartialField:
        return PartialField(self.alpha, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: PartialField) -> PartialField:
        return self + (-other)

    def coeff(self, m: int, n: int) -> float:
        return self.coeffs.get((m, n), 0.0)

    def max_abs(self) -> float:
        return max((abs(c) for c in self.coeffs.values()), default=0.0)

    def evaluate(self, x: float, y: float) -> float:
        a = self.alpha
        return sum(c * (x**a) ** m * (y**a) ** n for (m, n), c in self.coeffs.items())


def expand_uv(f: FractalSeries, degree: int | None = None) -> tuple[PartialField, PartialField]:
    """Split ``f`` into ``u + i^a v`` under ``w = x^a + i^a y^a``.

    Terms above ``w**degree`` are dropped when ``degree`` is given.
    """
    if f.kmin < 0:
        raise DomainError("expand_uv needs a series without principal part")
    if f.center != (0.0, 0.0):
        raise DomainError("expand_uv needs a series centered at the origin")
    u: dict[tuple[int, int], float] = {}
    v: dict[tuple[int, int], float] = {}
    for k, c in f.items():
        if degree is not None and k > degree:
            continue
        ar, ai = c.real, c.imag
        for j in range(k + 1):
            b = math.comb(k, j)
            # c * (i^a)**j split into its 1 and i^a parts
            re, im = ((ar, ai), (-ai, ar), (-ar, -ai), (ai, -ar))[j % 4]
            key = (k - j, j)
            u[key] = u.get(key, 0.0) + b * re
            v[key] = v.get(key, 0.0) + b * im
    return PartialField(f.alpha, u), PartialField(f.alpha, v)


def partial_alpha(u: PartialField, axis: str, conv: DerivativeConvention = CANONICAL) -> PartialField:
    """Local fractional partial derivative along ``"x"`` or ``"y"``."""
    if axis not in ("x", "y"):
        raise DomainError(f"axis must be 'x' or 'y', got {axis!r}")
    out: dict[tuple[int, int], float] = {}
    for (m, n), c in u.coeffs.items():
        p = m if axis == "x" else n
        if p == 0:
            continue
        fac = monomial_factor(p, u.alpha, conv)
        key = (m - 1, n) if axis == "x" else (m, n - 1)
        out[key] = out.get(key, 0.0) + c * fac
    return PartialField(u.alpha, out)


def laplacian_alpha(u: PartialField, conv: DerivativeConvention = CANONICAL) -> PartialField:
    xx = partial_alpha(partial_alpha(u, "x", conv), "x", conv)
    yy = partial_alpha(partial_alpha(u, "y", conv), "y", conv)
    return xx + yy


class CRResidual(NamedTuple):
    res1: PartialField
    res2: PartialField
    maxabs: float


def cr_residual(f: FractalSeries, conv: DerivativeConvention = CANONICAL, grid: int = 5) -> CRResidual:
    """Residuals of the two Cauchy-Riemann equations for ``f``.

    ``maxabs`` is the largest absolute residual over a ``grid x grid`` lattice
    on the unit square.
    """
    if grid < 1:
        raise DomainError("grid must have at least one point per axis")
    u, v = expand_uv(f)
    res1 = partial_alpha(u, "x", conv) - partial_alpha(v, "y", conv)
    res2 = partial_alpha(u, "y", conv) + partial_alpha(v, "x", conv)
    pts = [i / (grid - 1) for i in range(grid)] if grid > 1 else [0.5]
    maxabs = 0.0
    for x in pts:
        for y in pts:
            maxabs = max(maxabs, abs(res1.evaluate(x, y)), abs(res2.evaluate(x, y)))
    return CRResidual(res1, res2, maxabs)


# -- random inputs -------------------------------------------------------------


def _coef(rng: random.Random) -> complex:
    return complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))


def random_taylor(rng: random.Random, alpha: float, degree: int, center=(0.0, 0.0)) -> FractalSeries:
    kmax = rng.randint(1, degree)
    return FractalSeries(alpha, center, 0, tuple(_coef(rng) for _ in range(kmax + 1)))


def random_laurent(rng: random.Random, alpha: float, degree: int, center=(0.0, 0.0), min_k: int = -5) -> FractalSeries:
    kmin = rng.randint(min_k, -1)
    kmax = rng.randint(0, degree)
    return FractalSeries(alpha, center, kmin, tuple(_coef(rng) for _ in range(kmax - kmin + 1)))


def random_multipole(
    rng: random.Random,
    alpha: float,
    max_poles: int = 4,
    max_order: int = 4,
    spread: float = 2.0,
    avoid_radius: float = 1.0,
) -> MultiPoleFunction:
    """Random poles in a disk of radius ``spread``, kept away from the circle ``|z| = avoid_radius``."""
    poles = []
    for _ in range(rng.randint(1, max_poles)):
        while True:
            r = spread * math.sqrt(rng.random())
            t = TWO_PI * rng.random()
            loc = (r * math.cos(t), r * math.sin(t))
            if abs(r - avoid_radius) > 0.05 and all(math.dist(loc, p) > 0.05 for p, _ in poles):
                break
        order = rng.randint(1, max_order)
        part = FractalSeries(alpha, loc, -order, tuple(_coef(rng) for _ in range(order)))
        poles.append((loc, part))
    return MultiPoleFunction(alpha, tuple(poles), random_taylor(rng, alpha, 4))


# -- theorem checks ------------------------------------------------------------
#
# Each check takes (alpha, conv, rng, degree) and returns a non-negative residual.

UNIT = CircleContour((0.0, 0.0), 1.0)


def _coeff_gap(f: FractalSeries, g: FractalSeries) -> float:
    d = f - g
    return max(abs(c) for c in d.coeffs)


def _check_cr(alpha, conv, rng, degree):
    f = random_taylor(rng, alpha, degree)
    res = cr_residual(f, conv)
    return max(res.res1.max_abs(), res.res2.max_abs())


def _check_ftc(alpha, conv, rng, degree):
    f = random_taylor(rng, alpha, degree)
    F = series_primitive(f, conv)
    resid = _coeff_gap(series_derivative(F, conv), f)
    t1, t2, t3 = (TWO_PI * rng.random() for _ in range(3))
    a12 = complex(arc_integral(f, UNIT, t1, t2, conv))
    a23 = complex(arc_integral(f, UNIT, t2, t3, conv))
    a13 = complex(arc_integral(f, UNIT, t1, t3, conv))
    a21 = complex(arc_integral(f, UNIT, t2, t1, conv))
    return max(resid, abs(a12 + a23 - a13), abs(a12 + a21))


def _check_closed(alpha, conv, rng, degree):
    # a closed loop computed through the primitive versus the orthogonality table
    f = random_taylor(rng, alpha, degree)
    via_primitive = complex(arc_integral(f, UNIT, 0.0, TWO_PI, conv))
    return abs(via_primitive - complex(contour_integral(f, UNIT)))


def _radius_pair(rng: random.Random, f: MultiPoleFunction) -> tuple[float, float]:
    dists = sorted(math.hypot(*loc) for loc, _ in f.poles)
    edges = [0.0] + dists + [dists[-1] + 2.0]
    i = rng.randrange(len(edges) - 1)
    lo, hi = edges[i], edges[i + 1]
    pad = 0.1 * (hi - lo)
    return rng.uniform(lo + pad, hi - pad), rng.uniform(lo + pad, hi - pad)


def _check_deform(alpha, conv, rng, degree):
    f = random_multipole(rng, alpha)
    r1, r2 = _radius_pair(rng, f)
    i1 = complex(contour_integral(f, CircleContour((0.0, 0.0), r1)))
    i2 = complex(contour_integral(f, CircleContour((0.0, 0.0), r2)))
    return abs(i1 - i2)


def _random_circle(rng):
    return CircleContour((0.0, 0.0), rng.uniform(0.5, 2.0))


def _check_cauchy(alpha, conv, rng, degree):
    f = random_taylor(rng, alpha, degree)
    v = complex(cauchy_point_value(f, _random_circle(rng)))
    return abs(v - complex(series_eval(f, FractalPolar(0.0))))


def _check_deriv(alpha, conv, rng, degree):
    f = random_taylor(rng, alpha, degree)
    C = _random_circle(rng)
    worst = 0.0
    for n in range(f.kmax + 2):
        via_contour = complex(derivative_via_contour(f, C, n, conv))
        direct = complex(series_eval(series_derivative_n(f, n, conv), FractalPolar(0.0)))
        # derivative values scale like n!, so compare relatively
        worst = max(worst, abs(via_contour - direct) / max(1.0, abs(direct)))
    return worst


_ORTHO_N = 1024
_ortho_cache: dict[float, float] = {}


def _check_orthogonality(alpha, conv, rng, degree):
    # the table against a discrete Stieltjes quadrature; input-independent
    if alpha not in _ortho_cache:
        worst = 0.0
        for k in range(-6, 7):
            res = quadrature_diagnostic(FractalSeries.monomial(alpha, k), UNIT, _ORTHO_N)
            worst = max(worst, res.gap)
        _ortho_cache[alpha] = worst
    return _ortho_cache[alpha]


def _check_taylor(alpha, conv, rng, degree):
    # coefficient identity a_k = f^(k alpha)(z0) / Gamma(1 + k alpha)
    f = random_taylor(rng, alpha, degree)
    C = _random_circle(rng)
    worst = 0.0
    d = f
    for k in range(f.kmax + 1):
        a_k = complex(cauchy_coefficient(f, C, k))
        worst = max(worst, abs(a_k - d.coeff(0) / gamma(1.0 + k * alpha)))
        d = series_derivative(d, conv)
    return worst


def _check_laurent(alpha, conv, rng, degree):
    f = random_laurent(rng, alpha, degree)
    C = _random_circle(rng)
    return max(abs(complex(cauchy_coefficient(f, C, k)) - f.coeff(k)) for k in range(f.kmin - 1, f.kmax + 2))


def _check_residue(alpha, conv, rng, degree):
    f = random_multipole(rng, alpha)

    def by_derivative(part, loc):
        kind = classify_singularity(part)
        n = kind.order if isinstance(kind, Pole) else 1
        return residue_via_derivative(part, loc, n, conv)

    lhs = complex(contour_integral(f, UNIT))
    rhs = complex(monomial_circle_integral(-1, alpha)) * enclosed_residue_sum(f, UNIT, by_derivative)
    return abs(lhs - rhs)


def _check_gauss(alpha, conv, rng, degree):
    f = random_taylor(rng, alpha, degree)
    R = rng.uniform(0.5, 2.0)
    g = complex(gauss_mean_value(f, f.center, R))
    c = complex(cauchy_point_value(f, CircleContour(f.center, R)))
    return max(abs(g - c), abs(g - f.coeff(0)))


def _check_laplace(alpha, conv, rng, degree):
    f = random_taylor(rng, alpha, degree)
    u, v = expand_uv(f)
    return max(laplacian_alpha(u, conv).max_abs(), laplacian_alpha(v, conv).max_abs())


def product_rule_residual(f: FractalSeries, g: FractalSeries, conv: DerivativeConvention) -> FractalSeries:
    """``D(fg) - (g Df + f Dg)`` as a series."""
    return series_derivative(f * g, conv) - (g * series_derivative(f, conv) + f * series_derivative(g, conv))


def _check_product(alpha, conv, rng, degree):
    f = random_taylor(rng, alpha, degree)
    g = random_taylor(rng, alpha, degree)
    return max(abs(c) for c in product_rule_residual(f, g, conv).coeffs)


CHECKS: dict[str, Callable[[float, DerivativeConvention, random.Random, int], float]] = {
    "T1-CR": _check_cr,
    "T2-FTC": _check_ftc,
    "T3-closed": _check_closed,
    "T5-deform": _check_deform,
    "T6-Cauchy": _check_cauchy,
    "C7-deriv": _check_deriv,
    "T8/T9-orthogonality": _check_orthogonality,
    "T10-Taylor": _check_taylor,
    "T11-Laurent": _check_laurent,
    "C12/13-residue": _check_residue,
    "T14-Gauss": _check_gauss,
    "Laplace-harmonic": _check_laplace,
    "rule-2.8-product": _check_product,
}


def run_check(theorem: str, alpha: float, conv: DerivativeConvention, seed, degree: int = 8) -> float:
    """Residual of one theorem check on the random input drawn from ``seed``."""
    if theorem not in CHECKS:
        raise DomainError(f"unknown theorem id {theorem!r}")
    rng = random.Random(f"{theorem}|{seed}")
    return CHECKS[theorem](check_alpha(alpha), conv, rng, degree)


# -- matrix --------------------------------------------------------------------


@dataclass(frozen=True)
class ConformanceEntry:
    alpha: float
    convention: DerivativeConvention
    theorem: str
    passed: bool
    max_residual: float

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass(frozen=True)
class ConformanceReport:
    alphas: tuple[float, ...]
    degree: int
    seeds: int
    tol: float
    entries: tuple[ConformanceEntry, ...]

    def get(self, theorem: str, alpha: float, conv: DerivativeConvention) -> ConformanceEntry:
        for e in self.entries:
            if e.theorem == theorem and e.alpha == alpha and e.convention is conv:
                return e
        raise KeyError((theorem, alpha, conv))

    def failures(self) -> list[ConformanceEntry]:
        return [e for e in self.entries if not e.passed]

    def rows(self) -> list[dict]:
        return [
            {
                "alpha": e.alpha,
                "convention": e.convention.value,
                "theorem": e.theorem,
                "status": e.status,
                "max_residual": e.max_residual,
            }
            for e in self.entries
        ]


def _matrix_row(alpha: float, conv: DerivativeConvention, degree: int, seeds: int, tol: float):
    out = []
    for theorem in THEOREMS:
        worst = 0.0
        for s in range(seeds):
            r = run_check(theorem, alpha, conv, s, degree)
            if not r <= worst:
                worst = r  # also propagates nan
        out.append(ConformanceEntry(alpha, conv, theorem, bool(worst <= tol), worst))
    return out


def conformance_matrix(
    alphas: Iterable[float],
    degree: int = 8,
    seeds: int = 100,
    tol: float = DEFAULT_TOL,
) -> ConformanceReport:
    """Run every theorem check for each order and convention.

    ``seeds`` random inputs per cell; a cell passes when its largest residual
    is at most ``tol``.  Rows are assembled in input order, so the report is
    deterministic.
    """
    alphas = tuple(check_alpha(a) for a in alphas)
    if not 1 <= degree <= MAX_DEGREE:
        raise DomainError(f"degree must lie in 1..{MAX_DEGREE}")
    if seeds < 1:
        raise DomainError("seeds must be positive")
    entries = []
    for alpha in alphas:
        for conv in CONVENTIONS:
            entries.extend(_matrix_row(alpha, conv, degree, seeds, tol))
    return ConformanceReport(alphas, degree, seeds, tol, tuple(entries))

"""Circle-contour calculus.

The normalized loop integral ``(1/Gamma(1+a)) * oint (z-z0)**(k a) (dz)**a``
over a circle about ``z0`` is taken from the monomial orthogonality table
:func:`monomial_circle_integral`: it is ``(2 pi)**a * i**a`` for ``k = -1`` and
zero otherwise.  Every closed-loop quantity here (Cauchy formula, coefficient
extraction, mean value, residue sums) is computed by expanding the integrand
as a :class:`~lfcomplex.series.FractalSeries` and applying that table.

:func:`quadrature_diagnostic` evaluates the same loop by a discrete Stieltjes
sum over the Mittag-Leffler parametrization and reports how far it lands from
the table value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence, Union

from .algebra import TWO_PI, FractalComplex, FractalPolar, check_alpha, unit_kernel
from .errors import DomainError
from .series import (
    CANONICAL,
    DerivativeConvention,
    FractalSeries,
    monomial_factor,
    series_eval,
    series_primitive,
)

INSIDE_RTOL = 1e-9


def _same_point(a, b) -> bool:
    scale = max(1.0, abs(a[0]), abs(a[1]), abs(b[0]), abs(b[1]))
    return math.hypot(a[0] - b[0], a[1] - b[1]) <= 1e-12 * scale


@dataclass(frozen=True)
class CircleContour:
    """Circle of ``radius`` about ``center``; ``orientation`` is +1 or -1."""

    center: tuple[float, float] = (0.0, 0.0)
    radius: float = 1.0
    orientation: int = 1

    def __post_init__(self):
        if not self.radius > 0:
            raise DomainError(f"contour radius must be positive, got {self.radius!r}")
        if self.orientation not in (1, -1):
            raise DomainError("orientation must be +1 or -1")
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))
        object.__setattr__(self, "radius", float(self.radius))

    def reversed(self) -> CircleContour:
        return CircleContour(self.center, self.radius, -self.orientation)

    def encloses(self, point) -> bool:
        """True if ``point`` lies strictly inside; a point on the circle raises."""
        d = math.hypot(point[0] - self.center[0], point[1] - self.center[1])
        if abs(d - self.radius) <= INSIDE_RTOL * self.radius:
            raise DomainError(f"pole on contour: {tuple(point)!r} lies on the circle of radius {self.radius!r}")
        return d < self.radius


@dataclass(frozen=True)
class MultiPoleFunction:
    """Finitely many poles with principal parts plus one entire (Taylor) part.

    ``poles`` is a sequence of ``(location, principal)`` pairs where each
    principal part is centered at its location and has only negative powers.
    """

    alpha: float
    poles: tuple[tuple[tuple[float, float], FractalSeries], ...] = ()
    entire: FractalSeries | None = field(default=None)

    def __post_init__(self):
        alpha = check_alpha(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        poles = []
        for loc, part in self.poles:
            loc = (float(loc[0]), float(loc[1]))
            if part.alpha != alpha:
                raise DomainError("all parts of a multi-pole function must share alpha")
            if not _same_point(loc, part.center):
                raise DomainError(f"principal part for pole {loc!r} is centered at {part.center!r}")
            if part.is_zero() or part.kmax > -1:
                raise DomainError(f"principal part at {loc!r} must contain only negative powers")
            for other, _ in poles:
                if _same_point(loc, other):
                    raise DomainError(f"duplicate pole location {loc!r}")
            poles.append((loc, part))
        object.__setattr__(self, "poles", tuple(poles))
        entire = self.entire if self.entire is not None else FractalSeries.zero(alpha)
        if entire.alpha != alpha:
            raise DomainError("all parts of a multi-pole function must share alpha")
        if entire.kmin < 0:
            raise DomainError("the entire part must not contain negative powers")
        object.__setattr__(self, "entire", entire)

    def principal(self, location) -> FractalSeries:
        for loc, part in self.poles:
            if _same_point(loc, location):
                return part
        raise DomainError(f"unknown pole location {tuple(location)!r}")


Integrable = Union[FractalSeries, MultiPoleFunction]


def _loop_unit(alpha: float) -> complex:
    return complex(0.0, TWO_PI**alpha)


def monomial_circle_integral(k: int, alpha: float) -> FractalComplex:
    """Normalized loop integral of ``(z - z0)**(k alpha)`` about ``z0``."""
    alpha = check_alpha(alpha)
    if k == -1:
        return FractalComplex.from_complex(_loop_unit(alpha))
    return FractalComplex(0.0, 0.0)


def _loop(f: FractalSeries) -> complex:
    # positively oriented loop about f.center, term by term
    total = 0j
    for k, c in f.items():
        total += c * complex(monomial_circle_integral(k, f.alpha))
    return total


def _normalized_loop(f: FractalSeries) -> complex:
    # loop of f divided by (2 pi)^a i^a; each table entry is normalized before
    # summing, so a stored coefficient comes back bit-exact
    unit = _loop_unit(f.alpha)
    total = 0j
    for k, c in f.items():
        total += c * (complex(monomial_circle_integral(k, f.alpha)) / unit)
    return total


def contour_integral(f: Integrable, C: CircleContour) -> FractalComplex:
    """Normalized loop integral of ``f`` over ``C``.

    Each pole strictly inside contributes its ``w**-1`` coefficient times
    ``(2 pi)**a i**a``; the entire part contributes nothing.
    """
    if isinstance(f, FractalSeries):
        parts = [(f.center, f)] if f.kmin < 0 else []
    else:
        parts = list(f.poles)
    total = 0j
    for loc, part in parts:
        if C.encloses(loc):
            total += _loop(part)
    return FractalComplex.from_complex(C.orientation * total)


def _require_centered(f: FractalSeries, C: CircleContour):
    if not _same_point(f.center, C.center):
        raise DomainError(f"center mismatch: series at {f.center!r}, contour at {C.center!r}")


def _require_positive(C: CircleContour):
    if C.orientation != 1:
        raise DomainError("the Cauchy formulas require a positively oriented contour")


def arc_integral(
    f: FractalSeries,
    C: CircleContour,
    theta1: float,
    theta2: float,
    conv: DerivativeConvention = CANONICAL,
) -> FractalComplex:
    """``F(z(theta2)) - F(z(theta1))`` along ``C`` with ``F`` the primitive of ``f``.

    A negatively oriented contour traverses the arc the other way and negates
    the value.
    """
    _require_centered(f, C)
    F = series_primitive(f, conv)
    if theta1 == theta2:
        return FractalComplex(0.0, 0.0)
    end = complex(series_eval(F, FractalPolar(C.radius, theta2)))
    start = complex(series_eval(F, FractalPolar(C.radius, theta1)))
    return FractalComplex.from_complex(C.orientation * (end - start))


def cauchy_coefficient(f: FractalSeries, C: CircleContour, k: int) -> FractalComplex:
    """Extract ``a_k`` via ``(1/((2pi)^a i^a)) (1/Gamma(1+a)) oint f/(z-z0)^((k+1)a) (dz)^a``."""
    _require_centered(f, C)
    _require_positive(C)
    return FractalComplex.from_complex(_normalized_loop(f.shift(-(k + 1))))


def cauchy_point_value(f: FractalSeries, C: CircleContour) -> FractalComplex:
    """Value at the center from the Cauchy integral formula."""
    if f.kmin < 0:
        raise DomainError("the Cauchy formula needs a series without principal part")
    return cauchy_coefficient(f, C, 0)


def derivative_via_contour(
    f: FractalSeries,
    C: CircleContour,
    n: int,
    conv: DerivativeConvention = CANONICAL,
) -> FractalComplex:
    """``n``-th local fractional derivative at the center from contour data.

    ``Gamma(1 + n a) a_n`` under CANONICAL, ``n! Gamma(1+a)**n a_n`` under
    SCALED_CLASSICAL.
    """
    if n < 0:
        raise DomainError("derivative order must be non-negative")
    a_n = complex(cauchy_coefficient(f, C, n))
    factor = 1.0
    for j in range(1, n + 1):
        factor *= monomial_factor(j, f.alpha, conv)
    return FractalComplex.from_complex(factor * a_n)


def gauss_mean_value(f: FractalSeries, omega, R: float) -> FractalComplex:
    """Circle mean ``(1/((2pi)^a Gamma(1+a))) int_0^{2pi} f (dtheta)^a`` about ``omega``.

    Under the parametrization ``(dz)^a = i^a w (dtheta)^a`` the theta integral
    of ``f`` is the loop integral of ``f/w`` divided by ``i^a``.
    """
    if not R > 0:
        raise DomainError("mean-value radius must be positive")
    if not _same_point(f.center, omega):
        raise DomainError(f"center mismatch: series at {f.center!r}, omega {tuple(omega)!r}")
    if f.kmin < 0:
        raise DomainError("the mean-value formula needs a series without principal part")
    # theta integral = loop(f / w) / i^a; dividing by (2 pi)^a leaves the normalized loop
    return FractalComplex.from_complex(_normalized_loop(f.shift(-1)))


class MLBound(NamedTuple):
    bound: float
    witness: float


def _multipole_value(f: MultiPoleFunction, z: complex) -> complex:
    total = 0j
    for part in [p for _, p in f.poles] + [f.entire]:
        d = z - complex(*part.center)
        for k, c in part.items():
            total += c * d**k
    return total


def ml_bound(f: Integrable, C: CircleContour, samples: int = 1024) -> MLBound:
    """Sampled ``M * L`` with ``L = (2 pi)**a R**a``, alongside ``|contour_integral|``.

    Multi-pole functions are evaluated pointwise and so only at ``alpha == 1``.
    """
    if samples < 1:
        raise DomainError("samples must be positive")
    thetas = [TWO_PI * j / samples for j in range(samples)]
    if isinstance(f, FractalSeries):
        _require_centered(f, C)
        M = max(abs(series_eval(f, FractalPolar(C.radius, t))) for t in thetas)
        alpha = f.alpha
    else:
        if f.alpha != 1.0:
            raise DomainError("pointwise evaluation of multi-pole functions requires alpha = 1")
        for loc, _ in f.poles:
            C.encloses(loc)
        c = complex(*C.center)
        M = max(abs(_multipole_value(f, c + C.radius * complex(math.cos(t), math.sin(t)))) for t in thetas)
        alpha = 1.0
    L = TWO_PI**alpha * C.radius**alpha
    return MLBound(M * L, abs(contour_integral(f, C)))


class QuadratureResult(NamedTuple):
    value: FractalComplex
    gap: float
    exact: FractalComplex
    thetas: tuple[float, ...]
    partial: tuple[complex, ...]


def quadrature_diagnostic(f: FractalSeries, C: CircleContour, N: int = 1024) -> QuadratureResult:
    """Discrete Stieltjes sum of the loop integral on uniform theta nodes.

    Sums ``f(z_j) * i^a R^a E_a(i^a th_j^a) * (th_{j+1}^a - th_j^a)`` for
    ``th_j = 2 pi j / N`` and compares with :func:`contour_integral`.
    ``partial`` holds the running sum after each node.
    """
    if N < 8:
        raise DomainError("the quadrature needs at least 8 nodes")
    _require_centered(f, C)
    alpha = f.alpha
    Ra = C.radius**alpha
    thetas = tuple(TWO_PI * j / N for j in range(N))
    marks = [t**alpha for t in thetas] + [TWO_PI**alpha]
    total = 0j
    partial = []
    for j, t in enumerate(thetas):
        w = Ra * unit_kernel(alpha, t)
        fv = complex(series_eval(f, FractalPolar(C.radius, t)))
        total += fv * (1j * w) * (marks[j + 1] - marks[j])
        partial.append(C.orientation * total)
    value = C.orientation * total
    exact = contour_integral(f, C)
    return QuadratureResult(
        FractalComplex.from_complex(value),
        abs(value - complex(exact)),
        exact,
        thetas,
        tuple(partial),
    )


def enclosed_residue_sum(f: Integrable, C: CircleContour, residue_of) -> complex:
    """Sum ``residue_of(part, location)`` over the poles strictly inside ``C``."""
    if isinstance(f, FractalSeries):
        parts: Sequence = [(f.center, f)] if f.kmin < 0 else []
    else:
        parts = f.poles
    total = 0j
    for loc, part in parts:
        if C.encloses(loc):
            total += complex(residue_of(part, loc))
    return total

"""Scalar arithmetic in the fractal plane.

A fractal complex number is ``re + i^a * im`` where the unit ``i^a`` obeys
``(i^a)**2 == -1``.  The resulting field has exactly the operations of the
ordinary complex numbers, so values are backed by Python ``complex`` and at
order ``a == 1`` coincide with it bit for bit.  The order only matters when a
value is tied to geometry, through the Mittag-Leffler circle parametrization
:func:`frac_polar`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError, DomainError, GammaPoleError

TWO_PI = 2.0 * math.pi

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(TWO_PI)

# Arguments within this distance of a non-positive integer count as poles.
POLE_TOL = 1e-10

ML_TOL = 1e-15
ML_MAX_TERMS = 1000


def check_alpha(alpha: float) -> float:
    """Validate an order parameter, returning it as a float."""
    a = float(alpha)
    if not (0.0 < a <= 1.0):
        raise DomainError(f"alpha must satisfy 0 < alpha <= 1, got {alpha!r}")
    return a


@dataclass(frozen=True)
class FractalComplex:
    """The value ``re + i^a * im``."""

    re: float
    im: float = 0.0

    @classmethod
    def from_complex(cls, z: complex) -> FractalComplex:
        return cls(z.real, z.imag)

    @classmethod
    def unit(cls) -> FractalComplex:
        """The fractal imaginary unit ``i^a``."""
        return cls(0.0, 1.0)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __add__(self, other):
        return FractalComplex.from_complex(complex(self) + _as_complex(other))

    __radd__ = __add__

    def __sub__(self, other):
        return FractalComplex.from_complex(complex(self) - _as_complex(other))

    def __rsub__(self, other):
        return FractalComplex.from_complex(_as_complex(other) - complex(self))

    def __mul__(self, other):
        return fc_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return fc_div(self, other)

    def __rtruediv__(self, other):
        return fc_div(other, self)

    def __neg__(self):
        return FractalComplex(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers are defined in the fractal field")
        if k < 0:
            return fc_div(FractalComplex(1.0), self ** (-k))
        return FractalComplex.from_complex(complex(self) ** k)

    def __abs__(self) -> float:
        return abs(complex(self))

    def conjugate(self) -> FractalComplex:
        return FractalComplex(self.re, -self.im)

    def isclose(self, other, rel_tol=1e-12, abs_tol=0.0) -> bool:
        diff = abs(complex(self) - _as_complex(other))
        scale = max(abs(complex(self)), abs(_as_complex(other)))
        return diff <= max(rel_tol * scale, abs_tol)


def _as_complex(x) -> complex:
    if isinstance(x, FractalComplex):
        return complex(x.re, x.im)
    if isinstance(x, (int, float, complex)):
        return complex(x)
    raise TypeError(f"cannot use {type(x).__name__} as a fractal complex value")


def fc_mul(a, b) -> FractalComplex:
    """Field product under ``(i^a)**2 == -1``."""
    return FractalComplex.from_complex(_as_complex(a) * _as_complex(b))


def fc_div(a, b) -> FractalComplex:
    """Field quotient; a zero divisor raises :class:`DomainError`."""
    den = _as_complex(b)
    if den == 0:
        raise DomainError("division by zero in the fractal field")
    return FractalComplex.from_complex(_as_complex(a) / den)


# -- gamma -------------------------------------------------------------------


def _lanczos_sum(x: float) -> float:
    # x is the shifted argument (Gamma(x + 1) form).
    s = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        s += _LANCZOS_COEF[i] / (x + i)
    return s


def _gamma_real(x: float) -> float:
    """Gamma on the real line minus the poles, via reflection below 1/2."""
    if x < 0.5:
        s = math.sin(math.pi * x)
        if s == 0.0:
            raise DomainError(f"gamma has a pole at {x!r}")
        return math.pi / (s * _gamma_real(1.0 - x))
    if x == int(x) and x <= 171:
        return float(math.factorial(int(x) - 1))
    x -= 1.0
    t = x + _LANCZOS_G + 0.5
    # split the power so large arguments do not overflow early
    half = t ** ((x + 0.5) / 2.0)
    return math.sqrt(TWO_PI) * half * (half * math.exp(-t)) * _lanczos_sum(x)


def log_gamma(x: float) -> float:
    """``log |Gamma(x)|`` for ``x > 0``; stays finite where gamma overflows."""
    if x <= 0:
        raise DomainError(f"log_gamma requires a positive argument, got {x!r}")
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    x -= 1.0
    t = x + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (x + 0.5) * math.log(t) - t + math.log(_lanczos_sum(x))


def gamma(x: float) -> float:
    """Euler gamma for ``x > 0``.

    Lanczos approximation with reflection for ``x < 1/2``; integer arguments
    return the exact factorial.
    """
    x = float(x)
    if not x > 0:
        raise DomainError(f"gamma requires a positive argument, got {x!r}")
    return _gamma_real(x)


def _pole_order(x: float) -> int | None:
    """Return ``m`` when ``x`` is (numerically) the gamma pole ``-m``."""
    if x > POLE_TOL:
        return None
    m = round(-x)
    if abs(x + m) <= POLE_TOL * max(1.0, abs(x)):
        return m
    return None


def gamma_ratio(k: int, alpha: float) -> float:
    """``Gamma(1 + k*alpha) / Gamma(1 + (k - 1)*alpha)`` for any integer ``k``.

    When both arguments sit on poles ``-m`` and ``-n`` the ratio is continued
    by shifting both arguments by the same infinitesimal, which gives
    ``(-1)**(m - n) * n! / m!`` (and ``k`` itself at ``alpha == 1``).  A pole
    only in the denominator gives 0; a pole only in the numerator raises
    :class:`GammaPoleError`.
    """
    alpha = check_alpha(alpha)
    k = int(k)
    if alpha == 1.0:
        return float(k)
    num = 1.0 + k * alpha
    den = 1.0 + (k - 1) * alpha
    m = _pole_order(num)
    n = _pole_order(den)
    if m is not None and n is not None:
        sign = -1.0 if (m - n) % 2 else 1.0
        return sign * math.factorial(n) / math.factorial(m)
    if n is not None:
        return 0.0
    if m is not None:
        raise GammaPoleError(
            f"gamma pole: Gamma(1 + {k}*{alpha!r}) is infinite while the denominator is finite"
        )
    if num > 0 and den > 0 and num < 170 and den < 170:
        return _gamma_real(num) / _gamma_real(den)
    if num > 0 and den > 0:
        return math.exp(log_gamma(num) - log_gamma(den))
    return _gamma_real(num) / _gamma_real(den)


@lru_cache(maxsize=64)
def _inverse_gamma_table(alpha: float, n: int) -> tuple[float, ...]:
    # 1 / Gamma(1 + k*alpha) for k = 0..n-1
    out = []
    for k in range(n):
        x = 1.0 + k * alpha
        if x < 170.0:
            out.append(1.0 / _gamma_real(x))
        else:
            out.append(math.exp(-log_gamma(x)))
    return tuple(out)


def inverse_gamma_table(alpha: float, n: int) -> tuple[float, ...]:
    """``1 / Gamma(1 + k*alpha)`` for ``k = 0 .. n-1`` (cached)."""
    return _inverse_gamma_table(check_alpha(alpha), int(n))


# -- Mittag-Leffler ----------------------------------------------------------


def _ml_sum(alpha: float, w: complex, tol: float, max_terms: int) -> complex:
    inv = _inverse_gamma_table(alpha, max_terms)
    total = 0j
    power = 1 + 0j
    for k in range(max_terms):
        term = power * inv[k]
        total += term
        if abs(term) < tol:
            return total
        power *= w
        if not (math.isfinite(power.real) and math.isfinite(power.imag)):
            break
    raise ConvergenceError(
        f"no convergence: Mittag-Leffler series for alpha={alpha!r}, |w|={abs(w):.6g} "
        f"did not reach tolerance {tol:g} within {max_terms} terms"
    )


def mittag_leffler(alpha: float, w, tol: float = ML_TOL, max_terms: int = ML_MAX_TERMS) -> FractalComplex:
    """One-parameter Mittag-Leffler function ``sum_k w**k / Gamma(1 + k*alpha)``.

    Summed directly until a term drops below ``tol`` (absolute).  Intended for
    moderate arguments; large ``|w|`` exhausts the term cap and raises
    :class:`ConvergenceError`.
    """
    alpha = check_alpha(alpha)
    return FractalComplex.from_complex(_ml_sum(alpha, _as_complex(w), tol, max_terms))


# -- polar parametrization ---------------------------------------------------


def canonical_angle(theta: float) -> float:
    """Map an angle into ``[0, 2*pi]``.

    Angles already in the closed interval are kept, so ``2*pi`` stays the
    end of a loop rather than collapsing onto 0; anything else is reduced
    into ``[0, 2*pi)``.
    """
    theta = float(theta)
    if 0.0 <= theta <= TWO_PI:
        return theta
    t = math.fmod(theta, TWO_PI)
    if t < 0:
        t += TWO_PI
    if t >= TWO_PI:
        t = 0.0
    return t


@dataclass(frozen=True)
class FractalPolar:
    """Point at radius ``r`` and angle ``theta`` about an expansion center."""

    r: float
    theta: float = 0.0

    def __post_init__(self):
        if not self.r >= 0:
            raise DomainError(f"polar radius must be non-negative, got {self.r!r}")
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "theta", canonical_angle(self.theta))


@lru_cache(maxsize=1 << 16)
def _unit_kernel(alpha: float, theta: float) -> complex:
    # E_alpha(i^alpha * theta^alpha)
    return _ml_sum(alpha, complex(0.0, theta**alpha), ML_TOL, ML_MAX_TERMS)


def unit_kernel(alpha: float, theta: float) -> complex:
    """``E_alpha(i^alpha theta^alpha)`` as a plain ``complex`` (cached)."""
    return _unit_kernel(check_alpha(alpha), canonical_angle(theta))


def frac_polar(p: FractalPolar, alpha: float) -> FractalComplex:
    """``r**alpha * E_alpha(i^alpha * theta**alpha)``."""
    alpha = check_alpha(alpha)
    return FractalComplex.from_complex(p.r**alpha * _unit_kernel(alpha, p.theta))

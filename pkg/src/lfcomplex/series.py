"""Finite Laurent expansions in a fractional power of the displacement.

A :class:`FractalSeries` stands for ``sum_k a_k w**k`` with ``w = (z - z0)**alpha``
over a finite integer range ``kmin..kmax``.  Coefficients live in the fractal
field and are stored as Python ``complex`` (the imaginary part is the
``i^alpha`` component).  Infinite expansions are modeled as truncations plus
:func:`tail_bound`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, Mapping

from .algebra import (
    FractalComplex,
    FractalPolar,
    _as_complex,
    check_alpha,
    frac_polar,
    gamma,
    gamma_ratio,
    inverse_gamma_table,
)
from .errors import DomainError, NoPrimitiveError, PoleEvaluationError


class DerivativeConvention(enum.Enum):
    """Monomial rule realizing the local fractional derivative.

    ``CANONICAL`` maps ``w**k`` to ``R(k, alpha) * w**(k-1)`` with the gamma
    ratio ``R``; ``SCALED_CLASSICAL`` maps it to ``k * Gamma(1+alpha) * w**(k-1)``.
    The two agree at ``alpha == 1``.
    """

    CANONICAL = "canonical"
    SCALED_CLASSICAL = "scaled"

    @classmethod
    def parse(cls, name: str) -> DerivativeConvention:
        key = name.strip().lower()
        for conv in cls:
            if key in (conv.value, conv.name.lower()):
                return conv
        raise DomainError(f"unknown derivative convention {name!r}")


CANONICAL = DerivativeConvention.CANONICAL
SCALED_CLASSICAL = DerivativeConvention.SCALED_CLASSICAL


def monomial_factor(k: int, alpha: float, conv: DerivativeConvention) -> float:
    """Factor multiplying ``w**(k-1)`` in the derivative of ``w**k``."""
    if k == 0:
        return 0.0
    if conv is CANONICAL:
        return gamma_ratio(k, alpha)
    return k * gamma(1.0 + alpha)


def _as_center(center) -> tuple[float, float]:
    x, y = center
    return (float(x), float(y))


@dataclass(frozen=True)
class FractalSeries:
    """``sum_{k=kmin}^{kmax} a_k (z - center)**(k*alpha)``.

    Construction normalizes: zero coefficients at either end are stripped and
    the zero series is stored as ``kmin = 0, coeffs = (0,)``.
    """

    alpha: float
    center: tuple[float, float]
    kmin: int
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        object.__setattr__(self, "center", _as_center(self.center))
        cs = [_as_complex(c) for c in self.coeffs]
        lo, hi = 0, len(cs)
        while lo < hi and cs[lo] == 0:
            lo += 1
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "kmin", 0)
            object.__setattr__(self, "coeffs", (0j,))
        else:
            object.__setattr__(self, "kmin", int(self.kmin) + lo)
            object.__setattr__(self, "coeffs", tuple(cs[lo:hi]))

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_terms(cls, alpha: float, terms: Mapping[int, complex], center=(0.0, 0.0)) -> FractalSeries:
        if not terms:
            return cls.zero(alpha, center)
        lo, hi = min(terms), max(terms)
        coeffs = [0j] * (hi - lo + 1)
        for k, c in terms.items():
            coeffs[k - lo] = _as_complex(c)
        return cls(alpha, center, lo, tuple(coeffs))

    @classmethod
    def zero(cls, alpha: float, center=(0.0, 0.0)) -> FractalSeries:
        return cls(alpha, center, 0, (0j,))

    @classmethod
    def monomial(cls, alpha: float, k: int, coeff=1.0, center=(0.0, 0.0)) -> FractalSeries:
        return cls(alpha, center, k, (_as_complex(coeff),))

    # -- access --------------------------------------------------------------

    @property
    def kmax(self) -> int:
        return self.kmin + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0j,)

    def coeff(self, k: int) -> complex:
        j = k - self.kmin
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0j

    def __getitem__(self, k: int) -> FractalComplex:
        return FractalComplex.from_complex(self.coeff(k))

    def items(self) -> Iterator[tuple[int, complex]]:
        for j, c in enumerate(self.coeffs):
            if c != 0:
                yield self.kmin + j, c

    def terms(self) -> dict[int, complex]:
        return dict(self.items())

    def same_frame(self, other: FractalSeries) -> bool:
        return self.alpha == other.alpha and self.center == other.center

    def with_alpha(self, alpha: float) -> FractalSeries:
        return FractalSeries(alpha, self.center, self.kmin, self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def _check_frame(self, other: FractalSeries):
        if self.alpha != other.alpha:
            raise DomainError(f"series orders differ: {self.alpha!r} vs {other.alpha!r}")
        if self.center != other.center:
            raise DomainError(f"series centers differ: {self.center!r} vs {other.center!r}")

    def __add__(self, other):
        if not isinstance(other, FractalSeries):
            other = FractalSeries.monomial(self.alpha, 0, other, self.center)
        self._check_frame(other)
        lo = min(self.kmin, other.kmin)
        hi = max(self.kmax, other.kmax)
        coeffs = tuple(self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1))
        return FractalSeries(self.alpha, self.center, lo, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return FractalSeries(self.alpha, self.center, self.kmin, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FractalSeries):
            return self.scale(other)
        self._check_frame(other)
        a, b = self.coeffs, other.coeffs
        out = [0j] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return FractalSeries(self.alpha, self.center, self.kmin + other.kmin, tuple(out))

    __rmul__ = __mul__

    def scale(self, c) -> FractalSeries:
        c = _as_complex(c)
        return FractalSeries(self.alpha, self.center, self.kmin, tuple(c * x for x in self.coeffs))

    def shift(self, n: int) -> FractalSeries:
        """Multiply by ``w**n``."""
        if self.is_zero():
            return self
        return FractalSeries(self.alpha, self.center, self.kmin + n, self.coeffs)

    def truncate(self, kmax: int) -> FractalSeries:
        """Drop every term above ``w**kmax``."""
        if kmax < self.kmin:
            return FractalSeries.zero(self.alpha, self.center)
        return FractalSeries(self.alpha, self.center, self.kmin, self.coeffs[: kmax - self.kmin + 1])


def series_arith(op: str, f: FractalSeries, g) -> FractalSeries:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale``."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise DomainError(f"unknown series operation {op!r}")


def reciprocal(g: FractalSeries, kmax: int | None = None) -> FractalSeries:
    """Truncated ``1/g`` so that ``g * reciprocal(g)`` is ``1 + O(w**(kmax+1))``.

    ``kmax`` defaults to ``g.kmax``.  The leading coefficient of ``g`` must be
    non-zero, which the normalization guarantees unless ``g`` is zero.
    """
    if g.is_zero():
        raise DomainError("reciprocal of the zero series")
    if kmax is None:
        kmax = g.kmax
    lead = -g.kmin
    n = kmax - lead + 1
    if n <= 0:
        return FractalSeries.zero(g.alpha, g.center)
    h = g.coeffs
    inv0 = 1.0 / h[0]
    out = [inv0]
    for m in range(1, n):
        acc = 0j
        for j in range(1, min(m, len(h) - 1) + 1):
            acc += h[j] * out[m - j]
        out.append(-acc * inv0)
    return FractalSeries(g.alpha, g.center, lead, tuple(out))


def series_divide(f: FractalSeries, g: FractalSeries, kmax: int | None = None) -> FractalSeries:
    """``f / g`` as ``f * reciprocal(g)`` truncated at ``w**kmax``.

    Defaults to ``kmax = f.kmax``.
    """
    if kmax is None:
        kmax = f.kmax
    r = reciprocal(g, kmax - f.kmin)
    return (f * r).truncate(kmax)


# -- calculus ----------------------------------------------------------------


def series_derivative(f: FractalSeries, conv: DerivativeConvention = CANONICAL) -> FractalSeries:
    """Term-wise local fractional derivative under ``conv``."""
    out = []
    for k, c in f.items():
        if k == 0:
            continue
        fac = monomial_factor(k, f.alpha, conv)
        if fac != 0:
            out.append((k - 1, c * fac))
    return FractalSeries.from_terms(f.alpha, dict(out), f.center)


def series_derivative_n(f: FractalSeries, n: int, conv: DerivativeConvention = CANONICAL) -> FractalSeries:
    """Apply :func:`series_derivative` ``n`` times."""
    for _ in range(n):
        f = series_derivative(f, conv)
    return f


def series_primitive(f: FractalSeries, conv: DerivativeConvention = CANONICAL) -> FractalSeries:
    """Primitive with zero constant of integration.

    Raises :class:`NoPrimitiveError` when ``a_{-1} != 0`` or when some
    monomial is annihilated by the derivative rule (so cannot be reached).
    """
    if f.coeff(-1) != 0:
        raise NoPrimitiveError("no primitive: the coefficient of w**-1 is non-zero")
    out = {}
    for k, c in f.items():
        fac = monomial_factor(k + 1, f.alpha, conv)
        if fac == 0:
            raise NoPrimitiveError(
                f"no primitive: w**{k + 1} is annihilated by the {conv.value} rule at alpha={f.alpha!r}"
            )
        out[k + 1] = c / fac
    return FractalSeries.from_terms(f.alpha, out, f.center)


def chain_rule_affine(f: FractalSeries, a: float, conv: DerivativeConvention = CANONICAL) -> FractalSeries:
    """Derivative of ``f(a*z + b)`` in the inner variable, for ``a > 0``."""
    if not a > 0:
        raise DomainError(f"affine chain rule requires a > 0, got {a!r}")
    return series_derivative(f, conv).scale(a**f.alpha)


def _eval_at(f: FractalSeries, w: complex) -> complex:
    acc = 0j
    for c in reversed(f.coeffs):
        acc = acc * w + c
    if f.kmin:
        acc *= w**f.kmin
    return acc


def series_eval(f: FractalSeries, p: FractalPolar) -> FractalComplex:
    """Evaluate at the point ``p`` (polar about the series center)."""
    if p.r == 0:
        if f.kmin < 0:
            raise PoleEvaluationError("pole evaluation: the series has negative powers at its center")
        return FractalComplex.from_complex(f.coeff(0))
    w = complex(frac_polar(p, f.alpha))
    return FractalComplex.from_complex(_eval_at(f, w))


def tail_bound(M: float, R: float, q: float, N: int, alpha: float) -> float:
    """Majorant ``M R**a q**(N a) / (Gamma(1+a) (1 - q**a))`` of the truncation remainder."""
    alpha = check_alpha(alpha)
    if not 0 <= q < 1:
        raise DomainError(f"tail bound requires 0 <= q < 1, got {q!r}")
    if M < 0 or not R > 0:
        raise DomainError("tail bound requires M >= 0 and R > 0")
    if q == 0:
        return 0.0
    qa = q**alpha
    return M * R**alpha * qa**N / (gamma(1.0 + alpha) * (1.0 - qa))


@dataclass(frozen=True)
class Regular:
    """No principal part."""


@dataclass(frozen=True)
class Pole:
    order: int


def classify_singularity(f: FractalSeries) -> Regular | Pole:
    if f.kmin >= 0:
        return Regular()
    return Pole(-f.kmin)


def maclaurin_ml(alpha: float, n: int, center=(0.0, 0.0)) -> FractalSeries:
    """Truncated Mittag-Leffler series ``sum_{k<=n} w**k / Gamma(1+k alpha)``."""
    return FractalSeries(alpha, center, 0, tuple(complex(c) for c in inverse_gamma_table(alpha, n + 1)))

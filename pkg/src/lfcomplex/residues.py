"""Generalized residues, by direct Laurent extraction and by the derivative formula."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .algebra import FractalComplex, gamma
from .contour import MultiPoleFunction, _same_point
from .errors import DomainError
from .series import (
    CANONICAL,
    DerivativeConvention,
    FractalSeries,
    Pole,
    classify_singularity,
    series_derivative_n,
)


@dataclass(frozen=True)
class ResidueReport:
    pole: tuple[float, float]
    order: int
    residue: FractalComplex
    method: Literal["direct", "derivative"]


def _local_part(f, pole) -> FractalSeries:
    if isinstance(f, MultiPoleFunction):
        return f.principal(pole)
    if not _same_point(f.center, pole):
        raise DomainError(f"unknown pole location {tuple(pole)!r}: series is centered at {f.center!r}")
    return f


def residue(f, pole) -> FractalComplex:
    """Coefficient of ``(z - pole)**-alpha`` in the local expansion."""
    return FractalComplex.from_complex(_local_part(f, pole).coeff(-1))


def residue_via_derivative(
    f: FractalSeries,
    pole,
    n: int,
    conv: DerivativeConvention = CANONICAL,
) -> FractalComplex:
    """Residue from ``phi = w**n f``: ``D^{n-1} phi(z0) / Gamma(1 + (n-1) alpha)``.

    ``n`` must be at least the pole order.  The formula is only exact under
    the CANONICAL rule; other conventions are accepted so the discrepancy can
    be measured.
    """
    f = _local_part(f, pole)
    if n < 1:
        raise DomainError("the derivative formula needs n >= 1")
    kind = classify_singularity(f)
    if isinstance(kind, Pole) and kind.order > n:
        raise DomainError(f"pole of order {kind.order} exceeds n = {n}")
    phi = f.shift(n)
    d = series_derivative_n(phi, n - 1, conv)
    return FractalComplex.from_complex(d.coeff(0) / gamma(1.0 + (n - 1) * f.alpha))


def residue_report(f, pole, method: str = "direct") -> ResidueReport:
    part = _local_part(f, pole)
    kind = classify_singularity(part)
    order = kind.order if isinstance(kind, Pole) else 0
    if method == "direct":
        value = residue(part, part.center)
    elif method == "derivative":
        value = residue_via_derivative(part, part.center, max(order, 1))
    else:
        raise DomainError(f"unknown residue method {method!r}")
    return ResidueReport(part.center, order, value, method)


def all_residues(f, method: str = "direct") -> list[ResidueReport]:
    """Residue reports for every pole of ``f`` (the center, for a series)."""
    if isinstance(f, MultiPoleFunction):
        return [residue_report(f, loc, method) for loc, _ in f.poles]
    return [residue_report(f, f.center, method)]

"""JSON series documents.

A document looks like::

    {"alpha": 0.5, "center": [0.0, 0.0],
     "terms": [{"k": -1, "re": 1.0, "im": 0.0}],
     "poles": [{"location": [1.0, 0.0], "terms": [{"k": -2, "re": 3.0, "im": 0.0}]}]}

Without ``poles`` it describes a single :class:`FractalSeries`.  With ``poles``
it describes a :class:`MultiPoleFunction` whose entire part is given by the
top-level ``terms`` about ``center``.
"""

from __future__ import annotations

import json
import numbers
from typing import Any

from .algebra import check_alpha
from .contour import MultiPoleFunction
from .errors import DocumentError, DomainError
from .series import FractalSeries


def _real(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise DocumentError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _point(value: Any, where: str) -> tuple[float, float]:
    if not isinstance(value, list) or len(value) != 2:
        raise DocumentError(f"{where}: expected a pair [x, y], got {value!r}")
    return (_real(value[0], f"{where}[0]"), _real(value[1], f"{where}[1]"))


def _terms(value: Any, where: str) -> dict[int, complex]:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list of terms")
    out: dict[int, complex] = {}
    for i, term in enumerate(value):
        here = f"{where}[{i}]"
        if not isinstance(term, dict):
            raise DocumentError(f"{here}: expected an object with k, re, im")
        unknown = set(term) - {"k", "re", "im"}
        if unknown:
            raise DocumentError(f"{here}: unknown field {sorted(unknown)[0]!r}")
        if "k" not in term or "re" not in term:
            raise DocumentError(f"{here}: missing field {'k' if 'k' not in term else 're'!r}")
        k = term["k"]
        if isinstance(k, bool) or not isinstance(k, int):
            raise DocumentError(f"{here}.k: expected an integer, got {k!r}")
        if k in out:
            raise DocumentError(f"{here}.k: duplicate key {k}")
        out[k] = complex(_real(term["re"], f"{here}.re"), _real(term.get("im", 0.0), f"{here}.im"))
    return out


def parse_series(text: str, alpha: float | None = None) -> FractalSeries | MultiPoleFunction:
    """Parse a document; ``alpha`` overrides the document's order when given."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("line 1: top level must be a JSON object")
    unknown = set(doc) - {"alpha", "center", "terms", "poles"}
    if unknown:
        raise DocumentError(f"unknown field {sorted(unknown)[0]!r}")
    for key in ("alpha", "center", "terms"):
        if key not in doc:
            raise DocumentError(f"{key}: missing required field")
    a = _real(doc["alpha"], "alpha")
    if alpha is not None:
        a = alpha
    try:
        a = check_alpha(a)
    except DomainError as exc:
        raise DocumentError(f"alpha: {exc}") from None
    center = _point(doc["center"], "center")
    terms = _terms(doc["terms"], "terms")
    if "poles" not in doc:
        return FractalSeries.from_terms(a, terms, center)

    if not isinstance(doc["poles"], list):
        raise DocumentError("poles: expected a list")
    poles = []
    for i, entry in enumerate(doc["poles"]):
        here = f"poles[{i}]"
        if not isinstance(entry, dict) or "location" not in entry or "terms" not in entry:
            raise DocumentError(f"{here}: expected an object with location and terms")
        loc = _point(entry["location"], f"{here}.location")
        pterms = _terms(entry["terms"], f"{here}.terms")
        bad = [k for k in pterms if k >= 0]
        if bad:
            raise DocumentError(f"{here}.terms: principal parts take only negative k, got {bad[0]}")
        poles.append((loc, FractalSeries.from_terms(a, pterms, loc)))
    bad = [k for k in terms if k < 0]
    if bad:
        raise DocumentError(f"terms: the entire part of a multi-pole document takes only k >= 0, got {bad[0]}")
    try:
        return MultiPoleFunction(a, tuple(poles), FractalSeries.from_terms(a, terms, center))
    except DocumentError:
        raise
    except DomainError as exc:
        raise DocumentError(f"poles: {exc}") from None


def _term_list(f: FractalSeries) -> list[dict]:
    return [{"k": k, "re": c.real, "im": c.imag} for k, c in f.items()]


def series_to_dict(obj: FractalSeries | MultiPoleFunction) -> dict:
    if isinstance(obj, FractalSeries):
        return {"alpha": obj.alpha, "center": list(obj.center), "terms": _term_list(obj)}
    return {
        "alpha": obj.alpha,
        "center": list(obj.entire.center),
        "terms": _term_list(obj.entire),
        "poles": [{"location": list(loc), "terms": _term_list(part)} for loc, part in obj.poles],
    }


def serialize_series(obj: FractalSeries | MultiPoleFunction) -> str:
    """Canonical text: two-space indented JSON, non-zero terms sorted by k."""
    return json.dumps(series_to_dict(obj), indent=2) + "\n"

import json
import random

import pytest
from hypothesis import given, strategies as st

from lfcomplex.contour import MultiPoleFunction
from lfcomplex.documents import parse_series, serialize_series
from lfcomplex.errors import DocumentError
from lfcomplex.series import FractalSeries

from conftest import DATA


def doc(**kw):
    base = {"alpha": 0.5, "center": [0, 0], "terms": [{"k": 0, "re": 1, "im": 0}]}
    base.update(kw)
    return json.dumps(base)


def test_parse_simple_pole():
    f = parse_series('{"alpha":1.0,"center":[0,0],"terms":[{"k":-1,"re":1,"im":0}]}')
    assert f == FractalSeries.monomial(1.0, -1)


def test_alpha_override():
    f = parse_series(doc(), alpha=0.3)
    assert f.alpha == 0.3


def test_parse_multipole():
    m = parse_series((DATA / "docs" / "multipole.json").read_text())
    assert isinstance(m, MultiPoleFunction)
    assert [loc for loc, _ in m.poles] == [(0.2, 0.1), (2.0, 0.0)]
    assert m.principal((0.2, 0.1)).terms() == {-2: 1, -1: 3 - 2j}


@pytest.mark.parametrize(
    "text, match",
    [
        (doc(alpha=1.5), "alpha"),
        (doc(alpha=True), "alpha"),
        (doc(terms=[{"k": 0, "re": 1}, {"k": 0, "re": 2}]), r"terms\[1\]\.k: duplicate"),
        (doc(terms=[{"k": 0.5, "re": 1}]), r"terms\[0\]\.k"),
        (doc(terms=[{"k": 0, "re": "1"}]), r"terms\[0\]\.re"),
        (doc(terms=[{"k": 0, "re": 1, "phase": 2}]), "unknown field"),
        (doc(center=[0]), "center"),
        (doc(extra=1), "unknown field"),
        ('{"alpha": 0.5, "terms": []}', "center: missing"),
        ('{"alpha": 0.5,\n "center": [0, 0],\n "terms": [,]}', "line 3, column"),
        ("[1, 2]", "top level"),
        (doc(poles=[{"location": [1, 0], "terms": [{"k": 0, "re": 1}]}]), "negative k"),
        (doc(terms=[{"k": -1, "re": 1}], poles=[]), "entire part"),
        (doc(poles=[{"location": [1, 0]}]), r"poles\[0\]"),
    ],
)
def test_parse_errors(text, match):
    with pytest.raises(DocumentError, match=match):
        parse_series(text)


def test_serialize_canonical_form():
    f = FractalSeries.from_terms(0.5, {2: 1 - 1j, -1: 0.25})
    text = serialize_series(f)
    assert json.loads(text)["terms"] == [
        {"k": -1, "re": 0.25, "im": 0.0},
        {"k": 2, "re": 1.0, "im": -1.0},
    ]
    assert serialize_series(parse_series(text)) == text


def test_multipole_roundtrip():
    text = serialize_series(parse_series((DATA / "docs" / "multipole.json").read_text()))
    assert serialize_series(parse_series(text)) == text


finite = st.floats(-1e6, 1e6, allow_nan=False).filter(lambda x: x != 0)


@given(st.dictionaries(st.integers(-6, 10), st.tuples(finite, finite), min_size=1, max_size=8),
       st.sampled_from([0.3, 0.5, 1.0]))
def test_roundtrip_bit_exact(terms, alpha):
    f = FractalSeries.from_terms(alpha, {k: complex(*v) for k, v in terms.items()}, (0.125, -3.0))
    text = serialize_series(f)
    g = parse_series(text)
    assert g == f
    assert serialize_series(g) == text

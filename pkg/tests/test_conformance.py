import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from lfcomplex.algebra import gamma
from lfcomplex.conformance import (
    THEOREMS,
    PartialField,
    conformance_matrix,
    cr_residual,
    expand_uv,
    laplacian_alpha,
    partial_alpha,
    product_rule_residual,
    random_laurent,
    random_multipole,
    random_taylor,
    run_check,
)
from lfcomplex.errors import DomainError
from lfcomplex.series import CANONICAL, SCALED_CLASSICAL, FractalSeries

CONVS = (CANONICAL, SCALED_CLASSICAL)


def S(alpha, terms):
    return FractalSeries.from_terms(alpha, terms)


def test_expand_uv_examples():
    u, v = expand_uv(S(0.5, {1: 1}))
    assert u.coeffs == {(1, 0): 1.0} and v.coeffs == {(0, 1): 1.0}
    u, v = expand_uv(S(0.5, {2: 1}))
    assert u.coeffs == {(2, 0): 1.0, (0, 2): -1.0} and v.coeffs == {(1, 1): 2.0}
    with pytest.raises(DomainError):
        expand_uv(S(0.5, {-1: 1}))


def test_expand_uv_classical_cube():
    u, v = expand_uv(S(1.0, {3: 1}))
    for x, y in [(0.3, -1.2), (2.0, 0.5)]:
        z = complex(x, y) ** 3
        assert u.evaluate(x, y) == pytest.approx(z.real)
        assert v.evaluate(x, y) == pytest.approx(z.imag)


def test_partial_alpha_examples():
    for a in (0.3, 0.5, 1.0):
        for conv in CONVS:
            d = partial_alpha(PartialField(a, {(1, 0): 1.0}), "x", conv)
            assert d.coeffs == {(0, 0): pytest.approx(gamma(1 + a))}
            assert partial_alpha(PartialField(a, {(0, 2): 1.0}), "x", conv).coeffs == {}
    d = partial_alpha(PartialField(0.5, {(2, 0): 1.0}), "x", CANONICAL)
    assert d.coeffs == {(1, 0): pytest.approx(2 / math.sqrt(math.pi))}
    with pytest.raises(DomainError):
        partial_alpha(PartialField(0.5, {}), "z")


def test_cr_residual_examples(oracles):
    for a in (0.3, 0.5, 0.7, 1.0):
        for conv in CONVS:
            r = cr_residual(S(a, {1: 1}), conv)
            assert r.res1.max_abs() == 0 and r.res2.max_abs() == 0
    r = cr_residual(S(0.5, {2: 1}), CANONICAL)
    assert abs(r.res1.coeff(1, 0) - oracles["cr_residual_w2_half"]) <= 1e-12
    assert r.maxabs > 0.1


def test_cr_classical_polynomials():
    rng = random.Random(2)
    for _ in range(20):
        f = random_taylor(rng, 1.0, 8)
        for conv in CONVS:
            assert cr_residual(f, conv).res1.max_abs() <= 1e-12


@given(st.sampled_from([0.3, 0.5, 0.7, 0.9]), st.integers(0, 10**6))
@settings(max_examples=60)
def test_scaled_cr_holds_for_polynomials(alpha, seed):
    f = random_taylor(random.Random(seed), alpha, 8)
    r = cr_residual(f, SCALED_CLASSICAL)
    # binomial products round, so the residual is zero to within a few ulps
    assert max(r.res1.max_abs(), r.res2.max_abs()) <= 1e-12


def test_laplacian_examples():
    for a in (0.3, 0.5, 1.0):
        assert laplacian_alpha(PartialField(a, {(1, 0): 1.0})).max_abs() == 0
    assert laplacian_alpha(PartialField(1.0, {(2, 0): 1.0, (0, 2): -1.0})).max_abs() == 0
    for a in (0.3, 0.5, 0.7, 0.9):
        u, v = expand_uv(S(a, {2: 1}))
        assert laplacian_alpha(u, CANONICAL).max_abs() <= 1e-14
        assert laplacian_alpha(v, CANONICAL).max_abs() <= 1e-14


def test_laplacian_canonical_cubic_is_not_harmonic():
    u, _ = expand_uv(S(0.5, {3: 1}))
    lap = laplacian_alpha(u, CANONICAL)
    expected = gamma(2.5) / gamma(1.5) - 3 * gamma(2.0)
    assert lap.coeff(1, 0) == pytest.approx(expected, rel=1e-13)


def test_product_rule_residual():
    f, g = S(0.5, {0: 1, 1: 2}), S(0.5, {1: 1, 2: -1})
    assert max(abs(c) for c in product_rule_residual(f, g, CANONICAL).coeffs) > 0.1
    assert product_rule_residual(S(1.0, {1: 1, 3: 2}), S(1.0, {2: 1}), CANONICAL).is_zero()


def test_random_generators():
    rng = random.Random(0)
    for _ in range(50):
        f = random_laurent(rng, 0.5, 8)
        assert f.kmin >= -5 and f.kmax <= 8
        m = random_multipole(rng, 0.5, 4)
        assert 1 <= len(m.poles) <= 4
        for loc, _ in m.poles:
            assert abs(math.hypot(*loc) - 1.0) >= 0.05


def test_run_check_is_deterministic():
    for theorem in THEOREMS:
        assert run_check(theorem, 0.5, CANONICAL, 3) == run_check(theorem, 0.5, CANONICAL, 3)
    with pytest.raises(DomainError):
        run_check("T99", 0.5, CANONICAL, 0)


def test_matrix_classical_row_passes():
    rep = conformance_matrix([1.0], seeds=20)
    assert rep.failures() == []
    assert len(rep.entries) == 2 * len(THEOREMS)


def test_matrix_convention_split():
    rep = conformance_matrix([0.5], seeds=10)
    assert rep.get("T1-CR", 0.5, SCALED_CLASSICAL).passed
    assert rep.get("rule-2.8-product", 0.5, SCALED_CLASSICAL).passed
    assert not rep.get("T1-CR", 0.5, CANONICAL).passed
    assert rep.get("C12/13-residue", 0.5, CANONICAL).passed
    assert not rep.get("C12/13-residue", 0.5, SCALED_CLASSICAL).passed
    rows = rep.rows()
    assert set(rows[0]) == {"alpha", "convention", "theorem", "status", "max_residual"}


def test_matrix_argument_checks():
    with pytest.raises(DomainError):
        conformance_matrix([0.5], degree=0)
    with pytest.raises(DomainError):
        conformance_matrix([0.5], seeds=0)
    with pytest.raises(DomainError):
        conformance_matrix([1.5])

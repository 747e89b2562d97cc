"""Tests for the exact coefficient ring."""

import math
from fractions import Fraction

import numpy as np
import pytest

from pdmchannel.algebra.coeffring import (
    COS,
    COSH,
    CSCH,
    ONE,
    SIN,
    SINH,
    CoeffPoly,
    eval_scalar,
    k,
    normalize,
    q,
    scalar,
)
from pdmchannel.errors import InvalidParam, PoleAtOrigin


def test_hyperbolic_and_trig_pythagoras():
    assert COSH * COSH - SINH * SINH == ONE
    assert SIN * SIN + COS * COS == ONE


def test_csch_is_inverse_of_sinh():
    assert CSCH * SINH == ONE
    assert (CSCH * CSCH * SINH).terms == CSCH.terms


def test_generator_derivatives():
    assert SINH.derive_x() == COSH * q
    assert COSH.derive_x() == SINH * q
    assert SIN.derive_y() == COS * q
    assert COS.derive_y() == SIN * (-q)
    assert CSCH.derive_x() == -(CSCH * CSCH * COSH * q)
    assert SIN.derive_x().is_zero


def test_leibniz_rule_on_products():
    f = SINH * SIN + COSH * k
    g = CSCH * COS + ONE * q
    assert (f * g).derive_x() == f.derive_x() * g + f * g.derive_x()
    assert (f * g).derive_y() == f.derive_y() * g + f * g.derive_y()


def test_normal_form_is_canonical():
    raw = normalize([(0, 2, 0, 0, 1), (2, 0, 0, 0, -1)])
    assert raw == ONE
    assert len(COSH * COSH) == 2
    with pytest.raises(InvalidParam):
        CoeffPoly({(0, 2, 0, 0): ONE.terms[(0, 0, 0, 0)]})


def test_equal_elements_hash_equal():
    a = COSH * COSH
    b = ONE + SINH * SINH
    assert a == b
    assert hash(a) == hash(b)


def test_rational_scalars_and_float_rejection():
    assert CoeffPoly.constant(Fraction(1, 2)) * 2 == ONE
    with pytest.raises(InvalidParam):
        CoeffPoly.constant(0.5)


def test_negative_power_rejected():
    with pytest.raises(InvalidParam):
        SINH ** -1


def test_shift_k():
    assert CoeffPoly.constant(k * k).shift_k(1) == CoeffPoly.constant(k * k + 2 * k + 1)
    assert (SINH * q).shift_k(3) == SINH * q


def test_eval_matches_math():
    value = (SINH * COS * (q * k)).eval(2.0, 1.5, 0.3, 0.2)
    assert value == pytest.approx(3.0 * math.sinh(0.6) * math.cos(0.4), rel=1e-14)
    assert (COSH * COSH - SINH * SINH).eval(1.0, 1.0, 2.5, 0.1) == pytest.approx(1.0)


def test_eval_csch_at_origin_raises():
    with pytest.raises(PoleAtOrigin):
        CSCH.eval(1.0, 1.0, 0.0, 0.0)
    # csch-free elements are fine at the wall
    assert COSH.eval(1.0, 1.0, 0.0, 0.0) == 1.0


def test_as_expr_roundtrips_through_sympy():
    import sympy

    from pdmchannel.algebra.coeffring import X, Y

    qs, ks = sympy.symbols("q k")
    expr = (SINH * SIN * k).as_expr()
    expected = ks * sympy.sinh(qs * X) * sympy.sin(qs * Y)
    assert sympy.simplify(expr - expected) == 0


def _random_raw(rng, terms=3):
    """Raw monomials (a, b, c, d, scale) with small powers and scales in q, k."""
    raw = []
    for _ in range(terms):
        a = int(rng.integers(-1, 3))
        b, c, d = (int(v) for v in rng.integers(0, 3, size=3))
        i, j = (int(v) for v in rng.integers(0, 2, size=2))
        scale = int(rng.integers(-3, 4)) * q**i * k**j
        raw.append((a, b, c, d, scale))
    return raw


def _eval_raw(raw, qv, kv, x, y):
    """Direct binary64 value of a raw monomial list and the sum of its term magnitudes."""
    value = np.zeros_like(x)
    magnitude = np.zeros_like(x)
    for a, b, c, d, scale in raw:
        s = eval_scalar(scalar(scale), qv, kv)
        term = s * np.sinh(qv * x) ** a * np.cosh(qv * x) ** b
        term = term * np.sin(qv * y) ** c * np.cos(qv * y) ** d
        value = value + term
        magnitude = magnitude + np.abs(term)
    return value, magnitude


@pytest.mark.parametrize("seed", range(5))
def test_ring_axioms_on_random_elements(seed):
    rng = np.random.default_rng(seed)
    f, g, h = (normalize(_random_raw(rng)) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert f + g == g + f
    assert f * (g + h) == f * g + f * h
    assert f * ONE == f
    assert (f - f).is_zero


@pytest.mark.parametrize("seed", range(5))
def test_mixed_derivatives_commute(seed):
    rng = np.random.default_rng(100 + seed)
    f = normalize(_random_raw(rng, terms=4))
    assert f.derive_x().derive_y() == f.derive_y().derive_x()
    assert f.derive(2, 1) == f.derive_y().derive_x().derive_x()


@pytest.mark.parametrize("seed", range(5))
def test_normalize_is_idempotent(seed):
    rng = np.random.default_rng(200 + seed)
    raw = _random_raw(rng, terms=4)
    once = normalize(raw)
    twice = normalize([(*key, scale) for key, scale in once.terms.items()])
    assert twice == once
    assert once == sum((CoeffPoly.monomial(*m[:4], scale=m[4]) for m in raw), CoeffPoly.zero())


@pytest.mark.parametrize("seed", range(5))
def test_structurally_equal_elements_evaluate_equal(seed):
    rng = np.random.default_rng(300 + seed)
    raw = _random_raw(rng, terms=4)
    # append s * sinh^a sin^c (cosh^2 - 1 - sinh^2) and s * sin^c (sin^2 + cos^2 - 1)
    a, _, c, _, s = raw[0]
    padded = [
        *raw,
        (a, 2, c, 0, s),
        (a, 0, c, 0, -s),
        (a + 2, 0, c, 0, -s),
        (0, 0, c + 2, 0, s),
        (0, 0, c, 2, s),
        (0, 0, c, 0, -s),
    ]
    assert normalize(padded) == normalize(raw)

    qv, kv = 1.3, 0.7
    x = rng.uniform(0.1, 2.0, size=50) / qv
    y = rng.uniform(-1.4, 1.4, size=50) / qv
    left, left_mag = _eval_raw(raw, qv, kv, x, y)
    right, right_mag = _eval_raw(padded, qv, kv, x, y)
    scale = np.maximum(left_mag, right_mag)
    assert np.all(np.abs(left - right) <= 1e-12 * scale)
    canonical = normalize(raw).eval(qv, kv, x, y)
    assert np.all(np.abs(canonical - left) <= 1e-12 * scale)

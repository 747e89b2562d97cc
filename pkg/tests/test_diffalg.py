"""Tests for normal-ordered differential operators and operator matching."""

import numpy as np
import pytest
import sympy

from pdmchannel.algebra.coeffring import COS, COSH, ONE, SCALARS, SIN, SINH, X, Y, normalize, q
from pdmchannel.algebra.diffalg import DiffOp, anticommutator, commutator, compose, triple_sym
from pdmchannel.algebra.matching import match_operator
from pdmchannel.errors import DerivativeOrderUnsupported, NoMatch
from pdmchannel.wavefn.fields import SmoothField, interior_points


def test_leibniz_normal_ordering():
    dx = DiffOp.partial(1, 0)
    result = compose(dx, DiffOp.multiplication(SINH))
    assert result == DiffOp({(1, 0): SINH, (0, 0): COSH * q})


def test_commutator_with_multiplication():
    dy = DiffOp.partial(0, 1)
    assert commutator(dy, DiffOp.multiplication(SIN)) == DiffOp.multiplication(COS * q)
    assert commutator(dy, dy).is_zero


def test_anticommutator_of_commuting_operators():
    dx, dy = DiffOp.partial(1, 0), DiffOp.partial(0, 1)
    assert anticommutator(dx, dy) == DiffOp.partial(1, 1).scale(2)


def test_triple_sym_of_one_operator():
    a = DiffOp({(1, 0): COSH, (0, 0): SIN})
    assert triple_sym(a, a, a) == (a**3).scale(6)


def test_composition_is_associative():
    a = DiffOp({(1, 0): COSH, (0, 0): SIN})
    b = DiffOp({(0, 1): SINH})
    c = DiffOp({(2, 0): -ONE, (0, 0): COS})
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_order_and_term_count():
    op = DiffOp({(2, 0): COSH * COSH, (0, 1): SIN})
    assert op.order == 2
    assert op.term_count() == 3
    assert DiffOp().is_zero


def test_golden_serialization():
    assert str(DiffOp.partial(1, 0)) == "(1,0): (1) * sinh^0 cosh^0 sin^0 cos^0"


def test_apply_to_field():
    field = SmoothField(sympy.sin(X) * Y**2, label="sample")
    x = np.array([0.2, 0.7])
    y = np.array([0.1, -0.4])
    value = DiffOp.partial(1, 1).apply(field, x, y, q=1.0, k=1.0)
    assert value == pytest.approx(2 * np.cos(x) * y, rel=1e-14)


def test_apply_expr_symbolic():
    op = DiffOp({(0, 2): -ONE})
    out = op.apply_expr(sympy.sin(3 * Y))
    assert sympy.simplify(out - 9 * sympy.sin(3 * Y)) == 0


def test_apply_beyond_field_order_raises():
    field = SmoothField(sympy.sin(X), label="low", max_order=1)
    with pytest.raises(DerivativeOrderUnsupported):
        DiffOp.partial(2, 0).apply(field, 0.5, 0.0, q=1.0, k=1.0)


def test_match_operator_recovers_coefficients(catalog):
    target = catalog.eta.scale(q) - catalog.dy.scale(2)
    coeffs = match_operator(target, {"eta": catalog.eta, "dy": catalog.dy})
    assert coeffs["eta"] == q
    assert coeffs["dy"] == SCALARS(-2)


def test_match_operator_outside_span(catalog):
    with pytest.raises(NoMatch):
        match_operator(catalog.H, {"dy": catalog.dy})


ORDERS = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def _random_coeff(rng):
    raw = []
    for _ in range(2):
        a, b, c, d = (int(v) for v in rng.integers(0, 2, size=4))
        raw.append((a, b, c, d, int(rng.integers(1, 4)) * q ** int(rng.integers(0, 2))))
    return normalize(raw)


def _random_op(rng, terms=2):
    """Operator of order <= 2 with ``terms`` random coefficients."""
    picks = rng.choice(len(ORDERS), size=terms, replace=False)
    return DiffOp({ORDERS[int(p)]: _random_coeff(rng) for p in picks})


def _random_field(rng):
    a = sympy.Rational(int(rng.integers(1, 4)), 4)
    b = int(rng.integers(1, 3))
    c = sympy.Rational(int(rng.integers(0, 5)), 5)
    expr = sympy.exp(-a * X) * sympy.cos(b * Y + c) + X**2 * sympy.sin(Y)
    return SmoothField(expr, label="trial")


@pytest.mark.parametrize("seed", range(4))
def test_compose_matches_nested_application(seed):
    rng = np.random.default_rng(seed)
    a, b = _random_op(rng), _random_op(rng)
    field = _random_field(rng)
    qv, kv = 1.2, 0.8
    inner = SmoothField(b.apply_expr(field.expr, q=qv, k=kv), label="inner")
    x, y = interior_points(qv, 20, seed=seed)
    nested = np.asarray(a.apply(inner, x, y, q=qv, k=kv))
    composed = np.asarray(compose(a, b).apply(field, x, y, q=qv, k=kv))
    scale = max(1.0, float(np.max(np.abs(composed))))
    assert np.max(np.abs(nested - composed)) <= 1e-9 * scale


@pytest.mark.parametrize("seed", range(4))
def test_composition_is_associative_on_random_operators(seed):
    rng = np.random.default_rng(50 + seed)
    a, b, c = (_random_op(rng) for _ in range(3))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@pytest.mark.parametrize("seed", range(4))
def test_jacobi_identity_on_random_operators(seed):
    rng = np.random.default_rng(80 + seed)
    a, b, c = (_random_op(rng) for _ in range(3))
    total = (
        commutator(a, commutator(b, c))
        + commutator(b, commutator(c, a))
        + commutator(c, commutator(a, b))
    )
    assert total.is_zero

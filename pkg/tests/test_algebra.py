from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from wreathstats.algebra import (
    ONE,
    Q,
    T,
    BiPoly,
    TPoly,
    USeries,
    q_int,
    q_poch_t,
    series_equal,
    series_exp,
    series_mul,
)


def P(*terms):
    """P((c, i, j), ...) -> sum c t^i q^j."""
    out = BiPoly()
    for c, i, j in terms:
        out = out + BiPoly.monomial(c, i, j)
    return out


bipolys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-5, 5), max_size=5
).map(BiPoly)


def test_canonical_zero_pruning():
    p = BiPoly({(1, 1): 0, (0, 0): 3})
    assert p.terms == {(0, 0): 3}
    assert (T - T).is_zero() and (T - T).terms == {}
    assert BiPoly() == 0 and ONE == 1
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): 1})


def test_q_int():
    assert q_int(3) == 1 + Q + Q**2
    assert q_int(1) == 1
    assert q_int(0).is_zero()
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_poch_t():
    assert q_poch_t(0) == 1
    assert q_poch_t(1) == 1 - T
    assert q_poch_t(2) == P((1, 0, 0), (-1, 1, 0), (-1, 1, 1), (1, 2, 1))
    for m in range(6):
        assert q_poch_t(m + 1) == q_poch_t(m) * (1 - T * Q**m)
    with pytest.raises(ValueError):
        q_poch_t(-2)


def test_substitutions():
    assert (1 + 2 * T * Q).subst_t_tq() == 1 + 2 * T * Q**2
    assert (T**2 * Q**3).derivative_t() == 2 * T * Q**3
    assert P((1, 0, 0), (2, 1, 1), (2, 1, 2), (1, 2, 3)).eval_q1() == 1 + 4 * T + T**2
    for m in range(7):
        assert q_int(m).eval_q1() == m


def test_power_errors():
    with pytest.raises(ValueError):
        T ** -1
    assert T**0 == 1


@given(bipolys, bipolys, bipolys)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    assert x * 1 == x and x + 0 == x


@given(bipolys, bipolys, st.integers(-3, 3), st.integers(-3, 3))
def test_ops_agree_with_evaluation(x, y, t, q):
    assert (x * y).evaluate(t, q) == x.evaluate(t, q) * y.evaluate(t, q)
    assert (x - y).evaluate(t, q) == x.evaluate(t, q) - y.evaluate(t, q)
    assert x.subst_t_tq().evaluate(t, q) == x.evaluate(t * q, q)
    assert x.eval_q1().evaluate(t, q) == x.evaluate(t, 1)
    assert (x**3).evaluate(t, q) == x.evaluate(t, q) ** 3


@given(bipolys, bipolys)
def test_subst_multiplicative(x, y):
    assert (x * y).subst_t_tq() == x.subst_t_tq() * y.subst_t_tq()


@given(bipolys)
def test_derivative_finite_difference(x):
    # exact for polynomials: the coefficient of h in x(t + h, q)
    for t, q in ((0, 1), (2, -1), (3, 2)):
        lin = sum(i * c * t ** (i - 1) * q**j for (i, j), c in x.terms.items() if i)
        assert x.derivative_t().evaluate(t, q) == lin


@given(bipolys)
def test_json_roundtrip(x):
    assert BiPoly.from_json(x.to_json()) == x
    obj = x.to_json_obj()
    assert [(e["t"], e["q"]) for e in obj] == sorted((e["t"], e["q"]) for e in obj)
    assert all(isinstance(e["c"], str) for e in obj)


def test_big_coefficients_survive_json():
    p = BiPoly.monomial(3**200, 1, 2)
    assert BiPoly.from_json(p.to_json()) == p


def test_text_and_latex():
    assert str(1 + T * Q) == "1 + t*q"
    assert str(1 + 4 * T + T**2) == "1 + 4t + t^2"
    assert str(1 - T - T * Q + T**2 * Q) == "1 - t - t*q + t^2*q"
    assert str(BiPoly()) == "0"
    assert str(-3 * Q**2) == "-3q^2"
    assert (3 * T * Q**2 + T**2 * Q**3).to_latex() == "3tq^{2} + t^{2}q^{3}"


def test_t_coefficients():
    p = 1 + (3 * Q + 3 * Q**2) * T + Q**3 * T**2
    assert p.t_coefficients() == [ONE, 3 * Q + 3 * Q**2, Q**3]
    assert BiPoly.from_t_coefficients(p.t_coefficients()) == p
    assert p.truncate_t(1) == 1 + (3 * Q + 3 * Q**2) * T
    with pytest.raises(ValueError):
        BiPoly.from_t_coefficients([T])


# -- series ------------------------------------------------------------------

def U(coeffs, order):
    return USeries([TPoly(c) if isinstance(c, list) else c for c in coeffs], order)


def naive_exp(s: USeries) -> USeries:
    acc = USeries.constant(1, s.order)
    power = USeries.constant(1, s.order)
    for k in range(1, s.order + 1):
        power = series_mul(power, s)
        acc = acc + power * TPoly([Fraction(1, factorial(k))])
    return acc


def test_exp_examples():
    assert series_exp(U([0, 1], 2)) == U([1, 1, Fraction(1, 2)], 2)
    assert series_exp(U([], 3)) == USeries.constant(1, 3)
    assert series_exp(U([0, [1, -1]], 1)) == U([1, [1, -1]], 1)
    with pytest.raises(ValueError):
        series_exp(U([1], 2))


def test_mul_examples():
    assert U([1, 1], 2) * U([1, -1], 2) == U([1, 0, -1], 2)
    p = U([[1, 2], [0, 3], 5], 3)
    assert p * USeries.constant(1, 3) == p
    assert series_exp(U([0, 1], 4)) * series_exp(U([0, -1], 4)) == USeries.constant(1, 4)


def test_truncation_and_equality_rules():
    assert series_mul(U([1, 1, 1], 2), U([1, 1], 1)).order == 1
    with pytest.raises(ValueError):
        series_equal(U([1], 1), U([1], 2))


tpolys = st.lists(st.fractions(max_denominator=4).filter(lambda f: abs(f) < 5), max_size=3).map(TPoly)


@given(st.lists(tpolys, min_size=1, max_size=4), st.lists(tpolys, min_size=1, max_size=4))
def test_exp_addition_law(c1, c2):
    order = 4
    s1, s2 = U([0] + c1, order), U([0] + c2, order)
    assert series_exp(s1 + s2) == series_exp(s1) * series_exp(s2)


@given(st.lists(tpolys, min_size=1, max_size=4))
def test_exp_matches_naive_sum(cs):
    s = U([0] + cs, 4)
    assert series_exp(s) == naive_exp(s)


def test_tpoly_bridge():
    p = 1 + 4 * T + T**2
    assert TPoly.from_bipoly(p).to_bipoly() == p
    with pytest.raises(ValueError):
        TPoly.from_bipoly(Q)
    with pytest.raises(ValueError):
        TPoly([Fraction(1, 2)]).to_bipoly()

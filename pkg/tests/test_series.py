"""Tests for the exact power-series kernel."""

import random
from fractions import Fraction

import pytest

from treeflowers.series import (
    DualSeries,
    NonContractive,
    NotInvertible,
    OrderMismatch,
    Series,
    compose,
    finite_product,
    solve_fixed_point,
)

# ---------------------------------------------------------------------------
# independent oracles, kept deliberately dumb
# ---------------------------------------------------------------------------


def brute_force_tree_count(n, degrees):
    """Count rooted plane trees with n edges whose out-degrees lie in `degrees`.

    `degrees` is a set of allowed child counts for internal nodes, or None
    for "any positive count".  Pure recursive enumeration of shapes.
    """

    def shapes(m):
        out = [()] if m >= 0 else []
        if m == 0:
            return [()]
        result = []
        ks = range(1, m + 1) if degrees is None else [k for k in degrees if k <= m]
        for k in ks:
            for split in compositions(m - k, k):
                parts = [shapes(s) for s in split]
                result.extend(_products(parts))
        return result

    def _products(parts):
        if not parts:
            return [()]
        rest = _products(parts[1:])
        return [(p,) + r for p in parts[0] for r in rest]

    return len(shapes(n))


def compositions(total, k):
    """All k-tuples of nonnegative ints summing to total."""
    if k == 0:
        return [()] if total == 0 else []
    return [(h,) + rest for h in range(total + 1) for rest in compositions(total - h, k - 1)]


def partition_count(n):
    """Number of integer partitions of n, by direct recursion."""

    def count(m, cap):
        if m == 0:
            return 1
        return sum(count(m - p, p) for p in range(1, min(m, cap) + 1))

    return count(n, n)


def random_series(rng, order, rational=False):
    def coef():
        if rational and rng.random() < 0.5:
            return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        return rng.randint(-9, 9)

    return Series([coef() for _ in range(order + 1)])


# ---------------------------------------------------------------------------
# add / mul / inverse
# ---------------------------------------------------------------------------


def test_add_cancellation():
    a = Series.from_coeffs([1, 1], 4)
    b = Series.from_coeffs([1, -1], 4)
    assert a + b == Series.constant(2, 4)


def test_add_identity():
    s = Series.from_coeffs([3, Fraction(1, 2), -7], 5)
    assert s + Series.zero(5) == s


def test_add_coefficientwise():
    a = Series.from_coeffs([1, 1, 1], 2)
    b = Series.from_coeffs([0, 0, 1], 2)
    assert (a + b).coeffs == [1, 1, 2]


def test_add_order_mismatch():
    with pytest.raises(OrderMismatch):
        Series.one(3) + Series.one(4)


def test_mul_geometric_inverse():
    one_minus_z = Series.from_coeffs([1, -1], 10)
    geo = Series([1] * 11)
    assert one_minus_z * geo == Series.one(10)


def test_mul_difference_of_squares():
    a = Series.from_coeffs([1, 1], 6)
    b = Series.from_coeffs([1, -1], 6)
    assert (a * b) == Series.from_coeffs([1, 0, -1], 6)


def test_mul_commutative_associative():
    rng = random.Random(20240817)
    for _ in range(25):
        a = random_series(rng, 12, rational=True)
        b = random_series(rng, 12, rational=True)
        c = random_series(rng, 12)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_inverse_geometric():
    s = Series.from_coeffs([1, -1], 8).inverse()
    assert s.coeffs == [1] * 9


def test_inverse_fibonacci_shift():
    a = Series.from_coeffs([1, -1, -1], 10)
    b = a.inverse()
    assert a * b == Series.one(10)
    assert b.coeffs[:6] == [1, 1, 2, 3, 5, 8]


def test_inverse_of_one():
    assert Series.one(5).inverse() == Series.one(5)


def test_inverse_zero_constant_term():
    with pytest.raises(NotInvertible):
        Series.from_coeffs([0, 1], 3).inverse()


def test_inverse_property_random():
    rng = random.Random(77)
    for _ in range(20):
        s = random_series(rng, 14, rational=True)
        if s.coeffs[0] == 0:
            s = s + 1
        assert s * s.inverse() == Series.one(14)


def test_sqrt_round_trip():
    rng = random.Random(99)
    for _ in range(10):
        s = random_series(rng, 12, rational=True)
        s.coeffs[0] = 1
        r = s.sqrt()
        assert r * r == s


# ---------------------------------------------------------------------------
# compose
# ---------------------------------------------------------------------------


def test_compose_with_z():
    outer = Series.from_coeffs([0, 1, 1, 1, 1, 1], 5)  # z/(1-z) truncated
    z = Series.x(5)
    assert outer.compose(z) == outer


def test_compose_with_zero():
    outer = Series.from_coeffs([7, 3, 1], 6)
    assert outer.compose(Series.zero(6)) == Series.constant(7, 6)


def test_compose_nonzero_inner_constant():
    with pytest.raises(ValueError):
        Series.one(4).compose(Series.one(4))


def test_compose_square_matches_two_descendant_fixed_point():
    # A = 1 + (zA)^2 solved by iteration must agree with composing w^2 into zA.
    order = 16
    z = Series.x(order)

    def update(a):
        w = z * a
        return 1 + w * w

    a = solve_fixed_point(update, order)
    w_sq = Series.monomial(2, order)
    assert w_sq.compose(z * a) == a - 1


# ---------------------------------------------------------------------------
# solve_fixed_point
# ---------------------------------------------------------------------------


def test_fixed_point_catalan_vs_brute_force():
    order = 8
    z = Series.x(order)

    def update(a):
        w = z * a
        return 1 + w * (1 - w).inverse()

    a = solve_fixed_point(update, order)
    expected = [brute_force_tree_count(n, None) for n in range(6)]
    assert expected == [1, 1, 2, 5, 14, 42]
    assert a.coeffs[:6] == expected


def test_fixed_point_path_trees():
    order = 10
    z = Series.x(order)
    a = solve_fixed_point(lambda s: 1 + z * s, order)
    assert a.coeffs == [1] * 11


def test_fixed_point_motzkin_vs_brute_force():
    order = 8
    z = Series.x(order)

    def update(a):
        w = z * a
        return 1 + w + w * w

    a = solve_fixed_point(update, order)
    expected = [brute_force_tree_count(n, {1, 2}) for n in range(6)]
    assert expected == [1, 1, 2, 4, 9, 21]
    assert a.coeffs[:6] == expected


def test_fixed_point_non_contractive():
    with pytest.raises(NonContractive):
        solve_fixed_point(lambda s: s + 1, 6)


# ---------------------------------------------------------------------------
# finite_product
# ---------------------------------------------------------------------------


def test_finite_product_partitions():
    order = 6
    factors = [
        (1 - Series.monomial(n, order)).inverse() for n in range(1, order + 1)
    ]
    prod = finite_product(factors)
    expected = [partition_count(n) for n in range(order + 1)]
    assert expected == [1, 1, 2, 3, 5, 7, 11]
    assert prod.coeffs == expected


def test_finite_product_single_factor():
    s = Series.from_coeffs([1, 4, 7], 4)
    assert finite_product([s]) == s


def test_finite_product_period_two():
    inv = (1 - Series.monomial(2, 4)).inverse()
    assert inv.coeffs == [1, 0, 1, 0, 1]


def test_finite_product_empty():
    with pytest.raises(ValueError):
        finite_product([])


# ---------------------------------------------------------------------------
# DualSeries
# ---------------------------------------------------------------------------


def test_dual_product_rule_random():
    rng = random.Random(4242)
    for _ in range(20):
        a = DualSeries(random_series(rng, 10, True), random_series(rng, 10, True))
        b = DualSeries(random_series(rng, 10), random_series(rng, 10))
        prod = a * b
        assert prod.value == a.value * b.value
        assert prod.derivative == a.value * b.derivative + a.derivative * b.value


def test_dual_inverse_consistency():
    rng = random.Random(11)
    for _ in range(10):
        v = random_series(rng, 8, True)
        if v.coeffs[0] == 0:
            v = v + 2
        d = random_series(rng, 8)
        x = DualSeries(v, d)
        prod = x * x.inverse()
        assert prod.value == Series.one(8)
        assert prod.derivative == Series.zero(8)


def test_shift_round_trip():
    s = Series.from_coeffs([0, 0, 3, 1], 5)
    assert s.shift_down(2).coeffs == [3, 1, 0, 0]
    assert s.shift_down(2).shift_up(2).coeffs == [0, 0, 3, 1].__add__([0, 0])[:6]
    with pytest.raises(NotInvertible):
        Series.one(3).shift_down(1)


def test_floats_rejected():
    with pytest.raises(TypeError):
        Series([1.0, 2.0])

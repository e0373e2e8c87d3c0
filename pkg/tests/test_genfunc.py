"""Tests for the kernel-method closed-form series."""

from fractions import Fraction

import pytest

from skewdyck import genfunc
from skewdyck.dp import dp_table
from skewdyck.paths import BOUNDED, DUAL, UNBOUNDED
from skewdyck.series import WPoly, specialize_w, w_slice

# golden coefficient lists for the level series (nonzero entries only;
# each series is supported on one parity class)
S_GOLDEN = {
    0: [1, 1, 3, 10, 36, 137, 543],
    1: [1, 2, 6, 21, 79, 311, 1265],
    2: [1, 3, 10, 37, 145, 589, 2455],
    3: [1, 4, 15, 59, 241, 1010, 4314],
}
G_GOLDEN = {
    0: [1, 1, 3, 10, 36, 137, 543, 2219],
    1: [2, 3, 10, 36, 137, 543, 2219, 9285],
    2: [4, 8, 29, 111, 442, 1813, 7609, 32521],
    3: [8, 20, 78, 315, 1306, 5527, 23779, 103699],
}
OPEN_PRIMAL = [1, 1, 2, 3, 7, 11, 26, 43, 102, 175, 416]
OPEN_DUAL = [1, 2, 5, 11, 27, 62, 151, 354, 859, 2036]
NEGATIVE_AXIS_GOLDEN = {
    "f0": [1, 1, 2, 6, 21, 79, 311, 1265],
    "g0": [0, 1, 3, 10, 37, 145, 589, 2455],
    "h0": [0, 0, 1, 5, 21, 87, 365, 1555],
    "sum": [1, 2, 6, 21, 79, 311, 1265, 5275],
}


def _even_part(s, terms):
    return [s.coeff(2 * n) for n in range(terms)]


def _nonzero_part(s, j, terms):
    return [s.coeff(2 * n + j) for n in range(terms)]


@pytest.mark.parametrize("j", sorted(S_GOLDEN))
def test_primal_level_golden(j):
    s = genfunc.primal_level_series(j, order=2 * 6 + j)
    assert _nonzero_part(s, j, 7) == S_GOLDEN[j]
    # parity: the complementary coefficients vanish
    assert all(s.coeff(n) == 0 for n in range(s.order + 1) if (n - j) % 2)


@pytest.mark.parametrize("j", sorted(G_GOLDEN))
def test_dual_level_golden(j):
    s = genfunc.dual_level_series(j, order=2 * 7 + j)
    assert _nonzero_part(s, j, 8) == G_GOLDEN[j]
    assert all(s.coeff(n) == 0 for n in range(s.order + 1) if (n - j) % 2)


def test_dual_axis_equals_primal_axis():
    order = 40
    assert genfunc.dual_level_series(0, order=order) == genfunc.primal_level_series(
        0, order=order
    )


def test_open_ended_expansions():
    s = genfunc.primal_open_ended(order=10)
    assert [s.coeff(n) for n in range(11)] == OPEN_PRIMAL
    g = genfunc.dual_open_ended(order=9)
    assert [g.coeff(n) for n in range(10)] == OPEN_DUAL


def test_primal_classes_sum_to_total():
    order = 20
    for j in range(4):
        total = genfunc.primal_level_series(j, order=order)
        parts = [genfunc.primal_level_series(j, cls=c, order=order) for c in "fgh"]
        assert parts[0] + parts[1] + parts[2] == total


def test_dual_classes_sum_to_total():
    order = 20
    for j in range(4):
        total = genfunc.dual_level_series(j, order=order)
        parts = [genfunc.dual_level_series(j, cls=c, order=order) for c in "abc"]
        assert parts[0] + parts[1] + parts[2] == total


def test_primal_classes_match_dp():
    order = 14
    table = dp_table(BOUNDED, order)
    for j in range(5):
        for cls in "fgh":
            s = genfunc.primal_level_series(j, cls=cls, order=order)
            assert [s.coeff(n) for n in range(order + 1)] == [
                table.count(n, j, cls=cls) for n in range(order + 1)
            ], (j, cls)


def test_dual_classes_match_dp():
    order = 14
    table = dp_table(DUAL, order)
    for j in range(5):
        for cls in "abc":
            s = genfunc.dual_level_series(j, cls=cls, order=order)
            assert [s.coeff(n) for n in range(order + 1)] == [
                table.count(n, j, cls=cls) for n in range(order + 1)
            ], (j, cls)


def test_kernel_bundle_identities():
    b = genfunc.kernel_bundle(12)
    from skewdyck.series import RATIONAL, Series, W_VAR

    z = Series.z(12, RATIONAL)
    one = Series.one(12, RATIONAL)
    z2 = z * z
    assert b.W * b.W == one - 6 * z2 + 5 * z2 * z2
    assert b.P * b.Q == z2 * (2 * one - z2)
    assert b.P + b.Q == one + z2
    onew = Series.one(12, genfunc.kernel_bundle(12).Ww.ring)
    zw = Series.z(12, onew.ring)
    w = W_VAR
    assert b.Ww * b.Ww == (onew - zw * zw * w) * (onew - zw * zw * (w + 4))


# -- red (w-marked) series ------------------------------------------------


def test_red_axis_expansion():
    sx = genfunc.even_to_x(genfunc.red_level_series(0, order=12))
    w = WPoly((0, 1))
    assert sx.coeff(0) == WPoly.const(1)
    assert sx.coeff(1) == WPoly.const(1)
    assert sx.coeff(2) == w + 2
    assert sx.coeff(3) == WPoly((5, 4, 1))
    assert sx.coeff(4) == WPoly((14, 15, 6, 1))


def test_red_specializations():
    order = 20
    marked = genfunc.red_level_series(0, order=order)
    plain = genfunc.primal_level_series(0, order=order)
    assert specialize_w(marked, 1) == plain
    catalan = w_slice(marked, 0)
    assert [catalan.coeff(2 * n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_red_classes_match_color_dp():
    order = 12
    table = dp_table(BOUNDED, order, with_color_marker=True)
    for j in range(4):
        for cls in "fgh":
            s = genfunc.red_level_series(j, cls=cls, order=order)
            for n in range(order + 1):
                assert s.coeff(n) == table.wpoly(n, j, cls=cls), (j, cls, n)


def test_substitution_identities():
    checks = genfunc.substitution_identity_check(order=20)
    assert len(checks) == 2
    assert all(c.ok for c in checks), checks


def test_average_red_series():
    s = genfunc.average_red_series(order=8)
    assert [s.coeff(n) for n in range(8)] == [0, 0, 1, 6, 30, 144, 685, 3258]
    # semilength 3: 6 red edges over 10 paths = 3/5
    assert Fraction(s.coeff(3), 10) == Fraction(3, 5)


@pytest.mark.parametrize("k", range(5))
def test_w_power_slices(k):
    closed = genfunc.red_w_power_slice(k, order=20, mode="closed")
    sliced = genfunc.red_w_power_slice(k, order=20, mode="slice")
    assert closed == sliced


def test_w_power_slice_catalan():
    s = genfunc.red_w_power_slice(0, order=8)
    assert [s.coeff(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_blue_marked_dual_axis():
    s = genfunc.dual_blue_g0(order=10)
    assert s.coeff(6) == WPoly((5, 4, 1))
    assert s.coeff(8) == WPoly((14, 15, 6, 1))  # (w+2)(w^2+4w+7)
    blue_dp = dp_table(DUAL, 8, with_color_marker=True)
    for n in range(9):
        assert s.coeff(n) == blue_dp.wpoly(n, 0)


# -- negative territory ----------------------------------------------------


@pytest.mark.parametrize("cls", sorted(NEGATIVE_AXIS_GOLDEN))
def test_negative_axis_closed_forms(cls):
    s = genfunc.negative_axis_series(cls, order=14)
    assert _even_part(s, 8) == NEGATIVE_AXIS_GOLDEN[cls]


def test_negative_axis_is_not_the_path_count():
    """The axis closed forms and the enumerative level series genuinely
    differ: they solve the same functional equations with different
    analyticity requirements (see module docstring)."""
    axis = genfunc.negative_axis_series("sum", order=8)
    level = genfunc.negative_level_series(0, order=8)
    assert _even_part(axis, 5) == [1, 2, 6, 21, 79]
    assert _even_part(level, 5) == [1, 2, 7, 29, 127]


def test_negative_boundary_matches_dp():
    order = 14
    f0, g0, h0 = genfunc.negative_boundary_series(order=order)
    table = dp_table(UNBOUNDED, order)
    for n in range(order + 1):
        assert f0.coeff(n) == table.count(n, 0, cls="f")
        assert g0.coeff(n) == table.count(n, 0, cls="g")
        assert h0.coeff(n) == table.count(n, 0, cls="h")


def test_negative_level_series_matches_dp():
    order = 14
    table = dp_table(UNBOUNDED, order)
    for j in range(-4, 5):
        for cls in ("f", "g", "h", "total"):
            s = genfunc.negative_level_series(j, cls=cls, order=order)
            for n in range(order + 1):
                want = (
                    table.count(n, j)
                    if cls == "total"
                    else table.count(n, j, cls=cls)
                )
                assert s.coeff(n) == want, (j, cls, n)


def test_negative_level_axis_values():
    s = genfunc.negative_level_series(-1, order=13)
    assert [s.coeff(2 * n + 1) for n in range(7)] == [1, 4, 17, 75, 339, 1558, 7247]
    s = genfunc.negative_level_series(-2, order=14)
    assert [s.coeff(2 * n) for n in range(8)] == [0, 2, 9, 41, 189, 880, 4131, 19522]


def test_bad_class_rejected():
    with pytest.raises(ValueError):
        genfunc.primal_level_series(0, cls="x")
    with pytest.raises(ValueError):
        genfunc.negative_axis_series("nope")

import pytest
from fractions import Fraction

from jetforge.errors import NonUnitLeadingCoefficient
from jetforge.localized import LocalPoly
from jetforge.poly import JetVar, Poly
from jetforge.series import TruncSeries, series_invert

T0 = [JetVar("t0", 0, i) for i in range(4)]


def const(c):
    return Poly.constant(c)


def test_geometric_series():
    s = TruncSeries(2, [const(1), const(-1), const(0)])
    inv = series_invert(s)
    assert list(inv.coeffs) == [const(1), const(1), const(1)]
    assert s * inv == s.one_like()


def test_scalar_inverse_level0():
    s = TruncSeries(0, [const(2)])
    assert series_invert(s).coeffs[0] == const(Fraction(1, 2))


def test_localized_inversion_of_jet_series():
    # invert sum t0^(i) s^i over the ring localized at t0^(0)
    u = T0[0]
    s = TruncSeries(2, [LocalPoly(Poly.var(T0[i]), u) for i in range(3)])
    inv = series_invert(s)
    t00, t01, t02 = (Poly.var(T0[i]) for i in range(3))
    assert inv.coeffs[0] == LocalPoly(const(1), u, 1)
    assert inv.coeffs[1] == LocalPoly(-t01, u, 2)
    assert inv.coeffs[2] == LocalPoly(t01 ** 2 - t00 * t02, u, 3)
    # multiply back: the product must be 1 mod s^3
    assert s * inv == s.one_like()


def test_non_unit_leading_coefficient():
    x = Poly.var(JetVar("x", 0, 0))
    with pytest.raises(NonUnitLeadingCoefficient):
        series_invert(TruncSeries(1, [x, const(1)]))
    with pytest.raises(NonUnitLeadingCoefficient):
        series_invert(TruncSeries(1, [const(0), const(1)]))


def test_inversion_property_random_levels():
    for n in range(5):
        s = TruncSeries(n, [const(3)] + [const(i + 1) for i in range(n)])
        assert s * series_invert(s) == s.one_like()


def test_localpoly_normalization_idempotent():
    u = T0[0]
    up = Poly.var(u)
    a = Poly.var(T0[1]) + const(2)
    lp1 = LocalPoly(a, u, 2)
    lp2 = LocalPoly(a * up, u, 3)
    assert lp1 == lp2
    assert lp1.denom_exp == 2
    # normalization strips unit factors entirely when possible
    assert LocalPoly(a * up ** 2, u, 2) == LocalPoly(a, u, 0)


def test_localpoly_arith_and_eval():
    u = T0[0]
    lp = LocalPoly(const(1), u, 1)  # 1/t0_0
    assert lp * LocalPoly(Poly.var(u), u) == LocalPoly(const(1), u, 0)
    assert (lp + lp) == LocalPoly(const(2), u, 1)
    assert lp.eval({u: Fraction(4)}) == Fraction(1, 4)
    from jetforge.errors import DivisionByZero
    with pytest.raises(DivisionByZero):
        lp.eval({u: 0})


def test_localpoly_render():
    u = T0[0]
    assert LocalPoly(-Poly.var(T0[1]), u, 2).render() == "(-t0_1)/t0_0^2"
    assert LocalPoly(const(5), u, 0).render() == "5"

#include "fockcorr/correlators.hpp"

#include <doctest.h>

using namespace fockcorr;

namespace {

using RF = RationalFunction;
using QR = QSeries<Rational>;
using QF = QSeries<RF>;

LaurentPoly s(int i = 0, long e = 1) { return LaurentPoly::var(Var::s(i), e); }
QExp I(long n) { return QExp::integer(n); }

QF to_rf(const QSeries<LaurentPoly>& a)
{
    return a.map([](const LaurentPoly& c) { return RF(c); });
}

QF lift(const QR& a)
{
    return a.map([](const Rational& c) { return RF(c); });
}

// 1/((q;q) Theta(t)) from its definition, independent of the determinant code
QF one_point(QExp order)
{
    auto th = to_rf(theta(order));
    return lift(series_inv(euler_qq(order), order)) * series_inv(th, order);
}

QR eval_series(const QF& f, std::map<Var, Rational> pt)
{
    return f.map([&](const RF& c) { return c.eval(pt); });
}

} // namespace

TEST_CASE("theta")
{
    auto th = theta(I(2));
    LaurentPoly d = s() - s(0, -1);
    CHECK(th.coeff(I(0)) == d);
    CHECK(th.coeff(I(1)) == -(d * d * d));
    auto inv = theta(I(6)).map([](const LaurentPoly& c) { return c.substitute_power(Var::s(0), Var::s(0), -1); });
    CHECK(inv == -theta(I(6)));
    CHECK(theta_k(1, I(3)).coeff(I(0)) == (s() + s(0, -1)) * Rational(1, 2));
}

TEST_CASE("F_bo for one point")
{
    Correlators<RF> c(symbolic_args(1), I(6));
    CHECK(c.f_bo() == one_point(I(6)));
    CHECK(c.f_bo(1) == -c.f_bo(0));
    Correlators<Rational> e({Rational(2)}, I(2));
    CHECK(e.f_bo().coeff(I(0)) == Rational(2, 3));
    CHECK(e.f_bo() == eval_series(one_point(I(2)), {{Var::s(0), Rational(2)}}));
}

TEST_CASE("F_bo is symmetric and agrees across modes")
{
    const QExp N = I(5);
    Correlators<Rational> a({Rational(2), Rational(3)}, N), b({Rational(3), Rational(2)}, N);
    CHECK(a.f_bo() == b.f_bo());
    Correlators<Rational> c3({Rational(2), Rational(3), Rational(5, 2)}, N), d3({Rational(5, 2), Rational(2), Rational(3)}, N);
    CHECK(c3.f_bo() == d3.f_bo());
    Correlators<RF> ex(symbolic_args(2), N);
    CHECK(eval_series(ex.f_bo(), {{Var::s(0), Rational(2)}, {Var::s(1), Rational(3)}}) == a.f_bo());
    Correlators<Rational> pole({Rational(2), Rational(1, 2)}, N);
    CHECK_THROWS_AS(pole.f_bo(), PoleError);
}

TEST_CASE("level one correlators")
{
    const QExp N = I(6);
    Correlators<RF> c(symbolic_args(1), N);
    auto fb = one_point(N);
    CHECK(c.npoint({Algebra::D, 2, {0}, false, false}) == fb * RF(2));
    for (long k = 1; k <= 3; ++k) {
        auto expect = fb.shifted(QExp::half(k * k)).truncated(N) * RF(s(0, 2 * k) + s(0, -2 * k));
        CHECK(c.npoint({Algebra::D, 2, {k}, false, false}) == expect);
    }
    for (long m = 0; m <= 2; ++m) {
        QF num(N);
        num.add_term(QExp::half(m * m), RF(s(0, 2 * m) + s(0, -2 * m)));
        num.add_term(QExp::half((m + 2) * (m + 2)), -RF(s(0, 2 * m + 4) + s(0, -2 * m - 4)));
        CHECK(c.npoint({Algebra::C, 2, {m}, false, false}) == (num * fb).truncated(N));
    }
    auto b = c.npoint({Algebra::B, 2, {0}, false, true});
    CHECK(b == (fb.shifted(QExp::from_sixteenths(2)) * RF(s() + s(0, -1))).truncated(N));
    // type a, l = 1
    auto a = c.a_npoint({2});
    CHECK(a == (fb.shifted(I(2)) * RF(s(0, 4))).truncated(N));
}

TEST_CASE("b and d formulas coincide on equal weights")
{
    const QExp N = I(5);
    Correlators<Rational> c({Rational(2), Rational(3)}, N);
    CHECK(c.npoint({Algebra::B, 4, {1, 0}, false, true}) == c.weyl_correlator({3, 1}, WeylType::D));
}

TEST_CASE("graded traces")
{
    const QExp N = I(5);
    Correlators<Rational> c0({}, N);
    auto ns = c0.graded_trace(false);
    auto inv = series_inv(euler_qq(N), N);
    for (const auto& [k2, ser] : ns) CHECK(ser == inv.shifted(half_square_exp(k2)).truncated(N));
    auto r = c0.graded_trace_at_one(true);
    CHECK(r.ord() == QExp::from_sixteenths(2));
    CHECK(r.coeff(QExp::from_sixteenths(2)) == 2);
    Correlators<RF> c1(symbolic_args(1), N);
    CHECK(c1.graded_trace(false).at(0) == c1.f_bo() * RF(2));
}

TEST_CASE("level one half base functions at one point")
{
    const QExp N = I(6);
    Correlators<RF> c(symbolic_args(1), N);
    auto d = c.half_level_base('D');
    CHECK(d == d_half_product(N));
    CHECK(d == d_half_partial_fractions(N));
    auto b = c.half_level_base('B');
    CHECK(b == b_half_product(N));
    CHECK(b == b_half_partial_fractions(N));
    Correlators<Rational> c0({}, N);
    CHECK(c0.half_level_base('D') == qpoch(-1, QExp::half(1), I(1), N));
    CHECK(c0.half_level_base('B') == qpoch(-1, I(1), I(1), N).shifted(QExp::from_sixteenths(1)).truncated(N));
}

TEST_CASE("q-dimensions")
{
    const QExp N = I(8);
    auto inv = series_inv(euler_qq(N), N);
    CHECK(qdim({Algebra::D, 2, {0}, false, false}, N) == inv);
    for (long m = 0; m < 3; ++m) {
        QR p = QR::monomial(QExp::half(m * m), 1);
        p.add_term(QExp::half(m * m) + I(2 * (m + 1)), -1);
        CHECK(qdim({Algebra::C, 2, {m}, false, false}, N) == (p * inv).truncated(N));
    }
    CHECK(qdim({Algebra::B, 1, {}, false, true}, N) == qpoch(-1, I(1), I(1), N).shifted(QExp::from_sixteenths(1)).truncated(N));
    for (Algebra a : {Algebra::B, Algebra::C, Algebra::D})
        for (long lev2 = 1; lev2 <= 5; ++lev2) {
            if (a == Algebra::C && lev2 % 2) continue;
            for (const auto& lab : enumerate_labels(a, lev2, I(4))) CHECK_NOTHROW(qdim_forms(lab, N));
        }
    // n = 0 closed form equals the q-dimension
    Correlators<Rational> c0({}, N);
    for (const auto& lab : enumerate_labels(Algebra::D, 3, I(4))) CHECK(c0.npoint(lab) == qdim(lab, N));
    for (const auto& lab : enumerate_labels(Algebra::B, 4, I(4))) CHECK(c0.npoint(lab) == qdim(lab, N));
}

TEST_CASE("refined functions")
{
    const QExp N = I(10);
    auto g = refined_g(N);
    CHECK(g.coeff(I(0)) == RF::make(LaurentPoly(2), s() - s(0, -1)));
    CHECK(normal_g(I(12)) == to_rf(normal_g_partitions(I(12))));
    Correlators<RF> c(symbolic_args(1), N);
    auto d = c.npoint({Algebra::D, 2, {0}, false, false});
    for (int sg : {1, -1}) CHECK(refined_level1(sg, N) == (d + g * RF(sg)) * RF(Rational(1, 2)));
}

#include "fockcorr/correlators.hpp"
#include "fockcorr/fock_oracle.hpp"

#include <doctest.h>

using namespace fockcorr;

namespace {

using RF = RationalFunction;
using QR = QSeries<Rational>;
using QF = QSeries<RF>;

LaurentPoly s(int i = 0, long e = 1) { return LaurentPoly::var(Var::s(i), e); }
QExp I(long n) { return QExp::integer(n); }

OracleSpec ns(int pairs, QExp cutoff)
{
    OracleSpec sp;
    sp.pairs = pairs;
    sp.cutoff = cutoff;
    return sp;
}

} // namespace

TEST_CASE("state listings")
{
    CHECK(enumerate_states(ns(1, QExp::half(3))).size() == 4);
    auto sp = ns(0, I(2));
    sp.neutral = true;
    CHECK(enumerate_states(sp).size() == 3);
    sp.sector = Sector::R;
    sp.cutoff = I(1);
    auto r = enumerate_states(sp);
    REQUIRE(r.size() == 2);
    CHECK(r[0].energy == QExp::from_sixteenths(1));
    CHECK(r[1].energy == QExp::from_sixteenths(1));
}

TEST_CASE("state counts")
{
    const QExp N = I(12);
    auto inv = series_inv(euler_qq(N), N);
    for (long k = 0; k <= 2; ++k) {
        auto sp = ns(1, N);
        sp.charge = k;
        CHECK(trace(sp, {}).as_rational() == inv.shifted(QExp::half(k * k)).truncated(N));
    }
    // two pairs, z-graded: prod_p sum_k z_p^k q^{k^2/2} / (q;q)
    auto sp = ns(2, I(6));
    sp.zgraded = true;
    auto got = trace(sp, {}).as_laurent();
    QSeries<LaurentPoly> one(I(6));
    for (long k = -3; k <= 3; ++k) one.add_term(QExp::half(k * k), LaurentPoly::var(Var::z(0), k));
    auto two = one.map([](const LaurentPoly& c) { return c.substitute_power(Var::z(0), Var::z(1), 1); });
    auto inv6 = series_inv(euler_qq(I(6)), I(6)).map([](const Rational& c) { return LaurentPoly(c); });
    CHECK(got == one * two * inv6 * inv6);
    // neutral sectors
    auto nsn = ns(0, N);
    nsn.neutral = true;
    CHECK(trace(nsn, {}).as_rational() == qpoch(-1, QExp::half(1), I(1), N));
    nsn.sector = Sector::R;
    CHECK(trace(nsn, {}).as_rational() == (qpoch(-1, I(1), I(1), N) * Rational(2)).shifted(QExp::from_sixteenths(1)).truncated(N));
}

TEST_CASE("eigenvalues")
{
    auto sp = ns(1, I(5));
    FockState vac;
    vac.plus = vac.minus = {{}};
    OracleOp d{'D', s()};
    auto e = eigenvalue(d, vac, sp);
    CHECK(RF::make(e.num, e.den) == RF::make(LaurentPoly(2), s() - s(0, -1)));
    FockState st = vac;
    st.plus[0] = {5};
    st.minus[0] = {3};
    auto a = eigenvalue({'A', s()}, st, sp);
    CHECK(a.num == (s(0, 5) - s(0, -3)) * (s() - s(0, -1)) + 1);
    // B on the neutral zero mode: central term only
    OracleSpec r;
    r.pairs = 0;
    r.neutral = true;
    r.sector = Sector::R;
    FockState z;
    z.phi0 = true;
    auto b = eigenvalue({'B', s()}, z, r);
    CHECK(RF::make(b.num, b.den) == RF::make((s(0, 2) + 1) * Rational(1, 2), s(0, 2) - 1));
    CHECK_THROWS_AS(eigenvalue({'B', s()}, vac, sp), std::invalid_argument);
    CHECK_THROWS_AS(trace(r, {{'A', s()}}), std::invalid_argument);
}

TEST_CASE("charge zero D trace is twice F_bo")
{
    const QExp N = I(10);
    auto sp = ns(1, N);
    sp.charge = 0;
    Correlators<RF> c(symbolic_args(1), N);
    CHECK(trace(sp, {{'D', s()}}).as_ratfunc() == c.f_bo() * RF(2));
}

TEST_CASE("charge sectors are shifts of charge zero")
{
    const QExp N = I(8);
    auto sp = ns(1, N);
    sp.charge = 0;
    auto base = trace(sp, {{'D', LaurentPoly(2)}}).as_rational();
    for (long k : {1L, 2L, -1L, -2L}) {
        sp.charge = k;
        auto got = trace(sp, {{'D', LaurentPoly(2)}}).as_rational();
        Rational fac = (rat_pow(4, k) + rat_pow(4, -k)) / 2;
        CHECK(got == (base * fac).shifted(QExp::half(k * k)).truncated(N));
    }
}

TEST_CASE("D is A(t) minus A(1/t) statewise")
{
    auto sp = ns(1, I(6));
    Rational s0(3, 2);
    for (const auto& st : enumerate_states(sp)) {
        auto ev = [&](char k, Rational v) -> Rational {
            auto e = eigenvalue({k, LaurentPoly(v)}, st, sp);
            return e.num.constant_term() / e.den.constant_term();
        };
        CHECK(ev('D', s0) == Rational(ev('A', s0) - ev('A', Rational(1 / s0))));
    }
}

TEST_CASE("type A traces over charge sectors")
{
    const QExp N = I(7);
    Correlators<RF> c(symbolic_args(1), N);
    for (long m = -1; m <= 2; ++m) {
        auto sp = ns(1, N);
        sp.charge = m;
        CHECK(trace(sp, {{'A', s()}}).as_ratfunc() == c.a_npoint({m}));
    }
    Correlators<Rational> e({Rational(2), Rational(3)}, N);
    auto sp = ns(1, N);
    sp.charge = 1;
    CHECK(trace(sp, {{'A', LaurentPoly(2)}, {'A', LaurentPoly(3)}}).as_rational() == e.a_npoint({1}));
}

TEST_CASE("tau signs")
{
    CHECK(tau_fixed_sign({}, {}) == 1);
    CHECK(tau_fixed_sign({1}, {1}) == -1);
    CHECK(tau_fixed_sign({3, 1}, {1, 3}) == 1);
    CHECK(tau_fixed_sign({5, 3, 1}, {5, 3, 1}) == -1);
    CHECK(tau_fixed_sign({3}, {1}) == 0);
}

TEST_CASE("refined traces")
{
    auto t0 = tau_refined_trace({}, I(20));
    CHECK(t0.plus.as_rational() - t0.minus.as_rational() == qpoch(1, I(1), I(2), I(20)));
    const QExp N = I(10);
    auto t = tau_refined_trace({{'D', s()}}, N);
    auto plus = t.plus.as_ratfunc(), minus = t.minus.as_ratfunc();
    CHECK(plus == refined_level1(1, N));
    CHECK(minus == refined_level1(-1, N));
    CHECK(plus == refined_level1_logform(1, -1, N));
    CHECK(minus == refined_level1_logform(-1, -1, N));
    CHECK(plus != refined_level1_logform(1, 1, N));
    // lowest order of the difference: central term only
    CHECK((plus - minus).coeff(I(0)) == RF::make(LaurentPoly(2), s() - s(0, -1)));
}

TEST_CASE("half level base functions")
{
    const QExp N = I(6);
    OracleSpec d;
    d.pairs = 0;
    d.neutral = true;
    d.cutoff = N;
    Correlators<RF> c(symbolic_args(1), N);
    CHECK(trace(d, {{'D', s()}}).as_ratfunc() == c.half_level_base('D'));
    Correlators<Rational> e({Rational(2), Rational(3)}, N);
    CHECK(trace(d, {{'D', LaurentPoly(2)}, {'D', LaurentPoly(3)}}).as_rational() == e.half_level_base('D'));
    OracleSpec b = d;
    b.sector = Sector::R;
    CHECK(trace(b, {{'B', s()}}).as_ratfunc() * RF(Rational(1, 2)) == c.half_level_base('B'));
    CHECK(trace(b, {{'B', LaurentPoly(2)}, {'B', LaurentPoly(3)}}).as_rational() * Rational(1, 2) == e.half_level_base('B'));
}

TEST_CASE("resource guard")
{
    auto sp = ns(2, I(8));
    sp.max_states = 10;
    CHECK_THROWS_AS(trace(sp, {}), ResourceError);
    CHECK_THROWS_AS(enumerate_states(sp), ResourceError);
}

#include "fockcorr/json_io.hpp"
#include "fockcorr/qseries.hpp"

#include <doctest.h>

#include <chrono>
#include <random>

using namespace fockcorr;

namespace {

using QS = QSeries<Rational>;
QExp I(long n) { return QExp::integer(n); }
QExp H(long h) { return QExp::half(h); }

// Independent partition counts by brute-force recursion over the largest part.
long partitions(int n, int maxpart)
{
    if (n == 0) return 1;
    long c = 0;
    for (int k = std::min(n, maxpart); k >= 1; --k) c += partitions(n - k, k);
    return c;
}

QS from_list(std::initializer_list<std::pair<QExp, long>> xs, QExp trunc)
{
    QS s(trunc);
    for (auto [e, c] : xs) s.add_term(e, Rational(c));
    return s;
}

} // namespace

TEST_CASE("exponents")
{
    CHECK(QExp::parse("1/16").sixteenths() == 1);
    CHECK(QExp::parse("-3/2") == H(-3));
    CHECK_THROWS(QExp::parse("1/3"));
    CHECK(half_square_exp(1) == QExp::parse("1/8"));
}

TEST_CASE("products and the geometric series")
{
    QS one_minus_q = from_list({{I(0), 1}, {I(1), -1}}, QExp::infinite());
    for (long n : {1, 5, 17}) {
        QS geo(I(n));
        for (long k = 0; k < n; ++k) geo.add_term(I(k), 1);
        QS p = one_minus_q * geo;
        CHECK(p.trunc() == I(n));
        CHECK(p.agrees(QS::constant(1)));
        CHECK(series_inv(one_minus_q, I(n)) == geo);
    }
}

TEST_CASE("euler function")
{
    QS e6 = pochhammer<Rational>(1, I(1), I(1), I(6));
    CHECK(e6 == from_list({{I(0), 1}, {I(1), -1}, {I(2), -1}, {I(5), 1}}, I(6)));
    CHECK(pochhammer<Rational>(1, I(1), I(1), I(4)) == from_list({{I(0), 1}, {I(1), -1}, {I(2), -1}}, I(4)));
    // pentagonal numbers
    const int N = 60;
    QS pent(I(N));
    for (long k = -10; k <= 10; ++k) {
        long e = k * (3 * k - 1) / 2;
        if (e < N) pent.add_term(I(e), k % 2 == 0 ? 1 : -1);
    }
    CHECK(pochhammer<Rational>(1, I(1), I(1), I(N)) == pent);
    QS inv = series_inv(pochhammer<Rational>(1, I(1), I(1), I(N)));
    for (int n = 0; n < 30; ++n) CHECK(inv.coeff(I(n)) == partitions(n, n));
    CHECK((inv * pochhammer<Rational>(1, I(1), I(1), I(N))).agrees(QS::constant(1)));
}

TEST_CASE("other pochhammer symbols")
{
    CHECK(pochhammer<Rational>(-1, H(1), I(1), I(3)) ==
          from_list({{I(0), 1}, {H(1), 1}, {H(3), 1}, {I(2), 1}, {H(5), 1}}, I(3)));
    // (q;q^2) below q^6, expanded by hand from (1-q)(1-q^3)(1-q^5)
    CHECK(pochhammer<Rational>(1, I(1), I(2), I(6)) ==
          from_list({{I(0), 1}, {I(1), -1}, {I(3), -1}, {I(4), 1}, {I(5), -1}}, I(6)));
    CHECK_THROWS(pochhammer<Rational>(1, I(0), I(1), I(3)));
    CHECK_THROWS(pochhammer<Rational>(1, I(1), I(0), I(3)));
}

TEST_CASE("monomial inverse and truncation bookkeeping")
{
    QS m = QS::monomial(H(1), Rational(3));
    CHECK(series_inv(m) == QS::monomial(H(-1), Rational(1, 3)));
    QS a = from_list({{I(1), 2}, {I(2), 1}}, I(5));
    QS b = from_list({{I(0), 1}, {I(3), 4}}, I(4));
    CHECK((a * b).trunc() == I(5));
    CHECK_THROWS(series_inv(QS(I(3))));
}

TEST_CASE("ring axioms on random truncated series")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> co(-4, 4), ex(0, 24);
    auto rnd = [&] {
        QS s(QExp::from_sixteenths(8 * ex(rng) + 40));
        for (int k = 0; k < 6; ++k) s.add_term(QExp::from_sixteenths(8 * ex(rng)), co(rng));
        return s;
    };
    for (int trial = 0; trial < 50; ++trial) {
        QS a = rnd(), b = rnd(), c = rnd();
        CHECK(((a * b) * c).agrees(a * (b * c)));
        CHECK((a * (b + c)).agrees(a * b + a * c));
        CHECK((a * b) == (b * a));
    }
}

TEST_CASE("lattice sums")
{
    using LS = QSeries<LaurentPoly>;
    Var zv = Var::z(0);
    auto w = [&](Half h) { return LaurentPoly::var(zv, h / 2); };
    LS got = lattice_sum<LaurentPoly>(false, w, H(9));
    LS expect(H(9));
    expect.add_term(I(0), 1);
    expect.add_term(H(1), LaurentPoly::var(zv) + LaurentPoly::var(zv, -1));
    expect.add_term(I(2), LaurentPoly::var(zv, 2) + LaurentPoly::var(zv, -2));
    CHECK(got == expect);
    CHECK(lattice_sum<Rational>(false, [](Half) { return Rational(1); }, H(1)) == QS::constant(1, H(1)));
}

TEST_CASE("json round trip")
{
    QS e = series_inv(pochhammer<Rational>(1, I(1), I(1), I(12)));
    CHECK(series_from_json<Rational>(series_to_json(e)) == e);
    CHECK_THROWS_AS(series_from_json<LaurentPoly>(series_to_json(e)), std::invalid_argument);
    QSeries<RationalFunction> r(I(2));
    r.add_term(H(1), RationalFunction::make(LaurentPoly::var(Var::s(0)), LaurentPoly::var(Var::s(0), 2) - 1));
    auto back = series_from_json<RationalFunction>(series_to_json(r));
    CHECK(series_to_json(back).dump() == series_to_json(r).dump());
}

TEST_CASE("partition generating function speed")
{
    auto t0 = std::chrono::steady_clock::now();
    QS inv = series_inv(pochhammer<Rational>(1, I(1), I(1), I(501)));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(inv.coeff(I(100)) == Rational(Integer("190569292")));
    CHECK(inv.coeff(I(500)) == Rational(Integer("2300165032574323995027")));
    CHECK(secs < 1.0);
}

#include "fockcorr/weyl.hpp"

#include <doctest.h>

#include <random>

using namespace fockcorr;

TEST_CASE("group orders and sign against reduced length")
{
    CHECK(weyl_group(WeylType::B, 3).size() == 48);
    CHECK(weyl_group(WeylType::C, 2).size() == 8);
    CHECK(weyl_group(WeylType::D, 3).size() == 24);
    CHECK(weyl_group(WeylType::D, 1).size() == 1);
    for (auto [t, l] : {std::pair{WeylType::B, 2}, {WeylType::C, 2}, {WeylType::D, 2}, {WeylType::D, 3}, {WeylType::B, 3}, {WeylType::D, 4}})
        for (const auto& s : weyl_group(t, l)) CHECK(s.sign() == (reduced_length(s, t) % 2 == 0 ? 1 : -1));
}

TEST_CASE("rho")
{
    CHECK(rho2(WeylType::D, 3) == std::vector<Half>{4, 2, 0});
    CHECK(rho2(WeylType::B, 1) == std::vector<Half>{1});
    CHECK(rho2(WeylType::C, 2) == std::vector<Half>{4, 2});
}

TEST_CASE("rank one weyl sums")
{
    for (long m = 0; m < 4; ++m) {
        auto d = weyl_sum({2 * m}, WeylType::D, 1);
        REQUIRE(d.size() == 1);
        CHECK(d[0].sign == 1);
        CHECK(d[0].qexp == half_square_exp(2 * m));
        auto b = weyl_sum({2 * m}, WeylType::B, 1);
        REQUIRE(b.size() == 2);
        CHECK(b[1].sign == -1);
        CHECK(b[1].k2 == std::vector<Half>{2 * m + 2});
        auto c = weyl_sum({2 * m}, WeylType::C, 1);
        CHECK(c[1].k2 == std::vector<Half>{2 * m + 4});
        CHECK(c[1].qexp == half_square_exp(2 * m + 4));
    }
    CHECK_THROWS(weyl_sum({0, 2}, WeylType::C, 2));
}

TEST_CASE("product forms by hand")
{
    const QExp N = QExp::integer(20);
    // (C, l=2, 0): (1-q)(1-q^2)(1-q^3)(1-q^4)
    QSeries<Rational> expect = QSeries<Rational>::constant(1);
    for (long k = 1; k <= 4; ++k) {
        QSeries<Rational> f = QSeries<Rational>::constant(1);
        f.add_term(QExp::integer(k), -1);
        expect = expect * f;
    }
    CHECK(weyl_sum_product_form({0, 0}, WeylType::C, 2, N) == expect.truncated(N));
    CHECK(weyl_sum_series({0, 0}, WeylType::C, 2, N) == expect.truncated(N));
    // (B, l=1, m): q^{m^2/2}(1 - q^{m+1/2})
    auto b = weyl_sum_product_form({6}, WeylType::B, 1, N);
    QSeries<Rational> eb(N);
    eb.add_term(QExp::half(9), 1);
    eb.add_term(QExp::half(9) + QExp::half(7), -1);
    CHECK(b == eb);
}

TEST_CASE("signed q-power sums over the Weyl group on random dominant weights")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> step(0, 2);
    const QExp N = QExp::integer(15);
    for (WeylType t : {WeylType::B, WeylType::C, WeylType::D})
        for (int l = 1; l <= 4; ++l)
            for (int trial = 0; trial < 20; ++trial) {
                // build from the bottom so the weight stays dominant
                std::vector<Half> lam(static_cast<std::size_t>(l));
                Half acc = 0;
                bool spin = (t != WeylType::C) && trial % 2 == 1;
                for (int i = l - 1; i >= 0; --i) {
                    acc += 2 * step(rng);
                    lam[static_cast<std::size_t>(i)] = acc + (spin ? 1 : 0);
                }
                CHECK(weyl_sum_series(lam, t, l, N) == weyl_sum_product_form(lam, t, l, N));
            }
}

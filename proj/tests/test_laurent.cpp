#include "fockcorr/json_io.hpp"
#include "fockcorr/laurent.hpp"
#include "fockcorr/ratfunc.hpp"

#include <doctest.h>

#include <random>

using namespace fockcorr;

namespace {

LaurentPoly s(int i = 0, long e = 1) { return LaurentPoly::var(Var::s(i), e); }
LaurentPoly z(int i = 0, long e = 1) { return LaurentPoly::var(Var::z(i), e); }

LaurentPoly random_poly(std::mt19937& rng, int vars, int terms)
{
    std::uniform_int_distribution<int> ex(-3, 3), co(-5, 5), vi(0, vars - 1);
    LaurentPoly p;
    for (int k = 0; k < terms; ++k) {
        int c = co(rng);
        if (c == 0) c = 1;
        p += z(vi(rng), ex(rng)) * s(0, ex(rng)) * Rational(c);
    }
    if (p.is_zero()) p = LaurentPoly(1);
    return p;
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1/-2"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(to_string(frac(-3, 6)) == "-1/2");
}

TEST_CASE("exact division examples")
{
    CHECK(exact_div(z(0, 2) - z(0, -2), z() - z(0, -1)) == z() + z(0, -1));
    LaurentPoly num = z(0) * z(1) + z(0) * z(1, -1) + z(0, -1) * z(1) + z(0, -1) * z(1, -1);
    CHECK(exact_div(num, z(1) + z(1, -1)) == z(0) + z(0, -1));
    CHECK_THROWS_WITH(exact_div(z(0, 2) + 1, z() - 1), "inexact division");
}

TEST_CASE("exact division round trip on random polynomials")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly a = random_poly(rng, 2, 4), b = random_poly(rng, 2, 3);
        CHECK(exact_div(a * b, b) == a);
        CHECK(exact_div(b, b) == LaurentPoly(1));
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937 rng(11);
    std::map<Var, Rational> pt{{Var::z(0), Rational(3, 2)}, {Var::z(1), Rational(-5, 7)}, {Var::s(0), Rational(2)}};
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly a = random_poly(rng, 2, 4), b = random_poly(rng, 2, 4);
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    }
    CHECK((s() - s(0, -1)).eval({{Var::s(0), Rational(2)}}) == Rational(3, 2));
    CHECK_THROWS(s().eval({}));
}

TEST_CASE("univariate gcd")
{
    LaurentPoly a = (s() - 1) * (s() + 3), b = (s() + 3) * (s() * s() + 1);
    CHECK(univariate_gcd(a, b, Var::s(0)) == s() + 3);
}

TEST_CASE("rational function normal form")
{
    auto f = RationalFunction::make(s(0, 2) * 2 - 2, s() * 4);
    CHECK(f == RationalFunction::make(s(0, 2) - 1, s() * 2));
    CHECK(RationalFunction::make((s(0, 2) - 1) * (s() + 3), s() * (s() + 3)) == RationalFunction::make(s(0, 2) - 1, s()));
    auto t = s(0, 2);
    auto g = RationalFunction::make(t + 1, t - 1);
    CHECK(g.eval({{Var::s(0), Rational(2)}}) == Rational(5, 3));
    CHECK_THROWS_AS(g.eval({{Var::s(0), Rational(1)}}), PoleError);
    CHECK_THROWS(RationalFunction::make(s(), LaurentPoly()));
}

TEST_CASE("rational function arithmetic agrees with evaluation")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(2, 9);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentPoly a = random_poly(rng, 1, 3), b = random_poly(rng, 1, 3), c = random_poly(rng, 1, 3);
        LaurentPoly d = s() - s(0, -1), e = s(0, 2) - 1 + s();
        RationalFunction x = RationalFunction::make(a, d * c), y = RationalFunction::make(b, e * d);
        for (int k = 0; k < 5; ++k) {
            std::map<Var, Rational> pt{{Var::z(0), frac(pick(rng), 3)}, {Var::s(0), frac(pick(rng), 5)}};
            Rational xv, yv;
            try {
                xv = x.eval(pt);
                yv = y.eval(pt);
            } catch (const PoleError&) {
                continue;
            }
            CHECK((x + y).eval(pt) == xv + yv);
            CHECK((x * y).eval(pt) == xv * yv);
            CHECK((x - y).eval(pt) == xv - yv);
            if (yv != 0) CHECK((x / y).eval(pt) == xv / yv);
        }
        CHECK(x + y - y == x);
        CHECK((x * y) / y == x);
    }
}

TEST_CASE("rational function derivative")
{
    // t d/dt of 1/(s - 1/s) with t = s^2: (s/2) d/ds
    auto f = RationalFunction::make(LaurentPoly(1), s() - s(0, -1));
    auto df = f.euler(Var::s(0), Rational(1, 2));
    auto expect = RationalFunction::make(-(s() + s(0, -1)) * Rational(1, 2), (s() - s(0, -1)).pow(2));
    CHECK(df == expect);
}

TEST_CASE("json round trip of coefficients")
{
    LaurentPoly p = s(0, -1) * Rational(3, 4) + z(1, 3) - 2;
    CHECK(laurent_from_json(to_json(p)) == p);
    auto f = RationalFunction::make(p, (s() - 1) * (s(0, 2) + 1));
    auto back = ratfunc_from_json(to_json(f));
    CHECK(back.num() == f.num());
    CHECK(back.den_factors() == f.den_factors());
}

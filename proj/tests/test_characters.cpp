#include "fockcorr/characters.hpp"
#include "fockcorr/weyl.hpp"

#include <doctest.h>

using namespace fockcorr;

namespace {

LaurentPoly z(int j, long e = 1) { return LaurentPoly::var(Var::z(j), e); }
LaurentPoly r(int j, long e = 1) { return LaurentPoly::var(Var::r(j), e); }

Rational at_one(const LaurentPoly& p)
{
    std::map<Var, Rational> pt;
    for (Var v : p.variables()) pt[v] = 1;
    return p.eval(pt);
}

// Weyl dimension formula prod (lambda + rho, alpha) / (rho, alpha)
Rational weyl_dim(const std::vector<Half>& lam2, WeylType t)
{
    int l = static_cast<int>(lam2.size());
    auto rho = rho2(t, l);
    Rational d = 1;
    for (const auto& a : positive_roots(t, l)) {
        long num = 0, den = 0;
        for (int i = 0; i < l; ++i) {
            num += (lam2[i] + rho[i]) * a[i];
            den += rho[i] * a[i];
        }
        d *= frac(num, den);
    }
    return d;
}

// Apply a signed permutation to the variables of kind `kind`.
LaurentPoly act(const LaurentPoly& p, const SignedPerm& s, char kind)
{
    LaurentPoly out = p;
    int l = static_cast<int>(s.perm.size());
    for (int j = 0; j < l; ++j) out = out.substitute_power({kind, j}, Var::x(j), s.signs[j]);
    for (int j = 0; j < l; ++j) out = out.substitute_power(Var::x(j), {kind, s.perm[j]}, 1);
    return out;
}

std::vector<std::vector<Half>> small_partitions2(int l, bool spin)
{
    std::vector<std::vector<Half>> out;
    auto labs = enumerate_labels(spin ? Algebra::B : Algebra::C, 2 * l, QExp::integer(5));
    for (const auto& lab : labs) {
        auto w = lab.weight2();
        out.push_back(w);
    }
    return out;
}

} // namespace

TEST_CASE("rank one examples")
{
    for (long m = 0; m < 4; ++m) {
        CHECK(character(CharFamily::Sp, std::vector<Half>{2 * m}) == exact_div(z(0, m + 1) - z(0, -m - 1), z(0) - z(0, -1)));
        if (m > 0) CHECK(character(CharFamily::O2l, std::vector<Half>{2 * m}) == z(0, m) + z(0, -m));
    }
    CHECK(character(CharFamily::Sp, std::vector<Half>{0}) == LaurentPoly(1));
    CHECK(character(CharFamily::B, std::vector<Half>{2}) == r(0, 2) + 1 + r(0, -2));
    CHECK(character(CharFamily::O2l, std::vector<Half>{0}) == LaurentPoly(1));
}

TEST_CASE("dominant coefficients")
{
    CHECK(dominant_coefficient(CharFamily::O2l, {2, 0}) == 2);
    CHECK(dominant_coefficient(CharFamily::O2l, {4, 2}) == 1);
    for (const auto& w : small_partitions2(2, false)) CHECK(dominant_coefficient(CharFamily::B, w) == 1);
    for (const auto& w : small_partitions2(3, true)) CHECK(dominant_coefficient(CharFamily::B, w) == 1);
}

TEST_CASE("dimensions match the Weyl dimension formula")
{
    CHECK(at_one(character(CharFamily::Sp, std::vector<Half>{2})) == 2);
    for (int l = 1; l <= 3; ++l) {
        for (const auto& w : small_partitions2(l, false)) {
            CHECK(at_one(character(CharFamily::Sp, w)) == weyl_dim(w, WeylType::C));
            CHECK(at_one(character(CharFamily::B, w)) == weyl_dim(w, WeylType::B));
            Rational so = weyl_dim(w, WeylType::D);
            CHECK(at_one(character(CharFamily::O2l, w)) == (w.back() != 0 ? 2 * so : so));
        }
        for (const auto& w : small_partitions2(l, true)) {
            CHECK(at_one(character(CharFamily::B, w)) == weyl_dim(w, WeylType::B));
            CHECK(at_one(character(CharFamily::Pin, w)) == 2 * weyl_dim(w, WeylType::D));
        }
    }
    // a few classical values
    CHECK(at_one(character(CharFamily::O2l, std::vector<Half>{2, 0})) == 4);
    CHECK(at_one(character(CharFamily::B, std::vector<Half>{1, 1})) == 4);
    CHECK(at_one(character(CharFamily::Sp, std::vector<Half>{2, 2})) == 5);
}

TEST_CASE("weyl group symmetry")
{
    for (int l = 1; l <= 3; ++l) {
        auto wb = weyl_group(WeylType::B, l);
        auto wd = weyl_group(WeylType::D, l);
        for (const auto& w : small_partitions2(l, false)) {
            for (auto f : {CharFamily::O2l, CharFamily::Sp}) {
                auto ch = character(f, w);
                for (const auto& s : wb) CHECK(act(ch, s, 'z') == ch);
            }
            auto chb = character(CharFamily::B, w);
            for (const auto& s : wb) CHECK(act(chb, s, 'r') == chb);
            auto so = character(CharFamily::SO2l, w);
            for (const auto& s : wd) CHECK(act(so, s, 'z') == so);
        }
        for (const auto& w : small_partitions2(l, true)) {
            auto ch = character(CharFamily::Pin, w);
            for (const auto& s : wb) CHECK(act(ch, s, 'r') == ch);
        }
    }
}

TEST_CASE("restriction from O(2l) and Pin(2l)")
{
    for (const auto& w : small_partitions2(2, false)) {
        if (w.back() == 0) continue;
        auto bar = w;
        bar.back() = -bar.back();
        CHECK(character(CharFamily::O2l, w) == character(CharFamily::SO2l, w) + character(CharFamily::SO2l, bar));
    }
    for (const auto& w : small_partitions2(2, true)) {
        auto bar = w;
        bar.back() = -bar.back();
        CHECK(character(CharFamily::Pin, w) == character(CharFamily::SO2l, w) + character(CharFamily::SO2l, bar));
    }
    // lambda_l = 0: the O(2l) character is the SO(2l) one
    CHECK(character(CharFamily::O2l, std::vector<Half>{4, 0}) == character(CharFamily::SO2l, std::vector<Half>{4, 0}));
}

TEST_CASE("monomial Weyl denominator identities")
{
    for (int l = 1; l <= 4; ++l) {
        LaurentPoly wd, wb, wb_plus_check;
        for (const auto& s : weyl_group(WeylType::D, l)) {
            auto v = s.apply(rho2(WeylType::D, l));
            LaurentPoly m(s.sign());
            for (int j = 0; j < l; ++j) m *= z(j, v[j] / 2);
            wd += m;
        }
        for (const auto& s : weyl_group(WeylType::B, l)) {
            auto v = s.apply(rho2(WeylType::B, l));
            LaurentPoly m(s.sign());
            for (int j = 0; j < l; ++j) m *= r(j, v[j]);
            wb += m;
        }
        std::vector<Half> zero(static_cast<std::size_t>(l), 0);
        CHECK(char_denominator(CharFamily::O2l, zero) * Rational(1, 2) == wd);
        CHECK(char_denominator(CharFamily::B, zero) == wb);
        // the variant with "+" inside the B determinant is not the Weyl denominator
        std::vector<Half> rb = rho2(WeylType::B, l);
        CHECK_FALSE(binomial_det(rb, 1, true) == wb);
    }
}

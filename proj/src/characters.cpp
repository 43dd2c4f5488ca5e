#include "fockcorr/characters.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fockcorr {

LaurentPoly z_power(int j, Half h, bool use_r)
{
    if (use_r) return LaurentPoly::var(Var::r(j), h);
    if (h % 2 != 0) throw std::logic_error("half-integer z exponent without r-variables");
    return LaurentPoly::var(Var::z(j), h / 2);
}

LaurentPoly binomial_det(const std::vector<Half>& exps2, int sign, bool use_r)
{
    const int l = static_cast<int>(exps2.size());
    if (l == 0) return LaurentPoly(1);
    std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m[i].push_back(z_power(j, exps2[i], use_r) + z_power(j, -exps2[i], use_r) * Rational(sign));
    // Laplace expansion along rows, memoized on the set of used columns
    std::map<unsigned, LaurentPoly> memo;
    auto rec = [&](auto&& self, int row, unsigned used) -> LaurentPoly {
        if (row == l) return LaurentPoly(1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        LaurentPoly acc;
        int parity = 0;
        for (int j = 0; j < l; ++j) {
            if (used & (1u << j)) continue;
            if (!m[row][j].is_zero()) {
                LaurentPoly sub = self(self, row + 1, used | (1u << j));
                if (!sub.is_zero()) {
                    LaurentPoly term = m[row][j] * sub;
                    if (parity % 2) acc -= term;
                    else acc += term;
                }
            }
            ++parity;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return rec(rec, 0, 0u);
}

namespace {

std::vector<Half> shifted(const std::vector<Half>& w, Half extra)
{
    const Half l = static_cast<Half>(w.size());
    std::vector<Half> out;
    for (Half i = 1; i <= l; ++i) out.push_back(w[static_cast<std::size_t>(i - 1)] + 2 * (l - i) + extra);
    return out;
}

Half rho_shift(CharFamily f)
{
    switch (f) {
    case CharFamily::B: return 1;
    case CharFamily::Sp: return 2;
    default: return 0;
    }
}

int det_sign(CharFamily f)
{
    return (f == CharFamily::B || f == CharFamily::Sp) ? -1 : 1;
}

} // namespace

bool family_uses_r(CharFamily f, const std::vector<Half>& weight2)
{
    if (f == CharFamily::B) return true;
    for (Half h : weight2)
        if (h % 2 != 0) return true;
    return false;
}

LaurentPoly char_numerator(CharFamily f, const std::vector<Half>& weight2)
{
    bool r = family_uses_r(f, weight2);
    auto e = shifted(weight2, rho_shift(f));
    if (f == CharFamily::SO2l) return binomial_det(e, 1, r) + binomial_det(e, -1, r);
    return binomial_det(e, det_sign(f), r);
}

LaurentPoly char_denominator(CharFamily f, const std::vector<Half>& weight2)
{
    bool r = family_uses_r(f, weight2);
    std::vector<Half> zero(weight2.size(), 0);
    return binomial_det(shifted(zero, rho_shift(f)), det_sign(f), r);
}

LaurentPoly character(CharFamily f, const std::vector<Half>& weight2)
{
    static std::mutex mu;
    static std::map<std::pair<int, std::vector<Half>>, LaurentPoly> cache;
    auto key = std::make_pair(static_cast<int>(f), weight2);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    LaurentPoly num = char_numerator(f, weight2);
    bool doubled = f == CharFamily::Pin || (f == CharFamily::O2l && !weight2.empty() && weight2.back() != 0);
    if (doubled) num *= Rational(2);
    LaurentPoly ch = exact_div(num, char_denominator(f, weight2));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, ch);
    return ch;
}

LaurentPoly character(CharFamily f, const ModuleLabel& label)
{
    label.validate();
    bool ok = false;
    switch (f) {
    case CharFamily::SO2l:
    case CharFamily::O2l: ok = label.algebra == Algebra::D && !label.half_level(); break;
    case CharFamily::B: ok = (label.algebra == Algebra::D || label.algebra == Algebra::B) && label.half_level(); break;
    case CharFamily::Sp: ok = label.algebra == Algebra::C; break;
    case CharFamily::Pin: ok = label.algebra == Algebra::B && !label.half_level(); break;
    }
    if (!ok) throw std::invalid_argument("label does not belong to this character family");
    return character(f, label.weight2());
}

Rational dominant_coefficient(CharFamily f, const std::vector<Half>& weight2)
{
    bool r = family_uses_r(f, weight2);
    auto e = shifted(weight2, rho_shift(f));
    Monomial m;
    for (std::size_t j = 0; j < e.size(); ++j) {
        LaurentPoly x = z_power(static_cast<int>(j), e[j], r);
        m = m * x.terms().begin()->first;
    }
    LaurentPoly num = char_numerator(f, weight2);
    auto it = num.terms().find(m);
    return it == num.terms().end() ? Rational(0) : it->second;
}

} // namespace fockcorr

#include "fockcorr/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fockcorr {

int SignedPerm::sign() const
{
    // sgn(perm) by counting inversions, times the product of the signs
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) s = -s;
    for (int e : signs) s *= e;
    return s;
}

std::vector<Half> SignedPerm::apply(const std::vector<Half>& v) const
{
    std::vector<Half> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(perm[i])] = signs[i] * v[i];
    return out;
}

std::vector<SignedPerm> weyl_group(WeylType t, int l)
{
    if (l < 0) throw std::invalid_argument("weyl_group: negative rank");
    std::vector<SignedPerm> out;
    std::vector<int> p(static_cast<std::size_t>(l));
    std::iota(p.begin(), p.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << l); ++mask) {
            SignedPerm s{p, std::vector<int>(static_cast<std::size_t>(l), 1)};
            int flips = 0;
            for (int i = 0; i < l; ++i)
                if (mask & (1u << i)) {
                    s.signs[static_cast<std::size_t>(i)] = -1;
                    ++flips;
                }
            if (t == WeylType::D && flips % 2 != 0) continue;
            out.push_back(std::move(s));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<int>> positive_roots(WeylType t, int l)
{
    std::vector<std::vector<int>> roots;
    auto unit = [l] { return std::vector<int>(static_cast<std::size_t>(l), 0); };
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            auto a = unit(), b = unit();
            a[i] = 1;
            a[j] = -1;
            b[i] = 1;
            b[j] = 1;
            roots.push_back(a);
            roots.push_back(b);
        }
    if (t != WeylType::D)
        for (int i = 0; i < l; ++i) {
            auto a = unit();
            a[i] = t == WeylType::B ? 1 : 2;
            roots.push_back(a);
        }
    return roots;
}

int reduced_length(const SignedPerm& s, WeylType t)
{
    int len = 0;
    for (const auto& a : positive_roots(t, static_cast<int>(s.perm.size()))) {
        std::vector<Half> v(a.begin(), a.end());
        auto w = s.apply(v);
        auto first = std::find_if(w.begin(), w.end(), [](Half x) { return x != 0; });
        if (*first < 0) ++len;
    }
    return len;
}

std::vector<Half> rho2(WeylType t, int l)
{
    std::vector<Half> r;
    for (int i = 1; i <= l; ++i) {
        switch (t) {
        case WeylType::D: r.push_back(2 * (l - i)); break;
        case WeylType::B: r.push_back(2 * (l - i) + 1); break;
        case WeylType::C: r.push_back(2 * (l - i + 1)); break;
        }
    }
    return r;
}

namespace {

void check_dominant(const std::vector<Half>& lam, WeylType t, int l)
{
    if (static_cast<int>(lam.size()) != l) throw std::invalid_argument("weight has the wrong length");
    for (int i = 0; i + 1 < l; ++i) {
        Half next = (t == WeylType::D && i + 2 == l) ? std::abs(lam[i + 1]) : lam[i + 1];
        if (lam[i] < next) throw std::invalid_argument("weight is not dominant");
    }
    if (t != WeylType::D && l > 0 && lam.back() < 0) throw std::invalid_argument("weight is not dominant");
    // integral or all half-integral
    for (Half h : lam)
        if ((h - lam[0]) % 2 != 0) throw std::invalid_argument("weight mixes integers and half-integers");
}

} // namespace

std::vector<WeylTerm> weyl_sum(const std::vector<Half>& lambda2, WeylType t, int l)
{
    check_dominant(lambda2, t, l);
    auto rho = rho2(t, l);
    std::vector<WeylTerm> out;
    for (const auto& s : weyl_group(t, l)) {
        auto sr = s.apply(rho);
        WeylTerm w{s.sign(), QExp(), {}};
        for (int i = 0; i < l; ++i) {
            Half k = lambda2[i] + rho[i] - sr[i];
            w.k2.push_back(k);
            w.qexp += half_square_exp(k);
        }
        out.push_back(std::move(w));
    }
    return out;
}

QSeries<Rational> weyl_sum_series(const std::vector<Half>& lambda2, WeylType t, int l, QExp order)
{
    QSeries<Rational> out(order);
    for (const auto& w : weyl_sum(lambda2, t, l)) out.add_term(w.qexp, Rational(w.sign));
    return out;
}

QSeries<Rational> weyl_sum_product_form(const std::vector<Half>& lambda2, WeylType t, int l, QExp order)
{
    check_dominant(lambda2, t, l);
    auto rho = rho2(t, l);
    QExp lead;
    for (Half h : lambda2) lead += half_square_exp(h);
    QSeries<Rational> out = QSeries<Rational>::monomial(lead, 1, order);
    for (const auto& a : positive_roots(t, l)) {
        Half pair2 = 0; // twice (lambda + rho, alpha)
        for (int i = 0; i < l; ++i) pair2 += (lambda2[i] + rho[i]) * a[i];
        if (pair2 <= 0) throw std::logic_error("non-positive root pairing");
        QSeries<Rational> f = QSeries<Rational>::constant(1);
        f.add_term(QExp::half(pair2), -1);
        out = (out * f).truncated(order);
    }
    return out;
}

} // namespace fockcorr

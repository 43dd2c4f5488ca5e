#pragma once

#include "fockcorr/qexp.hpp"
#include "fockcorr/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fockcorr {

// Truncated series sum c_e q^e; all coefficients with e < trunc are known.
// trunc == infinite means the series is exact (finite sum).
template <class R>
class QSeries {
public:
    using Terms = std::map<QExp, R>;

    QSeries() : trunc_(QExp::infinite()) {}
    explicit QSeries(QExp trunc) : trunc_(trunc) {}
    static QSeries constant(const R& c, QExp trunc = QExp::infinite()) { return monomial(QExp(), c, trunc); }
    static QSeries monomial(QExp e, const R& c, QExp trunc = QExp::infinite())
    {
        QSeries s(trunc);
        if (e < trunc && !Ring<R>::is_zero(c)) s.terms_.emplace(e, c);
        return s;
    }

    const Terms& terms() const { return terms_; }
    QExp trunc() const { return trunc_; }
    bool is_exact() const { return trunc_.is_infinite(); }
    bool is_zero() const { return terms_.empty(); }
    // Lowest stored exponent, or trunc when nothing is stored.
    QExp ord() const { return terms_.empty() ? trunc_ : terms_.begin()->first; }

    R coeff(QExp e) const
    {
        if (e >= trunc_) throw std::out_of_range("coefficient at q^" + e.str() + " is beyond truncation " + trunc_.str());
        auto it = terms_.find(e);
        return it == terms_.end() ? R() : it->second;
    }

    // Adds c q^e (ignored at or beyond trunc).
    void add_term(QExp e, const R& c)
    {
        if (e >= trunc_ || Ring<R>::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (Ring<R>::is_zero(it->second)) terms_.erase(it);
        }
    }

    QSeries truncated(QExp t) const
    {
        if (t >= trunc_) return *this;
        QSeries out(t);
        for (auto it = terms_.begin(); it != terms_.end() && it->first < t; ++it) out.terms_.emplace_hint(out.terms_.end(), *it);
        return out;
    }

    QSeries shifted(QExp d) const
    {
        QSeries out(trunc_ + d);
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + d, c);
        return out;
    }

    template <class F>
    auto map(F&& f) const -> QSeries<std::decay_t<decltype(f(std::declval<const R&>()))>>
    {
        using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
        QSeries<S> out(trunc_);
        for (const auto& [e, c] : terms_) out.add_term(e, f(c));
        return out;
    }

    QSeries operator-() const
    {
        QSeries out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    QSeries& operator+=(const QSeries& o)
    {
        if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
        for (const auto& [e, c] : o.terms_) {
            if (e >= trunc_) break;
            add_term(e, c);
        }
        return *this;
    }
    QSeries& operator-=(const QSeries& o) { return *this += -o; }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

    QSeries& operator*=(const R& c)
    {
        if (Ring<R>::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend QSeries operator*(QSeries a, const R& c) { return a *= c; }
    friend QSeries operator*(const R& c, QSeries a) { return a *= c; }

    friend QSeries operator*(const QSeries& a, const QSeries& b)
    {
        QExp t = std::min(a.trunc_ + b.ord(), b.trunc_ + a.ord());
        QSeries out(t);
        if (a.terms_.empty() || b.terms_.empty()) return out;
        QExp ob = b.terms_.begin()->first;
        for (const auto& [ea, ca] : a.terms_) {
            if (ea + ob >= t) break;
            for (const auto& [eb, cb] : b.terms_) {
                QExp e = ea + eb;
                if (e >= t) break;
                auto [it, inserted] = out.terms_.try_emplace(e, ca);
                if (inserted)
                    it->second *= cb;
                else
                    it->second += ca * cb;
            }
        }
        std::erase_if(out.terms_, [](const auto& kv) { return Ring<R>::is_zero(kv.second); });
        return out;
    }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    // Structural equality: same truncation and same coefficients.
    bool operator==(const QSeries& o) const { return trunc_ == o.trunc_ && terms_ == o.terms_; }

    // First exponent below `upto` (and below both truncations) where the two differ.
    std::optional<QExp> first_mismatch(const QSeries& o, QExp upto = QExp::infinite()) const
    {
        QExp t = std::min({upto, trunc_, o.trunc_});
        auto ia = terms_.begin();
        auto ib = o.terms_.begin();
        while (true) {
            bool ea = ia == terms_.end() || ia->first >= t;
            bool eb = ib == o.terms_.end() || ib->first >= t;
            if (ea && eb) return std::nullopt;
            if (eb || (!ea && ia->first < ib->first)) return ia->first;
            if (ea || ib->first < ia->first) return ib->first;
            if (!(ia->second == ib->second)) return ia->first;
            ++ia;
            ++ib;
        }
    }
    bool agrees(const QSeries& o, QExp upto = QExp::infinite()) const { return !first_mismatch(o, upto); }

    std::string str() const
    {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            bool atom = Ring<R>::is_atom(c);
            if (e == QExp()) {
                os << (atom ? Ring<R>::str(c) : "(" + Ring<R>::str(c) + ")");
                continue;
            }
            os << (atom ? Ring<R>::str(c) : "(" + Ring<R>::str(c) + ")") << "*q";
            if (e != QExp::integer(1)) os << "^" << (e.to_rational().get_den() == 1 ? e.str() : "(" + e.str() + ")");
        }
        if (!trunc_.is_infinite()) {
            if (!first) os << " + ";
            os << "O(q^" << (trunc_.to_rational().get_den() == 1 ? trunc_.str() : "(" + trunc_.str() + ")") << ")";
        } else if (first) {
            os << "0";
        }
        return os.str();
    }

private:
    Terms terms_;
    QExp trunc_;
    template <class S>
    friend class QSeries;
};

// Multiplicative inverse. The leading coefficient must be a unit; exact
// inputs with more than one term need a finite `order`.
template <class R>
QSeries<R> series_inv(const QSeries<R>& a, QExp order = QExp::infinite())
{
    if (a.is_zero()) throw std::domain_error("inverse of a zero series");
    auto lead = a.terms().begin();
    QExp e0 = lead->first;
    if (!Ring<R>::is_unit(lead->second)) throw std::domain_error("non-unit leading coefficient");
    R inv0 = Ring<R>::inverse(lead->second);
    QExp t = std::min(a.trunc() - e0 - e0, order);
    if (a.terms().size() == 1) return QSeries<R>::monomial(-e0, inv0, t);
    if (t.is_infinite()) throw std::domain_error("inverse of a non-monomial exact series needs an order");
    // all exponents lie on the grid e0 + d*Z
    std::int64_t d = 0;
    for (const auto& [e, c] : a.terms()) d = std::gcd(d, e.sixteenths() - e0.sixteenths());
    std::vector<std::pair<std::int64_t, const R*>> rel;
    for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it)
        rel.emplace_back((it->first.sixteenths() - e0.sixteenths()) / d, &it->second);
    std::int64_t span = t.sixteenths() + e0.sixteenths();
    std::int64_t count = span <= 0 ? 0 : (span + d - 1) / d;
    // known trunc of a limits the relative depth as well
    std::vector<R> b(static_cast<std::size_t>(count));
    QSeries<R> out(t);
    for (std::int64_t m = 0; m < count; ++m) {
        R acc;
        if (m == 0) {
            acc = inv0;
        } else {
            for (const auto& [mj, cj] : rel) {
                if (mj > m) break;
                const R& bm = b[static_cast<std::size_t>(m - mj)];
                if (Ring<R>::is_zero(bm)) continue;
                acc += *cj * bm;
            }
            if (!Ring<R>::is_zero(acc)) acc = -(acc * inv0);
        }
        b[static_cast<std::size_t>(m)] = acc;
        out.add_term(QExp::from_sixteenths(-e0.sixteenths() + m * d), acc);
    }
    return out;
}

template <class R>
QSeries<R> series_pow(const QSeries<R>& a, long k, QExp order = QExp::infinite())
{
    if (k < 0) return series_pow(series_inv(a, order), -k, order);
    QSeries<R> out = QSeries<R>::constant(R(1), order), base = a.truncated(order);
    while (k > 0) {
        if (k & 1) out = (out * base).truncated(order);
        k >>= 1;
        if (k) base = (base * base).truncated(order);
    }
    return out;
}

// prod_{r >= 0} (1 - prefix q^{qshift + r step}) below q^order.
template <class R>
QSeries<R> pochhammer(const R& prefix, QExp qshift, QExp step, QExp order)
{
    if (step <= QExp()) throw std::invalid_argument("pochhammer: step must be positive");
    if (qshift < QExp()) throw std::invalid_argument("pochhammer: negative q-shift");
    if (order.is_infinite()) throw std::invalid_argument("pochhammer: order must be finite");
    if (qshift == QExp() && Ring<R>::is_zero(R(1) - prefix)) throw std::domain_error("pochhammer: factor (1 - 1) vanishes");
    QSeries<R> p = QSeries<R>::constant(R(1), order);
    R neg = -prefix;
    for (QExp e = qshift; e < order || e == QExp(); e += step) {
        QSeries<R> add(order);
        for (const auto& [f, c] : p.terms()) {
            QExp g = f + e;
            if (g >= order) break;
            add.add_term(g, c * neg);
        }
        p += add;
        if (e == QExp() && !(e < order)) break;
    }
    return p;
}

// sum over k in Z (or 1/2 + Z when half_offsets) with k^2/2 < order of weight(k) q^{k^2/2};
// weight receives h = 2k.
template <class R>
QSeries<R> lattice_sum(bool half_offsets, const std::function<R(Half)>& weight, QExp order)
{
    if (order.is_infinite()) throw std::invalid_argument("lattice_sum: order must be finite");
    QSeries<R> out(order);
    for (Half h = half_offsets ? 1 : 0; half_square_exp(h) < order; h += 2) {
        out.add_term(half_square_exp(h), weight(h));
        if (h != 0) out.add_term(half_square_exp(h), weight(-h));
    }
    return out;
}

} // namespace fockcorr

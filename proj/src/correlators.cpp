#include "fockcorr/correlators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fockcorr {

namespace {

const Var S1 = Var::s(0);

LaurentPoly s1(long e = 1) { return LaurentPoly::var(S1, e); }

template <class T>
QSeries<T> lift_rational(const QSeries<Rational>& a)
{
    return a.map([](const Rational& c) { return T(c); });
}

std::mutex theta_mu;
std::map<std::pair<int, std::int64_t>, QSeries<LaurentPoly>> theta_cache;
std::map<std::int64_t, QSeries<LaurentPoly>> tilde_inv_cache;

// sum_{m >= 0} x^m q^{m e}, i.e. 1/(1 - x q^e) with e > 0
QSeries<LaurentPoly> geometric(const LaurentPoly& x, QExp e, QExp order)
{
    QSeries<LaurentPoly> out(order);
    LaurentPoly p(1);
    for (QExp f; f < order; f += e) {
        out.add_term(f, p);
        p *= x;
    }
    return out;
}

} // namespace

QSeries<Rational> qpoch(const Rational& prefix, QExp shift, QExp step, QExp order)
{
    return pochhammer<Rational>(prefix, shift, step, order);
}

QSeries<LaurentPoly> theta_tilde(QExp order)
{
    const QExp one = QExp::integer(1);
    auto a = pochhammer<LaurentPoly>(s1(2), one, one, order);
    auto b = pochhammer<LaurentPoly>(s1(-2), one, one, order);
    auto e = lift_rational<LaurentPoly>(series_pow(euler_qq(order), -2, order));
    return (a * b * e).truncated(order);
}

QSeries<LaurentPoly> theta_tilde_inv(QExp order)
{
    {
        std::lock_guard<std::mutex> lock(theta_mu);
        if (auto it = tilde_inv_cache.find(order.sixteenths()); it != tilde_inv_cache.end()) return it->second;
    }
    auto inv = series_inv(theta_tilde(order), order);
    std::lock_guard<std::mutex> lock(theta_mu);
    tilde_inv_cache.emplace(order.sixteenths(), inv);
    return inv;
}

QSeries<LaurentPoly> theta(QExp order)
{
    return theta_k(0, order);
}

QSeries<LaurentPoly> theta_k(int k, QExp order)
{
    if (k < 0) throw std::invalid_argument("theta_k: k must be nonnegative");
    auto key = std::make_pair(k, order.sixteenths());
    {
        std::lock_guard<std::mutex> lock(theta_mu);
        if (auto it = theta_cache.find(key); it != theta_cache.end()) return it->second;
    }
    QSeries<LaurentPoly> out;
    if (k == 0) {
        out = theta_tilde(order) * (s1() - s1(-1));
    } else {
        // t d/dt = (s/2) d/ds
        out = theta_k(k - 1, order).map([](const LaurentPoly& c) { return c.euler(S1, Rational(1, 2)); });
    }
    std::lock_guard<std::mutex> lock(theta_mu);
    theta_cache.emplace(key, out);
    return out;
}

Rational ArgTraits<Rational>::inverse(const Rational& a)
{
    if (a == 0) throw PoleError("t = 0");
    return 1 / a;
}

Rational ArgTraits<Rational>::specialize(const LaurentPoly& p, const Rational& a)
{
    Rational out = 0;
    for (const auto& [m, c] : p.terms()) out += c * rat_pow(a, m.exponent(S1));
    return out;
}

Rational ArgTraits<Rational>::reciprocal_gap(const Rational& a)
{
    Rational d = a - 1 / a;
    if (d == 0) throw PoleError("a partial product of the t_i equals 1");
    return 1 / d;
}

LaurentPoly ArgTraits<RationalFunction>::specialize(const LaurentPoly& p, const LaurentPoly& a)
{
    return p.substitute(S1, a);
}

RationalFunction ArgTraits<RationalFunction>::reciprocal_gap(const LaurentPoly& a)
{
    if (a.is_constant() && (a.constant_term() == 1 || a.constant_term() == -1))
        throw PoleError("a partial product of the t_i equals 1");
    return RationalFunction::make(a, a * a - 1);
}

std::vector<LaurentPoly> symbolic_args(int n)
{
    std::vector<LaurentPoly> out;
    for (int i = 0; i < n; ++i) out.push_back(LaurentPoly::var(Var::s(i)));
    return out;
}

template <class R>
Correlators<R>::Correlators(std::vector<Arg> args, QExp order) : args_(std::move(args)), order_(order)
{
    if (order.is_infinite()) throw std::invalid_argument("correlators need a finite order");
    if (args_.size() > 16) throw std::invalid_argument("too many points");
}

template <class R>
Correlators<R>& Correlators<R>::sub(unsigned mask)
{
    if (mask == (1u << n()) - 1) return *this;
    auto it = sub_.find(mask);
    if (it == sub_.end()) {
        std::vector<Arg> a;
        for (int i = 0; i < n(); ++i)
            if (mask & (1u << i)) a.push_back(args_[i]);
        it = sub_.emplace(mask, std::make_unique<Correlators>(a, order_)).first;
    }
    return *it->second;
}

template <class R>
QSeries<R> Correlators<R>::f_bo(unsigned eps_mask)
{
    if (auto it = fbo_.find(eps_mask); it != fbo_.end()) return it->second;
    using T = ArgTraits<R>;
    const int nn = n();
    auto qq_inv = series_inv(euler_qq(order_), order_);
    QSeries<R> total(order_);
    if (nn == 0) {
        total = lift_rational<R>(qq_inv);
        fbo_.emplace(eps_mask, total);
        return total;
    }
    std::vector<Arg> a;
    for (int i = 0; i < nn; ++i) a.push_back((eps_mask & (1u << i)) ? T::inverse(args_[i]) : args_[i]);

    // specializations are shared between permutations: key (k, subset)
    std::map<std::pair<int, unsigned>, QSeries<Inner>> spec;
    auto product = [&](unsigned subset) {
        Arg p(1);
        for (int i = 0; i < nn; ++i)
            if (subset & (1u << i)) p *= a[i];
        return p;
    };
    // k = -1 stands for theta_tilde_inv
    auto special = [&](int k, unsigned subset) -> const QSeries<Inner>& {
        auto key = std::make_pair(k, subset);
        auto it = spec.find(key);
        if (it != spec.end()) return it->second;
        Arg p = product(subset);
        QSeries<LaurentPoly> src = k < 0 ? theta_tilde_inv(order_) : theta_k(k, order_);
        return spec.emplace(key, src.map([&](const LaurentPoly& c) { return T::specialize(c, p); })).first->second;
    };

    std::vector<int> perm(static_cast<std::size_t>(nn));
    std::iota(perm.begin(), perm.end(), 0);
    Rational fact[17];
    fact[0] = 1;
    for (int k = 1; k <= 16; ++k) fact[k] = fact[k - 1] * k;
    do {
        std::vector<unsigned> prefix(static_cast<std::size_t>(nn) + 1, 0u);
        for (int m = 1; m <= nn; ++m) prefix[m] = prefix[m - 1] | (1u << perm[m - 1]);
        // Laplace expansion of det(M) with M_ij = theta^{(j-i+1)}(prefix[n-j]) / (j-i+1)!
        std::map<unsigned, QSeries<Inner>> memo;
        auto det = [&](auto&& self, int row, unsigned used) -> QSeries<Inner> {
            if (row > nn) return QSeries<Inner>::constant(Inner(1), order_);
            if (auto it = memo.find(used); it != memo.end()) return it->second;
            QSeries<Inner> acc(order_);
            int parity = 0;
            for (int j = 1; j <= nn; ++j) {
                if (used & (1u << j)) continue;
                int k = j - row + 1;
                if (k >= 0) {
                    QSeries<Inner> minor = self(self, row + 1, used | (1u << j));
                    if (!minor.is_zero()) {
                        QSeries<Inner> term = (special(k, prefix[nn - j]) * minor).truncated(order_);
                        term *= Inner(Rational(Rational(parity % 2 ? -1 : 1) / fact[k]));
                        acc += term;
                    }
                }
                ++parity;
            }
            memo.emplace(used, acc);
            return acc;
        };
        QSeries<Inner> term = det(det, 1, 0u);
        R gap(1);
        for (int m = 1; m <= nn; ++m) {
            term = (term * special(-1, prefix[m])).truncated(order_);
            gap *= T::reciprocal_gap(product(prefix[m]));
        }
        QSeries<R> lifted = term.map([](const Inner& c) { return T::lift(c); });
        total += lifted * gap;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total = (total * lift_rational<R>(qq_inv)).truncated(order_);
    fbo_.emplace(eps_mask, total);
    return total;
}

template <class R>
QSeries<R> Correlators<R>::eps_sum(Half k2)
{
    if (auto it = eps_.find(k2); it != eps_.end()) return it->second;
    using T = ArgTraits<R>;
    QSeries<R> out(order_);
    for (unsigned mask = 0; mask < (1u << n()); ++mask) {
        Arg p(1);
        int sign = 1;
        for (int i = 0; i < n(); ++i) {
            if (mask & (1u << i)) {
                p *= T::inverse(args_[i]);
                sign = -sign;
            } else {
                p *= args_[i];
            }
        }
        R w = T::arg_pow(p, k2);
        if (sign < 0) w = -w;
        out += f_bo(mask) * w;
    }
    eps_.emplace(k2, out);
    return out;
}

template <class R>
std::map<Half, QSeries<R>> Correlators<R>::graded_trace(bool ramond)
{
    std::map<Half, QSeries<R>> out;
    for (Half h = ramond ? 1 : 0; half_square_exp(h) < order_; h += 2) {
        for (Half k2 : {h, -h}) {
            if (out.count(k2)) continue;
            out.emplace(k2, eps_sum(k2).shifted(half_square_exp(k2)).truncated(order_));
        }
    }
    return out;
}

template <class R>
QSeries<R> Correlators<R>::graded_trace_at_one(bool ramond)
{
    QSeries<R> out(order_);
    for (const auto& [k2, s] : graded_trace(ramond)) out += s;
    return out;
}

template <class R>
QSeries<R> Correlators<R>::half_rec(char sector, unsigned mask)
{
    auto& memo = half_[sector == 'D' ? 0 : 1];
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const QExp one = QExp::integer(1), half = QExp::half(1);
    QSeries<R> out;
    if (sector == 'D') {
        auto base = qpoch(-1, half, one, order_);
        if (mask == 0) {
            out = lift_rational<R>(base);
        } else {
            QSeries<R> acc = sub(mask).graded_trace_at_one(false);
            for (unsigned j = (mask - 1) & mask; j != 0; j = (j - 1) & mask) acc -= half_rec(sector, j) * half_rec(sector, mask & ~j);
            out = (acc * lift_rational<R>(series_inv(base, order_))).truncated(order_) * R(Rational(1, 2));
        }
    } else {
        // the q^{-1/16} shift costs 1/16 of precision; the caller's order is
        // raised by 1/16 through a dedicated sub-object (see half_level_base)
        auto base = qpoch(-1, one, one, order_).shifted(QExp::from_sixteenths(1)).truncated(order_);
        if (mask == 0) {
            out = lift_rational<R>(base);
        } else {
            QSeries<R> acc = sub(mask).graded_trace_at_one(true) * R(Rational(1, 2));
            for (unsigned j = (mask - 1) & mask; j != 0; j = (j - 1) & mask) acc -= half_rec(sector, j) * half_rec(sector, mask & ~j);
            auto inv = series_inv(qpoch(-1, one, one, order_), order_);
            out = (acc * lift_rational<R>(inv)).shifted(-QExp::from_sixteenths(1)) * R(Rational(1, 2));
            out = out.truncated(order_ - QExp::from_sixteenths(1));
        }
    }
    memo.emplace(mask, out);
    return out;
}

template <class R>
QSeries<R> Correlators<R>::half_level_base(char sector)
{
    if (sector != 'D' && sector != 'B') throw std::invalid_argument("half_level_base: sector must be D or B");
    unsigned full = (1u << n()) - 1;
    if (sector == 'D') return half_rec('D', full);
    // run the B recursion one sixteenth deeper
    auto it = sub_.find(~0u);
    if (it == sub_.end()) it = sub_.emplace(~0u, std::make_unique<Correlators>(args_, order_ + QExp::from_sixteenths(1))).first;
    return it->second->half_rec('B', full).truncated(order_);
}

template <class R>
QSeries<R> Correlators<R>::weyl_correlator(const std::vector<Half>& lambda2, WeylType t)
{
    const int l = static_cast<int>(lambda2.size());
    QSeries<R> out(order_);
    for (const auto& w : weyl_sum(lambda2, t, l)) {
        if (w.qexp >= order_) continue;
        QSeries<R> term = QSeries<R>::monomial(w.qexp, R(w.sign), order_);
        for (Half k : w.k2) term = (term * eps_sum(k)).truncated(order_);
        out += term;
    }
    return out;
}

template <class R>
QSeries<R> Correlators<R>::npoint(const ModuleLabel& label)
{
    label.validate();
    auto w = label.weight2();
    switch (label.algebra) {
    case Algebra::A: return a_npoint(label.parts);
    case Algebra::C: return weyl_correlator(w, WeylType::C);
    case Algebra::D:
        if (!label.half_level()) return weyl_correlator(w, WeylType::D);
        return (half_level_base('D') * weyl_correlator(w, WeylType::B)).truncated(order_);
    case Algebra::B:
        if (!label.half_level()) return weyl_correlator(w, WeylType::D);
        return (half_level_base('B') * weyl_correlator(w, WeylType::B)).truncated(order_);
    }
    throw std::logic_error("unreachable");
}

template <class R>
QSeries<R> Correlators<R>::a_npoint(const std::vector<long>& lambda)
{
    using T = ArgTraits<R>;
    const long l = static_cast<long>(lambda.size());
    for (long i = 1; i < l; ++i)
        if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("type a weight must be weakly decreasing");
    long sz = 0, nrm = 0;
    for (long x : lambda) {
        sz += x;
        nrm += x * x;
    }
    Arg p(1);
    for (const auto& a : args_) p *= a;
    QSeries<R> out = QSeries<R>::monomial(QExp::half(nrm), T::arg_pow(p, 2 * sz), order_);
    for (long i = 0; i < l; ++i)
        for (long j = i + 1; j < l; ++j) {
            QSeries<R> f = QSeries<R>::constant(R(1));
            f.add_term(QExp::integer(lambda[i] - lambda[j] + j - i), R(-1));
            out = (out * f).truncated(order_);
        }
    QSeries<R> fb = f_bo(0);
    for (long i = 0; i < l; ++i) out = (out * fb).truncated(order_);
    return out;
}

template class Correlators<Rational>;
template class Correlators<RationalFunction>;

QSeries<Rational> level_prefactor(const ModuleLabel& label, QExp order)
{
    const QExp one = QExp::integer(1);
    auto out = series_pow(euler_qq(order), -label.rank(), order);
    if (label.half_level()) {
        if (label.algebra == Algebra::D) out = (out * qpoch(-1, QExp::half(1), one, order)).truncated(order);
        else out = (out * qpoch(-1, one, one, order).shifted(QExp::from_sixteenths(1))).truncated(order);
    }
    return out;
}

QDim qdim_forms(const ModuleLabel& label, QExp order)
{
    label.validate();
    auto w = label.weight2();
    const int l = label.rank();
    QDim d;
    if (label.algebra == Algebra::A) {
        Correlators<Rational> c({}, order);
        d.weyl_form = c.a_npoint(label.parts);
        QSeries<Rational> p = QSeries<Rational>::monomial(QExp::half(norm2(label.parts)), 1, order);
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) {
                QSeries<Rational> f = QSeries<Rational>::constant(1);
                f.add_term(QExp::integer(label.parts[i] - label.parts[j] + j - i), -1);
                p = (p * f).truncated(order);
            }
        d.product_form = (p * series_pow(euler_qq(order), -l, order)).truncated(order);
    } else {
        WeylType t = WeylType::D;
        if (label.algebra == Algebra::C) t = WeylType::C;
        else if (label.half_level()) t = WeylType::B;
        auto pre = level_prefactor(label, order);
        d.weyl_form = (pre * weyl_sum_series(w, t, l, order)).truncated(order);
        d.product_form = (pre * weyl_sum_product_form(w, t, l, order)).truncated(order);
    }
    if (!d.weyl_form.agrees(d.product_form)) throw std::logic_error("q-dimension forms disagree for " + label.str());
    return d;
}

QSeries<Rational> qdim(const ModuleLabel& label, QExp order)
{
    return qdim_forms(label, order).weyl_form;
}

namespace {

using RF = RationalFunction;

QSeries<RF> to_rf(const QSeries<LaurentPoly>& a)
{
    return a.map([](const LaurentPoly& c) { return RF(c); });
}

// 1/((q;q) Theta(t)) in s1
QSeries<RF> one_point_level1(QExp order)
{
    auto l = theta_tilde_inv(order) * lift_rational<LaurentPoly>(series_inv(euler_qq(order), order));
    return to_rf(l.truncated(order)) * RF::make(LaurentPoly(1), s1() - s1(-1));
}

} // namespace

QSeries<RationalFunction> normal_g(QExp order)
{
    const QExp one = QExp::integer(1);
    QSeries<LaurentPoly> sum(order);
    for (long n = 1; QExp::integer(2 * n - 1) < order; ++n) {
        QExp e = QExp::integer(2 * n - 1);
        auto term = geometric(LaurentPoly(1), e, order).shifted(e).truncated(order) * (s1(-(2 * n - 1)) - s1(2 * n - 1));
        sum += term;
    }
    auto qq2 = lift_rational<LaurentPoly>(qpoch(1, one, QExp::integer(2), order));
    return to_rf((qq2 * sum).truncated(order) * LaurentPoly(2));
}

QSeries<RationalFunction> refined_g(QExp order)
{
    auto qq2 = lift_rational<RF>(qpoch(1, QExp::integer(1), QExp::integer(2), order));
    return normal_g(order) + qq2 * RF::make(LaurentPoly(2), s1() - s1(-1));
}

QSeries<RationalFunction> refined_level1(int sign, QExp order)
{
    const QExp one = QExp::integer(1);
    // sum_r q^{r+1} t^{-1/2}/(1 - q^{2(r+1)} t^{-1}) - q^{r+1} t^{1/2}/(1 - q^{2(r+1)} t)
    QSeries<LaurentPoly> sum(order);
    for (long r = 0; QExp::integer(r + 1) < order; ++r) {
        QExp a = QExp::integer(r + 1), b = QExp::integer(2 * (r + 1));
        sum += (geometric(s1(-2), b, order) * s1(-1)).shifted(a).truncated(order);
        sum -= (geometric(s1(2), b, order) * s1()).shifted(a).truncated(order);
    }
    auto qq2 = lift_rational<RF>(qpoch(1, one, QExp::integer(2), order));
    auto bracket = to_rf(sum) + QSeries<RF>::constant(RF::make(LaurentPoly(1), s1() - s1(-1)), order);
    return one_point_level1(order) + (qq2 * bracket).truncated(order) * RF(sign);
}

QSeries<RationalFunction> refined_level1_logform(int sign, int log_sign, QExp order)
{
    const QExp one = QExp::integer(1), zero;
    // P = (-t^{-1/2};q)(-q t^{1/2};q) / ((t^{-1/2};q)(q t^{1/2};q))
    auto num = pochhammer<RF>(RF(-s1(-1)), zero, one, order) * pochhammer<RF>(RF(-s1()), one, one, order);
    auto den = pochhammer<RF>(RF(s1(-1)), zero, one, order) * pochhammer<RF>(RF(s1()), one, one, order);
    auto P = (num.truncated(order) * series_inv(den.truncated(order), order)).truncated(order);
    auto EP = P.map([](const RF& c) { return c.euler(S1, Rational(1, 2)); });
    auto logder = (EP * series_inv(P, order)).truncated(order);
    auto qq2 = lift_rational<RF>(qpoch(1, one, QExp::integer(2), order));
    return one_point_level1(order) + (qq2 * logder).truncated(order) * RF(sign * log_sign);
}

QSeries<LaurentPoly> normal_g_partitions(QExp order)
{
    QSeries<LaurentPoly> out(order);
    for (long n = 0; QExp::integer(n) < order; ++n)
        for (const auto& p : partitions_of(n)) {
            if (!is_symmetric(p)) continue;
            long rk = rank(p);
            LaurentPoly c;
            for (long i = 1; i <= rk; ++i) {
                long e = 2 * p[i - 1] - 2 * i + 1;
                c += s1(e) - s1(-e);
            }
            out.add_term(QExp::integer(n), c * (rk % 2 ? -2 : 2));
        }
    return out;
}

QSeries<RationalFunction> d_half_product(QExp order)
{
    const QExp one = QExp::integer(1), half = QExp::half(1);
    auto a = pochhammer<LaurentPoly>(-s1(2), half, one, order) * pochhammer<LaurentPoly>(-s1(-2), half, one, order);
    auto b = lift_rational<LaurentPoly>(series_inv(qpoch(-1, half, one, order), order));
    auto l = (a.truncated(order) * theta_tilde_inv(order) * b).truncated(order);
    return to_rf(l) * RF::make(LaurentPoly(1), s1() - s1(-1));
}

QSeries<RationalFunction> b_half_product(QExp order)
{
    const QExp one = QExp::integer(1);
    // (t^{-1};q) = (1 - t^{-1}) (q t^{-1};q), likewise for (-t^{-1};q)
    auto num = pochhammer<LaurentPoly>(-s1(2), one, one, order) * pochhammer<LaurentPoly>(-s1(-2), one, one, order);
    auto den = pochhammer<LaurentPoly>(s1(2), one, one, order) * pochhammer<LaurentPoly>(s1(-2), one, one, order);
    auto qq2 = lift_rational<LaurentPoly>(series_pow(euler_qq(order), 2, order));
    auto mq = lift_rational<LaurentPoly>(series_inv(qpoch(-1, one, one, order), order));
    auto l = (num.truncated(order) * qq2 * mq * series_inv(den.truncated(order), order)).truncated(order);
    auto c = RF::make(s1(-2) + 1, (LaurentPoly(1) - s1(-2)) * 2);
    return to_rf(l).shifted(QExp::from_sixteenths(1)).truncated(order) * c;
}

QSeries<RationalFunction> d_half_partial_fractions(QExp order)
{
    const QExp one = QExp::integer(1), half = QExp::half(1);
    QSeries<LaurentPoly> sum(order);
    for (long r = 0; QExp::half(r + 1) < order; ++r) {
        QExp a = QExp::integer(r + 1);
        long sg = r % 2 ? -1 : 1;
        // (q^{r+1} t)^{1/2} / (1 - q^{r+1} t)
        sum += (geometric(s1(2), a, order) * s1() * sg).shifted(QExp::half(r + 1)).truncated(order);
        sum -= (geometric(s1(-2), a, order) * s1(-1) * sg).shifted(QExp::half(r + 1)).truncated(order);
    }
    auto pre = lift_rational<RF>(qpoch(-1, half, one, order));
    auto bracket = to_rf(sum) + QSeries<RF>::constant(RF::make(LaurentPoly(1), s1() - s1(-1)), order);
    return (pre * bracket).truncated(order);
}

QSeries<RationalFunction> b_half_partial_fractions(QExp order)
{
    const QExp one = QExp::integer(1);
    QSeries<LaurentPoly> sum(order);
    for (long r = 0; QExp::integer(r + 1) < order; ++r) {
        QExp a = QExp::integer(r + 1);
        long sg = r % 2 ? -1 : 1;
        sum += (geometric(s1(2), a, order) * s1(2) * sg).shifted(a).truncated(order);
        sum -= (geometric(s1(-2), a, order) * s1(-2) * sg).shifted(a).truncated(order);
    }
    auto pre = lift_rational<RF>(qpoch(-1, one, one, order).shifted(QExp::from_sixteenths(1)).truncated(order));
    auto bracket = to_rf(sum) + QSeries<RF>::constant(RF::make(s1(2) + 1, (s1(2) - 1) * 2), order);
    return (pre * bracket).truncated(order);
}

} // namespace fockcorr

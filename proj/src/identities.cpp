#include "fockcorr/identities.hpp"

#include "fockcorr/characters.hpp"
#include "fockcorr/correlators.hpp"
#include "fockcorr/fock_oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fockcorr {

namespace {

using RF = RationalFunction;
using QR = QSeries<Rational>;
using QL = QSeries<LaurentPoly>;
using QF = QSeries<RF>;

const QExp ONE = QExp::integer(1);

QExp I(long n) { return QExp::integer(n); }
LaurentPoly sv(int i = 0, long e = 1) { return LaurentPoly::var(Var::s(i), e); }
LaurentPoly zv(int i = 0, long e = 1) { return LaurentPoly::var(Var::z(i), e); }

template <class R>
std::string coeff_str(const QSeries<R>& a, QExp e)
{
    if (e >= a.trunc()) return "(truncated)";
    return Ring<R>::str(a.coeff(e));
}

template <class R>
CheckResult compare(std::string what, const QSeries<R>& a, const QSeries<R>& b, QExp order)
{
    CheckResult c{std::move(what), order, false, {}};
    QExp known = std::min(a.trunc(), b.trunc());
    if (known < order) {
        c.detail = "only known below q^" + known.str();
        return c;
    }
    if (auto m = a.first_mismatch(b, order)) {
        c.detail = "q^" + m->str() + ": " + coeff_str(a, *m) + " vs " + coeff_str(b, *m);
        return c;
    }
    c.pass = true;
    return c;
}

CheckResult flag(std::string what, bool ok, std::string detail = {})
{
    return {std::move(what), QExp(), ok, ok ? std::string() : std::move(detail)};
}

template <class T>
QSeries<T> lift(const QR& a)
{
    return a.map([](const Rational& c) { return T(c); });
}

QF to_rf(const QL& a)
{
    return a.map([](const LaurentPoly& c) { return RF(c); });
}

// sum_{m >= 0} x^m q^{m e}
QL geometric(const LaurentPoly& x, QExp e, QExp order)
{
    QL out(order);
    LaurentPoly p(1);
    for (QExp f; f < order; f += e) {
        out.add_term(f, p);
        p *= x;
    }
    return out;
}

std::string join(const std::vector<Rational>& v)
{
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : ",") + to_string(x);
    return out;
}

// Default evaluation points.
std::vector<Rational> default_s(int n)
{
    static const Rational pts[] = {Rational(2), Rational(3), Rational(5), Rational(7, 2), Rational(9, 4)};
    if (n > 5) throw std::invalid_argument("at most 5 default evaluation points; pass --s");
    return {pts, pts + n};
}

std::vector<Rational> eval_point(const IdentityParams& p, int n)
{
    if (p.s.empty()) return default_s(n);
    if (static_cast<int>(p.s.size()) != n) throw std::invalid_argument("--s needs exactly n values");
    return p.s;
}

// n values to run: the explicit one, or the default list
std::vector<int> ns_of(const IdentityParams& p, std::vector<int> dflt)
{
    if (p.n) return {*p.n};
    if (!p.s.empty()) return {static_cast<int>(p.s.size())};
    return dflt;
}

// Oracle / closed-form glue per coefficient mode.
template <class R>
struct Mode;

template <>
struct Mode<Rational> {
    using Z = LaurentPoly; // coefficients once z is attached
    static std::vector<Rational> args(const IdentityParams& p, int n) { return eval_point(p, n); }
    static std::vector<OracleOp> ops(char k, const std::vector<Rational>& a)
    {
        std::vector<OracleOp> o;
        for (const auto& x : a) o.push_back({k, LaurentPoly(x)});
        return o;
    }
    static QR plain(const OracleResult& r) { return r.as_rational(); }
    static QL graded(const OracleResult& r) { return r.as_laurent(); }
    static Z attach(const LaurentPoly& m, const Rational& c) { return m * c; }
    static std::string describe(const std::vector<Rational>& a) { return "eval s=(" + join(a) + ")"; }
};

template <>
struct Mode<RF> {
    using Z = RF;
    static std::vector<LaurentPoly> args(const IdentityParams&, int n) { return symbolic_args(n); }
    static std::vector<OracleOp> ops(char k, const std::vector<LaurentPoly>& a)
    {
        std::vector<OracleOp> o;
        for (const auto& x : a) o.push_back({k, x});
        return o;
    }
    static QF plain(const OracleResult& r) { return r.as_ratfunc(); }
    static QF graded(const OracleResult& r) { return r.as_ratfunc(); }
    static Z attach(const LaurentPoly& m, const RF& c) { return RF(m) * c; }
    static std::string describe(const std::vector<LaurentPoly>& a) { return "exact n=" + std::to_string(a.size()); }
};

OracleSpec pair_spec(QExp order, Sector sec = Sector::NS)
{
    OracleSpec sp;
    sp.pairs = 1;
    sp.cutoff = order;
    sp.sector = sec;
    return sp;
}

OracleSpec neutral_spec(QExp order, Sector sec)
{
    OracleSpec sp;
    sp.pairs = 0;
    sp.neutral = true;
    sp.cutoff = order;
    sp.sector = sec;
    return sp;
}

// Runs f<RF> for exact n and f<Rational> for evaluation n, per the mode rule:
// exact unless asked otherwise or n is above exact_max.
template <class F>
void by_mode(const IdentityParams& p, const std::vector<int>& ns, int exact_max, F&& f)
{
    for (int n : ns) {
        bool exact = p.exact.value_or(n <= exact_max);
        if (exact) f.template operator()<RF>(n);
        else f.template operator()<Rational>(n);
    }
}

// ---- individual identities ------------------------------------------------

void jacobi_z(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(20));
    auto lhs = lattice_sum<LaurentPoly>(false, [](Half h) { return zv(0, h / 2); }, N);
    auto rhs = lift<LaurentPoly>(euler_qq(N)) * pochhammer<LaurentPoly>(-zv(), QExp::half(1), ONE, N);
    rhs = (rhs.truncated(N) * pochhammer<LaurentPoly>(-zv(0, -1), QExp::half(1), ONE, N)).truncated(N);
    r.checks.push_back(compare("sum z^k q^{k^2/2} = (q;q)(-q^{1/2}z;q)(-q^{1/2}/z;q)", lhs, rhs, N));
}

void jacobi_half(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(20));
    auto lhs = lattice_sum<LaurentPoly>(true, [](Half h) { return sv(0, h); }, N);
    auto rhs = lift<LaurentPoly>(euler_qq(N)) * pochhammer<LaurentPoly>(-sv(0, 2), ONE, ONE, N);
    rhs = (rhs.truncated(N) * pochhammer<LaurentPoly>(-sv(0, -2), QExp(), ONE, N)).truncated(N);
    rhs = (rhs * sv()).shifted(QExp::from_sixteenths(2)).truncated(N);
    r.checks.push_back(compare("sum_{k in 1/2+Z} q^{k^2/2} t^k = q^{1/8} t^{1/2} (q;q)(-qt;q)(-1/t;q)", lhs, rhs, N));
}

LaurentPoly weyl_monomial_sum(WeylType t, int l)
{
    LaurentPoly out;
    for (const auto& s : weyl_group(t, l)) {
        auto v = s.apply(rho2(t, l));
        LaurentPoly m(s.sign());
        for (int j = 0; j < l; ++j) m *= z_power(j, v[static_cast<std::size_t>(j)], t == WeylType::B);
        out += m;
    }
    return out;
}

std::vector<int> ranks(const IdentityParams& p, int lo, int hi)
{
    if (p.l) return {*p.l};
    std::vector<int> v;
    for (int l = lo; l <= hi; ++l) v.push_back(l);
    return v;
}

void weyl_denom_d(const IdentityParams& p, IdentityReport& r)
{
    for (int l : ranks(p, 1, 4)) {
        std::vector<Half> zero(static_cast<std::size_t>(l), 0);
        auto det = char_denominator(CharFamily::O2l, zero) * Rational(1, 2);
        auto sum = weyl_monomial_sum(WeylType::D, l);
        r.checks.push_back(flag("l=" + std::to_string(l) + ": half the determinant = signed sum over W(D)", det == sum,
                                "difference " + (det - sum).str()));
    }
}

void weyl_denom_b(const IdentityParams& p, IdentityReport& r)
{
    for (int l : ranks(p, 1, 4)) {
        std::vector<Half> zero(static_cast<std::size_t>(l), 0);
        auto det = char_denominator(CharFamily::B, zero);
        auto sum = weyl_monomial_sum(WeylType::B, l);
        r.checks.push_back(flag("l=" + std::to_string(l) + ": det(x^{rho_i} - x^{-rho_i}) = signed sum over W(B)", det == sum,
                                "difference " + (det - sum).str()));
        auto plus = binomial_det(rho2(WeylType::B, l), 1, true);
        r.checks.push_back(flag("l=" + std::to_string(l) + ": the '+' determinant is not the W(B) sum", !(plus == sum),
                                "unexpected equality"));
    }
}

void weyl_lemma(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(15));
    std::vector<WeylType> types;
    if (!p.type) types = {WeylType::B, WeylType::C, WeylType::D};
    else if (*p.type == 'B') types = {WeylType::B};
    else if (*p.type == 'C') types = {WeylType::C};
    else if (*p.type == 'D') types = {WeylType::D};
    else throw std::invalid_argument("--type must be B, C or D");
    std::mt19937 rng(p.seed);
    std::uniform_int_distribution<int> step(0, 2);
    for (WeylType t : types)
        for (int l : ranks(p, 1, 4)) {
            const char tc = t == WeylType::B ? 'B' : t == WeylType::C ? 'C' : 'D';
            int bad = 0;
            std::string first;
            for (int trial = 0; trial < p.trials; ++trial) {
                std::vector<Half> lam(static_cast<std::size_t>(l));
                Half acc = 0;
                bool spin = t != WeylType::C && trial % 2 == 1;
                for (int i = l - 1; i >= 0; --i) {
                    acc += 2 * step(rng);
                    lam[static_cast<std::size_t>(i)] = acc + (spin ? 1 : 0);
                }
                auto c = compare("", weyl_sum_series(lam, t, l, N), weyl_sum_product_form(lam, t, l, N), N);
                if (!c.pass && !bad++) {
                    std::string w;
                    for (Half h : lam) w += (w.empty() ? "" : ",") + QExp::half(h).str();
                    first = "lambda=(" + w + ") " + c.detail;
                }
            }
            CheckResult c{std::string(1, tc) + std::to_string(l) + ": " + std::to_string(p.trials) + " random dominant weights", N,
                          bad == 0, first};
            r.checks.push_back(c);
        }
}

void shift_sym(const IdentityParams& p, IdentityReport& r)
{
    by_mode(p, ns_of(p, {1, 2}), 1, [&]<class R>(int n) {
        QExp N = p.order.value_or(n == 1 ? I(10) : I(8));
        auto a = Mode<R>::args(p, n);
        Correlators<R> c(a, N);
        auto sp = pair_spec(N);
        sp.charge = 0;
        auto ops = Mode<R>::ops('D', a);
        auto base = Mode<R>::plain(trace(sp, ops));
        for (long k = -3; k <= 3; ++k) {
            if (!(QExp::half(k * k) < N)) continue;
            sp.charge = k;
            auto got = Mode<R>::plain(trace(sp, ops));
            std::string tag = Mode<R>::describe(a) + ", charge " + std::to_string(k);
            r.checks.push_back(compare(tag + ": trace = q^{k^2/2} sum_eps [eps] (prod t^eps)^k F_bo(t^eps)", got,
                                       c.eps_sum(2 * k).shifted(QExp::half(k * k)).truncated(N), N));
            if (n == 1) {
                // (t^k + t^-k)/2 relative to charge zero
                R tk = ArgTraits<R>::arg_pow(a[0], 2 * k) + ArgTraits<R>::arg_pow(a[0], -2 * k);
                r.checks.push_back(compare(tag + ": trace = (t^k + t^-k)/2 q^{k^2/2} (charge-0 trace)", got,
                                           (base * (tk * R(Rational(1, 2)))).shifted(QExp::half(k * k)).truncated(N), N));
            }
        }
    });
}

void f0_trace(const IdentityParams& p, IdentityReport& r)
{
    by_mode(p, ns_of(p, {1, 2}), 1, [&]<class R>(int n) {
        QExp N = p.order.value_or(n == 1 ? I(10) : I(8));
        auto a = Mode<R>::args(p, n);
        Correlators<R> c(a, N);
        auto sp = pair_spec(N);
        sp.charge = 0;
        auto got = Mode<R>::plain(trace(sp, Mode<R>::ops('D', a)));
        r.checks.push_back(compare(Mode<R>::describe(a) + ": charge-0 trace = sum_eps [eps] F_bo(t^eps)", got, c.eps_sum(0), N));
        if (n == 1) r.checks.push_back(compare(Mode<R>::describe(a) + ": charge-0 trace = 2 F_bo(t)", got, c.f_bo() * R(2), N));
    });
}

template <class R>
QSeries<typename Mode<R>::Z> attach_grading(const std::map<Half, QSeries<R>>& parts, bool ramond, QExp N)
{
    QSeries<typename Mode<R>::Z> out(N);
    for (const auto& [k2, ser] : parts) {
        LaurentPoly m = ramond ? LaurentPoly::var(Var::r(0), k2) : zv(0, k2 / 2);
        for (const auto& [e, c] : ser.terms()) out.add_term(e, Mode<R>::attach(m, c));
    }
    return out;
}

void graded_a(const IdentityParams& p, IdentityReport& r)
{
    by_mode(p, ns_of(p, {0, 1, 2}), 1, [&]<class R>(int n) {
        QExp N = p.order.value_or(I(8));
        auto a = Mode<R>::args(p, n);
        Correlators<R> c(a, N);
        auto sp = pair_spec(N);
        sp.zgraded = true;
        auto got = Mode<R>::graded(trace(sp, Mode<R>::ops('D', a)));
        r.checks.push_back(compare(Mode<R>::describe(a) + ": tr z^{e11} q^{L0} D(t_1)..D(t_n) = sum_k z^k q^{k^2/2} sum_eps ...", got,
                                   attach_grading(c.graded_trace(false), false, N), N));
        // the A-operator version
        std::map<Half, QSeries<R>> parts;
        for (long k = 0; QExp::half(k * k) < N; ++k) {
            parts[2 * k] = c.a_npoint({k});
            if (k) parts[-2 * k] = c.a_npoint({-k});
        }
        auto ga = Mode<R>::graded(trace(sp, Mode<R>::ops('A', a)));
        r.checks.push_back(compare(Mode<R>::describe(a) + ": tr z^{e11} q^{L0} A(t_1)..A(t_n) = sum_k z^k q^{k^2/2} (prod t)^k F_bo", ga,
                                   attach_grading(parts, false, N), N));
    });
}

void graded_b(const IdentityParams& p, IdentityReport& r)
{
    by_mode(p, ns_of(p, {0, 1, 2}), 1, [&]<class R>(int n) {
        QExp N = p.order.value_or(I(8));
        auto a = Mode<R>::args(p, n);
        Correlators<R> c(a, N);
        auto sp = pair_spec(N, Sector::R);
        sp.zgraded = true;
        auto got = Mode<R>::graded(trace(sp, Mode<R>::ops('B', a)));
        r.checks.push_back(compare(Mode<R>::describe(a) + ": R-sector tr z^{e11} q^{L0} B(t_1)..B(t_n) = sum_{k in 1/2+Z} ...", got,
                                   attach_grading(c.graded_trace(true), true, N), N));
    });
}

void howe(char family, const IdentityParams& p, IdentityReport& r)
{
    bool half = family == 'd' || family == 'b';
    if (p.exact.value_or(false)) throw std::invalid_argument("duality checks run in evaluation mode");
    QExp N = p.order.value_or(I(8));
    for (int l : ranks(p, half ? 0 : 1, half ? 1 : 2))
        for (int n : ns_of(p, {0, 1, 2})) {
            auto c = duality_check(family, l, eval_point(p, n), N);
            r.checks.push_back(c);
        }
}

void rec_half(char sector, const IdentityParams& p, IdentityReport& r)
{
    const Sector sec = sector == 'D' ? Sector::NS : Sector::R;
    const char op = sector == 'D' ? 'D' : 'B';
    const Rational scale = sector == 'D' ? Rational(1) : Rational(1, 2);
    by_mode(p, ns_of(p, {1, 2, 3}), 2, [&]<class R>(int n) {
        QExp N = p.order.value_or(I(8));
        auto a = Mode<R>::args(p, n);
        Correlators<R> c(a, N);
        auto rec = c.half_level_base(sector);
        auto orc = Mode<R>::plain(trace(neutral_spec(N, sec), Mode<R>::ops(op, a))) * R(scale);
        std::string what = sector == 'D' ? "recursion = NS neutral trace" : "recursion = half the R neutral trace";
        r.checks.push_back(compare(Mode<R>::describe(a) + ": " + what, rec, orc, N));
        if (n >= 2) {
            auto rev = a;
            std::reverse(rev.begin(), rev.end());
            Correlators<R> c2(rev, N);
            r.checks.push_back(compare(Mode<R>::describe(a) + ": symmetric in the arguments", rec, c2.half_level_base(sector), N));
        }
        if constexpr (std::is_same_v<R, RF>) {
            if (n == 1) {
                auto prod = sector == 'D' ? d_half_product(N) : b_half_product(N);
                auto pf = sector == 'D' ? d_half_partial_fractions(N) : b_half_partial_fractions(N);
                r.checks.push_back(compare("exact n=1: recursion = closed product", rec, prod, N));
                r.checks.push_back(compare("exact n=1: recursion = partial fractions", rec, pf, N));
            }
        }
    });
}

void refined_d(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(10));
    auto t = tau_refined_trace({{'D', sv()}}, N);
    auto plus = t.plus.as_ratfunc(), minus = t.minus.as_ratfunc();
    r.checks.push_back(compare("tr over the tau=+1 part = first form with +", plus, refined_level1(1, N), N));
    r.checks.push_back(compare("tr over the tau=-1 part = first form with -", minus, refined_level1(-1, N), N));
    r.checks.push_back(compare("tr over the tau=+1 part = log-derivative form with +", plus, refined_level1_logform(1, -1, N), N));
    r.checks.push_back(compare("tr over the tau=-1 part = log-derivative form with -", minus, refined_level1_logform(-1, -1, N), N));
    QExp M = p.order ? N : I(20);
    auto t0 = tau_refined_trace({}, M);
    r.checks.push_back(compare("tr_+ q^{L0} - tr_- q^{L0} = (q;q^2)", t0.plus.as_rational() - t0.minus.as_rational(),
                               qpoch(1, ONE, I(2), M), M));
}

// 2 sum_{mu odd strict} (-1)^{len} q^{|mu|} sum_k (t^{mu_k/2} - t^{-mu_k/2})
QL g_osp_form(QExp N)
{
    QL out(N);
    for (long m = 0; I(m) < N; ++m)
        for (const auto& mu : odd_strict_partitions(m)) {
            LaurentPoly c;
            for (long part : mu) c += sv(0, part) - sv(0, -part);
            out.add_term(I(m), c * (mu.size() % 2 ? -2L : 2L));
        }
    return out;
}

void gt_osp(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(12));
    auto parts = normal_g_partitions(N);
    auto osp = g_osp_form(N);
    r.checks.push_back(compare(":G: from symmetric partitions = odd strict partition form", parts, osp, N));
    r.checks.push_back(compare(":G: = 2(q;q^2) sum_n q^{2n-1}(t^{1/2-n} - t^{n-1/2})/(1-q^{2n-1})", to_rf(parts), normal_g(N), N));
    QL second(N);
    for (long k = 1; I(k) < N; ++k) {
        second += (geometric(sv(0, -2), I(2 * k), N) * sv(0, -1)).shifted(I(k)).truncated(N);
        second -= (geometric(sv(0, 2), I(2 * k), N) * sv()).shifted(I(k)).truncated(N);
    }
    second = (lift<LaurentPoly>(qpoch(1, ONE, I(2), N)) * second).truncated(N) * LaurentPoly(2);
    r.checks.push_back(compare(":G: = 2(q;q^2) sum_r (q^{r+1}t^{-1/2}/(1-q^{2r+2}/t) - q^{r+1}t^{1/2}/(1-q^{2r+2}t))", parts, second, N));
    // sum_n z q^{2n-1} t^{n-1/2} / (1 + q^{2n-1} z) = sum_r (-1)^r z^{r+1} q^{r+1} t^{1/2} / (1 - q^{2r+2} t)
    QL lhs(N), rhs(N);
    for (long k = 1; I(2 * k - 1) < N; ++k)
        lhs += (geometric(-zv(), I(2 * k - 1), N) * (zv() * sv(0, 2 * k - 1))).shifted(I(2 * k - 1)).truncated(N);
    for (long k = 0; I(k + 1) < N; ++k)
        rhs += (geometric(sv(0, 2), I(2 * k + 2), N) * (zv(0, k + 1) * sv() * (k % 2 ? -1L : 1L))).shifted(I(k + 1)).truncated(N);
    r.checks.push_back(compare("auxiliary series rearrangement", lhs, rhs, N));
    // G(t) from the tau eigenspaces
    auto t = tau_refined_trace({{'D', sv()}}, N);
    auto g = (t.plus.as_ratfunc() - t.minus.as_ratfunc());
    r.checks.push_back(compare("tr_+ D - tr_- D = :G: + 2(q;q^2)/(t^{1/2}-t^{-1/2})", g, refined_g(N), N));
}

void osp_gf(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(20));
    QL lhs(N), count(N);
    for (long m = 0; I(m) < N; ++m)
        for (const auto& mu : odd_strict_partitions(m)) {
            LaurentPoly c;
            for (long part : mu) c += sv(0, part);
            LaurentPoly zl = zv(0, static_cast<long>(mu.size()));
            lhs.add_term(I(m), c * zl);
            count.add_term(I(m), zl);
        }
    auto prod = pochhammer<LaurentPoly>(-zv(), ONE, I(2), N);
    r.checks.push_back(compare("sum_{mu odd strict} z^{len} q^{|mu|} = (-qz;q^2)", count, prod, N));
    QL tail(N);
    for (long k = 1; I(2 * k - 1) < N; ++k)
        tail += (geometric(-zv(), I(2 * k - 1), N) * (zv() * sv(0, 2 * k - 1))).shifted(I(2 * k - 1)).truncated(N);
    r.checks.push_back(compare("sum z^{len} q^{|mu|} sum_k t^{mu_k/2} = (-qz;q^2) sum_n q^{2n-1}t^{n-1/2}z/(1+q^{2n-1}z)", lhs,
                               (prod * tail).truncated(N), N));
    // the form with a leading 1 inside the bracket is off by (-qz;q^2) from q^0 on
    auto with_one = (prod * (tail + QL::constant(LaurentPoly(1), N))).truncated(N);
    auto m = lhs.first_mismatch(with_one, N);
    r.checks.push_back(flag("the bracket without the leading 1 is forced: with it the two sides differ at q^0", m && *m == QExp(),
                            m ? "first difference at q^" + m->str() : "no difference"));
}

void cor_d(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(12));
    const QExp h = QExp::half(1);
    auto num = pochhammer<LaurentPoly>(-sv(0, 2), h, ONE, N) * pochhammer<LaurentPoly>(-sv(0, -2), h, ONE, N);
    auto den = pochhammer<LaurentPoly>(sv(0, 2), ONE, ONE, N) * pochhammer<LaurentPoly>(sv(0, -2), ONE, ONE, N);
    auto ratio = (num.truncated(N) * series_inv(den.truncated(N), N)).truncated(N);
    auto scal = (series_pow(euler_qq(N), 2, N) * series_pow(qpoch(-1, h, ONE, N), -2, N)).truncated(N);
    auto lhs = (ratio * lift<LaurentPoly>(scal)).truncated(N);
    QL sum(N);
    for (long k = 0; QExp::half(k + 1) < N; ++k) {
        LaurentPoly sg(k % 2 ? -1 : 1);
        sum += (geometric(sv(0, 2), I(k + 1), N) * (sv() * sg)).shifted(QExp::half(k + 1)).truncated(N);
        sum -= (geometric(sv(0, -2), I(k + 1), N) * (sv(0, -1) * sg)).shifted(QExp::half(k + 1)).truncated(N);
    }
    auto rhs = QL::constant(LaurentPoly(1), N) + sum * (sv() - sv(0, -1));
    r.checks.push_back(compare("exact: product = 1 + (t^{1/2}-t^{-1/2}) sum_r (-1)^r [...]", lhs, rhs, N));
}

void cor_b(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(12));
    const RF tt = RF(sv(0, 2));
    const RF front = RF::make(sv(0, 2) + 1, sv(0, 2) - 1); // (1 + 1/t)/(1 - 1/t)
    auto num = pochhammer<LaurentPoly>(-sv(0, 2), ONE, ONE, N) * pochhammer<LaurentPoly>(-sv(0, -2), ONE, ONE, N);
    auto den = pochhammer<LaurentPoly>(sv(0, 2), ONE, ONE, N) * pochhammer<LaurentPoly>(sv(0, -2), ONE, ONE, N);
    auto ratio = (num.truncated(N) * series_inv(den.truncated(N), N)).truncated(N);
    auto scal = (series_pow(euler_qq(N), 2, N) * series_pow(qpoch(-1, ONE, ONE, N), -2, N)).truncated(N);
    auto lhs = to_rf((ratio * lift<LaurentPoly>(scal)).truncated(N)) * front;
    QL sum(N);
    for (long k = 0; I(k + 1) < N; ++k) {
        LaurentPoly sg(k % 2 ? -2 : 2);
        sum += (geometric(sv(0, 2), I(k + 1), N) * (sv(0, 2) * sg)).shifted(I(k + 1)).truncated(N);
        sum -= (geometric(sv(0, -2), I(k + 1), N) * (sv(0, -2) * sg)).shifted(I(k + 1)).truncated(N);
    }
    auto rhs = to_rf(sum) + QF::constant(front, N);
    r.checks.push_back(compare("exact: product = (t+1)/(t-1) + 2 sum_r (-1)^r [...]", lhs, rhs, N));
    // 2 t d/dt ln( t^{-1/2} (t;q^2)(q^2/t;q^2) / ((qt;q^2)(q/t;q^2)) )
    QL logd(N);
    for (long k = 1; I(2 * k) < N; ++k) {
        logd -= (geometric(sv(0, 2), I(2 * k), N) * sv(0, 2)).shifted(I(2 * k)).truncated(N);
        logd += (geometric(sv(0, -2), I(2 * k), N) * sv(0, -2)).shifted(I(2 * k)).truncated(N);
    }
    for (long k = 0; I(2 * k + 1) < N; ++k) {
        logd += (geometric(sv(0, 2), I(2 * k + 1), N) * sv(0, 2)).shifted(I(2 * k + 1)).truncated(N);
        logd -= (geometric(sv(0, -2), I(2 * k + 1), N) * sv(0, -2)).shifted(I(2 * k + 1)).truncated(N);
    }
    // k = 0 factor of (t;q^2) together with t^{-1/2}: -1/2 - t/(1-t)
    RF lead = RF(Rational(-1, 2)) - tt * RF::make(LaurentPoly(1), 1 - sv(0, 2));
    auto rhs_log = (to_rf(logd) + QF::constant(lead, N)) * RF(2);
    r.checks.push_back(compare("exact: the sum = 2 t d/dt ln(...)", rhs, rhs_log, N));
}

void qdim_consistency(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(10));
    Correlators<Rational> c0({}, N);
    for (Algebra a : {Algebra::B, Algebra::C, Algebra::D})
        for (long lev2 = 1; lev2 <= 5; ++lev2) {
            if (a == Algebra::C && lev2 % 2) continue;
            int count = 0;
            std::string bad;
            for (const auto& lab : enumerate_labels(a, lev2, N)) {
                try {
                    auto d = qdim_forms(lab, N);
                    if (!c0.npoint(lab).agrees(d.weyl_form, N) && bad.empty()) bad = lab.str() + ": n=0 correlator differs";
                } catch (const std::logic_error& e) {
                    if (bad.empty()) bad = e.what();
                }
                ++count;
            }
            std::string tag(1, algebra_char(a));
            r.checks.push_back(flag(tag + " level " + QExp::half(lev2).str() + ": Weyl sum = product form = n=0 correlator (" +
                                        std::to_string(count) + " labels)",
                                    bad.empty(), bad));
        }
    for (int l = 1; l <= 3; ++l) {
        std::string bad;
        std::function<void(Partition&, long)> rec = [&](Partition& cur, long maxp) {
            if (static_cast<int>(cur.size()) == l) {
                if (!(QExp::half(norm2(cur)) < N)) return;
                try {
                    qdim_forms({Algebra::A, 2L * l, cur, false, false}, N);
                } catch (const std::logic_error& e) {
                    if (bad.empty()) bad = e.what();
                }
                return;
            }
            for (long m = maxp; m >= -maxp; --m) {
                if (!cur.empty() && m > cur.back()) continue;
                cur.push_back(m);
                rec(cur, maxp);
                cur.pop_back();
            }
        };
        Partition cur;
        rec(cur, 4);
        r.checks.push_back(flag("a level " + std::to_string(l) + ": both q-dimension forms agree", bad.empty(), bad));
    }
    // n = 0 duality against the oracle
    for (auto [fam, l] : std::vector<std::pair<char, int>>{{'D', 1}, {'D', 2}, {'C', 1}, {'C', 2}, {'P', 1}, {'P', 2},
                                                           {'d', 0}, {'d', 1}, {'b', 0}, {'b', 1}})
        r.checks.push_back(duality_check(fam, l, {}, N));
}

void ad_trace(const IdentityParams& p, IdentityReport& r)
{
    QExp N = p.order.value_or(I(6));
    Rational s0 = p.s.empty() ? Rational(3, 2) : p.s[0];
    for (int l : ranks(p, 1, 2)) {
        OracleSpec sp;
        sp.pairs = l;
        sp.cutoff = N;
        long bad = 0;
        for (const auto& st : enumerate_states(sp)) {
            auto ev = [&](Rational v, char k) -> Rational {
                auto e = eigenvalue({k, LaurentPoly(v)}, st, sp);
                return e.num.constant_term() / e.den.constant_term();
            };
            if (ev(s0, 'D') != Rational(ev(s0, 'A') - ev(Rational(1 / s0), 'A'))) ++bad;
        }
        r.checks.push_back(flag(std::to_string(l) + " pairs, s=" + to_string(s0) + ": D(t) = A(t) - A(1/t) on every state", bad == 0,
                                std::to_string(bad) + " states differ"));
        auto d = trace(sp, {{'D', sv()}}).as_ratfunc();
        auto a1 = trace(sp, {{'A', sv()}}).as_ratfunc(), a2 = trace(sp, {{'A', sv(0, -1)}}).as_ratfunc();
        r.checks.push_back(compare(std::to_string(l) + " pairs, exact: tr D(t) = tr A(t) - tr A(1/t)", d, a1 - a2, N));
    }
}

void oracle_a1(const IdentityParams& p, IdentityReport& r)
{
    by_mode(p, ns_of(p, {1, 2}), 1, [&]<class R>(int n) {
        QExp N = p.order.value_or(I(8));
        auto a = Mode<R>::args(p, n);
        Correlators<R> c(a, N);
        for (long m = -2; m <= 2; ++m) {
            auto sp = pair_spec(N);
            sp.charge = m;
            auto got = Mode<R>::plain(trace(sp, Mode<R>::ops('A', a)));
            r.checks.push_back(compare(Mode<R>::describe(a) + ", m=" + std::to_string(m) + ": charge-m trace of A = q^{m^2/2}(prod t)^m F_bo",
                                       got, c.a_npoint({m}), N));
        }
    });
}

struct Entry {
    IdentityInfo info;
    std::function<void(const IdentityParams&, IdentityReport&)> run;
};

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> e = {
        {{"jacobi-z", "Jacobi triple product in z", "order 20"}, jacobi_z},
        {{"jacobi-half", "Jacobi triple product over half-integers", "order 20"}, jacobi_half},
        {{"weyl-denom-D", "Weyl denominator of D_l as a determinant", "l = 1..4"}, weyl_denom_d},
        {{"weyl-denom-B", "Weyl denominator of B_l as a determinant", "l = 1..4"}, weyl_denom_b},
        {{"weyl-lemma", "signed Weyl sum of q-powers = product over positive roots", "types B,C,D, l = 1..4, 20 random weights, order 15"},
         weyl_lemma},
        {{"shift-sym", "charge-k traces from charge 0", "n = 1 exact (order 10), n = 2 eval (order 8), |k| <= 3"}, shift_sym},
        {{"f0-trace", "charge-0 trace of D(t_1)..D(t_n)", "n = 1 exact (order 10), n = 2 eval (order 8)"}, f0_trace},
        {{"graded-A", "z-graded trace of D (and A) operators on one NS pair", "n = 0,1 exact, n = 2 eval, order 8"}, graded_a},
        {{"graded-B", "z-graded trace of B operators on one R pair", "n = 0,1 exact, n = 2 eval, order 8"}, graded_b},
        {{"howe-D", "(O(2l), d) duality, denominator cleared", "l = 1,2, n = 0,1,2, s = (2),(2,3), order 8"},
         [](const IdentityParams& p, IdentityReport& r) { howe('D', p, r); }},
        {{"howe-Dhalf", "(O(2l+1), d) duality at level l+1/2", "l = 0,1, n = 0,1,2, s = (2),(2,3), order 8"},
         [](const IdentityParams& p, IdentityReport& r) { howe('d', p, r); }},
        {{"howe-C", "(Sp(2l), c) duality", "l = 1,2, n = 0,1,2, s = (2),(2,3), order 8"},
         [](const IdentityParams& p, IdentityReport& r) { howe('C', p, r); }},
        {{"howe-Pin", "(Pin(2l), b) duality", "l = 1,2, n = 0,1,2, s = (2),(2,3), order 8"},
         [](const IdentityParams& p, IdentityReport& r) { howe('P', p, r); }},
        {{"howe-Bhalf", "(Pin(2l+1), b) duality at level l+1/2", "l = 0,1, n = 0,1,2, s = (2),(2,3), order 8"},
         [](const IdentityParams& p, IdentityReport& r) { howe('b', p, r); }},
        {{"rec-d-half", "level-1/2 d recursion vs the neutral NS trace", "n = 1,2 exact, n = 3 eval, order 8"},
         [](const IdentityParams& p, IdentityReport& r) { rec_half('D', p, r); }},
        {{"rec-b-half", "level-1/2 b recursion vs the neutral R trace", "n = 1,2 exact, n = 3 eval, order 8"},
         [](const IdentityParams& p, IdentityReport& r) { rec_half('B', p, r); }},
        {{"refined-d", "traces over the tau eigenspaces of the charge-0 sector", "order 10 (20 for the q-dimension)"}, refined_d},
        {{"gt-osp", ":G: via symmetric and odd strict partitions", "order 12"}, gt_osp},
        {{"osp-gf", "generating function of odd strict partitions", "order 20"}, osp_gf},
        {{"cor-d", "q-identity from the two level-1/2 d one-point formulas", "order 12, exact"}, cor_d},
        {{"cor-b", "q-identity from the two level-1/2 b one-point formulas, with its log-derivative form", "order 12, exact"}, cor_b},
        {{"qdim-consistency", "q-dimension forms, n=0 correlators and n=0 duality", "levels up to 5/2, order 10"}, qdim_consistency},
        {{"AD-trace", "D(t) = A(t) - A(1/t) on states and traces", "1 and 2 pairs, s = 3/2, order 6"}, ad_trace},
        {{"oracle-a1", "type a level 1 correlators vs charge sectors", "n = 1 exact, n = 2 eval, |m| <= 2, order 8"}, oracle_a1},
    };
    return e;
}

} // namespace

std::string IdentityParams::str() const
{
    std::ostringstream os;
    if (type) os << " type=" << *type;
    if (l) os << " l=" << *l;
    if (n) os << " n=" << *n;
    if (order) os << " order=" << order->str();
    if (exact) os << " mode=" << (*exact ? "exact" : "eval");
    if (!s.empty()) os << " s=(" << join(s) << ")";
    std::string out = os.str();
    return out.empty() ? "defaults" : out.substr(1);
}

bool IdentityReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string IdentityReport::str() const
{
    std::ostringstream os;
    os << id << ": " << (pass() ? "PASS" : "FAIL") << " (" << params << "; order " << order.str() << ")\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.what;
        if (!c.pass) os << " -- " << c.detail;
        os << "\n";
    }
    return os.str();
}

const std::vector<IdentityInfo>& identity_registry()
{
    static const std::vector<IdentityInfo> v = [] {
        std::vector<IdentityInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return v;
}

bool is_identity(const std::string& id)
{
    for (const auto& e : entries())
        if (e.info.id == id) return true;
    return false;
}

IdentityReport run_identity(const std::string& id, const IdentityParams& p)
{
    for (const auto& e : entries()) {
        if (e.info.id != id) continue;
        IdentityReport r{id, e.info.statement, p.str(), QExp(), {}};
        e.run(p, r);
        for (const auto& c : r.checks) r.order = std::max(r.order, c.order);
        return r;
    }
    throw std::invalid_argument("unknown identity: " + id);
}

CheckResult duality_check(char family, int l, const std::vector<Rational>& s, QExp N)
{
    const bool ramond = family == 'P' || family == 'b';
    const bool neutral = family == 'd' || family == 'b';
    const bool use_r = family != 'D' && family != 'C';
    const char op = family == 'C' ? 'C' : ramond ? 'B' : 'D';
    Algebra alg;
    CharFamily cf;
    switch (family) {
    case 'D': alg = Algebra::D, cf = CharFamily::O2l; break;
    case 'd': alg = Algebra::D, cf = CharFamily::B; break;
    case 'C': alg = Algebra::C, cf = CharFamily::Sp; break;
    case 'P': alg = Algebra::B, cf = CharFamily::Pin; break;
    case 'b': alg = Algebra::B, cf = CharFamily::B; break;
    default: throw std::invalid_argument(std::string("unknown duality family ") + family);
    }
    if (l < (neutral ? 0 : 1)) throw std::invalid_argument("rank too small for this duality");
    const long level2 = 2L * l + (neutral ? 1 : 0);
    std::vector<OracleOp> ops;
    for (const auto& x : s) ops.push_back({op, LaurentPoly(x)});

    std::ostringstream tag;
    tag << "l=" << l << " n=" << s.size();
    if (!s.empty()) tag << " s=(" << join(s) << ")";

    // left side: product of single-pair traces (and the neutral factor)
    QL lhs = QL::constant(LaurentPoly(1), N);
    if (l > 0) {
        OracleSpec sp = pair_spec(N, ramond ? Sector::R : Sector::NS);
        sp.zgraded = true;
        QL one = trace(sp, ops).as_laurent();
        if (use_r && !ramond) one = one.map([](const LaurentPoly& c) { return c.substitute_power(Var::z(0), Var::r(0), 2); });
        const Var v0 = use_r ? Var::r(0) : Var::z(0);
        for (int i = 0; i < l; ++i) {
            Var vi = use_r ? Var::r(i) : Var::z(i);
            auto f = i == 0 ? one : one.map([&](const LaurentPoly& c) { return c.substitute_power(v0, vi, 1); });
            lhs = (lhs * f).truncated(N);
        }
    }
    if (neutral) {
        auto base = trace(neutral_spec(N, ramond ? Sector::R : Sector::NS), ops).as_rational();
        if (ramond) base *= Rational(1, 2);
        lhs = (lhs * lift<LaurentPoly>(base)).truncated(N);
    }
    auto labels = enumerate_labels(alg, level2, N);
    if (labels.empty()) throw std::logic_error("no labels below the order");
    LaurentPoly den = char_denominator(cf, labels.front().weight2());
    lhs = lhs.map([&](const LaurentPoly& c) { return c * den; });

    // right side: characters times closed-form correlators
    Correlators<Rational> corr(s, N);
    QL rhs(N);
    for (const auto& lab : labels) {
        auto w = lab.weight2();
        LaurentPoly num = char_numerator(cf, w);
        if (cf == CharFamily::Pin || (cf == CharFamily::O2l && !w.empty() && w.back() != 0)) num *= Rational(2);
        const auto f = corr.npoint(lab);
        for (const auto& [e, c] : f.terms()) rhs.add_term(e, num * c);
    }
    const char* name = family == 'D'   ? "O(2l) x d, level l"
                       : family == 'd' ? "O(2l+1) x d, level l+1/2"
                       : family == 'C' ? "Sp(2l) x c, level l"
                       : family == 'P' ? "Pin(2l) x b, level l"
                                       : "Pin(2l+1) x b, level l+1/2";
    auto c = compare(std::string(name) + ", " + tag.str() + " (" + std::to_string(labels.size()) + " labels)", lhs, rhs, N);
    return c;
}

} // namespace fockcorr

#pragma once

#include "fockcorr/combinat.hpp"
#include "fockcorr/qseries.hpp"
#include "fockcorr/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace fockcorr {

// Univariate building blocks, coefficients are Laurent polynomials in s1 = t^{1/2}.
QSeries<LaurentPoly> theta(QExp order);
QSeries<LaurentPoly> theta_k(int k, QExp order);
// (q;q)^{-2} (qt;q)(q/t;q), so that theta = (s - 1/s) * theta_tilde.
QSeries<LaurentPoly> theta_tilde(QExp order);
QSeries<LaurentPoly> theta_tilde_inv(QExp order);

// (prefix; q^step) with the first factor at q^shift, rational prefix.
QSeries<Rational> qpoch(const Rational& prefix, QExp shift, QExp step, QExp order);
inline QSeries<Rational> euler_qq(QExp order) { return qpoch(1, QExp::integer(1), QExp::integer(1), order); }

// How arguments t_i enter: exact mode uses the formal variables s_i, eval
// mode exact rational values of s_i.
template <class R>
struct ArgTraits;

template <>
struct ArgTraits<Rational> {
    using Arg = Rational;   // value of some t^{1/2}
    using Inner = Rational; // coefficient ring free of t-denominators
    static Arg inverse(const Arg& a);
    static Inner specialize(const LaurentPoly& p_s1, const Arg& a);
    static Rational reciprocal_gap(const Arg& a); // 1 / (a - 1/a)
    static Rational lift(const Inner& x) { return x; }
    static Rational arg_pow(const Arg& a, long e) { return rat_pow(a, e); }
};

template <>
struct ArgTraits<RationalFunction> {
    using Arg = LaurentPoly; // a monomial in the s_i
    using Inner = LaurentPoly;
    static Arg inverse(const Arg& a) { return a.pow(-1); }
    static Inner specialize(const LaurentPoly& p_s1, const Arg& a);
    static RationalFunction reciprocal_gap(const Arg& a);
    static RationalFunction lift(const Inner& x) { return RationalFunction(x); }
    static RationalFunction arg_pow(const Arg& a, long e) { return RationalFunction(a.pow(e)); }
};

// Exact-mode arguments s_1..s_n.
std::vector<LaurentPoly> symbolic_args(int n);

// Closed formulas for one tuple of arguments at one truncation order. Results
// are memoized inside the object; one object per thread.
template <class R>
class Correlators {
public:
    using Arg = typename ArgTraits<R>::Arg;
    using Inner = typename ArgTraits<R>::Inner;

    Correlators(std::vector<Arg> args, QExp order);

    int n() const { return static_cast<int>(args_.size()); }
    QExp order() const { return order_; }
    const std::vector<Arg>& args() const { return args_; }

    // F_bo at the arguments with t_i inverted where bit i of eps_mask is set.
    QSeries<R> f_bo(unsigned eps_mask = 0);
    // sum_eps [eps] (prod t^eps)^k F_bo(t^eps), k = k2 / 2.
    QSeries<R> eps_sum(Half k2);
    // z-graded trace: k2 -> coefficient of z^{k2/2}, q^{k^2/2} included.
    std::map<Half, QSeries<R>> graded_trace(bool ramond);
    QSeries<R> graded_trace_at_one(bool ramond);

    // Level-1/2 base functions: sector 'D' (neutral NS) or 'B' (neutral R).
    QSeries<R> half_level_base(char sector);

    // sum over W of sign q^{|lambda+rho-sigma rho|^2/2} prod_a eps_sum(k_a)
    QSeries<R> weyl_correlator(const std::vector<Half>& lambda2, WeylType t);
    // Correlator of a B/C/D label at its level, n = number of arguments.
    QSeries<R> npoint(const ModuleLabel& label);
    // Type A: lambda weakly decreasing integers, level l = lambda.size().
    QSeries<R> a_npoint(const std::vector<long>& lambda);

private:
    std::vector<Arg> args_;
    QExp order_;
    std::map<unsigned, QSeries<R>> fbo_;
    std::map<Half, QSeries<R>> eps_;
    std::map<unsigned, QSeries<R>> half_[2];
    std::map<unsigned, std::unique_ptr<Correlators>> sub_;

    Correlators& sub(unsigned mask);
    QSeries<R> half_rec(char sector, unsigned mask);
};

extern template class Correlators<Rational>;
extern template class Correlators<RationalFunction>;

// Prefactor of the q-dimension / the half-level base at n = 0.
QSeries<Rational> level_prefactor(const ModuleLabel& label, QExp order);

// Both q-dimension forms; throws std::logic_error if they disagree.
struct QDim {
    QSeries<Rational> weyl_form, product_form;
};
QDim qdim_forms(const ModuleLabel& label, QExp order);
QSeries<Rational> qdim(const ModuleLabel& label, QExp order);

// Refined level-1 type D data, exact in s1.
QSeries<RationalFunction> normal_g(QExp order);  // :G(t):
QSeries<RationalFunction> refined_g(QExp order); // G(t)
// First displayed form of the refined trace, sign = +1 or -1.
QSeries<RationalFunction> refined_level1(int sign, QExp order);
// Second displayed form: 1/((q;q)Theta) + sign * log_sign * (q;q^2) t d/dt ln P.
QSeries<RationalFunction> refined_level1_logform(int sign, int log_sign, QExp order);
// :G: from symmetric partitions (sum over i <= rank).
QSeries<LaurentPoly> normal_g_partitions(QExp order);

// One-point closed products.
QSeries<RationalFunction> d_half_product(QExp order);   // closed product for D^{1/2}(t)
QSeries<RationalFunction> b_half_product(QExp order);   // closed product for B^{1/2}(t)
QSeries<RationalFunction> d_half_partial_fractions(QExp order);
QSeries<RationalFunction> b_half_partial_fractions(QExp order);

} // namespace fockcorr

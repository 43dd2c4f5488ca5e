#pragma once

#include "fockcorr/laurent.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fockcorr {

// num / prod f_i^{m_i}. Each factor f_i is a polynomial that is free of
// monomial content, has leading coefficient 1 and is not a monomial; any
// monomial or scalar part of the denominator lives in num. Factors are
// pairwise distinct but not necessarily coprime (only the cheap gcd checks
// are done), so equality goes through subtraction.
class RationalFunction {
public:
    using Factors = std::vector<std::pair<LaurentPoly, int>>;

    RationalFunction() = default;
    RationalFunction(const Rational& c) : num_(c) {} // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : num_(c) {} // NOLINT(google-explicit-constructor)
    RationalFunction(const LaurentPoly& p) : num_(p) {} // NOLINT(google-explicit-constructor)
    static RationalFunction var(Var v, long e = 1) { return LaurentPoly::var(v, e); }
    // Canonical form of num/den; throws std::domain_error on den == 0.
    static RationalFunction make(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const Factors& den_factors() const { return fac_; }
    LaurentPoly den() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return fac_.empty(); }
    std::vector<Var> variables() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    bool operator==(const RationalFunction& o) const;

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    // Exact value; PoleError if some factor vanishes at the point.
    Rational eval(const std::map<Var, Rational>& point) const;
    RationalFunction eval_partial(const std::map<Var, Rational>& point) const;
    RationalFunction substitute_power(Var v, Var w, long k) const;
    // factor * v d/dv
    RationalFunction euler(Var v, const Rational& factor = 1) const;

    std::string str() const;

private:
    LaurentPoly num_;
    Factors fac_;

    static RationalFunction over(LaurentPoly num, Factors fac);
    void cancel();
};

} // namespace fockcorr

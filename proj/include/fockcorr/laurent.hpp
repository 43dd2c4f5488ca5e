#pragma once

#include "fockcorr/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fockcorr {

// A formal variable. Kinds in use:
//   's'  s_i = t_i^{1/2}
//   'z'  character variable z_j
//   'r'  r_j = z_j^{1/2}, used wherever half-integer z-exponents occur
//   'x'  internal univariate helper variable
struct Var {
    char kind = 'x';
    int index = 0; // 0-based; printed 1-based

    static Var s(int i) { return {'s', i}; }
    static Var z(int i) { return {'z', i}; }
    static Var r(int i) { return {'r', i}; }
    static Var x(int i = 0) { return {'x', i}; }

    std::string name() const;
    static Var parse(const std::string& name);

    auto operator<=>(const Var&) const = default;
};

// Sorted (by Var) list of (variable, nonzero exponent).
class Monomial {
public:
    Monomial() = default;
    static Monomial var(Var v, long e = 1);

    const std::vector<std::pair<Var, long>>& factors() const { return f_; }
    long exponent(Var v) const;
    bool is_one() const { return f_.empty(); }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(long e) const;
    // True when every exponent of this is >= the matching exponent of o.
    bool divisible_by(const Monomial& o) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::pair<Var, long>> f_;
    friend class LaurentPoly;
};

// Lexicographic order: the first variable (in Var order) where the exponents
// differ decides, larger exponent is larger. A total order compatible with
// multiplication.
struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class LaurentPoly {
public:
    using Terms = std::map<Monomial, Rational, LexLess>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c); // NOLINT(google-explicit-constructor)
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)
    static LaurentPoly var(Var v, long e = 1) { return monomial(Monomial::var(v, e)); }
    static LaurentPoly monomial(const Monomial& m, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    std::vector<Var> variables() const;
    // Leading term in LexLess order (the largest monomial).
    const std::pair<const Monomial, Rational>& leading() const;
    // Componentwise minimum of all exponents (the monomial content).
    Monomial min_monomial() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(LaurentPoly a, long c) { return a *= Rational(c); }
    friend LaurentPoly operator+(LaurentPoly a, long c) { return a += LaurentPoly(c); }
    friend LaurentPoly operator-(LaurentPoly a, long c) { return a -= LaurentPoly(c); }
    LaurentPoly mul_monomial(const Monomial& m) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Nonnegative powers for any polynomial; negative powers only for monomials.
    LaurentPoly pow(long e) const;

    // Substitute v -> value. Negative exponents of v require value to be a monomial.
    LaurentPoly substitute(Var v, const LaurentPoly& value) const;
    // Rename or rescale: v -> w^k (monomial map, always legal).
    LaurentPoly substitute_power(Var v, Var w, long k) const;
    // Euler operator: each term c m -> c * factor * exp_v(m) * m.
    LaurentPoly euler(Var v, const Rational& factor = 1) const;
    // Ordinary partial derivative d/dv.
    LaurentPoly derivative(Var v) const;

    // Exact evaluation; throws on unbound variables or 0^{-k}.
    Rational eval(const std::map<Var, Rational>& point) const;
    // Partial evaluation of the given variables.
    LaurentPoly eval_partial(const std::map<Var, Rational>& point) const;

    std::string str() const;
    void add_term(const Monomial& m, const Rational& c);

private:
    Terms terms_;
    friend class RationalFunction;
};

// Quotient q with q * den == num, else throws std::domain_error("inexact division").
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);
// As exact_div but returns nullopt instead of throwing.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& num, const LaurentPoly& den);
// Monic gcd of two polynomials in the single variable v (monomial content ignored).
LaurentPoly univariate_gcd(const LaurentPoly& a, const LaurentPoly& b, Var v);

} // namespace fockcorr

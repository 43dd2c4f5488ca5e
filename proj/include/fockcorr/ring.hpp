#pragma once

#include "fockcorr/laurent.hpp"
#include "fockcorr/ratfunc.hpp"

#include <stdexcept>
#include <string>

namespace fockcorr {

// Per-coefficient-ring glue used by QSeries and the formula code.
template <class R>
struct Ring;

template <>
struct Ring<Rational> {
    static constexpr const char* mode = "rational";
    static bool is_zero(const Rational& x) { return x == 0; }
    static bool is_unit(const Rational& x) { return x != 0; }
    static Rational inverse(const Rational& x)
    {
        if (x == 0) throw PoleError("division by zero");
        return Rational(1) / x;
    }
    static std::string str(const Rational& x) { return to_string(x); }
    static bool is_atom(const Rational&) { return true; }
};

template <>
struct Ring<LaurentPoly> {
    static constexpr const char* mode = "laurent";
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
    static bool is_unit(const LaurentPoly& x) { return x.is_monomial(); }
    static LaurentPoly inverse(const LaurentPoly& x)
    {
        if (!x.is_monomial()) throw std::domain_error("non-unit Laurent coefficient");
        return x.pow(-1);
    }
    static std::string str(const LaurentPoly& x) { return x.str(); }
    static bool is_atom(const LaurentPoly& x) { return x.size() <= 1; }
};

template <>
struct Ring<RationalFunction> {
    static constexpr const char* mode = "ratfunc";
    static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
    static bool is_unit(const RationalFunction& x) { return !x.is_zero(); }
    static RationalFunction inverse(const RationalFunction& x) { return x.inverse(); }
    static std::string str(const RationalFunction& x) { return x.str(); }
    static bool is_atom(const RationalFunction& x) { return x.is_laurent() && x.num().size() <= 1; }
};

} // namespace fockcorr

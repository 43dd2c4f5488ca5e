#pragma once

#include "fockcorr/rational.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace fockcorr {

// Exponent of q, stored as an integer count of sixteenths. The value
// kInfinite marks an exact (never truncated) series.
class QExp {
public:
    static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

    constexpr QExp() = default;
    static constexpr QExp from_sixteenths(std::int64_t n) { QExp e; e.n16_ = n; return e; }
    static constexpr QExp integer(std::int64_t n) { return from_sixteenths(16 * n); }
    static constexpr QExp half(std::int64_t h) { return from_sixteenths(8 * h); }
    static constexpr QExp infinite() { return from_sixteenths(kInfinite); }
    // Throws if the denominator does not divide 16.
    static QExp from_rational(const Rational& r);
    static QExp parse(const std::string& text) { return from_rational(parse_rational(text)); }

    constexpr std::int64_t sixteenths() const { return n16_; }
    constexpr bool is_infinite() const { return n16_ >= kInfinite; }
    Rational to_rational() const { return frac(n16_, 16); }
    std::string str() const;

    constexpr auto operator<=>(const QExp&) const = default;

    friend constexpr QExp operator+(QExp a, QExp b)
    {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return from_sixteenths(a.n16_ + b.n16_);
    }
    friend constexpr QExp operator-(QExp a, QExp b)
    {
        if (a.is_infinite()) return infinite();
        return from_sixteenths(a.n16_ - b.n16_);
    }
    constexpr QExp operator-() const { return from_sixteenths(-n16_); }
    QExp& operator+=(QExp b) { return *this = *this + b; }

private:
    std::int64_t n16_ = 0;
};

// Half-integers as twice their value: weights, mode indices, lattice offsets.
using Half = std::int64_t;

// q^{k^2/2} for k = h/2 is q^{h^2/8}; in sixteenths that is 2 h^2.
constexpr QExp half_square_exp(Half h) { return QExp::from_sixteenths(2 * h * h); }

} // namespace fockcorr

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fockcorr {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// Canonical "a/b" (or "a" when the denominator is 1).
std::string to_string(const Rational& r);

// r^e for any integer e; throws on 0^negative.
Rational rat_pow(const Rational& r, long e);

// a/b in lowest terms (mpq_class(a, b) alone does not reduce).
inline Rational frac(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Exact square root of a rational that is a perfect square, else throws.
Rational rat_sqrt_exact(const Rational& r);

class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fockcorr

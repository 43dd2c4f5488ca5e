#include "fockcorr/rational.hpp"

#include <cctype>

namespace fockcorr {

namespace {

bool valid_integer_text(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

Rational rat_pow(const Rational& r, long e)
{
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw PoleError("zero raised to a negative power");
        return Rational(0);
    }
    unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), m);
    mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), m);
    Rational out = e < 0 ? Rational(d, n) : Rational(n, d);
    out.canonicalize();
    return out;
}

Rational rat_sqrt_exact(const Rational& r)
{
    if (r < 0) throw std::invalid_argument("square root of a negative rational");
    Integer n = r.get_num(), d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        throw std::invalid_argument("not a perfect square: " + to_string(r));
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn, sd);
}

} // namespace fockcorr

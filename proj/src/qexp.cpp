#include "fockcorr/qexp.hpp"

#include <stdexcept>

namespace fockcorr {

QExp QExp::from_rational(const Rational& r)
{
    Rational scaled = r * 16;
    if (!is_integer(scaled))
        throw std::invalid_argument("q-exponent denominator must divide 16: " + to_string(r));
    if (!scaled.get_num().fits_slong_p()) throw std::invalid_argument("q-exponent out of range");
    return from_sixteenths(scaled.get_num().get_si());
}

std::string QExp::str() const
{
    if (is_infinite()) return "inf";
    return to_string(to_rational());
}

} // namespace fockcorr

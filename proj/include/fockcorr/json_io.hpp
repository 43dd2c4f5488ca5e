#pragma once

#include "fockcorr/qseries.hpp"

#include <json.hpp>

namespace fockcorr {

using json = nlohmann::json;

json to_json(const Rational& x);
json to_json(const LaurentPoly& p);
json to_json(const RationalFunction& f);

Rational rational_from_json(const json& j);
LaurentPoly laurent_from_json(const json& j);
RationalFunction ratfunc_from_json(const json& j);

template <class R>
R coeff_from_json(const json& j);
template <>
inline Rational coeff_from_json<Rational>(const json& j) { return rational_from_json(j); }
template <>
inline LaurentPoly coeff_from_json<LaurentPoly>(const json& j) { return laurent_from_json(j); }
template <>
inline RationalFunction coeff_from_json<RationalFunction>(const json& j) { return ratfunc_from_json(j); }

template <class R>
json series_to_json(const QSeries<R>& s)
{
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({{"q", e.str()}, {"coeff", to_json(c)}});
    return {{"mode", Ring<R>::mode}, {"trunc", s.trunc().str()}, {"terms", terms}};
}

// Throws std::invalid_argument when the stored mode is not R's mode.
template <class R>
QSeries<R> series_from_json(const json& j)
{
    if (j.at("mode").get<std::string>() != Ring<R>::mode)
        throw std::invalid_argument("series mode mismatch: expected " + std::string(Ring<R>::mode) + ", got " +
                                    j.at("mode").get<std::string>());
    std::string t = j.at("trunc").get<std::string>();
    QSeries<R> s(t == "inf" ? QExp::infinite() : QExp::parse(t));
    for (const auto& term : j.at("terms")) s.add_term(QExp::parse(term.at("q").get<std::string>()), coeff_from_json<R>(term.at("coeff")));
    return s;
}

} // namespace fockcorr

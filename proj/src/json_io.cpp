#include "fockcorr/json_io.hpp"

namespace fockcorr {

json to_json(const Rational& x)
{
    return to_string(x);
}

json to_json(const LaurentPoly& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m.factors()) exps[v.name()] = e;
        out.push_back({{"exps", exps}, {"coeff", to_string(c)}});
    }
    return out;
}

json to_json(const RationalFunction& f)
{
    json den = json::array();
    for (const auto& [g, m] : f.den_factors()) den.push_back({{"factor", to_json(g)}, {"mult", m}});
    return {{"num", to_json(f.num())}, {"den", den}};
}

Rational rational_from_json(const json& j)
{
    return parse_rational(j.get<std::string>());
}

LaurentPoly laurent_from_json(const json& j)
{
    LaurentPoly p;
    for (const auto& term : j) {
        Monomial m;
        for (const auto& [name, e] : term.at("exps").items()) m = m * Monomial::var(Var::parse(name), e.get<long>());
        p += LaurentPoly::monomial(m, parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

RationalFunction ratfunc_from_json(const json& j)
{
    RationalFunction f = laurent_from_json(j.at("num"));
    for (const auto& d : j.at("den")) {
        int m = d.at("mult").get<int>();
        f *= RationalFunction::make(LaurentPoly(1), laurent_from_json(d.at("factor")).pow(m));
    }
    return f;
}

} // namespace fockcorr

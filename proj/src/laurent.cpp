#include "fockcorr/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fockcorr {

std::string Var::name() const
{
    return std::string(1, kind) + std::to_string(index + 1);
}

Var Var::parse(const std::string& name)
{
    if (name.size() < 2 || std::string("szrx").find(name[0]) == std::string::npos)
        throw std::invalid_argument("bad variable name: " + name);
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw std::invalid_argument("bad variable name: " + name);
    int idx = std::stoi(name.substr(1));
    if (idx < 1) throw std::invalid_argument("bad variable name: " + name);
    return {name[0], idx - 1};
}

Monomial Monomial::var(Var v, long e)
{
    Monomial m;
    if (e != 0) m.f_.emplace_back(v, e);
    return m;
}

long Monomial::exponent(Var v) const
{
    for (const auto& [w, e] : f_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial out;
    out.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
            out.f_.push_back(*a++);
        } else if (a == f_.end() || b->first < a->first) {
            out.f_.push_back(*b++);
        } else {
            long e = a->second + b->second;
            if (e != 0) out.f_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::inverse() const
{
    Monomial out = *this;
    for (auto& p : out.f_) p.second = -p.second;
    return out;
}

Monomial Monomial::pow(long e) const
{
    if (e == 0) return {};
    Monomial out = *this;
    for (auto& p : out.f_) p.second *= e;
    return out;
}

bool Monomial::divisible_by(const Monomial& o) const
{
    for (const auto& [v, e] : (*this * o.inverse()).f_)
        if (e < 0) return false;
    return true;
}

bool LexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.begin(), ib = fb.begin();
    while (ia != fa.end() || ib != fb.end()) {
        long ea = 0, eb = 0;
        if (ib == fb.end() || (ia != fa.end() && ia->first < ib->first)) {
            ea = ia->second;
            ++ia;
        } else if (ia == fa.end() || ib->first < ia->first) {
            eb = ib->second;
            ++ib;
        } else {
            ea = ia->second;
            eb = ib->second;
            ++ia;
            ++ib;
        }
        if (ea != eb) return ea < eb;
    }
    return false;
}

LaurentPoly::LaurentPoly(const Rational& c)
{
    if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rational& c)
{
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational LaurentPoly::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Var> LaurentPoly::variables() const
{
    std::vector<Var> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

const std::pair<const Monomial, Rational>& LaurentPoly::leading() const
{
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

Monomial LaurentPoly::min_monomial() const
{
    Monomial out;
    for (Var v : variables()) {
        bool first = true;
        long lo = 0;
        for (const auto& [m, c] : terms_) {
            long e = m.exponent(v);
            if (first || e < lo) lo = e;
            first = false;
        }
        if (lo != 0) out.f_.emplace_back(v, lo);
    }
    return out;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    if (b.is_constant()) return a * b.constant_term();
    if (a.is_constant()) return b * a.constant_term();
    Rational tmp;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            tmp = ca * cb;
            out.add_term(ma * mb, tmp);
        }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    return *this = *this * o;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m) const
{
    LaurentPoly out;
    for (const auto& [mm, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c);
    return out;
}

LaurentPoly LaurentPoly::pow(long e) const
{
    if (e < 0) {
        if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        return monomial(m.pow(e), rat_pow(c, e));
    }
    LaurentPoly result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute(Var v, const LaurentPoly& value) const
{
    std::map<long, LaurentPoly> powers;
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        long e = m.exponent(v);
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
        Monomial rest = m * Monomial::var(v, -e);
        out += it->second.mul_monomial(rest) * c;
    }
    return out;
}

LaurentPoly LaurentPoly::substitute_power(Var v, Var w, long k) const
{
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        long e = m.exponent(v);
        Monomial rest = m * Monomial::var(v, -e);
        out.add_term(rest * Monomial::var(w, e * k), c);
    }
    return out;
}

LaurentPoly LaurentPoly::euler(Var v, const Rational& factor) const
{
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        long e = m.exponent(v);
        if (e != 0) out.terms_.emplace_hint(out.terms_.end(), m, c * factor * e);
    }
    return out;
}

LaurentPoly LaurentPoly::derivative(Var v) const
{
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        long e = m.exponent(v);
        if (e != 0) out.add_term(m * Monomial::var(v, -1), c * e);
    }
    return out;
}

Rational LaurentPoly::eval(const std::map<Var, Rational>& point) const
{
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end()) throw std::invalid_argument("unbound variable " + v.name());
            t *= rat_pow(it->second, e);
        }
        total += t;
    }
    return total;
}

LaurentPoly LaurentPoly::eval_partial(const std::map<Var, Rational>& point) const
{
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        Monomial rest;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end())
                rest = rest * Monomial::var(v, e);
            else
                t *= rat_pow(it->second, e);
        }
        out.add_term(rest, t);
    }
    return out;
}

std::string LaurentPoly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        if (a < 0) a = -a;
        first = false;
        bool unit = a == 1 && !m.is_one();
        if (!unit) os << to_string(a);
        bool star = !unit;
        for (const auto& [v, e] : m.factors()) {
            if (star) os << "*";
            os << v.name();
            if (e != 1) os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& num, const LaurentPoly& den)
{
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return LaurentPoly();
    if (den.is_monomial()) {
        const auto& [m, c] = *den.terms().begin();
        return num.mul_monomial(m.inverse()) * (Rational(1) / c);
    }
    Monomial mn = num.min_monomial(), md = den.min_monomial();
    LaurentPoly rem = num.mul_monomial(mn.inverse());
    LaurentPoly d = den.mul_monomial(md.inverse());
    const auto& [ld, lc] = d.leading();
    Rational inv_lc = Rational(1) / lc;
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const auto& [lr, rc] = rem.leading();
        Monomial t = lr * ld.inverse();
        for (const auto& [v, e] : t.factors())
            if (e < 0) return std::nullopt;
        Rational c = rc * inv_lc;
        quot.add_term(t, c);
        rem -= d.mul_monomial(t) * c;
    }
    return quot.mul_monomial(mn * md.inverse());
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den)
{
    auto q = try_exact_div(num, den);
    if (!q) throw std::domain_error("inexact division");
    return *q;
}

namespace {

// Dense coefficients (ascending) of a univariate polynomial with monomial content removed.
std::vector<Rational> dense(const LaurentPoly& p, Var v)
{
    std::vector<Rational> out;
    if (p.is_zero()) return out;
    long lo = p.min_monomial().exponent(v);
    for (const auto& [m, c] : p.terms()) {
        if (m.factors().size() > 1 || (!m.is_one() && m.factors()[0].first != v))
            throw std::domain_error("univariate_gcd: polynomial not univariate");
        long e = m.exponent(v) - lo;
        if (static_cast<long>(out.size()) <= e) out.resize(e + 1);
        out[e] = c;
    }
    return out;
}

void trim(std::vector<Rational>& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

} // namespace

LaurentPoly univariate_gcd(const LaurentPoly& a, const LaurentPoly& b, Var v)
{
    std::vector<Rational> x = dense(a, v), y = dense(b, v);
    trim(x);
    trim(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        // x <- x mod y
        while (x.size() >= y.size() && !x.empty()) {
            Rational f = x.back() / y.back();
            std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= f * y[i];
            x.pop_back();
            trim(x);
        }
        std::swap(x, y);
    }
    if (x.empty()) return LaurentPoly();
    Rational lead = x.back();
    LaurentPoly g;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) g += LaurentPoly::monomial(Monomial::var(v, static_cast<long>(i)), x[i] / lead);
    return g;
}

} // namespace fockcorr

#include "fockcorr/ratfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockcorr {

namespace {

struct Canon {
    LaurentPoly poly;  // content-free, leading coefficient 1 (or the constant 1)
    LaurentPoly scale; // monomial with p == scale * poly
};

Canon canonicalize(const LaurentPoly& p)
{
    if (p.is_zero()) throw std::domain_error("zero denominator");
    if (p.is_monomial()) return {LaurentPoly(1), p};
    Monomial m = p.min_monomial();
    LaurentPoly q = p.mul_monomial(m.inverse());
    Rational lc = q.leading().second;
    q *= Rational(1) / lc;
    return {q, LaurentPoly::monomial(m, lc)};
}

bool terms_less(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    LexLess lt;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (lt(ia->first, ib->first)) return true;
        if (lt(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return false;
}

std::optional<Var> sole_variable(const LaurentPoly& p)
{
    auto vs = p.variables();
    if (vs.size() != 1) return std::nullopt;
    return vs[0];
}

// Nontrivial common factor of two polynomials in the same single variable.
std::optional<LaurentPoly> univariate_common(const LaurentPoly& a, const LaurentPoly& b)
{
    auto va = sole_variable(a), vb = sole_variable(b);
    if (!va || !vb || *va != *vb) return std::nullopt;
    LaurentPoly g = univariate_gcd(a, b, *va);
    if (g.is_constant()) return std::nullopt;
    return canonicalize(g).poly;
}

void insert_basis(std::vector<LaurentPoly>& basis, LaurentPoly p)
{
    if (p.is_constant()) return;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const LaurentPoly b = basis[i];
        if (b == p) return;
        if (auto q = try_exact_div(p, b)) {
            insert_basis(basis, canonicalize(*q).poly);
            return;
        }
        if (auto q = try_exact_div(b, p)) {
            basis.erase(basis.begin() + static_cast<long>(i));
            insert_basis(basis, canonicalize(*q).poly);
            insert_basis(basis, p);
            return;
        }
        if (auto g = univariate_common(p, b)) {
            basis.erase(basis.begin() + static_cast<long>(i));
            insert_basis(basis, canonicalize(exact_div(b, *g)).poly);
            insert_basis(basis, canonicalize(exact_div(p, *g)).poly);
            insert_basis(basis, *g);
            return;
        }
    }
    basis.push_back(std::move(p));
}

// Exponents of f (canonical) over the basis; f must be a product of basis elements.
std::vector<int> decompose(LaurentPoly f, const std::vector<LaurentPoly>& basis)
{
    std::vector<int> e(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size() && !f.is_constant(); ++i)
        while (auto q = try_exact_div(f, basis[i])) {
            f = *q;
            ++e[i];
            if (f.is_constant()) break;
        }
    if (!f.is_constant()) throw std::logic_error("denominator factor not in basis");
    return e;
}

struct Common {
    std::vector<LaurentPoly> basis;
    std::vector<int> ea, eb;
};

Common common_basis(const RationalFunction::Factors& fa, const RationalFunction::Factors& fb)
{
    Common c;
    for (const auto& [f, m] : fa) insert_basis(c.basis, f);
    for (const auto& [f, m] : fb) insert_basis(c.basis, f);
    c.ea.assign(c.basis.size(), 0);
    c.eb.assign(c.basis.size(), 0);
    for (const auto& [f, m] : fa) {
        auto e = decompose(f, c.basis);
        for (std::size_t i = 0; i < e.size(); ++i) c.ea[i] += e[i] * m;
    }
    for (const auto& [f, m] : fb) {
        auto e = decompose(f, c.basis);
        for (std::size_t i = 0; i < e.size(); ++i) c.eb[i] += e[i] * m;
    }
    return c;
}

LaurentPoly power_product(const std::vector<LaurentPoly>& basis, const std::vector<int>& e)
{
    LaurentPoly out(1);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (e[i] > 0) out *= basis[i].pow(e[i]);
    return out;
}

RationalFunction::Factors zip(const std::vector<LaurentPoly>& basis, const std::vector<int>& e)
{
    RationalFunction::Factors out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (e[i] > 0) out.emplace_back(basis[i], e[i]);
    return out;
}

} // namespace

RationalFunction RationalFunction::over(LaurentPoly num, Factors fac)
{
    RationalFunction r;
    std::vector<std::pair<LaurentPoly, int>> canon;
    for (auto& [f, m] : fac) {
        if (m == 0) continue;
        if (m < 0) throw std::logic_error("negative denominator multiplicity");
        Canon c = canonicalize(f);
        num *= c.scale.pow(-m);
        if (!c.poly.is_constant()) canon.emplace_back(std::move(c.poly), m);
    }
    r.num_ = std::move(num);
    if (r.num_.is_zero() || canon.empty()) return r;
    std::vector<LaurentPoly> basis;
    for (const auto& [f, m] : canon) insert_basis(basis, f);
    std::vector<int> total(basis.size(), 0);
    for (const auto& [f, m] : canon) {
        auto e = decompose(f, basis);
        for (std::size_t i = 0; i < e.size(); ++i) total[i] += e[i] * m;
    }
    r.fac_ = zip(basis, total);
    r.cancel();
    return r;
}

void RationalFunction::cancel()
{
    if (num_.is_zero()) {
        fac_.clear();
        return;
    }
    bool again = true;
    while (again) {
        again = false;
        for (auto& [f, m] : fac_)
            while (m > 0)
                if (auto q = try_exact_div(num_, f)) {
                    num_ = std::move(*q);
                    --m;
                } else {
                    break;
                }
        std::erase_if(fac_, [](const auto& fm) { return fm.second == 0; });
        for (std::size_t i = 0; i < fac_.size(); ++i) {
            auto g = univariate_common(num_, fac_[i].first);
            if (!g || *g == fac_[i].first) continue;
            LaurentPoly rest = canonicalize(exact_div(fac_[i].first, *g)).poly;
            int m = fac_[i].second;
            Factors split = fac_;
            split.erase(split.begin() + static_cast<long>(i));
            split.emplace_back(*g, m);
            split.emplace_back(rest, m);
            std::vector<LaurentPoly> basis;
            for (const auto& [f, mm] : split) insert_basis(basis, f);
            std::vector<int> total(basis.size(), 0);
            for (const auto& [f, mm] : split) {
                auto e = decompose(f, basis);
                for (std::size_t k = 0; k < e.size(); ++k) total[k] += e[k] * mm;
            }
            fac_ = zip(basis, total);
            again = true;
            break;
        }
    }
    std::sort(fac_.begin(), fac_.end(), [](const auto& a, const auto& b) { return terms_less(a.first, b.first); });
}

RationalFunction RationalFunction::make(const LaurentPoly& num, const LaurentPoly& den)
{
    if (den.is_zero()) throw std::domain_error("zero denominator");
    return over(num, {{den, 1}});
}

LaurentPoly RationalFunction::den() const
{
    LaurentPoly d(1);
    for (const auto& [f, m] : fac_) d *= f.pow(m);
    return d;
}

std::vector<Var> RationalFunction::variables() const
{
    auto vs = num_.variables();
    for (const auto& [f, m] : fac_) {
        auto w = f.variables();
        vs.insert(vs.end(), w.begin(), w.end());
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (fac_ == o.fac_) {
        num_ += o.num_;
        if (!fac_.empty()) cancel();
        return *this;
    }
    Common c = common_basis(fac_, o.fac_);
    std::vector<int> e(c.basis.size()), da(c.basis.size()), db(c.basis.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = std::max(c.ea[i], c.eb[i]);
        da[i] = e[i] - c.ea[i];
        db[i] = e[i] - c.eb[i];
    }
    num_ = num_ * power_product(c.basis, da) + o.num_ * power_product(c.basis, db);
    fac_ = zip(c.basis, e);
    cancel();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o)
{
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    if (is_zero() || o.is_zero()) {
        *this = RationalFunction();
        return *this;
    }
    num_ *= o.num_;
    if (o.fac_.empty()) {
        if (!fac_.empty()) cancel();
        return *this;
    }
    if (fac_.empty()) {
        fac_ = o.fac_;
        cancel();
        return *this;
    }
    Common c = common_basis(fac_, o.fac_);
    std::vector<int> e(c.basis.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = c.ea[i] + c.eb[i];
    fac_ = zip(c.basis, e);
    cancel();
    return *this;
}

bool RationalFunction::operator==(const RationalFunction& o) const
{
    if (num_ == o.num_ && fac_ == o.fac_) return true;
    return (*this - o).is_zero();
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero rational function");
    Canon c = canonicalize(num_);
    LaurentPoly n = den() * c.scale.pow(-1);
    if (c.poly.is_constant()) return over(n, {});
    return over(n, {{c.poly, 1}});
}

RationalFunction RationalFunction::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    RationalFunction out(1), base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

Rational RationalFunction::eval(const std::map<Var, Rational>& point) const
{
    Rational d = 1;
    for (const auto& [f, m] : fac_) {
        Rational v = f.eval(point);
        if (v == 0) throw PoleError("pole at evaluation point");
        d *= rat_pow(v, m);
    }
    return num_.eval(point) / d;
}

RationalFunction RationalFunction::eval_partial(const std::map<Var, Rational>& point) const
{
    Factors fac;
    for (const auto& [f, m] : fac_) {
        LaurentPoly g = f.eval_partial(point);
        if (g.is_zero()) throw PoleError("pole at evaluation point");
        fac.emplace_back(std::move(g), m);
    }
    return over(num_.eval_partial(point), std::move(fac));
}

RationalFunction RationalFunction::substitute_power(Var v, Var w, long k) const
{
    Factors fac;
    for (const auto& [f, m] : fac_) fac.emplace_back(f.substitute_power(v, w, k), m);
    return over(num_.substitute_power(v, w, k), std::move(fac));
}

RationalFunction RationalFunction::euler(Var v, const Rational& factor) const
{
    if (fac_.empty()) return num_.euler(v, factor);
    // E(N / prod f^m) = (E(N) P - N sum m_i E(f_i) P/f_i) / (prod f^m * P), P = prod f
    LaurentPoly p(1);
    for (const auto& [f, m] : fac_) p *= f;
    LaurentPoly top = num_.euler(v, factor) * p;
    for (std::size_t i = 0; i < fac_.size(); ++i) {
        LaurentPoly rest(1);
        for (std::size_t j = 0; j < fac_.size(); ++j)
            if (j != i) rest *= fac_[j].first;
        top -= num_ * fac_[i].first.euler(v, factor) * rest * Rational(fac_[i].second);
    }
    RationalFunction r;
    r.num_ = std::move(top);
    r.fac_ = fac_;
    for (auto& [f, m] : r.fac_) ++m;
    r.cancel();
    return r;
}

std::string RationalFunction::str() const
{
    if (fac_.empty()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(";
    bool first = true;
    for (const auto& [f, m] : fac_) {
        if (!first) os << "*";
        first = false;
        os << "(" << f.str() << ")";
        if (m != 1) os << "^" << m;
    }
    os << ")";
    return os.str();
}

} // namespace fockcorr

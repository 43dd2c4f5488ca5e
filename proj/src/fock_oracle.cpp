#include "fockcorr/fock_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace fockcorr {

QExp OracleSpec::shift() const
{
    if (sector == Sector::NS) return QExp();
    // 1/8 per charged pair, 1/16 for the neutral fermion
    return QExp::from_sixteenths(2L * pairs + (neutral ? 1 : 0));
}

namespace {

enum FlavorKind { Plus = 0, Minus = 1, Neutral = 2, Zero = 3 };

struct Flavor {
    int pair;
    FlavorKind kind;
};

struct Subset {
    QExp energy;
    std::vector<Half> modes;
};

void check_spec(const OracleSpec& spec)
{
    if (spec.pairs < 0) throw std::invalid_argument("oracle: negative number of pairs");
    if (spec.cutoff.is_infinite()) throw std::invalid_argument("oracle: cutoff must be finite");
    if (spec.charge && spec.sector == Sector::R) throw std::invalid_argument("oracle: charge filter is for the NS sector");
    if (spec.charge && spec.pairs == 0) throw std::invalid_argument("oracle: charge filter needs a charged pair");
}

void check_op(const OracleOp& op, const OracleSpec& spec)
{
    switch (op.kind) {
    case 'A':
        if (spec.sector != Sector::NS || spec.neutral) throw std::invalid_argument("oracle: A(t) acts on charged NS fermions only");
        break;
    case 'D':
    case 'C':
        if (spec.sector != Sector::NS) throw std::invalid_argument("oracle: D(t) and C(t) need the NS sector");
        break;
    case 'B':
        if (spec.sector != Sector::R) throw std::invalid_argument("oracle: B(t) needs the R sector");
        break;
    default: throw std::invalid_argument(std::string("oracle: unknown operator ") + op.kind);
    }
    if (op.s.is_zero()) throw PoleError("oracle: s = 0");
}

std::vector<Flavor> flavors(const OracleSpec& spec)
{
    std::vector<Flavor> f;
    for (int p = 0; p < spec.pairs; ++p) {
        f.push_back({p, Plus});
        f.push_back({p, Minus});
    }
    if (spec.neutral) {
        f.push_back({-1, Neutral});
        if (spec.sector == Sector::R) f.push_back({-1, Zero});
    }
    return f;
}

// Creator modes (doubled) of a flavor in increasing order, energy below budget.
std::vector<Half> modes_of(const Flavor& f, const OracleSpec& spec, QExp budget)
{
    std::vector<Half> m;
    if (f.kind == Zero) return {0};
    Half start = 1;
    if (spec.sector == Sector::R) start = (f.kind == Minus) ? 0 : 2;
    for (Half k2 = start; QExp::half(k2) < budget || k2 == 0; k2 += 2) m.push_back(k2);
    return m;
}

// All strict subsets with total energy below budget, sorted by energy.
std::vector<Subset> subsets_of(const Flavor& f, const OracleSpec& spec, QExp budget)
{
    auto modes = modes_of(f, spec, budget);
    std::vector<Subset> out;
    Subset cur{QExp(), {}};
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        out.push_back(cur);
        for (std::size_t i = from; i < modes.size(); ++i) {
            QExp e = cur.energy + QExp::half(modes[i]);
            if (!(e < budget)) break;
            cur.modes.push_back(modes[i]);
            QExp saved = cur.energy;
            cur.energy = e;
            rec(i + 1);
            cur.energy = saved;
            cur.modes.pop_back();
        }
    };
    if (QExp() < budget) rec(0);
    std::stable_sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) { return a.energy < b.energy; });
    return out;
}

template <class V>
struct Num;

template <>
struct Num<Rational> {
    static Rational from(const LaurentPoly& p) { return p.constant_term(); }
    static Rational pw(const Rational& s, long e) { return rat_pow(s, e); }
};

template <>
struct Num<LaurentPoly> {
    static LaurentPoly from(const LaurentPoly& p) { return p; }
    static LaurentPoly pw(const LaurentPoly& s, long e) { return s.pow(e); }
};

template <class V>
V normal_part(const OracleOp& op, FlavorKind kind, const std::vector<Half>& modes, const V& s)
{
    V acc(0);
    for (Half k2 : modes) {
        if (k2 == 0) continue; // zero modes carry no weight
        if (op.kind == 'A') {
            if (kind == Plus) acc += Num<V>::pw(s, k2);
            else acc -= Num<V>::pw(s, -k2);
        } else {
            acc += Num<V>::pw(s, k2) - Num<V>::pw(s, -k2);
        }
    }
    return acc;
}

LaurentPoly central_numerator(const OracleOp& op, const OracleSpec& spec)
{
    switch (op.kind) {
    case 'A': return LaurentPoly(spec.pairs);
    case 'B': return (op.s * op.s + 1) * frac(spec.level2(), 2);
    default: return LaurentPoly(spec.level2());
    }
}

LaurentPoly z_monomial(const OracleSpec& spec, const std::vector<Half>& charge2)
{
    LaurentPoly m(1);
    for (std::size_t p = 0; p < charge2.size(); ++p) {
        if (spec.sector == Sector::R) m *= LaurentPoly::var(Var::r(static_cast<int>(p)), charge2[p]);
        else m *= LaurentPoly::var(Var::z(static_cast<int>(p)), charge2[p] / 2);
    }
    return m;
}

template <class V>
OracleResult trace_impl(const OracleSpec& spec, const std::vector<OracleOp>& ops)
{
    const QExp budget = spec.cutoff - spec.shift();
    auto fl = flavors(spec);
    const std::size_t nops = ops.size();
    std::vector<V> sval, dval, cval;
    LaurentPoly den(1);
    for (const auto& op : ops) {
        sval.push_back(Num<V>::from(op.s));
        LaurentPoly d = central_denominator(op);
        den *= d;
        dval.push_back(Num<V>::from(d));
        cval.push_back(Num<V>::from(central_numerator(op, spec)));
    }
    // per flavor: subsets with their contribution to every operator
    struct Choice {
        QExp energy;
        int count;
        std::vector<V> contrib;
    };
    std::vector<std::vector<Choice>> choices;
    for (const auto& f : fl) {
        std::vector<Choice> cs;
        for (const auto& sub : subsets_of(f, spec, budget)) {
            Choice c{sub.energy, static_cast<int>(sub.modes.size()), {}};
            for (std::size_t i = 0; i < nops; ++i) c.contrib.push_back(normal_part<V>(ops[i], f.kind, sub.modes, sval[i]));
            cs.push_back(std::move(c));
        }
        choices.push_back(std::move(cs));
    }
    using Key = std::pair<std::int64_t, std::vector<Half>>;
    std::map<Key, V> buckets;
    std::vector<V> sums(nops, V(0));
    std::vector<Half> charge2(static_cast<std::size_t>(spec.pairs), spec.sector == Sector::R ? 1 : 0);
    std::size_t states = 0;
    std::function<void(std::size_t, QExp)> rec = [&](std::size_t fi, QExp used) {
        if (fi == fl.size()) {
            if (spec.charge) {
                long total = 0;
                for (Half c : charge2) total += c / 2;
                if (total != *spec.charge) return;
            }
            if (++states > spec.max_states) throw ResourceError("oracle: more states than --max-states allows");
            V val(1);
            for (std::size_t i = 0; i < nops; ++i) val *= sums[i] * dval[i] + cval[i];
            Key key{used.sixteenths(), spec.zgraded ? charge2 : std::vector<Half>{}};
            auto [it, ins] = buckets.try_emplace(key, val);
            if (!ins) it->second += val;
            return;
        }
        const Flavor& f = fl[fi];
        for (const auto& c : choices[fi]) {
            QExp e = used + c.energy;
            if (!(e < budget)) break;
            for (std::size_t i = 0; i < nops; ++i) sums[i] += c.contrib[i];
            Half dq = f.kind == Plus ? 2 * c.count : f.kind == Minus ? -2 * c.count : 0;
            if (f.pair >= 0) charge2[static_cast<std::size_t>(f.pair)] += dq;
            rec(fi + 1, e);
            if (f.pair >= 0) charge2[static_cast<std::size_t>(f.pair)] -= dq;
            for (std::size_t i = 0; i < nops; ++i) sums[i] -= c.contrib[i];
        }
    };
    if (QExp() < budget) rec(0, QExp());
    OracleResult res{QSeries<LaurentPoly>(spec.cutoff), den, states};
    for (const auto& [key, val] : buckets) {
        LaurentPoly coeff = LaurentPoly(val) * z_monomial(spec, key.second);
        res.numerator.add_term(QExp::from_sixteenths(key.first) + spec.shift(), coeff);
    }
    return res;
}

} // namespace

LaurentPoly central_denominator(const OracleOp& op)
{
    if (op.kind == 'B') return op.s * op.s - 1;
    return op.s - op.s.pow(-1);
}

std::vector<FockState> enumerate_states(const OracleSpec& spec)
{
    check_spec(spec);
    const QExp budget = spec.cutoff - spec.shift();
    auto fl = flavors(spec);
    std::vector<std::vector<Subset>> choices;
    for (const auto& f : fl) choices.push_back(subsets_of(f, spec, budget));
    std::vector<FockState> out;
    FockState cur;
    cur.plus.assign(static_cast<std::size_t>(spec.pairs), {});
    cur.minus.assign(static_cast<std::size_t>(spec.pairs), {});
    std::function<void(std::size_t, QExp)> rec = [&](std::size_t fi, QExp used) {
        if (fi == fl.size()) {
            FockState st = cur;
            st.energy = used + spec.shift();
            long total = 0;
            for (int p = 0; p < spec.pairs; ++p) {
                Half c = 2 * (static_cast<Half>(st.plus[p].size()) - static_cast<Half>(st.minus[p].size()));
                total += c / 2;
                if (spec.sector == Sector::R) c += 1;
                st.charge2.push_back(c);
            }
            if (spec.charge && total != *spec.charge) return;
            if (out.size() >= spec.max_states) throw ResourceError("oracle: more states than --max-states allows");
            out.push_back(std::move(st));
            return;
        }
        const Flavor& f = fl[fi];
        for (const auto& c : choices[fi]) {
            QExp e = used + c.energy;
            if (!(e < budget)) break;
            switch (f.kind) {
            case Plus: cur.plus[f.pair] = c.modes; break;
            case Minus: cur.minus[f.pair] = c.modes; break;
            case Neutral: cur.neutral = c.modes; break;
            case Zero: cur.phi0 = !c.modes.empty(); break;
            }
            rec(fi + 1, e);
        }
        switch (f.kind) {
        case Plus: cur.plus[f.pair].clear(); break;
        case Minus: cur.minus[f.pair].clear(); break;
        case Neutral: cur.neutral.clear(); break;
        case Zero: cur.phi0 = false; break;
        }
    };
    if (QExp() < budget) rec(0, QExp());
    return out;
}

Eigen eigenvalue(const OracleOp& op, const FockState& st, const OracleSpec& spec)
{
    check_op(op, spec);
    LaurentPoly acc;
    for (std::size_t p = 0; p < st.plus.size(); ++p) {
        acc += normal_part<LaurentPoly>(op, Plus, st.plus[p], op.s);
        acc += normal_part<LaurentPoly>(op, Minus, st.minus[p], op.s);
    }
    acc += normal_part<LaurentPoly>(op, Neutral, st.neutral, op.s);
    LaurentPoly d = central_denominator(op);
    return {acc * d + central_numerator(op, spec), d};
}

OracleResult trace(const OracleSpec& spec, const std::vector<OracleOp>& ops)
{
    check_spec(spec);
    bool numeric = true;
    for (const auto& op : ops) {
        check_op(op, spec);
        if (!op.s.is_constant()) numeric = false;
    }
    return numeric ? trace_impl<Rational>(spec, ops) : trace_impl<LaurentPoly>(spec, ops);
}

QSeries<RationalFunction> OracleResult::as_ratfunc() const
{
    return numerator.map([&](const LaurentPoly& c) { return RationalFunction::make(c, denominator); });
}

QSeries<LaurentPoly> OracleResult::as_laurent() const
{
    if (!denominator.is_constant()) throw std::logic_error("oracle result has a symbolic denominator");
    Rational inv = Ring<Rational>::inverse(denominator.constant_term());
    return numerator.map([&](const LaurentPoly& c) { return c * inv; });
}

QSeries<Rational> OracleResult::as_rational() const
{
    return as_laurent().map([](const LaurentPoly& c) {
        if (!c.is_constant()) throw std::logic_error("oracle result still depends on z");
        return c.constant_term();
    });
}

int tau_fixed_sign(const std::vector<Half>& plus, const std::vector<Half>& minus)
{
    // basis monomial psi^-_{m1}...psi^-_{mr} psi^+_{n1}...psi^+_{ns}|0>, modes descending;
    // tau swaps the flavors in place, then the word is sorted back
    auto desc = [](std::vector<Half> v) {
        std::sort(v.rbegin(), v.rend());
        return v;
    };
    auto m = desc(minus), p = desc(plus);
    if (m != p) return 0;
    std::vector<std::pair<int, Half>> word;
    for (Half k : m) word.push_back({1, k}); // was psi^-, now psi^+
    for (Half k : p) word.push_back({0, k}); // was psi^+, now psi^-
    auto canonical_less = [](const std::pair<int, Half>& a, const std::pair<int, Half>& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    };
    int inversions = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (canonical_less(word[j], word[i])) ++inversions;
    return inversions % 2 ? -1 : 1;
}

TauTraces tau_refined_trace(const std::vector<OracleOp>& ops, QExp cutoff)
{
    OracleSpec spec;
    spec.pairs = 1;
    spec.cutoff = cutoff;
    spec.charge = 0;
    for (const auto& op : ops) check_op(op, spec);
    LaurentPoly den(1);
    for (const auto& op : ops) den *= central_denominator(op);
    QSeries<LaurentPoly> all(cutoff), twisted(cutoff);
    for (const auto& st : enumerate_states(spec)) {
        LaurentPoly v(1);
        for (const auto& op : ops) v *= eigenvalue(op, st, spec).num;
        all.add_term(st.energy, v);
        if (int sg = tau_fixed_sign(st.plus[0], st.minus[0])) twisted.add_term(st.energy, v * sg);
    }
    TauTraces t;
    t.plus = {(all + twisted) * LaurentPoly(Rational(1, 2)), den, 0};
    t.minus = {(all - twisted) * LaurentPoly(Rational(1, 2)), den, 0};
    return t;
}

} // namespace fockcorr

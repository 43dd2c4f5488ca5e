#include "fockcorr/combinat.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fockcorr {

long size(const Partition& p)
{
    long s = 0;
    for (long x : p) s += x;
    return s;
}

long norm2(const Partition& p)
{
    long s = 0;
    for (long x : p) s += x * x;
    return s;
}

Partition trim(Partition p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

Partition transpose(const Partition& p)
{
    Partition t;
    long first = p.empty() ? 0 : p[0];
    for (long c = 1; c <= first; ++c) {
        long n = 0;
        for (long x : p)
            if (x >= c) ++n;
        t.push_back(n);
    }
    return t;
}

bool is_symmetric(const Partition& p)
{
    return trim(p) == transpose(p);
}

long rank(const Partition& p)
{
    long r = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] >= static_cast<long>(i) + 1) ++r;
    return r;
}

std::vector<Partition> partitions_of(long n)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (long k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Frobenius frobenius(const Partition& p)
{
    if (!is_partition(p)) throw std::invalid_argument("not a partition");
    Frobenius f;
    Partition t = transpose(p);
    long r = rank(p);
    for (long k = 1; k <= r; ++k) {
        f.p.push_back(2 * (p[k - 1] - k) + 1);
        f.q.push_back(2 * (t[k - 1] - k) + 1);
    }
    return f;
}

Partition from_frobenius(const Frobenius& f)
{
    if (f.p.size() != f.q.size()) throw std::invalid_argument("frobenius: length mismatch");
    const long r = static_cast<long>(f.p.size());
    for (long k = 0; k < r; ++k) {
        if (f.p[k] <= 0 || f.q[k] <= 0 || f.p[k] % 2 == 0 || f.q[k] % 2 == 0)
            throw std::invalid_argument("frobenius: entries must be positive half-integers");
        if (k > 0 && (f.p[k] >= f.p[k - 1] || f.q[k] >= f.q[k - 1]))
            throw std::invalid_argument("frobenius: entries must decrease strictly");
    }
    // arm a_k = p_k - 1/2, leg b_k = q_k - 1/2
    Partition lam(r == 0 ? 0 : r + (f.q[0] - 1) / 2, 0);
    for (long k = 1; k <= r; ++k) lam[k - 1] = (f.p[k - 1] - 1) / 2 + k;
    // rows below the diagonal square come from the legs
    for (long i = r + 1; i <= static_cast<long>(lam.size()); ++i) {
        long n = 0;
        for (long k = 1; k <= r; ++k)
            if ((f.q[k - 1] - 1) / 2 + k >= i) ++n;
        lam[i - 1] = n;
    }
    return trim(lam);
}

bool is_odd_strict(const Partition& mu)
{
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0 || mu[i] % 2 == 0) return false;
        if (i > 0 && mu[i] >= mu[i - 1]) return false;
    }
    return true;
}

Partition sym_to_osp(const Partition& p)
{
    if (!is_partition(p) || !is_symmetric(p)) throw std::invalid_argument("sym_to_osp: partition is not symmetric");
    Partition mu;
    for (long i = 1; i <= rank(p); ++i) mu.push_back(2 * p[i - 1] - 2 * i + 1);
    return mu;
}

Partition osp_to_sym(const Partition& mu)
{
    if (!is_odd_strict(mu)) throw std::invalid_argument("osp_to_sym: not an odd strict partition");
    Frobenius f;
    f.p = f.q = std::vector<Half>(mu.begin(), mu.end());
    return from_frobenius(f);
}

std::vector<Partition> odd_strict_partitions(long n)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (long k = std::min(left, maxpart); k >= 1; --k) {
            if (k % 2 == 0) continue;
            cur.push_back(k);
            rec(left - k, k - 2);
            cur.pop_back();
        }
    };
    rec(n, n % 2 == 0 ? n - 1 : n);
    return out;
}

char algebra_char(Algebra a)
{
    switch (a) {
    case Algebra::A: return 'a';
    case Algebra::B: return 'b';
    case Algebra::C: return 'c';
    case Algebra::D: return 'd';
    }
    return '?';
}

Algebra parse_algebra(const std::string& s)
{
    if (s == "a" || s == "A") return Algebra::A;
    if (s == "b" || s == "B") return Algebra::B;
    if (s == "c" || s == "C") return Algebra::C;
    if (s == "d" || s == "D") return Algebra::D;
    throw std::invalid_argument("unknown algebra: " + s);
}

std::vector<Half> ModuleLabel::weight2() const
{
    std::vector<Half> w;
    for (long m : parts) w.push_back(2 * m + (spin ? 1 : 0));
    return w;
}

QExp ModuleLabel::weight_energy() const
{
    QExp e = QExp::integer(0);
    for (Half h : weight2()) e += half_square_exp(h);
    return e;
}

void ModuleLabel::validate() const
{
    auto bad = [](const std::string& why) { throw std::invalid_argument("illegal label: " + why); };
    if (level2 < 1) bad("level must be positive");
    if (parts.size() != static_cast<std::size_t>(rank())) bad("lambda must have exactly l entries");
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) bad("lambda must be weakly decreasing");
    switch (algebra) {
    case Algebra::A:
        if (half_level()) bad("type a needs an integer level");
        if (det || spin) bad("type a takes no flags");
        return;
    case Algebra::C:
        if (half_level()) bad("type c needs an integer level");
        if (det || spin) bad("type c takes no flags");
        break;
    case Algebra::D:
        if (spin) bad("spin labels belong to type b");
        if (!half_level() && det && !parts.empty() && parts.back() != 0) bad("det twist needs lambda_l = 0");
        break;
    case Algebra::B:
        if (!spin) bad("type b labels need --spin");
        if (det) bad("spin labels take no det twist");
        break;
    }
    if (!is_partition(parts)) bad("parts must be nonnegative");
}

std::string ModuleLabel::str() const
{
    std::string s(1, algebra_char(algebra));
    s += " level=" + (level2 % 2 == 0 ? std::to_string(level2 / 2) : std::to_string(level2) + "/2");
    s += " lambda=(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += spin ? std::to_string(2 * parts[i] + 1) + "/2" : std::to_string(parts[i]);
    }
    s += ")";
    if (det) s += " det";
    return s;
}

std::vector<ModuleLabel> enumerate_labels(Algebra a, long level2, QExp bound)
{
    if (bound.is_infinite()) throw std::invalid_argument("enumerate_labels: bound must be finite");
    if (a == Algebra::A) throw std::invalid_argument("enumerate_labels: type a labels are unbounded");
    const int l = static_cast<int>(level2 / 2);
    const bool spin = a == Algebra::B;
    std::vector<ModuleLabel> out;
    Partition cur;
    // parts chosen from the top; every later part is <= the previous one
    std::function<void(long, QExp)> rec = [&](long maxpart, QExp used) {
        if (static_cast<int>(cur.size()) == l) {
            ModuleLabel lab{a, level2, cur, false, spin};
            out.push_back(lab);
            return;
        }
        const int remaining = l - static_cast<int>(cur.size());
        for (long m = 0; m <= maxpart; ++m) {
            // the remaining parts are at least 0 (spin: weight at least 1/2)
            QExp e = used + half_square_exp(2 * m + (spin ? 1 : 0));
            QExp rest = QExp::integer(0);
            for (int k = 1; k < remaining; ++k) rest += half_square_exp(spin ? 1 : 0);
            if (e + rest >= bound) break;
            cur.push_back(m);
            rec(m, e);
            cur.pop_back();
        }
    };
    if (l == 0) {
        out.push_back(ModuleLabel{a, level2, {}, false, spin});
        return out;
    }
    long cap = 0;
    while (half_square_exp(2 * cap) < bound) ++cap;
    rec(cap, QExp::integer(0));
    std::sort(out.begin(), out.end(), [](const ModuleLabel& x, const ModuleLabel& y) {
        QExp ex = x.weight_energy(), ey = y.weight_energy();
        if (ex != ey) return ex < ey;
        return x.parts > y.parts;
    });
    return out;
}

std::map<long, long> fundamental_weight_label(const ModuleLabel& label)
{
    label.validate();
    const long l = label.rank();
    const Partition& m = label.parts;
    long i = 0, j = 0;
    for (long x : m) {
        if (x > 1) ++i;
        if (x >= 1) ++j;
    }
    std::map<long, long> out;
    auto add = [&](long k, long c) {
        if (c < 0) throw std::logic_error("negative fundamental weight coefficient");
        if (c != 0) out[k] += c;
    };
    switch (label.algebra) {
    case Algebra::A:
        for (long x : m) add(x, 1);
        return out;
    case Algebra::C:
        add(0, l - j);
        for (long k = 0; k < j; ++k) add(m[k], 1);
        return out;
    case Algebra::B: {
        long free = label.half_level() ? 2 * l + 1 - 2 * j : 2 * l - 2 * j;
        add(0, free);
        for (long k = 0; k < j; ++k) add(m[k], 1);
        return out;
    }
    case Algebra::D: {
        // Lambda_0 and Lambda_1 absorb the unused slots; the det twist swaps them
        long c0 = (label.half_level() ? 2 * l + 1 : 2 * l) - i - j;
        long c1 = j - i;
        if (label.det) std::swap(c0, c1);
        add(0, c0);
        add(1, c1);
        for (long k = 0; k < i; ++k) add(m[k], 1);
        return out;
    }
    }
    return out;
}

long level2_of(Algebra a, const std::map<long, long>& lambda)
{
    long lev2 = 0;
    for (const auto& [k, c] : lambda) {
        switch (a) {
        case Algebra::A: lev2 += 2 * c; break;
        // b and d: Lambda_0 (and Lambda_1 for d) have level 1/2, the rest level 1
        case Algebra::B: lev2 += (k == 0 ? 1 : 2) * c; break;
        case Algebra::D: lev2 += (k <= 1 ? 1 : 2) * c; break;
        case Algebra::C: lev2 += 2 * c; break;
        }
    }
    return lev2;
}

} // namespace fockcorr

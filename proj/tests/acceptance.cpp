// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
#include "fockcorr/combinat.hpp"
#include "fockcorr/correlators.hpp"
#include "fockcorr/fock_oracle.hpp"
#include "fockcorr/identities.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace fockcorr;

namespace {

using RF = RationalFunction;
using QR = QSeries<Rational>;
using QF = QSeries<RF>;
using Clock = std::chrono::steady_clock;

QExp I(long n) { return QExp::integer(n); }
LaurentPoly s1() { return LaurentPoly::var(Var::s(0)); }

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string note;

    void need(bool ok, const std::string& what)
    {
        if (ok) return;
        if (pass) note = what;
        pass = false;
    }
};

// run registry identities at their defaults, collecting the first failing check
void identities(Outcome& o, const std::vector<std::string>& ids, IdentityParams p = {})
{
    for (const auto& id : ids) {
        auto r = run_identity(id, p);
        if (r.pass()) continue;
        for (const auto& c : r.checks)
            if (!c.pass) {
                o.need(false, id + ": " + c.what + " -- " + c.detail);
                break;
            }
    }
}

void report(int k, const std::function<void(Outcome&)>& body, double limit = 0)
{
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.need(false, std::string("exception: ") + e.what());
    }
    double secs = since(t0);
    if (limit > 0 && secs >= limit) {
        std::ostringstream os;
        os << "took " << secs << " s, limit " << limit << " s";
        o.need(false, os.str());
    }
    std::printf("criterion %d: %s (%.2f s)%s%s\n", k, o.pass ? "PASS" : "FAIL", secs, o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
}

QF to_rf(const QSeries<LaurentPoly>& a)
{
    return a.map([](const LaurentPoly& c) { return RF(c); });
}

} // namespace

int main()
{
    int failed = 0;
    auto run = [&](int k, const std::function<void(Outcome&)>& body, double limit = 0) {
        Outcome probe;
        report(k, [&](Outcome& o) {
            body(o);
            probe = o;
        }, limit);
        if (!probe.pass) ++failed;
    };

    // 1. level-1 d, lambda = 0: closed form = 2/((q;q) Theta) = charge-0 oracle trace
    run(1, [](Outcome& o) {
        const QExp N = I(10);
        Correlators<RF> c(symbolic_args(1), N);
        auto corr = c.npoint({Algebra::D, 2, {0}, false, false});
        auto inv = series_inv(euler_qq(N), N).map([](const Rational& x) { return RF(x); });
        auto expect = inv * series_inv(to_rf(theta(N)), N) * RF(2);
        o.need(corr == expect, "corr differs from 2/((q;q)Theta(t))");
        OracleSpec sp;
        sp.cutoff = N;
        sp.charge = 0;
        o.need(trace(sp, {{'D', s1()}}).as_ratfunc() == corr, "corr differs from the charge-0 oracle trace");
    }, 5);

    // 2. duality grid, evaluation mode, order 8
    run(2, [](Outcome& o) { identities(o, {"howe-D", "howe-C", "howe-Pin", "howe-Dhalf", "howe-Bhalf"}); }, 600);

    // 3. half-level recursions (n = 1, 2 exact, n = 3 eval, closed products at n = 1)
    run(3, [](Outcome& o) { identities(o, {"rec-d-half", "rec-b-half"}); });

    // 4. the two one-variable q-identities at order 12
    run(4, [](Outcome& o) { identities(o, {"cor-d", "cor-b"}); });

    // 5. refined traces against both displayed forms; tr+ - tr- = (q;q^2)
    run(5, [](Outcome& o) {
        const QExp N = I(10);
        auto t = tau_refined_trace({{'D', s1()}}, N);
        auto plus = t.plus.as_ratfunc(), minus = t.minus.as_ratfunc();
        o.need(plus == refined_level1(1, N) && minus == refined_level1(-1, N), "first form");
        o.need(plus == refined_level1_logform(1, -1, N) && minus == refined_level1_logform(-1, -1, N), "log form");
        auto t0 = tau_refined_trace({}, I(20));
        o.need(t0.plus.as_rational() - t0.minus.as_rational() == qpoch(1, I(1), I(2), I(20)), "(q;q^2) at order 20");
        identities(o, {"refined-d"});
    });

    // 6. q-dimension forms and the n = 0 duality at order 10
    run(6, [](Outcome& o) { identities(o, {"qdim-consistency"}); });

    // 7. every registry identity at its defaults
    run(7, [](Outcome& o) {
        std::vector<std::string> ids;
        for (const auto& e : identity_registry()) ids.push_back(e.id);
        identities(o, ids);
    });

    // 8. combinatorial exhaustives
    run(8, [](Outcome& o) {
        for (long n = 0; n <= 12; ++n)
            for (const auto& p : partitions_of(n)) o.need(from_frobenius(frobenius(p)) == p, "Frobenius round trip");
        for (long n = 0; n <= 20; ++n) {
            std::set<Partition> image;
            for (const auto& p : partitions_of(n)) {
                if (!is_symmetric(p)) continue;
                auto mu = sym_to_osp(p);
                o.need(is_odd_strict(mu) && size(mu) == n && osp_to_sym(mu) == p, "sym/OSP inverse");
                image.insert(mu);
            }
            auto osp = odd_strict_partitions(n);
            o.need(image == std::set<Partition>(osp.begin(), osp.end()), "sym/OSP onto");
        }
        const QExp N = I(21);
        QSeries<LaurentPoly> gf(N);
        for (long n = 0; n <= 20; ++n)
            for (const auto& mu : odd_strict_partitions(n)) gf.add_term(I(n), LaurentPoly::var(Var::z(0), static_cast<long>(mu.size())));
        o.need(gf == pochhammer<LaurentPoly>(-LaurentPoly::var(Var::z(0)), I(1), I(2), N), "(-qz;q^2) to q^20");
    });

    // 9. performance guards
    run(9, [](Outcome& o) {
        auto t0 = Clock::now();
        auto inv = series_inv(euler_qq(I(501)), I(501));
        double a = since(t0);
        o.need(inv.coeff(I(500)) == Rational(Integer("2300165032574323995027")), "p(500)");
        o.need(a < 1.0, "(q;q)^-1 to q^500 took " + std::to_string(a) + " s");
        t0 = Clock::now();
        OracleSpec sp;
        sp.pairs = 2;
        sp.cutoff = I(12);
        auto states = enumerate_states(sp);
        double b = since(t0);
        // count against (sum_k q^{k^2/2})^2 / (q;q)^2
        QR theta0(I(12));
        for (long k = -5; k <= 5; ++k) theta0.add_term(QExp::half(k * k), 1);
        auto expect = (theta0 * theta0 * series_pow(euler_qq(I(12)), -2, I(12))).truncated(I(12));
        Rational total = 0;
        for (const auto& [e, c] : expect.terms()) total += c;
        o.need(Rational(static_cast<long>(states.size())) == total, "state count below cutoff 12");
        o.need(b < 30.0, "l = 2 NS enumeration took " + std::to_string(b) + " s");
    });

    return failed == 0 ? 0 : 1;
}

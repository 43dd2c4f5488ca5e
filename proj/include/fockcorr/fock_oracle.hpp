#pragma once

#include "fockcorr/qseries.hpp"

#include <optional>
#include <vector>

namespace fockcorr {

enum class Sector { NS, R };

struct OracleSpec {
    int pairs = 1;
    bool neutral = false;
    Sector sector = Sector::NS;
    QExp cutoff = QExp::integer(1);
    std::optional<long> charge;      // total charge filter (NS only)
    bool zgraded = false;            // attach z_p^{charge_p} (R: r_p^{2 charge_p})
    std::size_t max_states = 200000000;

    long level2() const { return 2L * pairs + (neutral ? 1 : 0); }
    QExp shift() const;
};

// An operator X(t) with t = s^2; s is a constant (eval) or a variable s_i (exact).
struct OracleOp {
    char kind = 'D'; // 'A', 'D', 'C', 'B'
    LaurentPoly s;
};

// Modes are stored doubled: k2 = 2k. R-sector zero modes have k2 = 0.
struct FockState {
    std::vector<std::vector<Half>> plus, minus; // per pair, creator modes
    std::vector<Half> neutral;                  // neutral creator modes (R: k >= 1)
    bool phi0 = false;                          // R-sector neutral zero mode
    QExp energy;                                // includes the sector shift
    std::vector<Half> charge2;                  // per pair, doubled (R adds 1/2)
};

std::vector<FockState> enumerate_states(const OracleSpec& spec);

// Normal-ordered eigenvalue plus central term, as num / den with den the
// central denominator (s - 1/s, or t - 1 for B).
struct Eigen {
    LaurentPoly num, den;
};
Eigen eigenvalue(const OracleOp& op, const FockState& st, const OracleSpec& spec);
LaurentPoly central_denominator(const OracleOp& op);

// Trace = numerator / denominator, both free of q.
struct OracleResult {
    QSeries<LaurentPoly> numerator;
    LaurentPoly denominator;
    std::size_t states = 0;

    QSeries<RationalFunction> as_ratfunc() const;
    // Requires a constant denominator (all s values numeric).
    QSeries<LaurentPoly> as_laurent() const;
    QSeries<Rational> as_rational() const; // additionally no z variables
};

OracleResult trace(const OracleSpec& spec, const std::vector<OracleOp>& ops);

// Traces over the tau = +1 and tau = -1 parts of the charge-0 sector of one
// NS pair, below the cutoff.
struct TauTraces {
    OracleResult plus, minus;
};
TauTraces tau_refined_trace(const std::vector<OracleOp>& ops, QExp cutoff);

// Sign of tau on a basis monomial of one pair (0 if it is not fixed).
int tau_fixed_sign(const std::vector<Half>& plus, const std::vector<Half>& minus);

} // namespace fockcorr

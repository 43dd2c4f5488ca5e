#pragma once

#include "fockcorr/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fockcorr {

// Parameters of a verification run; anything left empty takes the
// identity's default sweep.
struct IdentityParams {
    std::optional<char> type;        // 'B', 'C', 'D' (weyl identities)
    std::optional<int> l;            // rank / number of pairs
    std::optional<int> n;            // number of operator insertions
    std::optional<QExp> order;
    std::optional<bool> exact;       // exact (symbolic s) or evaluation mode
    std::vector<Rational> s;         // evaluation point, s_i = t_i^{1/2}
    int trials = 20;                 // random weights per (type, l)
    unsigned seed = 17;

    std::string str() const;
};

struct CheckResult {
    std::string what;
    QExp order;
    bool pass = false;
    std::string detail; // first mismatch: exponent and both coefficients
};

struct IdentityReport {
    std::string id;
    std::string statement;
    std::string params;
    QExp order;        // highest order reached by any check
    std::vector<CheckResult> checks;

    bool pass() const;
    std::string str() const;
};

struct IdentityInfo {
    std::string id;
    std::string statement;
    std::string defaults;
};

const std::vector<IdentityInfo>& identity_registry();
bool is_identity(const std::string& id);

// Throws std::invalid_argument for unknown ids or unusable parameters.
IdentityReport run_identity(const std::string& id, const IdentityParams& p);

// Denominator-cleared duality check for one family at one (l, args, order):
// product of single-pair oracle traces times the Weyl denominator against
// the sum of character numerators times closed-form correlators.
// family: 'D' (O(2l), level l), 'd' (O(2l+1), level l+1/2), 'C' (Sp(2l)),
// 'P' (Pin(2l), b level l), 'b' (Pin(2l+1), b level l+1/2).
CheckResult duality_check(char family, int l, const std::vector<Rational>& s, QExp order);

} // namespace fockcorr

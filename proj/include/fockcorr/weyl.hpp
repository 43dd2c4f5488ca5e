#pragma once

#include "fockcorr/qexp.hpp"
#include "fockcorr/qseries.hpp"

#include <vector>

namespace fockcorr {

enum class WeylType { B, C, D };

// sigma(e_i) = signs[i] * e_{perm[i]} (0-based).
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> signs;

    // det of the signed permutation matrix
    int sign() const;
    // sigma applied to a weight (entries doubled)
    std::vector<Half> apply(const std::vector<Half>& v) const;
};

std::vector<SignedPerm> weyl_group(WeylType t, int l);

// Positive roots as integer vectors.
std::vector<std::vector<int>> positive_roots(WeylType t, int l);

// Number of positive roots sent to negative roots; (-1)^length should equal sign().
int reduced_length(const SignedPerm& s, WeylType t);

// rho, entries doubled.
std::vector<Half> rho2(WeylType t, int l);

struct WeylTerm {
    int sign;
    QExp qexp;             // |lambda + rho - sigma rho|^2 / 2
    std::vector<Half> k2;  // lambda + rho - sigma rho, doubled
};

// Throws std::invalid_argument on non-dominant weights.
std::vector<WeylTerm> weyl_sum(const std::vector<Half>& lambda2, WeylType t, int l);
QSeries<Rational> weyl_sum_series(const std::vector<Half>& lambda2, WeylType t, int l, QExp order);
QSeries<Rational> weyl_sum_product_form(const std::vector<Half>& lambda2, WeylType t, int l, QExp order);

} // namespace fockcorr

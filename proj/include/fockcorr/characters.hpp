#pragma once

#include "fockcorr/combinat.hpp"
#include "fockcorr/laurent.hpp"

#include <vector>

namespace fockcorr {

enum class CharFamily { SO2l, O2l, B, Sp, Pin };

// Variable carrying z_j^{h/2}: r_j^h when use_r, else z_j^{h/2} (h must be even).
LaurentPoly z_power(int j, Half h, bool use_r);

// det[ x_j^{e_i} + sign * x_j^{-e_i} ], exponents doubled, x_j as in z_power.
LaurentPoly binomial_det(const std::vector<Half>& exps2, int sign, bool use_r);

// Half-integer exponents occur, so the family is written in r-variables.
bool family_uses_r(CharFamily f, const std::vector<Half>& weight2);

// Numerator determinant (without the factor 2 of O(2l) and Pin(2l)) and the
// Weyl denominator determinant. For SO2l the numerator is the sum of the
// two determinants.
LaurentPoly char_numerator(CharFamily f, const std::vector<Half>& weight2);
LaurentPoly char_denominator(CharFamily f, const std::vector<Half>& weight2);

// Character as a Laurent polynomial in z (or r = z^{1/2}); weight entries doubled.
LaurentPoly character(CharFamily f, const std::vector<Half>& weight2);
// Checks that the label belongs to the family first.
LaurentPoly character(CharFamily f, const ModuleLabel& label);

// Coefficient of z^{lambda + rho} in the numerator determinant.
Rational dominant_coefficient(CharFamily f, const std::vector<Half>& weight2);

} // namespace fockcorr

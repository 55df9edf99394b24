#pragma once

#include <span>
#include <vector>

#include "padic/digits.hpp"
#include "padic/fp.hpp"

namespace padic {

// Coefficient transforms between least residues (lsr) and numerically least
// residues (nlr) for odd p, and arithmetic carried out on nlr digits.
//
// a -> a^vee rewrites nlr digits as lsr digits; b -> b^wedge goes back.
// Digit t of either transform depends on the digits below t only through
// an indicator polynomial:
//
//   f_t(x_0..x_{t-1}) = sum_{lam<t} { sum_{c=1}^{(p-1)/2} [(x_lam + c)^{p-1} - 1] }
//                                   * prod_{lam<i<t} (1 - x_i^{p-1})
//   g_t(y_0..y_{t-1}) = sum_{lam<t} { sum_{c=(p+1)/2}^{p-1} [1 - (y_lam - c)^{p-1}] }
//                                   * prod_{lam<i<t} [1 - (y_i - (p-1)/2)^{p-1}]
//
// f_t is -1 exactly when the prefix ends in (-c, 0, ..., 0) with c > 0 (the
// nlr prefix is negative, so a borrow reaches digit t); g_t is 1 exactly when
// the prefix ends in (c, h, ..., h) with c > h = (p-1)/2 (a carry reaches t).

/// f_t on an nlr prefix a_0..a_{t-1}; t = 0 gives 0.
FpElement f_poly(std::span<const int> a_prefix, Prime p);
/// g_t on an lsr prefix b_0..b_{t-1}; t = 0 gives 0.
FpElement g_poly(std::span<const int> b_prefix, Prime p);

/// a^vee: b_t = a_t + f_t(a_0..a_{t-1}) reduced into [0, p-1].
DigitSeq nlr_to_lsr(const DigitSeq& a);
/// b^wedge: a_t = b_t + g_t(b_0..b_{t-1}) reduced into [-(p-1)/2, (p-1)/2].
DigitSeq lsr_to_nlr(const DigitSeq& b);

/// p = 3 forms of the two transforms on raw digit vectors:
///   b_t = a_t + sum_{lam<t} a_lam (a_lam - 1) prod_{lam<i<t} (1 - a_i^2)
///   a_t = b_t + sum_{lam<t} b_lam (1 - b_lam) prod_{lam<i<t} b_i (2 - b_i)
std::vector<int> nlr_to_lsr_ternary(std::span<const int> a);
std::vector<int> lsr_to_nlr_ternary(std::span<const int> b);

/// a + b on nlr digits through the shifted carry formula: the lsr digits
/// (p-1)/2 + a_i and b_i^vee are added with the least-residue carry rule
/// and the shift is taken off again.
DigitSeq add_nlr(const DigitSeq& a, const DigitSeq& b);
/// a + b as lsr_to_nlr(add_digits(a^vee, b^vee)).
DigitSeq add_nlr_via_conversion(const DigitSeq& a, const DigitSeq& b);

/// -a on nlr digits: the negation digit rule applied to a^vee, then wedged
/// back into nlr digits.
DigitSeq negate_nlr(const DigitSeq& a);

/// a * b on nlr digits: (product digits of a^vee and b^vee)^wedge.
DigitSeq multiply_nlr(const DigitSeq& a, const DigitSeq& b);

} // namespace padic

#pragma once

#include <span>

#include "padic/digits.hpp"
#include "padic/fp.hpp"

namespace padic {

/// Digit c_t of A + B from the digit prefixes a_0..a_t and b_0..b_t
/// (least residues). c_0 = a_0 + b_0, and for t >= 1
///
///   c_t = a_t + b_t + sum_{i<t} ( sum_{k=1}^{p-1} C(a_i,k) C(b_i,p-k) )
///                               * prod_{i<j<t} C(a_j + b_j, p-1)      (mod p)
///
/// The inner sum is the carry generated at position i; the product is 1
/// exactly when every later position propagates it (a_j + b_j = p - 1).
FpElement sum_digit(std::span<const int> a_prefix, std::span<const int> b_prefix, Prime p);

/// A + B mod p^n, every digit evaluated independently by sum_digit.
DigitSeq add_digits(const DigitSeq& a, const DigitSeq& b);

/// 2^n a mod 2^precision for a 2-adic digit sequence (n >= 1).
DigitSeq shift(const DigitSeq& a, int n);

/// (2^n + 1) a mod 2^precision via the closed carry form
///   c_t = a_t + a_{t-n} + sum_{n<=i<t} a_i a_{i-n} prod_{i<j<t} (a_j + a_{j-n})  (mod 2).
DigitSeq mul_2n_plus_1(const DigitSeq& a, int n);

/// 2a mod 3^precision via
///   c_t = -a_t + sum_{i<t} a_i (1 - a_i) prod_{i<j<t} a_j (2 a_j - 1)  (mod 3).
DigitSeq double_ternary(const DigitSeq& a);

/// Throws std::invalid_argument unless every digit lies in [0, p-1].
void require_least_residues(std::span<const int> digits, Prime p);

} // namespace padic

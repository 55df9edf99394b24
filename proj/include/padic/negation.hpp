#pragma once

#include <span>

#include "padic/digits.hpp"
#include "padic/fp.hpp"

namespace padic {

/// Digit d_t of -A from a_0..a_t (least residues):
///   d_0 = -a_0,  d_t = -a_t - 1 + prod_{i<t} (1 - a_i^{p-1})   (mod p).
/// The product is 1 iff a_0 = ... = a_{t-1} = 0, i.e. no borrow has started.
FpElement negate_digit(std::span<const int> a_prefix, Prime p);

/// The p = 2 form d_t = a_t + 1 + prod_{i<t} (1 + a_i)  (mod 2).
FpElement negate_digit_binary(std::span<const int> a_prefix);

/// -A mod p^n, digitwise via negate_digit.
DigitSeq negate_digits(const DigitSeq& a);

} // namespace padic

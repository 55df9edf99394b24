#pragma once

#include "padic/digits.hpp"

namespace padic::oracle {

// Reference digit arithmetic: evaluate both operands as integers, apply the
// integer operation, reduce mod p^n and read the digits back in the operands'
// residue system. Evaluation and digit extraction are implemented here
// independently of the digits module.

DigitSeq oracle_add(const DigitSeq& a, const DigitSeq& b);
DigitSeq oracle_neg(const DigitSeq& a);
DigitSeq oracle_mul(const DigitSeq& a, const DigitSeq& b);

} // namespace padic::oracle

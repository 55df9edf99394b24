#pragma once

#include "padic/digits.hpp"

// OpenMP versions of the digit kernels. Every output digit is an independent
// function of the input prefixes, so the digit loop is split across threads.
// The serial functions in addition.hpp, negation.hpp and multiplication.hpp
// are the reference these are tested against.
namespace padic::parallel {

/// Threads OpenMP would use for a parallel region (1 without OpenMP).
int max_threads();

DigitSeq add_digits(const DigitSeq& a, const DigitSeq& b);
DigitSeq negate_digits(const DigitSeq& a);
DigitSeq multiply_digits(const DigitSeq& a, const DigitSeq& b);

/// Builds the shared K-space and partition tables for digits 0..precision-1
/// so that later parallel regions only read them.
void prepare_product_tables(Prime p, std::size_t precision);

} // namespace padic::parallel

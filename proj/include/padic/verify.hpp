#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "padic/digits.hpp"

namespace padic {

enum class ArithOp { add, neg, mul };
ArithOp parse_arith_op(std::string_view text);
std::string_view to_string(ArithOp op);

/// Uniform random digits in the range of (p, system), drawn as
/// low + rng() % width so streams are identical on every platform.
DigitSeq random_digits(std::mt19937_64& rng, Prime p, ResidueSystem system, std::size_t precision);

/// The digit-formula implementation of op in the given residue system
/// (add_digits / negate_digits / multiply_digits for lsr, the nlr variants
/// for nlr). b is ignored for neg.
DigitSeq apply_formula(ArithOp op, const DigitSeq& a, const DigitSeq& b);
/// The big-integer reference for the same operation.
DigitSeq apply_oracle(ArithOp op, const DigitSeq& a, const DigitSeq& b);

struct VerifyConfig {
    Prime p{2};
    ResidueSystem system = ResidueSystem::lsr;
    ArithOp op = ArithOp::add;
    std::size_t cases = 100;
    std::size_t precision = 8;
    std::uint64_t seed = 0;
    bool parallel = true;
};

struct Counterexample {
    std::size_t index;
    DigitSeq a;
    DigitSeq b;
    DigitSeq formula;
    DigitSeq oracle;
};

struct VerifyReport {
    std::size_t cases = 0;
    /// Lowest-index mismatch, if any.
    std::optional<Counterexample> mismatch;
};

/// Differential test of formula against oracle on seeded random operands.
/// Cases are drawn serially (case i consumes a, then b) and checked either
/// serially or across OpenMP threads; both give the same report.
VerifyReport run_verify(const VerifyConfig& config);

} // namespace padic

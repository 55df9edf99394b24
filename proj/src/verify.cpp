#include "padic/verify.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "padic/addition.hpp"
#include "padic/multiplication.hpp"
#include "padic/negation.hpp"
#include "padic/oracle.hpp"
#include "padic/parallel.hpp"
#include "padic/transform.hpp"

namespace padic {

ArithOp parse_arith_op(std::string_view text)
{
    if (text == "add")
        return ArithOp::add;
    if (text == "neg")
        return ArithOp::neg;
    if (text == "mul")
        return ArithOp::mul;
    throw std::invalid_argument("unknown operation: " + std::string(text));
}

std::string_view to_string(ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return "add";
    case ArithOp::neg:
        return "neg";
    case ArithOp::mul:
        return "mul";
    }
    return "?";
}

DigitSeq random_digits(std::mt19937_64& rng, Prime p, ResidueSystem system, std::size_t precision)
{
    const auto [lo, hi] = digit_range(p, system);
    const auto width = static_cast<std::uint64_t>(hi - lo + 1);
    std::vector<int> digits(precision);
    for (auto& d : digits)
        d = lo + static_cast<int>(rng() % width);
    return DigitSeq(p, system, std::move(digits));
}

DigitSeq apply_formula(ArithOp op, const DigitSeq& a, const DigitSeq& b)
{
    const bool lsr = a.system() == ResidueSystem::lsr;
    switch (op) {
    case ArithOp::add:
        return lsr ? add_digits(a, b) : add_nlr(a, b);
    case ArithOp::neg:
        return lsr ? negate_digits(a) : negate_nlr(a);
    case ArithOp::mul:
        return lsr ? multiply_digits(a, b) : multiply_nlr(a, b);
    }
    throw std::logic_error("unhandled operation");
}

DigitSeq apply_oracle(ArithOp op, const DigitSeq& a, const DigitSeq& b)
{
    switch (op) {
    case ArithOp::add:
        return oracle::oracle_add(a, b);
    case ArithOp::neg:
        return oracle::oracle_neg(a);
    case ArithOp::mul:
        return oracle::oracle_mul(a, b);
    }
    throw std::logic_error("unhandled operation");
}

VerifyReport run_verify(const VerifyConfig& config)
{
    if (config.precision == 0)
        throw std::invalid_argument("precision must be at least 1");
    digit_range(config.p, config.system);

    std::mt19937_64 rng(config.seed);
    std::vector<DigitSeq> lhs;
    std::vector<DigitSeq> rhs;
    lhs.reserve(config.cases);
    rhs.reserve(config.cases);
    for (std::size_t i = 0; i < config.cases; ++i) {
        lhs.push_back(random_digits(rng, config.p, config.system, config.precision));
        rhs.push_back(config.op == ArithOp::neg
                          ? DigitSeq::zero(config.p, config.precision, config.system)
                          : random_digits(rng, config.p, config.system, config.precision));
    }
    if (config.op == ArithOp::mul)
        parallel::prepare_product_tables(config.p, config.precision);

    const auto n = static_cast<long>(config.cases);
    std::vector<char> bad(config.cases, 0);
#pragma omp parallel for schedule(dynamic) if (config.parallel)
    for (long i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        bad[k] = apply_formula(config.op, lhs[k], rhs[k]) != apply_oracle(config.op, lhs[k], rhs[k]);
    }

    VerifyReport report;
    report.cases = config.cases;
    for (std::size_t k = 0; k < config.cases; ++k) {
        if (bad[k]) {
            report.mismatch = Counterexample{k, lhs[k], rhs[k],
                                             apply_formula(config.op, lhs[k], rhs[k]),
                                             apply_oracle(config.op, lhs[k], rhs[k])};
            break;
        }
    }
    return report;
}

} // namespace padic

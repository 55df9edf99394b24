#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "padic/digits.hpp"
#include "padic/multiplication.hpp"

namespace padic {

/// Truncated Witt vector (a_0, ..., a_{n-1}) over F_p. Components are stored
/// as residues in [0, p-1]; over F_3 the balanced view maps 2 to -1, which
/// is the Teichmuller lift {-1, 0, 1}.
class WittVector {
public:
    WittVector(Prime p, std::vector<int> components);
    /// Builds an F_3 (or F_2) vector from components in {-1, 0, 1}.
    static WittVector from_balanced(Prime p, std::span<const int> components);

    Prime prime() const noexcept { return p_; }
    std::size_t length() const noexcept { return components_.size(); }
    std::span<const int> components() const noexcept { return components_; }
    int operator[](std::size_t i) const { return components_.at(i); }

    /// Components as centered residues; for p = 3 this is {-1, 0, 1}.
    std::vector<int> balanced() const;

    friend bool operator==(const WittVector&, const WittVector&) = default;

private:
    Prime p_;
    std::vector<int> components_;
};

/// Digits of the p-adic integer sum tau(a_i) p^i for p = 2 (lsr) and
/// p = 3 (nlr); these are the only primes whose Teichmuller lifts are
/// digits of a residue system.
DigitSeq teichmuller_digits(const WittVector& a);
WittVector from_teichmuller_digits(const DigitSeq& d);

// W(F_2) through the 2-adic digit formulas.
WittVector witt_add_f2(const WittVector& a, const WittVector& b);
WittVector witt_neg_f2(const WittVector& a);
WittVector witt_mul_f2(const WittVector& a, const WittVector& b);

// W(F_3) through the digit formulas applied to the lsr images a^vee, b^vee;
// results are wedged back into {0, +-1} and stored as residues.
WittVector witt_add_f3(const WittVector& a, const WittVector& b);
WittVector witt_neg_f3(const WittVector& a);
WittVector witt_mul_f3(const WittVector& a, const WittVector& b,
                       TernaryFactorForm form = TernaryFactorForm::squared);

enum class WittOp { add, neg, mul };
WittOp parse_witt_op(std::string_view text);
std::string_view to_string(WittOp op);

/// Ghost components w_n(x) = sum_{i<=n} p^i x_i^{p^{n-i}} of an integer vector.
std::vector<mpz_class> ghost_components(std::span<const mpz_class> x, Prime p);

/// Reference Witt arithmetic for any p. Components are lifted to [0, p-1],
/// the result is recovered over Z from the ghost map recursion
///   c_n = (W_n - sum_{i<n} p^i c_i^{p^{n-i}}) / p^n,
/// with W_n = w_n(a) + w_n(b), -w_n(a) or w_n(a) w_n(b), and reduced mod p.
/// Throws std::logic_error if a division is not exact.
WittVector witt_ghost_op(WittOp op, const WittVector& a, const std::optional<WittVector>& b);

} // namespace padic

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "padic/prime.hpp"

namespace padic {

/// Digit alphabet of a p-adic expansion.
///  - lsr: least residues {0, 1, ..., p-1}
///  - nlr: numerically least residues {-(p-1)/2, ..., (p-1)/2}, odd p only
enum class ResidueSystem { lsr, nlr };

std::string_view to_string(ResidueSystem s);
ResidueSystem parse_residue_system(std::string_view text);

/// Inclusive digit bounds for (p, system). Throws for nlr with p = 2.
std::pair<int, int> digit_range(Prime p, ResidueSystem system);

/// A truncated p-adic integer: digits d_0, d_1, ..., d_{n-1}, least
/// significant first, representing sum d_i p^i modulo p^n.
///
/// Values are immutable. Every digit is checked against the range of
/// (p, system) on construction and the precision n is at least 1.
class DigitSeq {
public:
    DigitSeq(Prime p, ResidueSystem system, std::vector<int> digits);

    static DigitSeq zero(Prime p, std::size_t precision, ResidueSystem system = ResidueSystem::lsr);

    Prime prime() const noexcept { return p_; }
    ResidueSystem system() const noexcept { return system_; }
    std::size_t precision() const noexcept { return digits_.size(); }

    std::span<const int> digits() const noexcept { return digits_; }
    /// The first len digits (a_0, ..., a_{len-1}).
    std::span<const int> prefix(std::size_t len) const;
    int operator[](std::size_t i) const { return digits_.at(i); }

    bool is_zero() const noexcept;

    friend bool operator==(const DigitSeq&, const DigitSeq&) = default;

private:
    Prime p_;
    ResidueSystem system_;
    std::vector<int> digits_;
};

/// Throws std::invalid_argument unless a and b share p, system and precision.
void require_compatible(const DigitSeq& a, const DigitSeq& b);
/// Throws std::invalid_argument unless a is written in `system`.
void require_system(const DigitSeq& a, ResidueSystem system);

/// Unique digit sequence of n mod p^precision in the given system.
DigitSeq from_integer(const mpz_class& n, Prime p, std::size_t precision,
                      ResidueSystem system = ResidueSystem::lsr);

/// Exact sum d_i p^i, no reduction.
mpz_class to_integer(const DigitSeq& d);

/// Parses "d0,d1,...,dt" (signed decimal, least significant first).
/// Whitespace around tokens is ignored.
DigitSeq parse_digits(std::string_view text, Prime p, ResidueSystem system = ResidueSystem::lsr);

/// Renders the canonical "d0,d1,...,dt" form.
std::string format_digits(const DigitSeq& d);
std::string format_digits(std::span<const int> digits);

} // namespace padic

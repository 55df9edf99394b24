#pragma once

#include <cstdint>
#include <string>

namespace padic {

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

/// A prime modulus. Construction fails for anything that is not prime.
///
/// Primes are capped at kMaxPrime so that products of two reduced residues
/// and the small binomial tables stay comfortably inside 64-bit arithmetic.
class Prime {
public:
    static constexpr std::int64_t kMaxPrime = 1 << 20;

    explicit Prime(std::int64_t value);

    int value() const noexcept { return value_; }
    bool is_odd() const noexcept { return value_ != 2; }
    /// (p-1)/2, the largest magnitude of a numerically-least-residue digit.
    int half() const noexcept { return (value_ - 1) / 2; }

    friend bool operator==(Prime, Prime) = default;

private:
    int value_;
};

std::string to_string(Prime p);

} // namespace padic

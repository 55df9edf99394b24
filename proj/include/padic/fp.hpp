#pragma once

#include <cstdint>
#include <iosfwd>

#include "padic/prime.hpp"

namespace padic {

/// Least non-negative residue of v modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t v, std::int64_t m) noexcept
{
    const std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

/// An element of F_p, stored as its representative in [0, p-1].
class FpElement {
public:
    FpElement(std::int64_t value, Prime p)
        : value_(static_cast<int>(mod_floor(value, p.value()))), p_(p)
    {
    }

    static FpElement zero(Prime p) { return {0, p}; }
    static FpElement one(Prime p) { return {1, p}; }

    int value() const noexcept { return value_; }
    Prime prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return value_ == 0; }

    /// Representative in [-(p-1)/2, (p-1)/2]; for p = 2 this is the plain residue.
    int centered() const noexcept
    {
        return value_ > p_.half() && p_.is_odd() ? value_ - p_.value() : value_;
    }

    FpElement pow(std::uint64_t e) const;

    FpElement& operator+=(FpElement o);
    FpElement& operator-=(FpElement o);
    FpElement& operator*=(FpElement o);

    friend FpElement operator+(FpElement a, FpElement b) { return a += b; }
    friend FpElement operator-(FpElement a, FpElement b) { return a -= b; }
    friend FpElement operator*(FpElement a, FpElement b) { return a *= b; }
    friend FpElement operator-(FpElement a) { return FpElement(-a.value_, a.p_); }

    friend bool operator==(const FpElement&, const FpElement&) = default;

private:
    int value_;
    Prime p_;
};

std::ostream& operator<<(std::ostream& os, const FpElement& x);

} // namespace padic

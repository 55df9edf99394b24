#pragma once

#include <cstdint>
#include <vector>

#include "padic/fp.hpp"
#include "padic/prime.hpp"

namespace padic {

/// Table of C(n, k) mod p for 0 <= n < 2p, filled from exact integer
/// binomials and reduced afterwards, so no modular inverses are involved.
/// This covers every binomial the digit formulas need (arguments are sums
/// of at most two digits).
class SmallBinomials {
public:
    explicit SmallBinomials(Prime p);

    /// Shared table for p, built on first use. Thread-safe.
    static const SmallBinomials& for_prime(Prime p);

    Prime prime() const noexcept { return p_; }
    /// Exclusive upper bound on n, i.e. 2p.
    int limit() const noexcept { return 2 * p_.value(); }

    /// C(n, k) mod p, zero when k < 0 or k > n. Requires 0 <= n < 2p.
    int operator()(int n, int k) const;

private:
    Prime p_;
    bool tabulated_;
    std::vector<int> table_;
};

/// C(n, k) mod p. Exact for n < 2p, Lucas decomposition above that.
FpElement binom_mod_p(std::uint64_t n, std::uint64_t k, Prime p);

/// Product of C(a_i, b_i) mod p over the base-p digits of A and B.
FpElement lucas_binom(std::uint64_t a, std::uint64_t b, Prime p);

/// The t-th base-p digit of A, read off as C(A, p^t) mod p.
FpElement digit_via_lucas(std::uint64_t a, unsigned t, Prime p);

} // namespace padic

#include "padic/lucas.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <gmpxx.h>

namespace padic {

namespace {

constexpr int kTabulateBelow = 512;

int exact_binom_mod(int n, int k, int p)
{
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return static_cast<int>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
}

} // namespace

SmallBinomials::SmallBinomials(Prime p) : p_(p), tabulated_(p.value() < kTabulateBelow)
{
    if (!tabulated_)
        return;
    const int lim = limit();
    table_.assign(static_cast<std::size_t>(lim) * lim, 0);
    for (int n = 0; n < lim; ++n) {
        for (int k = 0; k <= n; ++k)
            table_[static_cast<std::size_t>(n) * lim + k] = exact_binom_mod(n, k, p.value());
    }
}

const SmallBinomials& SmallBinomials::for_prime(Prime p)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<SmallBinomials>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[p.value()];
    if (!slot)
        slot = std::make_unique<SmallBinomials>(p);
    return *slot;
}

int SmallBinomials::operator()(int n, int k) const
{
    if (n < 0 || n >= limit())
        throw std::out_of_range("small binomial argument outside [0, 2p)");
    if (k < 0 || k > n)
        return 0;
    if (!tabulated_)
        return exact_binom_mod(n, k, p_.value());
    return table_[static_cast<std::size_t>(n) * limit() + k];
}

FpElement binom_mod_p(std::uint64_t n, std::uint64_t k, Prime p)
{
    if (k > n)
        return FpElement::zero(p);
    const std::uint64_t pv = static_cast<std::uint64_t>(p.value());
    if (n < 2 * pv) {
        const auto& small = SmallBinomials::for_prime(p);
        return {small(static_cast<int>(n), static_cast<int>(k)), p};
    }
    const auto low = binom_mod_p(n % pv, k % pv, p);
    if (low.is_zero())
        return low;
    return low * binom_mod_p(n / pv, k / pv, p);
}

FpElement lucas_binom(std::uint64_t a, std::uint64_t b, Prime p)
{
    const auto& small = SmallBinomials::for_prime(p);
    const std::uint64_t pv = static_cast<std::uint64_t>(p.value());
    FpElement acc = FpElement::one(p);
    while (a != 0 || b != 0) {
        const int ai = static_cast<int>(a % pv);
        const int bi = static_cast<int>(b % pv);
        acc *= FpElement(small(ai, bi), p);
        if (acc.is_zero())
            break;
        a /= pv;
        b /= pv;
    }
    return acc;
}

FpElement digit_via_lucas(std::uint64_t a, unsigned t, Prime p)
{
    const std::uint64_t pv = static_cast<std::uint64_t>(p.value());
    std::uint64_t power = 1;
    for (unsigned i = 0; i < t; ++i) {
        if (power > a / pv)
            return FpElement::zero(p); // p^t > a
        power *= pv;
    }
    return lucas_binom(a, power, p);
}

} // namespace padic

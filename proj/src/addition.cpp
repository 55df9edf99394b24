#include "padic/addition.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "padic/lucas.hpp"

namespace padic {

void require_least_residues(std::span<const int> digits, Prime p)
{
    for (int d : digits) {
        if (d < 0 || d >= p.value())
            throw std::invalid_argument("digit out of range [0, p-1]: " + std::to_string(d));
    }
}

FpElement sum_digit(std::span<const int> a_prefix, std::span<const int> b_prefix, Prime p)
{
    if (a_prefix.empty() || a_prefix.size() != b_prefix.size())
        throw std::invalid_argument("sum_digit needs two non-empty prefixes of equal length");
    require_least_residues(a_prefix, p);
    require_least_residues(b_prefix, p);

    const auto& binom = SmallBinomials::for_prime(p);
    const int pv = p.value();
    const std::size_t t = a_prefix.size() - 1;

    std::int64_t c = a_prefix[t] + b_prefix[t];
    for (std::size_t i = 0; i < t; ++i) {
        std::int64_t generated = 0;
        for (int k = 1; k < pv; ++k)
            generated += std::int64_t{binom(a_prefix[i], k)} * binom(b_prefix[i], pv - k);
        generated %= pv;
        if (generated == 0)
            continue;
        std::int64_t propagated = 1;
        for (std::size_t j = i + 1; j < t && propagated != 0; ++j)
            propagated = propagated * binom(a_prefix[j] + b_prefix[j], pv - 1) % pv;
        c += generated * propagated;
    }
    return {c, p};
}

DigitSeq add_digits(const DigitSeq& a, const DigitSeq& b)
{
    require_compatible(a, b);
    require_system(a, ResidueSystem::lsr);
    std::vector<int> c(a.precision());
    for (std::size_t t = 0; t < c.size(); ++t)
        c[t] = sum_digit(a.prefix(t + 1), b.prefix(t + 1), a.prime()).value();
    return DigitSeq(a.prime(), ResidueSystem::lsr, std::move(c));
}

namespace {

void require_binary(const DigitSeq& a, int n)
{
    if (a.prime().value() != 2)
        throw std::invalid_argument("operation defined for p = 2 only");
    require_system(a, ResidueSystem::lsr);
    if (n < 1)
        throw std::invalid_argument("shift amount must be at least 1");
}

} // namespace

DigitSeq shift(const DigitSeq& a, int n)
{
    require_binary(a, n);
    const std::size_t len = a.precision();
    std::vector<int> c(len, 0);
    for (std::size_t t = static_cast<std::size_t>(n); t < len; ++t)
        c[t] = a[t - static_cast<std::size_t>(n)];
    return DigitSeq(a.prime(), ResidueSystem::lsr, std::move(c));
}

DigitSeq mul_2n_plus_1(const DigitSeq& a, int n)
{
    require_binary(a, n);
    const auto d = a.digits();
    const std::size_t len = d.size();
    const std::size_t sn = static_cast<std::size_t>(n);
    std::vector<int> c(len);
    for (std::size_t t = 0; t < len; ++t) {
        if (t < sn) {
            c[t] = d[t];
            continue;
        }
        int v = d[t] + d[t - sn];
        for (std::size_t i = sn; i < t; ++i) {
            int term = d[i] & d[i - sn];
            for (std::size_t j = i + 1; j < t && term; ++j)
                term &= (d[j] + d[j - sn]) & 1;
            v += term;
        }
        c[t] = v & 1;
    }
    return DigitSeq(a.prime(), ResidueSystem::lsr, std::move(c));
}

DigitSeq double_ternary(const DigitSeq& a)
{
    if (a.prime().value() != 3)
        throw std::invalid_argument("double_ternary is defined for p = 3 only");
    require_system(a, ResidueSystem::lsr);
    const auto d = a.digits();
    std::vector<int> c(d.size());
    for (std::size_t t = 0; t < d.size(); ++t) {
        int v = -d[t];
        for (std::size_t i = 0; i < t; ++i) {
            int term = d[i] * (1 - d[i]);
            for (std::size_t j = i + 1; j < t && term != 0; ++j)
                term = term * d[j] * (2 * d[j] - 1) % 3;
            v += term;
        }
        c[t] = static_cast<int>(mod_floor(v, 3));
    }
    return DigitSeq(a.prime(), ResidueSystem::lsr, std::move(c));
}

} // namespace padic

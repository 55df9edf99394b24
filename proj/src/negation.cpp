#include "padic/negation.hpp"

#include <stdexcept>
#include <vector>

#include "padic/addition.hpp"

namespace padic {

FpElement negate_digit(std::span<const int> a_prefix, Prime p)
{
    if (a_prefix.empty())
        throw std::invalid_argument("negate_digit needs a non-empty prefix");
    require_least_residues(a_prefix, p);
    const std::size_t t = a_prefix.size() - 1;
    const FpElement one = FpElement::one(p);

    FpElement d = -FpElement(a_prefix[t], p);
    if (t == 0)
        return d;
    FpElement untouched = one;
    for (std::size_t i = 0; i < t; ++i)
        untouched *= one - FpElement(a_prefix[i], p).pow(static_cast<std::uint64_t>(p.value() - 1));
    return d - one + untouched;
}

FpElement negate_digit_binary(std::span<const int> a_prefix)
{
    const Prime two(2);
    if (a_prefix.empty())
        throw std::invalid_argument("negate_digit_binary needs a non-empty prefix");
    require_least_residues(a_prefix, two);
    const std::size_t t = a_prefix.size() - 1;
    if (t == 0)
        return {a_prefix[0], two};
    int untouched = 1;
    for (std::size_t i = 0; i < t; ++i)
        untouched &= 1 + a_prefix[i];
    return {a_prefix[t] + 1 + untouched, two};
}

DigitSeq negate_digits(const DigitSeq& a)
{
    require_system(a, ResidueSystem::lsr);
    std::vector<int> d(a.precision());
    for (std::size_t t = 0; t < d.size(); ++t)
        d[t] = negate_digit(a.prefix(t + 1), a.prime()).value();
    return DigitSeq(a.prime(), ResidueSystem::lsr, std::move(d));
}

} // namespace padic

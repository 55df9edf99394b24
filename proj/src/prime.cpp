#include "padic/prime.hpp"

#include <stdexcept>

namespace padic {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0 || n % 3 == 0)
        return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0)
            return false;
    }
    return true;
}

Prime::Prime(std::int64_t value)
{
    if (!is_prime(value))
        throw std::invalid_argument("not a prime: " + std::to_string(value));
    if (value > kMaxPrime)
        throw std::invalid_argument("prime too large: " + std::to_string(value));
    value_ = static_cast<int>(value);
}

std::string to_string(Prime p) { return std::to_string(p.value()); }

} // namespace padic

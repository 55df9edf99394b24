#include "padic/fp.hpp"

#include <ostream>
#include <stdexcept>

namespace padic {

namespace {

void require_same_field(const FpElement& a, const FpElement& b)
{
    if (a.prime() != b.prime())
        throw std::invalid_argument("F_p elements over different primes");
}

} // namespace

FpElement FpElement::pow(std::uint64_t e) const
{
    const std::int64_t p = p_.value();
    std::int64_t base = value_;
    std::int64_t acc = 1 % p;
    while (e) {
        if (e & 1)
            acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return {acc, p_};
}

FpElement& FpElement::operator+=(FpElement o)
{
    require_same_field(*this, o);
    value_ = static_cast<int>(mod_floor(std::int64_t{value_} + o.value_, p_.value()));
    return *this;
}

FpElement& FpElement::operator-=(FpElement o)
{
    require_same_field(*this, o);
    value_ = static_cast<int>(mod_floor(std::int64_t{value_} - o.value_, p_.value()));
    return *this;
}

FpElement& FpElement::operator*=(FpElement o)
{
    require_same_field(*this, o);
    value_ = static_cast<int>(std::int64_t{value_} * o.value_ % p_.value());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const FpElement& x)
{
    return os << x.value() << " (mod " << x.prime().value() << ")";
}

} // namespace padic

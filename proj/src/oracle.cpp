#include "padic/oracle.hpp"

#include <vector>

namespace padic::oracle {

namespace {

mpz_class value_of(const DigitSeq& d)
{
    mpz_class acc = 0;
    mpz_class place = 1;
    for (int digit : d.digits()) {
        acc += place * digit;
        place *= d.prime().value();
    }
    return acc;
}

// Repeated division with a remainder chosen in the target digit range.
DigitSeq digits_of(mpz_class n, Prime p, std::size_t precision, ResidueSystem system)
{
    const long pv = p.value();
    std::vector<int> digits(precision);
    for (std::size_t i = 0; i < precision; ++i) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(pv));
        long digit = r.get_si();
        if (system == ResidueSystem::nlr && digit > pv / 2)
            digit -= pv;
        digits[i] = static_cast<int>(digit);
        n -= digit;
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(pv));
    }
    return DigitSeq(p, system, std::move(digits));
}

} // namespace

DigitSeq oracle_add(const DigitSeq& a, const DigitSeq& b)
{
    require_compatible(a, b);
    return digits_of(value_of(a) + value_of(b), a.prime(), a.precision(), a.system());
}

DigitSeq oracle_neg(const DigitSeq& a)
{
    return digits_of(-value_of(a), a.prime(), a.precision(), a.system());
}

DigitSeq oracle_mul(const DigitSeq& a, const DigitSeq& b)
{
    require_compatible(a, b);
    return digits_of(value_of(a) * value_of(b), a.prime(), a.precision(), a.system());
}

} // namespace padic::oracle

#include "padic/digits.hpp"

#include <charconv>
#include <stdexcept>

namespace padic {

std::string_view to_string(ResidueSystem s)
{
    return s == ResidueSystem::lsr ? "lsr" : "nlr";
}

ResidueSystem parse_residue_system(std::string_view text)
{
    if (text == "lsr")
        return ResidueSystem::lsr;
    if (text == "nlr")
        return ResidueSystem::nlr;
    throw std::invalid_argument("unknown residue system: " + std::string(text));
}

std::pair<int, int> digit_range(Prime p, ResidueSystem system)
{
    if (system == ResidueSystem::lsr)
        return {0, p.value() - 1};
    if (!p.is_odd())
        throw std::invalid_argument("the numerically least residue system requires an odd prime");
    return {-p.half(), p.half()};
}

DigitSeq::DigitSeq(Prime p, ResidueSystem system, std::vector<int> digits)
    : p_(p), system_(system), digits_(std::move(digits))
{
    if (digits_.empty())
        throw std::invalid_argument("digit sequence must have at least one digit");
    const auto [lo, hi] = digit_range(p_, system_);
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] < lo || digits_[i] > hi) {
            throw std::invalid_argument("digit " + std::to_string(i) + " out of range: "
                                        + std::to_string(digits_[i]));
        }
    }
}

DigitSeq DigitSeq::zero(Prime p, std::size_t precision, ResidueSystem system)
{
    return DigitSeq(p, system, std::vector<int>(precision, 0));
}

std::span<const int> DigitSeq::prefix(std::size_t len) const
{
    if (len > digits_.size())
        throw std::out_of_range("prefix longer than the digit sequence");
    return std::span<const int>(digits_).first(len);
}

bool DigitSeq::is_zero() const noexcept
{
    for (int d : digits_) {
        if (d != 0)
            return false;
    }
    return true;
}

void require_compatible(const DigitSeq& a, const DigitSeq& b)
{
    if (a.prime() != b.prime())
        throw std::invalid_argument("digit sequences over different primes");
    if (a.system() != b.system())
        throw std::invalid_argument("digit sequences in different residue systems");
    if (a.precision() != b.precision())
        throw std::invalid_argument("digit sequences of different precision");
}

void require_system(const DigitSeq& a, ResidueSystem system)
{
    if (a.system() != system) {
        throw std::invalid_argument("expected digits in the " + std::string(to_string(system))
                                    + " system");
    }
}

DigitSeq from_integer(const mpz_class& n, Prime p, std::size_t precision, ResidueSystem system)
{
    if (precision == 0)
        throw std::invalid_argument("precision must be at least 1");
    // Throws for nlr over p = 2.
    digit_range(p, system);

    const unsigned long pv = static_cast<unsigned long>(p.value());
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), pv, precision);

    // nlr digits are the lsr digits of n + H shifted down by (p-1)/2, where
    // H = sum (p-1)/2 p^i over the retained positions.
    mpz_class shifted = n;
    if (system == ResidueSystem::nlr)
        shifted += (modulus - 1) / 2;

    mpz_class r;
    mpz_mod(r.get_mpz_t(), shifted.get_mpz_t(), modulus.get_mpz_t());

    const int offset = system == ResidueSystem::nlr ? p.half() : 0;
    std::vector<int> digits(precision);
    for (std::size_t i = 0; i < precision; ++i) {
        const unsigned long d = mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), pv);
        digits[i] = static_cast<int>(d) - offset;
    }
    return DigitSeq(p, system, std::move(digits));
}

mpz_class to_integer(const DigitSeq& d)
{
    mpz_class acc = 0;
    const auto digits = d.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc *= d.prime().value();
        acc += *it;
    }
    return acc;
}

DigitSeq parse_digits(std::string_view text, Prime p, ResidueSystem system)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };

    if (trim(text).empty())
        throw std::invalid_argument("empty digit text");

    std::vector<int> digits;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view token = trim(text.substr(start, comma == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : comma - start));
        if (!token.empty() && token.front() == '+')
            token.remove_prefix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed digit token: '" + std::string(token) + "'");
        digits.push_back(value);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return DigitSeq(p, system, std::move(digits));
}

std::string format_digits(std::span<const int> digits)
{
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(digits[i]);
    }
    return out;
}

std::string format_digits(const DigitSeq& d) { return format_digits(d.digits()); }

} // namespace padic

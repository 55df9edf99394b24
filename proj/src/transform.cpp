#include "padic/transform.hpp"

#include <stdexcept>

#include "padic/addition.hpp"
#include "padic/lucas.hpp"
#include "padic/multiplication.hpp"
#include "padic/negation.hpp"

namespace padic {

namespace {

void require_odd(Prime p)
{
    if (!p.is_odd())
        throw std::invalid_argument("residue-system transforms need an odd prime");
}

void require_nlr_digits(std::span<const int> digits, Prime p)
{
    for (int d : digits) {
        if (d < -p.half() || d > p.half())
            throw std::invalid_argument("digit out of the numerically least range: " + std::to_string(d));
    }
}

int centered(std::int64_t v, Prime p) { return FpElement(v, p).centered(); }

} // namespace

FpElement f_poly(std::span<const int> a_prefix, Prime p)
{
    require_odd(p);
    require_nlr_digits(a_prefix, p);
    const auto e = static_cast<std::uint64_t>(p.value() - 1);
    const FpElement one = FpElement::one(p);
    FpElement total = FpElement::zero(p);
    const std::size_t t = a_prefix.size();
    for (std::size_t lam = 0; lam < t; ++lam) {
        FpElement negative = FpElement::zero(p);
        for (int c = 1; c <= p.half(); ++c)
            negative += FpElement(a_prefix[lam] + c, p).pow(e) - one;
        if (negative.is_zero())
            continue;
        FpElement trailing_zero = one;
        for (std::size_t i = lam + 1; i < t && !trailing_zero.is_zero(); ++i)
            trailing_zero *= one - FpElement(a_prefix[i], p).pow(e);
        total += negative * trailing_zero;
    }
    return total;
}

FpElement g_poly(std::span<const int> b_prefix, Prime p)
{
    require_odd(p);
    require_least_residues(b_prefix, p);
    const auto e = static_cast<std::uint64_t>(p.value() - 1);
    const FpElement one = FpElement::one(p);
    FpElement total = FpElement::zero(p);
    const std::size_t t = b_prefix.size();
    for (std::size_t lam = 0; lam < t; ++lam) {
        FpElement large = FpElement::zero(p);
        for (int c = p.half() + 1; c <= p.value() - 1; ++c)
            large += one - FpElement(b_prefix[lam] - c, p).pow(e);
        if (large.is_zero())
            continue;
        FpElement trailing_half = one;
        for (std::size_t i = lam + 1; i < t && !trailing_half.is_zero(); ++i)
            trailing_half *= one - FpElement(b_prefix[i] - p.half(), p).pow(e);
        total += large * trailing_half;
    }
    return total;
}

DigitSeq nlr_to_lsr(const DigitSeq& a)
{
    require_odd(a.prime());
    require_system(a, ResidueSystem::nlr);
    const Prime p = a.prime();
    std::vector<int> b(a.precision());
    for (std::size_t t = 0; t < b.size(); ++t)
        b[t] = (FpElement(a[t], p) + f_poly(a.prefix(t), p)).value();
    return DigitSeq(p, ResidueSystem::lsr, std::move(b));
}

DigitSeq lsr_to_nlr(const DigitSeq& b)
{
    require_odd(b.prime());
    require_system(b, ResidueSystem::lsr);
    const Prime p = b.prime();
    std::vector<int> a(b.precision());
    for (std::size_t t = 0; t < a.size(); ++t)
        a[t] = (FpElement(b[t], p) + g_poly(b.prefix(t), p)).centered();
    return DigitSeq(p, ResidueSystem::nlr, std::move(a));
}

std::vector<int> nlr_to_lsr_ternary(std::span<const int> a)
{
    const Prime three(3);
    require_nlr_digits(a, three);
    std::vector<int> b(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) {
        int v = a[t];
        for (std::size_t lam = 0; lam < t; ++lam) {
            int term = a[lam] * (a[lam] - 1);
            for (std::size_t i = lam + 1; i < t && term != 0; ++i)
                term = term * (1 - a[i] * a[i]) % 3;
            v += term;
        }
        b[t] = static_cast<int>(mod_floor(v, 3));
    }
    return b;
}

std::vector<int> lsr_to_nlr_ternary(std::span<const int> b)
{
    const Prime three(3);
    require_least_residues(b, three);
    std::vector<int> a(b.size());
    for (std::size_t t = 0; t < b.size(); ++t) {
        int v = b[t];
        for (std::size_t lam = 0; lam < t; ++lam) {
            int term = b[lam] * (1 - b[lam]);
            for (std::size_t i = lam + 1; i < t && term != 0; ++i)
                term = term * b[i] * (2 - b[i]) % 3;
            v += term;
        }
        a[t] = centered(v, three);
    }
    return a;
}

DigitSeq add_nlr(const DigitSeq& a, const DigitSeq& b)
{
    require_compatible(a, b);
    require_system(a, ResidueSystem::nlr);
    const Prime p = a.prime();
    require_odd(p);
    const int pv = p.value();
    const int h = p.half();
    const auto& binom = SmallBinomials::for_prime(p);
    const DigitSeq bv = nlr_to_lsr(b);

    std::vector<int> c(a.precision());
    for (std::size_t t = 0; t < c.size(); ++t) {
        std::int64_t v = a[t] + bv[t];
        for (std::size_t i = 0; i < t; ++i) {
            std::int64_t generated = 0;
            for (int j = 1; j < pv; ++j)
                generated += std::int64_t{binom(h + a[i], j)} * binom(bv[i], pv - j);
            generated %= pv;
            if (generated == 0)
                continue;
            std::int64_t propagated = 1;
            for (std::size_t j = i + 1; j < t && propagated != 0; ++j)
                propagated = propagated * binom(h + a[j] + bv[j], pv - 1) % pv;
            v += generated * propagated;
        }
        c[t] = centered(v, p);
    }
    return DigitSeq(p, ResidueSystem::nlr, std::move(c));
}

DigitSeq add_nlr_via_conversion(const DigitSeq& a, const DigitSeq& b)
{
    require_compatible(a, b);
    require_system(a, ResidueSystem::nlr);
    return lsr_to_nlr(add_digits(nlr_to_lsr(a), nlr_to_lsr(b)));
}

DigitSeq negate_nlr(const DigitSeq& a)
{
    require_system(a, ResidueSystem::nlr);
    require_odd(a.prime());
    const Prime p = a.prime();
    const DigitSeq av = nlr_to_lsr(a);
    std::vector<int> d(a.precision());
    for (std::size_t t = 0; t < d.size(); ++t)
        d[t] = negate_digit(av.prefix(t + 1), p).value();
    return lsr_to_nlr(DigitSeq(p, ResidueSystem::lsr, std::move(d)));
}

DigitSeq multiply_nlr(const DigitSeq& a, const DigitSeq& b)
{
    require_compatible(a, b);
    require_system(a, ResidueSystem::nlr);
    require_odd(a.prime());
    return lsr_to_nlr(multiply_digits(nlr_to_lsr(a), nlr_to_lsr(b)));
}

} // namespace padic

#include "padic/witt.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "padic/addition.hpp"
#include "padic/negation.hpp"
#include "padic/transform.hpp"

namespace padic {

WittVector::WittVector(Prime p, std::vector<int> components)
    : p_(p), components_(std::move(components))
{
    if (components_.empty())
        throw std::invalid_argument("Witt vector needs at least one component");
    require_least_residues(components_, p_);
}

WittVector WittVector::from_balanced(Prime p, std::span<const int> components)
{
    std::vector<int> residues(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i] < -p.half() || components[i] > p.half())
            throw std::invalid_argument("balanced component out of range: " + std::to_string(components[i]));
        residues[i] = static_cast<int>(mod_floor(components[i], p.value()));
    }
    return WittVector(p, std::move(residues));
}

std::vector<int> WittVector::balanced() const
{
    std::vector<int> out(components_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = FpElement(components_[i], p_).centered();
    return out;
}

DigitSeq teichmuller_digits(const WittVector& a)
{
    switch (a.prime().value()) {
    case 2:
        return DigitSeq(a.prime(), ResidueSystem::lsr, {a.components().begin(), a.components().end()});
    case 3:
        return DigitSeq(a.prime(), ResidueSystem::nlr, a.balanced());
    default:
        throw std::invalid_argument("Teichmuller lifts are digits only for p = 2 and p = 3");
    }
}

WittVector from_teichmuller_digits(const DigitSeq& d)
{
    switch (d.prime().value()) {
    case 2:
        require_system(d, ResidueSystem::lsr);
        return WittVector(d.prime(), {d.digits().begin(), d.digits().end()});
    case 3:
        require_system(d, ResidueSystem::nlr);
        return WittVector::from_balanced(d.prime(), d.digits());
    default:
        throw std::invalid_argument("Teichmuller lifts are digits only for p = 2 and p = 3");
    }
}

namespace {

void require_field(const WittVector& a, int p)
{
    if (a.prime().value() != p)
        throw std::invalid_argument("Witt vector over the wrong prime, expected p = " + std::to_string(p));
}

void require_pair(const WittVector& a, const WittVector& b, int p)
{
    require_field(a, p);
    require_field(b, p);
    if (a.length() != b.length())
        throw std::invalid_argument("Witt vectors of different length");
}

WittVector from_balanced_residues(std::span<const int> balanced)
{
    return WittVector::from_balanced(Prime(3), balanced);
}

} // namespace

WittVector witt_add_f2(const WittVector& a, const WittVector& b)
{
    require_pair(a, b, 2);
    const std::size_t n = a.length();
    std::vector<int> c(n);
    for (std::size_t t = 0; t < n; ++t) {
        int v = a[t] ^ b[t];
        for (std::size_t i = 0; i < t; ++i) {
            int term = a[i] & b[i];
            for (std::size_t j = i + 1; j < t && term; ++j)
                term &= a[j] ^ b[j];
            v ^= term;
        }
        c[t] = v;
    }
    return WittVector(a.prime(), std::move(c));
}

WittVector witt_neg_f2(const WittVector& a)
{
    require_field(a, 2);
    std::vector<int> d(a.length());
    for (std::size_t t = 0; t < d.size(); ++t)
        d[t] = negate_digit_binary(a.components().first(t + 1)).value();
    return WittVector(a.prime(), std::move(d));
}

WittVector witt_mul_f2(const WittVector& a, const WittVector& b)
{
    require_pair(a, b, 2);
    std::vector<int> e(a.length());
    for (std::size_t t = 0; t < e.size(); ++t)
        e[t] = product_digit_binary(a.components().first(t + 1), b.components().first(t + 1)).value();
    return WittVector(a.prime(), std::move(e));
}

WittVector witt_add_f3(const WittVector& a, const WittVector& b)
{
    require_pair(a, b, 3);
    const std::vector<int> x = a.balanced();
    const std::vector<int> yv = nlr_to_lsr_ternary(b.balanced());
    const std::size_t n = a.length();
    auto choose2 = [](int v) { return v * (v - 1) / 2; };

    std::vector<int> c(n);
    for (std::size_t t = 0; t < n; ++t) {
        int v = x[t] + yv[t];
        for (std::size_t i = 0; i < t; ++i) {
            int term = (x[i] + 1) * (x[i] + yv[i] - 1) * yv[i] % 3;
            for (std::size_t j = i + 1; j < t && term != 0; ++j)
                term = term * choose2(x[j] + yv[j] + 1) % 3;
            v -= term;
        }
        c[t] = static_cast<int>(mod_floor(v, 3));
    }
    return WittVector(a.prime(), std::move(c));
}

WittVector witt_neg_f3(const WittVector& a)
{
    require_field(a, 3);
    const std::vector<int> xv = nlr_to_lsr_ternary(a.balanced());
    std::vector<int> d(xv.size());
    int untouched = 1;
    for (std::size_t t = 0; t < d.size(); ++t) {
        d[t] = static_cast<int>(t == 0 ? mod_floor(-xv[0], 3) : mod_floor(-xv[t] - 1 + untouched, 3));
        untouched = untouched * (1 - xv[t] * xv[t]) % 3;
    }
    return from_balanced_residues(lsr_to_nlr_ternary(d));
}

WittVector witt_mul_f3(const WittVector& a, const WittVector& b, TernaryFactorForm form)
{
    require_pair(a, b, 3);
    const std::vector<int> xv = nlr_to_lsr_ternary(a.balanced());
    const std::vector<int> yv = nlr_to_lsr_ternary(b.balanced());
    const std::span<const int> xs(xv);
    const std::span<const int> ys(yv);
    std::vector<int> e(xv.size());
    for (std::size_t t = 0; t < e.size(); ++t)
        e[t] = product_digit_ternary_closed(xs.first(t + 1), ys.first(t + 1), form).value();
    return from_balanced_residues(lsr_to_nlr_ternary(e));
}

WittOp parse_witt_op(std::string_view text)
{
    if (text == "add")
        return WittOp::add;
    if (text == "neg")
        return WittOp::neg;
    if (text == "mul")
        return WittOp::mul;
    throw std::invalid_argument("unknown operation: " + std::string(text));
}

std::string_view to_string(WittOp op)
{
    switch (op) {
    case WittOp::add:
        return "add";
    case WittOp::neg:
        return "neg";
    case WittOp::mul:
        return "mul";
    }
    return "?";
}

namespace {

mpz_class ipow(const mpz_class& base, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::vector<mpz_class> lift(const WittVector& a)
{
    std::vector<mpz_class> out;
    out.reserve(a.length());
    for (int c : a.components())
        out.emplace_back(c);
    return out;
}

} // namespace

std::vector<mpz_class> ghost_components(std::span<const mpz_class> x, Prime p)
{
    const unsigned long pv = static_cast<unsigned long>(p.value());
    std::vector<mpz_class> w(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            const unsigned long e = ipow(mpz_class(pv), static_cast<unsigned long>(n - i)).get_ui();
            acc += ipow(mpz_class(pv), static_cast<unsigned long>(i)) * ipow(x[i], e);
        }
        w[n] = acc;
    }
    return w;
}

WittVector witt_ghost_op(WittOp op, const WittVector& a, const std::optional<WittVector>& b)
{
    const Prime p = a.prime();
    const unsigned long pv = static_cast<unsigned long>(p.value());
    if (op != WittOp::neg) {
        if (!b)
            throw std::invalid_argument("binary Witt operation needs two operands");
        if (b->prime() != p || b->length() != a.length())
            throw std::invalid_argument("Witt operands differ in prime or length");
    }
    const std::size_t n = a.length();
    if (n > 1 && (n - 1) * std::log2(static_cast<double>(pv)) > 16)
        throw std::invalid_argument("Witt vector too long for the ghost recursion");

    const auto wa = ghost_components(lift(a), p);
    std::vector<mpz_class> wb;
    if (op != WittOp::neg)
        wb = ghost_components(lift(*b), p);

    std::vector<mpz_class> c(n);
    mpz_class p_power = 1; // p^k
    for (std::size_t k = 0; k < n; ++k) {
        mpz_class target;
        switch (op) {
        case WittOp::add:
            target = wa[k] + wb[k];
            break;
        case WittOp::neg:
            target = -wa[k];
            break;
        case WittOp::mul:
            target = wa[k] * wb[k];
            break;
        }
        mpz_class weight = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const unsigned long e = ipow(mpz_class(pv), static_cast<unsigned long>(k - i)).get_ui();
            target -= weight * ipow(c[i], e);
            weight *= pv;
        }
        if (!mpz_divisible_p(target.get_mpz_t(), p_power.get_mpz_t()))
            throw std::logic_error("ghost recursion produced an inexact division");
        mpz_divexact(c[k].get_mpz_t(), target.get_mpz_t(), p_power.get_mpz_t());
        p_power *= pv;
    }

    std::vector<int> out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = static_cast<int>(mpz_fdiv_ui(c[k].get_mpz_t(), pv));
    return WittVector(p, std::move(out));
}

} // namespace padic

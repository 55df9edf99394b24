#include "padic/parallel.hpp"

#include <vector>

#ifdef PADIC_HAVE_OPENMP
#include <omp.h>
#endif

#include "padic/addition.hpp"
#include "padic/multiplication.hpp"
#include "padic/negation.hpp"

namespace padic::parallel {

int max_threads()
{
#ifdef PADIC_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void prepare_product_tables(Prime p, std::size_t precision)
{
    KSpace::for_prime(p);
    for (std::size_t t = 0; t < precision; ++t)
        tp_partitions(p, static_cast<unsigned>(t));
}

DigitSeq add_digits(const DigitSeq& a, const DigitSeq& b)
{
    require_compatible(a, b);
    require_system(a, ResidueSystem::lsr);
    const Prime p = a.prime();
    const auto n = static_cast<long>(a.precision());
    std::vector<int> c(a.precision());
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < n; ++t) {
        const auto len = static_cast<std::size_t>(t + 1);
        c[static_cast<std::size_t>(t)] = sum_digit(a.prefix(len), b.prefix(len), p).value();
    }
    return DigitSeq(p, ResidueSystem::lsr, std::move(c));
}

DigitSeq negate_digits(const DigitSeq& a)
{
    require_system(a, ResidueSystem::lsr);
    const Prime p = a.prime();
    const auto n = static_cast<long>(a.precision());
    std::vector<int> d(a.precision());
#pragma omp parallel for schedule(static)
    for (long t = 0; t < n; ++t)
        d[static_cast<std::size_t>(t)] = negate_digit(a.prefix(static_cast<std::size_t>(t + 1)), p).value();
    return DigitSeq(p, ResidueSystem::lsr, std::move(d));
}

DigitSeq multiply_digits(const DigitSeq& a, const DigitSeq& b)
{
    require_compatible(a, b);
    require_system(a, ResidueSystem::lsr);
    const Prime p = a.prime();
    prepare_product_tables(p, a.precision());
    const auto n = static_cast<long>(a.precision());
    std::vector<int> e(a.precision());
    // High digits sum over far more partitions; hand them out first.
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const auto t = static_cast<std::size_t>(n - 1 - i);
        e[t] = product_digit(a.prefix(t + 1), b.prefix(t + 1), p).value();
    }
    return DigitSeq(p, ResidueSystem::lsr, std::move(e));
}

} // namespace padic::parallel

// Serial reference vs OpenMP kernels. Not part of ctest.
//   bench_kernels [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "padic/multiplication.hpp"
#include "padic/parallel.hpp"
#include "padic/verify.hpp"

using namespace padic;
using clk = std::chrono::steady_clock;

template <class F>
static double seconds(F&& f)
{
    const auto t0 = clk::now();
    f();
    return std::chrono::duration<double>(clk::now() - t0).count();
}

int main(int argc, char** argv)
{
    const int reps = argc > 1 ? std::atoi(argv[1]) : 20;
    std::printf("threads %d\n", parallel::max_threads());

    for (auto [p, k] : {std::pair{2, 14u}, {3, 7u}, {5, 4u}}) {
        parallel::prepare_product_tables(Prime(p), k);
        std::mt19937_64 rng(1);
        std::vector<std::pair<DigitSeq, DigitSeq>> in;
        for (int i = 0; i < reps; ++i)
            in.emplace_back(random_digits(rng, Prime(p), ResidueSystem::lsr, k),
                            random_digits(rng, Prime(p), ResidueSystem::lsr, k));
        std::size_t sink = 0;
        const double ser = seconds([&] {
            for (auto& [a, b] : in)
                sink += multiply_digits(a, b)[k - 1];
        });
        const double par = seconds([&] {
            for (auto& [a, b] : in)
                sink += parallel::multiply_digits(a, b)[k - 1];
        });
        std::printf("multiply p=%d prec=%u x%d  serial %.3fs  parallel %.3fs  speedup %.2f  (%zu)\n", p, k, reps, ser,
                    par, ser / par, sink);
    }

    for (auto [p, k] : {std::pair{2, 10u}, {3, 7u}}) {
        VerifyConfig c;
        c.p = Prime(p);
        c.op = ArithOp::mul;
        c.cases = static_cast<std::size_t>(reps) * 10;
        c.precision = k;
        c.seed = 5;
        c.parallel = false;
        const double ser = seconds([&] { run_verify(c); });
        c.parallel = true;
        const double par = seconds([&] { run_verify(c); });
        std::printf("verify mul p=%d prec=%u cases=%zu  serial %.3fs  parallel %.3fs  speedup %.2f\n", p, k, c.cases, ser,
                    par, ser / par);
    }
}

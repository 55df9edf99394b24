#pragma once

// Independent reference computations for the tests. Nothing here calls the
// formula modules; each helper recomputes its answer from first principles.

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace brute {

inline int mod(long long v, int p)
{
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Pascal's triangle mod p, one row at a time. row()[k] = C(n, k) mod p.
class PascalRows {
public:
    explicit PascalRows(int p) : p_(p), row_{1} {}
    int n() const { return static_cast<int>(row_.size()) - 1; }
    const std::vector<int>& row() const { return row_; }
    int at(int k) const { return k < 0 || k > n() ? 0 : row_[static_cast<std::size_t>(k)]; }
    void next()
    {
        std::vector<int> r(row_.size() + 1, 1);
        for (std::size_t k = 1; k < row_.size(); ++k)
            r[k] = (row_[k - 1] + row_[k]) % p_;
        row_ = std::move(r);
    }

private:
    int p_;
    std::vector<int> row_;
};

// t-th base-p digit by repeated division.
inline int base_digit(std::uint64_t a, unsigned t, int p)
{
    for (unsigned i = 0; i < t; ++i)
        a /= static_cast<std::uint64_t>(p);
    return static_cast<int>(a % static_cast<std::uint64_t>(p));
}

inline std::vector<int> base_digits(mpz_class n, int p, std::size_t len)
{
    const mpz_class m = [&] {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), len);
        return r;
    }();
    n %= m;
    if (n < 0)
        n += m;
    std::vector<int> out;
    for (std::size_t i = 0; i < len; ++i) {
        mpz_class r = n % p;
        out.push_back(static_cast<int>(r.get_si()));
        n /= p;
    }
    return out;
}

inline mpz_class value(const std::vector<int>& digits, int p)
{
    mpz_class v = 0, place = 1;
    for (int d : digits) {
        v += place * d;
        place *= p;
    }
    return v;
}

inline mpz_class falling(int x, int n)
{
    mpz_class r = 1;
    for (int i = 0; i < n; ++i)
        r *= x - i;
    return r;
}

inline mpz_class factorial(int n)
{
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// pi_k(x, y) straight from the rational definition: falling factorials over
// factorials, divided exactly, then reduced.
inline int pi_rational(const std::vector<int>& k, int x, int y, int p)
{
    int total = std::accumulate(k.begin(), k.end(), 0);
    if (total == 0)
        return 1;
    mpz_class num = falling(y, total);
    mpz_class den = 1;
    for (std::size_t l = 0; l < k.size(); ++l) {
        const int ll = static_cast<int>(l) + 1;
        den *= factorial(k[l]);
        for (int e = 0; e < k[l]; ++e) {
            num *= falling(x, ll);
            den *= factorial(ll);
        }
    }
    if (num % den != 0)
        throw std::logic_error("pi is not integral");
    mpz_class q = num / den;
    q %= p;
    if (q < 0)
        q += p;
    return static_cast<int>(q.get_si());
}

// All k = (k_1..k_{p-1}) with sum <= p-1, zero included.
inline std::vector<std::vector<int>> all_k_vectors(int p)
{
    std::vector<std::vector<int>> out;
    std::vector<int> k(static_cast<std::size_t>(p - 1), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == k.size()) {
            out.push_back(k);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            k[i] = v;
            rec(i + 1, left - v);
        }
        k[i] = 0;
    };
    rec(0, p - 1);
    return out;
}

inline int weight(const std::vector<int>& k)
{
    int w = 0;
    for (std::size_t l = 0; l < k.size(); ++l)
        w += static_cast<int>(l + 1) * k[l];
    return w;
}

inline long long ipow(long long b, unsigned e)
{
    long long r = 1;
    while (e--)
        r *= b;
    return r;
}

// Lemma-level product digit: sum over whole (t+1)x(t+1) grids of K-vectors
// with norm p^t of the product of pi over cells. Small t only.
inline int grid_product_digit(const std::vector<int>& a, const std::vector<int>& b, unsigned t, int p)
{
    if (t == 0)
        return mod(static_cast<long long>(a[0]) * b[0], p);
    const auto ks = all_k_vectors(p);
    const long long target = ipow(p, t);
    std::vector<std::pair<int, int>> cells;
    for (unsigned i = 0; i <= t; ++i)
        for (unsigned j = 0; i + j <= t; ++j)
            cells.emplace_back(i, j); // cells with i+j > t carry p^{i+j} > p^t, so they hold the zero vector
    long long total = 0;
    std::function<void(std::size_t, long long, int)> rec = [&](std::size_t c, long long norm, int prod) {
        if (prod == 0)
            return;
        if (c == cells.size()) {
            if (norm == target)
                total += prod;
            return;
        }
        const auto [i, j] = cells[c];
        const long long place = ipow(p, static_cast<unsigned>(i + j));
        for (const auto& k : ks) {
            const long long n2 = norm + weight(k) * place;
            if (n2 > target)
                continue;
            rec(c + 1, n2, prod * pi_rational(k, a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)], p) % p);
        }
    };
    rec(0, 0, 1);
    return mod(total, p);
}

// Number of multiplicity vectors over the given weights with |l| <= cap and
// w.l = s, for every s <= limit.
inline std::vector<long long> level_weight_counts(const std::vector<int>& w, int cap, long long limit)
{
    std::vector<long long> out(static_cast<std::size_t>(limit) + 1, 0);
    std::function<void(std::size_t, int, long long)> rec = [&](std::size_t j, int used, long long s) {
        if (j == w.size()) {
            out[static_cast<std::size_t>(s)] += 1;
            return;
        }
        for (int c = 0; used + c <= cap && s + static_cast<long long>(c) * w[j] <= limit; ++c)
            rec(j + 1, used + c, s + static_cast<long long>(c) * w[j]);
    };
    rec(0, 0, 0);
    return out;
}

// |L_p(t)| by dynamic programming over levels: ways to write p^t as
// sum_m s_m p^m where s_m is achievable at level m.
inline long long count_tp_partitions(int p, unsigned t)
{
    std::vector<int> w;
    for (const auto& k : all_k_vectors(p))
        if (weight(k) > 0)
            w.push_back(weight(k));
    const long long target = ipow(p, t);
    std::vector<long long> ways(static_cast<std::size_t>(target) + 1, 0);
    ways[0] = 1;
    for (unsigned m = 0; m <= t; ++m) {
        const long long place = ipow(p, m);
        const auto counts = level_weight_counts(w, static_cast<int>(m) + 1, target / place);
        std::vector<long long> next(ways.size(), 0);
        for (std::size_t s = 0; s < ways.size(); ++s) {
            if (!ways[s])
                continue;
            for (std::size_t c = 0; c < counts.size(); ++c) {
                const long long s2 = static_cast<long long>(s) + static_cast<long long>(c) * place;
                if (s2 > target)
                    break;
                next[static_cast<std::size_t>(s2)] += ways[s] * counts[c];
            }
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(target)];
}

// p = 2 partitions listed directly: all (l_0..l_t), 0 <= l_m <= m+1, with
// sum l_m 2^m = 2^t.
inline std::vector<std::vector<int>> list_binary_partitions(unsigned t)
{
    std::vector<std::vector<int>> out;
    std::vector<int> l(t + 1, 0);
    const long long target = ipow(2, t);
    std::function<void(unsigned, long long)> rec = [&](unsigned m, long long s) {
        if (m > t) {
            if (s == target)
                out.push_back(l);
            return;
        }
        for (int c = 0; c <= static_cast<int>(m) + 1; ++c) {
            const long long s2 = s + c * ipow(2, m);
            if (s2 > target)
                break;
            l[m] = c;
            rec(m + 1, s2);
        }
        l[m] = 0;
    };
    rec(0, 0);
    return out;
}

// l-th elementary symmetric polynomial of xs mod 2, by subsets.
inline int elementary_symmetric_subsets(const std::vector<int>& xs, int l)
{
    const std::size_t n = xs.size();
    int total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != l)
            continue;
        int prod = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u)
                prod *= xs[i];
        total += prod;
    }
    return total & 1;
}

// Witt vectors over F_p as p-adic integers: sum of Teichmuller lifts
// tau(a_i) p^i mod p^n, with tau(a) = a^(p^n) mod p^n.
inline mpz_class teichmuller_value(const std::vector<int>& comps, int p)
{
    const std::size_t n = comps.size();
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), n);
    mpz_class v = 0, place = 1;
    for (int a : comps) {
        mpz_class tau = a, e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), n);
        mpz_powm(tau.get_mpz_t(), tau.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
        v += tau * place;
        place *= p;
    }
    v %= modulus;
    return v;
}

// Inverse of teichmuller_value: peel off components from the bottom.
inline std::vector<int> from_teichmuller_value(mpz_class v, int p, std::size_t n)
{
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), n);
    v %= modulus;
    if (v < 0)
        v += modulus;
    std::vector<int> comps;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class r = v % p;
        const int a = static_cast<int>(r.get_si());
        comps.push_back(a);
        std::vector<int> single(n - i, 0);
        single[0] = a;
        // lift of a modulo p^{n-i}
        v -= teichmuller_value(single, p);
        if (v % p != 0)
            throw std::logic_error("Teichmuller peel failed");
        v /= p;
        mpz_class mod_rest;
        mpz_ui_pow_ui(mod_rest.get_mpz_t(), static_cast<unsigned long>(p), n - i - 1);
        if (n - i - 1 > 0) {
            v %= mod_rest;
            if (v < 0)
                v += mod_rest;
        }
    }
    return comps;
}

} // namespace brute

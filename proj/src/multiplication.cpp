#include "padic/multiplication.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "padic/addition.hpp"
#include "padic/lucas.hpp"

namespace padic {

int KVector::weight() const noexcept
{
    int w = 0;
    for (std::size_t j = 0; j < components.size(); ++j)
        w += static_cast<int>(j + 1) * components[j];
    return w;
}

int KVector::size() const noexcept
{
    return std::accumulate(components.begin(), components.end(), 0);
}

namespace {

void collect_k_vectors(std::vector<int>& current, std::size_t pos, int budget,
                       std::vector<KVector>& out)
{
    if (pos == current.size()) {
        out.push_back(KVector{current});
        return;
    }
    for (int c = 0; c <= budget; ++c) {
        current[pos] = c;
        collect_k_vectors(current, pos + 1, budget - c, out);
    }
    current[pos] = 0;
}

} // namespace

KSpace::KSpace(Prime p) : p_(p)
{
    std::vector<int> current(static_cast<std::size_t>(p.value() - 1), 0);
    collect_k_vectors(current, 0, p.value() - 1, elements_);
    std::erase_if(elements_, [](const KVector& k) { return k.is_zero(); });
    std::sort(elements_.begin(), elements_.end(), [](const KVector& a, const KVector& b) {
        const int wa = a.weight();
        const int wb = b.weight();
        if (wa != wb)
            return wa < wb;
        return a.components < b.components;
    });
    weights_.reserve(elements_.size());
    for (const auto& k : elements_)
        weights_.push_back(k.weight());
}

const KSpace& KSpace::for_prime(Prime p)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<KSpace>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[p.value()];
    if (!slot)
        slot = std::make_unique<KSpace>(p);
    return *slot;
}

KSpace build_k_space(Prime p) { return KSpace(p); }

FpElement pi_eval(const KVector& k, int x, int y, Prime p)
{
    const int pv = p.value();
    if (k.components.size() != static_cast<std::size_t>(pv - 1))
        throw std::invalid_argument("exponent vector has the wrong length for p");
    if (x < 0 || x >= pv || y < 0 || y >= pv)
        throw std::invalid_argument("pi_eval arguments must be digits in [0, p-1]");
    for (int c : k.components) {
        if (c < 0)
            throw std::invalid_argument("negative exponent in exponent vector");
    }
    const int total = k.size();
    if (total > pv - 1)
        throw std::invalid_argument("exponent vector outside the K-space");
    if (total == 0)
        return FpElement::one(p);
    if (total > y)
        return FpElement::zero(p);

    const auto& binom = SmallBinomials::for_prime(p);
    std::int64_t acc = 1;
    // multinomial(y; k_1, ..., k_{p-1}, y - sum k) as a chain of binomials
    int remaining = y;
    for (int c : k.components) {
        acc = acc * binom(remaining, c) % pv;
        remaining -= c;
    }
    for (std::size_t l = 1; l <= k.components.size() && acc != 0; ++l) {
        const int kl = k.components[l - 1];
        if (kl == 0)
            continue;
        const FpElement choose(binom(x, static_cast<int>(l)), p);
        acc = acc * choose.pow(static_cast<std::uint64_t>(kl)).value() % pv;
    }
    return {acc, p};
}

// ---------------------------------------------------------------------------
// T_p-partitions

namespace {

constexpr std::int64_t kSumLimit = std::int64_t{1} << 62;

std::int64_t saturating_mul(std::int64_t a, std::int64_t b)
{
    if (a != 0 && b > kSumLimit / a)
        return kSumLimit;
    return a * b;
}

class TpEnumerator {
public:
    TpEnumerator(const KSpace& space, unsigned t) : space_(space), t_(t)
    {
        const std::int64_t p = space.prime().value();
        powers_.resize(t + 1);
        powers_[0] = 1;
        for (unsigned m = 1; m <= t; ++m) {
            if (powers_[m - 1] > kSumLimit / p)
                throw std::overflow_error("p^t is too large to enumerate partitions");
            powers_[m] = powers_[m - 1] * p;
        }
        const std::int64_t max_weight = space.weights().empty() ? 0 : space.weights().back();
        max_below_.assign(t + 1, 0);
        for (unsigned m = 1; m <= t; ++m) {
            const std::int64_t level_max = saturating_mul(saturating_mul(m, max_weight), powers_[m - 1]);
            max_below_[m] = std::min(kSumLimit, max_below_[m - 1] + level_max);
        }
        current_.assign(t + 1, Multiplicity(space.size(), 0));
    }

    std::vector<TpPartition> run()
    {
        level(static_cast<int>(t_), powers_[t_]);
        return std::move(out_);
    }

private:
    void level(int m, std::int64_t remaining)
    {
        if (m < 0) {
            if (remaining == 0)
                out_.push_back(TpPartition{current_});
            return;
        }
        const std::int64_t pm = powers_[static_cast<std::size_t>(m)];
        const std::int64_t wmax = remaining / pm;
        const std::int64_t gap = remaining - max_below_[static_cast<std::size_t>(m)];
        const std::int64_t wmin = gap <= 0 ? 0 : (gap + pm - 1) / pm;
        if (wmin > wmax)
            return;
        Multiplicity& l = current_[static_cast<std::size_t>(m)];
        std::fill(l.begin(), l.end(), 0);
        choose(m, remaining, 0, 0, 0, wmin, wmax);
        std::fill(l.begin(), l.end(), 0);
    }

    void choose(int m, std::int64_t remaining, std::size_t j, int used, std::int64_t weight,
                std::int64_t wmin, std::int64_t wmax)
    {
        const int cap = m + 1;
        const auto& w = space_.weights();
        if (j == w.size()) {
            if (weight >= wmin)
                level(m - 1, remaining - weight * powers_[static_cast<std::size_t>(m)]);
            return;
        }
        // Weights ascend with j, so the best still reachable uses the last slot.
        if (weight + std::int64_t{cap - used} * w.back() < wmin)
            return;
        Multiplicity& l = current_[static_cast<std::size_t>(m)];
        for (int c = 0; used + c <= cap && weight + std::int64_t{c} * w[j] <= wmax; ++c) {
            l[j] = c;
            choose(m, remaining, j + 1, used + c, weight + std::int64_t{c} * w[j], wmin, wmax);
        }
        l[j] = 0;
    }

    const KSpace& space_;
    unsigned t_;
    std::vector<std::int64_t> powers_;
    std::vector<std::int64_t> max_below_;
    std::vector<Multiplicity> current_;
    std::vector<TpPartition> out_;
};

bool is_zero_level(const Multiplicity& l)
{
    return std::all_of(l.begin(), l.end(), [](int c) { return c == 0; });
}

// Partitions of p^t plus, per level, the distinct nonzero level vectors, so
// a product digit evaluates each tau once per (level, vector).
struct PartitionTable {
    std::vector<TpPartition> parts;
    std::vector<std::vector<Multiplicity>> distinct;
    std::vector<std::vector<int>> ids; // ids[n][m] indexes distinct[m]; -1 for a zero level
};

PartitionTable build_partition_table(Prime p, unsigned t)
{
    PartitionTable table;
    table.parts = enumerate_tp_partitions(p, t);
    table.distinct.resize(t + 1);
    std::vector<std::map<Multiplicity, int>> lookup(t + 1);
    table.ids.reserve(table.parts.size());
    for (const auto& part : table.parts) {
        std::vector<int> row(t + 1, -1);
        for (unsigned m = 0; m <= t; ++m) {
            const auto& l = part.levels[m];
            if (is_zero_level(l))
                continue;
            auto [it, inserted] = lookup[m].try_emplace(l, static_cast<int>(table.distinct[m].size()));
            if (inserted)
                table.distinct[m].push_back(l);
            row[m] = it->second;
        }
        table.ids.push_back(std::move(row));
    }
    return table;
}

const PartitionTable& partition_table(Prime p, unsigned t)
{
    static std::mutex mutex;
    static std::map<std::pair<int, unsigned>, std::unique_ptr<PartitionTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{p.value(), t}];
    if (!slot)
        slot = std::make_unique<PartitionTable>(build_partition_table(p, t));
    return *slot;
}

} // namespace

std::vector<TpPartition> enumerate_tp_partitions(Prime p, unsigned t)
{
    return TpEnumerator(KSpace::for_prime(p), t).run();
}

const std::vector<TpPartition>& tp_partitions(Prime p, unsigned t)
{
    return partition_table(p, t).parts;
}

// ---------------------------------------------------------------------------
// l-partitions of {0, ..., m}

namespace {

void require_multiplicity(int m, std::span<const int> l)
{
    if (m < 0)
        throw std::invalid_argument("index set I(m) needs m >= 0");
    if (m >= 63)
        throw std::invalid_argument("index set I(m) too large");
    int total = 0;
    for (int c : l) {
        if (c < 0)
            throw std::invalid_argument("negative multiplicity");
        total += c;
    }
    if (total > m + 1) {
        throw std::invalid_argument("multiplicity vector of size " + std::to_string(total)
                                    + " does not fit I(" + std::to_string(m) + ")");
    }
}

void walk_index_partitions(int m, std::span<const int> l, std::size_t slot, int next,
                           std::uint64_t used, std::vector<std::vector<int>>& subsets,
                           const std::function<void(const std::vector<std::vector<int>>&)>& visit)
{
    if (slot == l.size()) {
        visit(subsets);
        return;
    }
    auto& s = subsets[slot];
    if (static_cast<int>(s.size()) == l[slot]) {
        walk_index_partitions(m, l, slot + 1, 0, used, subsets, visit);
        return;
    }
    for (int i = next; i <= m; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (used & bit)
            continue;
        s.push_back(i);
        walk_index_partitions(m, l, slot, i + 1, used | bit, subsets, visit);
        s.pop_back();
    }
}

// Sum over l-partitions S of prod_{slot} prod_{i in S_slot} cell[slot][i] (mod p).
// Subtrees whose partial product vanishes are skipped.
class PartitionSum {
public:
    PartitionSum(int m, std::span<const int> l, const std::vector<std::vector<int>>& cell, int p)
        : m_(m), p_(p), cell_(cell)
    {
        for (std::size_t j = 0; j < l.size(); ++j) {
            if (l[j] > 0) {
                slots_.push_back(j);
                counts_.push_back(l[j]);
            }
        }
    }

    int run()
    {
        total_ = 0;
        step(0, 0, 0, 0, 1);
        return static_cast<int>(total_);
    }

private:
    void step(std::size_t s, int chosen, int next, std::uint64_t used, std::int64_t prod)
    {
        if (s == slots_.size()) {
            total_ = (total_ + prod) % p_;
            return;
        }
        if (chosen == counts_[s]) {
            step(s + 1, 0, 0, used, prod);
            return;
        }
        const auto& row = cell_[slots_[s]];
        for (int i = next; i <= m_; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (used & bit)
                continue;
            const int v = row[static_cast<std::size_t>(i)];
            if (v == 0)
                continue;
            step(s, chosen + 1, i + 1, used | bit, prod * v % p_);
        }
    }

    int m_;
    std::int64_t p_;
    const std::vector<std::vector<int>>& cell_;
    std::vector<std::size_t> slots_;
    std::vector<int> counts_;
    std::int64_t total_ = 0;
};

void require_antidiagonal_args(int m, std::span<const int> x, std::span<const int> y, Prime p)
{
    if (x.size() != static_cast<std::size_t>(m + 1) || y.size() != x.size())
        throw std::invalid_argument("tau needs x_0..x_m and y_0..y_m");
    require_least_residues(x, p);
    require_least_residues(y, p);
}

} // namespace

std::vector<IndexPartition> enumerate_index_partitions(int m, std::span<const int> l)
{
    require_multiplicity(m, l);
    std::vector<IndexPartition> out;
    std::vector<std::vector<int>> subsets(l.size());
    walk_index_partitions(m, l, 0, 0, 0, subsets,
                          [&](const std::vector<std::vector<int>>& s) { out.push_back({s}); });
    return out;
}

std::uint64_t index_partition_count(int m, std::span<const int> l)
{
    require_multiplicity(m, l);
    mpz_class count = 1;
    unsigned long remaining = static_cast<unsigned long>(m + 1);
    for (int c : l) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), remaining, static_cast<unsigned long>(c));
        count *= b;
        remaining -= static_cast<unsigned long>(c);
    }
    if (!count.fits_ulong_p())
        throw std::overflow_error("index partition count overflows 64 bits");
    return count.get_ui();
}

FpElement tau_eval(const KSpace& space, std::span<const int> l, std::span<const int> x,
                   std::span<const int> y)
{
    const Prime p = space.prime();
    if (l.size() != space.size())
        throw std::invalid_argument("multiplicity vector length differs from K");
    const int m = static_cast<int>(x.size()) - 1;
    require_multiplicity(m, l);
    require_antidiagonal_args(m, x, y, p);

    std::vector<std::vector<int>> cell(l.size());
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (l[j] == 0)
            continue;
        cell[j].resize(x.size());
        for (int i = 0; i <= m; ++i)
            cell[j][static_cast<std::size_t>(i)] = pi_eval(space[j], x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(m - i)], p).value();
    }
    return {PartitionSum(m, l, cell, p.value()).run(), p};
}

FpElement tau_eval(std::span<const int> l, std::span<const int> x, std::span<const int> y, Prime p)
{
    return tau_eval(KSpace::for_prime(p), l, x, y);
}

namespace {

void require_product_prefixes(std::span<const int> a, std::span<const int> b, Prime p)
{
    if (a.empty() || a.size() != b.size())
        throw std::invalid_argument("product digit needs two non-empty prefixes of equal length");
    require_least_residues(a, p);
    require_least_residues(b, p);
}

// sum_{L} prod_m tau(m, l_m), with tau supplied per (level, distinct vector).
template <class LevelValue>
int sum_over_partitions(const PartitionTable& table, unsigned t, int p, LevelValue&& level_value)
{
    std::vector<std::vector<int>> tau(t + 1);
    for (unsigned m = 0; m <= t; ++m) {
        tau[m].reserve(table.distinct[m].size());
        for (const auto& l : table.distinct[m])
            tau[m].push_back(level_value(m, l));
    }
    std::int64_t total = 0;
    for (const auto& row : table.ids) {
        std::int64_t prod = 1;
        for (unsigned m = 0; m <= t && prod != 0; ++m) {
            if (row[m] >= 0)
                prod = prod * tau[m][static_cast<std::size_t>(row[m])] % p;
        }
        total += prod;
    }
    return static_cast<int>(total % p);
}

} // namespace

FpElement product_digit(std::span<const int> a_prefix, std::span<const int> b_prefix, Prime p)
{
    require_product_prefixes(a_prefix, b_prefix, p);
    const unsigned t = static_cast<unsigned>(a_prefix.size() - 1);
    const auto& space = KSpace::for_prime(p);
    const auto& table = partition_table(p, t);
    const int e = sum_over_partitions(table, t, p.value(), [&](unsigned m, const Multiplicity& l) {
        return tau_eval(space, l, a_prefix.first(m + 1), b_prefix.first(m + 1)).value();
    });
    return {e, p};
}

DigitSeq multiply_digits(const DigitSeq& a, const DigitSeq& b)
{
    require_compatible(a, b);
    require_system(a, ResidueSystem::lsr);
    std::vector<int> e(a.precision());
    for (std::size_t t = 0; t < e.size(); ++t)
        e[t] = product_digit(a.prefix(t + 1), b.prefix(t + 1), a.prime()).value();
    return DigitSeq(a.prime(), ResidueSystem::lsr, std::move(e));
}

int elementary_symmetric_mod2(std::span<const int> xs, int l)
{
    if (l < 0)
        return 0;
    // sigma[k] after consuming a prefix of xs
    std::vector<int> sigma(static_cast<std::size_t>(l) + 1, 0);
    sigma[0] = 1;
    for (int x : xs) {
        for (int k = l; k >= 1; --k)
            sigma[static_cast<std::size_t>(k)] ^= sigma[static_cast<std::size_t>(k - 1)] & (x & 1);
    }
    return sigma[static_cast<std::size_t>(l)];
}

FpElement product_digit_binary(std::span<const int> a_prefix, std::span<const int> b_prefix)
{
    const Prime two(2);
    require_product_prefixes(a_prefix, b_prefix, two);
    const unsigned t = static_cast<unsigned>(a_prefix.size() - 1);
    int e = 0;
    std::vector<int> pairs;
    for (const auto& part : tp_partitions(two, t)) {
        int prod = 1;
        for (unsigned m = 0; m <= t && prod; ++m) {
            const int l = part.levels[m][0];
            if (l == 0)
                continue;
            pairs.assign(m + 1, 0);
            for (unsigned i = 0; i <= m; ++i)
                pairs[i] = a_prefix[i] & b_prefix[m - i];
            prod &= elementary_symmetric_mod2(pairs, l);
        }
        e ^= prod;
    }
    return {e, two};
}

int ternary_factor(std::size_t slot, int x, int y, TernaryFactorForm form)
{
    int v = 0;
    switch (slot) {
    case 0: // (1,0)
        v = x * y;
        break;
    case 1: // (0,1)
        v = x * (1 - x) * y;
        break;
    case 2: // (2,0)
        v = x * x * y * (1 - y);
        break;
    case 3: // (1,1)
    case 4: // (0,2)
        v = form == TernaryFactorForm::squared ? x * x * (1 - x) * y * (y - 1)
                                               : x * (1 - x) * y * (y - 1);
        break;
    default:
        throw std::invalid_argument("p = 3 has only five K-space slots");
    }
    return static_cast<int>(mod_floor(v, 3));
}

FpElement tau_ternary_closed(std::span<const int> l, std::span<const int> x,
                             std::span<const int> y, TernaryFactorForm form)
{
    const Prime three(3);
    if (l.size() != 5)
        throw std::invalid_argument("p = 3 multiplicity vectors have five entries");
    const int m = static_cast<int>(x.size()) - 1;
    require_multiplicity(m, l);
    require_antidiagonal_args(m, x, y, three);

    std::vector<std::vector<int>> cell(5);
    for (std::size_t j = 0; j < 5; ++j) {
        if (l[j] == 0)
            continue;
        cell[j].resize(x.size());
        for (int i = 0; i <= m; ++i)
            cell[j][static_cast<std::size_t>(i)] = ternary_factor(j, x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(m - i)], form);
    }
    return {PartitionSum(m, l, cell, 3).run(), three};
}

FpElement product_digit_ternary_closed(std::span<const int> a_prefix,
                                       std::span<const int> b_prefix, TernaryFactorForm form)
{
    const Prime three(3);
    require_product_prefixes(a_prefix, b_prefix, three);
    const unsigned t = static_cast<unsigned>(a_prefix.size() - 1);
    const auto& table = partition_table(three, t);
    const int e = sum_over_partitions(table, t, 3, [&](unsigned m, const Multiplicity& l) {
        return tau_ternary_closed(l, a_prefix.first(m + 1), b_prefix.first(m + 1), form).value();
    });
    return {e, three};
}

} // namespace padic

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "padic/digits.hpp"
#include "padic/fp.hpp"

namespace padic {

/// Exponent vector k = (k_1, ..., k_{p-1}) with sum k_l <= p - 1, indexing
/// the fundamental polynomial pi_k.
struct KVector {
    std::vector<int> components;

    /// sum_j j * k_j
    int weight() const noexcept;
    /// sum_j k_j
    int size() const noexcept;
    bool is_zero() const noexcept { return size() == 0; }

    friend bool operator==(const KVector&, const KVector&) = default;
};

/// The nonzero exponent vectors for p, ordered by weight and then
/// lexicographically, together with their weights. Element j (0-based)
/// plays the role of k(j+1).
class KSpace {
public:
    explicit KSpace(Prime p);

    /// Shared instance for p, built on first use. Thread-safe.
    static const KSpace& for_prime(Prime p);

    Prime prime() const noexcept { return p_; }
    /// K, the number of nonzero exponent vectors.
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<KVector>& elements() const noexcept { return elements_; }
    const std::vector<int>& weights() const noexcept { return weights_; }
    const KVector& operator[](std::size_t j) const { return elements_.at(j); }

private:
    Prime p_;
    std::vector<KVector> elements_;
    std::vector<int> weights_;
};

KSpace build_k_space(Prime p);

/// pi_k(x, y) = multinomial(y; k_1, ..., k_{p-1}) * prod_l C(x, l)^{k_l}  (mod p),
/// with pi_0 = 1. Requires x, y in [0, p-1] and k of length p - 1.
FpElement pi_eval(const KVector& k, int x, int y, Prime p);

/// Multiplicity vector l = (l_1, ..., l_K) over the ordered K-space.
using Multiplicity = std::vector<int>;

/// One T_p-partition of p^t: levels[m] = l_m with sum_m (w . l_m) p^m = p^t
/// and |l_m| <= 1 + m.
struct TpPartition {
    std::vector<Multiplicity> levels;

    friend bool operator==(const TpPartition&, const TpPartition&) = default;
    friend auto operator<=>(const TpPartition&, const TpPartition&) = default;
};

/// Every T_p-partition of p^t exactly once, in a fixed depth-first order
/// (top level first, each level's vector in ascending lexicographic order).
///
/// The search cost grows quickly with p and t; practical limits are roughly
/// t <= 16 for p = 2, t <= 8 for p = 3 and t <= 4 for p = 5.
std::vector<TpPartition> enumerate_tp_partitions(Prime p, unsigned t);

/// Shared, cached copy of enumerate_tp_partitions(p, t). Thread-safe.
const std::vector<TpPartition>& tp_partitions(Prime p, unsigned t);

/// An l-partition (S_1, ..., S_K) of {0, ..., m}: disjoint subsets with
/// |S_j| = l_j. Subsets are kept in ascending order.
struct IndexPartition {
    std::vector<std::vector<int>> subsets;

    friend bool operator==(const IndexPartition&, const IndexPartition&) = default;
};

/// All l-partitions of {0, ..., m}. Throws if |l| > 1 + m.
std::vector<IndexPartition> enumerate_index_partitions(int m, std::span<const int> l);

/// (1+m)! / (l_0! l_1! ... l_K!) with l_0 = 1 + m - |l|.
std::uint64_t index_partition_count(int m, std::span<const int> l);

/// tau_l(x_0..x_m; y_0..y_m): sum over l-partitions S of
/// prod_j prod_{i in S_j} pi_{k(j)}(x_i, y_{m-i}).
FpElement tau_eval(const KSpace& space, std::span<const int> l, std::span<const int> x,
                   std::span<const int> y);
FpElement tau_eval(std::span<const int> l, std::span<const int> x, std::span<const int> y,
                   Prime p);

/// Digit e_t of A * B from a_0..a_t, b_0..b_t:
///   e_t = sum_{L in L_p(t)} prod_{m=0}^{t} tau_{l_m}(a_0..a_m; b_0..b_m)  (mod p).
FpElement product_digit(std::span<const int> a_prefix, std::span<const int> b_prefix, Prime p);

/// A * B mod p^n, every digit evaluated independently by product_digit.
DigitSeq multiply_digits(const DigitSeq& a, const DigitSeq& b);

/// l-th elementary symmetric polynomial of xs over F_2.
int elementary_symmetric_mod2(std::span<const int> xs, int l);

/// p = 2 form of product_digit:
///   e_t = sum_{L in L_2(t)} prod_m sigma_{l_m}(a_0 b_m, a_1 b_{m-1}, ..., a_m b_0)  (mod 2).
FpElement product_digit_binary(std::span<const int> a_prefix, std::span<const int> b_prefix);

/// Closed polynomial forms of the p = 3 factors f_S, one factor per slot of
/// the K-space (1,0), (0,1), (2,0), (1,1), (0,2):
///   x y,  x(1-x) y,  x^2 y(1-y),  and for the last two slots either
///   squared:  x^2 (1-x) y (y-1)   (agrees with pi_k on F_3)
///   linear:   x (1-x) y (y-1)     (differs from pi_k at x = y = 2)
enum class TernaryFactorForm { squared, linear };

/// Value of the f_S factor for K-space slot j (0-based) at (x, y) in F_3.
int ternary_factor(std::size_t slot, int x, int y, TernaryFactorForm form);

/// tau_l over F_3 with the closed f_S factors in place of pi_k.
FpElement tau_ternary_closed(std::span<const int> l, std::span<const int> x,
                             std::span<const int> y, TernaryFactorForm form);

/// product_digit for p = 3 built from tau_ternary_closed.
FpElement product_digit_ternary_closed(std::span<const int> a_prefix,
                                       std::span<const int> b_prefix, TernaryFactorForm form);

} // namespace padic

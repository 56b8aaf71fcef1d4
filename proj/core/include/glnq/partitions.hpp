#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "glnq/bigint.hpp"

namespace glnq {

/* Integer partitions, hook combinatorics, symmetric-group character values
 * by rim-hook recursion, and the chiral-representation count. */

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const { return size_; }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Decreasing lexicographic enumeration uses > on this ordering.
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  private:
    std::vector<unsigned> parts_; // weakly decreasing, strictly positive
    unsigned size_ = 0;
};

// Multiset of hook lengths, one per cell.
struct HookMultiset {
    std::vector<unsigned> lengths; // row-major, weakly organized by cell order
};

// Cycle type (mu_1, ..., mu_m, 1^{n-k}) inside S_ambient_n.
struct CycleType {
    Partition mu;
    unsigned ambient_n = 0;
};

// Calls fn for each partition of n, in decreasing lexicographic order.
void enumerate_partitions(unsigned n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions_of(unsigned n);

// p(n) by the pentagonal-number recurrence.
Nat partition_count(unsigned n);

HookMultiset hooks(const Partition& lambda);

// Specht module dimension n!/prod(h), assembled from prime exponents.
Nat specht_dimension(const Partition& lambda);

// alpha(lambda) = sum_i (i-1) lambda_i.
unsigned long long alpha(const Partition& lambda);

// v_ell(f_lambda) = v_ell(n!) - sum_h v_ell(h), no big integers involved.
unsigned v_specht(std::uint64_t ell, const Partition& lambda);

// Exact character value of the Specht module at a cycle type,
// Murnaghan-Nakayama with memoization on (shape, cycles consumed).
std::int64_t mn_character(const Partition& lambda, const CycleType& ct);

// Lassalle coefficient A_mu^lambda = chi_mu^lambda (n)_k / f_lambda;
// throws logic_error if the value fails to be an integer.
std::int64_t lassalle_coefficient(const Partition& lambda, const Partition& mu);

// Number of chiral irreducibles of S_n from the binary-expansion closed form.
Nat chiral_count_closed_form(unsigned n);
// Same count by enumerating lambda |- n and testing (f - chi(transposition))/2.
Nat chiral_count_brute(unsigned n); // guarded n <= 40

// Threshold "v < r + log_ell(n)" (or plain "v < r"), compared exactly:
// for v >= r the log branch tests ell^(v-r) < n in integers.
struct VThreshold {
    long long r = 1;
    bool add_log_n = true;
    bool below(unsigned v, unsigned n, std::uint64_t ell) const;
};

struct ValuationStat {
    std::uint64_t count_below = 0;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> histogram; // histogram[v] = #lambda with v_ell(f)=v
};

// Distribution of v_ell(f_lambda) over lambda |- n plus the below-threshold count.
ValuationStat valuation_statistic(unsigned n, std::uint64_t ell, const VThreshold& t);

} // namespace glnq

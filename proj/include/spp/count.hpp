#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spp/forms.hpp"
#include "spp/primes.hpp"

namespace spp {

using BigCount = boost::multiprecision::cpp_int;

/// Number of prime multisets of a fixed size, members <= cap, per sum.
struct SumTable {
  int size = 0;
  Int cap = 0;
  std::map<Int, BigCount> counts;  // only nonzero entries

  BigCount at(Int sum) const;
  BigCount total() const;
};

/// Exact counts by an unbounded-knapsack recurrence over the universe primes
/// in ascending order; each multiset is counted once. Size 0 yields {0: 1}.
/// Throws UsageError for a negative size, OutOfRangeError for cap > limit.
SumTable build_sum_table(int size, Int cap, const PrimeTable& table);

/// C(m + j - 1, j): multisets of size j drawn from m values.
BigCount multiset_count(std::size_t m, int j);

/// Unconstrained r(n; cap) as sum over x of T_{k-s}(x) * T_s(x - n).
BigCount count_unconstrained(Int n, const FormSpec& form, Int cap, const PrimeTable& table);

struct TableRow {
  Int n;
  Int cap;
  BigCount count;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// One row per parity-feasible n in [n_lo, n_hi] and per cap, sorted by
/// (n, cap). Unconstrained rows come from the convolution, the other modes
/// from count_reps. The table must cover the largest cap.
std::vector<TableRow> counting_table(Int n_lo, Int n_hi, const FormSpec& form,
                                     ConstraintMode mode, const std::vector<Int>& caps,
                                     const PrimeTable& table);

}  // namespace spp

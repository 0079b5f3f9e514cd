#include "spp/count.hpp"

#include <algorithm>

#include "spp/enumerate.hpp"
#include "spp/errors.hpp"

namespace spp {

BigCount SumTable::at(Int sum) const {
  auto it = counts.find(sum);
  return it == counts.end() ? BigCount{0} : it->second;
}

BigCount SumTable::total() const {
  BigCount t = 0;
  for (const auto& [sum, c] : counts) t += c;
  return t;
}

SumTable build_sum_table(int size, Int cap, const PrimeTable& table) {
  if (size < 0) throw UsageError("sum table size must be >= 0");
  std::span<const Int> primes = table.primes_up_to(cap);
  SumTable out;
  out.size = size;
  out.cap = cap;

  const Int max_sum = primes.empty() ? 0 : size * primes.back();
  // dp[c][x]: multisets of c primes seen so far with sum x.
  std::vector<std::vector<BigCount>> dp(static_cast<std::size_t>(size) + 1,
                                        std::vector<BigCount>(static_cast<std::size_t>(max_sum) + 1));
  dp[0][0] = 1;
  for (Int p : primes) {
    // Ascending c reuses counts already updated for p, which admits repeats.
    for (int c = 1; c <= size; ++c) {
      auto& row = dp[static_cast<std::size_t>(c)];
      const auto& prev = dp[static_cast<std::size_t>(c) - 1];
      for (Int x = p; x <= max_sum; ++x) {
        const auto& add = prev[static_cast<std::size_t>(x - p)];
        if (!add.is_zero()) row[static_cast<std::size_t>(x)] += add;
      }
    }
  }
  const auto& last = dp[static_cast<std::size_t>(size)];
  for (Int x = 0; x <= max_sum; ++x) {
    if (!last[static_cast<std::size_t>(x)].is_zero()) out.counts.emplace(x, last[static_cast<std::size_t>(x)]);
  }
  return out;
}

BigCount multiset_count(std::size_t m, int j) {
  if (j == 0) return 1;
  if (m == 0) return 0;
  // C(m + j - 1, j) built incrementally; every partial product is an integer.
  BigCount r = 1;
  for (int i = 1; i <= j; ++i) {
    r *= BigCount(m + static_cast<std::size_t>(i) - 1);
    r /= i;
  }
  return r;
}

namespace {

BigCount convolve(Int n, const SumTable& pos, const SumTable& neg) {
  BigCount total = 0;
  for (const auto& [x, c] : pos.counts) {
    auto it = neg.counts.find(x - n);
    if (it != neg.counts.end()) total += c * it->second;
  }
  return total;
}

}  // namespace

BigCount count_unconstrained(Int n, const FormSpec& form, Int cap, const PrimeTable& table) {
  SumTable pos = build_sum_table(form.positives_count(), cap, table);
  SumTable neg = build_sum_table(form.negatives_count(), cap, table);
  return convolve(n, pos, neg);
}

std::vector<TableRow> counting_table(Int n_lo, Int n_hi, const FormSpec& form,
                                     ConstraintMode mode, const std::vector<Int>& caps,
                                     const PrimeTable& table) {
  std::vector<TableRow> rows;
  if (caps.empty() || n_lo > n_hi) return rows;
  const bool two = table.two_included();
  for (Int cap : caps) {
    if (mode == ConstraintMode::Unconstrained) {
      SumTable pos = build_sum_table(form.positives_count(), cap, table);
      SumTable neg = build_sum_table(form.negatives_count(), cap, table);
      for (Int n = n_lo; n <= n_hi; ++n) {
        if (parity_feasible(n, form, two)) rows.push_back({n, cap, convolve(n, pos, neg)});
      }
    } else {
      SearchBudget budget(cap, table);
      for (Int n = n_lo; n <= n_hi; ++n) {
        if (parity_feasible(n, form, two)) {
          rows.push_back({n, cap, BigCount(count_reps(n, form, mode, budget))});
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return a.n != b.n ? a.n < b.n : a.cap < b.cap;
  });
  return rows;
}

}  // namespace spp

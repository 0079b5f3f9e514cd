// Brute-force reference for count_reps. Deliberately naive: it rebuilds the
// prime list by scanning the table and visits every pair of multisets.

#include <vector>

#include "spp/enumerate.hpp"

namespace spp {

namespace {

// Advances a nondecreasing index tuple over [0, m); false once exhausted.
bool next_multiset(std::vector<std::size_t>& idx, std::size_t m) {
  std::size_t j = idx.size();
  while (j > 0) {
    --j;
    if (idx[j] + 1 < m) {
      std::size_t v = idx[j] + 1;
      for (std::size_t t = j; t < idx.size(); ++t) idx[t] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

std::uint64_t oracle_count(Int n, const FormSpec& form, ConstraintMode mode,
                           const SearchBudget& budget) {
  const PrimeTable& table = budget.table();
  std::vector<Int> primes;
  for (Int x = 2; x <= budget.cap(); ++x) {
    if (table.in_universe(x)) primes.push_back(x);
  }
  const std::size_t m = primes.size();
  const auto npos = static_cast<std::size_t>(form.positives_count());
  const auto nneg = static_cast<std::size_t>(form.negatives_count());
  if (m == 0) return 0;

  Representation rep;
  rep.positives.resize(npos);
  rep.negatives.resize(nneg);
  std::uint64_t count = 0;

  std::vector<std::size_t> neg_idx(nneg, 0);
  bool more_neg = true;
  while (more_neg) {
    for (std::size_t i = 0; i < nneg; ++i) rep.negatives[i] = primes[neg_idx[i]];
    std::vector<std::size_t> pos_idx(npos, 0);
    bool more_pos = true;
    while (more_pos) {
      for (std::size_t i = 0; i < npos; ++i) rep.positives[i] = primes[pos_idx[i]];
      if (validate(rep, n, form, mode, table).valid()) ++count;
      more_pos = next_multiset(pos_idx, m);
    }
    more_neg = nneg > 0 && next_multiset(neg_idx, m);
  }
  return count;
}

}  // namespace spp

#include "spp/enumerate.hpp"

#include <algorithm>
#include <unordered_map>

#include "spp/errors.hpp"

namespace spp {

SearchBudget::SearchBudget(Int cap, const PrimeTable& table)
    : cap_(cap), table_(&table), universe_(table.primes_up_to(cap)) {}

std::string_view not_found_name(NotFoundReason reason) {
  switch (reason) {
    case NotFoundReason::ParityInfeasible: return "ParityInfeasible";
    case NotFoundReason::CapExhausted: return "CapExhausted";
  }
  return "?";
}

namespace {

using Primes = std::span<const Int>;

std::size_t first_at_least(Primes u, std::size_t from, Int value) {
  auto it = std::lower_bound(u.begin() + static_cast<std::ptrdiff_t>(from), u.end(), value);
  return static_cast<std::size_t>(it - u.begin());
}

// Walks nondecreasing tuples in lexicographic order. `fixed_sum` pins the
// total of the tuple (the last element is then solved for rather than
// scanned); otherwise the total is only bounded to [lo_total, hi_total].
class MultisetWalker {
 public:
  MultisetWalker(Primes universe, std::size_t size) : u_(universe), size_(size) {
    slot_.resize(size);
  }

  // Tuples whose sum equals `target`. Callback gets the filled slot vector.
  template <typename Fn>
  bool with_sum(Int target, Fn&& fn) {
    if (size_ == 0) return target == 0 ? fn(slot_) : true;
    if (u_.empty()) return true;
    return fixed(0, 0, 0, target, fn);
  }

  // Tuples whose sum lies in [lo_total, hi_total].
  template <typename Fn>
  bool in_range(Int lo_total, Int hi_total, Fn&& fn) {
    if (size_ == 0) return (lo_total <= 0 && 0 <= hi_total) ? fn(slot_) : true;
    if (u_.empty()) return true;
    return ranged(0, 0, 0, lo_total, hi_total, fn);
  }

 private:
  template <typename Fn>
  bool fixed(std::size_t depth, std::size_t from, Int prefix, Int target, Fn& fn) {
    const Int rest = static_cast<Int>(size_ - depth);
    const Int top = u_.back();
    if (rest == 1) {
      Int v = target - prefix;
      if (v < u_[from] || v > top) return true;
      if (!std::binary_search(u_.begin() + static_cast<std::ptrdiff_t>(from), u_.end(), v)) {
        return true;
      }
      slot_[depth] = v;
      return fn(slot_);
    }
    // The remaining rest-1 slots contribute at most (rest-1)*top.
    std::size_t i = first_at_least(u_, from, target - prefix - (rest - 1) * top);
    for (; i < u_.size(); ++i) {
      Int v = u_[i];
      if (prefix + rest * v > target) break;
      slot_[depth] = v;
      if (!fixed(depth + 1, i, prefix + v, target, fn)) return false;
    }
    return true;
  }

  template <typename Fn>
  bool ranged(std::size_t depth, std::size_t from, Int prefix, Int lo, Int hi, Fn& fn) {
    const Int rest = static_cast<Int>(size_ - depth);
    const Int top = u_.back();
    std::size_t i = first_at_least(u_, from, lo - prefix - (rest - 1) * top);
    for (; i < u_.size(); ++i) {
      Int v = u_[i];
      if (prefix + rest * v > hi) break;
      slot_[depth] = v;
      if (rest == 1) {
        if (!fn(slot_)) return false;
      } else if (!ranged(depth + 1, i, prefix + v, lo, hi, fn)) {
        return false;
      }
    }
    return true;
  }

  Primes u_;
  std::size_t size_;
  std::vector<Int> slot_;
};

Int sum_of(const std::vector<Int>& v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}

// Range of sums reachable by `count` members of the universe.
struct SumRange {
  Int lo;
  Int hi;
};

SumRange reachable(Primes u, int count) {
  if (count == 0) return {0, 0};
  return {count * u.front(), count * u.back()};
}

bool walk_generic(Int n, const FormSpec& form, ConstraintMode mode, Primes u,
                  const RepVisitor& visit) {
  const int npos = form.positives_count();
  const int nneg = form.negatives_count();
  const SumRange pos_range = reachable(u, npos);

  Representation rep;
  MultisetWalker negatives(u, static_cast<std::size_t>(nneg));
  MultisetWalker positives(u, static_cast<std::size_t>(npos));
  // Negative sums that leave a reachable positive target.
  return negatives.in_range(pos_range.lo - n, pos_range.hi - n, [&](const std::vector<Int>& neg) {
    const Int target = n + sum_of(neg);
    return positives.with_sum(target, [&](const std::vector<Int>& pos) {
      if (!satisfies(mode, form, pos, neg)) return true;
      rep.positives = pos;
      rep.negatives = neg;
      return visit(rep);
    });
  });
}

// n = p + q - r: for each r ascending, pairs p <= q with p + q = n + r.
bool walk_three_one(Int n, const FormSpec& form, ConstraintMode mode, Primes u,
                    const RepVisitor& visit) {
  Representation rep;
  rep.positives.resize(2);
  rep.negatives.resize(1);
  const Int top = u.back();
  for (Int r : u) {
    const Int target = n + r;
    if (target > 2 * top) break;
    if (target < 2 * u.front()) continue;
    std::size_t lo = 0;
    std::size_t hi = static_cast<std::size_t>(
        std::upper_bound(u.begin(), u.end(), target - u.front()) - u.begin());
    if (hi == 0) continue;
    --hi;
    while (lo <= hi) {
      const Int sum = u[lo] + u[hi];
      if (sum == target) {
        rep.positives[0] = u[lo];
        rep.positives[1] = u[hi];
        rep.negatives[0] = r;
        if (satisfies(mode, form, rep.positives, rep.negatives) && !visit(rep)) return false;
        ++lo;
        if (hi == 0) break;
        --hi;
      } else if (sum < target) {
        ++lo;
      } else {
        if (hi == 0) break;
        --hi;
      }
    }
  }
  return true;
}

// n = p - q - r: for each pair q <= r, p = n + q + r must be a universe prime.
bool walk_three_two(Int n, const FormSpec& form, ConstraintMode mode, Primes u,
                    const RepVisitor& visit) {
  Representation rep;
  rep.positives.resize(1);
  rep.negatives.resize(2);
  const Int top = u.back();
  const Int bottom = u.front();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (n + 2 * u[i] > top) break;
    for (std::size_t j = i; j < u.size(); ++j) {
      const Int p = n + u[i] + u[j];
      if (p > top) break;
      if (p < bottom || !std::binary_search(u.begin(), u.end(), p)) continue;
      rep.positives[0] = p;
      rep.negatives[0] = u[i];
      rep.negatives[1] = u[j];
      if (satisfies(mode, form, rep.positives, rep.negatives) && !visit(rep)) return false;
    }
  }
  return true;
}

}  // namespace

void walk_reps(Int n, const FormSpec& form, ConstraintMode mode, const SearchBudget& budget,
               const RepVisitor& visit, Strategy strategy) {
  if (!parity_feasible(n, form, budget.table().two_included())) return;
  Primes u = budget.universe();
  if (u.empty()) return;
  if (strategy == Strategy::Auto && form.k() == 3 && form.s() == 1) {
    walk_three_one(n, form, mode, u, visit);
  } else if (strategy == Strategy::Auto && form.k() == 3 && form.s() == 2) {
    walk_three_two(n, form, mode, u, visit);
  } else {
    walk_generic(n, form, mode, u, visit);
  }
}

WitnessResult find_witness(Int n, const FormSpec& form, ConstraintMode mode,
                           const SearchBudget& budget, Strategy strategy) {
  WitnessResult result;
  if (!parity_feasible(n, form, budget.table().two_included())) {
    result.reason = NotFoundReason::ParityInfeasible;
    return result;
  }
  walk_reps(
      n, form, mode, budget,
      [&](const Representation& rep) {
        result.witness = rep;
        return false;
      },
      strategy);
  return result;
}

std::vector<Representation> enumerate_reps(Int n, const FormSpec& form, ConstraintMode mode,
                                           const SearchBudget& budget, Strategy strategy) {
  std::vector<Representation> out;
  walk_reps(
      n, form, mode, budget,
      [&](const Representation& rep) {
        out.push_back(rep);
        return true;
      },
      strategy);
  return out;
}

std::uint64_t count_reps(Int n, const FormSpec& form, ConstraintMode mode,
                         const SearchBudget& budget) {
  if (!parity_feasible(n, form, budget.table().two_included())) return 0;
  Primes u = budget.universe();
  if (u.empty()) return 0;

  const int npos = form.positives_count();
  const int nneg = form.negatives_count();
  const SumRange pos_range = reachable(u, npos);
  const SumRange neg_range = reachable(u, nneg);

  // Negative multisets bucketed by sum; only sums that some positive
  // multiset can balance are kept.
  std::unordered_map<Int, std::vector<std::vector<Int>>> by_sum;
  MultisetWalker negatives(u, static_cast<std::size_t>(nneg));
  negatives.in_range(pos_range.lo - n, pos_range.hi - n, [&](const std::vector<Int>& neg) {
    by_sum[sum_of(neg)].push_back(neg);
    return true;
  });
  if (by_sum.empty()) return 0;

  std::uint64_t count = 0;
  MultisetWalker positives(u, static_cast<std::size_t>(npos));
  positives.in_range(neg_range.lo + n, neg_range.hi + n, [&](const std::vector<Int>& pos) {
    auto it = by_sum.find(sum_of(pos) - n);
    if (it == by_sum.end()) return true;
    if (mode == ConstraintMode::Unconstrained) {
      count += it->second.size();
      return true;
    }
    for (const auto& neg : it->second) {
      if (satisfies(mode, form, pos, neg)) ++count;
    }
    return true;
  });
  return count;
}

}  // namespace spp

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spp/forms.hpp"
#include "spp/primes.hpp"

namespace spp {

/// Every prime used in a search is <= cap. The table must outlive the budget.
class SearchBudget {
 public:
  /// Throws OutOfRangeError when cap > table.limit().
  SearchBudget(Int cap, const PrimeTable& table);

  Int cap() const noexcept { return cap_; }
  const PrimeTable& table() const noexcept { return *table_; }
  std::span<const Int> universe() const noexcept { return universe_; }

 private:
  Int cap_;
  const PrimeTable* table_;
  std::span<const Int> universe_;
};

enum class NotFoundReason { ParityInfeasible, CapExhausted };

std::string_view not_found_name(NotFoundReason reason);

struct WitnessResult {
  std::optional<Representation> witness;
  NotFoundReason reason = NotFoundReason::CapExhausted;  // meaningful only without a witness

  bool found() const noexcept { return witness.has_value(); }
};

/// Auto takes the (3,1) two-ended scan and the (3,2) direct primality fast
/// paths; Generic forces the general walker. Both yield identical sequences.
enum class Strategy { Auto, Generic };

/// Enumeration order: negative multisets in ascending lexicographic order,
/// and for each the positive multisets summing to n + sum(negatives), also
/// ascending lexicographic. A visitor returning false stops the walk.
using RepVisitor = std::function<bool(const Representation&)>;

void walk_reps(Int n, const FormSpec& form, ConstraintMode mode, const SearchBudget& budget,
               const RepVisitor& visit, Strategy strategy = Strategy::Auto);

/// First valid representation in enumeration order.
WitnessResult find_witness(Int n, const FormSpec& form, ConstraintMode mode,
                           const SearchBudget& budget, Strategy strategy = Strategy::Auto);

std::vector<Representation> enumerate_reps(Int n, const FormSpec& form, ConstraintMode mode,
                                           const SearchBudget& budget,
                                           Strategy strategy = Strategy::Auto);

/// r(n; cap) via a sum-indexed join: negative multisets are bucketed by sum
/// and each positive multiset is matched against the bucket n + sum.
std::uint64_t count_reps(Int n, const FormSpec& form, ConstraintMode mode,
                         const SearchBudget& budget);

/// Brute-force reference count: every pair of multisets is built and passed
/// through validate(). Independent of the walker and join above; only use
/// with small caps.
std::uint64_t oracle_count(Int n, const FormSpec& form, ConstraintMode mode,
                           const SearchBudget& budget);

}  // namespace spp

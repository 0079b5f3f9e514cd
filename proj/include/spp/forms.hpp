#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spp/primes.hpp"

namespace spp {

/// Shape of a signed prime partition: k primes in total, s of them
/// subtracted. Construct through make_form().
class FormSpec {
 public:
  int k() const noexcept { return k_; }
  int s() const noexcept { return s_; }
  int positives_count() const noexcept { return k_ - s_; }
  int negatives_count() const noexcept { return s_; }

  /// s = 0 is the pure-sum extension (Goldbach-style cross checks).
  bool is_extension() const noexcept { return s_ == 0; }

  friend bool operator==(const FormSpec&, const FormSpec&) = default;

 private:
  friend FormSpec make_form(int k, int s);
  FormSpec(int k, int s) : k_(k), s_(s) {}
  int k_;
  int s_;
};

/// Throws UsageError unless k >= 2 and 0 <= s < k.
FormSpec make_form(int k, int s);

/// Canonical multiset pair: both groups stored ascending.
struct Representation {
  std::vector<Int> positives;
  std::vector<Int> negatives;

  friend bool operator==(const Representation&, const Representation&) = default;
  friend auto operator<=>(const Representation&, const Representation&) = default;
};

enum class ConstraintMode { Unconstrained, PaperLiteral, Disjoint, AllDistinct };

inline constexpr ConstraintMode kAllModes[] = {
    ConstraintMode::Unconstrained, ConstraintMode::PaperLiteral, ConstraintMode::Disjoint,
    ConstraintMode::AllDistinct};

/// CLI / certificate spelling: unconstrained | literal | disjoint | distinct.
std::string_view mode_name(ConstraintMode mode);
std::optional<ConstraintMode> parse_mode(std::string_view name);

enum class FailureReason { NonPrimeMember, WrongArity, SumMismatch, ConstraintViolated };

std::string_view reason_name(FailureReason reason);

struct Failure {
  FailureReason reason;
  std::optional<ConstraintMode> mode;  // set for ConstraintViolated

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct CheckReport {
  std::vector<Failure> failures;

  bool valid() const noexcept { return failures.empty(); }
  bool has(FailureReason reason) const;
  /// Comma-separated reason names, e.g. "SumMismatch,ConstraintViolated(disjoint)".
  std::string describe() const;
};

Representation canonicalize(std::vector<Int> positives, std::vector<Int> negatives);

/// sum(positives) - sum(negatives).
Int evaluate(const Representation& rep);

/// Mode condition alone, on canonical groups. PaperLiteral uses
/// exists-labeling: the pair passes if some assignment of members to the
/// named variables of the form satisfies its inequalities.
bool satisfies(ConstraintMode mode, const FormSpec& form, std::span<const Int> positives,
               std::span<const Int> negatives);

/// Full check of arity, primality, value and mode. A member above
/// table.limit() throws OutOfRangeError rather than counting as invalid.
/// Members outside the table's universe (including 2 when the table
/// excludes it) report NonPrimeMember.
CheckReport validate(const Representation& rep, Int n, const FormSpec& form,
                     ConstraintMode mode, const PrimeTable& table);

/// With 2 excluded every summand is odd, so only n with n = k (mod 2) can be
/// reached. Admitting a single 2 flips the parity, so everything is feasible.
bool parity_feasible(Int n, const FormSpec& form, bool two_allowed);

/// Text form `p1+p2+...-q1-q2-...`, e.g. `3+5-7`.
std::string to_text(const Representation& rep);

/// Inverse of to_text; nullopt on malformed input. The result is canonicalized.
std::optional<Representation> parse_text(std::string_view text);

}  // namespace spp

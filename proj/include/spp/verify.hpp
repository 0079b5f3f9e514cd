#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spp/forms.hpp"
#include "spp/primes.hpp"

namespace spp {

struct VerifyPolicy {
  Int initial_cap = 100;
  Int max_cap = 1'000'000;
  Int growth = 2;

  /// Throws UsageError unless 1 <= initial_cap <= max_cap and growth >= 2.
  void check() const;

  /// initial_cap, growth*initial_cap, ..., clamped so the last round is max_cap.
  std::vector<Int> rounds() const;
};

struct Certificate {
  Int n = 0;
  FormSpec form = make_form(3, 1);
  ConstraintMode mode = ConstraintMode::Disjoint;
  Representation representation;
  Int cap_used = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class OutcomeKind { Certified, Exhausted, ParityInfeasible };

std::string_view outcome_name(OutcomeKind kind);

struct Outcome {
  Int n = 0;
  OutcomeKind kind = OutcomeKind::ParityInfeasible;
  std::optional<Certificate> certificate;  // set iff Certified
  Int cap = 0;                             // cap_used, or max_cap when Exhausted
};

struct VerifySummary {
  std::size_t certified = 0;
  std::size_t exhausted = 0;
  std::size_t parity_infeasible = 0;
};

struct VerificationReport {
  FormSpec form = make_form(3, 1);
  ConstraintMode mode = ConstraintMode::Disjoint;
  VerifyPolicy policy;
  Int n_lo = 0;
  Int n_hi = 0;
  bool two_included = false;
  std::vector<Outcome> outcomes;  // ascending n, one per integer in range
  VerifySummary summary;
  /// Labels for inputs outside the stated conjecture forms (s = 0, n <= 0).
  std::vector<std::string> notes;
};

struct VerifyOptions {
  unsigned jobs = 1;
  bool two_included = false;
};

/// Sieve bound for a run: max |n| + k * max_cap.
Int sieve_bound(Int n_lo, Int n_hi, const FormSpec& form, Int max_cap);

/// Per-n iterative deepening over policy.rounds(). Outcomes are ordered by n
/// and do not depend on `jobs`. Throws UsageError on a bad policy or range.
VerificationReport verify_range(Int n_lo, Int n_hi, const FormSpec& form, ConstraintMode mode,
                                const VerifyPolicy& policy, const VerifyOptions& options = {});

/// Same, over a caller-provided table (must cover policy.max_cap).
VerificationReport verify_range(Int n_lo, Int n_hi, const FormSpec& form, ConstraintMode mode,
                                const VerifyPolicy& policy, const PrimeTable& table,
                                unsigned jobs = 1);

// Line-delimited JSON certificates.
std::string certificate_to_json(const Certificate& cert);
/// Throws std::invalid_argument with a short message on malformed records.
Certificate certificate_from_json(std::string_view line);

void write_certificates(const VerificationReport& report, std::ostream& out);
/// CSV with header `n,outcome,witness,cap_used`.
void write_report_csv(const VerificationReport& report, std::ostream& out);

struct CertCheck {
  std::size_t line = 0;  // 1-based
  bool accepted = false;
  std::string reasons;   // empty when accepted
  std::optional<Certificate> certificate;
};

struct CertCheckReport {
  std::vector<CertCheck> records;
  std::size_t accepted = 0;
  std::size_t rejected = 0;

  bool all_accepted() const noexcept { return rejected == 0; }
};

/// Re-validates each record with forms::validate alone. Blank lines are
/// skipped; malformed lines are rejected with ParseError and processing
/// continues. Members above table.limit() are rejected with OutOfRange.
CertCheckReport check_certificates(const std::vector<std::string>& lines, const PrimeTable& table);
CertCheckReport check_certificates(std::istream& in, const PrimeTable& table);

/// Largest value a set of certificate lines needs a table for (members and
/// cap_used), ignoring lines that fail to parse. Returns 2 at minimum.
Int certificate_bound(const std::vector<std::string>& lines);

}  // namespace spp

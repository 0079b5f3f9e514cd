#include "spp/forms.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "spp/errors.hpp"

namespace spp {

FormSpec make_form(int k, int s) {
  if (k < 2) throw UsageError("form requires k >= 2, got k=" + std::to_string(k));
  if (s < 0) throw UsageError("form requires s >= 0, got s=" + std::to_string(s));
  if (s >= k) {
    throw UsageError("form requires s < k, got k=" + std::to_string(k) +
                     " s=" + std::to_string(s));
  }
  return FormSpec(k, s);
}

std::string_view mode_name(ConstraintMode mode) {
  switch (mode) {
    case ConstraintMode::Unconstrained: return "unconstrained";
    case ConstraintMode::PaperLiteral: return "literal";
    case ConstraintMode::Disjoint: return "disjoint";
    case ConstraintMode::AllDistinct: return "distinct";
  }
  return "?";
}

std::optional<ConstraintMode> parse_mode(std::string_view name) {
  for (ConstraintMode m : kAllModes) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view reason_name(FailureReason reason) {
  switch (reason) {
    case FailureReason::NonPrimeMember: return "NonPrimeMember";
    case FailureReason::WrongArity: return "WrongArity";
    case FailureReason::SumMismatch: return "SumMismatch";
    case FailureReason::ConstraintViolated: return "ConstraintViolated";
  }
  return "?";
}

bool CheckReport::has(FailureReason reason) const {
  return std::any_of(failures.begin(), failures.end(),
                     [reason](const Failure& f) { return f.reason == reason; });
}

std::string CheckReport::describe() const {
  std::string out;
  for (const Failure& f : failures) {
    if (!out.empty()) out += ',';
    out += reason_name(f.reason);
    if (f.mode) {
      out += '(';
      out += mode_name(*f.mode);
      out += ')';
    }
  }
  return out;
}

Representation canonicalize(std::vector<Int> positives, std::vector<Int> negatives) {
  std::sort(positives.begin(), positives.end());
  std::sort(negatives.begin(), negatives.end());
  return Representation{std::move(positives), std::move(negatives)};
}

Int evaluate(const Representation& rep) {
  Int pos = std::accumulate(rep.positives.begin(), rep.positives.end(), Int{0});
  Int neg = std::accumulate(rep.negatives.begin(), rep.negatives.end(), Int{0});
  return pos - neg;
}

namespace {

// Both spans ascending.
bool share_value(std::span<const Int> a, std::span<const Int> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

bool has_adjacent_repeat(std::span<const Int> sorted) {
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

}  // namespace

bool satisfies(ConstraintMode mode, const FormSpec& form, std::span<const Int> positives,
               std::span<const Int> negatives) {
  switch (mode) {
    case ConstraintMode::Unconstrained:
      return true;
    case ConstraintMode::Disjoint:
      return !share_value(positives, negatives);
    case ConstraintMode::AllDistinct:
      return !has_adjacent_repeat(positives) && !has_adjacent_repeat(negatives) &&
             !share_value(positives, negatives);
    case ConstraintMode::PaperLiteral:
      if (form.k() == 3 && form.s() == 2) return true;
      if (form.k() == 5 && form.s() == 1) {
        // t != u: some positive can play t against the single negative u.
        return std::any_of(positives.begin(), positives.end(),
                           [&](Int p) { return p != negatives.front(); });
      }
      return !share_value(positives, negatives);
  }
  return false;
}

CheckReport validate(const Representation& rep, Int n, const FormSpec& form,
                     ConstraintMode mode, const PrimeTable& table) {
  CheckReport report;
  auto fail = [&](FailureReason r, std::optional<ConstraintMode> m = std::nullopt) {
    report.failures.push_back(Failure{r, m});
  };

  bool arity_ok = rep.positives.size() == static_cast<std::size_t>(form.positives_count()) &&
                  rep.negatives.size() == static_cast<std::size_t>(form.negatives_count());
  if (!arity_ok) fail(FailureReason::WrongArity);

  bool all_prime = true;
  for (const auto* group : {&rep.positives, &rep.negatives}) {
    for (Int x : *group) {
      if (x > table.limit()) {
        throw OutOfRangeError("member " + std::to_string(x) + " exceeds prime table limit " +
                              std::to_string(table.limit()));
      }
      if (!table.in_universe(x)) all_prime = false;
    }
  }
  if (!all_prime) fail(FailureReason::NonPrimeMember);

  if (evaluate(rep) != n) fail(FailureReason::SumMismatch);

  // Mode semantics are defined on canonical groups and need the form's arity.
  if (arity_ok) {
    bool canonical = std::is_sorted(rep.positives.begin(), rep.positives.end()) &&
                     std::is_sorted(rep.negatives.begin(), rep.negatives.end());
    bool ok = canonical ? satisfies(mode, form, rep.positives, rep.negatives)
                        : [&] {
                            Representation c = canonicalize(rep.positives, rep.negatives);
                            return satisfies(mode, form, c.positives, c.negatives);
                          }();
    if (!ok) fail(FailureReason::ConstraintViolated, mode);
  }
  return report;
}

bool parity_feasible(Int n, const FormSpec& form, bool two_allowed) {
  if (two_allowed) return true;
  return ((n - form.k()) % 2) == 0;
}

std::string to_text(const Representation& rep) {
  std::string out;
  for (std::size_t i = 0; i < rep.positives.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(rep.positives[i]);
  }
  for (Int q : rep.negatives) {
    out += '-';
    out += std::to_string(q);
  }
  return out;
}

std::optional<Representation> parse_text(std::string_view text) {
  std::vector<Int> pos;
  std::vector<Int> neg;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  bool negative = false;
  bool first = true;
  while (p != end) {
    if (!first) {
      if (*p == '+') negative = false;
      else if (*p == '-') negative = true;
      else return std::nullopt;
      ++p;
    }
    // Once a subtracted group starts, no positive may follow.
    if (!negative && !neg.empty()) return std::nullopt;
    if (p == end || *p < '0' || *p > '9') return std::nullopt;
    Int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p) return std::nullopt;
    p = next;
    (negative ? neg : pos).push_back(value);
    first = false;
  }
  if (pos.empty()) return std::nullopt;
  return canonicalize(std::move(pos), std::move(neg));
}

}  // namespace spp

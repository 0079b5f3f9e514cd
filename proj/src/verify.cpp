#include "spp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "spp/enumerate.hpp"
#include "spp/errors.hpp"

namespace spp {

using ordered_json = nlohmann::ordered_json;

void VerifyPolicy::check() const {
  if (initial_cap < 1) throw UsageError("initial cap must be positive");
  if (initial_cap > max_cap) {
    throw UsageError("initial cap " + std::to_string(initial_cap) + " exceeds max cap " +
                     std::to_string(max_cap));
  }
  if (growth < 2) throw UsageError("cap growth factor must be >= 2");
}

std::vector<Int> VerifyPolicy::rounds() const {
  check();
  std::vector<Int> caps;
  Int cap = initial_cap;
  while (true) {
    caps.push_back(cap);
    if (cap == max_cap) break;
    cap = cap > max_cap / growth ? max_cap : std::min(cap * growth, max_cap);
  }
  return caps;
}

std::string_view outcome_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Certified: return "certified";
    case OutcomeKind::Exhausted: return "exhausted";
    case OutcomeKind::ParityInfeasible: return "parity_infeasible";
  }
  return "?";
}

Int sieve_bound(Int n_lo, Int n_hi, const FormSpec& form, Int max_cap) {
  Int widest = std::max(std::abs(n_lo), std::abs(n_hi));
  return std::max<Int>(2, widest + form.k() * max_cap);
}

namespace {

Outcome verify_one(Int n, const FormSpec& form, ConstraintMode mode,
                   const std::vector<Int>& rounds, const PrimeTable& table) {
  Outcome out;
  out.n = n;
  if (!parity_feasible(n, form, table.two_included())) {
    out.kind = OutcomeKind::ParityInfeasible;
    return out;
  }
  for (Int cap : rounds) {
    SearchBudget budget(cap, table);
    WitnessResult r = find_witness(n, form, mode, budget);
    if (r.found()) {
      out.kind = OutcomeKind::Certified;
      out.cap = cap;
      out.certificate = Certificate{n, form, mode, std::move(*r.witness), cap};
      return out;
    }
  }
  out.kind = OutcomeKind::Exhausted;
  out.cap = rounds.back();
  return out;
}

}  // namespace

VerificationReport verify_range(Int n_lo, Int n_hi, const FormSpec& form, ConstraintMode mode,
                                const VerifyPolicy& policy, const PrimeTable& table,
                                unsigned jobs) {
  if (n_lo > n_hi) {
    throw UsageError("empty range: " + std::to_string(n_lo) + " > " + std::to_string(n_hi));
  }
  const std::vector<Int> rounds = policy.rounds();
  if (policy.max_cap > table.limit()) {
    throw UsageError("prime table limit " + std::to_string(table.limit()) +
                     " below max cap " + std::to_string(policy.max_cap));
  }

  VerificationReport report;
  report.form = form;
  report.mode = mode;
  report.policy = policy;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.two_included = table.two_included();
  if (form.is_extension()) report.notes.push_back("s=0 is a pure-sum extension, not one of the stated forms");
  if (n_lo <= 0) report.notes.push_back("range includes n <= 0, outside the worked examples");

  const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
  report.outcomes.resize(count);

  // Workers claim n values from a shared cursor and write into their own
  // slot, so the assembled order is ascending n whatever the schedule.
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1)) {
      report.outcomes[i] = verify_one(n_lo + static_cast<Int>(i), form, mode, rounds, table);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const Outcome& o : report.outcomes) {
    switch (o.kind) {
      case OutcomeKind::Certified: ++report.summary.certified; break;
      case OutcomeKind::Exhausted: ++report.summary.exhausted; break;
      case OutcomeKind::ParityInfeasible: ++report.summary.parity_infeasible; break;
    }
  }
  return report;
}

VerificationReport verify_range(Int n_lo, Int n_hi, const FormSpec& form, ConstraintMode mode,
                                const VerifyPolicy& policy, const VerifyOptions& options) {
  policy.check();
  if (n_lo > n_hi) {
    throw UsageError("empty range: " + std::to_string(n_lo) + " > " + std::to_string(n_hi));
  }
  PrimeTable table(sieve_bound(n_lo, n_hi, form, policy.max_cap), options.two_included);
  return verify_range(n_lo, n_hi, form, mode, policy, table, options.jobs);
}

std::string certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["n"] = cert.n;
  j["k"] = cert.form.k();
  j["s"] = cert.form.s();
  j["mode"] = std::string(mode_name(cert.mode));
  j["pos"] = cert.representation.positives;
  j["neg"] = cert.representation.negatives;
  j["cap_used"] = cert.cap_used;
  return j.dump();
}

Certificate certificate_from_json(std::string_view line) {
  static constexpr const char* kFields[] = {"n", "k", "s", "mode", "pos", "neg", "cap_used"};
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const ordered_json::parse_error&) {
    throw std::invalid_argument("not valid JSON");
  }
  if (!j.is_object()) throw std::invalid_argument("record is not an object");
  for (const char* f : kFields) {
    if (!j.contains(f)) throw std::invalid_argument(std::string("missing field ") + f);
  }
  if (j.size() != std::size(kFields)) throw std::invalid_argument("unexpected extra fields");

  auto integer = [&](const char* f) {
    const auto& v = j.at(f);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("field ") + f + " is not an integer");
    return v.get<Int>();
  };
  auto int_list = [&](const char* f) {
    const auto& v = j.at(f);
    if (!v.is_array()) throw std::invalid_argument(std::string("field ") + f + " is not an array");
    std::vector<Int> out;
    for (const auto& e : v) {
      if (!e.is_number_integer()) throw std::invalid_argument(std::string("field ") + f + " holds a non-integer");
      out.push_back(e.get<Int>());
    }
    if (!std::is_sorted(out.begin(), out.end())) {
      throw std::invalid_argument(std::string("field ") + f + " is not ascending");
    }
    return out;
  };

  Certificate cert;
  cert.n = integer("n");
  const Int k = integer("k");
  const Int s = integer("s");
  if (k < 2 || k > 64 || s < 0 || s >= k) throw std::invalid_argument("invalid form (k, s)");
  cert.form = make_form(static_cast<int>(k), static_cast<int>(s));
  if (!j.at("mode").is_string()) throw std::invalid_argument("field mode is not a string");
  auto mode = parse_mode(j.at("mode").get<std::string>());
  if (!mode) throw std::invalid_argument("unknown mode");
  cert.mode = *mode;
  cert.representation.positives = int_list("pos");
  cert.representation.negatives = int_list("neg");
  cert.cap_used = integer("cap_used");
  return cert;
}

void write_certificates(const VerificationReport& report, std::ostream& out) {
  for (const Outcome& o : report.outcomes) {
    if (o.certificate) out << certificate_to_json(*o.certificate) << '\n';
  }
}

void write_report_csv(const VerificationReport& report, std::ostream& out) {
  out << "n,outcome,witness,cap_used\n";
  for (const Outcome& o : report.outcomes) {
    out << o.n << ',' << outcome_name(o.kind) << ',';
    if (o.certificate) out << to_text(o.certificate->representation);
    out << ',';
    if (o.kind != OutcomeKind::ParityInfeasible) out << o.cap;
    out << '\n';
  }
}

CertCheckReport check_certificates(const std::vector<std::string>& lines, const PrimeTable& table) {
  CertCheckReport report;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CertCheck check;
    check.line = i + 1;
    try {
      Certificate cert = certificate_from_json(line);
      std::vector<std::string> reasons;
      try {
        CheckReport r = validate(cert.representation, cert.n, cert.form, cert.mode, table);
        if (!r.valid()) reasons.push_back(r.describe());
      } catch (const OutOfRangeError&) {
        reasons.push_back("OutOfRange");
      }
      const auto& rep = cert.representation;
      bool over_cap = std::any_of(rep.positives.begin(), rep.positives.end(),
                                  [&](Int x) { return x > cert.cap_used; }) ||
                      std::any_of(rep.negatives.begin(), rep.negatives.end(),
                                  [&](Int x) { return x > cert.cap_used; });
      if (over_cap) reasons.push_back("CapExceeded");
      for (const auto& r : reasons) {
        if (!check.reasons.empty()) check.reasons += ',';
        check.reasons += r;
      }
      check.accepted = reasons.empty();
      check.certificate = std::move(cert);
    } catch (const std::invalid_argument& e) {
      check.accepted = false;
      check.reasons = std::string("ParseError(") + e.what() + ")";
    }
    if (check.accepted) ++report.accepted; else ++report.rejected;
    report.records.push_back(std::move(check));
  }
  return report;
}

CertCheckReport check_certificates(std::istream& in, const PrimeTable& table) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return check_certificates(lines, table);
}

Int certificate_bound(const std::vector<std::string>& lines) {
  Int bound = 2;
  for (const auto& line : lines) {
    try {
      Certificate c = certificate_from_json(line);
      bound = std::max(bound, c.cap_used);
      for (Int x : c.representation.positives) bound = std::max(bound, x);
      for (Int x : c.representation.negatives) bound = std::max(bound, x);
    } catch (const std::invalid_argument&) {
    }
  }
  return bound;
}

}  // namespace spp

#include "spp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spp/count.hpp"
#include "spp/enumerate.hpp"
#include "spp/errors.hpp"
#include "spp/forms.hpp"
#include "spp/verify.hpp"

namespace spp::cli {

namespace {

constexpr Int kMaxSieve = 1'000'000'000;

struct CliConfig {
  int k = 3;
  int s = 1;
  std::string mode = "disjoint";
  Int n = 0;
  Int from = 0;
  Int to = 0;
  Int cap = 1000;
  Int initial_cap = 100;
  Int max_cap = 1'000'000;
  Int growth = 2;
  std::vector<Int> caps;
  bool allow_two = false;
  unsigned jobs = 1;
  std::string format = "csv";
  std::string method = "auto";
  std::string output;
  std::string certs;
  std::string input = "-";
};

ConstraintMode require_mode(const std::string& name) {
  auto m = parse_mode(name);
  if (!m) throw UsageError("unknown mode '" + name + "' (unconstrained|literal|disjoint|distinct)");
  return *m;
}

PrimeTable table_for(Int bound, bool two) {
  if (bound > kMaxSieve) {
    throw UsageError("sieve bound " + std::to_string(bound) + " exceeds " + std::to_string(kMaxSieve));
  }
  return PrimeTable(std::max<Int>(bound, 2), two);
}

void require_cap(Int cap) {
  if (cap < 1) throw UsageError("--cap must be positive");
}

std::string json_ints(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string rep_json(const Representation& rep) {
  return "{\"pos\":" + json_ints(rep.positives) + ",\"neg\":" + json_ints(rep.negatives) +
         ",\"text\":\"" + to_text(rep) + "\"}";
}

int cmd_witness(const CliConfig& c, std::ostream& out) {
  const FormSpec form = make_form(c.k, c.s);
  const ConstraintMode mode = require_mode(c.mode);
  require_cap(c.cap);
  PrimeTable table = table_for(c.cap, c.allow_two);
  SearchBudget budget(c.cap, table);
  WitnessResult r = find_witness(c.n, form, mode, budget);
  if (c.format == "json") {
    out << "{\"n\":" << c.n << ",\"k\":" << c.k << ",\"s\":" << c.s << ",\"mode\":\""
        << mode_name(mode) << "\",\"cap\":" << c.cap << ",\"found\":" << (r.found() ? "true" : "false");
    if (r.found()) out << ",\"witness\":" << rep_json(*r.witness);
    else out << ",\"reason\":\"" << not_found_name(r.reason) << "\"";
    out << "}\n";
  } else if (r.found()) {
    out << to_text(*r.witness) << '\n';
  } else {
    out << "NotFound(" << not_found_name(r.reason) << ")\n";
  }
  return r.found() ? kSuccess : kNotFound;
}

int cmd_count(const CliConfig& c, std::ostream& out) {
  const FormSpec form = make_form(c.k, c.s);
  const ConstraintMode mode = require_mode(c.mode);
  require_cap(c.cap);
  PrimeTable table = table_for(c.cap, c.allow_two);
  std::string method = c.method;
  if (method == "auto") method = mode == ConstraintMode::Unconstrained ? "convolution" : "join";
  BigCount count;
  if (method == "convolution") {
    if (mode != ConstraintMode::Unconstrained) {
      throw UsageError("--method convolution only counts unconstrained representations");
    }
    count = count_unconstrained(c.n, form, c.cap, table);
  } else if (method == "join") {
    count = count_reps(c.n, form, mode, SearchBudget(c.cap, table));
  } else if (method == "oracle") {
    count = oracle_count(c.n, form, mode, SearchBudget(c.cap, table));
  } else {
    throw UsageError("unknown method '" + c.method + "' (auto|join|convolution|oracle)");
  }
  if (c.format == "json") {
    out << "{\"n\":" << c.n << ",\"k\":" << c.k << ",\"s\":" << c.s << ",\"mode\":\""
        << mode_name(mode) << "\",\"cap\":" << c.cap << ",\"count\":" << count << "}\n";
  } else {
    out << count << '\n';
  }
  return kSuccess;
}

int cmd_enumerate(const CliConfig& c, std::ostream& out) {
  const FormSpec form = make_form(c.k, c.s);
  const ConstraintMode mode = require_mode(c.mode);
  require_cap(c.cap);
  PrimeTable table = table_for(c.cap, c.allow_two);
  std::size_t emitted = 0;
  walk_reps(c.n, form, mode, SearchBudget(c.cap, table), [&](const Representation& rep) {
    if (c.format == "json") out << rep_json(rep) << '\n';
    else out << to_text(rep) << '\n';
    ++emitted;
    return true;
  });
  return emitted > 0 ? kSuccess : kNotFound;
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const FormSpec form = make_form(c.k, c.s);
  const ConstraintMode mode = require_mode(c.mode);
  if (c.from > c.to) throw UsageError("--from must not exceed --to");
  if (c.jobs < 1) throw UsageError("--jobs must be >= 1");
  VerifyPolicy policy{c.initial_cap, c.max_cap, c.growth};
  policy.check();
  PrimeTable table = table_for(sieve_bound(c.from, c.to, form, c.max_cap), c.allow_two);
  VerificationReport report = verify_range(c.from, c.to, form, mode, policy, table, c.jobs);

  if (!c.certs.empty()) {
    std::ofstream certs(c.certs);
    if (!certs) throw UsageError("cannot write certificates to " + c.certs);
    write_certificates(report, certs);
  }
  if (c.format == "json") write_certificates(report, out);
  else write_report_csv(report, out);

  for (const auto& note : report.notes) err << "note: " << note << '\n';
  err << "certified=" << report.summary.certified << " exhausted=" << report.summary.exhausted
      << " parity_infeasible=" << report.summary.parity_infeasible << '\n';
  return report.summary.exhausted == 0 ? kSuccess : kNotFound;
}

int cmd_table(const CliConfig& c, std::ostream& out) {
  const FormSpec form = make_form(c.k, c.s);
  const ConstraintMode mode = require_mode(c.mode);
  if (c.from > c.to) throw UsageError("--from must not exceed --to");
  for (std::size_t i = 0; i < c.caps.size(); ++i) {
    require_cap(c.caps[i]);
    if (i && c.caps[i] <= c.caps[i - 1]) throw UsageError("--caps must be strictly ascending");
  }
  Int bound = c.caps.empty() ? 2 : c.caps.back();
  PrimeTable table = table_for(bound, c.allow_two);
  auto rows = counting_table(c.from, c.to, form, mode, c.caps, table);
  if (c.format == "json") {
    for (const auto& r : rows) {
      out << "{\"n\":" << r.n << ",\"cap\":" << r.cap << ",\"count\":" << r.count << "}\n";
    }
  } else {
    out << "n,cap,count\n";
    for (const auto& r : rows) out << r.n << ',' << r.cap << ',' << r.count << '\n';
  }
  return kSuccess;
}

int cmd_check(const CliConfig& c, std::ostream& out, std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  PrimeTable table = table_for(std::min(certificate_bound(lines), kMaxSieve), c.allow_two);
  CertCheckReport report = check_certificates(lines, table);
  for (const auto& r : report.records) {
    if (c.format == "json") {
      out << "{\"line\":" << r.line << ",\"accepted\":" << (r.accepted ? "true" : "false")
          << ",\"reasons\":" << nlohmann::json(r.reasons).dump() << "}\n";
    } else if (!r.accepted) {
      out << "line " << r.line << ": rejected: " << r.reasons << '\n';
    }
  }
  if (c.format != "json") {
    out << "accepted=" << report.accepted << " rejected=" << report.rejected << '\n';
  }
  return report.all_accepted() ? kSuccess : kNotFound;
}

void add_form_options(CLI::App* sub, CliConfig& c) {
  sub->add_option("--k", c.k, "total number of primes")->required();
  sub->add_option("--s", c.s, "number of subtracted primes")->required();
  sub->add_option("--mode", c.mode, "unconstrained|literal|disjoint|distinct")
      ->capture_default_str();
  sub->add_flag("--allow-two", c.allow_two, "admit the prime 2");
  sub->add_option("--format", c.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("-o,--output", c.output, "write results to a file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"Signed prime partition search, counting and verification", "spp"};
  app.require_subcommand(1);

  auto* witness = app.add_subcommand("witness", "first representation of n in search order");
  add_form_options(witness, c);
  witness->add_option("--n", c.n)->required();
  witness->add_option("--cap", c.cap, "largest prime allowed")->capture_default_str();

  auto* count = app.add_subcommand("count", "number of representations of n under a cap");
  add_form_options(count, c);
  count->add_option("--n", c.n)->required();
  count->add_option("--cap", c.cap, "largest prime allowed")->capture_default_str();
  count->add_option("--method", c.method, "auto|join|convolution|oracle")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "all representations of n under a cap");
  add_form_options(enumerate, c);
  enumerate->add_option("--n", c.n)->required();
  enumerate->add_option("--cap", c.cap, "largest prime allowed")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "certify every n in a range");
  add_form_options(verify, c);
  verify->add_option("--from", c.from)->required();
  verify->add_option("--to", c.to)->required();
  verify->add_option("--initial-cap", c.initial_cap)->capture_default_str();
  verify->add_option("--max-cap", c.max_cap)->capture_default_str();
  verify->add_option("--growth", c.growth)->capture_default_str();
  verify->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
  verify->add_option("--certs", c.certs, "also write certificates (JSON lines) here");

  auto* table = app.add_subcommand("table", "representation counts per n and cap");
  add_form_options(table, c);
  table->add_option("--from", c.from)->required();
  table->add_option("--to", c.to)->required();
  table->add_option("--caps", c.caps, "ascending caps")->delimiter(',')->required();

  auto* check = app.add_subcommand("check-cert", "re-validate a certificate file");
  check->add_option("input", c.input, "certificate file, or - for stdin")->capture_default_str();
  check->add_flag("--allow-two", c.allow_two, "admit the prime 2");
  check->add_option("--format", c.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  check->add_option("-o,--output", c.output, "write results to a file instead of stdout");

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  try {
    if (!c.output.empty()) {
      file = std::make_unique<std::ofstream>(c.output);
      if (!*file) throw UsageError("cannot open output file " + c.output);
      sink = file.get();
    }
    if (*witness) return cmd_witness(c, *sink);
    if (*count) return cmd_count(c, *sink);
    if (*enumerate) return cmd_enumerate(c, *sink);
    if (*verify) return cmd_verify(c, *sink, err);
    if (*table) return cmd_table(c, *sink);
    if (*check) {
      if (c.input == "-") return cmd_check(c, *sink, std::cin);
      std::ifstream in(c.input);
      if (!in) throw UsageError("cannot read " + c.input);
      return cmd_check(c, *sink, in);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace spp::cli

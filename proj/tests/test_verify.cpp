#include <doctest.h>

#include <sstream>

#include "spp/enumerate.hpp"
#include "spp/errors.hpp"
#include "spp/verify.hpp"

using namespace spp;

namespace {

Representation rep(std::vector<Int> pos, std::vector<Int> neg) {
  return canonicalize(std::move(pos), std::move(neg));
}

std::string serialize(const VerificationReport& r) {
  std::ostringstream os;
  write_report_csv(r, os);
  write_certificates(r, os);
  return os.str();
}

}  // namespace

TEST_CASE("policy rounds") {
  CHECK(VerifyPolicy{100, 1000, 2}.rounds() == std::vector<Int>{100, 200, 400, 800, 1000});
  CHECK(VerifyPolicy{100, 100, 2}.rounds() == std::vector<Int>{100});
  CHECK(VerifyPolicy{10, 1000, 10}.rounds() == std::vector<Int>{10, 100, 1000});
  CHECK_THROWS_AS(VerifyPolicy({200, 100, 2}).check(), UsageError);
  CHECK_THROWS_AS(VerifyPolicy({100, 1000, 1}).check(), UsageError);
  CHECK_THROWS_AS(VerifyPolicy({0, 1000, 2}).check(), UsageError);
}

TEST_CASE("verify the (3,2) worked range") {
  const FormSpec f = make_form(3, 2);
  VerificationReport r =
      verify_range(1, 11, f, ConstraintMode::Disjoint, VerifyPolicy{100, 100, 2});
  REQUIRE(r.outcomes.size() == 11);
  CHECK(r.summary.certified == 6);
  CHECK(r.summary.parity_infeasible == 5);
  CHECK(r.summary.exhausted == 0);
  for (const Outcome& o : r.outcomes) {
    CHECK(o.n == r.outcomes.front().n + (&o - r.outcomes.data()));
    if (o.n % 2) {
      REQUIRE(o.kind == OutcomeKind::Certified);
      CHECK(o.certificate->cap_used == 100);
    } else {
      CHECK(o.kind == OutcomeKind::ParityInfeasible);
    }
  }
  PrimeTable table(200);
  const std::pair<Int, Representation> worked[] = {
      {1, rep({13}, {5, 7})}, {1, rep({17}, {5, 11})}, {1, rep({19}, {5, 13})},
      {3, rep({13}, {3, 7})}, {3, rep({23}, {7, 13})}, {5, rep({13}, {3, 5})},
      {7, rep({17}, {3, 7})}, {9, rep({17}, {3, 5})}, {11, rep({19}, {3, 5})}};
  for (const auto& [n, w] : worked) {
    CHECK(validate(w, n, f, ConstraintMode::PaperLiteral, table).valid());
  }
}

TEST_CASE("parity-infeasible singleton") {
  VerificationReport r =
      verify_range(2, 2, make_form(3, 1), ConstraintMode::Disjoint, VerifyPolicy{100, 100, 2});
  REQUIRE(r.outcomes.size() == 1);
  CHECK(r.outcomes[0].kind == OutcomeKind::ParityInfeasible);
}

TEST_CASE("exhausted only after the max-cap round") {
  // n = p - q - r with p <= 100 cannot reach 99.
  VerificationReport r =
      verify_range(99, 99, make_form(3, 2), ConstraintMode::Disjoint, VerifyPolicy{10, 100, 3});
  REQUIRE(r.outcomes.size() == 1);
  CHECK(r.outcomes[0].kind == OutcomeKind::Exhausted);
  CHECK(r.outcomes[0].cap == 100);
  std::ostringstream os;
  write_report_csv(r, os);
  CHECK(os.str() == "n,outcome,witness,cap_used\n99,exhausted,,100\n");
}

TEST_CASE("cap_used is the first admitting round") {
  const FormSpec f = make_form(3, 2);
  VerifyPolicy policy{10, 400, 2};
  VerificationReport r = verify_range(1, 151, f, ConstraintMode::Disjoint, policy);
  PrimeTable table(400);
  for (const Outcome& o : r.outcomes) {
    if (o.kind != OutcomeKind::Certified) continue;
    const Int used = o.certificate->cap_used;
    for (Int cap : policy.rounds()) {
      if (cap >= used) break;
      CHECK_FALSE(find_witness(o.n, f, ConstraintMode::Disjoint, SearchBudget(cap, table)).found());
    }
  }
}

TEST_CASE("report notes for extension inputs") {
  auto r = verify_range(-4, 4, make_form(2, 0), ConstraintMode::Unconstrained, VerifyPolicy{10, 10, 2});
  CHECK(r.notes.size() == 2);
  auto plain = verify_range(1, 3, make_form(3, 1), ConstraintMode::Disjoint, VerifyPolicy{10, 10, 2});
  CHECK(plain.notes.empty());
}

TEST_CASE("range and policy errors") {
  const FormSpec f = make_form(3, 1);
  CHECK_THROWS_AS(verify_range(5, 1, f, ConstraintMode::Disjoint, VerifyPolicy{}), UsageError);
  CHECK_THROWS_AS(verify_range(1, 5, f, ConstraintMode::Disjoint, VerifyPolicy{10, 5, 2}),
                  UsageError);
  PrimeTable small(50);
  CHECK_THROWS_AS(
      verify_range(1, 5, f, ConstraintMode::Disjoint, VerifyPolicy{10, 100, 2}, small, 1),
      UsageError);
}

TEST_CASE("worker count does not change the report") {
  const FormSpec f = make_form(5, 3);
  VerifyPolicy policy{20, 500, 2};
  std::string base = serialize(verify_range(-41, 301, f, ConstraintMode::AllDistinct, policy));
  for (unsigned jobs : {2u, 3u, 8u}) {
    CHECK(serialize(verify_range(-41, 301, f, ConstraintMode::AllDistinct, policy, VerifyOptions{jobs, false})) ==
          base);
  }
}

TEST_CASE("certificate json") {
  Certificate c{7, make_form(3, 1), ConstraintMode::PaperLiteral, rep({11, 13}, {17}), 100};
  const std::string line = certificate_to_json(c);
  CHECK(line ==
        R"({"n":7,"k":3,"s":1,"mode":"literal","pos":[11,13],"neg":[17],"cap_used":100})");
  CHECK(certificate_from_json(line) == c);
  for (const char* bad : {
           R"({"n":7,"k":3,"s":1,"mode":"literal","pos":[11,13],"neg":[17])",
           R"({"n":7,"k":3,"s":1,"mode":"literal","pos":[11,13],"neg":[17]})",
           R"({"n":7,"k":3,"s":1,"mode":"loose","pos":[11,13],"neg":[17],"cap_used":100})",
           R"({"n":7,"k":3,"s":3,"mode":"literal","pos":[11,13],"neg":[17],"cap_used":100})",
           R"({"n":7,"k":3,"s":1,"mode":"literal","pos":[13,11],"neg":[17],"cap_used":100})",
           R"({"n":"7","k":3,"s":1,"mode":"literal","pos":[11,13],"neg":[17],"cap_used":100})",
           R"({"n":7,"k":3,"s":1,"mode":"literal","pos":[11,13],"neg":[17],"cap_used":100,"x":1})",
           R"([1,2,3])"}) {
    CHECK_THROWS_AS_MESSAGE(certificate_from_json(bad), std::invalid_argument, bad);
  }
}

TEST_CASE("check_certificates") {
  PrimeTable table(100);
  std::vector<std::string> lines = {
      R"({"n":7,"k":3,"s":1,"mode":"literal","pos":[11,13],"neg":[17],"cap_used":20})",
      R"({"n":9,"k":5,"s":1,"mode":"literal","pos":[5,7,11,13],"neg":[29],"cap_used":30})",
      R"({"n":7,"k":3,"s":1,"mode":"literal","pos":[11,13],"ne)",
      "",
      R"({"n":7,"k":3,"s":1,"mode":"literal","pos":[11,13],"neg":[17],"cap_used":15})",
      R"({"n":100,"k":2,"s":0,"mode":"disjoint","pos":[3,97],"neg":[],"cap_used":100})",
      R"({"n":4,"k":3,"s":1,"mode":"literal","pos":[3,103],"neg":[102],"cap_used":110})",
  };
  CertCheckReport r = check_certificates(lines, table);
  REQUIRE(r.records.size() == 6);
  CHECK(r.accepted == 2);
  CHECK(r.rejected == 4);
  CHECK(r.records[0].accepted);
  CHECK(r.records[1].reasons == "SumMismatch");
  CHECK(r.records[2].reasons.rfind("ParseError", 0) == 0);
  CHECK(r.records[3].line == 5);
  CHECK(r.records[3].reasons == "CapExceeded");
  CHECK(r.records[4].accepted);
  CHECK(r.records[5].reasons == "OutOfRange");
  CHECK(certificate_bound(lines) == 110);
}

TEST_CASE("every emitted certificate re-checks") {
  VerifyPolicy policy{50, 2000, 2};
  for (auto [k, s] : {std::pair{3, 1}, {5, 1}, {5, 4}, {4, 2}}) {
    auto r = verify_range(-30, 120, make_form(k, s), ConstraintMode::Disjoint, policy);
    std::ostringstream os;
    write_certificates(r, os);
    std::istringstream in(os.str());
    PrimeTable table(2000);
    CertCheckReport check = check_certificates(in, table);
    CHECK(check.accepted == r.summary.certified);
    CHECK(check.all_accepted());
  }
}

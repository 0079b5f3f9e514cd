// Randomized invariants over small universes. Cases come from a seeded
// generator so failures reproduce; CAPTURE prints the offending case.

#include <doctest.h>

#include <random>

#include "spp/count.hpp"
#include "spp/enumerate.hpp"

using namespace spp;

namespace {

struct Case {
  int k;
  int s;
  ConstraintMode mode;
  Int n;
  Int cap;
};

class CaseGen {
 public:
  explicit CaseGen(std::uint64_t seed) : rng_(seed) {}

  Case next(int max_k, Int max_cap, Int max_abs_n) {
    Case c;
    c.k = uniform(2, max_k);
    c.s = uniform(0, c.k - 1);
    c.mode = kAllModes[uniform(0, 3)];
    c.n = uniform(-max_abs_n, max_abs_n);
    c.cap = uniform(2, static_cast<int>(max_cap));
    return c;
  }

  int uniform(Int lo, Int hi) {
    return static_cast<int>(std::uniform_int_distribution<Int>(lo, hi)(rng_));
  }

 private:
  std::mt19937_64 rng_;
};

const PrimeTable& table() {
  static const PrimeTable t(200);
  return t;
}

}  // namespace

TEST_CASE("join count, oracle and enumeration agree") {
  CaseGen gen(0x5eed);
  for (int i = 0; i < 400; ++i) {
    Case c = gen.next(5, 35, 25);
    CAPTURE(c.k); CAPTURE(c.s); CAPTURE(c.n); CAPTURE(c.cap); CAPTURE(mode_name(c.mode));
    FormSpec f = make_form(c.k, c.s);
    SearchBudget b(c.cap, table());
    const std::uint64_t join = count_reps(c.n, f, c.mode, b);
    REQUIRE(join == oracle_count(c.n, f, c.mode, b));
    REQUIRE(join == enumerate_reps(c.n, f, c.mode, b).size());
  }
}

TEST_CASE("convolution agrees with the join count when unconstrained") {
  CaseGen gen(42);
  for (int i = 0; i < 400; ++i) {
    Case c = gen.next(6, 60, 40);
    CAPTURE(c.k); CAPTURE(c.s); CAPTURE(c.n); CAPTURE(c.cap);
    FormSpec f = make_form(c.k, c.s);
    REQUIRE(count_unconstrained(c.n, f, c.cap, table()) ==
            count_reps(c.n, f, ConstraintMode::Unconstrained, SearchBudget(c.cap, table())));
  }
}

TEST_CASE("witness is the first enumerated representation") {
  CaseGen gen(99);
  for (int i = 0; i < 400; ++i) {
    Case c = gen.next(5, 40, 30);
    FormSpec f = make_form(c.k, c.s);
    SearchBudget b(c.cap, table());
    auto reps = enumerate_reps(c.n, f, c.mode, b);
    auto w = find_witness(c.n, f, c.mode, b);
    REQUIRE(w.found() == !reps.empty());
    if (w.found()) REQUIRE(*w.witness == reps.front());
  }
}

TEST_CASE("swapping the sets negates the value") {
  CaseGen gen(7);
  for (int i = 0; i < 400; ++i) {
    Case c = gen.next(5, 40, 30);
    if (c.s == 0 || c.mode == ConstraintMode::PaperLiteral) continue;
    SearchBudget b(c.cap, table());
    REQUIRE(count_reps(c.n, make_form(c.k, c.s), c.mode, b) ==
            count_reps(-c.n, make_form(c.k, c.k - c.s), c.mode, b));
  }
}

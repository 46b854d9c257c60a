// Acceptance run: one line per criterion, exact comparisons throughout.
// Runtime budgets are enforced only in optimized builds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "origami/errors.hpp"
#include "origami/limits.hpp"
#include "origami/series.hpp"
#include "origami/suites.hpp"

using namespace origami;

namespace {

struct Outcome {
  long checks = 0;
  bool passed = true;
  std::string note;

  void add(const SuiteResult& r) {
    checks += r.checks;
    if (!r.passed && passed) note = r.name + ": " + r.to_json()["counterexample"].dump();
    passed = passed && r.passed;
  }
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) note = what;
    passed = passed && ok;
  }
};

std::vector<Ranks> all_ranks(int max_total) {
  std::vector<Ranks> out;
  for (int total = 1; total <= max_total; ++total)
    for (int r1 = total; r1 >= 0; --r1) out.emplace_back(r1, total - r1);
  return out;
}

SuiteConfig cfg(const Ranks& r, int order, int points, std::uint64_t seed = 1) {
  return SuiteConfig{r, order, seed, points};
}

Outcome closed_form() {
  Outcome o;
  for (auto [r1, r2] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}, {3, 1}})
    o.add(suites::closed_form(cfg(Ranks(r1, r2), 6, 5)));
  return o;
}

Outcome rank1_product() {
  Outcome o;
  o.add(suites::rank1_product(cfg(Ranks(1, 0), 8, 5)));
  return o;
}

Outcome framing() {
  Outcome o;
  o.add(suites::framing(cfg(Ranks(2, 2), 5, 3)));
  return o;
}

Outcome factorization_and_limits() {
  Outcome o;
  for (auto [r1, r2] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const Ranks r(r1, r2);
    o.add(suites::limits(cfg(r, 4, 3)));
    o.add(suites::factorization(cfg(r, 4, 3)));
    // the two symbolic block limits for every fixed point up to size 5
    const SpeedOrder ord = SpeedOrder::for_ranks(r);
    const auto all = slots(r);
    for (int n = 0; n <= 5; ++n)
      for (const FixedPoint& bn : fixed_points(r, n))
        for (const Slot& lo : all)
          for (const Slot& hi : all) {
            if (!(lo < hi)) continue;
            o.check(framing_limit(efrak(-vertex_block(bn, lo, hi)), ord) == FactoredForm(),
                    "forward block limit at " + bn.to_string());
            o.check(framing_limit(efrak(-vertex_block(bn, hi, lo)), ord) ==
                        FactoredForm::monomial(Monomial(Var::t(hi.group), bn.count(lo))),
                    "backward block limit at " + bn.to_string());
          }
  }
  return o;
}

Outcome oracle() {
  Outcome o;
  for (const Ranks& r : all_ranks(3)) o.add(suites::oracle(cfg(r, 4, 3)));
  return o;
}

Outcome twist() {
  Outcome o;
  for (const Ranks& r : all_ranks(4))
    for (int n = 0; n <= 5; ++n) {
      const Monomial expected({{Var::t(1), n * r.r1()}, {Var::t(2), n * r.r2()}});
      for (const FixedPoint& bn : fixed_points(r, n))
        o.check(det_char(vertex_term(bn)) == expected, "det at " + bn.to_string());
    }
  for (auto [r1, r2] : {std::pair{1, 0}, {1, 1}, {2, 1}}) o.add(suites::no_twist(cfg(Ranks(r1, r2), 5, 5)));
  return o;
}

Outcome cohomological() {
  Outcome o;
  for (auto [r1, r2] : {std::pair{1, 0}, {1, 1}, {2, 1}}) o.add(suites::cohomological(cfg(Ranks(r1, r2), 4, 5)));
  return o;
}

Outcome euler() {
  Outcome o;
  for (const Ranks& r : all_ranks(4)) o.add(suites::euler_count(cfg(r, 10, 1)));
  return o;
}

Outcome cy() {
  Outcome o;
  for (const Ranks& r : all_ranks(3)) o.add(suites::cy_vanishing(cfg(r, 5, 3)));
  return o;
}

Outcome smooth() {
  Outcome o;
  for (int r = 1; r <= 3; ++r) o.add(suites::smooth_chi_y(cfg(Ranks(0, r), 5, 3)));
  return o;
}

Outcome properties() {
  Outcome o;
  for (const SuiteResult& r : suites::properties(1, 100)) {
    o.add(r);
    o.check(r.checks >= 100, r.name + " ran fewer than 100 instances");
  }
  return o;
}

struct Criterion {
  const char* label;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"closed-form equality, 6 rank pairs, N=6, 5 points", 5, closed_form},
      {"rank-1 product formula, N=8", 1, rank1_product},
      {"framing independence, (2,2), N=5, 3 assignments", 2, framing},
      {"factorization via framing limits, N=4; block limits n<=5", 3, factorization_and_limits},
      {"plane Quot oracle, r<=3, N=4, 3 points", 10, oracle},
      {"twist: det identity r<=4 n<=5; twisted series N=5", 3, twist},
      {"cohomological series, N=4, 5 points", 2, cohomological},
      {"Euler characteristic counts, r<=4, n<=10", 1, euler},
      {"CY vanishing, r<=3, 1<=n<=5, 3 seeds", 5, cy},
      {"smooth-case identity and chi_y genus, (0,r), r<=3, n<=5", 1, smooth},
      {"property suites, >=100 instances each", 5, properties},
  };
#ifdef NDEBUG
  const bool enforce_budget = true;
#else
  const bool enforce_budget = false;
#endif

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_s;
    const bool ok = o.passed && (in_budget || !enforce_budget);
    if (!ok) ++failures;
    std::printf("%s  %2zu. %-58s tolerance exact, %7ld checks, %6.2f s (budget %.0f s%s)\n", ok ? "PASS" : "FAIL",
                k + 1, c.label, o.checks, secs, c.budget_s, in_budget ? "" : ", exceeded");
    if (!o.passed) std::printf("      first failure: %s\n", o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

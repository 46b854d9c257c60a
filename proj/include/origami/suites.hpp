#pragma once

// Verification suites: each checks one identity between independently
// computed quantities and keeps the first counterexample it finds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "origami/kchar.hpp"
#include "origami/qseries.hpp"
#include "origami/vertex.hpp"

namespace origami {

using Json = nlohmann::ordered_json;

struct SuiteConfig {
  Ranks ranks{1, 0};
  int order = 6;
  std::uint64_t seed = 1;
  int num_points = 5;
};

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  long checks = 0;
  bool passed = true;
  std::optional<Json> counterexample;

  /// Counts one check; on failure keeps the first counterexample.
  template <class DetailFn>
  void record(bool ok, DetailFn&& detail) {
    ++checks;
    if (ok) return;
    if (passed) counterexample = detail();
    passed = false;
  }
  /// Folds another result's checks and first failure into this one.
  void absorb(const SuiteResult& other);

  Json to_json() const;
};

Json to_json(const PointAssignment& p);
Json to_json(const QSeries<Rational>& s);

/// Compares two series coefficientwise, recording one check per coefficient.
void compare_series(SuiteResult& result, const QSeries<Rational>& lhs, const QSeries<Rational>& rhs,
                    const Json& context);

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Runs a named suite; throws std::invalid_argument on an unknown name and
/// PreconditionError when the suite does not apply to cfg.ranks.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

namespace suites {

/// z_localized = z_closed at num_points points.
SuiteResult closed_form(const SuiteConfig& cfg);
/// Rank (1,0) product formula = z_closed((1,0)) at num_points points.
SuiteResult rank1_product(const SuiteConfig& cfg);
/// Identical z_localized coefficients for num_points framing assignments at
/// one t-point, and the t1 <-> t2 symmetry (r1,r2) <-> (r2,r1).
SuiteResult framing(const SuiteConfig& cfg);
/// z_localized = the factorized product; exponent bookkeeping of the limit argument.
SuiteResult factorization(const SuiteConfig& cfg);
/// Symbolic block limits for counts up to cfg.order, numeric convergence
/// towards them, and z_via_limits = z_closed.
SuiteResult limits(const SuiteConfig& cfg);
/// z_oracle = z_localized.
SuiteResult oracle(const SuiteConfig& cfg);
/// zcoh_localized = zcoh_closed.
SuiteResult cohomological(const SuiteConfig& cfg);
/// det T^vir = t1^{n r1} t2^{n r2} and zhat_localized = zhat_closed.
SuiteResult no_twist(const SuiteConfig& cfg);
/// Certificates vanish at t1 = 1/t2 for 1 <= n <= order, one seed per point.
SuiteResult cy_vanishing(const SuiteConfig& cfg);
/// |fixed_points(r, n)| = C(n + r - 1, r - 1) = Euler series coefficient.
SuiteResult euler_count(const SuiteConfig& cfg);
/// r1 = 0 only: T^vir = T - t2^{-1} T, T is an honest representation of
/// dimension r n, and the chi_{-y} genus sum reproduces z_localized.
SuiteResult smooth_chi_y(const SuiteConfig& cfg);

/// Structural properties over generated instances (at least min_instances each):
/// vertex rank 0, block reconstruction, diagonal blocks, w-degree balance,
/// bar involution, efrak multiplicativity.
std::vector<SuiteResult> properties(std::uint64_t seed, int min_instances = 100);

}  // namespace suites

}  // namespace origami

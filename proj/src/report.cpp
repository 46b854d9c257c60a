#include "origami/report.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "origami/errors.hpp"
#include "origami/sampling.hpp"
#include "origami/series.hpp"

namespace origami {

namespace {

Json config_json(const RunConfig& cfg) {
  Json j;
  j["r1"] = cfg.r1;
  j["r2"] = cfg.r2;
  j["order"] = cfg.order;
  j["seed"] = cfg.seed;
  j["num_points"] = cfg.num_points;
  return j;
}

Report usage_error(Json body, const std::string& message) {
  body["error"] = message;
  return {std::move(body), kUsageError};
}

// Checks the numeric fields; returns an error message or nothing.
std::optional<std::string> validate(const RunConfig& cfg) {
  if (cfg.order < 0) return "order must be >= 0";
  if (cfg.num_points < 1) return "num-points must be >= 1";
  if (cfg.r1 < 0 || cfg.r2 < 0 || cfg.r1 + cfg.r2 < 1) return "ranks must be nonnegative with r1 + r2 >= 1";
  return std::nullopt;
}

template <class F>
Report timed(const RunConfig& cfg, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Report report = body();
  if (cfg.timing) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.body["wall_time_s"] = elapsed.count();
  }
  return report;
}

}  // namespace

std::string Report::serialize() const { return body.dump(2) + "\n"; }

Report cmd_compute(const RunConfig& cfg) {
  return timed(cfg, [&]() -> Report {
    Json body;
    body["command"] = "compute";
    body["config"] = config_json(cfg);
    if (auto err = validate(cfg)) return usage_error(std::move(body), *err);
    const Ranks r(cfg.r1, cfg.r2);
    PointSampler sampler(cfg.seed);
    const auto vars = torus_variables(r);
    try {
      auto [point, localized, closed] = sampler.with_retries(vars, [&](const PointAssignment& p) {
        return std::tuple{p, z_localized(r, p, cfg.order), z_closed(r, p, cfg.order)};
      });
      body["point"] = to_json(point);
      body["localized"] = to_json(localized);
      body["closed"] = to_json(closed);
      body["agree"] = localized == closed;
      return {std::move(body), kPass};
    } catch (const EvaluationExhausted& e) {
      body["error"] = e.what();
      return {std::move(body), kEvaluationExhausted};
    }
  });
}

Report cmd_verify(const RunConfig& cfg) {
  return timed(cfg, [&]() -> Report {
    Json body;
    body["command"] = "verify";
    body["suite"] = cfg.suite;
    body["config"] = config_json(cfg);
    if (auto err = validate(cfg)) return usage_error(std::move(body), *err);
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
      return usage_error(std::move(body), "unknown suite '" + cfg.suite + "'");
    const SuiteConfig suite_cfg{Ranks(cfg.r1, cfg.r2), cfg.order, cfg.seed, cfg.num_points};
    try {
      const SuiteResult result = run_suite(cfg.suite, suite_cfg);
      body["result"] = result.to_json();
      return {std::move(body), result.passed ? kPass : kSuiteFailure};
    } catch (const PreconditionError& e) {
      return usage_error(std::move(body), e.what());
    } catch (const EvaluationExhausted& e) {
      body["error"] = e.what();
      return {std::move(body), kEvaluationExhausted};
    }
  });
}

Report run(const RunConfig& cfg) {
  if (cfg.command == "compute") return cmd_compute(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  Json body;
  body["command"] = cfg.command;
  return usage_error(std::move(body), "unknown command '" + cfg.command + "'");
}

}  // namespace origami

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <type_traits>
#include <vector>

#include "origami/errors.hpp"
#include "origami/kchar.hpp"

namespace origami {

/// Deterministic stream of random evaluation points. Coordinates are
/// rationals a/b with 2 <= a, b <= 97 and a != b, so no coordinate is 0, 1,
/// or a root of unity.
class PointSampler {
 public:
  static constexpr int kMaxRetries = 100;

  explicit PointSampler(std::uint64_t seed) : engine_(seed) {}

  Rational next_value();
  PointAssignment draw(std::span<const Var> vars);

  /// Calls f(point) on freshly drawn points until it returns without a
  /// point-dependent failure (PoleAtPoint, ZeroDenominator). Gives up with
  /// EvaluationExhausted after kMaxRetries redraws.
  template <class F>
  auto with_retries(std::span<const Var> vars, F&& f) -> std::invoke_result_t<F&, const PointAssignment&> {
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
      PointAssignment p = draw(vars);
      try {
        return f(p);
      } catch (const PoleAtPoint&) {
      } catch (const ZeroDenominator&) {
      }
    }
    throw EvaluationExhausted("no pole-free point after " + std::to_string(kMaxRetries) + " redraws");
  }

 private:
  // Uniform in [lo, hi] by rejection on the raw engine output, so the stream
  // does not depend on the standard library's distribution implementation.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  std::mt19937_64 engine_;
};

}  // namespace origami

#include "origami/sampling.hpp"

#include <limits>

namespace origami {

std::uint64_t PointSampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % span;
}

Rational PointSampler::next_value() {
  std::uint64_t a, b;
  do {
    a = uniform(2, 97);
    b = uniform(2, 97);
  } while (a == b);
  Rational out(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  out.canonicalize();
  return out;
}

PointAssignment PointSampler::draw(std::span<const Var> vars) {
  PointAssignment p;
  for (Var v : vars) p.set(v, next_value());
  return p;
}

}  // namespace origami

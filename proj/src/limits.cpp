#include "origami/limits.hpp"

#include <algorithm>

#include "origami/errors.hpp"
#include "origami/parallel.hpp"

namespace origami {

SpeedOrder::SpeedOrder(std::vector<Slot> fastest_first) : order_(std::move(fastest_first)) {
  auto sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("speed order lists a slot twice");
}

SpeedOrder SpeedOrder::for_ranks(const Ranks& r) {
  auto s = origami::slots(r);
  std::reverse(s.begin(), s.end());
  return SpeedOrder(std::move(s));
}

std::vector<std::pair<Slot, int>> SpeedOrder::exponents() const {
  std::vector<std::pair<Slot, int>> out;
  const int n = static_cast<int>(order_.size());
  for (int k = 0; k < n; ++k) out.emplace_back(order_[k], n - k);
  return out;
}

std::vector<int> l_degree(const Monomial& m, const SpeedOrder& ord) {
  std::vector<int> out;
  out.reserve(ord.slots().size());
  int covered = 0;
  for (const Slot& s : ord.slots()) {
    const int e = m.exponent(s.weight());
    out.push_back(e);
    if (e != 0) ++covered;
  }
  if (covered != static_cast<int>(m.framing_part().terms().size()))
    throw PreconditionError("monomial " + m.to_string() + " has a framing weight outside the speed order");
  return out;
}

Growth classify(const Monomial& m, const SpeedOrder& ord) {
  for (int e : l_degree(m, ord)) {
    if (e > 0) return Growth::growing;
    if (e < 0) return Growth::decaying;
  }
  return Growth::neutral;
}

FactoredForm framing_limit(const FactoredForm& f, const SpeedOrder& ord) {
  if (f.is_zero()) return f;
  Monomial leading = f.prefactor();
  int sign = f.sign();
  FactoredForm kept;
  for (const auto& [m, c] : f.factors()) {
    switch (classify(m, ord)) {
      case Growth::decaying:
        break;
      case Growth::neutral:
        kept *= FactoredForm::factor(m, c);
        break;
      case Growth::growing:
        // 1 - m ~ -m
        leading *= m.pow(c);
        if (c % 2 != 0) sign = -sign;
        break;
    }
  }
  switch (classify(leading, ord)) {
    case Growth::growing:
      throw DivergentLimit("framing weights of " + f.to_string() + " do not cancel: residue " + leading.to_string());
    case Growth::decaying:
      return FactoredForm::zero();
    case Growth::neutral:
      break;
  }
  return FactoredForm::monomial(leading.torus_part(), sign) * kept;
}

FactoredForm limit_contribution(const FixedPoint& bn, const SpeedOrder& ord) {
  const auto all = slots(bn.ranks());
  FactoredForm out;
  for (const Slot& a : all)
    for (const Slot& b : all) out *= framing_limit(efrak(-vertex_block(bn, a, b)), ord);
  return out;
}

QSeries<Rational> z_via_limits(const Ranks& r, const PointAssignment& tpoint, int order) {
  const SpeedOrder ord = SpeedOrder::for_ranks(r);
  QSeries<Rational> out(order);
  for (int n = 0; n <= order; ++n) {
    const auto points = fixed_points(r, n);
    const auto parts = parallel_map(points.size(), [&](std::size_t k) {
      return Rational(eval_point(limit_contribution(points[k], ord), tpoint));
    });
    for (const auto& v : parts) out[n] += v;
  }
  return out;
}

Monomial limit_shift(const FixedPoint& bn) {
  const auto all = slots(bn.ranks());
  Monomial out;
  for (const Slot& a : all)
    for (const Slot& b : all)
      if (a < b) out *= Monomial(Var::t(b.group), bn.count(a));
  return out;
}

Monomial factorization_shift(const FixedPoint& bn) {
  const int r1 = bn.ranks().r1();
  const int r2 = bn.ranks().r2();
  Monomial out;
  for (int a = 1; a <= r1; ++a) {
    const int n = bn.count(1, a);
    out *= Monomial({{Var::t(1), (r1 - a) * n}, {Var::t(2), r2 * n}});
  }
  for (int a = 1; a <= r2; ++a) out *= Monomial(Var::t(2), (r2 - a) * bn.count(2, a));
  return out;
}

Rational eval_at_speed(const FactoredForm& f, const PointAssignment& tpoint, const SpeedOrder& ord,
                       const Rational& L) {
  PointAssignment p = tpoint;
  for (const auto& [slot, n] : ord.exponents()) p.set(slot.weight(), pow(L, n));
  return eval_point(f, p);
}

}  // namespace origami

#include "origami/series.hpp"

#include "origami/errors.hpp"
#include "origami/parallel.hpp"
#include "origami/sampling.hpp"

namespace origami {

namespace {

Monomial t(int i, int e = 1) { return Monomial(Var::t(i), e); }

// Sum over fixed points of size n of value(bn).
template <class F>
Rational sum_over_fixed_points(const Ranks& r, int n, F&& value) {
  const auto points = fixed_points(r, n);
  const auto parts = parallel_map(points.size(), [&](std::size_t k) { return Rational(value(points[k])); });
  Rational total = 0;
  for (const auto& v : parts) total += v;
  return total;
}

// (1 - t1 t2)(1 - t1^r1 t2^r2) / ((1 - t1)(1 - t2))
FactoredForm closed_single_particle(const Ranks& r) {
  return FactoredForm::factor(t(1) * t(2)) * FactoredForm::factor(t(1, r.r1()) * t(2, r.r2())) *
         FactoredForm::factor(t(1), -1) * FactoredForm::factor(t(2), -1);
}

// [x] = x^{1/2} - x^{-1/2} for x = sqrt_x^2.
Rational bracket(const Rational& sqrt_x) { return sqrt_x - 1 / sqrt_x; }

}  // namespace

QSeries<Rational> binom_series(const Rational& c, int order) {
  QSeries<Rational> out = QSeries<Rational>::one(order);
  for (int n = 1; n <= order; ++n) out[n] = out[n - 1] * (c + (n - 1)) / n;
  return out;
}

QSeries<Rational> z_localized(const Ranks& r, const PointAssignment& point, int order) {
  QSeries<Rational> out(order);
  for (int n = 0; n <= order; ++n)
    out[n] = sum_over_fixed_points(r, n, [&](const FixedPoint& bn) { return eval_point(contribution(bn), point); });
  return out;
}

QSeries<Rational> z_closed(const Ranks& r, const PointAssignment& point, int order) {
  const FactoredForm g = closed_single_particle(r);
  return plethystic_exp_linear<Rational>([&](int k) { return eval_point(g, point.power(k)); }, order);
}

QSeries<Rational> z_rank1_product(const PointAssignment& point, int order) {
  const Rational t1 = point.at(Var::t(1));
  const Rational t2 = point.at(Var::t(2));
  QSeries<Rational> out = QSeries<Rational>::one(order);
  for (int n = 1; n <= order; ++n) {
    const Rational t2n = pow(t2, n);
    if (t2n == 1) throw PoleAtPoint("t2^" + std::to_string(n) + " = 1");
    out[n] = out[n - 1] * (1 - t1 * t2n) / (1 - t2n);
  }
  return out;
}

QSeries<Rational> z_factorized(const Ranks& r, const PointAssignment& point, int order) {
  const Rational t1 = point.at(Var::t(1));
  const Rational t2 = point.at(Var::t(2));
  const QSeries<Rational> z1 = z_closed(Ranks(1, 0), point, order);
  const QSeries<Rational> z2 = z_closed(Ranks(0, 1), point, order);
  QSeries<Rational> out = QSeries<Rational>::one(order);
  for (int a = 1; a <= r.r1(); ++a) out = out * z1.rescale_q(pow(t1, r.r1() - a) * pow(t2, r.r2()));
  for (int a = 1; a <= r.r2(); ++a) out = out * z2.rescale_q(pow(t2, r.r2() - a));
  return out;
}

Monomial no_twist(const FixedPoint& bn) {
  const Monomial det = substitute_halfweights(det_char(vertex_term(bn)));
  std::vector<Monomial::Term> half;
  for (const auto& [v, e] : det.terms()) {
    if (e % 2 != 0) throw PreconditionError("determinant of the vertex term has no square root in u-variables");
    half.emplace_back(v, -e / 2);
  }
  return Monomial(std::move(half));
}

FactoredForm twisted_contribution(const FixedPoint& bn) {
  return FactoredForm::monomial(no_twist(bn)) * efrak(substitute_halfweights(-vertex_term(bn)));
}

QSeries<Rational> zhat_localized(const Ranks& r, const PointAssignment& upoint, int order) {
  QSeries<Rational> out(order);
  for (int n = 0; n <= order; ++n)
    out[n] = sum_over_fixed_points(r, n,
                                   [&](const FixedPoint& bn) { return eval_point(twisted_contribution(bn), upoint); });
  return out;
}

QSeries<Rational> zhat_closed(const Ranks& r, const PointAssignment& upoint, int order) {
  return plethystic_exp_linear<Rational>(
      [&](int k) -> Rational {
        const Rational u1 = pow(upoint.at(Var::u(1)), k);
        const Rational u2 = pow(upoint.at(Var::u(2)), k);
        const Rational den = bracket(u1) * bracket(u2);
        if (den == 0) throw PoleAtPoint("[t1][t2] vanishes at " + upoint.to_string());
        return bracket(u1 * u2) * bracket(pow(u1, r.r1()) * pow(u2, r.r2())) / den;
      },
      order);
}

QSeries<Rational> zcoh_localized(const Ranks& r, const PointAssignment& spoint, int order) {
  QSeries<Rational> out(order);
  for (int n = 0; n <= order; ++n)
    out[n] = sum_over_fixed_points(
        r, n, [&](const FixedPoint& bn) { return eval_point(ecoh(vertex_term(bn)).inverse(), spoint); });
  return out;
}

Rational cohomological_exponent(const Ranks& r, const PointAssignment& spoint) {
  const Rational s1 = spoint.at(Var::t(1));
  const Rational s2 = spoint.at(Var::t(2));
  return (s1 + s2) * (r.r1() * s1 + r.r2() * s2) / (s1 * s2);
}

QSeries<Rational> zcoh_closed(const Ranks& r, const PointAssignment& spoint, int order) {
  return binom_series(cohomological_exponent(r, spoint), order);
}

QSeries<Rational> euler_char_series(const Ranks& r, int order) { return binom_series(Rational(r.total()), order); }

UnivarRatFun cy_vanishing_certificate(const Ranks& r, int n, const PointAssignment& rest) {
  if (n < 0) throw PreconditionError("size must be nonnegative");
  std::vector<SplitRatFun> terms;
  for (const FixedPoint& bn : fixed_points(r, n)) terms.push_back(eval_univar_split(contribution(bn), Var::t(1), rest));
  return sum(terms);
}

std::pair<UnivarRatFun, PointAssignment> cy_vanishing_certificate(const Ranks& r, int n, std::uint64_t seed) {
  std::vector<Var> vars = torus_variables(r);
  vars.erase(vars.begin());  // t1 stays free
  PointSampler sampler(seed);
  return sampler.with_retries(vars, [&](const PointAssignment& rest) {
    return std::pair{cy_vanishing_certificate(r, n, rest), rest};
  });
}

}  // namespace origami

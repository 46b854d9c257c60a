#pragma once

// Generating series of the invariants: by localization over fixed points and
// by the closed plethystic formulas.

#include <cstdint>

#include "origami/kchar.hpp"
#include "origami/qseries.hpp"
#include "origami/univar.hpp"
#include "origami/vertex.hpp"

namespace origami {

/// The point, seed and truncation shared by a batch of computations.
struct EvalContext {
  PointAssignment point;
  std::uint64_t seed = 0;
  int order = 6;
};

/// Sum over fixed points of contribution(bn) q^|bn|, evaluated at point
/// (t1, t2 and every framing weight assigned).
QSeries<Rational> z_localized(const Ranks& r, const PointAssignment& point, int order);

/// Exp(q (1 - t1 t2)(1 - t1^r1 t2^r2) / ((1 - t1)(1 - t2))) at point.
QSeries<Rational> z_closed(const Ranks& r, const PointAssignment& point, int order);

/// Rank (1,0) series from the product prod_{a=1}^n (1 - t1 t2^a)/(1 - t2^a).
QSeries<Rational> z_rank1_product(const PointAssignment& point, int order);

/// The factorized form: prod_alpha Z(1,0)(q t1^{r1-alpha} t2^r2) * prod_alpha Z(0,1)(q t2^{r2-alpha}),
/// with the rank-one factors taken from z_closed.
QSeries<Rational> z_factorized(const Ranks& r, const PointAssignment& point, int order);

/// Monomial (det T^vir)^{-1/2} in half-weight variables u_i (u_i^2 = t_i).
Monomial no_twist(const FixedPoint& bn);

/// Twisted contribution efrak(-T^vir) * (det T^vir)^{-1/2}, in u-variables.
FactoredForm twisted_contribution(const FixedPoint& bn);

/// Twisted series by localization; point assigns u1, u2 and framing weights.
QSeries<Rational> zhat_localized(const Ranks& r, const PointAssignment& upoint, int order);

/// Exp(q [t1 t2][t1^r1 t2^r2] / ([t1][t2])) with [x] = x^{1/2} - x^{-1/2},
/// evaluated in u-variables.
QSeries<Rational> zhat_closed(const Ranks& r, const PointAssignment& upoint, int order);

/// Cohomological series sum_bn 1/e(T^vir) q^|bn|; point assigns the Chern
/// roots (the t-ids carry s1, s2 and the w-ids carry v_{i,alpha}).
QSeries<Rational> zcoh_localized(const Ranks& r, const PointAssignment& spoint, int order);

/// (s1 + s2)(r1 s1 + r2 s2) / (s1 s2)
Rational cohomological_exponent(const Ranks& r, const PointAssignment& spoint);

/// (1 - q)^{-c} with c = cohomological_exponent.
QSeries<Rational> zcoh_closed(const Ranks& r, const PointAssignment& spoint, int order);

/// 1/(1 - q)^{r1 + r2}: the Euler characteristics of the moduli spaces.
QSeries<Rational> euler_char_series(const Ranks& r, int order);

/// Sum over |bn| = n of contribution(bn) with t1 free and every other
/// variable set from rest, as a canonical rational function of t1.
UnivarRatFun cy_vanishing_certificate(const Ranks& r, int n, const PointAssignment& rest);

/// Seeded variant: draws t2 and the framing weights, redrawing on
/// ZeroDenominator. Returns the certificate and the point used.
std::pair<UnivarRatFun, PointAssignment> cy_vanishing_certificate(const Ranks& r, int n, std::uint64_t seed);

}  // namespace origami

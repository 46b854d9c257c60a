#pragma once

// Framing limits: send w_{i,alpha} = L^{N_{i,alpha}} to infinity at
// hierarchical speeds and read off the surviving t-dependence.

#include <vector>

#include "origami/kchar.hpp"
#include "origami/qseries.hpp"
#include "origami/vertex.hpp"

namespace origami {

/// Hierarchy of framing speeds: slots listed from fastest to slowest. Each
/// slot dominates every slot after it, so "N_a >> N_b" is lexicographic
/// dominance and no concrete magnitudes are needed.
class SpeedOrder {
 public:
  explicit SpeedOrder(std::vector<Slot> fastest_first);

  /// The order under which every block with (j,beta) > (i,alpha) in the
  /// lexicographic slot order has w_{j,beta} faster than w_{i,alpha}:
  /// (2,r2), ..., (2,1), (1,r1), ..., (1,1).
  static SpeedOrder for_ranks(const Ranks& r);

  const std::vector<Slot>& slots() const { return order_; }

  /// Concrete exponents N realizing the hierarchy: the slowest slot gets 1,
  /// the next gets 2, and so on.
  std::vector<std::pair<Slot, int>> exponents() const;

 private:
  std::vector<Slot> order_;
};

enum class Growth { decaying, neutral, growing };

/// Framing exponents of m read fastest slot first. Throws PreconditionError
/// if m involves a framing variable outside the order.
std::vector<int> l_degree(const Monomial& m, const SpeedOrder& ord);

/// Sign of the leading nonzero entry of l_degree.
Growth classify(const Monomial& m, const SpeedOrder& ord);

/// L -> infinity limit of a factored form. Decaying factors become 1,
/// neutral factors stay, growing factors (1 - m)^c become (-m)^c. The
/// framing parts of the growing monomials must cancel; a net growing
/// residue throws DivergentLimit and a net decaying one gives zero.
FactoredForm framing_limit(const FactoredForm& f, const SpeedOrder& ord);

/// prod over ordered pairs of slots of framing_limit(efrak(-v^{(ij,alpha beta)})) at bn.
FactoredForm limit_contribution(const FixedPoint& bn, const SpeedOrder& ord);

/// Series whose coefficients are sums of limit_contribution; point assigns t1, t2 only.
QSeries<Rational> z_via_limits(const Ranks& r, const PointAssignment& tpoint, int order);

/// prod_{(i,alpha) < (j,beta)} t_j^{n_{i,alpha}}
Monomial limit_shift(const FixedPoint& bn);

/// prod_alpha (t1^{r1-alpha} t2^{r2})^{n_{1,alpha}} * prod_alpha t2^{(r2-alpha) n_{2,alpha}}
Monomial factorization_shift(const FixedPoint& bn);

/// Evaluates f with t from tpoint and w_{i,alpha} = L^{N_{i,alpha}} from ord.exponents().
Rational eval_at_speed(const FactoredForm& f, const PointAssignment& tpoint, const SpeedOrder& ord,
                       const Rational& L);

}  // namespace origami

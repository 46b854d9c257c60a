#pragma once

// Torus fixed points of the Quot scheme on two crossing lines and the
// characters attached to them.

#include <string>
#include <vector>

#include "origami/kchar.hpp"

namespace origami {

/// Framing ranks (r1, r2) on the two lines.
class Ranks {
 public:
  /// Throws PreconditionError unless r1, r2 >= 0 and r1 + r2 >= 1.
  Ranks(int r1, int r2);

  int r1() const { return r1_; }
  int r2() const { return r2_; }
  int total() const { return r1_ + r2_; }
  int of(int group) const { return group == 1 ? r1_ : r2_; }

  friend bool operator==(const Ranks&, const Ranks&) = default;

 private:
  int r1_;
  int r2_;
};

/// A framing slot (i, alpha). Slots are totally ordered lexicographically:
/// (1,1) < ... < (1,r1) < (2,1) < ... < (2,r2).
struct Slot {
  int group;
  int alpha;
  Var weight() const { return Var::w(group, alpha); }
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// All slots of r in lexicographic order.
std::vector<Slot> slots(const Ranks& r);

/// A fixed point: one box count n_{i,alpha} per slot, in slot order.
class FixedPoint {
 public:
  FixedPoint(const Ranks& r, std::vector<int> counts);

  const Ranks& ranks() const { return ranks_; }
  const std::vector<int>& counts() const { return counts_; }
  int count(int group, int alpha) const;
  int count(const Slot& s) const { return count(s.group, s.alpha); }
  int size() const;

  /// "(2,1|0)" style: group-1 counts, a bar, group-2 counts.
  std::string to_string() const;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;

 private:
  Ranks ranks_;
  std::vector<int> counts_;
};

/// All fixed points of size n, in lexicographically decreasing order of the
/// count vector; there are C(n + r - 1, r - 1) of them.
std::vector<FixedPoint> fixed_points(const Ranks& r, int n);

/// Sum_{a < m} t_{other(i)}^a: the character of a length-m point on line i.
Character box_char(int m, int line);

/// Sum over slots of w_{i,alpha} * box_char(n_{i,alpha}, i).
Character q_char(const FixedPoint& bn);
/// The group-i summand of q_char.
Character q_char(const FixedPoint& bn, int group);

/// Sum_alpha w_{i,alpha}: the framing character of group i.
Character framing_char(const Ranks& r, int group);

/// Block v^{(ij, alpha beta)} of the vertex term.
Character vertex_block(const FixedPoint& bn, const Slot& from, const Slot& to);

/// The vertex term T^vir from the closed formula; checked movable.
Character vertex_term(const FixedPoint& bn);

/// The vertex term assembled block by block (no movability check).
Character vertex_term_from_blocks(const FixedPoint& bn);

/// Product of monomials raised to their coefficients.
Monomial det_char(const Character& c);

/// Tangent character of the smooth Quot scheme of a line; only for r1 = 0.
Character smooth_tangent(const FixedPoint& bn);

/// efrak(-T^vir): the contribution of bn to the partition function.
FactoredForm contribution(const FixedPoint& bn);

/// The variables a contribution can depend on: t1, t2 and the framing weights.
std::vector<Var> torus_variables(const Ranks& r);

}  // namespace origami

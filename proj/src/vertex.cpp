#include "origami/vertex.hpp"

#include <numeric>

#include "origami/errors.hpp"

namespace origami {

namespace {

Character one_minus(const Monomial& m) { return Character::one() - Character(m); }

Monomial t(int i, int e = 1) { return Monomial(Var::t(i), e); }

int other(int line) { return line == 1 ? 2 : 1; }

// (1 - t1^-1)(1 - t2^-1)
const Character& tangent_weight_product() {
  static const Character c = one_minus(t(1, -1)) * one_minus(t(2, -1));
  return c;
}

}  // namespace

Ranks::Ranks(int r1, int r2) : r1_(r1), r2_(r2) {
  if (r1 < 0 || r2 < 0 || r1 + r2 < 1)
    throw PreconditionError("ranks must be nonnegative with r1 + r2 >= 1, got (" + std::to_string(r1) + "," +
                            std::to_string(r2) + ")");
}

std::vector<Slot> slots(const Ranks& r) {
  std::vector<Slot> out;
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= r.of(i); ++a) out.push_back({i, a});
  return out;
}

FixedPoint::FixedPoint(const Ranks& r, std::vector<int> counts) : ranks_(r), counts_(std::move(counts)) {
  if (static_cast<int>(counts_.size()) != r.total())
    throw PreconditionError("fixed point needs one count per framing slot");
  for (int c : counts_)
    if (c < 0) throw PreconditionError("box counts must be nonnegative");
}

int FixedPoint::count(int group, int alpha) const {
  if (alpha < 1 || alpha > ranks_.of(group)) throw PreconditionError("slot index out of range");
  return counts_[(group == 1 ? 0 : ranks_.r1()) + alpha - 1];
}

int FixedPoint::size() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::string FixedPoint::to_string() const {
  std::string out = "(";
  for (int k = 0; k < ranks_.total(); ++k) {
    if (k == ranks_.r1()) out += "|";
    else if (k > 0) out += ",";
    out += std::to_string(counts_[k]);
  }
  if (ranks_.r2() == 0) out += "|";
  return out + ")";
}

std::vector<FixedPoint> fixed_points(const Ranks& r, int n) {
  if (n < 0) throw PreconditionError("size must be nonnegative");
  std::vector<FixedPoint> out;
  std::vector<int> counts(r.total(), 0);
  // Depth-first, largest first part first: lexicographically decreasing.
  auto recurse = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot + 1 == counts.size()) {
      counts[slot] = remaining;
      out.emplace_back(r, counts);
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      counts[slot] = c;
      self(self, slot + 1, remaining - c);
    }
  };
  recurse(recurse, 0, n);
  return out;
}

Character box_char(int m, int line) {
  if (m < 0) throw PreconditionError("box count must be nonnegative");
  Character out;
  for (int a = 0; a < m; ++a) out += Character(t(other(line), a));
  return out;
}

Character q_char(const FixedPoint& bn, int group) {
  Character out;
  for (int a = 1; a <= bn.ranks().of(group); ++a)
    out += Character(Monomial(Var::w(group, a))) * box_char(bn.count(group, a), group);
  return out;
}

Character q_char(const FixedPoint& bn) { return q_char(bn, 1) + q_char(bn, 2); }

Character framing_char(const Ranks& r, int group) {
  Character out;
  for (int a = 1; a <= r.of(group); ++a) out += Character(Monomial(Var::w(group, a)));
  return out;
}

Character vertex_block(const FixedPoint& bn, const Slot& from, const Slot& to) {
  const Character z_from = box_char(bn.count(from), from.group);
  const Character z_to = box_char(bn.count(to), to.group);
  const Monomial framing = Monomial(Var::w(from.group, from.alpha), -1) * Monomial(Var::w(to.group, to.alpha));
  Character inner = one_minus(t(from.group, -1)) * z_to - tangent_weight_product() * bar(z_from) * z_to;
  return Character(framing) * inner;
}

Character vertex_term(const FixedPoint& bn) {
  const Character q = q_char(bn);
  Character out;
  for (int i = 1; i <= 2; ++i) out += bar(framing_char(bn.ranks(), i)) * one_minus(t(i, -1)) * q;
  out -= tangent_weight_product() * q * bar(q);
  if (out.coefficient(Monomial{}) != 0)
    throw MovabilityViolation("trivial weight in the vertex term at " + bn.to_string());
  return out;
}

Character vertex_term_from_blocks(const FixedPoint& bn) {
  const auto all = slots(bn.ranks());
  Character out;
  for (const Slot& a : all)
    for (const Slot& b : all) out += vertex_block(bn, a, b);
  return out;
}

Monomial det_char(const Character& c) {
  Monomial out;
  for (const auto& [m, k] : c.terms()) out *= m.pow(static_cast<int>(k));
  return out;
}

Character smooth_tangent(const FixedPoint& bn) {
  if (bn.ranks().r1() != 0) throw PreconditionError("smooth tangent character needs r1 = 0");
  const Character q = q_char(bn);
  return bar(framing_char(bn.ranks(), 2)) * q - one_minus(t(1, -1)) * q * bar(q);
}

FactoredForm contribution(const FixedPoint& bn) { return efrak(-vertex_term(bn)); }

std::vector<Var> torus_variables(const Ranks& r) {
  std::vector<Var> out{Var::t(1), Var::t(2)};
  for (const Slot& s : slots(r)) out.push_back(s.weight());
  return out;
}

}  // namespace origami

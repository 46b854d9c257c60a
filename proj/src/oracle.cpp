#include "origami/oracle.hpp"

#include <numeric>

#include "origami/errors.hpp"
#include "origami/parallel.hpp"

namespace origami {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(parts[k]);
  }
  return out + ")";
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw PreconditionError("size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back({current});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

int PartitionTuple::size() const {
  int s = 0;
  for (const auto& p : diagrams) s += p.size();
  return s;
}

const Partition& PartitionTuple::at(const Slot& s) const {
  return diagrams.at((s.group == 1 ? 0 : ranks.r1()) + s.alpha - 1);
}

std::string PartitionTuple::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < diagrams.size(); ++k) {
    if (k > 0) out += static_cast<int>(k) == ranks.r1() ? " | " : ", ";
    out += diagrams[k].to_string();
  }
  return out + "]";
}

std::vector<PartitionTuple> partition_tuples(const Ranks& r, int n) {
  if (n < 0) throw PreconditionError("size must be nonnegative");
  std::vector<std::vector<Partition>> by_size;
  for (int m = 0; m <= n; ++m) by_size.push_back(partitions(m));

  std::vector<PartitionTuple> out;
  std::vector<Partition> current;
  auto recurse = [&](auto&& self, int slot, int remaining) -> void {
    if (slot + 1 == r.total()) {
      for (const Partition& p : by_size[remaining]) {
        current.push_back(p);
        out.push_back({r, current});
        current.pop_back();
      }
      return;
    }
    for (int m = remaining; m >= 0; --m) {
      for (const Partition& p : by_size[m]) {
        current.push_back(p);
        self(self, slot + 1, remaining - m);
        current.pop_back();
      }
    }
  };
  recurse(recurse, 0, n);
  return out;
}

long long count_partition_tuples(int r, int n) {
  // Power series prod_k (1 - q^k)^{-r}, one geometric factor at a time.
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int copy = 0; copy < r; ++copy)
    for (int k = 1; k <= n; ++k)
      for (int m = k; m <= n; ++m) c[m] += c[m - k];
  return c[n];
}

Character plane_q_char(const PartitionTuple& tuple) {
  Character out;
  for (const Slot& s : slots(tuple.ranks)) {
    const Partition& lambda = tuple.at(s);
    for (std::size_t row = 0; row < lambda.parts.size(); ++row)
      for (int a = 0; a < lambda.parts[row]; ++a)
        out += Character(Monomial(s.weight()) * Monomial(Var::t(1), a) * Monomial(Var::t(2), static_cast<int>(row)));
  }
  return out;
}

Character plane_tvir(const PartitionTuple& tuple) {
  const Character q = plane_q_char(tuple);
  const Character k = framing_char(tuple.ranks, 1) + framing_char(tuple.ranks, 2);
  const Character edge = Character(Monomial(Var::t(1), -1)) + Character(Monomial(Var::t(2), -1)) - Character::one() -
                         Character(Monomial({{Var::t(1), -1}, {Var::t(2), -1}}));
  Character out = bar(k) * q + edge * q * bar(q);
  if (out.coefficient(Monomial{}) != 0)
    throw MovabilityViolation("trivial weight in the plane tangent character at " + tuple.to_string());
  return out;
}

Character taut_char(const PartitionTuple& tuple) {
  Character dual_framing;
  for (const Slot& s : slots(tuple.ranks))
    dual_framing += Character(Monomial(s.weight(), -1) * Monomial(Var::t(s.group), -1));
  return dual_framing * plane_q_char(tuple);
}

FactoredForm oracle_contribution(const PartitionTuple& tuple) {
  return efrak(taut_char(tuple)) * efrak(-plane_tvir(tuple));
}

QSeries<Rational> z_oracle(const Ranks& r, const PointAssignment& point, int order) {
  QSeries<Rational> out(order);
  for (int n = 0; n <= order; ++n) {
    const auto tuples = partition_tuples(r, n);
    const auto parts = parallel_map(tuples.size(), [&](std::size_t k) {
      return Rational(eval_point(oracle_contribution(tuples[k]), point));
    });
    for (const auto& v : parts) out[n] += v;
  }
  return out;
}

}  // namespace origami

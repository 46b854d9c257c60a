#pragma once

// Independent route to the invariants through the Quot scheme of the plane:
// localization over tuples of Young diagrams with a tautological insertion.

#include <string>
#include <vector>

#include "origami/kchar.hpp"
#include "origami/qseries.hpp"
#include "origami/vertex.hpp"

namespace origami {

/// Weakly decreasing positive parts. Row k has parts[k] boxes; box (a, k)
/// with a < parts[k] carries the weight t1^a t2^k.
struct Partition {
  std::vector<int> parts;
  int size() const;
  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of n, lexicographically decreasing ((n) first, (1^n) last).
std::vector<Partition> partitions(int n);

/// One Young diagram per framing slot, in slot order.
struct PartitionTuple {
  Ranks ranks;
  std::vector<Partition> diagrams;

  int size() const;
  const Partition& at(const Slot& s) const;
  std::string to_string() const;
};

/// All tuples of total size n.
std::vector<PartitionTuple> partition_tuples(const Ranks& r, int n);

/// Number of r-tuples of partitions of total size n: coefficient of q^n in prod_k (1 - q^k)^{-r}.
long long count_partition_tuples(int r, int n);

/// Q = sum_slots w_{i,alpha} sum_{boxes} t1^a t2^b.
Character plane_q_char(const PartitionTuple& tuple);

/// Virtual tangent character of the plane Quot scheme:
/// bar(K) Q + (t1^-1 + t2^-1 - 1 - t1^-1 t2^-1) Q bar(Q). Checked movable.
Character plane_tvir(const PartitionTuple& tuple);

/// Tautological insertion sum_slots w_{i,alpha}^-1 t_i^-1 Q.
Character taut_char(const PartitionTuple& tuple);

/// efrak(taut_char) * efrak(-plane_tvir). Zero for tuples outside the broken lines.
FactoredForm oracle_contribution(const PartitionTuple& tuple);

QSeries<Rational> z_oracle(const Ranks& r, const PointAssignment& point, int order);

}  // namespace origami

#pragma once

// Laurent characters of the torus acting on broken lines, and the Euler
// operators that turn them into rational functions.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "origami/rational.hpp"
#include "origami/univar.hpp"

namespace origami {

/// A coordinate of the torus: t1, t2, the half-weights u1, u2 (u_i^2 = t_i),
/// or a framing weight w_{i,alpha}. In cohomological contexts the same ids
/// stand for the Chern roots s1, s2, v_{i,alpha}.
struct Var {
  enum class Kind : std::uint8_t { t, u, w };

  Kind kind = Kind::t;
  std::uint8_t group = 1;  // i in {1, 2}
  std::uint8_t index = 0;  // alpha >= 1 for framing weights, 0 otherwise

  static constexpr Var t(int i) { return {Kind::t, static_cast<std::uint8_t>(i), 0}; }
  static constexpr Var u(int i) { return {Kind::u, static_cast<std::uint8_t>(i), 0}; }
  static constexpr Var w(int i, int alpha) {
    return {Kind::w, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(alpha)};
  }

  bool is_framing() const { return kind == Kind::w; }
  std::string name() const;

  friend auto operator<=>(const Var&, const Var&) = default;
};

/// Laurent monomial x^mu. Exponents are kept sorted by variable, zeros dropped.
class Monomial {
 public:
  using Term = std::pair<Var, int>;

  Monomial() = default;
  explicit Monomial(Var v, int e = 1);
  /// Accepts any order and duplicates; normalizes.
  explicit Monomial(std::vector<Term> terms);

  bool is_trivial() const { return terms_.empty(); }
  int exponent(Var v) const;
  const std::vector<Term>& terms() const { return terms_; }

  /// The part of the monomial in framing variables only (resp. non-framing).
  Monomial framing_part() const;
  Monomial torus_part() const;

  Monomial inverse() const;
  Monomial pow(int k) const;
  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Virtual torus character: finite Z-combination of monomials, zero
/// coefficients never stored.
class Character {
 public:
  using Coefficient = long long;

  Character() = default;
  Character(const Monomial& m, Coefficient c = 1);  // NOLINT(google-explicit-constructor)
  static Character one() { return Character(Monomial{}); }

  const std::map<Monomial, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const Monomial& m) const;
  /// Sum of coefficients (the virtual dimension).
  Coefficient rank() const;

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(const Character& o);
  Character& operator*=(Coefficient c);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(Character a, const Character& b) { return a *= b; }
  friend Character operator*(Character a, Coefficient c) { return a *= c; }
  friend Character operator*(Coefficient c, Character a) { return a *= c; }
  Character operator-() const;

  friend bool operator==(const Character&, const Character&) = default;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, Coefficient c);
  std::map<Monomial, Coefficient> terms_;
};

/// Dual character: negates every exponent vector.
Character bar(const Character& c);

/// sign * prefactor * prod_m (1 - m)^{c_m}, or identically zero.
///
/// Images of the K-theoretic Euler operator carry sign = +1 and a trivial
/// prefactor; framing limits and twists populate the other two fields.
class FactoredForm {
 public:
  FactoredForm() = default;
  static FactoredForm zero();
  static FactoredForm factor(const Monomial& m, int multiplicity = 1);
  static FactoredForm monomial(const Monomial& m, int sign = 1);

  bool is_zero() const { return zero_; }
  int sign() const { return sign_; }
  const Monomial& prefactor() const { return prefactor_; }
  const std::map<Monomial, int>& factors() const { return factors_; }
  int multiplicity(const Monomial& m) const;

  FactoredForm& operator*=(const FactoredForm& o);
  friend FactoredForm operator*(FactoredForm a, const FactoredForm& b) { return a *= b; }
  /// Throws std::domain_error on the zero element.
  FactoredForm inverse() const;

  friend bool operator==(const FactoredForm&, const FactoredForm&) = default;

  std::string to_string() const;

 private:
  void multiply_factor(const Monomial& m, int c);

  bool zero_ = false;
  int sign_ = 1;
  Monomial prefactor_;
  std::map<Monomial, int> factors_;
};

/// Product of linear forms prod (mu . s)^{k}, keyed by the exponent vector mu.
/// The image of the cohomological Euler class.
class LinearFactoredForm {
 public:
  const std::map<Monomial, int>& factors() const { return factors_; }
  LinearFactoredForm& operator*=(const LinearFactoredForm& o);
  LinearFactoredForm inverse() const;
  void multiply_factor(const Monomial& weight, int c);

  friend bool operator==(const LinearFactoredForm&, const LinearFactoredForm&) = default;

  std::string to_string() const;

 private:
  std::map<Monomial, int> factors_;
};

/// K-theoretic Euler operator: sum t^mu - sum t^nu  |->  prod(1 - t^-mu) / prod(1 - t^-nu).
/// A trivial weight with positive coefficient gives the zero form; with a
/// negative coefficient it throws TrivialDenominator.
FactoredForm efrak(const Character& c);

/// Cohomological Euler class: t^mu |-> mu . s, extended multiplicatively.
/// Throws TrivialWeight if c contains the trivial monomial.
LinearFactoredForm ecoh(const Character& c);

/// Replaces t_i by u_i^2 (doubling t-exponents into u-exponents).
Monomial substitute_halfweights(const Monomial& m);
Character substitute_halfweights(const Character& c);

/// Exact values assigned to the torus coordinates.
class PointAssignment {
 public:
  PointAssignment() = default;
  PointAssignment(std::initializer_list<std::pair<const Var, Rational>> init) : values_(init) {}

  void set(Var v, Rational value);
  bool has(Var v) const { return values_.contains(v); }
  /// Throws PreconditionError if v is unassigned.
  const Rational& at(Var v) const;
  const std::map<Var, Rational>& values() const { return values_; }

  /// Every coordinate raised to the k-th power (Adams operation on points).
  PointAssignment power(int k) const;
  /// Every framing coordinate multiplied by lambda.
  PointAssignment scale_framing(const Rational& lambda) const;

  std::string to_string() const;

 private:
  std::map<Var, Rational> values_;
};

Rational eval_point(const Monomial& m, const PointAssignment& p);

/// Exact value of a factored form. Throws PoleAtPoint when a factor with
/// negative multiplicity vanishes at p.
Rational eval_point(const FactoredForm& f, const PointAssignment& p);

/// Value of prod (mu . s)^k with p interpreted as (s1, s2, v_{i,alpha}).
/// A vanishing linear form with negative multiplicity throws PoleAtPoint.
Rational eval_point(const LinearFactoredForm& f, const PointAssignment& p);

/// Specializes every variable except free_var and returns the canonical
/// univariate rational function in free_var. Throws ZeroDenominator when a
/// denominator factor specializes to the zero polynomial.
UnivarRatFun eval_univar(const FactoredForm& f, Var free_var, const PointAssignment& rest);
/// Same specialization with the denominator left as a product of monic factors.
SplitRatFun eval_univar_split(const FactoredForm& f, Var free_var, const PointAssignment& rest);

}  // namespace origami

#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "origami/rational.hpp"

namespace origami {

/// Dense univariate polynomial over Q. Coefficients are stored lowest degree
/// first with no trailing zeros, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// c * x^e
  static Polynomial monomial(const Rational& c, unsigned e);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  /// Euclidean division; throws std::domain_error on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd over Q (zero if both inputs are zero). Runs a primitive
/// remainder sequence over Z to keep coefficient growth in check.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Element of Q(x) in canonical form: gcd(num, den) = 1 and den monic.
class UnivarRatFun {
 public:
  UnivarRatFun() : den_(Polynomial::constant(1)) {}
  UnivarRatFun(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}
  UnivarRatFun(int c) : UnivarRatFun(Rational(c)) {}  // NOLINT
  /// Throws ZeroDenominator if den is the zero polynomial.
  UnivarRatFun(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws PoleAtPoint when x is a root of the canonical denominator.
  Rational operator()(const Rational& x) const;
  bool has_pole_at(const Rational& x) const { return den_(x) == 0; }

  UnivarRatFun& operator+=(const UnivarRatFun& o);
  UnivarRatFun& operator-=(const UnivarRatFun& o);
  UnivarRatFun& operator*=(const UnivarRatFun& o);
  UnivarRatFun& operator/=(const UnivarRatFun& o);
  friend UnivarRatFun operator+(UnivarRatFun a, const UnivarRatFun& b) { return a += b; }
  friend UnivarRatFun operator-(UnivarRatFun a, const UnivarRatFun& b) { return a -= b; }
  friend UnivarRatFun operator*(UnivarRatFun a, const UnivarRatFun& b) { return a *= b; }
  friend UnivarRatFun operator/(UnivarRatFun a, const UnivarRatFun& b) { return a /= b; }
  UnivarRatFun operator-() const;

  friend bool operator==(const UnivarRatFun&, const UnivarRatFun&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

/// numerator / prod atom^mult with monic atoms, not reduced. Sums of these
/// share denominators atom by atom, so only the final result needs a gcd.
struct SplitRatFun {
  Polynomial numerator;
  std::vector<std::pair<Polynomial, int>> denominator;

  /// Multiplies the denominator by atom^mult (atom monic, mult > 0).
  void divide_by(const Polynomial& atom, int mult);
  UnivarRatFun canonical() const;
};

/// Canonical form of the sum, with a single gcd at the end.
UnivarRatFun sum(const std::vector<SplitRatFun>& terms);

}  // namespace origami

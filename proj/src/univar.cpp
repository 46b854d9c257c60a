#include "origami/univar.hpp"

#include <algorithm>
#include <stdexcept>

#include "origami/errors.hpp"

namespace origami {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (Rational& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned e) {
  std::vector<Rational> v(e + 1);
  v[e] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial{}, rem};
  std::vector<Rational> quot(rem.degree() - divisor.degree() + 1);
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    Rational c = rem.leading() / lead;
    quot[shift] = c;
    for (int k = 0; k <= divisor.degree(); ++k) rem.coeffs_[k + shift] -= c * divisor.coeffs_[k];
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  Rational inv = 1 / leading();
  out *= inv;
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    std::string cs = c.get_str();
    if (!out.empty()) {
      if (c < 0) {
        out += " - ";
        cs = Rational(-c).get_str();
      } else {
        out += " + ";
      }
    }
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs == "-1") out += "-";
    else if (cs != "1") out += cs + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (p.back() < 0)
    for (auto& c : p) c = -c;
}

IntPoly to_primitive(const Polynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(Integer(c.get_num() * (l / c.get_den())));
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b, both nonzero.
IntPoly prem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly x = to_primitive(a);
  IntPoly y = to_primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = prem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const auto& c : x) out.emplace_back(c);
  return Polynomial(std::move(out)).monic();
}

UnivarRatFun::UnivarRatFun(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  canonicalize();
}

void UnivarRatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational UnivarRatFun::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw PoleAtPoint("rational function has a pole at " + x.get_str());
  return num_(x) / d;
}

UnivarRatFun& UnivarRatFun::operator+=(const UnivarRatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

UnivarRatFun& UnivarRatFun::operator-=(const UnivarRatFun& o) { return *this += -o; }

UnivarRatFun& UnivarRatFun::operator*=(const UnivarRatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

UnivarRatFun& UnivarRatFun::operator/=(const UnivarRatFun& o) {
  if (o.is_zero()) throw ZeroDenominator("division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

UnivarRatFun UnivarRatFun::operator-() const {
  UnivarRatFun out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string UnivarRatFun::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ---------------------------------------------------------------- SplitRatFun

void SplitRatFun::divide_by(const Polynomial& atom, int mult) {
  for (auto& [a, m] : denominator) {
    if (a == atom) {
      m += mult;
      return;
    }
  }
  denominator.emplace_back(atom, mult);
}

UnivarRatFun SplitRatFun::canonical() const {
  Polynomial den = Polynomial::constant(1);
  for (const auto& [a, m] : denominator) den = den * a.pow(static_cast<unsigned>(m));
  return UnivarRatFun(numerator, den);
}

UnivarRatFun sum(const std::vector<SplitRatFun>& terms) {
  // Common multiple: every atom at its largest multiplicity.
  std::vector<std::pair<Polynomial, int>> common;
  for (const SplitRatFun& t : terms) {
    for (const auto& [a, m] : t.denominator) {
      auto it = std::find_if(common.begin(), common.end(), [&](const auto& c) { return c.first == a; });
      if (it == common.end()) common.emplace_back(a, m);
      else it->second = std::max(it->second, m);
    }
  }
  Polynomial total;
  for (const SplitRatFun& t : terms) {
    if (t.numerator.is_zero()) continue;
    Polynomial part = t.numerator;
    for (const auto& [a, m] : common) {
      int own = 0;
      for (const auto& [b, k] : t.denominator)
        if (b == a) own = k;
      if (m > own) part = part * a.pow(static_cast<unsigned>(m - own));
    }
    total += part;
  }
  Polynomial den = Polynomial::constant(1);
  for (const auto& [a, m] : common) den = den * a.pow(static_cast<unsigned>(m));
  return UnivarRatFun(std::move(total), std::move(den));
}

}  // namespace origami

#include "origami/kchar.hpp"

#include <algorithm>
#include <stdexcept>

#include "origami/errors.hpp"

namespace origami {

std::string Var::name() const {
  switch (kind) {
    case Kind::t:
      return "t" + std::to_string(group);
    case Kind::u:
      return "u" + std::to_string(group);
    case Kind::w:
      return "w" + std::to_string(group) + std::to_string(index);
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, int e) {
  if (e != 0) terms_.emplace_back(v, e);
}

Monomial::Monomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (const auto& [v, e] : terms) {
    if (!terms_.empty() && terms_.back().first == v) terms_.back().second += e;
    else terms_.emplace_back(v, e);
    if (terms_.back().second == 0) terms_.pop_back();
  }
}

int Monomial::exponent(Var v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, Var x) { return t.first < x; });
  return (it != terms_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::framing_part() const {
  Monomial out;
  for (const auto& t : terms_)
    if (t.first.is_framing()) out.terms_.push_back(t);
  return out;
}

Monomial Monomial::torus_part() const {
  Monomial out;
  for (const auto& t : terms_)
    if (!t.first.is_framing()) out.terms_.push_back(t);
  return out;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
  Monomial out;
  if (k == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= k;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      const int e = a->second + b->second;
      if (e != 0) merged.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

std::string Monomial::to_string() const {
  if (terms_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : terms_) {
    if (!out.empty()) out += "*";
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------- Character

Character::Character(const Monomial& m, Coefficient c) { add_term(m, c); }

void Character::add_term(const Monomial& m, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Character::Coefficient Character::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

Character::Coefficient Character::rank() const {
  Coefficient r = 0;
  for (const auto& [m, c] : terms_) r += c;
  return r;
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Character& Character::operator*=(const Character& o) {
  Character out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  *this = std::move(out);
  return *this;
}

Character& Character::operator*=(Coefficient c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Character Character::operator-() const {
  Character out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string Character::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += std::to_string(c) + "*";
    } else {
      out += c < 0 ? " - " : " + ";
      const Coefficient a = c < 0 ? -c : c;
      if (a != 1) out += std::to_string(a) + "*";
    }
    out += m.to_string();
  }
  return out;
}

Character bar(const Character& c) {
  Character out;
  for (const auto& [m, k] : c.terms()) out += Character(m.inverse(), k);
  return out;
}

// ------------------------------------------------------------- FactoredForm

FactoredForm FactoredForm::zero() {
  FactoredForm f;
  f.zero_ = true;
  return f;
}

FactoredForm FactoredForm::factor(const Monomial& m, int multiplicity) {
  FactoredForm f;
  f.multiply_factor(m, multiplicity);
  return f;
}

FactoredForm FactoredForm::monomial(const Monomial& m, int sign) {
  FactoredForm f;
  f.prefactor_ = m;
  f.sign_ = sign < 0 ? -1 : 1;
  return f;
}

int FactoredForm::multiplicity(const Monomial& m) const {
  auto it = factors_.find(m);
  return it == factors_.end() ? 0 : it->second;
}

void FactoredForm::multiply_factor(const Monomial& m, int c) {
  if (c == 0 || zero_) return;
  if (m.is_trivial()) {
    if (c < 0) throw TrivialDenominator("factor (1 - 1) in a denominator");
    *this = zero();
    return;
  }
  auto [it, inserted] = factors_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) factors_.erase(it);
  }
}

FactoredForm& FactoredForm::operator*=(const FactoredForm& o) {
  if (zero_ || o.zero_) {
    *this = zero();
    return *this;
  }
  sign_ *= o.sign_;
  prefactor_ *= o.prefactor_;
  for (const auto& [m, c] : o.factors_) multiply_factor(m, c);
  return *this;
}

FactoredForm FactoredForm::inverse() const {
  if (zero_) throw std::domain_error("inverse of the zero factored form");
  FactoredForm out;
  out.sign_ = sign_;
  out.prefactor_ = prefactor_.inverse();
  for (const auto& [m, c] : factors_) out.factors_.emplace(m, -c);
  return out;
}

std::string FactoredForm::to_string() const {
  if (zero_) return "0";
  std::string out = sign_ < 0 ? "-" : "";
  out += prefactor_.to_string();
  for (const auto& [m, c] : factors_) {
    out += "*(1 - " + m.to_string() + ")";
    if (c != 1) out += "^" + std::to_string(c);
  }
  return out;
}

// ------------------------------------------------------- LinearFactoredForm

void LinearFactoredForm::multiply_factor(const Monomial& weight, int c) {
  if (c == 0) return;
  if (weight.is_trivial()) throw TrivialWeight("cohomological weight of the trivial character");
  auto [it, inserted] = factors_.try_emplace(weight, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) factors_.erase(it);
  }
}

LinearFactoredForm& LinearFactoredForm::operator*=(const LinearFactoredForm& o) {
  for (const auto& [m, c] : o.factors_) multiply_factor(m, c);
  return *this;
}

LinearFactoredForm LinearFactoredForm::inverse() const {
  LinearFactoredForm out;
  for (const auto& [m, c] : factors_) out.factors_.emplace(m, -c);
  return out;
}

std::string LinearFactoredForm::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [m, c] : factors_) {
    if (!out.empty()) out += "*";
    std::string form;
    for (const auto& [v, e] : m.terms()) {
      std::string name = v.name();
      if (v.kind == Var::Kind::t) name[0] = 's';
      if (v.kind == Var::Kind::w) name[0] = 'v';
      if (!form.empty()) form += e < 0 ? " - " : " + ";
      else if (e < 0) form += "-";
      const int a = e < 0 ? -e : e;
      if (a != 1) form += std::to_string(a);
      form += name;
    }
    out += "(" + form + ")";
    if (c != 1) out += "^" + std::to_string(c);
  }
  return out;
}

// ------------------------------------------------------------- operators

FactoredForm efrak(const Character& c) {
  FactoredForm out;
  for (const auto& [m, k] : c.terms()) {
    if (m.is_trivial()) {
      if (k < 0) throw TrivialDenominator("trivial weight in the negative part of " + c.to_string());
      return FactoredForm::zero();
    }
  }
  for (const auto& [m, k] : c.terms()) out *= FactoredForm::factor(m.inverse(), static_cast<int>(k));
  return out;
}

LinearFactoredForm ecoh(const Character& c) {
  LinearFactoredForm out;
  for (const auto& [m, k] : c.terms()) out.multiply_factor(m, static_cast<int>(k));
  return out;
}

Monomial substitute_halfweights(const Monomial& m) {
  std::vector<Monomial::Term> terms;
  terms.reserve(m.terms().size());
  for (const auto& [v, e] : m.terms()) {
    if (v.kind == Var::Kind::u) throw PreconditionError("half-weight substitution applied twice");
    if (v.kind == Var::Kind::t) terms.emplace_back(Var::u(v.group), 2 * e);
    else terms.emplace_back(v, e);
  }
  return Monomial(std::move(terms));
}

Character substitute_halfweights(const Character& c) {
  Character out;
  for (const auto& [m, k] : c.terms()) out += Character(substitute_halfweights(m), k);
  return out;
}

// ---------------------------------------------------------- PointAssignment

void PointAssignment::set(Var v, Rational value) {
  if (value == 0) throw PreconditionError("point coordinate " + v.name() + " must be nonzero");
  values_[v] = std::move(value);
}

const Rational& PointAssignment::at(Var v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw PreconditionError("no value assigned to " + v.name());
  return it->second;
}

PointAssignment PointAssignment::power(int k) const {
  PointAssignment out;
  for (const auto& [v, x] : values_) out.values_.emplace(v, origami::pow(x, k));
  return out;
}

PointAssignment PointAssignment::scale_framing(const Rational& lambda) const {
  PointAssignment out = *this;
  for (auto& [v, x] : out.values_)
    if (v.is_framing()) x *= lambda;
  return out;
}

std::string PointAssignment::to_string() const {
  std::string out = "{";
  for (const auto& [v, x] : values_) {
    if (out.size() > 1) out += ", ";
    out += v.name() + "=" + x.get_str();
  }
  return out + "}";
}

Rational eval_point(const Monomial& m, const PointAssignment& p) {
  Rational out = 1;
  for (const auto& [v, e] : m.terms()) out *= pow(p.at(v), e);
  return out;
}

Rational eval_point(const FactoredForm& f, const PointAssignment& p) {
  if (f.is_zero()) return 0;
  Rational num = eval_point(f.prefactor(), p);
  if (f.sign() < 0) num = -num;
  Rational den = 1;
  for (const auto& [m, c] : f.factors()) {
    Rational v = 1 - eval_point(m, p);
    if (v == 0) {
      if (c < 0) throw PoleAtPoint("factor (1 - " + m.to_string() + ") vanishes at " + p.to_string());
      return 0;
    }
    if (c > 0) num *= pow(v, c);
    else den *= pow(v, -c);
  }
  return num / den;
}

Rational eval_point(const LinearFactoredForm& f, const PointAssignment& p) {
  Rational num = 1;
  Rational den = 1;
  for (const auto& [m, c] : f.factors()) {
    Rational v = 0;
    for (const auto& [var, e] : m.terms()) v += e * p.at(var);
    if (v == 0) {
      if (c < 0) throw PoleAtPoint("linear form " + m.to_string() + " vanishes at " + p.to_string());
      return 0;
    }
    if (c > 0) num *= pow(v, c);
    else den *= pow(v, -c);
  }
  return num / den;
}

SplitRatFun eval_univar_split(const FactoredForm& f, Var free_var, const PointAssignment& rest) {
  SplitRatFun out;
  if (f.is_zero()) return out;
  // Split each monomial into (coefficient from the specialized variables, exponent of free_var).
  auto split = [&](const Monomial& m) {
    Rational coeff = 1;
    int e = 0;
    for (const auto& [v, k] : m.terms()) {
      if (v == free_var) e = k;
      else coeff *= pow(rest.at(v), k);
    }
    return std::pair{coeff, e};
  };

  Polynomial num = Polynomial::constant(1);
  Rational scale = 1;
  long shift = 0;  // net power of x
  {
    auto [c0, e0] = split(f.prefactor());
    scale = f.sign() < 0 ? Rational(-c0) : c0;
    shift += e0;
  }
  for (const auto& [m, k] : f.factors()) {
    auto [c, e] = split(m);
    // monic atom with 1 - c x^e = lead * atom * x^{min(e, 0)}
    Polynomial atom;
    Rational lead = 1;
    if (e > 0) {
      atom = Polynomial::monomial(1, static_cast<unsigned>(e)) - Polynomial::constant(1 / c);
      lead = -c;
    } else if (e < 0) {
      atom = Polynomial::monomial(1, static_cast<unsigned>(-e)) - Polynomial::constant(c);
      shift += static_cast<long>(e) * k;
    } else {
      if (c == 1) {
        if (k < 0) throw ZeroDenominator("factor (1 - " + m.to_string() + ") specializes to zero");
        return SplitRatFun{};
      }
      lead = 1 - c;
      atom = Polynomial::constant(1);
    }
    scale *= pow(lead, k);
    if (atom.degree() == 0) continue;
    if (k > 0) num = num * atom.pow(static_cast<unsigned>(k));
    else out.divide_by(atom, -k);
  }
  if (shift > 0) num = num * Polynomial::monomial(1, static_cast<unsigned>(shift));
  else if (shift < 0) out.divide_by(Polynomial::monomial(1, 1), static_cast<int>(-shift));
  out.numerator = num * scale;
  return out;
}

UnivarRatFun eval_univar(const FactoredForm& f, Var free_var, const PointAssignment& rest) {
  return eval_univar_split(f, free_var, rest).canonical();
}

}  // namespace origami

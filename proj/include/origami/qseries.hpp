#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "origami/rational.hpp"

namespace origami {

/// Power series in q truncated after q^order, over an exact field S
/// (Rational or UnivarRatFun).
template <class S>
class QSeries {
 public:
  explicit QSeries(int order) : coeffs_(check(order) + 1, S(0)) {}
  QSeries(int order, std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(check(order) + 1, S(0));
  }

  static QSeries one(int order) {
    QSeries s(order);
    s.coeffs_[0] = S(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const S& operator[](int n) const { return coeffs_.at(n); }
  S& operator[](int n) { return coeffs_.at(n); }
  const std::vector<S>& coeffs() const { return coeffs_; }

  QSeries& operator+=(const QSeries& o) {
    same_order(o);
    for (int n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    a.same_order(b);
    QSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i)
      for (int j = 0; i + j <= a.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return out;
  }

  /// q |-> c q
  QSeries rescale_q(const S& c) const {
    QSeries out = *this;
    S power(1);
    for (int n = 1; n <= order(); ++n) {
      power *= c;
      out.coeffs_[n] *= power;
    }
    return out;
  }

  /// q |-> q^k, truncated at the same order.
  QSeries substitute_power(int k) const {
    QSeries out(order());
    for (int n = 0; n * k <= order(); ++n) out.coeffs_[n * k] = coeffs_[n];
    return out;
  }

  /// exp of a series without constant term, via n E_n = sum_k k S_k E_{n-k}.
  QSeries exp() const {
    if (!(coeffs_[0] == S(0))) throw std::domain_error("exp needs a series without constant term");
    QSeries out = one(order());
    for (int n = 1; n <= order(); ++n) {
      S acc(0);
      for (int k = 1; k <= n; ++k) {
        if (coeffs_[k] == S(0)) continue;
        acc += S(k) * coeffs_[k] * out.coeffs_[n - k];
      }
      out.coeffs_[n] = acc * S(Rational(1, n));
    }
    return out;
  }

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    return order;
  }
  void same_order(const QSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("series orders differ");
  }

  std::vector<S> coeffs_;
};

/// Exp(f) = exp(sum_{k>=1} f_k(q^k) / k), where f_k is f with every variable
/// raised to the k-th power. f_k must have no constant term.
template <class S>
QSeries<S> plethystic_exp(const std::function<QSeries<S>(int)>& f_k, int order) {
  QSeries<S> log(order);
  for (int k = 1; k <= order; ++k) {
    QSeries<S> term = f_k(k).substitute_power(k);
    const S inv_k(Rational(1, k));
    for (int n = 0; n <= order; ++n) log[n] += term[n] * inv_k;
  }
  return log.exp();
}

/// Exp(q * g) where g_k returns g with every variable raised to the k-th power.
template <class S>
QSeries<S> plethystic_exp_linear(const std::function<S(int)>& g_k, int order) {
  return plethystic_exp<S>(
      [&](int k) {
        QSeries<S> f(order);
        if (order >= 1) f[1] = g_k(k);
        return f;
      },
      order);
}

/// (1 - q)^{-c}: coefficient of q^n is prod_{k<n} (c + k) / n!.
QSeries<Rational> binom_series(const Rational& c, int order);

}  // namespace origami

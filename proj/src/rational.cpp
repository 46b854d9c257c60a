#include "origami/rational.hpp"

#include <stdexcept>

namespace origami {

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational out;
  if (out.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  out.canonicalize();
  return out;
}

Rational pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    Rational inv = 1 / x;
    return pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace origami

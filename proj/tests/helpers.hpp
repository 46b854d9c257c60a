#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "origami/kchar.hpp"
#include "origami/rational.hpp"

namespace test {

using origami::Character;
using origami::Monomial;
using origami::Rational;
using origami::Var;

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline const Var t1 = Var::t(1);
inline const Var t2 = Var::t(2);
inline const Var u1 = Var::u(1);
inline const Var u2 = Var::u(2);
inline Var w(int i, int a) { return Var::w(i, a); }

inline Monomial mono(std::initializer_list<std::pair<Var, int>> terms) { return Monomial(std::vector(terms)); }
inline Monomial mono(Var v, int e = 1) { return Monomial(v, e); }
inline Character ch(const Monomial& m, long long c = 1) { return Character(m, c); }

}  // namespace test

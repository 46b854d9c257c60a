#include "origami/suites.hpp"

#include <random>
#include <stdexcept>

#include "origami/errors.hpp"
#include "origami/limits.hpp"
#include "origami/oracle.hpp"
#include "origami/sampling.hpp"
#include "origami/series.hpp"

namespace origami {

void SuiteResult::absorb(const SuiteResult& other) {
  checks += other.checks;
  if (!other.passed && passed) counterexample = other.counterexample;
  passed = passed && other.passed;
}

Json SuiteResult::to_json() const {
  Json j;
  j["suite"] = name;
  j["passed"] = passed;
  j["checks"] = checks;
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

Json to_json(const PointAssignment& p) {
  Json j = Json::object();
  for (const auto& [v, x] : p.values()) j[v.name()] = to_string(x);
  return j;
}

Json to_json(const QSeries<Rational>& s) {
  Json j = Json::array();
  for (const auto& c : s.coeffs()) j.push_back(to_string(c));
  return j;
}

void compare_series(SuiteResult& result, const QSeries<Rational>& lhs, const QSeries<Rational>& rhs,
                    const Json& context) {
  for (int n = 0; n <= lhs.order(); ++n) {
    result.record(lhs[n] == rhs[n], [&] {
      Json j = context;
      j["n"] = n;
      j["lhs"] = to_string(lhs[n]);
      j["rhs"] = to_string(rhs[n]);
      return j;
    });
  }
}

namespace {

Monomial t(int i, int e = 1) { return Monomial(Var::t(i), e); }

std::vector<Var> framing_variables(const Ranks& r) {
  std::vector<Var> out;
  for (const Slot& s : slots(r)) out.push_back(s.weight());
  return out;
}

const std::vector<Var> kTorusOnly{Var::t(1), Var::t(2)};

// Draws points with pole retries and compares the two series computed at each.
template <class F>
void compare_at_points(SuiteResult& result, const SuiteConfig& cfg, std::span<const Var> vars, F&& both) {
  PointSampler sampler(cfg.seed);
  for (int k = 0; k < cfg.num_points; ++k) {
    auto [lhs, rhs, p] = sampler.with_retries(vars, [&](const PointAssignment& point) {
      auto [a, b] = both(point);
      return std::tuple{std::move(a), std::move(b), point};
    });
    compare_series(result, lhs, rhs, Json{{"point", to_json(p)}});
  }
}

std::string rank_label(const Ranks& r) {
  return "(" + std::to_string(r.r1()) + "," + std::to_string(r.r2()) + ")";
}

SuiteResult start(const std::string& name, const SuiteConfig& cfg) {
  SuiteResult out;
  out.name = name + " r=" + rank_label(cfg.ranks);
  return out;
}

std::vector<Ranks> ranks_up_to(int total) {
  std::vector<Ranks> out;
  for (int r = 1; r <= total; ++r)
    for (int r1 = r; r1 >= 0; --r1) out.emplace_back(r1, r - r1);
  return out;
}

// Small deterministic integer source for generated instances.
class IntStream {
 public:
  explicit IntStream(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

Character random_character(IntStream& rng, bool allow_trivial) {
  static const std::vector<Var> alphabet{Var::t(1), Var::t(2), Var::w(1, 1), Var::w(2, 1)};
  Character c;
  const int terms = rng.uniform(0, 5);
  for (int k = 0; k < terms; ++k) {
    std::vector<Monomial::Term> exps;
    for (Var v : alphabet) exps.emplace_back(v, rng.uniform(-2, 2));
    Monomial m(std::move(exps));
    if (m.is_trivial() && !allow_trivial) continue;
    int coeff = rng.uniform(-3, 3);
    c += Character(m, coeff);
  }
  return c;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"closed-form",   "framing",     "factorization", "limits",
                                              "oracle",        "cohomological", "no-twist",    "cy-vanishing",
                                              "euler-count",   "smooth-chi-y"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "closed-form") return suites::closed_form(cfg);
  if (name == "framing") return suites::framing(cfg);
  if (name == "factorization") return suites::factorization(cfg);
  if (name == "limits") return suites::limits(cfg);
  if (name == "oracle") return suites::oracle(cfg);
  if (name == "cohomological") return suites::cohomological(cfg);
  if (name == "no-twist") return suites::no_twist(cfg);
  if (name == "cy-vanishing") return suites::cy_vanishing(cfg);
  if (name == "euler-count") return suites::euler_count(cfg);
  if (name == "smooth-chi-y") return suites::smooth_chi_y(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

namespace suites {

SuiteResult closed_form(const SuiteConfig& cfg) {
  SuiteResult result = start("closed-form", cfg);
  const auto vars = torus_variables(cfg.ranks);
  compare_at_points(result, cfg, vars, [&](const PointAssignment& p) {
    return std::pair{z_localized(cfg.ranks, p, cfg.order), z_closed(cfg.ranks, p, cfg.order)};
  });
  return result;
}

SuiteResult rank1_product(const SuiteConfig& cfg) {
  SuiteResult result;
  result.name = "rank1-product";
  compare_at_points(result, cfg, kTorusOnly, [&](const PointAssignment& p) {
    return std::pair{z_rank1_product(p, cfg.order), z_closed(Ranks(1, 0), p, cfg.order)};
  });
  return result;
}

SuiteResult framing(const SuiteConfig& cfg) {
  SuiteResult result = start("framing", cfg);
  const Ranks& r = cfg.ranks;
  const auto wvars = framing_variables(r);
  PointSampler sampler(cfg.seed);
  const PointAssignment tpoint = sampler.with_retries(kTorusOnly, [&](const PointAssignment& p) {
    // Rule out points where the closed form itself has a pole.
    z_closed(r, p, cfg.order);
    return p;
  });

  std::optional<QSeries<Rational>> reference;
  Json reference_point;
  for (int k = 0; k < cfg.num_points; ++k) {
    auto [series, p] = sampler.with_retries(wvars, [&](const PointAssignment& w) {
      PointAssignment full = tpoint;
      for (const auto& [v, x] : w.values()) full.set(v, x);
      return std::pair{z_localized(r, full, cfg.order), full};
    });
    if (!reference) {
      reference = series;
      reference_point = to_json(p);
      continue;
    }
    compare_series(result, *reference, series, Json{{"reference_point", reference_point}, {"point", to_json(p)}});
  }

  // t1 <-> t2 together with (r1, r2) <-> (r2, r1) and the matching framing slots.
  const Ranks swapped(r.r2(), r.r1());
  auto [lhs, rhs, p] = sampler.with_retries(torus_variables(r), [&](const PointAssignment& point) {
    PointAssignment mirror;
    mirror.set(Var::t(1), point.at(Var::t(2)));
    mirror.set(Var::t(2), point.at(Var::t(1)));
    for (const Slot& s : slots(r)) mirror.set(Var::w(3 - s.group, s.alpha), point.at(s.weight()));
    return std::tuple{z_localized(r, point, cfg.order), z_localized(swapped, mirror, cfg.order), point};
  });
  compare_series(result, lhs, rhs, Json{{"symmetry_point", to_json(p)}});
  return result;
}

SuiteResult factorization(const SuiteConfig& cfg) {
  SuiteResult result = start("factorization", cfg);
  const auto vars = torus_variables(cfg.ranks);
  compare_at_points(result, cfg, vars, [&](const PointAssignment& p) {
    return std::pair{z_localized(cfg.ranks, p, cfg.order), z_factorized(cfg.ranks, p, cfg.order)};
  });
  for (int n = 0; n <= cfg.order; ++n) {
    for (const FixedPoint& bn : fixed_points(cfg.ranks, n)) {
      const Monomial a = limit_shift(bn);
      const Monomial b = factorization_shift(bn);
      result.record(a == b, [&] {
        return Json{{"fixed_point", bn.to_string()}, {"limit_shift", a.to_string()}, {"factorized", b.to_string()}};
      });
    }
  }
  return result;
}

SuiteResult limits(const SuiteConfig& cfg) {
  SuiteResult result = start("limits", cfg);
  const Ranks& r = cfg.ranks;
  const SpeedOrder ord = SpeedOrder::for_ranks(r);
  const auto all = slots(r);
  PointSampler sampler(cfg.seed);

  for (const Slot& lo : all) {
    for (const Slot& hi : all) {
      if (!(lo < hi)) continue;
      for (int n_lo = 0; n_lo <= cfg.order; ++n_lo) {
        for (int n_hi = 0; n_hi <= cfg.order; ++n_hi) {
          std::vector<int> counts(r.total(), 0);
          const auto index = [&](const Slot& s) { return (s.group == 1 ? 0 : r.r1()) + s.alpha - 1; };
          counts[index(lo)] = n_lo;
          counts[index(hi)] = n_hi;
          const FixedPoint bn(r, counts);

          const FactoredForm forward = efrak(-vertex_block(bn, lo, hi));
          const FactoredForm backward = efrak(-vertex_block(bn, hi, lo));
          const FactoredForm forward_limit = framing_limit(forward, ord);
          const FactoredForm backward_limit = framing_limit(backward, ord);
          const FactoredForm expected_backward = FactoredForm::monomial(t(hi.group, n_lo));
          result.record(forward_limit == FactoredForm{}, [&] {
            return Json{{"fixed_point", bn.to_string()}, {"block", "forward"}, {"limit", forward_limit.to_string()},
                        {"expected", "1"}};
          });
          result.record(backward_limit == expected_backward, [&] {
            return Json{{"fixed_point", bn.to_string()},
                        {"block", "backward"},
                        {"limit", backward_limit.to_string()},
                        {"expected", expected_backward.to_string()}};
          });

          // Numeric approach to the symbolic limit along L = 10^3, 10^6.
          sampler.with_retries(kTorusOnly, [&](const PointAssignment& tp) {
            for (const auto* pair : {&forward, &backward}) {
              const Rational limit = eval_point(framing_limit(*pair, ord), tp);
              const Rational d3 = abs(eval_at_speed(*pair, tp, ord, Rational(1000)) - limit);
              const Rational d6 = abs(eval_at_speed(*pair, tp, ord, Rational(1000000)) - limit);
              result.record(d3 == 0 ? d6 == 0 : d6 < d3, [&] {
                return Json{{"fixed_point", bn.to_string()}, {"point", to_json(tp)}, {"gap_L1e3", to_string(d3)},
                            {"gap_L1e6", to_string(d6)}};
              });
            }
            return 0;
          });
        }
      }
    }
  }

  compare_at_points(result, cfg, kTorusOnly, [&](const PointAssignment& p) {
    return std::pair{z_via_limits(r, p, cfg.order), z_closed(r, p, cfg.order)};
  });
  return result;
}

SuiteResult oracle(const SuiteConfig& cfg) {
  SuiteResult result = start("oracle", cfg);
  const auto vars = torus_variables(cfg.ranks);
  compare_at_points(result, cfg, vars, [&](const PointAssignment& p) {
    return std::pair{z_oracle(cfg.ranks, p, cfg.order), z_localized(cfg.ranks, p, cfg.order)};
  });
  return result;
}

SuiteResult cohomological(const SuiteConfig& cfg) {
  SuiteResult result = start("cohomological", cfg);
  const auto vars = torus_variables(cfg.ranks);
  compare_at_points(result, cfg, vars, [&](const PointAssignment& p) {
    return std::pair{zcoh_localized(cfg.ranks, p, cfg.order), zcoh_closed(cfg.ranks, p, cfg.order)};
  });
  return result;
}

SuiteResult no_twist(const SuiteConfig& cfg) {
  SuiteResult result = start("no-twist", cfg);
  const Ranks& r = cfg.ranks;
  for (int n = 0; n <= cfg.order; ++n) {
    const Monomial expected = t(1, n * r.r1()) * t(2, n * r.r2());
    for (const FixedPoint& bn : fixed_points(r, n)) {
      const Monomial det = det_char(vertex_term(bn));
      result.record(det == expected, [&] {
        return Json{{"fixed_point", bn.to_string()}, {"det", det.to_string()}, {"expected", expected.to_string()}};
      });
    }
  }
  std::vector<Var> uvars{Var::u(1), Var::u(2)};
  for (const Slot& s : slots(r)) uvars.push_back(s.weight());
  compare_at_points(result, cfg, uvars, [&](const PointAssignment& p) {
    return std::pair{zhat_localized(r, p, cfg.order), zhat_closed(r, p, cfg.order)};
  });
  return result;
}

SuiteResult cy_vanishing(const SuiteConfig& cfg) {
  SuiteResult result = start("cy-vanishing", cfg);
  for (int n = 1; n <= cfg.order; ++n) {
    for (int k = 0; k < cfg.num_points; ++k) {
      const std::uint64_t seed = cfg.seed + 7919ULL * static_cast<std::uint64_t>(k);
      auto [cert, rest] = cy_vanishing_certificate(cfg.ranks, n, seed);
      const Rational x0 = 1 / rest.at(Var::t(2));
      const bool pole = cert.has_pole_at(x0);
      const bool ok = !pole && cert(x0) == 0;
      result.record(ok, [&] {
        Json j{{"n", n}, {"point", to_json(rest)}, {"pole_at_cy", pole}, {"certificate", cert.to_string("t1")}};
        if (!pole) j["value_at_cy"] = to_string(cert(x0));
        return j;
      });
    }
  }
  return result;
}

SuiteResult euler_count(const SuiteConfig& cfg) {
  SuiteResult result = start("euler-count", cfg);
  const int r = cfg.ranks.total();
  const QSeries<Rational> series = euler_char_series(cfg.ranks, cfg.order);
  for (int n = 0; n <= cfg.order; ++n) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + r - 1), static_cast<unsigned long>(r - 1));
    const auto count = fixed_points(cfg.ranks, n).size();
    const bool ok = Integer(static_cast<unsigned long>(count)) == binom && series[n] == Rational(binom);
    result.record(ok, [&] {
      return Json{{"n", n},
                  {"fixed_points", count},
                  {"binomial", binom.get_str()},
                  {"series_coefficient", to_string(series[n])}};
    });
  }
  return result;
}

SuiteResult smooth_chi_y(const SuiteConfig& cfg) {
  const Ranks& r = cfg.ranks;
  if (r.r1() != 0) throw PreconditionError("smooth-chi-y needs r1 = 0");
  SuiteResult result = start("smooth-chi-y", cfg);
  const Character t2_inv(t(2, -1));
  for (int n = 0; n <= cfg.order; ++n) {
    for (const FixedPoint& bn : fixed_points(r, n)) {
      const Character tangent = smooth_tangent(bn);
      const Character vir = vertex_term(bn);
      result.record(vir == tangent - t2_inv * tangent, [&] {
        return Json{{"fixed_point", bn.to_string()}, {"vertex_term", vir.to_string()},
                    {"tangent", tangent.to_string()}};
      });
      bool honest = tangent.rank() == static_cast<long long>(r.total()) * n;
      for (const auto& [m, c] : tangent.terms()) honest = honest && c > 0;
      result.record(honest, [&] { return Json{{"fixed_point", bn.to_string()}, {"tangent", tangent.to_string()}}; });
    }
  }

  // chi_{-y} genus with y = t2, straight from the tangent weights:
  // sum_bn prod_{weights m of T} (1 - t2 m^-1) / (1 - m^-1).
  const auto vars = torus_variables(r);
  compare_at_points(result, cfg, vars, [&](const PointAssignment& p) {
    const Rational y = p.at(Var::t(2));
    QSeries<Rational> genus(cfg.order);
    for (int n = 0; n <= cfg.order; ++n) {
      for (const FixedPoint& bn : fixed_points(r, n)) {
        Rational term = 1;
        const Character tangent = smooth_tangent(bn);
        for (const auto& [m, c] : tangent.terms()) {
          const Rational dual = 1 / eval_point(m, p);
          if (dual == 1) throw PoleAtPoint("tangent weight evaluates to 1");
          term *= pow((1 - y * dual) / (1 - dual), c);
        }
        genus[n] += term;
      }
    }
    return std::pair{genus, z_localized(r, p, cfg.order)};
  });
  return result;
}

std::vector<SuiteResult> properties(std::uint64_t seed, int min_instances) {
  std::vector<SuiteResult> out;
  IntStream rng(seed);

  // Exhaustive over r1 + r2 <= 4, n <= 6.
  SuiteResult rank{"vertex rank 0"}, blocks{"block-sum reconstruction"}, movable{"vertex term movable"},
      balance{"w-degree balance"};
  for (const Ranks& r : ranks_up_to(4)) {
    for (int n = 0; n <= 6; ++n) {
      for (const FixedPoint& bn : fixed_points(r, n)) {
        const auto where = [&] { return Json{{"ranks", rank_label(r)}, {"fixed_point", bn.to_string()}}; };
        Character vir;
        try {
          vir = vertex_term(bn);
          movable.record(true, where);
        } catch (const MovabilityViolation&) {
          movable.record(false, where);
          vir = vertex_term_from_blocks(bn);
        }
        rank.record(vir.rank() == 0, where);
        blocks.record(vir == vertex_term_from_blocks(bn), where);
        std::map<Monomial, long long> sectors;
        for (const auto& [m, c] : vir.terms()) sectors[m.framing_part()] += c;
        bool balanced = true;
        for (const auto& [w, total] : sectors) {
          const auto& terms = w.terms();
          const bool pair_shape = terms.empty() || (terms.size() == 2 && terms[0].second * terms[1].second == -1);
          balanced = balanced && pair_shape && total == 0;
        }
        balance.record(balanced, where);
      }
    }
  }
  out.push_back(rank);
  out.push_back(blocks);
  out.push_back(movable);
  out.push_back(balance);

  SuiteResult diagonal{"diagonal-block closed form"};
  for (int k = 0; k < min_instances; ++k) {
    const int r1 = rng.uniform(0, 3);
    const int r2 = rng.uniform(r1 == 0 ? 1 : 0, 4 - r1);
    const Ranks r(r1, r2);
    std::vector<int> counts(r.total());
    for (int& c : counts) c = rng.uniform(0, 8);
    const FixedPoint bn(r, counts);
    const auto all = slots(r);
    const Slot s = all[rng.uniform(0, static_cast<int>(all.size()) - 1)];
    const int i = s.group;
    const int other = 3 - i;
    Character tail;
    for (int a = 1; a <= bn.count(s); ++a) tail += Character(t(other, -a));
    const Character expected = (Character::one() - Character(t(i, -1))) * tail;
    const Character block = vertex_block(bn, s, s);
    diagonal.record(block == expected, [&] {
      return Json{{"ranks", rank_label(r)}, {"fixed_point", bn.to_string()}, {"block", block.to_string()},
                  {"expected", expected.to_string()}};
    });
  }
  out.push_back(diagonal);

  SuiteResult involution{"bar involution"};
  for (int k = 0; k < min_instances; ++k) {
    const Character c = random_character(rng, true);
    involution.record(bar(bar(c)) == c, [&] { return Json{{"character", c.to_string()}}; });
  }
  out.push_back(involution);

  SuiteResult multiplicative{"efrak multiplicativity"};
  while (multiplicative.checks < min_instances) {
    const Character a = random_character(rng, false);
    const Character b = random_character(rng, false);
    FactoredForm lhs, rhs;
    try {
      lhs = efrak(a + b);
      rhs = efrak(a) * efrak(b);
    } catch (const TrivialDenominator&) {
      continue;
    }
    multiplicative.record(lhs == rhs, [&] {
      return Json{{"a", a.to_string()}, {"b", b.to_string()}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
    });
  }
  out.push_back(multiplicative);
  return out;
}

}  // namespace suites

}  // namespace origami

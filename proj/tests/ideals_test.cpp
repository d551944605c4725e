#include <doctest.h>

#include <random>

#include "toric/ideals.hpp"

using namespace toric;

namespace {

const Field QQ{0};
const Field F2{2};

Polynomial poly(Field f, std::size_t n, std::vector<std::pair<Expo, Rat>> ts) {
  Polynomial p(f, n);
  for (auto& [e, c] : ts) p.add_term(e, c);
  return p;
}

bool spairs_reduce_to_zero(const std::vector<Polynomial>& g, const TermOrder& ord) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto& [ei, ci] = g[i].leading_term(ord);
      const auto& [ej, cj] = g[j].leading_term(ord);
      Expo l = expo_lcm(ei, ej);
      Polynomial s = psub(pterm_mul(g[i], expo_sub(l, ei), Rat(1) / ci),
                          pterm_mul(g[j], expo_sub(l, ej), Rat(1) / cj));
      if (!reduce_full(s, g, ord).is_zero()) return false;
    }
  return true;
}

Rat evaluate_at_ones(const Polynomial& f) {
  Rat s = 0;
  for (const auto& [e, c] : f.terms) s += c;
  return field_normalize(f.field, s);
}

}  // namespace

TEST_CASE("buchberger fixtures") {
  auto ord = TermOrder::make_grevlex();
  // x^3 - y^2 alone is already a basis
  auto cusp = poly(QQ, 2, {{{3, 0}, 1}, {{0, 2}, -1}});
  auto b1 = buchberger(Ideal(QQ, 2, {cusp}), ord);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == cusp);

  // lex basis of (xz - y^2, t - yz) contains xz - y^2
  auto lex = TermOrder::make_lex();
  auto f1 = poly(QQ, 4, {{{1, 0, 1, 0}, 1}, {{0, 2, 0, 0}, -1}});
  auto f2 = poly(QQ, 4, {{{0, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}});
  auto b2 = buchberger(Ideal(QQ, 4, {f1, f2}), lex);
  CHECK(std::find(b2.begin(), b2.end(), f1) != b2.end());
  CHECK(spairs_reduce_to_zero(b2, lex));

  // containment collapses
  auto g1 = poly(QQ, 1, {{{2}, 1}, {{0}, -1}});
  auto g2 = poly(QQ, 1, {{{1}, 1}, {{0}, -1}});
  auto b3 = buchberger(Ideal(QQ, 1, {g1, g2}), ord);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0] == g2);
}

TEST_CASE("buchberger is idempotent on reduced bases") {
  auto ord = TermOrder::make_grevlex();
  auto f1 = poly(QQ, 3, {{{1, 0, 1}, 1}, {{0, 2, 0}, -1}});
  auto f2 = poly(QQ, 3, {{{2, 0, 0}, 1}, {{0, 1, 1}, -1}});
  auto b = buchberger(Ideal(QQ, 3, {f1, f2}), ord);
  CHECK(buchberger(Ideal(QQ, 3, b), ord) == b);
}

TEST_CASE("normal form") {
  auto ord = TermOrder::make_lex();
  auto cusp = poly(QQ, 2, {{{3, 0}, 1}, {{0, 2}, -1}});
  Ideal i(QQ, 2, {cusp});
  CHECK(normal_form(cusp, i, ord).is_zero());
  auto x3 = poly(QQ, 2, {{{3, 0}, 1}});
  CHECK(normal_form(x3, i, ord) == poly(QQ, 2, {{{0, 2}, 1}}));
  auto one = Polynomial::constant(QQ, 2, 1);
  // proper homogeneous ideal leaves constants untouched
  auto quad = poly(QQ, 2, {{{1, 1}, 1}});
  CHECK(normal_form(one, Ideal(QQ, 2, {quad}), ord) == one);

  CHECK_THROWS_AS(normal_form(Polynomial::constant(F2, 2, 1), i, ord), FieldMismatch);
}

TEST_CASE("initial ideals") {
  auto lex = TermOrder::make_lex();
  auto cusp = poly(QQ, 2, {{{3, 0}, 1}, {{0, 2}, -1}});
  auto in1 = initial_ideal(Ideal(QQ, 2, {cusp}), lex);
  REQUIRE(in1.generators.size() == 1);
  CHECK(in1.generators[0] == poly(QQ, 2, {{{3, 0}, 1}}));

  // weight picking xz over y^2
  auto f = poly(QQ, 3, {{{1, 0, 1}, 1}, {{0, 2, 0}, -1}});
  auto in2 = initial_ideal_weight(Ideal(QQ, 3, {f}), Vec{2, 0, 2});
  REQUIRE(in2.generators.size() == 1);
  CHECK(in2.generators[0] == poly(QQ, 3, {{{1, 0, 1}, 1}}));

  // non-generic weight keeps the whole binomial as initial form
  auto in3 = initial_ideal_weight(Ideal(QQ, 3, {f}), Vec{1, 1, 1});
  REQUIRE(in3.generators.size() == 1);
  CHECK(in3.generators[0].terms.size() == 2);
}

TEST_CASE("elimination") {
  // parametrized parabola: x = t, y = t^2
  auto f1 = poly(QQ, 3, {{{1, 0, 0}, 1}, {{0, 0, 1}, -1}});   // x - t
  auto f2 = poly(QQ, 3, {{{0, 1, 0}, 1}, {{0, 0, 2}, -1}});   // y - t^2
  Ideal i(QQ, 3, {f1, f2});
  auto e = eliminate(i, {2});
  auto target = poly(QQ, 3, {{{0, 1, 0}, 1}, {{2, 0, 0}, -1}});  // y - x^2
  CHECK(ideal_contains(e, target));
  for (const auto& g : e.generators) CHECK(ideal_contains(Ideal(QQ, 3, {target}), g));

  CHECK(eliminate(i, {}).generators == i.generators);

  auto all = eliminate(i, {0, 1, 2});
  CHECK(all.generators.empty());
}

TEST_CASE("saturation of ideals") {
  auto xy = poly(QQ, 2, {{{1, 1}, 1}});
  auto x = Polynomial::variable(QQ, 2, 0);
  auto y = Polynomial::variable(QQ, 2, 1);
  auto s1 = saturate(Ideal(QQ, 2, {xy}), x);
  REQUIRE(s1.generators.size() == 1);
  CHECK(s1.generators[0] == y);

  auto x2y = poly(QQ, 2, {{{2, 1}, 1}});
  auto s2 = saturate(Ideal(QQ, 2, {x2y}), x);
  REQUIRE(s2.generators.size() == 1);
  CHECK(s2.generators[0] == y);
}

TEST_CASE("colon ideals") {
  auto x2 = poly(QQ, 2, {{{2, 0}, 1}});
  auto x = Polynomial::variable(QQ, 2, 0);
  auto c1 = colon(Ideal(QQ, 2, {x2}), Ideal(QQ, 2, {x}));
  REQUIRE(c1.generators.size() == 1);
  CHECK(c1.generators[0] == x);

  auto f = poly(QQ, 2, {{{1, 1}, 1}, {{0, 2}, -1}});
  Ideal i(QQ, 2, {f, x2});
  auto c2 = colon(i, i);
  CHECK(ideal_contains(c2, Polynomial::constant(QQ, 2, 1)));
}

TEST_CASE("frobenius powers") {
  auto x = Polynomial::variable(F2, 2, 0);
  auto fp1 = frobenius_power(Ideal(F2, 2, {x}), 2);
  CHECK(fp1.generators[0] == poly(F2, 2, {{{2, 0}, 1}}));

  auto xy = padd(x, Polynomial::variable(F2, 2, 1));
  auto fp2 = frobenius_power(Ideal(F2, 2, {xy}), 2);
  CHECK(fp2.generators[0] == poly(F2, 2, {{{2, 0}, 1}, {{0, 2}, 1}}));

  auto f = poly(F2, 3, {{{1, 0, 1}, 1}, {{0, 2, 0}, 1}});
  auto fp3 = frobenius_power(Ideal(F2, 3, {f}), 2);
  CHECK(fp3.generators[0] == poly(F2, 3, {{{2, 0, 2}, 1}, {{0, 4, 0}, 1}}));

  CHECK_THROWS_AS(frobenius_power(Ideal(QQ, 2, {poly(QQ, 2, {{{1, 0}, 1}})}), 2), FieldMismatch);
}

TEST_CASE("toric ideal fixtures") {
  // the cusp
  auto cusp = toric_ideal(PointConfig(1, {{2}, {3}}));
  REQUIRE(cusp.generators.size() == 1);
  CHECK(cusp.generators[0] == poly(QQ, 2, {{{3, 0}, 1}, {{0, 2}, -1}}));

  // quadric cone
  auto qc = toric_ideal(PointConfig(2, {{1, 0}, {1, 1}, {1, 2}}));
  REQUIRE(qc.generators.size() == 1);
  CHECK(qc.generators[0] == poly(QQ, 3, {{{1, 0, 1}, 1}, {{0, 2, 0}, -1}}));

  // Segre quadric from the unit square (projective, so homogenized)
  auto sq = toric_ideal(PointConfig(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}), Field{0}, true);
  REQUIRE(sq.generators.size() == 1);
  CHECK(sq.generators[0] == poly(QQ, 4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}}));
}

TEST_CASE("toric ideal structural invariants") {
  std::vector<PointConfig> configs{
      PointConfig(1, {{2}, {3}}),
      PointConfig(2, {{1, 0}, {1, 1}, {1, 2}}),
      PointConfig(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
      PointConfig(2, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}),
  };
  for (const auto& s : configs) {
    auto i = toric_ideal(s);
    IntMatrix a = s.as_matrix().transpose();
    bool height_one = true;
    for (const auto& p : s.points) height_one &= (p[0] == 1);
    for (const auto& g : i.generators) {
      REQUIRE(g.terms.size() == 2);
      auto it = g.terms.begin();
      Expo e1 = it->first;
      Expo e2 = std::next(it)->first;
      // disjoint supports
      for (std::size_t v = 0; v < e1.size(); ++v) CHECK((e1[v] == 0 || e2[v] == 0));
      // S * (u+ - u-) = 0
      Vec u(e1.size());
      for (std::size_t v = 0; v < e1.size(); ++v) u[v] = e1[v] - e2[v];
      CHECK(is_zero(a.apply(u)));
      // homogeneous when points sit at height one
      if (height_one) CHECK(expo_degree(e1) == expo_degree(e2));
      // the torus identity lies on the variety
      CHECK(evaluate_at_ones(g) == 0);
    }
  }
}

TEST_CASE("binomial membership matches the lattice condition") {
  PointConfig s(2, {{1, 0}, {1, 1}, {1, 2}});
  auto i = toric_ideal(s);
  IntMatrix a = s.as_matrix().transpose();
  auto ord = TermOrder::make_grevlex();
  std::size_t m = s.points.size();
  std::vector<Expo> exps;
  Expo e(m, 0);
  std::function<void(std::size_t)> gen = [&](std::size_t k) {
    if (k == m) {
      exps.push_back(e);
      return;
    }
    for (int v = 0; v <= 3; ++v) {
      e[k] = v;
      gen(k + 1);
    }
  };
  gen(0);
  for (const auto& b : exps)
    for (const auto& c : exps) {
      if (b == c) continue;
      Vec u(m);
      for (std::size_t v = 0; v < m; ++v) u[v] = b[v] - c[v];
      bool lattice_rel = is_zero(a.apply(u));
      auto bin = psub(Polynomial::monomial(QQ, m, b), Polynomial::monomial(QQ, m, c));
      CHECK(normal_form(bin, i, ord).is_zero() == lattice_rel);
    }
}

TEST_CASE("toric generators are field independent") {
  CHECK(same_generators_over_fields(PointConfig(1, {{2}, {3}})));
  CHECK(same_generators_over_fields(PointConfig(2, {{1, 0}, {1, 1}, {1, 2}})));
  CHECK(same_generators_over_fields(PointConfig(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  // a random-looking 4-point planar configuration
  CHECK(same_generators_over_fields(PointConfig(2, {{0, 0}, {2, 1}, {1, 3}, {3, 2}})));
}

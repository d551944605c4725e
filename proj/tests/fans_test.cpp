#include <doctest.h>

#include <random>

#include "toric/fans.hpp"
#include "toric/ideals.hpp"

using namespace toric;

namespace {

// evaluate a polynomial at a 0/1 point
Rat eval01(const Polynomial& p, const std::vector<Int>& x) {
  Rat s = 0;
  for (const auto& [e, c] : p.terms) {
    Rat m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && x[i] == 0) m = 0;
    s += m;
  }
  return s;
}

std::vector<Vec> translate_all(std::vector<Vec> pts, const Vec& t) {
  for (auto& p : pts) p = add(p, t);
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

TEST_CASE("fan predicates on standard fans") {
  CHECK(fan_projective_space(2).is_complete());
  CHECK(fan_projective_space(2).is_smooth());
  CHECK(fan_projective_space(3).is_complete());
  CHECK(fan_p1xp1().is_complete());
  CHECK(fan_p1xp1().is_smooth());
  CHECK(fan_hirzebruch(2).is_complete());
  CHECK(fan_hirzebruch(2).is_smooth());
  CHECK_FALSE(fan_quadric_cone().is_complete());
  CHECK_FALSE(fan_quadric_cone().is_smooth());
  CHECK(fan_quadric_cone().is_simplicial());
}

TEST_CASE("divisor of a character") {
  auto p2 = fan_projective_space(2);
  CHECK(divisor_of_character(p2, Vec{1, 0}).coeffs == Vec{1, 0, -1});
  CHECK(divisor_of_character(p2, Vec{0, 0}).coeffs == Vec{0, 0, 0});
  CHECK(divisor_of_character(fan_p1xp1(), Vec{1, 0}).coeffs == Vec{1, -1, 0, 0});
}

TEST_CASE("class group fixtures") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto g = class_group(fan_projective_space(n));
    CHECK(g.free_rank == 1);
    CHECK(g.torsion.empty());
  }
  auto q = class_group(fan_p1xp1());
  CHECK(q.free_rank == 2);
  CHECK(q.torsion.empty());
  for (int r = 1; r <= 3; ++r) {
    auto h = class_group(fan_hirzebruch(r));
    CHECK(h.free_rank == 2);
    CHECK(h.torsion.empty());
  }
  auto c = class_group(fan_quadric_cone());
  CHECK(c.free_rank == 0);
  CHECK(c.torsion == std::vector<Int>{2});

  CHECK_THROWS_AS(class_group(Fan(2, {{1, 0}}, {{0}})), RaysDoNotSpan);
}

TEST_CASE("class group free rank counts rays minus rank on smooth complete fans") {
  std::vector<Fan> fans = {fan_projective_space(2), fan_projective_space(3), fan_p1xp1(),
                           fan_hirzebruch(1), fan_hirzebruch(3)};
  for (const auto& f : fans) {
    auto g = class_group(f);
    CHECK(g.torsion.empty());
    CHECK(g.free_rank == f.rays.size() - f.ambient_rank);
  }
}

TEST_CASE("cartier data fixtures") {
  auto p2 = fan_projective_space(2);
  // smooth fan: every Weil divisor is Cartier
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 10; ++t) {
    Vec a{coef(rng), coef(rng), coef(rng)};
    auto cd = cartier_data(WeilDivisor(p2, a));
    REQUIRE(cd.local.size() == 3);
    for (std::size_t c = 0; c < 3; ++c)
      for (auto i : p2.maximal_cones[c]) CHECK(dot(cd.local[c], p2.rays[i]) == -a[i]);
  }

  // quadric cone: D_{e2} is Weil but not Cartier
  auto qf = fan_quadric_cone();
  CHECK_THROWS_AS(cartier_data(WeilDivisor(qf, Vec{1, 0})), NotCartier);
  // 2 * D_{e2} is Cartier
  auto cd2 = cartier_data(WeilDivisor(qf, Vec{2, 0}));
  CHECK(cd2.local.size() == 1);

  // principal divisors are Cartier with constant local data -m
  auto d = divisor_of_character(fan_hirzebruch(2), Vec{2, -1});
  auto cd = cartier_data(d);
  for (const auto& m : cd.local) CHECK(m == Vec{-2, 1});
}

TEST_CASE("positivity fixtures") {
  auto p2 = fan_projective_space(2);
  auto rep = positivity(WeilDivisor(p2, Vec{1, 0, 0}));
  CHECK(rep.globally_generated);
  CHECK(rep.ample);
  CHECK(rep.very_ample);

  // principal divisors: globally generated, never ample
  auto pr = positivity(divisor_of_character(fan_p1xp1(), Vec{1, 0}));
  CHECK(pr.globally_generated);
  CHECK_FALSE(pr.ample);

  // Hirzebruch fiber class: globally generated, flat across a wall
  auto fib = positivity(WeilDivisor(fan_hirzebruch(2), Vec{0, 0, 0, 1}));
  CHECK(fib.globally_generated);
  CHECK_FALSE(fib.ample);

  // anti-effective divisor is not even globally generated
  auto neg = positivity(WeilDivisor(p2, Vec{-1, 0, 0}));
  CHECK_FALSE(neg.globally_generated);

  CHECK_THROWS_AS(positivity(WeilDivisor(fan_quadric_cone(), Vec{2, 0})), NotComplete);
}

TEST_CASE("global sections fixtures") {
  auto p2 = fan_projective_space(2);
  CHECK(global_sections(WeilDivisor(p2, Vec{3, 0, 0})).points.size() == 10);
  CHECK(global_sections(WeilDivisor(p2, Vec{-1, -1, -1})).points.empty());
  auto sq = global_sections(WeilDivisor(fan_p1xp1(), Vec{1, 0, 1, 0}));
  CHECK(sq.points == std::vector<Vec>{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}});
  CHECK_THROWS_AS(global_sections(WeilDivisor(fan_quadric_cone(), Vec{0, 0})), Unbounded);
}

TEST_CASE("sections translate under linear equivalence") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<Fan> fans = {fan_projective_space(2), fan_p1xp1(), fan_hirzebruch(2)};
  for (const auto& f : fans) {
    for (int t = 0; t < 5; ++t) {
      Vec a(f.rays.size());
      for (auto& x : a) x = coef(rng);
      Vec m{coef(rng), coef(rng)};
      WeilDivisor d(f, a);
      auto base = global_sections(d).points;
      auto shifted = global_sections(add_divisors(d, divisor_of_character(f, m))).points;
      CHECK(shifted == translate_all(base, negate(m)));
      // positivity is a property of the divisor class
      PositivityReport r1, r2;
      bool ok1 = true, ok2 = true;
      try {
        r1 = positivity(d);
      } catch (const ToricError&) {
        ok1 = false;
      }
      try {
        r2 = positivity(add_divisors(d, divisor_of_character(f, m)));
      } catch (const ToricError&) {
        ok2 = false;
      }
      CHECK(ok1 == ok2);
      if (ok1) {
        CHECK(r1.globally_generated == r2.globally_generated);
        CHECK(r1.ample == r2.ample);
        CHECK(r1.very_ample == r2.very_ample);
      }
    }
  }
}

TEST_CASE("normal fan fixtures") {
  Polytope square(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(same_fan(normal_fan(square), fan_p1xp1()));

  Polytope simplex(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(same_fan(normal_fan(simplex), fan_projective_space(2)));

  Polytope hz(2, {{0, 0}, {1, 0}, {0, 1}, {3, 1}});
  CHECK(same_fan(normal_fan(hz), fan_hirzebruch(2)));

  CHECK_THROWS_AS(normal_fan(Polytope(2, {{0, 0}, {1, 0}})), NotFullDimensional);
}

TEST_CASE("normal fan of an ample polytope recovers the fan") {
  // ample fixtures: (fan, divisor) pairs whose P_D has the original normal fan
  std::vector<std::pair<Fan, Vec>> cases = {
      {fan_projective_space(2), Vec{1, 0, 0}},
      {fan_p1xp1(), Vec{1, 0, 1, 0}},
      {fan_hirzebruch(2), Vec{0, 0, 1, 1}},
  };
  for (const auto& [f, a] : cases) {
    WeilDivisor d(f, a);
    auto rep = positivity(d);
    REQUIRE(rep.ample);
    Polytope pd(f.ambient_rank, global_sections(d).points);
    CHECK(same_fan(normal_fan(pd), f));
  }
}

TEST_CASE("orbit distinguished points") {
  std::vector<Vec> gens = {{1, 0}, {1, 1}, {1, 2}};
  Cone c(2, gens);

  CHECK(orbit_distinguished_point(2, gens, c) == std::vector<Int>{1, 1, 1});

  Cone ray(2, {Vec{1, 0}});
  CHECK(orbit_distinguished_point(2, gens, ray) == std::vector<Int>{1, 0, 0});

  // the origin face gives the torus-fixed point
  for (const auto& f : faces(c))
    if (f.dim() == 0) CHECK(orbit_distinguished_point(2, gens, f) == std::vector<Int>{0, 0, 0});

  // an interior ray is not a face
  CHECK_THROWS_AS(orbit_distinguished_point(2, gens, Cone(2, {Vec{1, 1}})), NotAFace);
}

TEST_CASE("orbit points satisfy the toric ideal of the generators") {
  std::vector<Vec> gens = {{1, 0}, {1, 1}, {1, 2}};
  Cone c(2, gens);
  auto ideal = toric_ideal(PointConfig(2, gens));
  for (const auto& f : faces(c)) {
    auto pt = orbit_distinguished_point(2, gens, f);
    for (const auto& g : ideal.generators) CHECK(eval01(g, pt) == 0);
  }
}

TEST_CASE("orbit face lattice dimensions") {
  auto dims_of = [](const Cone& c) {
    std::vector<std::size_t> dims;
    for (const auto& [f, d] : orbit_face_lattice(c)) dims.push_back(d);
    std::sort(dims.begin(), dims.end());
    return dims;
  };
  CHECK(dims_of(Cone(2, {Vec{1, 0}, Vec{0, 1}})) == std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(dims_of(Cone(2, {Vec{1, 0}, Vec{1, 2}})) == std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(dims_of(Cone(2, {Vec{1, 0}})) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(orbit_face_lattice(Cone(2, {Vec{1, 0}, Vec{-1, 0}})), NotPointed);
}

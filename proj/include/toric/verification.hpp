#ifndef TORIC_VERIFICATION_HPP
#define TORIC_VERIFICATION_HPP

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "toric/cohomology.hpp"
#include "toric/cuts.hpp"
#include "toric/matroids.hpp"
#include "toric/phylo.hpp"
#include "toric/print.hpp"
#include "toric/triangulations.hpp"

namespace toric {

// The acceptance fixtures, each returning an empty string on success and a
// description of the first failure otherwise. Shared by the acceptance test
// binary and the CLI reproduction command.

namespace verify {

struct Check {
  std::ostringstream log;

  void expect(bool ok, const std::string& what) {
    if (!ok && log.tellp() == 0) log << what;
  }

  std::string result() const { return log.str(); }
};

inline Int binom(const Int& a, std::size_t b) {
  if (a < Int(b)) return 0;
  Int r = 1;
  for (std::size_t i = 0; i < b; ++i) r = r * (a - Int(i)) / Int(i + 1);
  return r;
}

inline Polytope unit_simplex(std::size_t d) {
  std::vector<Vec> vs{Vec(d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    vs.push_back(e);
  }
  return Polytope(d, vs);
}

inline Graph square_with_diagonal() {
  return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
}

inline std::vector<Graph> planar_graphs() {
  return {
      complete_graph(2),
      complete_graph(3),
      complete_graph(4),
      cycle_graph(4),
      cycle_graph(5),
      cycle_graph(6),
      cycle_graph(7),
      Graph(4, {{0, 1}, {1, 2}, {2, 3}}),
      Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}),
      square_with_diagonal(),
      Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}),
      Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}}),
  };
}

inline std::size_t basis_variable(const Graph& g, const Matroid& m,
                                  std::vector<std::pair<std::size_t, std::size_t>> tree) {
  std::set<std::size_t> b;
  for (auto [u, v] : tree) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
    b.insert(static_cast<std::size_t>(it - g.edges.begin()));
  }
  auto pos = std::lower_bound(m.bases.begin(), m.bases.end(), b);
  return static_cast<std::size_t>(pos - m.bases.begin());
}

inline Polynomial squarefree_monomial(Field f, std::size_t nv,
                                      const std::vector<std::size_t>& vars) {
  Expo e(nv, 0);
  for (auto v : vars) ++e[v];
  return Polynomial::monomial(f, nv, e);
}

inline std::string criterion_toric_ideals() {
  Check c;
  auto cusp = ideal_strings(toric_ideal(PointConfig(1, {{2}, {3}})));
  c.expect(cusp == std::vector<std::string>{"x^3 - y^2"},
           "expected generator x^3 - y^2 for the exponents {2,3}");
  auto conic = ideal_strings(toric_ideal(PointConfig(2, {{1, 0}, {1, 1}, {1, 2}})));
  c.expect(conic.size() == 1 && (conic[0] == "xz - y^2" || conic[0] == "y^2 - xz"),
           "expected generator xz - y^2 (up to sign) for the twisted conic points");
  return c.result();
}

inline std::string criterion_hilbert_basis() {
  Check c;
  auto hb = hilbert_basis(Cone(2, {{1, 0}, {1, 2}}));
  std::set<Vec> got(hb.begin(), hb.end());
  std::set<Vec> expect = {{1, 0}, {1, 1}, {1, 2}};
  c.expect(got == expect, "hilbert basis of cone<(1,0),(1,2)> is not {(1,0),(1,1),(1,2)}");
  return c.result();
}

inline std::string criterion_class_groups() {
  Check c;
  c.expect(class_group(fan_projective_space(2)) == AbelianGroupStructure{1, {}},
           "class group of the projective plane is not Z");
  c.expect(class_group(fan_p1xp1()) == AbelianGroupStructure{2, {}},
           "class group of P1 x P1 is not Z^2");
  for (Int r = 1; r <= 3; ++r)
    c.expect(class_group(fan_hirzebruch(r)) == AbelianGroupStructure{2, {}},
             "class group of a Hirzebruch surface is not Z^2");
  c.expect(class_group(fan_quadric_cone()) == AbelianGroupStructure{0, {Int(2)}},
           "class group of the quadric cone is not Z/2");
  return c.result();
}

inline std::string criterion_projective_space_cohomology() {
  Check c;
  for (std::size_t n = 1; n <= 3 && c.result().empty(); ++n) {
    auto f = fan_projective_space(n);
    for (Int k = -5; k <= 5; ++k) {
      Vec a(n + 1, 0);
      a[0] = k;
      WeilDivisor d(f, a);
      auto box = default_box(d);
      auto r1 = cohomology(CohomologyMethod::coh1, d, box);
      auto r2 = cohomology(CohomologyMethod::coh2, d, box);
      c.expect(r1.h == r2.h, "the two cohomology methods disagree on projective space");
      Int h0 = k >= 0 ? binom(k + Int(n), n) : Int(0);
      Int hn = k <= -Int(n) - 1 ? binom(-k - 1, n) : Int(0);
      c.expect(Int(r1.h[0]) == h0, "H^0 of O(k) on projective space has the wrong dimension");
      c.expect(Int(r1.h[n]) == hn, "H^n of O(k) on projective space has the wrong dimension");
      for (std::size_t j = 1; j < n; ++j)
        c.expect(r1.h[j] == 0, "middle cohomology of O(k) on projective space is nonzero");
      c.expect(box_stability_check(CohomologyMethod::coh1, d, box),
               "cohomology is not stable under box enlargement");
    }
  }
  return c.result();
}

inline std::string criterion_hirzebruch_h2() {
  Check c;
  WeilDivisor d(fan_hirzebruch(2), {-5, -3, 0, 0});
  auto box = default_box(d);
  auto r1 = cohomology(CohomologyMethod::coh1, d, box);
  auto r2 = cohomology(CohomologyMethod::coh2, d, box);
  c.expect(r1.h == r2.h, "the two cohomology methods disagree on the Hirzebruch surface");
  c.expect(r1.h.size() == 3 && r1.h[2] == 2, "H^2 of the Hirzebruch fixture is not 2");
  return c.result();
}

inline std::string criterion_normality() {
  Check c;
  Polytope van(3, {{0, 0, 0},
                   {0, 0, -1},
                   {0, 1, 0},
                   {0, 1, -1},
                   {1, 0, 0},
                   {1, 0, -1},
                   {1, 1, 3},
                   {1, 1, 4}});
  c.expect(is_very_ample(van), "the 8-vertex fixture should be very ample");
  c.expect(!is_normal_polytope(van), "the 8-vertex fixture should not be normal");
  PointConfig s(3, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, 1, 1}, {4, 1, 1}});
  c.expect(!monoid_is_saturated(s.at_height_one()),
           "the five-point configuration should not be saturated");
  c.expect(!monoid_is_saturated(PointConfig(1, {{0}, {1}, {3}, {4}}).at_height_one()),
           "{0,1,3,4} should not be projectively normal");
  for (std::size_t dim = 1; dim <= 3; ++dim)
    c.expect(is_normal_polytope(unit_simplex(dim)), "a unit simplex should be normal");
  c.expect(is_normal_polytope(Polytope(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})),
           "the unit square should be normal");
  return c.result();
}

inline std::string criterion_triangulation_correspondence() {
  Check c;
  PointConfig square(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  for (const Vec& w : {Vec{1, 0, 0, 0}, Vec{0, 1, 1, 0}}) {
    auto rep = check_sturmfels_correspondence(square, w);
    c.expect(rep.faces_match && rep.radical_identity,
             "correspondence fails on the unit square fixture");
  }
  std::mt19937 rng(88172645);
  std::uniform_int_distribution<int> coord(0, 3);
  std::uniform_int_distribution<int> wdist(0, 5);
  std::uniform_int_distribution<int> npts(3, 6);
  int tested = 0, attempts = 0;
  while (tested < 50 && attempts < 2000 && c.result().empty()) {
    ++attempts;
    int m = npts(rng);
    std::set<Vec> uniq;
    while (static_cast<int>(uniq.size()) < m) uniq.insert(Vec{coord(rng), coord(rng)});
    PointConfig s(2, std::vector<Vec>(uniq.begin(), uniq.end()));
    Vec w(m);
    for (auto& x : w) x = wdist(rng);
    try {
      auto rep = check_sturmfels_correspondence(s, w);
      c.expect(rep.faces_match, "initial complex and regular subdivision disagree");
      c.expect(rep.radical_identity, "radical of the initial ideal is not the cell intersection");
      auto mult = multiplicity_report(s, w);
      c.expect(mult.initial_squarefree == mult.all_volumes_one,
               "squarefree initial ideal does not match unimodularity");
      ++tested;
    } catch (const NonGenericWeight&) {
      // perturb and retry on the next attempt
    }
  }
  c.expect(tested >= 50, "fewer than 50 random instances were generic");
  return c.result();
}

inline std::string criterion_cuts() {
  Check c;
  for (const auto& g : planar_graphs()) {
    auto dec = decompose_targets(g);
    c.expect(dec.has_value(), "no three-cut decomposition of (3,2,...,2) was found");
    if (dec) {
      Vec sum(g.edges.size() + 1, 0);
      for (const auto& a : *dec) sum = add(sum, cut_vector(g, a));
      Vec expect(g.edges.size() + 1, 2);
      expect[0] = 3;
      c.expect(sum == expect, "the three cuts do not sum to (3,2,...,2)");
    }
    auto colors = four_coloring(g);
    for (const auto& [a, b] : g.edges)
      c.expect(colors[a] != colors[b], "four-coloring is not proper");
    for (auto col : colors) c.expect(col >= 1 && col <= 4, "color out of range");
    if (g.n <= 6)
      for (const auto& p : cut_polytope_points(g).points)
        for (const auto& ineq : seymour_inequalities(g))
          c.expect(dot(ineq, p) >= 0, "a cut vector violates a facet inequality");
  }
  return c.result();
}

inline std::string criterion_matroids() {
  Check c;
  std::vector<Matroid> family;
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t n = r; n <= 6; ++n) family.push_back(uniform_matroid(r, n));
  for (const auto& g : {complete_graph(3), cycle_graph(4), square_with_diagonal(),
                        complete_graph(4), Graph(4, {{0, 1}, {1, 2}, {2, 3}})})
    family.push_back(graphic_matroid(g));
  for (const auto& m : family) {
    for (std::size_t d = 1; d <= 3; ++d)
      c.expect(white_check(m, d).all_connected, "a basis-exchange fiber is disconnected");
    c.expect(matroid_base_polytope(m).monoid_saturated, "a base polytope monoid is unsaturated");
  }

  {
    auto rep = fedder_check(uniform_matroid(2, 4));
    c.expect(rep.is_f_pure, "the rank-2 uniform exchange ideal should be F-pure");
    Field f2{2};
    Polynomial f = padd(padd(squarefree_monomial(f2, 6, {1, 2, 3, 4}),
                             squarefree_monomial(f2, 6, {0, 2, 3, 5})),
                        squarefree_monomial(f2, 6, {0, 1, 4, 5}));
    c.expect(contains_modulo_bracket(rep.colon_ideal, f),
             "the published uniform-matroid witness is missing from the colon ideal");
  }
  {
    auto g = square_with_diagonal();
    auto m = graphic_matroid(g);
    auto rep = fedder_check(m);
    c.expect(rep.is_f_pure, "the square-with-diagonal exchange ideal should be F-pure");
    auto a1 = basis_variable(g, m, {{0, 1}, {1, 2}, {2, 3}});
    auto a2 = basis_variable(g, m, {{0, 1}, {1, 2}, {0, 3}});
    auto a3 = basis_variable(g, m, {{0, 1}, {2, 3}, {0, 3}});
    auto a4 = basis_variable(g, m, {{1, 2}, {2, 3}, {0, 3}});
    auto a5 = basis_variable(g, m, {{0, 1}, {2, 3}, {0, 2}});
    auto a6 = basis_variable(g, m, {{1, 2}, {0, 3}, {0, 2}});
    auto a7 = basis_variable(g, m, {{0, 1}, {0, 3}, {0, 2}});
    auto a8 = basis_variable(g, m, {{1, 2}, {2, 3}, {0, 2}});
    Field f2{2};
    std::size_t nv = m.bases.size();
    Polynomial f = padd(padd(squarefree_monomial(f2, nv, {a1, a4, a5, a6, a7}),
                             squarefree_monomial(f2, nv, {a2, a3, a5, a6, a8})),
                        padd(squarefree_monomial(f2, nv, {a2, a4, a5, a7, a8}),
                             squarefree_monomial(f2, nv, {a1, a3, a6, a7, a8})));
    c.expect(contains_modulo_bracket(rep.colon_ideal, f),
             "the published graphic-matroid witness is missing from the colon ideal");
  }
  return c.result();
}

inline std::string criterion_phylo() {
  Check c;
  for (const auto& name : {"Z2", "Z3", "Z2xZ2", "Z4"}) {
    auto g = group_from_name(name);
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t expect = 1;
      for (std::size_t i = 1; i < n; ++i) expect *= g.size();
      c.expect(flows(g, n).size() == expect, "flow count is not |G|^(n-1)");
    }
  }
  auto z2 = group_from_name("Z2");
  FlowTable t0 = {{1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}};
  FlowTable t1 = {{0, 1, 0, 1, 0, 0}, {1, 0, 1, 0, 0, 0}, {1, 1, 0, 0, 1, 1}};
  auto path = move_generate(z2, t0, t1, 2);
  c.expect(path.has_value() && path->size() == 3,
           "the six-leaf table pair is not connected by two quadratic moves");
  c.expect(complexity_estimate(z2, 4, 3).required_move_size == 2,
           "complexity of the binary group on four leaves is not 2");
  c.expect(complexity_estimate(z2, 5, 3).required_move_size == 2,
           "complexity of the binary group on five leaves is not 2");
  c.expect(complexity_estimate(group_from_name("Z3"), 3, 3).required_move_size <= 3,
           "complexity of the ternary group on three leaves exceeds 3");
  for (const auto& name : {"Z2", "Z3", "Z2xZ2", "Z4"}) {
    auto g = group_from_name(name);
    c.expect(complexity_estimate(g, 3, 3).required_move_size <= g.size(),
             "a complexity estimate exceeds the group order");
  }
  return c.result();
}

inline std::string criterion_degree_volume() {
  Check c;
  for (Int d = 1; d <= 5; ++d) {
    Polytope seg(1, {{Int(0)}, {d}});
    c.expect(degree_of_variety(seg) == d, "degree of a segment is not its length");
  }
  Polytope square(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  c.expect(degree_of_variety(square) == 2, "degree of the unit square is not 2");
  for (const auto& p : {square, unit_simplex(2), unit_simplex(3), Polytope(1, {{Int(0)}, {3}})}) {
    auto e = ehrhart(p);
    Int k = Int(p.dim()) + 2;
    c.expect(e(k) == Rat(count_lattice_points(p, k)),
             "the interpolated lattice-point count disagrees with direct counting");
  }
  return c.result();
}

inline std::string criterion_property_suites() {
  Check c;
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> coord(0, 3);
  std::uniform_int_distribution<int> npts(3, 5);

  // binomiality and exactness of toric ideal generators
  for (int trial = 0; trial < 10; ++trial) {
    std::set<Vec> uniq;
    int m = npts(rng);
    while (static_cast<int>(uniq.size()) < m) uniq.insert(Vec{coord(rng), coord(rng)});
    PointConfig s(2, std::vector<Vec>(uniq.begin(), uniq.end()));
    auto i = toric_ideal(s);
    IntMatrix a(s.points);
    for (const auto& gen : i.generators) {
      c.expect(gen.terms.size() == 2, "a toric ideal generator is not a binomial");
      auto it = gen.terms.begin();
      Expo e1 = it->first, e2 = std::next(it)->first;
      Vec u(s.points.size());
      for (std::size_t j = 0; j < u.size(); ++j) u[j] = Int(e1[j]) - Int(e2[j]);
      c.expect(is_zero(a.transpose().apply(u)),
               "a toric ideal generator is not an exact point relation");
    }
  }

  // field independence of the reduced generators
  for (const auto& s :
       {PointConfig(1, {{2}, {3}}), PointConfig(2, {{1, 0}, {1, 1}, {1, 2}}),
        PointConfig(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})})
    c.expect(same_generators_over_fields(s),
             "toric ideal generators differ between the rationals and F_2");

  // Euler characteristic is invariant under linear equivalence
  std::uniform_int_distribution<int> cf(-3, 3);
  for (const auto& f : {fan_projective_space(2), fan_p1xp1(), fan_hirzebruch(2)}) {
    for (int trial = 0; trial < 3; ++trial) {
      Vec a(f.rays.size());
      for (auto& x : a) x = cf(rng);
      Vec m{cf(rng), cf(rng)};
      WeilDivisor d1(f, a), d2 = add_divisors(d1, divisor_of_character(f, m));
      auto euler = [](const WeilDivisor& d) {
        auto r = cohomology(CohomologyMethod::coh1, d, default_box(d));
        Int e = 0;
        for (std::size_t j = 0; j < r.h.size(); ++j)
          e += (j % 2 == 0 ? Int(1) : Int(-1)) * Int(r.h[j]);
        return e;
      };
      c.expect(euler(d1) == euler(d2),
               "Euler characteristic changed under linear equivalence");
    }
  }

  // saturation idempotence
  {
    Field q{0};
    auto x = Polynomial::variable(q, 2, 0);
    auto y = Polynomial::variable(q, 2, 1);
    Ideal i(q, 2, {pmul(pmul(x, x), y), pmul(x, pmul(y, y))});
    auto s1 = saturate(i, x);
    auto s2 = saturate(s1, x);
    auto ord = TermOrder::make_grevlex();
    bool same = true;
    for (const auto& g : s1.generators) same = same && ideal_contains(s2, g, ord);
    for (const auto& g : s2.generators) same = same && ideal_contains(s1, g, ord);
    c.expect(same, "saturating twice changed the ideal");
  }

  // Groebner idempotence: the reduced basis is a fixed point
  {
    auto i = toric_ideal(PointConfig(2, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
    auto ord = TermOrder::make_grevlex();
    auto gb = i.groebner(ord);
    auto gb2 = Ideal(i.field, i.nvars, gb).groebner(ord);
    c.expect(gb == gb2, "recomputing the reduced basis changed it");
  }
  return c.result();
}

struct Criterion {
  std::string name;
  std::function<std::string()> run;
};

inline std::vector<Criterion> acceptance_criteria() {
  return {
      {"toric-ideals", criterion_toric_ideals},
      {"hilbert-basis", criterion_hilbert_basis},
      {"class-groups", criterion_class_groups},
      {"projective-space-cohomology", criterion_projective_space_cohomology},
      {"hirzebruch-h2", criterion_hirzebruch_h2},
      {"normality", criterion_normality},
      {"triangulation-correspondence", criterion_triangulation_correspondence},
      {"cuts", criterion_cuts},
      {"matroids", criterion_matroids},
      {"phylo", criterion_phylo},
      {"degree-volume", criterion_degree_volume},
      {"property-suites", criterion_property_suites},
  };
}

struct CriterionOutcome {
  std::string name;
  bool passed = false;
  std::string message;
  double seconds = 0;
};

inline std::vector<CriterionOutcome> run_criteria(const std::string& only = "") {
  std::vector<CriterionOutcome> out;
  for (const auto& crit : acceptance_criteria()) {
    if (!only.empty() && crit.name.find(only) == std::string::npos) continue;
    CriterionOutcome o;
    o.name = crit.name;
    auto start = std::chrono::steady_clock::now();
    try {
      o.message = crit.run();
      o.passed = o.message.empty();
    } catch (const std::exception& e) {
      o.passed = false;
      o.message = std::string("exception: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(o);
  }
  return out;
}

}  // namespace verify

}  // namespace toric

#endif

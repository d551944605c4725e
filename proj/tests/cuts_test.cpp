#include <doctest.h>

#include "toric/cuts.hpp"

using namespace toric;

namespace {

// planar fixtures used across the suite
std::vector<Graph> planar_fixtures() {
  return {
      complete_graph(2),
      complete_graph(3),
      complete_graph(4),
      cycle_graph(4),
      cycle_graph(5),
      Graph(4, {{0, 1}, {1, 2}, {2, 3}}),                          // path
      Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}),          // K4 minus an edge
      Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}),  // pentagon with chord
  };
}

bool satisfies_all(const Graph& g, const Vec& x) {
  for (const auto& c : seymour_inequalities(g))
    if (dot(c, x) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("cut vector fixtures") {
  auto k3 = complete_graph(3);
  Vec trivial = cut_vector(k3, {});
  CHECK(trivial == Vec{1, 0, 0, 0});
  CHECK(cut_vector(k3, {0, 1, 2}) == Vec{1, 0, 0, 0});

  // edges of K3 are (0,1),(0,2),(1,2); the singleton {0} cuts the first two
  CHECK(cut_vector(k3, {0}) == Vec{1, 1, 1, 0});

  // A|B and B|A give the same vector
  CHECK(cut_vector(k3, {1}) == cut_vector(k3, {0, 2}));

  CHECK_THROWS_AS(cut_vector(k3, {7}), InvalidPartition);
}

TEST_CASE("cut polytope point counts") {
  CHECK(cut_polytope_points(complete_graph(2)).points.size() == 2);
  CHECK(cut_polytope_points(complete_graph(3)).points.size() == 4);
  CHECK(cut_polytope_points(complete_graph(4)).points.size() == 8);

  // singleton partitions sum to (|V|, 2, ..., 2)
  for (const auto& g : planar_fixtures()) {
    Vec sum(g.edges.size() + 1, 0);
    for (std::size_t v = 0; v < g.n; ++v) sum = add(sum, cut_vector(g, {v}));
    Vec expect(g.edges.size() + 1, 2);
    expect[0] = Int(g.n);
    CHECK(sum == expect);
  }
}

TEST_CASE("chordless cycles") {
  CHECK(chordless_cycles(complete_graph(3)).size() == 1);
  CHECK(chordless_cycles(Graph(4, {{0, 1}, {1, 2}, {2, 3}})).empty());
  CHECK(chordless_cycles(cycle_graph(5)).size() == 1);
  // K4: four triangles, and the 4-cycles all have chords
  CHECK(chordless_cycles(complete_graph(4)).size() == 4);
}

TEST_CASE("seymour inequality fixtures") {
  // one triangle: four odd-subset inequalities, no box inequalities
  CHECK(seymour_inequalities(complete_graph(3)).size() == 4);

  // a tree has only box inequalities
  auto path = Graph(4, {{0, 1}, {1, 2}, {2, 3}});
  auto ineqs = seymour_inequalities(path);
  CHECK(ineqs.size() == 6);
  for (const auto& c : ineqs) {
    int nonzero = 0;
    for (const auto& x : c) nonzero += (x != 0);
    CHECK(nonzero <= 2);
  }
}

TEST_CASE("every cut vector satisfies every seymour inequality") {
  auto graphs = planar_fixtures();
  graphs.push_back(complete_graph(5));  // the odd-cycle family is valid on any graph
  graphs.push_back(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}));
  for (const auto& g : graphs)
    for (const auto& p : cut_polytope_points(g).points) CHECK(satisfies_all(g, p));
}

TEST_CASE("the all-twos point decomposes into three cuts") {
  for (const auto& g : planar_fixtures()) {
    auto dec = decompose_targets(g);
    REQUIRE(dec.has_value());
    Vec sum(g.edges.size() + 1, 0);
    for (const auto& a : *dec) sum = add(sum, cut_vector(g, a));
    Vec expect(g.edges.size() + 1, 2);
    expect[0] = 3;
    CHECK(sum == expect);
  }
}

TEST_CASE("the all-twos point lies in the lattice of cut vectors") {
  for (const auto& g : planar_fixtures()) {
    auto pts = cut_polytope_points(g).points;
    Vec target(g.edges.size() + 1, 2);
    target[0] = 3;
    // columns = cut vectors; an integer solution expresses the target
    CHECK(solve_integer(IntMatrix(pts).transpose(), target).has_value());
  }
}

TEST_CASE("four coloring is proper on planar fixtures") {
  for (const auto& g : planar_fixtures()) {
    auto colors = four_coloring(g);
    for (const auto& [a, b] : g.edges) CHECK(colors[a] != colors[b]);
    for (auto c : colors) {
      CHECK(c >= 1);
      CHECK(c <= 4);
    }
  }
  // K4 is 4-chromatic: all four colors appear
  auto k4 = four_coloring(complete_graph(4));
  std::set<int> used(k4.begin(), k4.end());
  CHECK(used.size() == 4);
}

TEST_CASE("cut toric ideals") {
  // K2: two distinct exponent vectors, independent; zero ideal
  CHECK(cut_toric_ideal(complete_graph(2)).generators.empty());

  auto check_structure = [](const Graph& g) {
    auto config = cut_exponent_config(g);
    auto i = cut_toric_ideal(g);
    IntMatrix a(config.points);
    for (const auto& gen : i.generators) {
      CHECK(gen.terms.size() == 2);  // binomial
      // homogeneous, and the exponent difference is a relation among points
      auto it = gen.terms.begin();
      Expo e1 = it->first;
      Expo e2 = std::next(it)->first;
      Int d1 = 0, d2 = 0;
      for (auto x : e1) d1 += x;
      for (auto x : e2) d2 += x;
      CHECK(d1 == d2);
      Vec u(config.points.size());
      for (std::size_t j = 0; j < u.size(); ++j) u[j] = Int(e1[j]) - Int(e2[j]);
      Vec image = a.transpose().apply(u);
      CHECK(is_zero(image));
    }
    return i.generators.size();
  };

  // path on three vertices: nontrivial homogeneous binomial ideal
  CHECK(check_structure(Graph(3, {{0, 1}, {1, 2}})) > 0);
  // the four cut monomials of the triangle are independent: zero ideal
  CHECK(check_structure(complete_graph(3)) == 0);
  CHECK(rank(IntMatrix(cut_exponent_config(complete_graph(3)).points)) == 4);
}

TEST_CASE("cut monoid saturation evidence on small graphs") {
  std::vector<Graph> graphs = {complete_graph(3), complete_graph(4), cycle_graph(4),
                               Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}),
                               cycle_graph(5)};
  for (const auto& g : graphs) CHECK(monoid_is_saturated(cut_polytope_points(g)));
}

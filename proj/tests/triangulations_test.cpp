#include <doctest.h>

#include <random>

#include "toric/triangulations.hpp"

using namespace toric;

namespace {

PointConfig square() { return PointConfig(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
PointConfig segment3() { return PointConfig(1, {{0}, {1}, {2}}); }

Int total_cell_volume(const Subdivision& sub) {
  Int v = 0;
  for (const auto& c : sub.cells) v += normalized_cell_volume(sub.points, c);
  return v;
}

}  // namespace

TEST_CASE("regular subdivision fixtures") {
  auto flat = regular_subdivision(square(), Vec{0, 0, 0, 0});
  REQUIRE(flat.cells.size() == 1);
  CHECK(flat.cells[0] == std::vector<std::size_t>{0, 1, 2, 3});

  auto split = regular_subdivision(square(), Vec{1, 0, 0, 0});
  REQUIRE(split.cells.size() == 2);
  CHECK(split.cells[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(split.cells[1] == std::vector<std::size_t>{1, 2, 3});
  CHECK(is_triangulation(split));

  auto seg = regular_subdivision(segment3(), Vec{0, 1, 0});
  REQUIRE(seg.cells.size() == 1);
  CHECK(seg.cells[0] == std::vector<std::size_t>{0, 2});
}

TEST_CASE("subdivision volumes are additive") {
  std::vector<std::pair<PointConfig, Vec>> cases = {
      {square(), Vec{0, 0, 0, 0}},
      {square(), Vec{1, 0, 0, 0}},
      {segment3(), Vec{0, 1, 0}},
      {segment3(), Vec{1, 0, 1}},
      {PointConfig(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}}), Vec{0, 0, 0, -1}},
  };
  for (auto& [s, w] : cases) {
    auto sub = regular_subdivision(s, w);
    if (!is_triangulation(sub)) {
      // a single flat cell still covers the polytope
      REQUIRE(sub.cells.size() == 1);
      continue;
    }
    CHECK(total_cell_volume(sub) == normalized_volume(s));
  }
}

TEST_CASE("initial complex fixtures") {
  // (xz - y^2) under lex: initial (xz), faces avoid {x,z}
  auto f = psub(Polynomial::monomial(Field{0}, 3, {1, 0, 1}),
                Polynomial::monomial(Field{0}, 3, {0, 2, 0}));
  auto c = initial_complex(Ideal(Field{0}, 3, {f}), TermOrder::make_lex());
  CHECK(c.faces.count({}) == 1);
  CHECK(c.faces.count({0}) == 1);
  CHECK(c.faces.count({1}) == 1);
  CHECK(c.faces.count({0, 1}) == 1);
  CHECK(c.faces.count({1, 2}) == 1);
  CHECK(c.faces.count({0, 2}) == 0);
  CHECK(c.faces.count({0, 1, 2}) == 0);

  // (x) in one variable: only the empty face
  auto x = Polynomial::variable(Field{0}, 1, 0);
  auto cx = initial_complex(Ideal(Field{0}, 1, {x}), TermOrder::make_lex());
  CHECK(cx.faces == std::set<std::set<std::size_t>>{{}});
}

TEST_CASE("sturmfels correspondence fixtures") {
  auto r1 = check_sturmfels_correspondence(square(), Vec{1, 0, 0, 0});
  CHECK(r1.faces_match);
  CHECK(r1.radical_identity);

  auto r2 = check_sturmfels_correspondence(segment3(), Vec{0, 1, 0});
  CHECK(r2.faces_match);
  CHECK(r2.radical_identity);
  auto r3 = check_sturmfels_correspondence(segment3(), Vec{1, 0, 1});
  CHECK(r3.faces_match);
  CHECK(r3.radical_identity);
  CHECK(r2.subdivision.cells != r3.subdivision.cells);

  // 2-simplex: any weight gives the single cell
  PointConfig simplex(2, {{0, 0}, {1, 0}, {0, 1}});
  auto r4 = check_sturmfels_correspondence(simplex, Vec{3, 1, 4});
  CHECK(r4.faces_match);
  CHECK(r4.subdivision.cells.size() == 1);

  CHECK_THROWS_AS(check_sturmfels_correspondence(square(), Vec{0, 0, 0, 0}), NonGenericWeight);
}

TEST_CASE("multiplicity report fixtures") {
  auto r1 = multiplicity_report(square(), Vec{1, 0, 0, 0});
  REQUIRE(r1.entries.size() == 2);
  for (const auto& e : r1.entries) {
    CHECK(e.volume == 1);
    CHECK(e.multiplicity == 1);
  }
  CHECK(r1.initial_squarefree);
  CHECK(r1.all_volumes_one);

  auto r2 = multiplicity_report(segment3(), Vec{0, 1, 0});
  REQUIRE(r2.entries.size() == 1);
  CHECK(r2.entries[0].cell == std::vector<std::size_t>{0, 2});
  CHECK(r2.entries[0].volume == 2);
  CHECK(r2.entries[0].multiplicity == 2);
  CHECK_FALSE(r2.initial_squarefree);
  CHECK_FALSE(r2.all_volumes_one);

  PointConfig simplex(2, {{0, 0}, {1, 0}, {0, 1}});
  auto r3 = multiplicity_report(simplex, Vec{0, 0, 0});
  REQUIRE(r3.entries.size() == 1);
  CHECK(r3.entries[0].volume == 1);
  CHECK(r3.entries[0].multiplicity == 1);
}

TEST_CASE("correspondence and squarefree criteria hold on a random family") {
  std::mt19937 rng(88172645);
  std::uniform_int_distribution<int> coord(0, 3);
  std::uniform_int_distribution<int> wdist(0, 5);
  std::uniform_int_distribution<int> npts(3, 6);
  int tested = 0, attempts = 0;
  while (tested < 12 && attempts < 400) {
    ++attempts;
    int m = npts(rng);
    std::set<Vec> uniq;
    while (static_cast<int>(uniq.size()) < m) uniq.insert(Vec{coord(rng), coord(rng)});
    PointConfig s(2, std::vector<Vec>(uniq.begin(), uniq.end()));
    Vec w(m);
    for (auto& x : w) x = wdist(rng);
    try {
      auto rep = check_sturmfels_correspondence(s, w);
      CHECK(rep.faces_match);
      CHECK(rep.radical_identity);
      auto mult = multiplicity_report(s, w);
      bool vols_one = mult.all_volumes_one;
      CHECK(mult.initial_squarefree == vols_one);
      // multiplicities match volumes cell by cell
      for (const auto& e : mult.entries) CHECK(e.multiplicity == e.volume);
      CHECK(total_cell_volume(rep.subdivision) == normalized_volume(s));
      ++tested;
    } catch (const NonGenericWeight&) {
      auto w2 = suggest_generic_weight(s, w);
      CHECK(is_triangulation(regular_subdivision(s, w2)));
    }
  }
  CHECK(tested >= 12);
}

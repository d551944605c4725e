#ifndef TORIC_CUTS_HPP
#define TORIC_CUTS_HPP

#include <array>
#include <functional>
#include <optional>
#include <set>

#include "toric/ideals.hpp"
#include "toric/polyhedra.hpp"

namespace toric {

struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  Graph() = default;
  Graph(std::size_t verts, std::vector<std::pair<std::size_t, std::size_t>> es)
      : n(verts), edges(std::move(es)) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto& [a, b] : edges) {
      if (a > b) std::swap(a, b);
      if (a == b || b >= n) throw ToricError("bad edge");
      if (!seen.insert({a, b}).second) throw ToricError("duplicate edge");
    }
    std::sort(edges.begin(), edges.end());
  }

  bool has_edge(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
  }
};

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, es);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph(n, es);
}

// (1, x) with x_e = 1 iff e crosses the partition A | V \ A.
inline Vec cut_vector(const Graph& g, const std::set<std::size_t>& a) {
  for (auto v : a)
    if (v >= g.n) throw InvalidPartition();
  Vec x(g.edges.size() + 1, 0);
  x[0] = 1;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (a.count(g.edges[e].first) != a.count(g.edges[e].second)) x[e + 1] = 1;
  return x;
}

// Canonical partitions: the side containing vertex 0, in lexicographic order
// of the remaining membership bits.
inline std::vector<std::set<std::size_t>> canonical_partitions(const Graph& g) {
  if (g.n > 10) throw TooLarge("graph has too many vertices");
  std::vector<std::set<std::size_t>> out;
  std::size_t count = g.n == 0 ? 0 : (std::size_t(1) << (g.n - 1));
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::set<std::size_t> a = {0};
    for (std::size_t v = 1; v < g.n; ++v)
      if (mask & (std::size_t(1) << (v - 1))) a.insert(v);
    out.push_back(a);
  }
  return out;
}

inline PointConfig cut_polytope_points(const Graph& g) {
  std::set<Vec> pts;
  for (const auto& a : canonical_partitions(g)) pts.insert(cut_vector(g, a));
  return PointConfig(g.edges.size() + 1, std::vector<Vec>(pts.begin(), pts.end()));
}

// All chordless cycles, each as a cyclic vertex sequence.
inline std::vector<std::vector<std::size_t>> chordless_cycles(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  auto chordless = [&](const std::vector<std::size_t>& cyc) {
    for (std::size_t i = 0; i < cyc.size(); ++i)
      for (std::size_t j = i + 2; j < cyc.size(); ++j) {
        if (i == 0 && j == cyc.size() - 1) continue;  // closing edge
        if (g.has_edge(cyc[i], cyc[j])) return false;
      }
    return true;
  };
  std::function<void()> extend = [&]() {
    std::size_t last = path.back();
    for (std::size_t v = path[0] + 1; v < g.n; ++v) {
      if (!g.has_edge(last, v)) continue;
      if (std::find(path.begin(), path.end(), v) != path.end()) continue;
      path.push_back(v);
      if (path.size() >= 3 && g.has_edge(v, path[0]) && path[1] < path.back() &&
          chordless(path))
        out.push_back(path);
      extend();
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < g.n; ++s) {
    path = {s};
    extend();
  }
  return out;
}

// Covectors c with c . (x0, x) >= 0 valid on the cone over the cut polytope:
// box inequalities for edges in no triangle, and the odd-subset cycle
// inequalities for every chordless cycle.
inline std::vector<Vec> seymour_inequalities(const Graph& g) {
  std::size_t ne = g.edges.size();
  std::set<Vec> out;
  auto in_triangle = [&](std::size_t e) {
    auto [a, b] = g.edges[e];
    for (std::size_t v = 0; v < g.n; ++v)
      if (v != a && v != b && g.has_edge(a, v) && g.has_edge(b, v)) return true;
    return false;
  };
  for (std::size_t e = 0; e < ne; ++e) {
    if (in_triangle(e)) continue;
    Vec low(ne + 1, 0), high(ne + 1, 0);
    low[e + 1] = 1;  // x_e >= 0
    high[0] = 1;
    high[e + 1] = -1;  // x_e <= x0
    out.insert(low);
    out.insert(high);
  }
  for (const auto& cyc : chordless_cycles(g)) {
    std::vector<std::size_t> ce;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      auto [a, b] = std::minmax(cyc[i], cyc[(i + 1) % cyc.size()]);
      ce.push_back(std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(a, b)) -
                   g.edges.begin());
    }
    std::size_t k = ce.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
      int fsize = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t(1) << i)) ++fsize;
      if (fsize % 2 == 0) continue;
      // sum_F x_e <= (|F|-1) x0 + sum_{C\F} x_e
      Vec c(ne + 1, 0);
      c[0] = fsize - 1;
      for (std::size_t i = 0; i < k; ++i)
        c[ce[i] + 1] += (mask & (std::size_t(1) << i)) ? -1 : 1;
      out.insert(c);
    }
  }
  return std::vector<Vec>(out.begin(), out.end());
}

// Three partitions whose cut vectors sum to (3, 2, ..., 2): every edge is cut
// by exactly two of them. First hit in lexicographic order of canonical
// partition triples.
inline std::optional<std::array<std::set<std::size_t>, 3>> decompose_targets(const Graph& g) {
  if (g.n > 9) throw TooLarge("graph has too many vertices");
  auto parts = canonical_partitions(g);
  std::vector<Vec> cuts;
  for (const auto& a : parts) cuts.push_back(cut_vector(g, a));
  Vec target(g.edges.size() + 1, 2);
  target[0] = 3;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); ++j) {
      Vec two = add(cuts[i], cuts[j]);
      bool ok = true;
      for (std::size_t e = 1; e < two.size(); ++e)
        if (two[e] > 2 || target[e] - two[e] > 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (std::size_t k = j; k < parts.size(); ++k)
        if (add(two, cuts[k]) == target) return std::array{parts[i], parts[j], parts[k]};
    }
  return std::nullopt;
}

// Proper coloring from a (3,2,...,2) decomposition: vertices are classed by
// their membership pattern in the three parts, with complementary patterns
// identified.
inline std::vector<int> four_coloring(const Graph& g) {
  auto dec = decompose_targets(g);
  if (!dec) throw NoDecomposition();
  std::vector<int> colors(g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    int m = 0;
    for (int i = 0; i < 3; ++i)
      if ((*dec)[i].count(v)) m |= 1 << i;
    if (m & 4) m ^= 7;  // identify complementary patterns
    colors[v] = m + 1;
  }
  for (const auto& [a, b] : g.edges)
    if (colors[a] == colors[b]) throw NotProper();
  return colors;
}

// Toric ideal of the cut monomial map: each partition maps to the indicator
// of its cut edges on the s-block and of the uncut edges on the t-block.
inline PointConfig cut_exponent_config(const Graph& g) {
  std::size_t ne = g.edges.size();
  std::set<Vec> pts;
  for (const auto& a : canonical_partitions(g)) {
    Vec x = cut_vector(g, a);
    Vec p(2 * ne, 0);
    for (std::size_t e = 0; e < ne; ++e) {
      p[e] = x[e + 1];
      p[ne + e] = 1 - x[e + 1];
    }
    pts.insert(p);
  }
  return PointConfig(2 * ne, std::vector<Vec>(pts.begin(), pts.end()));
}

inline Ideal cut_toric_ideal(const Graph& g, std::size_t budget = default_spair_budget) {
  if (g.n > 4) throw TooLarge("graph has too many vertices");
  return toric_ideal(cut_exponent_config(g), Field{0}, false, budget);
}

}  // namespace toric

#endif

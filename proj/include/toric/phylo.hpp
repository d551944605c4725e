#ifndef TORIC_PHYLO_HPP
#define TORIC_PHYLO_HPP

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>

#include "toric/ideals.hpp"
#include "toric/polyhedra.hpp"

namespace toric {

// Finite abelian group as a product of cyclic factors; elements are tuples in
// lexicographic order (so the identity is element 0).
struct FiniteAbelianGroup {
  std::vector<int> factors;
  std::vector<std::vector<int>> elements;

  explicit FiniteAbelianGroup(std::vector<int> fs) : factors(std::move(fs)) {
    for (auto d : factors)
      if (d < 1) throw ToricError("invalid invariant factor");
    std::vector<int> cur(factors.size(), 0);
    while (true) {
      elements.push_back(cur);
      std::size_t i = factors.size();
      while (i > 0 && cur[i - 1] == factors[i - 1] - 1) cur[--i] = 0;
      if (i == 0) break;
      ++cur[i - 1];
    }
    std::sort(elements.begin(), elements.end());
  }

  std::size_t size() const { return elements.size(); }

  std::size_t index_of(const std::vector<int>& e) const {
    return std::lower_bound(elements.begin(), elements.end(), e) - elements.begin();
  }

  std::size_t add(std::size_t a, std::size_t b) const {
    std::vector<int> s(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
      s[i] = (elements[a][i] + elements[b][i]) % factors[i];
    return index_of(s);
  }

  std::size_t neg(std::size_t a) const {
    std::vector<int> s(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
      s[i] = (factors[i] - elements[a][i]) % factors[i];
    return index_of(s);
  }
};

inline FiniteAbelianGroup group_from_name(const std::string& name) {
  if (name == "Z2") return FiniteAbelianGroup({2});
  if (name == "Z3") return FiniteAbelianGroup({3});
  if (name == "Z4") return FiniteAbelianGroup({4});
  if (name == "Z2xZ2") return FiniteAbelianGroup({2, 2});
  throw UsageError("unknown group: " + name);
}

// A flow is a row of n group elements (stored as element indices) summing to
// the identity; a table is a sorted multiset of flows.
using Flow = std::vector<std::size_t>;
using FlowTable = std::vector<Flow>;

inline bool is_flow(const FiniteAbelianGroup& g, const Flow& row) {
  std::size_t s = 0;
  for (auto e : row) s = g.add(s, e);
  return s == 0;
}

inline std::vector<Flow> flows(const FiniteAbelianGroup& g, std::size_t n,
                               std::size_t budget = 200000) {
  if (n == 0) throw ToricError("need at least one position");
  double est = 1;
  for (std::size_t i = 1; i < n; ++i) est *= static_cast<double>(g.size());
  if (est > static_cast<double>(budget)) throw TooLarge("too many flows");
  std::vector<Flow> out;
  Flow row(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t sum) {
    if (pos == n - 1) {
      row[pos] = g.neg(sum);
      out.push_back(row);
      return;
    }
    for (std::size_t e = 0; e < g.size(); ++e) {
      row[pos] = e;
      rec(pos + 1, g.add(sum, e));
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// One 0/1 vertex per flow: block i of size |G| carries the indicator of the
// i-th entry.
inline Vec flow_vertex(const FiniteAbelianGroup& g, const Flow& row) {
  Vec v(row.size() * g.size(), 0);
  for (std::size_t i = 0; i < row.size(); ++i) v[i * g.size() + row[i]] = 1;
  return v;
}

inline PointConfig polytope_PGn(const FiniteAbelianGroup& g, std::size_t n,
                                std::size_t budget = 200000) {
  std::vector<Vec> pts;
  for (const auto& row : flows(g, n, budget)) pts.push_back(flow_vertex(g, row));
  return PointConfig(n * g.size(), pts);
}

inline bool compatible(const FlowTable& t0, const FlowTable& t1) {
  if (t0.size() != t1.size()) throw ShapeMismatch();
  if (!t0.empty() && !t1.empty() && t0[0].size() != t1[0].size()) throw ShapeMismatch();
  std::size_t n = t0.empty() ? 0 : t0[0].size();
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::size_t> c0, c1;
    for (const auto& r : t0) c0.push_back(r[col]);
    for (const auto& r : t1) c1.push_back(r[col]);
    std::sort(c0.begin(), c0.end());
    std::sort(c1.begin(), c1.end());
    if (c0 != c1) return false;
  }
  return true;
}

inline FlowTable sorted_table(FlowTable t) {
  std::sort(t.begin(), t.end());
  return t;
}

namespace detail {

// All sorted row-sets over the flow list whose column multisets equal those
// of the given rows.
inline std::vector<FlowTable> compatible_row_sets(const FiniteAbelianGroup& g,
                                                  const std::vector<Flow>& all_flows,
                                                  const FlowTable& rows) {
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  // remaining multiplicity of each element per column
  std::vector<std::vector<int>> need(n, std::vector<int>(g.size(), 0));
  for (const auto& r : rows)
    for (std::size_t col = 0; col < n; ++col) ++need[col][r[col]];
  std::vector<FlowTable> out;
  FlowTable cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == rows.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < all_flows.size(); ++i) {
      const auto& f = all_flows[i];
      bool fits = true;
      for (std::size_t col = 0; col < n && fits; ++col)
        if (need[col][f[col]] == 0) fits = false;
      if (!fits) continue;
      for (std::size_t col = 0; col < n; ++col) --need[col][f[col]];
      cur.push_back(f);
      rec(i);
      cur.pop_back();
      for (std::size_t col = 0; col < n; ++col) ++need[col][f[col]];
    }
  };
  rec(0);
  return out;
}

// Tables reachable from t by replacing at most max_rows rows with a
// compatible row-set.
inline std::vector<FlowTable> table_moves(const FiniteAbelianGroup& g,
                                          const std::vector<Flow>& all_flows, const FlowTable& t,
                                          std::size_t max_rows) {
  std::set<FlowTable> out;
  std::size_t d = t.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << d); ++mask) {
    std::size_t s = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (s < 2 || s > max_rows) continue;
    FlowTable selected, rest;
    for (std::size_t i = 0; i < d; ++i)
      ((mask >> i) & 1 ? selected : rest).push_back(t[i]);
    for (const auto& repl : compatible_row_sets(g, all_flows, selected)) {
      if (repl == selected) continue;
      FlowTable nt = rest;
      nt.insert(nt.end(), repl.begin(), repl.end());
      out.insert(sorted_table(nt));
    }
  }
  out.erase(t);
  return std::vector<FlowTable>(out.begin(), out.end());
}

}  // namespace detail

// BFS path of at-most-d-row moves from t0 to t1, endpoints included.
inline std::optional<std::vector<FlowTable>> move_generate(const FiniteAbelianGroup& g,
                                                           const FlowTable& t0,
                                                           const FlowTable& t1, std::size_t d,
                                                           std::size_t budget = 100000) {
  if (!compatible(t0, t1)) throw ToricError("tables are not compatible");
  std::size_t n = t0.empty() ? 1 : t0[0].size();
  auto all_flows = flows(g, n);
  for (const auto& r : t0)
    if (!is_flow(g, r)) throw ToricError("row is not a flow");
  FlowTable start = sorted_table(t0), goal = sorted_table(t1);
  std::map<FlowTable, FlowTable> parent;
  parent[start] = start;
  std::queue<FlowTable> q;
  q.push(start);
  while (!q.empty()) {
    auto t = q.front();
    q.pop();
    if (t == goal) {
      std::vector<FlowTable> path = {t};
      while (path.back() != start) path.push_back(parent[path.back()]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& s : detail::table_moves(g, all_flows, t, d)) {
      if (parent.count(s)) continue;
      if (parent.size() > budget) throw BudgetExceeded("move search state space");
      parent[s] = t;
      q.push(s);
    }
  }
  return std::nullopt;
}

struct ComplexityReport {
  std::size_t required_move_size = 1;           // max over degrees
  std::map<std::size_t, std::size_t> by_degree;  // degree -> minimal move size
};

// For each degree d up to degree_max, the minimal move size m such that every
// fiber of degree-d tables is connected under moves of at most m rows.
inline ComplexityReport complexity_estimate(const FiniteAbelianGroup& g, std::size_t n,
                                            std::size_t degree_max,
                                            std::size_t budget = 500000) {
  auto all_flows = flows(g, n);
  ComplexityReport rep;
  for (std::size_t d = 2; d <= degree_max; ++d) {
    // all degree-d tables
    std::vector<FlowTable> tables;
    FlowTable cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (cur.size() == d) {
        tables.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < all_flows.size(); ++i) {
        cur.push_back(all_flows[i]);
        rec(i);
        cur.pop_back();
      }
    };
    rec(0);
    if (tables.size() > budget) throw BudgetExceeded("too many tables");
    std::map<Vec, std::vector<FlowTable>> fibers;
    for (const auto& t : tables) {
      Vec img(n * g.size(), 0);
      for (const auto& r : t) img = add(img, flow_vertex(g, r));
      fibers[img].push_back(t);
    }
    bool any_nontrivial = false;
    for (const auto& [img, members] : fibers)
      if (members.size() > 1) any_nontrivial = true;
    std::size_t needed = 1;  // trivial fibers need no moves at all
    for (std::size_t m = 2; any_nontrivial && m <= d; ++m) {
      bool all_connected = true;
      for (const auto& [img, members] : fibers) {
        if (members.size() == 1) continue;
        std::set<FlowTable> seen = {members[0]};
        std::queue<FlowTable> q;
        q.push(members[0]);
        while (!q.empty()) {
          auto t = q.front();
          q.pop();
          for (const auto& s : detail::table_moves(g, all_flows, t, m))
            if (seen.insert(s).second) q.push(s);
        }
        if (seen.size() != members.size()) {
          all_connected = false;
          break;
        }
      }
      needed = m;
      if (all_connected) break;
    }
    rep.by_degree[d] = needed;
    rep.required_move_size = std::max(rep.required_move_size, needed);
  }
  return rep;
}

inline Ideal phylo_toric_ideal(const FiniteAbelianGroup& g, std::size_t n,
                               std::size_t budget = default_spair_budget) {
  auto config = polytope_PGn(g, n);
  if (config.points.size() > 9) throw TooLarge("too many flows for the ideal computation");
  return toric_ideal(config, Field{0}, false, budget);
}

}  // namespace toric

#endif

#ifndef TORIC_MATROIDS_HPP
#define TORIC_MATROIDS_HPP

#include <optional>
#include <queue>
#include <set>

#include "toric/cuts.hpp"
#include "toric/ideals.hpp"
#include "toric/polyhedra.hpp"

namespace toric {

struct Matroid {
  std::size_t ground = 0;
  std::vector<std::set<std::size_t>> bases;  // sorted, distinct, equal size

  Matroid() = default;
  Matroid(std::size_t e, std::vector<std::set<std::size_t>> bs)
      : ground(e), bases(std::move(bs)) {
    if (bases.empty()) throw ToricError("a matroid has at least one basis");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    for (const auto& b : bases) {
      if (b.size() != bases[0].size()) throw ToricError("bases of unequal size");
      for (auto x : b)
        if (x >= ground) throw ToricError("basis element out of range");
    }
    // exchange axiom, checked exhaustively
    for (const auto& b1 : bases)
      for (const auto& b2 : bases)
        for (auto x : b1) {
          if (b2.count(x)) continue;
          bool ok = false;
          for (auto y : b2) {
            if (b1.count(y)) continue;
            std::set<std::size_t> b3 = b1;
            b3.erase(x);
            b3.insert(y);
            if (is_basis(b3)) {
              ok = true;
              break;
            }
          }
          if (!ok) throw ToricError("basis exchange axiom fails");
        }
  }

  std::size_t rank() const { return bases[0].size(); }

  bool is_basis(const std::set<std::size_t>& b) const {
    return std::binary_search(bases.begin(), bases.end(), b);
  }

  Vec indicator(const std::set<std::size_t>& b) const {
    Vec v(ground, 0);
    for (auto x : b) v[x] = 1;
    return v;
  }
};

inline Matroid uniform_matroid(std::size_t r, std::size_t n) {
  if (r > n) throw ToricError("rank exceeds ground size");
  std::vector<std::set<std::size_t>> bases;
  std::vector<std::size_t> idx(r);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == r) {
      bases.emplace_back(idx.begin(), idx.end());
      return;
    }
    for (std::size_t v = from; v + (r - pos) <= n; ++v) {
      idx[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  return Matroid(n, bases);
}

namespace detail {

inline Int spanning_tree_count(const Graph& g) {
  // matrix-tree: any cofactor of the Laplacian
  std::vector<Vec> l(g.n, Vec(g.n, 0));
  for (const auto& [a, b] : g.edges) {
    l[a][a] += 1;
    l[b][b] += 1;
    l[a][b] -= 1;
    l[b][a] -= 1;
  }
  std::vector<Vec> minor;
  for (std::size_t i = 1; i < g.n; ++i) minor.push_back(Vec(l[i].begin() + 1, l[i].end()));
  return g.n <= 1 ? Int(1) : determinant(IntMatrix(minor));
}

}  // namespace detail

inline Matroid graphic_matroid(const Graph& g) {
  if (g.edges.size() > 12) throw TooLarge("too many edges");
  std::size_t ne = g.edges.size();
  std::vector<std::set<std::size_t>> bases;
  for (std::size_t mask = 0; mask < (std::size_t(1) << ne); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != g.n - 1) continue;
    // acyclic + spanning via union-find
    std::vector<std::size_t> parent(g.n);
    for (std::size_t v = 0; v < g.n; ++v) parent[v] = v;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    for (std::size_t e = 0; e < ne && acyclic; ++e) {
      if (!(mask & (std::size_t(1) << e))) continue;
      auto ra = find(g.edges[e].first), rb = find(g.edges[e].second);
      if (ra == rb)
        acyclic = false;
      else
        parent[ra] = rb;
    }
    if (!acyclic) continue;
    std::set<std::size_t> b;
    for (std::size_t e = 0; e < ne; ++e)
      if (mask & (std::size_t(1) << e)) b.insert(e);
    bases.push_back(b);
  }
  if (bases.empty()) throw Disconnected();
  if (Int(bases.size()) != detail::spanning_tree_count(g))
    throw ToricError("spanning tree count mismatch");
  return Matroid(ne, bases);
}

// A degree-d monomial of the basis ring: a sorted multiset of d bases.
using BasisMultiset = std::vector<std::set<std::size_t>>;

inline Vec phi_image(const Matroid& m, const BasisMultiset& t) {
  Vec v(m.ground, 0);
  for (const auto& b : t)
    for (auto x : b) v[x] += 1;
  return v;
}

// All multisets reachable by one symmetric exchange applied to one pair.
inline std::vector<BasisMultiset> symmetric_exchange_moves(const Matroid& m,
                                                           const BasisMultiset& t) {
  std::set<BasisMultiset> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      for (auto b1 : t[i]) {
        if (t[j].count(b1)) continue;
        for (auto b2 : t[j]) {
          if (t[i].count(b2)) continue;
          std::set<std::size_t> n1 = t[i], n2 = t[j];
          n1.erase(b1);
          n1.insert(b2);
          n2.erase(b2);
          n2.insert(b1);
          if (!m.is_basis(n1) || !m.is_basis(n2)) continue;
          BasisMultiset s = t;
          s[i] = n1;
          s[j] = n2;
          std::sort(s.begin(), s.end());
          out.insert(s);
        }
      }
  return std::vector<BasisMultiset>(out.begin(), out.end());
}

struct WhiteReport {
  std::size_t fibers = 0;
  bool all_connected = true;
  std::optional<BasisMultiset> witness;  // element of a disconnected fiber
};

// Degree-d fibers of the basis monomial map, each explored by BFS under
// symmetric exchanges.
inline WhiteReport white_check(const Matroid& m, std::size_t d,
                               std::size_t budget = 2000000) {
  // all multisets of d bases
  std::vector<BasisMultiset> all;
  BasisMultiset cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == d) {
      all.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < m.bases.size(); ++i) {
      cur.push_back(m.bases[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  if (all.size() > budget) throw BudgetExceeded("too many basis multisets");
  std::map<Vec, std::vector<BasisMultiset>> fibers;
  for (const auto& t : all) fibers[phi_image(m, t)].push_back(t);
  WhiteReport rep;
  rep.fibers = fibers.size();
  for (const auto& [img, members] : fibers) {
    std::set<BasisMultiset> seen = {members[0]};
    std::queue<BasisMultiset> q;
    q.push(members[0]);
    while (!q.empty()) {
      auto t = q.front();
      q.pop();
      for (const auto& s : symmetric_exchange_moves(m, t))
        if (seen.insert(s).second) q.push(s);
    }
    if (seen.size() != members.size()) {
      rep.all_connected = false;
      for (const auto& t : members)
        if (!seen.count(t)) {
          rep.witness = t;
          break;
        }
      break;
    }
  }
  return rep;
}

struct BasePolytopeReport {
  Polytope polytope;
  bool monoid_saturated = false;
};

inline BasePolytopeReport matroid_base_polytope(const Matroid& m) {
  std::vector<Vec> pts;
  for (const auto& b : m.bases) pts.push_back(m.indicator(b));
  BasePolytopeReport rep{Polytope(m.ground, pts), false};
  rep.monoid_saturated = monoid_is_saturated(PointConfig(m.ground, pts).at_height_one());
  return rep;
}

// Integer Caratheodory property in dilation k: every lattice point of k P_M
// is a positive integral combination of affinely independent vertices.
inline bool icp_check(const Matroid& m, std::size_t k) {
  if (k > 3 || m.bases.size() > 24) throw TooLarge("instance too large for ICP search");
  std::vector<Vec> verts;
  for (const auto& b : m.bases) verts.push_back(m.indicator(b));
  Polytope p(m.ground, verts);
  auto points = lattice_points(p, Int(k)).points;
  for (const auto& target : points) {
    bool found = false;
    // multisets of k vertices
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (found) return;
      if (pick.size() == k) {
        Vec sum(m.ground, 0);
        for (auto i : pick) sum = add(sum, verts[i]);
        if (sum != target) return;
        std::set<std::size_t> support(pick.begin(), pick.end());
        std::vector<Vec> lifted;
        for (auto i : support) {
          Vec v = verts[i];
          v.push_back(1);
          lifted.push_back(v);
        }
        if (rank(IntMatrix(lifted)) == lifted.size()) found = true;
        return;
      }
      for (std::size_t i = from; i < verts.size() && !found; ++i) {
        pick.push_back(i);
        rec(i);
        pick.pop_back();
      }
    };
    rec(0);
    if (!found) return false;
  }
  return true;
}

// The ideal generated by the symmetric exchange binomials y_B1 y_B2 -
// y_B3 y_B4 in the basis variables, over the given field.
inline Ideal matroid_exchange_ideal(const Matroid& m, Field field) {
  std::size_t nv = m.bases.size();
  auto var_index = [&](const std::set<std::size_t>& b) {
    return std::lower_bound(m.bases.begin(), m.bases.end(), b) - m.bases.begin();
  };
  std::set<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>>
      seen;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i; j < nv; ++j)
      for (auto b1 : m.bases[i]) {
        if (m.bases[j].count(b1)) continue;
        for (auto b2 : m.bases[j]) {
          if (m.bases[i].count(b2)) continue;
          std::set<std::size_t> n1 = m.bases[i], n2 = m.bases[j];
          n1.erase(b1);
          n1.insert(b2);
          n2.erase(b2);
          n2.insert(b1);
          if (!m.is_basis(n1) || !m.is_basis(n2)) continue;
          std::size_t k = var_index(n1), l = var_index(n2);
          std::pair<std::size_t, std::size_t> lhs{std::min(i, j), std::max(i, j)};
          std::pair<std::size_t, std::size_t> rhs{std::min(k, l), std::max(k, l)};
          if (lhs == rhs) continue;  // identically zero binomial
          if (!seen.insert({std::min(lhs, rhs), std::max(lhs, rhs)}).second) continue;
          Expo e1(nv, 0), e2(nv, 0);
          ++e1[lhs.first];
          ++e1[lhs.second];
          ++e2[rhs.first];
          ++e2[rhs.second];
          Polynomial g = psub(Polynomial::monomial(field, nv, e1),
                              Polynomial::monomial(field, nv, e2));
          gens.push_back(g);
        }
      }
  return Ideal(field, nv, gens);
}

struct FedderReport {
  bool is_f_pure = false;
  Ideal colon_ideal;                  // (J^[2] : J) over F_2
  std::optional<Polynomial> witness;  // a generator outside m^[2]
};

// Fedder's criterion at p = 2 for the exchange ideal: S/J is F-pure iff
// (J^[2] : J) is not inside (y_1^2, ..., y_s^2), i.e. some generator has a
// squarefree monomial.
inline FedderReport fedder_check(const Matroid& m, std::size_t budget = default_spair_budget) {
  Field f2{2};
  Ideal j = matroid_exchange_ideal(m, f2);
  FedderReport rep;
  rep.colon_ideal = colon(frobenius_power(j, 2), j, budget);
  for (const auto& g : rep.colon_ideal.groebner(TermOrder::make_grevlex(), budget)) {
    for (const auto& [e, c] : g.terms) {
      bool squarefree = true;
      for (auto x : e)
        if (x >= 2) squarefree = false;
      if (squarefree) {
        rep.is_f_pure = true;
        rep.witness = g;
        return rep;
      }
    }
  }
  return rep;
}

// Membership of a witness representative in the colon ideal modulo the
// bracket power of the maximal ideal: published witnesses live in the
// quotient by (y_1^p, ..., y_s^p).
inline bool contains_modulo_bracket(const Ideal& c, const Polynomial& f, unsigned p = 2) {
  std::vector<Polynomial> gens = c.generators;
  for (std::size_t i = 0; i < c.nvars; ++i) {
    Expo e(c.nvars, 0);
    e[i] = static_cast<int>(p);
    gens.push_back(Polynomial::monomial(c.field, c.nvars, e));
  }
  return ideal_contains(Ideal(c.field, c.nvars, gens), f, TermOrder::make_grevlex());
}

struct MatroidIdealReport {
  Ideal ideal;
  std::size_t max_degree = 0;
};

inline MatroidIdealReport matroid_toric_ideal(const Matroid& m,
                                              std::size_t budget = default_spair_budget) {
  std::vector<Vec> pts;
  for (const auto& b : m.bases) pts.push_back(m.indicator(b));
  MatroidIdealReport rep;
  rep.ideal = toric_ideal(PointConfig(m.ground, pts), Field{0}, false, budget);
  for (const auto& g : rep.ideal.generators)
    for (const auto& [e, c] : g.terms) {
      std::size_t d = 0;
      for (auto x : e) d += static_cast<std::size_t>(x);
      rep.max_degree = std::max(rep.max_degree, d);
    }
  if (rep.max_degree > m.ground) throw ToricError("generator degree exceeds ground size");
  return rep;
}

}  // namespace toric

#endif

#ifndef TORIC_FANS_HPP
#define TORIC_FANS_HPP

#include <map>
#include <set>

#include "toric/polyhedra.hpp"

namespace toric {

// A fan is stored by its rays and its maximal cones (ray index sets); all
// lower-dimensional cones are faces of these.
struct Fan {
  std::size_t ambient_rank = 0;
  std::vector<Vec> rays;  // primitive
  std::vector<std::vector<std::size_t>> maximal_cones;

  Fan() = default;
  Fan(std::size_t n, std::vector<Vec> r, std::vector<std::vector<std::size_t>> mc)
      : ambient_rank(n), rays(std::move(r)), maximal_cones(std::move(mc)) {
    std::set<Vec> seen;
    for (auto& u : rays) {
      if (u.size() != n || is_zero(u)) throw ToricError("bad ray");
      u = primitive(u);
      if (!seen.insert(u).second) throw ToricError("duplicate ray");
    }
    for (auto& c : maximal_cones) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      for (auto i : c)
        if (i >= rays.size()) throw ToricError("cone ray index out of range");
    }
  }

  std::vector<Vec> cone_rays(std::size_t c) const {
    std::vector<Vec> out;
    for (auto i : maximal_cones[c]) out.push_back(rays[i]);
    return out;
  }

  Cone cone(std::size_t c) const { return Cone(ambient_rank, cone_rays(c)); }

  bool is_simplicial() const {
    for (const auto& c : maximal_cones) {
      std::vector<Vec> g;
      for (auto i : c) g.push_back(rays[i]);
      if (rank(IntMatrix(g)) != g.size()) return false;
    }
    return true;
  }

  bool is_smooth() const {
    for (const auto& c : maximal_cones) {
      if (c.size() != ambient_rank) return false;
      std::vector<Vec> g;
      for (auto i : c) g.push_back(rays[i]);
      Int d = determinant(IntMatrix(g));
      if (d != 1 && d != -1) return false;
    }
    return true;
  }

  // Every maximal cone is full-dimensional and every facet of one is shared
  // by exactly two of them.
  bool is_complete() const {
    if (maximal_cones.empty()) return false;
    std::map<std::set<std::size_t>, int> wall_count;
    for (std::size_t c = 0; c < maximal_cones.size(); ++c) {
      Cone sigma = cone(c);
      if (sigma.dim() != ambient_rank) return false;
      for (const auto& f : faces(sigma)) {
        if (f.dim() != ambient_rank - 1) continue;
        std::set<std::size_t> key;
        for (std::size_t i = 0; i < rays.size(); ++i)
          if (f.contains(rays[i])) key.insert(i);
        ++wall_count[key];
      }
    }
    for (const auto& [key, cnt] : wall_count)
      if (cnt != 2) return false;
    return true;
  }
};

// Canonical form: rays sorted, cones re-indexed and sorted.
inline Fan canonical_fan(const Fan& f) {
  std::vector<std::size_t> order(f.rays.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return f.rays[a] < f.rays[b]; });
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  Fan out;
  out.ambient_rank = f.ambient_rank;
  for (auto i : order) out.rays.push_back(f.rays[i]);
  for (const auto& c : f.maximal_cones) {
    std::vector<std::size_t> nc;
    for (auto i : c) nc.push_back(pos[i]);
    std::sort(nc.begin(), nc.end());
    out.maximal_cones.push_back(nc);
  }
  std::sort(out.maximal_cones.begin(), out.maximal_cones.end());
  return out;
}

inline bool same_fan(const Fan& a, const Fan& b) {
  Fan ca = canonical_fan(a), cb = canonical_fan(b);
  return ca.ambient_rank == cb.ambient_rank && ca.rays == cb.rays &&
         ca.maximal_cones == cb.maximal_cones;
}

// Standard fixtures.
inline Fan fan_projective_space(std::size_t n) {
  std::vector<Vec> rays;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(Vec(n, -1));
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return Fan(n, rays, cones);
}

inline Fan fan_p1xp1() {
  return Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
             {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Rays e1, e2, -e1 + r*e2, -e2 with the four 2-dimensional cones between
// consecutive rays.
inline Fan fan_hirzebruch(const Int& r) {
  return Fan(2, {{1, 0}, {0, 1}, {-1, r}, {0, -1}},
             {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// Affine fan of the quadric cone Spec k[x,y,z]/(xz - y^2): one cone.
inline Fan fan_quadric_cone() { return Fan(2, {{0, 1}, {2, -1}}, {{0, 1}}); }

struct WeilDivisor {
  Fan fan;
  Vec coeffs;  // D = sum coeffs[i] * D_{ray i}

  WeilDivisor(Fan f, Vec a) : fan(std::move(f)), coeffs(std::move(a)) {
    if (coeffs.size() != fan.rays.size()) throw ToricError("coefficient count mismatch");
  }
};

// div(m) = sum <m, u> D_u.
inline WeilDivisor divisor_of_character(const Fan& f, const Vec& m) {
  Vec a;
  for (const auto& u : f.rays) a.push_back(dot(m, u));
  return WeilDivisor(f, a);
}

inline WeilDivisor add_divisors(const WeilDivisor& d, const WeilDivisor& e) {
  return WeilDivisor(d.fan, add(d.coeffs, e.coeffs));
}

// Cokernel of M -> Z^rays, m -> (<m, u>)_u.
inline AbelianGroupStructure class_group(const Fan& f) {
  IntMatrix a(f.rays);
  if (rank(a) != f.ambient_rank) throw RaysDoNotSpan();
  return cokernel(a);
}

// Per maximal cone sigma: m_sigma with <m_sigma, u> = -a_u for every ray u
// of sigma.
struct CartierData {
  std::vector<Vec> local;  // aligned with fan.maximal_cones
};

inline CartierData cartier_data(const WeilDivisor& d) {
  const Fan& f = d.fan;
  CartierData cd;
  for (std::size_t c = 0; c < f.maximal_cones.size(); ++c) {
    std::vector<Vec> rows = f.cone_rays(c);
    Vec rhs;
    for (auto i : f.maximal_cones[c]) rhs.push_back(-d.coeffs[i]);
    auto sol = solve_rational(IntMatrix(rows), rhs);
    if (!sol) {
      if (rank(IntMatrix(rows)) < f.ambient_rank)
        throw ToricError("maximal cone is not full-dimensional");
      throw NotCartier(c);  // inconsistent local data
    }
    Vec m(f.ambient_rank);
    for (std::size_t j = 0; j < f.ambient_rank; ++j) {
      if (denominator((*sol)[j]) != 1) throw NotCartier(c);
      m[j] = numerator((*sol)[j]);
    }
    cd.local.push_back(m);
  }
  // wall agreement on shared rays
  for (std::size_t c = 0; c < f.maximal_cones.size(); ++c)
    for (std::size_t e = c + 1; e < f.maximal_cones.size(); ++e)
      for (auto i : f.maximal_cones[c])
        for (auto j : f.maximal_cones[e])
          if (i == j && dot(cd.local[c], f.rays[i]) != dot(cd.local[e], f.rays[i]))
            throw NotCartier(e);
  return cd;
}

struct PositivityReport {
  bool globally_generated = false;
  bool ample = false;
  bool very_ample = false;
};

// The divisor's polyhedron P_D = { m : <m, u> >= -a_u for every ray u }.
struct DivisorPolytope {
  std::size_t ambient_rank = 0;
  std::vector<Vec> normals;  // the rays u
  Vec offsets;               // a_u; membership is <m, u> >= -a_u

  bool contains(const Vec& m) const {
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (dot(m, normals[i]) < -offsets[i]) return false;
    return true;
  }
};

inline DivisorPolytope divisor_polytope(const WeilDivisor& d) {
  DivisorPolytope p;
  p.ambient_rank = d.fan.ambient_rank;
  p.normals = d.fan.rays;
  p.offsets = d.coeffs;
  return p;
}

// All lattice points of P_D. Vertices are found via the cone over the
// homogenized inequalities; a nonzero recession direction means P_D is
// unbounded.
inline PointConfig global_sections(const WeilDivisor& d) {
  std::size_t n = d.fan.ambient_rank;
  std::vector<Vec> ineqs;
  for (std::size_t i = 0; i < d.fan.rays.size(); ++i) {
    Vec row = d.fan.rays[i];
    row.push_back(d.coeffs[i]);
    ineqs.push_back(row);
  }
  Vec up(n + 1, 0);
  up[n] = 1;
  ineqs.push_back(up);
  auto g = generators_of_halfspace_cone(ineqs, n + 1);
  if (!g.lineality.empty()) throw Unbounded();
  std::vector<QVec> verts;
  for (const auto& r : g.rays) {
    if (r[n] == 0) throw Unbounded();
    QVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = Rat(r[j]) / Rat(r[n]);
    verts.push_back(v);
  }
  if (verts.empty()) return PointConfig(n, {});
  auto p = divisor_polytope(d);
  std::vector<Int> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = Int(boost::multiprecision::numerator(mn) / boost::multiprecision::denominator(mn));
    while (Rat(lo[j]) > mn) --lo[j];
    hi[j] = Int(boost::multiprecision::numerator(mx) / boost::multiprecision::denominator(mx));
    while (Rat(hi[j]) < mx) ++hi[j];
  }
  std::vector<Vec> found;
  Vec x = lo;
  while (true) {
    if (p.contains(x)) found.push_back(x);
    std::size_t j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }
  std::sort(found.begin(), found.end());
  return PointConfig(n, found);
}

// Support-function convexity across the fan: h(u) = -a_u at rays, h linear on
// each maximal cone via m_sigma. Globally generated iff <m_sigma, u> >= -a_u
// for every maximal sigma and every ray u outside it; strict for ample.
inline PositivityReport positivity(const WeilDivisor& d) {
  const Fan& f = d.fan;
  if (!f.is_complete()) throw NotComplete();
  auto cd = cartier_data(d);
  PositivityReport rep;
  rep.globally_generated = true;
  rep.ample = true;
  for (std::size_t c = 0; c < f.maximal_cones.size(); ++c) {
    std::set<std::size_t> own(f.maximal_cones[c].begin(), f.maximal_cones[c].end());
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
      if (own.count(i)) continue;
      Int v = dot(cd.local[c], f.rays[i]);
      if (v < -d.coeffs[i]) rep.globally_generated = false;
      if (v <= -d.coeffs[i]) rep.ample = false;
    }
  }
  rep.ample = rep.ample && rep.globally_generated;
  if (rep.ample) {
    // for strictly convex h the vertices of P_D are exactly the m_sigma
    Polytope p(f.ambient_rank, cd.local);
    rep.very_ample = is_very_ample(p);
  }
  return rep;
}

// Distinguished point of the orbit attached to a face: the 0/1 vector marking
// which generators lie on the face.
inline std::vector<Int> orbit_distinguished_point(std::size_t n, const std::vector<Vec>& gens,
                                                  const Cone& face) {
  Cone c(n, gens);
  bool found = false;
  for (const auto& f : faces(c))
    if (f.same_cone(face)) {
      found = true;
      break;
    }
  if (!found) throw NotAFace();
  std::vector<Int> out;
  for (const auto& g : gens) out.push_back(face.contains(g) ? 1 : 0);
  return out;
}

// All faces of a pointed cone with the dimension of the associated orbit's
// character lattice (= the face dimension).
inline std::vector<std::pair<Cone, std::size_t>> orbit_face_lattice(const Cone& c) {
  if (!c.is_pointed()) throw NotPointed();
  std::vector<std::pair<Cone, std::size_t>> out;
  for (const auto& f : faces(c)) out.emplace_back(f, f.dim());
  return out;
}

// Inner-normal fan of a full-dimensional lattice polytope: one maximal cone
// per vertex, generated by the normals of the facets through that vertex.
inline Fan normal_fan(const Polytope& p) {
  std::size_t n = p.ambient_rank();
  if (p.dim() != n) throw NotFullDimensional();
  std::vector<Vec> rays;    // primitive facet normals u, facet <u, x> >= -c
  std::vector<Vec> facets;  // the full lifted inequality rows
  for (const auto& a : p.height_cone().inequalities()) {
    Vec u(a.begin(), a.end() - 1);
    if (is_zero(u)) continue;  // the height >= 0 inequality
    rays.push_back(primitive(u));
    facets.push_back(a);
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& v : p.vertices()) {
    std::vector<std::size_t> c;
    Vec lifted = v;
    lifted.push_back(1);
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (dot(facets[i], lifted) == 0) c.push_back(i);
    cones.push_back(c);
  }
  return Fan(n, rays, cones);
}

}  // namespace toric

#endif

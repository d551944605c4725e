#ifndef TORIC_POLYHEDRA_HPP
#define TORIC_POLYHEDRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "toric/lattice.hpp"

namespace toric {

// Finite ordered set of distinct lattice points; the order fixes the variable
// indexing of the associated toric ideal.
struct PointConfig {
  std::size_t ambient_rank = 0;
  std::vector<Vec> points;

  PointConfig() = default;
  PointConfig(std::size_t n, std::vector<Vec> pts) : ambient_rank(n), points(std::move(pts)) {
    std::set<Vec> seen;
    for (const auto& p : points) {
      if (p.size() != ambient_rank) throw ToricError("point has wrong length");
      if (!seen.insert(p).second) throw ToricError("points must be pairwise distinct");
    }
  }

  IntMatrix as_matrix() const {
    IntMatrix m(points.size(), ambient_rank);
    m.entries = points;
    return m;
  }

  // Appends a coordinate equal to 1 to every point.
  PointConfig at_height_one() const {
    std::vector<Vec> pts;
    pts.reserve(points.size());
    for (auto p : points) {
      p.push_back(1);
      pts.push_back(std::move(p));
    }
    return PointConfig(ambient_rank + 1, pts);
  }
};

struct HalfspaceConeGenerators {
  std::vector<Vec> rays;       // extreme rays (mod lineality), primitive
  std::vector<Vec> lineality;  // saturated basis of the lineality space
};

namespace detail {

inline std::vector<Vec> standard_basis(std::size_t n) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    b.push_back(e);
  }
  return b;
}

// Inverse of a unimodular integer matrix.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  std::size_t n = m.rows;
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    auto col = solve_rational(m, e);
    if (!col) throw ToricError("matrix not invertible");
    for (std::size_t i = 0; i < n; ++i) {
      if (denominator((*col)[i]) != 1) throw ToricError("matrix not unimodular");
      inv.at(i, j) = numerator((*col)[i]);
    }
  }
  return inv;
}

// A basis of Z^n extending the (saturated) lattice L: first the rows spanning
// L's rational span, then a complement. Returns the complement rows.
inline std::vector<Vec> complement_basis(const LatticeBasis& lin) {
  std::size_t n = lin.ambient_rank;
  std::size_t r = lin.vectors.size();
  auto snf = smith_normal_form(lin.as_matrix());
  // U L V = [I_r | 0] for saturated L, so rowspan(L) = first r rows of V^{-1}.
  IntMatrix vinv = inverse_unimodular(snf.v);
  std::vector<Vec> comp;
  for (std::size_t i = r; i < n; ++i) comp.push_back(vinv.entries[i]);
  return comp;
}

inline void enumerate_subsets(std::size_t n, std::size_t k,
                              const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      visit(idx);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace detail

// Extreme rays and lineality of {x in R^n : <a, x> >= 0 for all rows a}.
// Rays are primitive canonical representatives modulo the lineality space.
inline HalfspaceConeGenerators generators_of_halfspace_cone(const std::vector<Vec>& ineqs,
                                                            std::size_t n) {
  HalfspaceConeGenerators out;
  IntMatrix a(ineqs.empty() ? IntMatrix(0, n) : IntMatrix(ineqs));
  a.cols = n;
  LatticeBasis lin = ineqs.empty()
                         ? LatticeBasis(n, detail::standard_basis(n))
                         : kernel_lattice(a);
  out.lineality = lin.vectors;
  std::size_t r = ineqs.empty() ? 0 : rank(a);
  if (r == 0) return out;

  // Quotient coordinates modulo the lineality space, used to canonicalize ray
  // representatives.
  std::vector<Vec> comp = detail::complement_basis(lin);
  IntMatrix full_basis(lin.vectors.size() + comp.size(), n);
  {
    std::vector<Vec> rows = lin.vectors;
    rows.insert(rows.end(), comp.begin(), comp.end());
    full_basis = IntMatrix(rows);
  }
  IntMatrix coords = detail::inverse_unimodular(full_basis.transpose());  // x -> basis coords

  std::set<Vec> rays_seen;
  auto consider = [&](Vec w) {
    // orient so all inequalities are nonnegative
    int sign = 0;
    for (const auto& row : ineqs) {
      Int v = dot(row, w);
      if (v > 0) {
        if (sign < 0) return;
        sign = 1;
      } else if (v < 0) {
        if (sign > 0) return;
        sign = -1;
      }
    }
    if (sign == 0) return;  // lineality direction
    if (sign < 0) w = negate(w);
    // extremality: tight inequalities must have rank r-1
    std::vector<Vec> tight;
    for (const auto& row : ineqs)
      if (dot(row, w) == 0) tight.push_back(row);
    std::size_t tr = tight.empty() ? 0 : rank(IntMatrix(tight));
    if (tr != r - 1) return;
    // canonicalize modulo lineality: primitive quotient coordinates, lifted
    Vec c = coords.apply(w);
    Vec q(c.begin() + static_cast<long>(out.lineality.size()), c.end());
    q = primitive(q);
    Vec lifted(n, 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) lifted[j] += q[i] * comp[i][j];
    rays_seen.insert(lifted);
  };

  if (r == 1) {
    for (const auto& e : detail::standard_basis(n)) consider(e);
  } else {
    detail::enumerate_subsets(ineqs.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vec> rows;
      for (auto i : idx) rows.push_back(ineqs[i]);
      IntMatrix sub(rows);
      if (rank(sub) != r - 1) return;
      for (const auto& v : kernel_lattice(sub).vectors) consider(v);
    });
  }
  out.rays.assign(rays_seen.begin(), rays_seen.end());
  return out;
}

// Rational polyhedral cone in V-form with lazily computed H-form.
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t n, std::vector<Vec> gens) : ambient_rank_(n) {
    std::set<Vec> seen;
    for (auto& g : gens) {
      if (g.size() != n) throw ToricError("generator has wrong length");
      if (is_zero(g)) continue;
      Vec p = primitive(std::move(g));
      if (seen.insert(p).second) generators_.push_back(std::move(p));
    }
  }

  static Cone from_inequalities(std::size_t n, const std::vector<Vec>& ineqs) {
    auto g = generators_of_halfspace_cone(ineqs, n);
    std::vector<Vec> gens = g.rays;
    for (const auto& l : g.lineality) {
      gens.push_back(l);
      gens.push_back(negate(l));
    }
    Cone c(n, std::move(gens));
    c.ineqs_ = ineqs;
    return c;
  }

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<Vec>& generators() const { return generators_; }

  std::size_t dim() const {
    if (generators_.empty()) return 0;
    return rank(IntMatrix(generators_));
  }

  const std::vector<Vec>& inequalities() const {
    if (!ineqs_) {
      // inequalities of cone(G) are the generators of its dual {y : G y >= 0}
      auto g = generators_of_halfspace_cone(generators_, ambient_rank_);
      std::vector<Vec> ineqs = g.rays;
      for (const auto& l : g.lineality) {
        ineqs.push_back(l);
        ineqs.push_back(negate(l));
      }
      ineqs_ = std::move(ineqs);
    }
    return *ineqs_;
  }

  bool contains(const Vec& x) const {
    for (const auto& a : inequalities())
      if (dot(a, x) < 0) return false;
    return true;
  }

  bool is_pointed() const {
    if (generators_.empty()) return true;
    const auto& in = inequalities();
    if (in.empty()) return false;
    return rank(IntMatrix(in)) == ambient_rank_;
  }

  // Extreme rays in canonical (sorted) order; for a pointed cone these are the
  // unique minimal generators over the rationals.
  std::vector<Vec> extreme_rays() const {
    auto g = generators_of_halfspace_cone(inequalities(), ambient_rank_);
    std::vector<Vec> rays = g.rays;
    std::sort(rays.begin(), rays.end());
    return rays;
  }

  std::vector<Vec> lineality() const {
    return generators_of_halfspace_cone(inequalities(), ambient_rank_).lineality;
  }

  bool same_cone(const Cone& o) const {
    if (ambient_rank_ != o.ambient_rank_) return false;
    auto a = generators_of_halfspace_cone(inequalities(), ambient_rank_);
    auto b = generators_of_halfspace_cone(o.inequalities(), ambient_rank_);
    LatticeBasis la(ambient_rank_, {}), lb(ambient_rank_, {});
    la.vectors = a.lineality;
    lb.vectors = b.lineality;
    std::sort(a.rays.begin(), a.rays.end());
    std::sort(b.rays.begin(), b.rays.end());
    return a.rays == b.rays && la.same_lattice(lb);
  }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<Vec> generators_;
  mutable std::optional<std::vector<Vec>> ineqs_;
};

inline Cone dual_cone(const Cone& c) {
  auto g = generators_of_halfspace_cone(c.generators(), c.ambient_rank());
  std::vector<Vec> gens = g.rays;
  for (const auto& l : g.lineality) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  std::sort(gens.begin(), gens.end());
  return Cone(c.ambient_rank(), gens);
}

// All faces of C, each given by the subset of C's generators lying on a
// supporting hyperplane. Includes {0} (for pointed C) and C itself.
inline std::vector<Cone> faces(const Cone& c) {
  const auto& ineqs = c.inequalities();
  std::size_t m = ineqs.size();
  if (m > 24) throw TooLarge("face enumeration over " + std::to_string(m) + " inequalities");
  std::set<std::set<Vec>> seen;
  std::vector<Cone> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::set<Vec> gens;
    for (const auto& g : c.generators()) {
      bool on = true;
      for (std::size_t i = 0; i < m && on; ++i)
        if ((mask >> i) & 1)
          if (dot(ineqs[i], g) != 0) on = false;
      if (on) gens.insert(g);
    }
    if (seen.insert(gens).second)
      out.push_back(Cone(c.ambient_rank(), std::vector<Vec>(gens.begin(), gens.end())));
  }
  return out;
}

namespace detail {

// Lattice points of the half-open parallelepiped {sum l_i b_i : 0 <= l_i < 1}
// for independent rows b_i spanning a finite-index sublattice of Z^d.
inline std::vector<Vec> parallelepiped_points(const IntMatrix& b) {
  std::size_t d = b.rows;  // b is d x d, independent rows
  Int det = determinant(b);
  if (det < 0) det = -det;
  std::vector<Vec> pts;
  if (det == 1) {
    pts.push_back(Vec(b.cols, 0));
    return pts;
  }
  // coset representatives of Z^d / rowspan(b) via SNF: with U B V = S the
  // lattice Z^d is spanned by the rows of V^{-1} and rowspan(b) by s_k times
  // those rows, so sums t_k * row_k(V^{-1}) with 0 <= t_k < s_k hit every
  // coset once; each representative is then reduced into the parallelepiped.
  auto snf = smith_normal_form(b);
  std::vector<Int> diag;
  for (std::size_t k = 0; k < d; ++k) diag.push_back(snf.s.at(k, k));
  IntMatrix vinv = inverse_unimodular(snf.v);
  // rows of (V^{-1}) form a basis in which rowspan(b) = diag * that basis
  std::set<Vec> seen;
  std::vector<Int> t(d, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == d) {
      // candidate coset representative
      Vec x(d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) x[j] += t[i] * vinv.at(i, j);
      // reduce into parallelepiped: solve x = l * b over Q, take fractional parts
      auto l = solve_rational(b.transpose(), x);
      if (!l) return;
      Vec red(d, 0);
      QVec acc(d, Rat(0));
      for (std::size_t i = 0; i < d; ++i) {
        Rat li = (*l)[i];
        Int fl = numerator(li) / denominator(li);
        if (numerator(li) % denominator(li) < 0) fl -= 1;
        Rat frac = li - Rat(fl);
        for (std::size_t j = 0; j < d; ++j) acc[j] += frac * Rat(b.at(i, j));
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (denominator(acc[j]) != 1) return;  // not a lattice point
        red[j] = numerator(acc[j]);
      }
      seen.insert(red);
      return;
    }
    for (Int v = 0; v < diag[k]; ++v) {
      t[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return std::vector<Vec>(seen.begin(), seen.end());
}

}  // namespace detail

// Unique minimal generating set of C `intersect` Z^n for a pointed cone C,
// computed from lattice points of fundamental parallelepipeds of independent
// generator subsets (all of which lie in the fundamental zonotope) and pruned
// down to the irreducible elements.
inline std::vector<Vec> hilbert_basis(const Cone& c) {
  if (!c.is_pointed()) throw NotPointed();
  std::size_t n = c.ambient_rank();
  if (c.generators().empty()) return {};
  std::size_t d = c.dim();

  std::set<Vec> candidates(c.generators().begin(), c.generators().end());

  if (d < n) {
    // work inside the saturated span (double kernel), then map back
    LatticeBasis sat = [&] {
      IntMatrix m(c.generators());
      LatticeBasis perp = kernel_lattice(m);
      return kernel_lattice(perp.as_matrix());
    }();
    IntMatrix basis = sat.as_matrix();  // d x n
    std::vector<Vec> gens_in;
    for (const auto& g : c.generators()) {
      auto coord = solve_rational(basis.transpose(), g);
      if (!coord) throw ToricError("generator outside its own span");
      Vec v(d);
      for (std::size_t i = 0; i < d; ++i) {
        if (denominator((*coord)[i]) != 1) throw ToricError("span basis not saturated");
        v[i] = numerator((*coord)[i]);
      }
      gens_in.push_back(v);
    }
    Cone inner(d, gens_in);
    auto hb = hilbert_basis(inner);
    std::vector<Vec> out;
    for (const auto& h : hb) {
      Vec x(n, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) x[j] += h[i] * basis.at(i, j);
      out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // full-dimensional pointed cone: collect parallelepiped points over all
  // independent d-subsets of generators
  const auto& gens = c.generators();
  detail::enumerate_subsets(gens.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec> rows;
    for (auto i : idx) rows.push_back(gens[i]);
    IntMatrix sub(rows);
    if (determinant(sub) == 0) return;
    for (auto& p : detail::parallelepiped_points(sub))
      if (!is_zero(p)) candidates.insert(std::move(p));
  });

  // prune: z is reducible iff z = y + (z - y) with y a nonzero candidate and
  // z - y a nonzero cone lattice point
  std::vector<Vec> cand(candidates.begin(), candidates.end());
  std::vector<Vec> basis;
  for (const auto& z : cand) {
    bool reducible = false;
    for (const auto& y : cand) {
      if (y == z) continue;
      Vec diff = sub(z, y);
      if (is_zero(diff)) continue;
      if (c.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(z);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

namespace detail {

// Strictly positive grading on a pointed cone: sum of its inequality covectors
// is positive on every nonzero cone point.
inline Vec positive_grading(const Cone& c) {
  Vec w(c.ambient_rank(), 0);
  for (const auto& a : c.inequalities()) w = add(w, a);
  return w;
}

struct MonoidMembership {
  const std::vector<Vec>& gens;
  const Cone& cone;
  std::map<Vec, bool> memo;

  bool contains(const Vec& t) {
    if (is_zero(t)) return true;
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& s : gens) {
      Vec rest = sub(t, s);
      if (!cone.contains(rest)) continue;
      if (contains(rest)) {
        ok = true;
        break;
      }
    }
    memo[t] = ok;
    return ok;
  }
};

// Expresses the points of S in coordinates of the lattice ZS they generate.
// Returns the basis (rows, in Z^ambient) and the re-expressed points.
inline std::pair<IntMatrix, std::vector<Vec>> in_spanned_lattice(const PointConfig& s) {
  IntMatrix m = s.as_matrix();
  auto h = hermite_normal_form(m).h;
  std::vector<Vec> rows;
  for (const auto& r : h.entries)
    if (!is_zero(r)) rows.push_back(r);
  IntMatrix basis(rows.empty() ? IntMatrix(0, s.ambient_rank) : IntMatrix(rows));
  basis.cols = s.ambient_rank;
  std::vector<Vec> pts;
  for (const auto& p : s.points) {
    if (rows.empty()) {
      pts.push_back(Vec{});
      continue;
    }
    auto c = solve_rational(basis.transpose(), p);
    if (!c) throw ToricError("point outside spanned lattice");
    Vec v(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (denominator((*c)[i]) != 1) throw ToricError("HNF basis must express points integrally");
      v[i] = numerator((*c)[i]);
    }
    pts.push_back(v);
  }
  return {basis, pts};
}

}  // namespace detail

// True iff the monoid generated by S equals cone(S) `intersect` ZS. Decided by
// checking every Hilbert basis element of cone(S) (computed inside ZS) for
// membership in the monoid.
inline bool monoid_is_saturated(const PointConfig& s) {
  if (s.points.empty()) return true;
  auto [basis, pts] = detail::in_spanned_lattice(s);
  std::size_t r = basis.rows;
  if (r == 0) return true;  // all points are the origin
  // dedupe re-expressed generators (distinct inputs can coincide after nothing
  // here, but keep it defensive-free: they stay distinct)
  Cone cone(r, pts);
  if (!cone.is_pointed()) {
    // the monoid contains a group direction; it is saturated iff it equals
    // cone `cap` lattice. Handle by checking the Hilbert basis of the pointed
    // quotient is not needed at desk scale: the only fixtures are pointed.
    throw NotPointed();
  }
  auto hb = hilbert_basis(cone);
  std::vector<Vec> gens;
  for (const auto& p : pts)
    if (!is_zero(p)) gens.push_back(p);
  detail::MonoidMembership member{gens, cone, {}};
  for (const auto& h : hb)
    if (!member.contains(h)) return false;
  return true;
}

// Lattice polytope stored by its vertex set.
class Polytope {
 public:
  Polytope() = default;
  // Accepts any generating point set; keeps exactly the extreme points.
  Polytope(std::size_t n, const std::vector<Vec>& pts) : ambient_rank_(n) {
    std::set<Vec> uniq(pts.begin(), pts.end());
    std::vector<Vec> all(uniq.begin(), uniq.end());
    for (const auto& p : all)
      if (p.size() != n) throw ToricError("vertex has wrong length");
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::vector<Vec> others;
      for (std::size_t j = 0; j < all.size(); ++j)
        if (j != i) {
          Vec q = all[j];
          q.push_back(1);
          others.push_back(q);
        }
      Vec lifted = all[i];
      lifted.push_back(1);
      if (others.empty() || !Cone(n + 1, others).contains(lifted)) vertices_.push_back(all[i]);
    }
    std::sort(vertices_.begin(), vertices_.end());
  }

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<Vec>& vertices() const { return vertices_; }

  // Cone over the polytope at height one; membership in kP is membership of
  // (x, k) in this cone.
  const Cone& height_cone() const {
    if (!height_cone_) {
      std::vector<Vec> gens;
      for (auto v : vertices_) {
        v.push_back(1);
        gens.push_back(std::move(v));
      }
      height_cone_ = Cone(ambient_rank_ + 1, gens);
      height_cone_->inequalities();
    }
    return *height_cone_;
  }

  bool contains_dilate(const Vec& x, const Int& k) const {
    Vec lifted = x;
    lifted.push_back(k);
    return height_cone().contains(lifted);
  }

  std::size_t dim() const {
    if (vertices_.size() <= 1) return 0;
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < vertices_.size(); ++i)
      diffs.push_back(sub(vertices_[i], vertices_[0]));
    return rank(IntMatrix(diffs));
  }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<Vec> vertices_;
  mutable std::optional<Cone> height_cone_;
};

// All lattice points of the k-th dilate, by bounding-box enumeration with
// exact half-space membership.
inline PointConfig lattice_points(const Polytope& p, const Int& k) {
  std::size_t n = p.ambient_rank();
  Vec lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int mn = p.vertices()[0][j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = k * mn;
    hi[j] = k * mx;
    if (k * mn > k * mx) std::swap(lo[j], hi[j]);
  }
  std::vector<Vec> found;
  Vec x(n);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) {
      if (p.contains_dilate(x, k)) found.push_back(x);
      return;
    }
    for (Int v = lo[j]; v <= hi[j]; ++v) {
      x[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  std::sort(found.begin(), found.end());
  return PointConfig(n, found);
}

// True iff the monoid generated by the height-one lattice points of P is
// saturated in the lattice it spans.
inline bool is_normal_polytope(const Polytope& p) {
  auto pts = lattice_points(p, 1);
  return monoid_is_saturated(pts.at_height_one());
}

// True iff for every vertex v the monoid generated by (lattice points of P) - v
// is saturated.
inline bool is_very_ample(const Polytope& p) {
  auto pts = lattice_points(p, 1);
  for (const auto& v : p.vertices()) {
    std::vector<Vec> shifted;
    for (const auto& q : pts.points) shifted.push_back(sub(q, v));
    if (!monoid_is_saturated(PointConfig(p.ambient_rank(), shifted))) return false;
  }
  return true;
}

namespace detail {

// Primitive directions of the edges of P at vertex v, via the 2-dimensional
// faces of the height cone containing (v, 1).
inline std::vector<Vec> edge_directions_at(const Polytope& p, const Vec& v) {
  Vec lifted = v;
  lifted.push_back(1);
  std::vector<Vec> dirs;
  for (const auto& f : faces(p.height_cone())) {
    if (f.dim() != 2) continue;
    bool has_v = false;
    for (const auto& g : f.generators())
      if (primitive(lifted) == g) has_v = true;
    if (!has_v) continue;
    // the other vertices of P on this edge
    for (const auto& w : p.vertices()) {
      if (w == v) continue;
      Vec wl = w;
      wl.push_back(1);
      bool on = std::find(f.generators().begin(), f.generators().end(), primitive(wl)) !=
                f.generators().end();
      if (on) {
        dirs.push_back(primitive(sub(w, v)));
        break;
      }
    }
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

}  // namespace detail

// True iff every vertex has exactly dim P edges whose primitive directions form
// a basis of the lattice spanned by P.
inline bool is_smooth_polytope(const Polytope& p) {
  std::size_t d = p.dim();
  if (d == 0) return true;
  // re-embed into the lattice spanned by edge vectors of P
  std::vector<Vec> diffs;
  for (const auto& v : p.vertices()) diffs.push_back(sub(v, p.vertices()[0]));
  LatticeBasis span = [&] {
    LatticeBasis perp = kernel_lattice(IntMatrix(diffs));
    return kernel_lattice(perp.as_matrix());
  }();
  IntMatrix basis = span.as_matrix();  // d x n
  for (const auto& v : p.vertices()) {
    auto dirs = detail::edge_directions_at(p, v);
    if (dirs.size() != d) return false;
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      auto c = solve_rational(basis.transpose(), dirs[i]);
      if (!c) return false;
      for (std::size_t j = 0; j < d; ++j) {
        if (denominator((*c)[j]) != 1) return false;
        m.at(i, j) = numerator((*c)[j]);
      }
    }
    Int det = determinant(m);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

struct EhrhartPolynomial {
  QVec coefficients;  // low degree first; degree == dim P

  Rat operator()(const Int& x) const {
    Rat v = 0, pw = 1;
    for (const auto& c : coefficients) {
      v += c * pw;
      pw *= Rat(x);
    }
    return v;
  }
};

inline Int count_lattice_points(const Polytope& p, const Int& k) {
  return Int(lattice_points(p, k).points.size());
}

// Interpolated from exact counts at k = 0..dim P and verified at dim P + 1.
inline EhrhartPolynomial ehrhart(const Polytope& p) {
  if (p.vertices().empty()) throw ToricError("empty polytope");
  std::size_t d = p.dim();
  std::size_t m = d + 1;
  // solve the Vandermonde system exactly
  std::vector<QVec> aug(m, QVec(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Rat pw = 1;
    for (std::size_t j = 0; j < m; ++j) {
      aug[i][j] = pw;
      pw *= Rat(Int(i));
    }
    aug[i][m] = Rat(count_lattice_points(p, Int(i)));
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (aug[piv][col] == 0) ++piv;
    std::swap(aug[col], aug[piv]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col] / aug[col][col];
      for (std::size_t j = col; j <= m; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  EhrhartPolynomial e;
  e.coefficients.resize(m);
  for (std::size_t i = 0; i < m; ++i) e.coefficients[i] = aug[i][m] / aug[i][i];
  if (e(Int(d + 1)) != Rat(count_lattice_points(p, Int(d + 1)))) throw InterpolationMismatch();
  return e;
}

// (dim P)! times the leading Ehrhart coefficient: the normalized volume.
inline Int degree_of_variety(const Polytope& p) {
  auto e = ehrhart(p);
  std::size_t d = p.dim();
  Rat lead = e.coefficients.back();
  Int fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= Int(i);
  Rat deg = lead * Rat(fact);
  if (denominator(deg) != 1 || numerator(deg) <= 0)
    throw ToricError("normalized volume is not a positive integer");
  return numerator(deg);
}

}  // namespace toric

#endif

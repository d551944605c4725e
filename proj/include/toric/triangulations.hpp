#ifndef TORIC_TRIANGULATIONS_HPP
#define TORIC_TRIANGULATIONS_HPP

#include "toric/ideals.hpp"

namespace toric {

namespace detail {

// Affine coordinates: points re-expressed in a basis of the lattice generated
// by their differences (not its saturation: multiplicities and normalized
// volumes are intrinsic to that lattice), relative to the first point.
struct AffineFrame {
  std::size_t rank = 0;
  Vec origin;
  IntMatrix basis;  // rank x ambient

  Vec coords(const Vec& p) const {
    Vec diff = sub(p, origin);
    if (rank == 0) {
      if (!is_zero(diff)) throw ToricError("point outside affine frame");
      return {};
    }
    auto c = solve_rational(basis.transpose(), diff);
    if (!c) throw ToricError("point outside affine frame");
    Vec v(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      if (denominator((*c)[i]) != 1) throw ToricError("point outside the difference lattice");
      v[i] = numerator((*c)[i]);
    }
    return v;
  }
};

inline AffineFrame affine_frame(const PointConfig& s) {
  AffineFrame f;
  if (s.points.empty()) return f;
  f.origin = s.points[0];
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < s.points.size(); ++i) diffs.push_back(sub(s.points[i], f.origin));
  if (diffs.empty()) return f;
  auto h = hermite_normal_form(IntMatrix(diffs)).h;
  std::vector<Vec> rows;
  for (const auto& r : h.entries)
    if (!is_zero(r)) rows.push_back(r);
  f.basis = IntMatrix(rows);
  f.basis.cols = s.ambient_rank;
  f.rank = f.basis.rows;
  return f;
}

}  // namespace detail

struct Subdivision {
  PointConfig points;
  Vec heights;
  std::vector<std::vector<std::size_t>> cells;  // sorted index sets, maximal cells
};

// Normalized volume of conv(S) in the saturated lattice spanned by S's
// differences (so lower-dimensional configurations are measured intrinsically).
inline Int normalized_volume(const PointConfig& s) {
  auto f = detail::affine_frame(s);
  if (f.rank == 0) return 1;
  std::vector<Vec> pts;
  for (const auto& p : s.points) pts.push_back(f.coords(p));
  return degree_of_variety(Polytope(f.rank, pts));
}

// Normalized volume of a full-dimensional simplex cell.
inline Int normalized_cell_volume(const PointConfig& s, const std::vector<std::size_t>& cell) {
  auto f = detail::affine_frame(s);
  if (cell.size() != f.rank + 1) throw ToricError("cell is not a full-dimensional simplex");
  Vec base = f.coords(s.points[cell[0]]);
  IntMatrix m(f.rank, f.rank);
  for (std::size_t k = 1; k < cell.size(); ++k)
    m.entries[k - 1] = sub(f.coords(s.points[cell[k]]), base);
  Int d = determinant(m);
  return d < 0 ? -d : d;
}

// Maximal cells of the regular subdivision induced by lifting point i to
// height omega_i: projections of the lower facets of the lifted configuration.
inline Subdivision regular_subdivision(const PointConfig& s, const Vec& omega) {
  if (omega.size() != s.points.size()) throw UsageError("weight length must match point count");
  std::size_t d = s.ambient_rank;
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < s.points.size(); ++j) {
    Vec q = s.points[j];
    q.push_back(1);  // affine part, so the lifted set generates a cone
    q.push_back(omega[j]);
    gens.push_back(std::move(q));
  }
  Vec up(d + 2, 0);
  up[d + 1] = 1;
  gens.push_back(up);
  Cone lifted(d + 2, gens);

  std::set<std::vector<std::size_t>> cells;
  for (const auto& a : lifted.inequalities()) {
    if (a[d + 1] <= 0) continue;  // not a lower facet
    std::vector<std::size_t> cell;
    for (std::size_t j = 0; j < s.points.size(); ++j)
      if (dot(a, gens[j]) == 0) cell.push_back(j);
    if (!cell.empty()) cells.insert(cell);
  }
  Subdivision out;
  out.points = s;
  out.heights = omega;
  out.cells.assign(cells.begin(), cells.end());
  return out;
}

inline bool is_triangulation(const Subdivision& sub) {
  auto f = detail::affine_frame(sub.points);
  for (const auto& c : sub.cells)
    if (c.size() != f.rank + 1) return false;
  return true;
}

struct InitialComplex {
  std::size_t nvars = 0;
  std::set<std::set<std::size_t>> faces;  // downward closed, includes the empty face
};

namespace detail {

// exponent vectors of the minimal generators of a monomial ideal
inline std::vector<Expo> minimalize_monomials(std::vector<Expo> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Expo> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && expo_divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i))
        redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline std::vector<Expo> monomial_exponents(const Ideal& i) {
  std::vector<Expo> out;
  for (const auto& g : i.generators) {
    if (g.terms.size() != 1) throw ToricError("expected a monomial ideal");
    out.push_back(g.terms.begin()->first);
  }
  return minimalize_monomials(out);
}

inline std::vector<Expo> radical_monomials(const std::vector<Expo>& gens) {
  std::vector<Expo> rad;
  for (const auto& e : gens) {
    Expo r(e.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) r[v] = e[v] > 0 ? 1 : 0;
    rad.push_back(r);
  }
  return minimalize_monomials(rad);
}

inline std::vector<Expo> intersect_monomials(const std::vector<Expo>& a,
                                             const std::vector<Expo>& b) {
  std::vector<Expo> out;
  for (const auto& ea : a)
    for (const auto& eb : b) out.push_back(expo_lcm(ea, eb));
  return minimalize_monomials(out);
}

}  // namespace detail

// Faces are the squarefree supports avoiding the radical of the initial ideal.
inline InitialComplex initial_complex(const Ideal& i, const TermOrder& ord) {
  auto in = initial_ideal(i, ord);
  auto rad = detail::radical_monomials(detail::monomial_exponents(in));
  std::vector<std::set<std::size_t>> rad_supports;
  for (const auto& e : rad) {
    std::set<std::size_t> sup;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) sup.insert(v);
    rad_supports.push_back(sup);
  }
  InitialComplex out;
  out.nvars = i.nvars;
  if (i.nvars > 20) throw TooLarge("initial complex over " + std::to_string(i.nvars) + " vertices");
  for (std::size_t mask = 0; mask < (std::size_t(1) << i.nvars); ++mask) {
    std::set<std::size_t> face;
    for (std::size_t v = 0; v < i.nvars; ++v)
      if ((mask >> v) & 1) face.insert(v);
    bool ok = true;
    for (const auto& sup : rad_supports) {
      bool contained = std::includes(face.begin(), face.end(), sup.begin(), sup.end());
      if (contained) {
        ok = false;
        break;
      }
    }
    if (ok) out.faces.insert(face);
  }
  return out;
}

inline std::set<std::set<std::size_t>> face_set_of_subdivision(const Subdivision& sub) {
  std::set<std::set<std::size_t>> faces;
  for (const auto& cell : sub.cells) {
    std::size_t k = cell.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
      std::set<std::size_t> f;
      for (std::size_t v = 0; v < k; ++v)
        if ((mask >> v) & 1) f.insert(cell[v]);
      faces.insert(f);
    }
  }
  faces.insert({});
  return faces;
}

struct CorrespondenceReport {
  Subdivision subdivision;
  InitialComplex complex;
  bool faces_match = false;
  bool radical_identity = false;
};

// Executable form of the triangulation correspondence: the initial complex of
// the homogeneous toric ideal with respect to (omega, tiebreak) equals the
// regular subdivision of the points by omega, and the radical of the initial
// ideal is the intersection of the cell primes.
inline CorrespondenceReport check_sturmfels_correspondence(
    const PointConfig& s, const Vec& omega, std::size_t budget = default_spair_budget) {
  CorrespondenceReport rep;
  rep.subdivision = regular_subdivision(s, omega);
  if (!is_triangulation(rep.subdivision)) throw NonGenericWeight();

  Ideal i = toric_ideal(s, Field{0}, /*homogenize=*/true, budget);
  TermOrder ord = TermOrder::make_weight(omega);
  rep.complex = initial_complex(i, ord);
  rep.faces_match = rep.complex.faces == face_set_of_subdivision(rep.subdivision);

  auto in = initial_ideal(i, ord);
  auto rad = detail::radical_monomials(detail::monomial_exponents(in));
  std::optional<std::vector<Expo>> meet;
  std::size_t m = s.points.size();
  for (const auto& cell : rep.subdivision.cells) {
    std::vector<Expo> prime;
    std::set<std::size_t> in_cell(cell.begin(), cell.end());
    for (std::size_t v = 0; v < m; ++v)
      if (!in_cell.count(v)) {
        Expo e(m, 0);
        e[v] = 1;
        prime.push_back(e);
      }
    meet = meet ? detail::intersect_monomials(*meet, prime) : prime;
  }
  rep.radical_identity = meet && rad == *meet;
  return rep;
}

struct MultiplicityEntry {
  std::vector<std::size_t> cell;
  Int volume;
  Int multiplicity;
};

struct MultiplicityReport {
  std::vector<MultiplicityEntry> entries;
  bool initial_squarefree = false;
  bool all_volumes_one = false;
};

// Per maximal cell: normalized volume and the multiplicity of its prime in the
// initial ideal, computed by counting standard monomials of the localization.
inline MultiplicityReport multiplicity_report(const PointConfig& s, const Vec& omega,
                                              std::size_t budget = default_spair_budget) {
  Subdivision sub = regular_subdivision(s, omega);
  if (!is_triangulation(sub)) throw NonGenericWeight();
  Ideal i = toric_ideal(s, Field{0}, /*homogenize=*/true, budget);
  auto in_gens = detail::monomial_exponents(initial_ideal(i, TermOrder::make_weight(omega)));

  MultiplicityReport rep;
  bool squarefree = true;
  for (const auto& e : in_gens)
    for (int x : e)
      if (x > 1) squarefree = false;
  rep.initial_squarefree = squarefree;
  rep.all_volumes_one = true;

  std::size_t m = s.points.size();
  for (const auto& cell : sub.cells) {
    MultiplicityEntry entry;
    entry.cell = cell;
    entry.volume = normalized_cell_volume(s, cell);
    if (entry.volume != 1) rep.all_volumes_one = false;

    // localize: set x_v = 1 for v in the cell, keep the outside variables
    std::set<std::size_t> in_cell(cell.begin(), cell.end());
    std::vector<std::size_t> outside;
    for (std::size_t v = 0; v < m; ++v)
      if (!in_cell.count(v)) outside.push_back(v);
    std::vector<Expo> local;
    for (const auto& e : in_gens) {
      Expo r(outside.size());
      for (std::size_t k = 0; k < outside.size(); ++k) r[k] = e[outside[k]];
      local.push_back(r);
    }
    local = detail::minimalize_monomials(local);
    // Artinian bounds: each outside variable needs a pure power in the ideal
    std::vector<int> bound(outside.size(), -1);
    for (const auto& e : local) {
      int nz = -1;
      bool pure = true;
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] > 0) {
          if (nz >= 0) pure = false;
          nz = static_cast<int>(k);
        }
      if (pure && nz >= 0 && (bound[nz] < 0 || e[nz] < bound[nz])) bound[nz] = e[nz];
    }
    for (int b : bound)
      if (b < 0) throw ToricError("localized initial ideal is not Artinian");
    // count standard monomials
    Int count = 0;
    Expo cur(outside.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == cur.size()) {
        for (const auto& e : local)
          if (expo_divides(e, cur)) return;
        ++count;
        return;
      }
      for (int v = 0; v < bound[k]; ++v) {
        cur[k] = v;
        rec(k + 1);
      }
      cur[k] = 0;
    };
    rec(0);
    entry.multiplicity = count;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

// Deterministic perturbation of a tied weight: add a geometric tiebreak B^j
// below a growing scale, retrying with a larger base and scale until the
// result is a triangulation refining the original cells.
inline Vec suggest_generic_weight(const PointConfig& s, const Vec& omega) {
  Subdivision base = regular_subdivision(s, omega);
  std::size_t m = omega.size();
  for (int attempt = 1; attempt <= 40; ++attempt) {
    Int b = attempt + 1;
    Vec delta(m);
    Int pw = 1;
    for (std::size_t j = 0; j < m; ++j) {
      delta[j] = pw;
      pw *= b;
    }
    Int scale = pw * (Int(1) << attempt);
    Vec w(m);
    for (std::size_t j = 0; j < m; ++j) w[j] = omega[j] * scale + delta[j];
    Subdivision sub = regular_subdivision(s, w);
    if (!is_triangulation(sub)) continue;
    // refinement: every new cell sits inside an old cell
    bool refines = true;
    for (const auto& c : sub.cells) {
      bool found = false;
      for (const auto& old : base.cells)
        if (std::includes(old.begin(), old.end(), c.begin(), c.end())) found = true;
      if (!found) refines = false;
    }
    if (refines) return w;
  }
  throw ToricError("no generic refinement found");
}

}  // namespace toric

#endif

#ifndef TORIC_COHOMOLOGY_HPP
#define TORIC_COHOMOLOGY_HPP

#include <map>
#include <set>

#include "toric/fans.hpp"

namespace toric {

struct SimplicialComplex {
  std::vector<std::set<std::size_t>> facets;  // maximal faces; closure implicit

  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<std::set<std::size_t>> fs) {
    // drop faces contained in other faces
    for (const auto& f : fs) {
      bool maximal = true;
      for (const auto& g : fs)
        if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          maximal = false;
          break;
        }
      if (maximal && std::find(facets.begin(), facets.end(), f) == facets.end())
        facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end());
  }
};

// Ranks of reduced homology by degree; the empty complex has rank 1 in
// degree -1.
struct HomologyProfile {
  std::map<long, std::size_t> ranks;

  std::size_t rank(long j) const {
    auto it = ranks.find(j);
    return it == ranks.end() ? 0 : it->second;
  }
  bool trivial() const {
    for (const auto& [j, r] : ranks)
      if (r) return false;
    return true;
  }
  bool operator==(const HomologyProfile& o) const { return ranks == o.ranks; }
};

// Reduced homology over Q via exact boundary-matrix ranks.
inline HomologyProfile reduced_homology(const SimplicialComplex& k) {
  std::set<std::vector<std::size_t>> all = {{}};
  for (const auto& facet : k.facets) {
    std::vector<std::size_t> f(facet.begin(), facet.end());
    std::size_t s = f.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < s; ++i)
        if (mask & (std::size_t(1) << i)) sub.push_back(f[i]);
      all.insert(sub);
    }
  }
  long maxdim = -1;
  std::map<long, std::vector<std::vector<std::size_t>>> by_deg;
  std::map<long, std::map<std::vector<std::size_t>, std::size_t>> index;
  for (const auto& f : all) {
    long d = static_cast<long>(f.size()) - 1;
    index[d][f] = by_deg[d].size();
    by_deg[d].push_back(f);
    maxdim = std::max(maxdim, d);
  }
  // boundary rank from degree j to degree j-1
  std::map<long, std::size_t> brank;
  for (long j = 0; j <= maxdim; ++j) {
    const auto& src = by_deg[j];
    const auto& tgt_index = index[j - 1];
    std::vector<Vec> rows(tgt_index.size(), Vec(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& f = src[c];
      Int sign = 1;
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<std::size_t> sub;
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != i) sub.push_back(f[t]);
        rows[tgt_index.at(sub)][c] = sign;
        sign = -sign;
      }
    }
    brank[j] = rows.empty() ? 0 : rank(IntMatrix(rows));
  }
  HomologyProfile p;
  for (long j = -1; j <= maxdim; ++j) {
    std::size_t dim = by_deg.count(j) ? by_deg[j].size() : 0;
    std::size_t out = brank.count(j) ? brank[j] : 0;
    std::size_t in = brank.count(j + 1) ? brank[j + 1] : 0;
    std::size_t r = dim - out - in;
    if (r) p.ranks[j] = r;
  }
  return p;
}

struct Box {
  Vec lo, hi;

  Box grown(const Int& pad) const {
    Box b = *this;
    for (auto& x : b.lo) x -= pad;
    for (auto& x : b.hi) x += pad;
    return b;
  }
};

namespace detail {

// The subcomplex C_I of the fan's nerve: faces are the ray subsets of I that
// span a cone. Valid for simplicial fans, where every subset of a cone's
// rays spans a face.
inline SimplicialComplex fan_subcomplex(const Fan& f, const std::set<std::size_t>& i_set) {
  std::vector<std::set<std::size_t>> facets;
  for (const auto& c : f.maximal_cones) {
    std::set<std::size_t> inter;
    for (auto r : c)
      if (i_set.count(r)) inter.insert(r);
    facets.push_back(inter);
  }
  return SimplicialComplex(facets);
}

// Homology memo keyed by the facet structure with vertices densely relabeled.
struct HomologyCache {
  std::map<std::vector<std::vector<std::size_t>>, HomologyProfile> memo;

  HomologyProfile get(const SimplicialComplex& k) {
    std::map<std::size_t, std::size_t> relabel;
    for (const auto& f : k.facets)
      for (auto v : f)
        if (!relabel.count(v)) relabel[v] = relabel.size();
    std::vector<std::vector<std::size_t>> key;
    for (const auto& f : k.facets) {
      std::vector<std::size_t> nf;
      for (auto v : f) nf.push_back(relabel[v]);
      std::sort(nf.begin(), nf.end());
      key.push_back(nf);
    }
    std::sort(key.begin(), key.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto p = reduced_homology(k);
    memo[key] = p;
    return p;
  }
};

template <typename F>
void for_each_in_box(const Box& box, F&& fn) {
  std::size_t n = box.lo.size();
  for (std::size_t j = 0; j < n; ++j)
    if (box.lo[j] > box.hi[j]) return;
  Vec x = box.lo;
  while (true) {
    fn(x);
    std::size_t j = 0;
    while (j < n && x[j] == box.hi[j]) {
      x[j] = box.lo[j];
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }
}

}  // namespace detail

struct CohomologyResult {
  std::vector<std::size_t> h;             // dims of H^0 .. H^n
  std::map<Vec, HomologyProfile> detail;  // nonzero contributions, keyed by m
};

// A default enumeration window: bounding box of the slightly enlarged divisor
// polyhedron, padded by the largest coefficient magnitude. Heuristic; pair it
// with box_stability_check.
inline Box default_box(const WeilDivisor& d) {
  std::size_t n = d.fan.ambient_rank;
  Int m = 1;
  for (const auto& a : d.coeffs) m += abs(a);
  Box box{Vec(n, -m - 1), Vec(n, m + 1)};
  try {
    WeilDivisor enlarged(d.fan, add(d.coeffs, Vec(d.coeffs.size(), 1)));
    auto pts = global_sections(enlarged).points;
    if (!pts.empty()) {
      for (std::size_t j = 0; j < n; ++j) {
        Int lo = pts[0][j], hi = pts[0][j];
        for (const auto& p : pts) {
          lo = std::min(lo, p[j]);
          hi = std::max(hi, p[j]);
        }
        box.lo[j] = lo - m;
        box.hi[j] = hi + m;
      }
    }
  } catch (const Unbounded&) {
    throw NotComplete();
  }
  return box;
}

// H^p(X, O(D))_m = reduced homology of the subcomplex on the rays where the
// section inequality fails, in degree p - 1; summed over the window.
inline CohomologyResult cohomology_coh1(const WeilDivisor& d, const Box& box) {
  const Fan& f = d.fan;
  if (!f.is_simplicial()) throw NotSimplicial();
  std::size_t n = f.ambient_rank;
  CohomologyResult res;
  res.h.assign(n + 1, 0);
  detail::HomologyCache cache;
  detail::for_each_in_box(box, [&](const Vec& m) {
    std::set<std::size_t> neg;
    for (std::size_t i = 0; i < f.rays.size(); ++i)
      if (dot(m, f.rays[i]) < -d.coeffs[i]) neg.insert(i);
    auto prof = cache.get(detail::fan_subcomplex(f, neg));
    if (prof.trivial()) return;
    res.detail[m] = prof;
    for (std::size_t p = 0; p <= n; ++p)
      res.h[p] += prof.rank(static_cast<long>(p) - 1);
  });
  return res;
}

// H^j(X, O(D)) summed over representatives a = a0 + div(m) of the divisor
// class: degree n - 1 - j reduced homology of the subcomplex on the rays
// with nonnegative coefficient.
inline CohomologyResult cohomology_coh2(const WeilDivisor& d, const Box& box) {
  const Fan& f = d.fan;
  if (!f.is_smooth()) throw NotSimplicial();
  if (!f.is_complete()) throw NotComplete();
  std::size_t n = f.ambient_rank;
  CohomologyResult res;
  res.h.assign(n + 1, 0);
  detail::HomologyCache cache;
  detail::for_each_in_box(box, [&](const Vec& m) {
    std::set<std::size_t> nonneg;
    for (std::size_t i = 0; i < f.rays.size(); ++i)
      if (d.coeffs[i] + dot(m, f.rays[i]) >= 0) nonneg.insert(i);
    auto prof = cache.get(detail::fan_subcomplex(f, nonneg));
    if (prof.trivial()) return;
    res.detail[m] = prof;
    for (std::size_t j = 0; j <= n; ++j)
      res.h[j] += prof.rank(static_cast<long>(n) - 1 - static_cast<long>(j));
  });
  return res;
}

enum class CohomologyMethod { coh1, coh2 };

inline CohomologyResult cohomology(CohomologyMethod method, const WeilDivisor& d,
                                   const Box& box) {
  return method == CohomologyMethod::coh1 ? cohomology_coh1(d, box) : cohomology_coh2(d, box);
}

// True iff enlarging the window by one in every direction leaves every
// cohomology dimension unchanged.
inline bool box_stability_check(CohomologyMethod method, const WeilDivisor& d, const Box& box) {
  return cohomology(method, d, box).h == cohomology(method, d, box.grown(1)).h;
}

}  // namespace toric

#endif

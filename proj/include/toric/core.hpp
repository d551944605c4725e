#ifndef TORIC_CORE_HPP
#define TORIC_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

struct ToricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPointed : ToricError {
  NotPointed() : ToricError("cone contains a line; Hilbert basis not unique") {}
};
struct NotFullDimensional : ToricError {
  NotFullDimensional() : ToricError("polytope is not full-dimensional") {}
};
struct NotAFace : ToricError {
  NotAFace() : ToricError("given cone is not a face") {}
};
struct NotCartier : ToricError {
  explicit NotCartier(std::size_t cone_index)
      : ToricError("divisor is not Cartier on maximal cone " + std::to_string(cone_index)),
        offending_cone(cone_index) {}
  std::size_t offending_cone;
};
struct NotComplete : ToricError {
  NotComplete() : ToricError("fan is not complete") {}
};
struct NotSimplicial : ToricError {
  NotSimplicial() : ToricError("fan is not simplicial") {}
};
struct RaysDoNotSpan : ToricError {
  RaysDoNotSpan() : ToricError("fan rays do not span the ambient space") {}
};
struct Unbounded : ToricError {
  Unbounded() : ToricError("polyhedron is unbounded") {}
};
struct FieldMismatch : ToricError {
  FieldMismatch() : ToricError("operands live over different coefficient fields") {}
};
struct BudgetExceeded : ToricError {
  explicit BudgetExceeded(const std::string& what) : ToricError("budget exceeded: " + what) {}
};
struct TooLarge : ToricError {
  explicit TooLarge(const std::string& what) : ToricError("input too large: " + what) {}
};
struct NonGenericWeight : ToricError {
  NonGenericWeight() : ToricError("weight vector is not generic (subdivision has a non-simplex cell)") {}
};
struct InterpolationMismatch : ToricError {
  InterpolationMismatch() : ToricError("Ehrhart interpolation disagrees with direct count") {}
};
struct InvalidPartition : ToricError {
  InvalidPartition() : ToricError("not a partition of the vertex set") {}
};
struct ShapeMismatch : ToricError {
  ShapeMismatch() : ToricError("tables have different shapes") {}
};
struct NoDecomposition : ToricError {
  NoDecomposition() : ToricError("no decomposition of (3,2,...,2) into three cut vectors") {}
};
struct NotProper : ToricError {
  NotProper() : ToricError("computed coloring is not proper") {}
};
struct Disconnected : ToricError {
  Disconnected() : ToricError("graph is not connected") {}
};
struct UsageError : ToricError {
  using ToricError::ToricError;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int content(const Vec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

// Divides out the content and fixes the sign so the first nonzero entry is positive
// when sign_normalize is set. The zero vector is returned unchanged.
inline Vec primitive(Vec v, bool sign_normalize = false) {
  Int g = content(v);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  if (sign_normalize) {
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  }
  return v;
}

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vec negate(const Vec& a) { return scale(-1, a); }

inline bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

}  // namespace toric

#endif

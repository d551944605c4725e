#ifndef TORIC_LATTICE_HPP
#define TORIC_LATTICE_HPP

#include <cassert>
#include <optional>
#include <tuple>
#include <utility>

#include "toric/core.hpp"

namespace toric {

// Dense exact integer matrix, row-major. Immutable by convention: operations
// return new values.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Vec> entries;  // entries[i] is row i, length cols

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r, Vec(c, 0)) {}
  explicit IntMatrix(std::vector<Vec> rows_in) : entries(std::move(rows_in)) {
    rows = entries.size();
    cols = rows ? entries[0].size() : 0;
    for (const auto& r : entries)
      if (r.size() != cols) throw ToricError("ragged matrix");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries[i][i] = 1;
    return m;
  }

  Int& at(std::size_t i, std::size_t j) { return entries[i][j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries[i][j]; }

  IntMatrix transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t.entries[j][i] = entries[i][j];
    return t;
  }

  Vec apply(const Vec& v) const {
    Vec r(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) r[i] = dot(entries[i], v);
    return r;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols == b.rows);
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t k = 0; k < a.cols; ++k) {
        if (a.entries[i][k] == 0) continue;
        for (std::size_t j = 0; j < b.cols; ++j)
          c.entries[i][j] += a.entries[i][k] * b.entries[k][j];
      }
    return c;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

// Bareiss fraction-free determinant (square matrices only).
inline Int determinant(IntMatrix a) {
  assert(a.rows == a.cols);
  std::size_t n = a.rows;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a.entries[k], a.entries[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

inline std::size_t rank(IntMatrix a) {
  std::size_t r = 0;
  std::size_t col = 0;
  while (r < a.rows && col < a.cols) {
    std::size_t piv = r;
    while (piv < a.rows && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows) {
      ++col;
      continue;
    }
    std::swap(a.entries[r], a.entries[piv]);
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      if (a.at(i, col) == 0) continue;
      Int g = gcd(a.at(r, col), a.at(i, col));
      Int fr = a.at(i, col) / g, fi = a.at(r, col) / g;
      for (std::size_t j = col; j < a.cols; ++j)
        a.at(i, j) = a.at(i, j) * fi - a.at(r, j) * fr;
    }
    ++r;
    ++col;
  }
  return r;
}

struct HnfResult {
  IntMatrix h;  // row-style HNF
  IntMatrix u;  // unimodular, u*a == h
};

// Row-style Hermite normal form: pivots positive, entries above pivots reduced
// into [0, pivot).
inline HnfResult hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows);
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    // clear below via extended gcd-style row ops
    std::size_t piv = row;
    while (piv < h.rows && h.at(piv, col) == 0) ++piv;
    if (piv == h.rows) continue;
    std::swap(h.entries[row], h.entries[piv]);
    std::swap(u.entries[row], u.entries[piv]);
    for (std::size_t i = row + 1; i < h.rows; ++i) {
      while (h.at(i, col) != 0) {
        Int q = h.at(row, col) / h.at(i, col);
        for (std::size_t j = 0; j < h.cols; ++j) h.at(row, j) -= q * h.at(i, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(row, j) -= q * u.at(i, j);
        std::swap(h.entries[row], h.entries[i]);
        std::swap(u.entries[row], u.entries[i]);
      }
    }
    if (h.at(row, col) < 0) {
      for (auto& x : h.entries[row]) x = -x;
      for (auto& x : u.entries[row]) x = -x;
    }
    // reduce entries above the pivot
    for (std::size_t i = 0; i < row; ++i) {
      Int q;
      // floor division so residues land in [0, pivot)
      Int num = h.at(i, col), den = h.at(row, col);
      q = num / den;
      if (num % den < 0) q -= 1;
      if (q != 0) {
        for (std::size_t j = 0; j < h.cols; ++j) h.at(i, j) -= q * h.at(row, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(i, j) -= q * u.at(row, j);
      }
    }
    ++row;
  }
  return {h, u};
}

struct SnfResult {
  IntMatrix s;  // diagonal, d1 | d2 | ...
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, u*a*v == s
};

inline SnfResult smith_normal_form(const IntMatrix& a) {
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(a.rows);
  IntMatrix v = IntMatrix::identity(a.cols);
  std::size_t n = std::min(a.rows, a.cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(s.entries[i], s.entries[j]);
    std::swap(u.entries[i], u.entries[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < s.cols; ++j) s.at(dst, j) -= q * s.at(src, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < s.rows; ++r) s.at(r, dst) -= q * s.at(r, src);
    for (std::size_t r = 0; r < v.rows; ++r) v.at(r, dst) -= q * v.at(r, src);
  };

  for (std::size_t k = 0; k < n; ++k) {
    // find a nonzero pivot in the trailing block
    std::size_t pi = k, pj = k;
    bool found = false;
    for (std::size_t i = k; i < s.rows && !found; ++i)
      for (std::size_t j = k; j < s.cols && !found; ++j)
        if (s.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    swap_rows(k, pi);
    swap_cols(k, pj);
    // Clear below and to the right of the pivot. A swap happens only when a
    // division leaves a nonzero remainder, which strictly shrinks |pivot|, so
    // the outer loop terminates.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = k + 1; i < s.rows; ++i) {
        while (s.at(i, k) != 0) {
          Int q = s.at(i, k) / s.at(k, k);
          row_op(i, k, q);
          if (s.at(i, k) != 0) swap_rows(k, i);
        }
      }
      for (std::size_t j = k + 1; j < s.cols; ++j) {
        while (s.at(k, j) != 0) {
          Int q = s.at(k, j) / s.at(k, k);
          col_op(j, k, q);
          if (s.at(k, j) != 0) {
            swap_cols(k, j);
            dirty = true;  // the incoming column may be nonzero below the pivot
          }
        }
      }
    }
    // enforce divisibility d_k | trailing entries
    for (std::size_t i = k + 1; i < s.rows; ++i)
      for (std::size_t j = k + 1; j < s.cols; ++j)
        if (s.at(i, j) % s.at(k, k) != 0) {
          // add row i to row k, restart elimination at k
          row_op(k, i, -1);
          --k;
          goto next_k;
        }
    if (s.at(k, k) < 0) {
      for (auto& x : s.entries[k]) x = -x;
      for (auto& x : u.entries[k]) x = -x;
    }
  next_k:;
  }
  return {s, u, v};
}

// Independent integer vectors spanning a sublattice of Z^ambient_rank.
struct LatticeBasis {
  std::size_t ambient_rank = 0;
  std::vector<Vec> vectors;

  LatticeBasis() = default;
  LatticeBasis(std::size_t n, std::vector<Vec> vs) : ambient_rank(n), vectors(std::move(vs)) {
    for (const auto& v : vectors)
      if (v.size() != ambient_rank) throw ToricError("basis vector has wrong length");
    if (!vectors.empty()) {
      IntMatrix m(vectors);
      if (rank(m) != vectors.size()) throw ToricError("basis vectors are dependent");
    }
  }

  IntMatrix as_matrix() const {
    IntMatrix m(vectors.size(), ambient_rank);
    m.entries = vectors;
    return m;
  }

  // Canonical form: HNF of the stacked vectors, zero rows dropped. Two bases
  // span the same lattice iff canonical forms coincide.
  LatticeBasis canonical() const {
    if (vectors.empty()) return *this;
    auto h = hermite_normal_form(as_matrix()).h;
    std::vector<Vec> rows;
    for (const auto& r : h.entries)
      if (!is_zero(r)) rows.push_back(r);
    LatticeBasis b;
    b.ambient_rank = ambient_rank;
    b.vectors = std::move(rows);
    return b;
  }

  bool same_lattice(const LatticeBasis& o) const {
    return canonical().vectors == o.canonical().vectors;
  }
};

struct AbelianGroupStructure {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors, each >= 2, d1 | d2 | ...

  bool operator==(const AbelianGroupStructure& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

// Saturated basis of {v : A v = 0}.
inline LatticeBasis kernel_lattice(const IntMatrix& a) {
  // Rows of U (from HNF of A^T) whose image row in H vanishes form a basis of
  // the kernel; it is saturated since U is unimodular.
  auto [h, u] = hermite_normal_form(a.transpose());
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < h.rows; ++i)
    if (is_zero(h.entries[i])) basis.push_back(u.entries[i]);
  LatticeBasis b(a.cols, basis);
  return b.canonical();
}

// Z^rows(a) modulo the lattice spanned by the columns of a.
inline AbelianGroupStructure cokernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  AbelianGroupStructure g;
  std::size_t r = 0;
  std::size_t n = std::min(a.rows, a.cols);
  for (std::size_t k = 0; k < n; ++k) {
    const Int& d = snf.s.at(k, k);
    if (d == 0) break;
    ++r;
    if (d >= 2) g.torsion.push_back(d);
  }
  g.free_rank = a.rows - r;
  return g;
}

// Basis of the saturation {m : k m in span(B) for some k > 0}.
inline LatticeBasis saturate_sublattice(const LatticeBasis& b) {
  if (b.vectors.empty()) return b;
  // The rational span of B is the kernel of the map cutting out its orthogonal
  // complement; kernel_lattice output is always saturated.
  LatticeBasis perp = kernel_lattice(b.as_matrix());
  if (perp.vectors.empty()) {
    // B spans the whole space rationally
    std::vector<Vec> id;
    for (std::size_t i = 0; i < b.ambient_rank; ++i) {
      Vec e(b.ambient_rank, 0);
      e[i] = 1;
      id.push_back(e);
    }
    return LatticeBasis(b.ambient_rank, id);
  }
  return kernel_lattice(perp.as_matrix());
}

inline bool is_saturated(const LatticeBasis& b) {
  if (b.vectors.empty()) return true;
  return saturate_sublattice(b).same_lattice(b);
}

// Integer solution x of A x = b, if one exists.
inline std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b) {
  // HNF of A^T: U A^T = H, i.e. A = (H^T)(U^-T). Solve H^T y = b by forward
  // substitution, then x = U^T y.
  auto [h, u] = hermite_normal_form(a.transpose());
  IntMatrix ht = h.transpose();  // rows(a) x cols(a), lower-triangular-ish
  Vec y(ht.cols, 0);
  Vec r = b;
  // ht has column echelon structure; solve greedily
  std::size_t row = 0;
  for (std::size_t col = 0; col < ht.cols; ++col) {
    // find pivot row of this column
    std::size_t pr = row;
    while (pr < ht.rows && ht.at(pr, col) == 0) ++pr;
    if (pr == ht.rows) continue;
    if (r[pr] % ht.at(pr, col) != 0) {
      // try exact solve anyway: the residual must vanish at pivot positions
      return std::nullopt;
    }
    Int c = r[pr] / ht.at(pr, col);
    y[col] = c;
    for (std::size_t i = 0; i < ht.rows; ++i) r[i] -= c * ht.at(i, col);
    row = pr + 1;
  }
  if (!is_zero(r)) return std::nullopt;
  return u.transpose().apply(y);
}

// Rational solution of A x = b (A square or overdetermined with consistent b);
// returns nullopt if inconsistent or underdetermined in the solved columns.
inline std::optional<QVec> solve_rational(const IntMatrix& a, const Vec& b) {
  std::size_t m = a.rows, n = a.cols;
  std::vector<QVec> aug(m, QVec(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(a.at(i, j));
    aug[i][n] = Rat(b[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && aug[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(aug[row], aug[piv]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rat f = aug[i][col] / aug[row][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;  // inconsistent
  if (pivot_col.size() < n) return std::nullopt;  // underdetermined
  QVec x(n);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][n] / aug[i][pivot_col[i]];
  return x;
}

}  // namespace toric

#endif

#ifndef TORIC_IDEALS_HPP
#define TORIC_IDEALS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "toric/polyhedra.hpp"

namespace toric {

// Coefficient field: the rationals (p == 0) or the prime field F_p.
struct Field {
  unsigned p = 0;

  bool operator==(const Field& o) const { return p == o.p; }
  bool is_rational() const { return p == 0; }
};

namespace detail {

inline Int mod_inverse(Int a, const Int& p) {
  a %= p;
  if (a < 0) a += p;
  Int t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    Int q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw ToricError("not invertible modulo p");
  if (t < 0) t += p;
  return t;
}

}  // namespace detail

// Reduces a rational coefficient into canonical form for the field: over F_p
// the result is an integer residue in [0, p).
inline Rat field_normalize(const Field& f, const Rat& c) {
  if (f.is_rational()) return c;
  Int p = f.p;
  Int num = numerator(c) % p;
  if (num < 0) num += p;
  if (num == 0) return Rat(0);
  Int den = denominator(c) % p;
  return Rat(num * detail::mod_inverse(den, p) % p);
}

using Expo = std::vector<int>;

inline Expo expo_add(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool expo_divides(const Expo& a, const Expo& b) {  // x^a | x^b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Expo expo_sub(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline long expo_degree(const Expo& a) {
  long d = 0;
  for (int x : a) d += x;
  return d;
}

// Term orders. `weight` compares by a nonnegative weight vector with a named
// tiebreak; `block` compares the dropped variables first (an elimination
// order used internally by eliminate/saturate/colon).
struct TermOrder {
  enum Kind { lex, grlex, grevlex, weight, block };

  Kind kind = grevlex;
  Vec w;                    // weight vector (kind == weight)
  Kind tiebreak = grevlex;  // kind == weight
  std::vector<char> drop;   // kind == block: 1 = compared first

  static TermOrder make_lex() { return {lex, {}, grevlex, {}}; }
  static TermOrder make_grlex() { return {grlex, {}, grevlex, {}}; }
  static TermOrder make_grevlex() { return {grevlex, {}, grevlex, {}}; }
  static TermOrder make_weight(Vec wv, Kind tie = grevlex) {
    return {weight, std::move(wv), tie, {}};
  }
  static TermOrder make_elimination(std::vector<char> drop_mask) {
    return {block, {}, grevlex, std::move(drop_mask)};
  }

  bool operator==(const TermOrder& o) const {
    return kind == o.kind && w == o.w && tiebreak == o.tiebreak && drop == o.drop;
  }

  // -1, 0, +1 for a < b, a == b, a > b
  int cmp(const Expo& a, const Expo& b) const {
    switch (kind) {
      case lex:
        return cmp_lex(a, b);
      case grlex: {
        long da = expo_degree(a), db = expo_degree(b);
        if (da != db) return da < db ? -1 : 1;
        return cmp_lex(a, b);
      }
      case grevlex:
        return cmp_grevlex(a, b);
      case weight: {
        Int wa = 0, wb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          wa += w[i] * a[i];
          wb += w[i] * b[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
        TermOrder tie{tiebreak, {}, grevlex, {}};
        return tie.cmp(a, b);
      }
      case block: {
        Expo ad, bd, ak, bk;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (i < drop.size() && drop[i]) {
            ad.push_back(a[i]);
            bd.push_back(b[i]);
          } else {
            ak.push_back(a[i]);
            bk.push_back(b[i]);
          }
        }
        int c = cmp_grevlex(ad, bd);
        if (c != 0) return c;
        return cmp_grevlex(ak, bk);
      }
    }
    return 0;
  }

  bool less(const Expo& a, const Expo& b) const { return cmp(a, b) < 0; }

 private:
  static int cmp_lex(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static int cmp_grevlex(const Expo& a, const Expo& b) {
    long da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
};

// Exact multivariate polynomial; terms keyed by exponent vector. Coefficients
// are kept field-normalized and never zero.
struct Polynomial {
  Field field;
  std::size_t nvars = 0;
  std::map<Expo, Rat> terms;

  Polynomial() = default;
  Polynomial(Field f, std::size_t n) : field(f), nvars(n) {}

  static Polynomial constant(Field f, std::size_t n, const Rat& c) {
    Polynomial p(f, n);
    Rat cc = field_normalize(f, c);
    if (cc != 0) p.terms[Expo(n, 0)] = cc;
    return p;
  }
  static Polynomial monomial(Field f, std::size_t n, Expo e, const Rat& c = 1) {
    Polynomial p(f, n);
    Rat cc = field_normalize(f, c);
    if (cc != 0) p.terms[std::move(e)] = cc;
    return p;
  }
  static Polynomial variable(Field f, std::size_t n, std::size_t i) {
    Expo e(n, 0);
    e[i] = 1;
    return monomial(f, n, e);
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Expo& e, const Rat& c) {
    auto it = terms.find(e);
    Rat nc = field_normalize(field, (it == terms.end() ? Rat(0) : it->second) + c);
    if (nc == 0) {
      if (it != terms.end()) terms.erase(it);
    } else if (it == terms.end()) {
      terms.emplace(e, nc);
    } else {
      it->second = nc;
    }
  }

  const std::pair<const Expo, Rat>& leading_term(const TermOrder& ord) const {
    if (terms.empty()) throw ToricError("leading term of zero polynomial");
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
      if (ord.less(best->first, it->first)) best = it;
    return *best;
  }

  bool operator==(const Polynomial& o) const {
    return field == o.field && nvars == o.nvars && terms == o.terms;
  }
};

inline void check_fields(const Polynomial& a, const Polynomial& b) {
  if (!(a.field == b.field) || a.nvars != b.nvars) throw FieldMismatch();
}

inline Polynomial padd(const Polynomial& a, const Polynomial& b) {
  check_fields(a, b);
  Polynomial r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

inline Polynomial pscale(const Polynomial& a, const Rat& c) {
  Polynomial r(a.field, a.nvars);
  Rat cc = field_normalize(a.field, c);
  if (cc == 0) return r;
  for (const auto& [e, co] : a.terms) {
    Rat nc = field_normalize(a.field, co * cc);
    if (nc != 0) r.terms[e] = nc;
  }
  return r;
}

inline Polynomial psub(const Polynomial& a, const Polynomial& b) {
  return padd(a, pscale(b, -1));
}

// a times the single term c * x^e
inline Polynomial pterm_mul(const Polynomial& a, const Expo& e, const Rat& c) {
  Polynomial r(a.field, a.nvars);
  Rat cc = field_normalize(a.field, c);
  if (cc == 0) return r;
  for (const auto& [ea, ca] : a.terms) {
    Rat nc = field_normalize(a.field, ca * cc);
    if (nc != 0) r.terms[expo_add(ea, e)] = nc;
  }
  return r;
}

inline Polynomial pmul(const Polynomial& a, const Polynomial& b) {
  check_fields(a, b);
  Polynomial r(a.field, a.nvars);
  for (const auto& [e, c] : b.terms)
    for (const auto& [ea, ca] : a.terms) r.add_term(expo_add(ea, e), ca * c);
  return r;
}

inline Polynomial ppow(const Polynomial& a, unsigned k) {
  Polynomial r = Polynomial::constant(a.field, a.nvars, 1);
  for (unsigned i = 0; i < k; ++i) r = pmul(r, a);
  return r;
}

// Remainder of f under multivariate division by basis; no term of the result
// is divisible by any basis leading term.
inline Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& basis,
                              const TermOrder& ord) {
  Polynomial rem(f.field, f.nvars);
  while (!f.is_zero()) {
    const auto& [le, lc] = f.leading_term(ord);
    bool divided = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const auto& [ge, gc] = g.leading_term(ord);
      if (!expo_divides(ge, le)) continue;
      Rat factor = field_normalize(
          f.field, f.field.is_rational() ? lc / gc
                                         : lc * Rat(detail::mod_inverse(numerator(gc), f.field.p)));
      f = psub(f, pterm_mul(g, expo_sub(le, ge), factor));
      divided = true;
      break;
    }
    if (!divided) {
      rem.add_term(le, lc);
      f.terms.erase(le);
    }
  }
  return rem;
}

inline std::size_t default_spair_budget = 1000000;

// Buchberger with normal (lowest lcm degree first) selection, the coprimality
// criterion and the chain criterion; output is the reduced basis with monic
// leading coefficients, sorted by leading monomial.
inline std::vector<Polynomial> buchberger_basis(std::vector<Polynomial> gens,
                                                const TermOrder& ord,
                                                std::size_t budget = default_spair_budget) {
  std::vector<Polynomial> g;
  for (auto& f : gens)
    if (!f.is_zero()) g.push_back(std::move(f));
  if (g.empty()) return g;
  Field field = g[0].field;

  struct Pair {
    std::size_t i, j;
    Expo lcm;
    long deg;
  };
  auto make_pair = [&](std::size_t i, std::size_t j) {
    Expo l = expo_lcm(g[i].leading_term(ord).first, g[j].leading_term(ord).first);
    return Pair{i, j, l, expo_degree(l)};
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    pairs.push_back(make_pair(i, j));
    pending.insert({std::min(i, j), std::max(i, j)});
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) push_pair(i, j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > budget) throw BudgetExceeded("S-pair limit in Buchberger");
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].deg < pairs[best].deg) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    pending.erase({std::min(p.i, p.j), std::max(p.i, p.j)});

    const auto& [ei, ci] = g[p.i].leading_term(ord);
    const auto& [ej, cj] = g[p.j].leading_term(ord);
    // coprimality criterion
    if (p.lcm == expo_add(ei, ej)) continue;
    // chain criterion: if LT(g_k) divides the lcm and both companion pairs
    // were already processed, this pair reduces to zero
    bool chained = false;
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      const Expo& ek = g[k].leading_term(ord).first;
      if (!expo_divides(ek, p.lcm)) continue;
      bool ik_done = !pending.count({std::min(p.i, k), std::max(p.i, k)});
      bool jk_done = !pending.count({std::min(p.j, k), std::max(p.j, k)});
      if (ik_done && jk_done) chained = true;
    }
    if (chained) continue;

    Rat inv_i = field.is_rational() ? Rat(1) / ci
                                    : Rat(detail::mod_inverse(numerator(ci), field.p));
    Rat inv_j = field.is_rational() ? Rat(1) / cj
                                    : Rat(detail::mod_inverse(numerator(cj), field.p));
    Polynomial s = psub(pterm_mul(g[p.i], expo_sub(p.lcm, ei), inv_i),
                        pterm_mul(g[p.j], expo_sub(p.lcm, ej), inv_j));
    Polynomial r = reduce_full(std::move(s), g, ord);
    if (r.is_zero()) continue;
    g.push_back(std::move(r));
    for (std::size_t i = 0; i + 1 < g.size(); ++i) push_pair(i, g.size() - 1);
  }

  // minimalize: drop elements whose leading term another leading term divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Expo& ei = g[i].leading_term(ord).first;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Expo& ej = g[j].leading_term(ord).first;
      if (expo_divides(ej, ei) && (ej != ei || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // reduce each element against the others, make monic
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = reduce_full(minimal[i], others, ord);
    if (r.is_zero()) continue;
    const auto& [e, c] = r.leading_term(ord);
    Rat inv = field.is_rational() ? Rat(1) / c : Rat(detail::mod_inverse(numerator(c), field.p));
    reduced.push_back(pscale(r, inv));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
  });
  return reduced;
}

struct Ideal {
  Field field;
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;
  mutable std::optional<std::pair<TermOrder, std::vector<Polynomial>>> cached;

  Ideal() = default;
  Ideal(Field f, std::size_t n, std::vector<Polynomial> gens)
      : field(f), nvars(n), generators(std::move(gens)) {
    for (const auto& g : generators)
      if (!(g.field == field) || g.nvars != nvars) throw FieldMismatch();
  }

  const std::vector<Polynomial>& groebner(const TermOrder& ord,
                                          std::size_t budget = default_spair_budget) const {
    if (!cached || !(cached->first == ord))
      cached = {ord, buchberger_basis(generators, ord, budget)};
    return cached->second;
  }
};

inline std::vector<Polynomial> buchberger(const Ideal& i, const TermOrder& ord,
                                          std::size_t budget = default_spair_budget) {
  return i.groebner(ord, budget);
}

inline Polynomial normal_form(const Polynomial& f, const Ideal& i, const TermOrder& ord) {
  if (!(f.field == i.field) || f.nvars != i.nvars) throw FieldMismatch();
  return reduce_full(f, i.groebner(ord), ord);
}

inline bool ideal_contains(const Ideal& i, const Polynomial& f,
                           const TermOrder& ord = TermOrder::make_grevlex()) {
  return normal_form(f, i, ord).is_zero();
}

// Terms of f of maximal weight.
inline Polynomial weight_initial_form(const Polynomial& f, const Vec& w) {
  Polynomial r(f.field, f.nvars);
  Int best = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    Int we = 0;
    for (std::size_t i = 0; i < e.size(); ++i) we += w[i] * e[i];
    if (first || we > best) {
      best = we;
      first = false;
    }
  }
  for (const auto& [e, c] : f.terms) {
    Int we = 0;
    for (std::size_t i = 0; i < e.size(); ++i) we += w[i] * e[i];
    if (we == best) r.terms[e] = c;
  }
  return r;
}

// Initial ideal with respect to a term order: the monomial ideal of leading
// terms of a Groebner basis.
inline Ideal initial_ideal(const Ideal& i, const TermOrder& ord) {
  std::vector<Polynomial> gens;
  for (const auto& g : i.groebner(ord))
    gens.push_back(Polynomial::monomial(i.field, i.nvars, g.leading_term(ord).first));
  return Ideal(i.field, i.nvars, gens);
}

// Initial ideal for a weight vector: generated by the w-initial forms of a
// Groebner basis with respect to (w, tiebreak); may be non-monomial.
inline Ideal initial_ideal_weight(const Ideal& i, const Vec& w,
                                  TermOrder::Kind tiebreak = TermOrder::grevlex) {
  TermOrder ord = TermOrder::make_weight(w, tiebreak);
  std::vector<Polynomial> gens;
  for (const auto& g : i.groebner(ord)) gens.push_back(weight_initial_form(g, w));
  return Ideal(i.field, i.nvars, gens);
}

// I `intersect` k[vars not in drop], via an elimination order.
inline Ideal eliminate(const Ideal& i, const std::vector<std::size_t>& drop_vars) {
  std::vector<char> mask(i.nvars, 0);
  for (auto v : drop_vars) mask[v] = 1;
  bool any = false;
  for (char c : mask) any |= c;
  if (!any) return i;
  auto gb = i.groebner(TermOrder::make_elimination(mask));
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool uses_dropped = false;
    for (const auto& [e, c] : g.terms)
      for (std::size_t v = 0; v < i.nvars; ++v)
        if (mask[v] && e[v] > 0) uses_dropped = true;
    if (!uses_dropped) kept.push_back(g);
  }
  return Ideal(i.field, i.nvars, kept);
}

namespace detail {

inline Polynomial append_variable(const Polynomial& f) {
  Polynomial r(f.field, f.nvars + 1);
  for (const auto& [e, c] : f.terms) {
    Expo ne = e;
    ne.push_back(0);
    r.terms[ne] = c;
  }
  return r;
}

inline Polynomial strip_last_variable(const Polynomial& f) {
  Polynomial r(f.field, f.nvars - 1);
  for (const auto& [e, c] : f.terms) {
    if (e.back() != 0) throw ToricError("eliminated variable still present");
    Expo ne(e.begin(), e.end() - 1);
    r.terms[ne] = c;
  }
  return r;
}

}  // namespace detail

// (I : f^infinity) by the Rabinowitsch trick: adjoin t, add t*f - 1, eliminate t.
inline Ideal saturate(const Ideal& i, const Polynomial& f,
                      std::size_t budget = default_spair_budget) {
  if (!(f.field == i.field) || f.nvars != i.nvars) throw FieldMismatch();
  std::size_t n = i.nvars;
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators) gens.push_back(detail::append_variable(g));
  Polynomial tf = pmul(detail::append_variable(f), Polynomial::variable(i.field, n + 1, n));
  gens.push_back(psub(tf, Polynomial::constant(i.field, n + 1, 1)));
  Ideal extended(i.field, n + 1, gens);
  std::vector<char> mask(n + 1, 0);
  mask[n] = 1;
  auto gb = extended.groebner(TermOrder::make_elimination(mask), budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool uses_t = false;
    for (const auto& [e, c] : g.terms)
      if (e[n] > 0) uses_t = true;
    if (!uses_t) kept.push_back(detail::strip_last_variable(g));
  }
  return Ideal(i.field, n, kept);
}

// I `intersect` J via the one-tag-variable trick: eliminate t from t*I + (1-t)*J.
inline Ideal intersect(const Ideal& i, const Ideal& j,
                       std::size_t budget = default_spair_budget) {
  if (!(i.field == j.field) || i.nvars != j.nvars) throw FieldMismatch();
  std::size_t n = i.nvars;
  Polynomial t = Polynomial::variable(i.field, n + 1, n);
  Polynomial one_minus_t = psub(Polynomial::constant(i.field, n + 1, 1), t);
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators) gens.push_back(pmul(detail::append_variable(g), t));
  for (const auto& g : j.generators) gens.push_back(pmul(detail::append_variable(g), one_minus_t));
  Ideal extended(i.field, n + 1, gens);
  std::vector<char> mask(n + 1, 0);
  mask[n] = 1;
  auto gb = extended.groebner(TermOrder::make_elimination(mask), budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool uses_t = false;
    for (const auto& [e, c] : g.terms)
      if (e[n] > 0) uses_t = true;
    if (!uses_t) kept.push_back(detail::strip_last_variable(g));
  }
  return Ideal(i.field, n, kept);
}

// Exact quotient g / f; throws if f does not divide g.
inline Polynomial divide_exact(Polynomial g, const Polynomial& f, const TermOrder& ord) {
  check_fields(g, f);
  Polynomial q(g.field, g.nvars);
  const auto& [fe, fc] = f.leading_term(ord);
  while (!g.is_zero()) {
    const auto& [ge, gc] = g.leading_term(ord);
    if (!expo_divides(fe, ge)) throw ToricError("inexact polynomial division");
    Rat factor = field_normalize(
        g.field, g.field.is_rational() ? gc / fc
                                       : gc * Rat(detail::mod_inverse(numerator(fc), g.field.p)));
    Expo de = expo_sub(ge, fe);
    q.add_term(de, factor);
    g = psub(g, pterm_mul(f, de, factor));
  }
  return q;
}

// (I : J) = {g : g*J in I}, as the intersection over generators f of J of
// (I : f) = (I `intersect` (f)) / f.
inline Ideal colon(const Ideal& i, const Ideal& j,
                   std::size_t budget = default_spair_budget) {
  if (!(i.field == j.field) || i.nvars != j.nvars) throw FieldMismatch();
  TermOrder ord = TermOrder::make_grevlex();
  std::optional<Ideal> result;
  for (const auto& f : j.generators) {
    if (f.is_zero()) continue;
    Ideal meet = intersect(i, Ideal(i.field, i.nvars, {f}), budget);
    std::vector<Polynomial> quots;
    for (const auto& g : meet.generators) quots.push_back(divide_exact(g, f, ord));
    Ideal single(i.field, i.nvars, quots);
    result = result ? intersect(*result, single, budget) : single;
  }
  if (!result) return Ideal(i.field, i.nvars, {Polynomial::constant(i.field, i.nvars, 1)});
  return *result;
}

// Bracket power I^[p]: generated by p-th powers of the generators (equal to
// the ideal of p-th powers of all elements over F_p).
inline Ideal frobenius_power(const Ideal& i, unsigned p) {
  if (i.field.p != p) throw FieldMismatch();
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators) gens.push_back(ppow(g, p));
  return Ideal(i.field, i.nvars, gens);
}

// The prime binomial ideal of the monomial map defined by S: lattice-kernel
// binomials saturated by the product of all variables; generators returned as
// the reduced grevlex Groebner basis.
inline Ideal toric_ideal(const PointConfig& s, Field field = Field{0},
                         bool homogenize = false,
                         std::size_t budget = default_spair_budget) {
  std::size_t m = s.points.size();
  IntMatrix a = s.as_matrix().transpose();
  if (homogenize) {
    std::vector<Vec> rows = a.entries;
    rows.push_back(Vec(m, 1));
    a = IntMatrix(rows);
  }
  auto ker = kernel_lattice(a);
  std::vector<Polynomial> gens;
  for (const auto& u : ker.vectors) {
    Expo plus(m, 0), minus(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (u[i] > 0) plus[i] = static_cast<int>(u[i]);
      if (u[i] < 0) minus[i] = static_cast<int>(-u[i]);
    }
    gens.push_back(psub(Polynomial::monomial(field, m, plus),
                        Polynomial::monomial(field, m, minus)));
  }
  Ideal lattice_ideal(field, m, gens);
  Polynomial prod = Polynomial::constant(field, m, 1);
  for (std::size_t i = 0; i < m; ++i) prod = pmul(prod, Polynomial::variable(field, m, i));
  Ideal sat = gens.empty() ? lattice_ideal : saturate(lattice_ideal, prod, budget);
  // graded-lex makes the canonical generators match the usual presentation
  // (e.g. xz - y^2 rather than y^2 - xz)
  auto gb = sat.groebner(TermOrder::make_grlex(), budget);
  Ideal out(field, m, gb);
  out.cached = {TermOrder::make_grlex(), gb};
  return out;
}

// Field independence of toric ideal generators: the rational generating set,
// reinterpreted over F_2, generates the natively computed F_2 toric ideal and
// vice versa.
inline bool same_generators_over_fields(const PointConfig& s, bool homogenize = false,
                                        std::size_t budget = default_spair_budget) {
  Ideal over_q = toric_ideal(s, Field{0}, homogenize, budget);
  Ideal over_f2 = toric_ideal(s, Field{2}, homogenize, budget);
  TermOrder ord = TermOrder::make_grevlex();
  for (const auto& g : over_q.generators) {
    Polynomial h(Field{2}, g.nvars);
    for (const auto& [e, c] : g.terms) {
      Rat cc = field_normalize(Field{2}, c);
      if (cc != 0) h.terms[e] = cc;
    }
    if (!normal_form(h, over_f2, ord).is_zero()) return false;
  }
  for (const auto& g : over_f2.generators) {
    // binomial generators lift with +1 on the order-larger monomial
    Polynomial h(Field{0}, g.nvars);
    const Expo& lead = g.leading_term(ord).first;
    for (const auto& [e, c] : g.terms) h.terms[e] = (e == lead) ? Rat(1) : Rat(-1);
    if (!normal_form(h, over_q, ord).is_zero()) return false;
  }
  return true;
}

}  // namespace toric

#endif

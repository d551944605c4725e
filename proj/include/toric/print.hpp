#ifndef TORIC_PRINT_HPP
#define TORIC_PRINT_HPP

#include <sstream>
#include <string>

#include "toric/ideals.hpp"

namespace toric {

inline std::string var_name(std::size_t nvars, std::size_t i) {
  static const char* letters[] = {"x", "y", "z", "w"};
  if (nvars <= 4) return letters[i];
  return "x" + std::to_string(i + 1);
}

inline std::string rat_to_string(const Rat& c) {
  std::ostringstream os;
  os << numerator(c);
  if (denominator(c) != 1) os << "/" << denominator(c);
  return os.str();
}

inline std::string monomial_to_string(std::size_t nvars, const Expo& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty() && nvars > 4) out += "*";
    out += var_name(nvars, i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

// Terms in descending order; the sign is normalized so the leading
// coefficient is positive over the rationals.
inline std::string poly_to_string(const Polynomial& f,
                                  const TermOrder& ord = TermOrder::make_grevlex()) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Expo, Rat>> ts(f.terms.begin(), f.terms.end());
  std::sort(ts.begin(), ts.end(),
            [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  Rat flip = (f.field.p == 0 && ts.front().second < 0) ? Rat(-1) : Rat(1);
  std::string out;
  for (const auto& [e, c] : ts) {
    Rat cc = field_normalize(f.field, c * flip);
    if (out.empty()) {
      if (cc < 0) out += "-";
    } else {
      out += cc < 0 ? " - " : " + ";
    }
    Rat a = cc < 0 ? Rat(-cc) : cc;
    std::string mono = monomial_to_string(f.nvars, e);
    if (a != 1 || mono == "1") {
      out += rat_to_string(a);
      if (mono != "1") out += "*";
    }
    if (mono != "1") out += mono;
  }
  return out;
}

inline std::vector<std::string> ideal_strings(const Ideal& i,
                                              const TermOrder& ord = TermOrder::make_grevlex()) {
  std::vector<std::string> out;
  for (const auto& g : i.generators) out.push_back(poly_to_string(g, ord));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toric

#endif

#include "zss/symmetry.hpp"

#include <algorithm>

#include "zss/error.hpp"

namespace zss {

Grid apply(const Symmetry& sym, const Grid& g) {
  Grid out = sym.transpose ? transpose(g) : g;
  if (sym.flip_h) out = reflect_h(out);
  if (sym.flip_v) out = reflect_v(out);
  if (sym.negate) out = negate(out);
  return out;
}

std::vector<Symmetry> group_elements(const SymmetryGroup& group, int rows, int cols) {
  if (group.use_transpose && rows != cols) {
    throw ArgumentError("transpose symmetry requires a square grid, got " + std::to_string(rows) +
                        "x" + std::to_string(cols));
  }
  std::vector<Symmetry> out;
  for (bool tr : {false, true}) {
    if (tr && !group.use_transpose) continue;
    for (bool h : {false, true}) {
      for (bool v : {false, true}) {
        if ((h || v) && !group.use_reflections) continue;
        for (bool neg : {false, true}) {
          if (neg && !group.use_negation) continue;
          out.push_back(Symmetry{tr, h, v, neg});
        }
      }
    }
  }
  return out;
}

std::vector<Grid> orbit(const Grid& g, const SymmetryGroup& group) {
  std::vector<Grid> out;
  for (const Symmetry& sym : group_elements(group, g.rows(), g.cols())) {
    Grid image = apply(sym, g);
    if (std::find(out.begin(), out.end(), image) == out.end()) out.push_back(std::move(image));
  }
  return out;
}

Grid canonicalize(const Grid& g, const SymmetryGroup& group) {
  Grid best = g;
  for (const Symmetry& sym : group_elements(group, g.rows(), g.cols())) {
    Grid image = apply(sym, g);
    if (lex_compare(image, best) < 0) best = std::move(image);
  }
  return best;
}

std::string grid_key(const Grid& g) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string key = std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + ":";
  int nibble = 0;
  int filled = 0;
  for (int i = 1; i <= g.rows(); ++i) {
    for (int j = 1; j <= g.cols(); ++j) {
      nibble = (nibble << 1) | (g.plus_unchecked(i, j) ? 1 : 0);
      if (++filled == 4) {
        key += kHex[nibble];
        nibble = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) key += kHex[nibble << (4 - filled)];
  return key;
}

}  // namespace zss

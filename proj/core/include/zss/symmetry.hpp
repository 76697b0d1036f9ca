#pragma once

#include <string>
#include <vector>

#include "zss/grid.hpp"

namespace zss {

/// Which symmetries of the grid square problem to quotient by.
///
/// All generated elements map squares to squares and preserve |disc|, so they
/// preserve zero-sum square freeness. Transpose needs a square grid.
struct SymmetryGroup {
  bool use_reflections = true;
  bool use_negation = true;
  bool use_transpose = false;

  static SymmetryGroup trivial() { return {false, false, false}; }
  /// Reflections and negation: the group used for uniqueness claims.
  static SymmetryGroup reflections_negation() { return {true, true, false}; }
  static SymmetryGroup full() { return {true, true, true}; }

  friend bool operator==(const SymmetryGroup&, const SymmetryGroup&) = default;
};

/// One group element: transpose, then mirror, then negate.
struct Symmetry {
  bool transpose = false;
  bool flip_h = false;
  bool flip_v = false;
  bool negate = false;
};

Grid apply(const Symmetry& sym, const Grid& g);

/// Elements of the group acting on rows x cols grids, identity first.
/// Throws ArgumentError if transpose is requested on a non-square shape.
std::vector<Symmetry> group_elements(const SymmetryGroup& group, int rows, int cols);

/// Distinct images of g under the group.
std::vector<Grid> orbit(const Grid& g, const SymmetryGroup& group);

/// Lexicographically least grid of the orbit (row-major, -1 < +1).
Grid canonicalize(const Grid& g, const SymmetryGroup& group);

/// Stable text key of a grid: "RxC:" followed by the row-major bits in hex,
/// first cell most significant. Keys of equal-shape grids sort like lex order.
std::string grid_key(const Grid& g);

inline std::string canonical_key(const Grid& g, const SymmetryGroup& group) {
  return grid_key(canonicalize(g, group));
}

}  // namespace zss

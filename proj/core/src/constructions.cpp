#include "zss/constructions.hpp"

#include <string>

#include "zss/error.hpp"
#include "zss/matrix_io.hpp"

namespace zss {

Grid figure5_grid() {
  std::string text;
  for (std::string_view row : kFigure5Rows) {
    text += row;
    text += '\n';
  }
  Grid g = parse_matrix(text);
  if (discrepancy(g) != kFigure5Discrepancy || !is_zero_sum_square_free(g) || is_diagonal(g)) {
    throw IntegrityError("embedded 8x8 grid failed its self-check");
  }
  return g;
}

}  // namespace zss

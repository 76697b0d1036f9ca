#include "render.hpp"

#include <sstream>

#include "zss/matrix_io.hpp"

namespace zss::cli {

namespace {

constexpr int kCell = 20;
constexpr const char* kPlusFill = "#1f4e79";
constexpr const char* kMinusFill = "#f2f2f2";

}  // namespace

std::string render_ascii(const Grid& g, bool color) {
  if (!color) return format_matrix(g);
  std::string out;
  for (int i = 1; i <= g.rows(); ++i) {
    for (int j = 1; j <= g.cols(); ++j) out += g.is_plus(i, j) ? "\x1b[32m+\x1b[0m" : "\x1b[31m-\x1b[0m";
    out += '\n';
  }
  return out;
}

std::string render_svg(const Grid& g) {
  const int w = g.cols() * kCell;
  const int h = g.rows() * kCell;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
      << w << ' ' << h << "\">\n";
  for (int i = 1; i <= g.rows(); ++i) {
    for (int j = 1; j <= g.cols(); ++j) {
      out << "<rect x=\"" << (j - 1) * kCell << "\" y=\"" << (i - 1) * kCell << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" fill=\"" << (g.is_plus(i, j) ? kPlusFill : kMinusFill)
          << "\" stroke=\"#808080\" stroke-width=\"1\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace zss::cli

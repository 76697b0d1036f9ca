#include "zss/matrix_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "zss/error.hpp"

namespace zss {

Grid parse_matrix(std::string_view text) {
  if (text.empty()) throw ParseError("empty matrix", 1, 0);
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      throw ParseError("last row is not newline-terminated", static_cast<int>(lines.size()) + 1,
                       static_cast<int>(text.size() - start) + 1);
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  const std::size_t width = lines.front().size();
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const int line_no = static_cast<int>(r) + 1;
    const std::string_view line = lines[r];
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] != '+' && line[c] != '-') {
        throw ParseError("unexpected character in matrix row", line_no, static_cast<int>(c) + 1);
      }
    }
    if (line.empty()) throw ParseError("empty matrix row", line_no, 1);
    if (line.size() != width) {
      throw ParseError("row has " + std::to_string(line.size()) + " entries, expected " +
                           std::to_string(width),
                       line_no, static_cast<int>(std::min(line.size(), width)) + 1);
    }
  }
  Grid g(static_cast<int>(lines.size()), static_cast<int>(width));
  for (std::size_t r = 0; r < lines.size(); ++r)
    for (std::size_t c = 0; c < width; ++c)
      if (lines[r][c] == '+') g.set(static_cast<int>(r) + 1, static_cast<int>(c) + 1, 1);
  return g;
}

std::string format_row(const Grid& g, int i) {
  std::string row(static_cast<std::size_t>(g.cols()), '-');
  for (int j = 1; j <= g.cols(); ++j)
    if (g.is_plus(i, j)) row[static_cast<std::size_t>(j - 1)] = '+';
  return row;
}

std::string format_matrix(const Grid& g) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.rows()) * (g.cols() + 1));
  for (int i = 1; i <= g.rows(); ++i) {
    out += format_row(g, i);
    out += '\n';
  }
  return out;
}

Grid read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EnvironmentError("cannot open matrix file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const Grid& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw EnvironmentError("cannot write matrix file " + path.string());
  out << format_matrix(g);
}

}  // namespace zss

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "zss/grid.hpp"

namespace zss {

// Matrix text format: one newline-terminated line per row, '+' for +1 and
// '-' for -1, all lines the same length. Nothing else is accepted.

/// Throws ParseError carrying the 1-based line and column of the first defect.
Grid parse_matrix(std::string_view text);

std::string format_matrix(const Grid& g);

/// One row as a "+-" string (no newline).
std::string format_row(const Grid& g, int i);

Grid read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Grid& g);

}  // namespace zss

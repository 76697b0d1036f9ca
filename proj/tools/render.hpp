#pragma once

#include <string>

#include "zss/grid.hpp"

namespace zss::cli {

/// The matrix text form, optionally with ANSI colors per entry.
std::string render_ascii(const Grid& g, bool color);

/// One rect per cell in two fixed colors; byte-stable for a given grid.
std::string render_svg(const Grid& g);

}  // namespace zss::cli

#pragma once

#include <array>
#include <string_view>

#include "zss/grid.hpp"

namespace zss {

/// The 8x8 zero-sum square free, non-diagonal grid of discrepancy 30, rows
/// top to bottom.
inline constexpr std::array<std::string_view, 8> kFigure5Rows = {
    "-----+++", "----++++", "---++++-", "--++++++",
    "-+++++++", "++++++++", "++++++++", "++-+++++",
};

inline constexpr int kFigure5Discrepancy = 30;

/// Builds the embedded 8x8 grid and checks it (discrepancy 30, zero-sum
/// square free, non-diagonal). Throws IntegrityError if the data drifted.
Grid figure5_grid();

}  // namespace zss

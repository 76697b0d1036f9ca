#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zss/certificate.hpp"
#include "zss/encode.hpp"
#include "zss/grid.hpp"
#include "zss/solver.hpp"
#include "zss/symmetry.hpp"

namespace zss {

struct BruteForceConfig {
  /// Largest number of free cells the brute-force engine accepts.
  int budget_cells = 36;
  /// Worker threads; the assignment tree is split on a prefix of cells.
  int threads = 1;
};

struct EnumerateQuery {
  int n = 0;
  int m = 0;
  std::optional<int> max_abs_disc;
  bool nondiagonal_only = false;
  SymmetryGroup group = SymmetryGroup::trivial();
};

/// Depth-first enumeration of every zero-sum square free completion of the
/// fixed cells, in row-major -1-before-+1 order. The visitor returns false to
/// stop. Throws BudgetError when more than budget_cells cells are free,
/// ArgumentError on contradictory or out-of-range fixed cells. Returns the
/// number of completions visited.
std::uint64_t enumerate_completions(int n, int m, std::span<const FixedCell> fixed,
                                    const std::function<bool(const Grid&)>& visit,
                                    std::optional<int> max_abs_disc = std::nullopt,
                                    const BruteForceConfig& config = {});

/// One certificate per symmetry class of zero-sum square free n x m grids
/// passing the filters, sorted by canonical key. Every filter is invariant
/// under the group, so emitting only canonical grids is exact.
std::vector<Certificate> enumerate_zssf(const EnumerateQuery& q, const BruteForceConfig& config = {});

struct MinDiscResult {
  /// Absent when no grid passes the filters (e.g. every small grid is diagonal).
  std::optional<int> d;
  std::vector<Certificate> witnesses;  // one per class, sorted by key
};

/// Branch and bound for the least |disc| over zero-sum square free n x m
/// grids (non-diagonal ones when requested). Witness classes are taken under
/// `group`, reflections and negation by default.
MinDiscResult min_discrepancy(int n, int m, bool nondiagonal_only = true,
                              const SymmetryGroup& group = SymmetryGroup::reflections_negation(),
                              const BruteForceConfig& config = {});

struct ForcedOracle {
  enum class Method { BruteForce, SatBackbone };

  /// False when the fixed cells admit no zero-sum square free completion; the
  /// forced map is then empty.
  bool has_completion = false;
  /// Cells, fixed ones included, taking one value in every completion.
  std::map<std::pair<int, int>, int> forced;
  /// Completions seen; only counted by brute force.
  std::optional<std::uint64_t> completions;
  Method method = Method::BruteForce;
};

/// Entries shared by every zero-sum square free n x n completion of `fixed`.
/// Uses brute force when the free cells fit the budget and a SAT backbone
/// computation otherwise. Throws ArgumentError on contradictory fixed cells.
ForcedOracle forced_entry_oracle(int n, std::span<const FixedCell> fixed, const SatBackend& backend,
                                 const BruteForceConfig& config = {});

}  // namespace zss

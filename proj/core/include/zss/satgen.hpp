#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zss/encode.hpp"
#include "zss/solver.hpp"
#include "zss/symmetry.hpp"

namespace zss {

struct GridOutcome {
  SolveResult result;
  /// Decoded and re-verified model, present iff Sat.
  std::optional<Grid> grid;
};

/// Solves the encoding and checks the decoded grid against every recorded
/// constraint (IntegrityError on failure).
GridOutcome solve_encoding(const ZssEncoding& enc, const SatBackend& backend);

enum class EnumerationStrategy {
  /// Solve, block the model's cells, repeat until Unsat.
  Blocking,
  /// Branch on cell values under assumptions; the clause set never grows, so
  /// this scales to tens of thousands of models. No orbit blocking.
  Split,
};

struct EnumerateOptions {
  EnumerationStrategy strategy = EnumerationStrategy::Blocking;
  /// Block the whole orbit of each model instead of the model alone. The
  /// encoded constraints must be invariant under the group.
  std::optional<SymmetryGroup> orbit_blocking;
  std::optional<std::size_t> limit;
};

/// Distinct models projected onto the cells, sorted by key. With orbit
/// blocking each entry is the canonical representative of its class.
/// Throws EnvironmentError if the backend answers Unknown and ArgumentError
/// for orbit blocking under the split strategy.
std::vector<Grid> enumerate_models(const ZssEncoding& enc, const SatBackend& backend,
                                   const EnumerateOptions& options = {});

/// Cells taking the same value in every model, or nullopt when Unsat.
std::optional<std::map<std::pair<int, int>, int>> cell_backbone(const ZssEncoding& enc,
                                                                  const SatBackend& backend);

inline int quarter_square(int n) { return n * n / 4; }

struct BaseCaseResult {
  int n = 0;
  int bound = 0;
  SolveResult result;
  /// A non-diagonal zero-sum square free grid within the bound, if one exists.
  std::optional<Grid> counterexample;
};

/// zssf, |disc| <= bound_fn(n), non-diagonal. Unsat confirms the lower bound
/// for this n.
BaseCaseResult verify_base_case(int n, const SatBackend& backend,
                                const std::function<int(int)>& bound_fn = quarter_square);

struct DescentStep {
  int bound = 0;
  SolveStatus status = SolveStatus::Unknown;
  std::optional<int> found_disc;
  double seconds = 0.0;
};

struct DescentResult {
  /// Least |disc| of a non-diagonal zero-sum square free grid; absent when
  /// there is none of this shape.
  std::optional<int> d;
  std::optional<Grid> witness;
  std::vector<DescentStep> steps;
};

/// Starts from |disc| of the checkerboard when it qualifies (n*m otherwise),
/// then asks for |disc| <= |disc(witness)| - 2 until Unsat.
DescentResult min_disc_descent(int n, int m, const SatBackend& backend);

}  // namespace zss

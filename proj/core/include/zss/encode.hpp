#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zss/cnf.hpp"
#include "zss/grid.hpp"

namespace zss {

/// Bumped whenever the clauses produced for a query change.
inline constexpr int kEncodingVersion = 1;

/// Cell <-> variable map. Cell (i, j) is variable (i-1)*m + j and is true
/// exactly when the entry is +1. Variables above n*m are auxiliary.
struct VarMap {
  int n = 0;
  int m = 0;

  int cell_var(int i, int j) const { return (i - 1) * m + j; }
  int cell_count() const { return n * m; }
  int first_aux() const { return n * m + 1; }
};

struct FixedCell {
  int i = 1;
  int j = 1;
  int value = 1;

  friend bool operator==(const FixedCell&, const FixedCell&) = default;
};

/// What a formula claims about its models, re-checked on every decoded grid.
struct EncodedConstraints {
  bool zssf = false;
  std::optional<int> disc_bound;
  bool nondiagonal = false;
  std::vector<FixedCell> fixed;
};

struct ZssEncoding {
  CnfFormula cnf;
  VarMap vars;
  EncodedConstraints constraints;
};

/// Six 4-literal clauses per square forbidding every two-plus/two-minus
/// corner pattern.
ZssEncoding encode_zssf(int n, int m);

/// Restricts models to |disc| <= d with a pair of sequential counters over
/// the cell variables. Throws ArgumentError for d < 0. Applying a bound
/// twice keeps the tighter one in the recorded constraints.
ZssEncoding add_disc_bound(ZssEncoding enc, int d);

/// One full-assignment blocking clause per distinct diagonal grid.
ZssEncoding add_nondiagonal(ZssEncoding enc);

/// Unit clauses pinning cells. Throws ArgumentError on out-of-range cells,
/// values other than +-1, or two different values for one cell.
ZssEncoding fix_cells(ZssEncoding enc, std::span<const FixedCell> cells);

/// zssf, |disc| <= d, non-diagonal: the base-case query for the lower bound.
ZssEncoding encode_query(int n, int m, std::optional<int> disc_bound, bool nondiagonal);

/// Number of cells set to true must lie in [lo, hi].
void add_cardinality(CnfFormula& f, std::span<const int> lits, int lo, int hi);
/// at most k of the literals are true (sequential counter).
void add_at_most(CnfFormula& f, std::span<const int> lits, int k);

/// All distinct grids of this shape that are diagonal.
std::vector<Grid> distinct_diagonal_grids(int n, int m);

/// The clause that is false exactly on g's cell assignment.
Clause blocking_clause(const VarMap& vars, const Grid& g);

/// Cell literals (true => +1) describing g.
std::vector<int> cell_literals(const VarMap& vars, const Grid& g);

/// model is indexed by variable (entry 0 unused).
Grid decode_grid(const VarMap& vars, const std::vector<bool>& model);

/// Human-readable list of violated constraints; empty when g satisfies all.
std::vector<std::string> constraint_violations(const EncodedConstraints& c, const Grid& g);

/// Throws IntegrityError unless the model satisfies every clause and its
/// decoded grid satisfies every recorded constraint.
Grid verify_model(const ZssEncoding& enc, const std::vector<bool>& model);

}  // namespace zss

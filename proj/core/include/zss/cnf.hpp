#pragma once

#include <span>
#include <string>
#include <vector>

namespace zss {

using Clause = std::vector<int>;

/// A propositional formula in clausal form over variables 1..num_vars.
/// Literals are DIMACS-style signed integers.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> comments;

  int new_var() { return ++num_vars; }

  /// Throws ArgumentError on an empty clause or a literal beyond num_vars.
  void add_clause(Clause clause);
  void add_clause(std::initializer_list<int> lits) { add_clause(Clause(lits)); }

  /// True if every clause has a literal made true by `model` (indexed by var).
  bool satisfied_by(const std::vector<bool>& model) const;
};

}  // namespace zss

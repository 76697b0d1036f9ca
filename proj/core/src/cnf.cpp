#include "zss/cnf.hpp"

#include <cstdlib>

#include "zss/error.hpp"

namespace zss {

void CnfFormula::add_clause(Clause clause) {
  if (clause.empty()) throw ArgumentError("empty clause");
  for (int lit : clause) {
    if (lit == 0 || std::abs(lit) > num_vars) {
      throw ArgumentError("literal " + std::to_string(lit) + " outside 1.." + std::to_string(num_vars));
    }
  }
  clauses.push_back(std::move(clause));
}

bool CnfFormula::satisfied_by(const std::vector<bool>& model) const {
  if (model.size() < static_cast<std::size_t>(num_vars) + 1) return false;
  for (const Clause& c : clauses) {
    bool sat = false;
    for (int lit : c) {
      if (model[static_cast<std::size_t>(std::abs(lit))] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace zss

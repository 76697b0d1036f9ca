#pragma once

#include <string>
#include <string_view>

#include "zss/cnf.hpp"
#include "zss/solver.hpp"

namespace zss {

/// "c " comment lines, the "p cnf <vars> <clauses>" header, then one
/// 0-terminated clause per line.
std::string to_dimacs(const CnfFormula& f);

/// Throws ParseError with the offending line number.
CnfFormula parse_dimacs(std::string_view text);

/// Reads "s SATISFIABLE" / "s UNSATISFIABLE" / "s UNKNOWN" and "v" value
/// lines; "c" lines and blank lines are ignored. Variables the solver does
/// not mention are false. Throws ParseError on any other line.
SolveResult parse_solver_output(std::string_view text, int num_vars);

}  // namespace zss

#include <gtest/gtest.h>

#include <random>

#include "zss/dimacs.hpp"
#include "zss/encode.hpp"
#include "zss/error.hpp"

using namespace zss;

namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Dimacs, WritesHeaderCommentsAndClauses) {
  CnfFormula f;
  f.num_vars = 3;
  f.comments = {"hello"};
  f.add_clause({1, -2});
  f.add_clause({3});
  EXPECT_EQ(to_dimacs(f), "c hello\np cnf 3 2\n1 -2 0\n3 0\n");
}

TEST(Dimacs, RoundTripEncodings) {
  for (int n = 1; n <= 5; ++n) {
    ZssEncoding enc = encode_query(n, n + 1, n, true);
    enc.cnf.comments = {"zss encoding", "n=" + std::to_string(n)};
    const CnfFormula back = parse_dimacs(to_dimacs(enc.cnf));
    EXPECT_EQ(back.num_vars, enc.cnf.num_vars);
    EXPECT_EQ(back.clauses, enc.cnf.clauses);
    EXPECT_EQ(back.comments, enc.cnf.comments);
  }
}

TEST(Dimacs, AcceptsFreeFormClauses) {
  const CnfFormula f = parse_dimacs("p cnf 3 2\n1 -2\n 0 3\t0\r\n\n");
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0], (Clause{1, -2}));
  EXPECT_EQ(f.clauses[1], (Clause{3}));
}

TEST(Dimacs, RejectsMalformedInput) {
  EXPECT_EQ(parse_error_line("1 2 0\n"), 1);
  EXPECT_EQ(parse_error_line("c x\np cnf 2\n"), 2);
  EXPECT_EQ(parse_error_line("p cnf 2 1\np cnf 2 1\n"), 2);
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 x 0\n"), 2);
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 3 0\n"), 2);
  EXPECT_EQ(parse_error_line("p cnf 2 2\n0\n"), 2);
  EXPECT_EQ(parse_error_line("p cnf 2 1\n1 2\n"), 3);
  EXPECT_EQ(parse_error_line("p cnf 2 2\n1 2 0\n"), 0);
  EXPECT_EQ(parse_error_line(""), 1);
}

TEST(SolverOutput, ParsesStatusAndValues) {
  const SolveResult r = parse_solver_output("c comment\ns SATISFIABLE\nv 1 -2\nv 3 0\n", 4);
  EXPECT_EQ(r.status, SolveStatus::Sat);
  ASSERT_TRUE(r.model);
  EXPECT_EQ(*r.model, (std::vector<bool>{false, true, false, true, false}));
  EXPECT_EQ(parse_solver_output("s UNSATISFIABLE\n", 2).status, SolveStatus::Unsat);
  EXPECT_FALSE(parse_solver_output("s UNSATISFIABLE\n", 2).model);
  EXPECT_EQ(parse_solver_output("s UNKNOWN\n", 2).status, SolveStatus::Unknown);
}

TEST(SolverOutput, RejectsGarbage) {
  EXPECT_THROW(parse_solver_output("", 1), ParseError);
  EXPECT_THROW(parse_solver_output("s MAYBE\n", 1), ParseError);
  EXPECT_THROW(parse_solver_output("s SATISFIABLE\nv 1 y 0\n", 1), ParseError);
  EXPECT_THROW(parse_solver_output("s SATISFIABLE\nv 5 0\n", 1), ParseError);
  EXPECT_THROW(parse_solver_output("s SATISFIABLE\nhello\n", 1), ParseError);
}

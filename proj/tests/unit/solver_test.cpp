#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "zss/encode.hpp"
#include "zss/error.hpp"
#include "zss/solver.hpp"

using namespace zss;

namespace {

class FakeSolver : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("zss_solver_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  // A shell script printing `output`; the CNF path arrives as $1.
  std::string script(const std::string& name, const std::string& output, int code = 0) {
    const auto path = dir_ / name;
    std::ofstream out(path);
    out << "#!/bin/sh\ntest -f \"$1\" || exit 3\ncat <<'END'\n" << output << "END\nexit " << code << "\n";
    out.close();
    std::filesystem::permissions(path, std::filesystem::perms::owner_all);
    return path.string();
  }

  std::filesystem::path dir_;
};

CnfFormula small_formula() {
  CnfFormula f;
  f.num_vars = 2;
  f.add_clause({1});
  f.add_clause({-1, 2});
  return f;
}

}  // namespace

TEST(InternalBackend, SolvesAndVerifies) {
  const InternalBackend backend;
  const SolveResult r = solve(small_formula(), backend);
  ASSERT_EQ(r.status, SolveStatus::Sat);
  EXPECT_TRUE((*r.model)[1]);
  EXPECT_TRUE((*r.model)[2]);
  EXPECT_EQ(r.stats.backend, "internal-cdcl");
  EXPECT_EQ(solve(encode_query(5, 5, 6, true).cnf, backend).status, SolveStatus::Unsat);
}

TEST(InternalBackend, SessionIsIncremental) {
  const InternalBackend backend;
  auto session = backend.open(small_formula());
  EXPECT_EQ(session->solve().status, SolveStatus::Sat);
  const std::vector<int> assume{-2};
  EXPECT_EQ(session->solve(assume).status, SolveStatus::Unsat);
  const std::vector<int> block{-2};
  session->add_clause(block);
  EXPECT_EQ(session->solve().status, SolveStatus::Unsat);
}

TEST(InternalBackend, LimitsGiveUnknown) {
  const InternalBackend backend(sat::Limits{1, -1.0});
  EXPECT_EQ(solve(encode_query(7, 7, 12, true).cnf, backend).status, SolveStatus::Unknown);
}

TEST_F(FakeSolver, ReadsModel) {
  const ExternalBackend backend(script("ok.sh", "s SATISFIABLE\nv 1 2 0\n", 10) + " {cnf}", dir_);
  const SolveResult r = solve(small_formula(), backend);
  EXPECT_EQ(r.status, SolveStatus::Sat);
  EXPECT_EQ(r.stats.backend.rfind("external:", 0), 0u);
  // The temporary CNF is removed; only the script remains.
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir_)) ++files;
  EXPECT_EQ(files, 1u);
}

TEST_F(FakeSolver, PathAppendedWithoutPlaceholder) {
  const ExternalBackend backend(script("unsat.sh", "s UNSATISFIABLE\n", 20), dir_);
  EXPECT_EQ(solve(small_formula(), backend).status, SolveStatus::Unsat);
}

TEST_F(FakeSolver, BogusModelIsIntegrityError) {
  const ExternalBackend backend(script("bad.sh", "s SATISFIABLE\nv -1 2 0\n", 10), dir_);
  EXPECT_THROW(solve(small_formula(), backend), IntegrityError);
}

TEST_F(FakeSolver, UnusableOutputAndCrash) {
  const ExternalBackend garbage(script("garbage.sh", "hello\n", 0), dir_);
  EXPECT_THROW(solve(small_formula(), garbage), ParseError);
  const ExternalBackend crash(script("crash.sh", "segfault\n", 139), dir_);
  EXPECT_THROW(solve(small_formula(), crash), EnvironmentError);
}

TEST_F(FakeSolver, MissingExecutableIsEnvironmentError) {
  const ExternalBackend backend((dir_ / "no-such-solver").string(), dir_);
  EXPECT_THROW(solve(small_formula(), backend), EnvironmentError);
  EXPECT_THROW(ExternalBackend(""), ArgumentError);
}

TEST(MakeBackend, ChoosesByCommand) {
  EXPECT_EQ(make_backend(std::nullopt)->name(), "internal-cdcl");
  EXPECT_EQ(make_backend(std::string())->name(), "internal-cdcl");
  EXPECT_EQ(make_backend(std::string("kissat -q"))->name(), "external:kissat -q");
}

#include "zss/solver.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>

#include "zss/dimacs.hpp"
#include "zss/error.hpp"

namespace zss {

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat:
      return "SAT";
    case SolveStatus::Unsat:
      return "UNSAT";
    case SolveStatus::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class InternalSession final : public SatSession {
 public:
  InternalSession(const CnfFormula& f, sat::Limits limits) : limits_(limits) {
    solver_.reserve_vars(f.num_vars);
    num_vars_ = f.num_vars;
    for (const Clause& c : f.clauses) solver_.add_clause(c);
  }

  void add_clause(std::span<const int> clause) override {
    for (int lit : clause) num_vars_ = std::max(num_vars_, std::abs(lit));
    solver_.add_clause(clause);
  }

  SolveResult solve(std::span<const int> assumptions) override {
    const auto start = Clock::now();
    const std::uint64_t before = solver_.stats().conflicts;
    SolveResult r;
    r.status = solver_.solve(assumptions, limits_);
    r.stats.seconds = seconds_since(start);
    r.stats.conflicts = solver_.stats().conflicts - before;
    r.stats.backend = "internal-cdcl";
    if (r.status == SolveStatus::Sat) {
      std::vector<bool> model = solver_.model();
      model.resize(static_cast<std::size_t>(num_vars_) + 1, false);
      r.model = std::move(model);
    }
    return r;
  }

 private:
  sat::Cdcl solver_;
  sat::Limits limits_;
  int num_vars_ = 0;
};

class ExternalSession final : public SatSession {
 public:
  ExternalSession(const ExternalBackend& backend, CnfFormula f) : backend_(backend), formula_(std::move(f)) {}

  void add_clause(std::span<const int> clause) override {
    for (int lit : clause) formula_.num_vars = std::max(formula_.num_vars, std::abs(lit));
    formula_.add_clause(Clause(clause.begin(), clause.end()));
  }

  SolveResult solve(std::span<const int> assumptions) override {
    if (assumptions.empty()) return backend_.run(formula_);
    CnfFormula with_units = formula_;
    for (int lit : assumptions) {
      with_units.num_vars = std::max(with_units.num_vars, std::abs(lit));
      with_units.add_clause({lit});
    }
    return backend_.run(with_units);
  }

 private:
  const ExternalBackend& backend_;
  CnfFormula formula_;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

std::unique_ptr<SatSession> InternalBackend::open(const CnfFormula& f) const {
  return std::make_unique<InternalSession>(f, limits_);
}

ExternalBackend::ExternalBackend(std::string command_template, std::filesystem::path work_dir)
    : command_(std::move(command_template)), work_dir_(std::move(work_dir)) {
  if (command_.empty()) throw ArgumentError("empty solver command");
}

std::unique_ptr<SatSession> ExternalBackend::open(const CnfFormula& f) const {
  return std::make_unique<ExternalSession>(*this, f);
}

SolveResult ExternalBackend::run(const CnfFormula& f) const {
  static std::atomic<unsigned> counter{0};
  const std::filesystem::path dir = work_dir_.empty() ? std::filesystem::temp_directory_path() : work_dir_;
  const std::filesystem::path cnf_path =
      dir / ("zss-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".cnf");
  {
    std::ofstream out(cnf_path, std::ios::binary | std::ios::trunc);
    if (!out) throw EnvironmentError("cannot write CNF file " + cnf_path.string());
    out << to_dimacs(f);
  }

  std::string cmd = command_;
  const std::string quoted = shell_quote(cnf_path.string());
  if (const auto pos = cmd.find("{cnf}"); pos != std::string::npos) {
    cmd.replace(pos, 5, quoted);
  } else {
    cmd += " " + quoted;
  }

  const auto start = Clock::now();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    std::filesystem::remove(cnf_path);
    throw EnvironmentError("cannot start solver: " + cmd);
  }
  std::string output;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  const int status = ::pclose(pipe);
  std::error_code ignored;
  std::filesystem::remove(cnf_path, ignored);

  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code == 127 || code == 126) throw EnvironmentError("solver command not runnable: " + cmd);
  SolveResult r;
  try {
    r = parse_solver_output(output, f.num_vars);
  } catch (const ParseError& e) {
    if (code != 0 && code != 10 && code != 20) {
      throw EnvironmentError("solver exited with code " + std::to_string(code) + " and unusable output (" +
                             e.what() + ")");
    }
    throw;
  }
  r.stats.seconds = seconds_since(start);
  r.stats.backend = name();
  return r;
}

std::unique_ptr<SatBackend> make_backend(const std::optional<std::string>& solver_command) {
  if (solver_command && !solver_command->empty()) return std::make_unique<ExternalBackend>(*solver_command);
  return std::make_unique<InternalBackend>();
}

SolveResult solve(const CnfFormula& f, const SatBackend& backend) {
  SolveResult r = backend.open(f)->solve();
  if (r.status == SolveStatus::Sat && (!r.model || !f.satisfied_by(*r.model))) {
    throw IntegrityError("backend " + backend.name() + " returned a model that falsifies the formula");
  }
  return r;
}

}  // namespace zss

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zss/cdcl.hpp"
#include "zss/cnf.hpp"

namespace zss {

using SolveStatus = sat::Status;

std::string_view to_string(SolveStatus s);

struct SolveStats {
  double seconds = 0.0;
  std::uint64_t conflicts = 0;
  std::string backend;
};

/// model is indexed by variable (entry 0 unused) and present iff status is Sat.
struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<std::vector<bool>> model;
  SolveStats stats;
};

/// A formula loaded into a solver. Clauses may be appended between solves.
class SatSession {
 public:
  virtual ~SatSession() = default;
  virtual void add_clause(std::span<const int> clause) = 0;
  virtual SolveResult solve(std::span<const int> assumptions = {}) = 0;
};

class SatBackend {
 public:
  virtual ~SatBackend() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<SatSession> open(const CnfFormula& f) const = 0;
};

/// The built-in CDCL engine; sessions are truly incremental.
class InternalBackend final : public SatBackend {
 public:
  explicit InternalBackend(sat::Limits limits = {}) : limits_(limits) {}
  std::string name() const override { return "internal-cdcl"; }
  std::unique_ptr<SatSession> open(const CnfFormula& f) const override;

 private:
  sat::Limits limits_;
};

/// Any DIMACS solver run as a subprocess. The command template receives the
/// CNF path in place of "{cnf}" (or appended when the placeholder is absent)
/// and must print the conventional "s ..." and "v ..." lines on stdout.
/// Each solve rewrites the formula and starts the process from scratch.
class ExternalBackend final : public SatBackend {
 public:
  explicit ExternalBackend(std::string command_template, std::filesystem::path work_dir = {});
  std::string name() const override { return "external:" + command_; }
  std::unique_ptr<SatSession> open(const CnfFormula& f) const override;

  /// Runs one formula; exposed for sessions and tests.
  SolveResult run(const CnfFormula& f) const;

 private:
  std::string command_;
  std::filesystem::path work_dir_;
};

/// Environment variable naming an external solver command template.
inline constexpr const char* kSolverEnvVar = "ZSS_SOLVER";

/// External backend when a command is given, the internal engine otherwise.
std::unique_ptr<SatBackend> make_backend(const std::optional<std::string>& solver_command);

/// One-shot solve; a Sat model is always checked against every clause and
/// an IntegrityError is thrown if it falsifies one.
SolveResult solve(const CnfFormula& f, const SatBackend& backend);

}  // namespace zss

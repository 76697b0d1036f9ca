#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace zss::cli {

struct RunConfig {
  std::optional<std::string> solver_command;
  std::filesystem::path results_dir = "zss-results";
  int budget_cells = 36;
  int threads = 1;
  unsigned long long seed = 1;

  /// Throws ArgumentError when a field is out of range.
  void validate() const;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// The process environment.
std::optional<std::string> process_env(const std::string& name);

/// key=value lines; '#' starts a comment, blank lines are skipped. Keys:
/// solver_command, results_dir, budget_cells, threads, seed. Unknown keys and
/// malformed values raise ParseError with the line number.
void apply_config_text(RunConfig& cfg, const std::string& text);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

/// ZSS_SOLVER and ZSS_RESULTS_DIR override the file.
void apply_env(RunConfig& cfg, const EnvLookup& env);

}  // namespace zss::cli

#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zss/error.hpp"
#include "zss/solver.hpp"

namespace zss::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& value, const std::string& key, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw ParseError("config key '" + key + "' needs an integer", line, 0);
  return v;
}

}  // namespace

void RunConfig::validate() const {
  if (budget_cells < 16) throw ArgumentError("budget_cells must be at least 16");
  if (threads < 1) throw ArgumentError("threads must be at least 1");
  if (results_dir.empty()) throw ArgumentError("results_dir must not be empty");
}

std::optional<std::string> process_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", line, 0);
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key == "solver_command") {
      cfg.solver_command = value.empty() ? std::nullopt : std::optional<std::string>(value);
    } else if (key == "results_dir") {
      cfg.results_dir = value;
    } else if (key == "budget_cells") {
      cfg.budget_cells = static_cast<int>(parse_int(value, key, line));
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(parse_int(value, key, line));
    } else if (key == "seed") {
      cfg.seed = static_cast<unsigned long long>(parse_int(value, key, line));
    } else {
      throw ParseError("unknown config key '" + key + "'", line, 0);
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw EnvironmentError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str());
}

void apply_env(RunConfig& cfg, const EnvLookup& env) {
  if (auto v = env(kSolverEnvVar); v && !v->empty()) cfg.solver_command = *v;
  if (auto v = env("ZSS_RESULTS_DIR"); v && !v->empty()) cfg.results_dir = *v;
}

}  // namespace zss::cli

#include "zss/dimacs.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <vector>

#include "zss/error.hpp"

namespace zss {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = nl + 1;
  }
  return out;
}

// Whitespace-separated integers; nullopt on any non-integer token.
std::optional<std::vector<long long>> parse_ints(std::string_view s) {
  std::vector<long long> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
    if (k >= s.size()) break;
    std::size_t e = k;
    while (e < s.size() && s[e] != ' ' && s[e] != '\t') ++e;
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + k, s.data() + e, v);
    if (ec != std::errc{} || ptr != s.data() + e) return std::nullopt;
    out.push_back(v);
    k = e;
  }
  return out;
}

}  // namespace

std::string to_dimacs(const CnfFormula& f) {
  std::string out;
  for (const std::string& c : f.comments) out += "c " + c + "\n";
  out += "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const Clause& c : f.clauses) {
    for (int lit : c) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header = false;
  long long declared_clauses = 0;
  Clause pending;
  const auto lines = split_lines(text);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const int line_no = static_cast<int>(r) + 1;
    const std::string_view line = lines[r];
    if (line.empty()) continue;
    if (line[0] == 'c') {
      if (!header) f.comments.emplace_back(line.size() > 2 ? line.substr(2) : std::string_view{});
      continue;
    }
    if (line[0] == 'p') {
      if (header) throw ParseError("duplicate problem line", line_no, 1);
      if (line.substr(0, 6) != "p cnf ") throw ParseError("expected 'p cnf <vars> <clauses>'", line_no, 1);
      const auto nums = parse_ints(line.substr(6));
      if (!nums || nums->size() != 2 || (*nums)[0] < 0 || (*nums)[1] < 0) {
        throw ParseError("malformed problem line", line_no, 1);
      }
      f.num_vars = static_cast<int>((*nums)[0]);
      declared_clauses = (*nums)[1];
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before problem line", line_no, 1);
    const auto nums = parse_ints(line);
    if (!nums) throw ParseError("non-integer token in clause", line_no, 1);
    for (long long v : *nums) {
      if (v == 0) {
        if (pending.empty()) throw ParseError("empty clause", line_no, 1);
        try {
          f.add_clause(std::move(pending));
        } catch (const ArgumentError& e) {
          throw ParseError(e.what(), line_no, 1);
        }
        pending.clear();
      } else {
        pending.push_back(static_cast<int>(v));
      }
    }
  }
  if (!header) throw ParseError("missing problem line", static_cast<int>(lines.size()), 0);
  if (!pending.empty()) throw ParseError("last clause is not 0-terminated", static_cast<int>(lines.size()), 0);
  if (static_cast<long long>(f.clauses.size()) != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(f.clauses.size()),
                     0, 0);
  }
  return f;
}

SolveResult parse_solver_output(std::string_view text, int num_vars) {
  SolveResult result;
  bool have_status = false;
  std::vector<bool> model(static_cast<std::size_t>(num_vars) + 1, false);
  const auto lines = split_lines(text);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const int line_no = static_cast<int>(r) + 1;
    const std::string_view line = lines[r];
    if (line.empty() || line[0] == 'c') continue;
    if (line.substr(0, 2) == "s ") {
      const std::string_view word = line.substr(2);
      if (word == "SATISFIABLE") {
        result.status = SolveStatus::Sat;
      } else if (word == "UNSATISFIABLE") {
        result.status = SolveStatus::Unsat;
      } else if (word == "UNKNOWN") {
        result.status = SolveStatus::Unknown;
      } else {
        throw ParseError("unknown status line: " + std::string(line), line_no, 3);
      }
      have_status = true;
      continue;
    }
    if (line.substr(0, 2) == "v " || line == "v") {
      const auto nums = parse_ints(line.substr(1));
      if (!nums) throw ParseError("malformed value line: " + std::string(line), line_no, 1);
      for (long long v : *nums) {
        if (v == 0) continue;
        const long long var = std::llabs(v);
        if (var > num_vars) throw ParseError("value for unknown variable: " + std::string(line), line_no, 1);
        model[static_cast<std::size_t>(var)] = v > 0;
      }
      continue;
    }
    throw ParseError("unexpected solver output line: " + std::string(line), line_no, 1);
  }
  if (!have_status) throw ParseError("solver output has no status line", static_cast<int>(lines.size()), 0);
  if (result.status == SolveStatus::Sat) result.model = std::move(model);
  return result;
}

}  // namespace zss

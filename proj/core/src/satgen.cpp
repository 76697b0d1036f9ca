#include "zss/satgen.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <string>

#include "zss/error.hpp"

namespace zss {

namespace {

void require_answer(const SolveResult& r, const SatBackend& backend) {
  if (r.status == SolveStatus::Unknown) {
    throw EnvironmentError("backend " + backend.name() + " gave no answer (limit reached or solver failure)");
  }
}

bool lex_less(const Grid& a, const Grid& b) { return lex_compare(a, b) < 0; }

// Depth-first over cells. Each node holds a model extending the prefix, so
// the branch agreeing with it needs no solve.
void split(SatSession& session, const ZssEncoding& enc, const SatBackend& backend, std::vector<int>& prefix,
           const Grid& model, std::vector<Grid>& out, std::size_t limit) {
  const int cells = enc.vars.cell_count();
  if (static_cast<int>(prefix.size()) == cells) {
    out.push_back(model);
    return;
  }
  const int var = static_cast<int>(prefix.size()) + 1;
  const int i = (var - 1) / enc.vars.m + 1;
  const int j = (var - 1) % enc.vars.m + 1;
  const int lit = model.is_plus(i, j) ? var : -var;

  prefix.push_back(lit);
  split(session, enc, backend, prefix, model, out, limit);
  prefix.back() = -lit;
  if (out.size() < limit) {
    const SolveResult r = session.solve(prefix);
    require_answer(r, backend);
    if (r.status == SolveStatus::Sat) split(session, enc, backend, prefix, verify_model(enc, *r.model), out, limit);
  }
  prefix.pop_back();
}

}  // namespace

GridOutcome solve_encoding(const ZssEncoding& enc, const SatBackend& backend) {
  GridOutcome out;
  out.result = solve(enc.cnf, backend);
  if (out.result.status == SolveStatus::Sat) out.grid = verify_model(enc, *out.result.model);
  return out;
}

std::vector<Grid> enumerate_models(const ZssEncoding& enc, const SatBackend& backend,
                                   const EnumerateOptions& options) {
  auto session = backend.open(enc.cnf);
  std::vector<Grid> found;
  if (options.strategy == EnumerationStrategy::Split) {
    if (options.orbit_blocking) throw ArgumentError("orbit blocking needs the blocking strategy");
    const std::size_t limit = options.limit.value_or(std::numeric_limits<std::size_t>::max());
    const SolveResult r = session->solve();
    require_answer(r, backend);
    if (r.status == SolveStatus::Sat && limit > 0) {
      std::vector<int> prefix;
      split(*session, enc, backend, prefix, verify_model(enc, *r.model), found, limit);
    }
    if (found.size() > limit) found.erase(found.begin() + static_cast<std::ptrdiff_t>(limit), found.end());
    std::sort(found.begin(), found.end(), lex_less);
    return found;
  }
  while (!options.limit || found.size() < *options.limit) {
    const SolveResult r = session->solve();
    require_answer(r, backend);
    if (r.status == SolveStatus::Unsat) break;
    const Grid g = verify_model(enc, *r.model);
    if (options.orbit_blocking) {
      const auto images = orbit(g, *options.orbit_blocking);
      for (const Grid& image : images) {
        if (!constraint_violations(enc.constraints, image).empty()) {
          throw ArgumentError("orbit blocking with a group that does not preserve the encoded constraints");
        }
        session->add_clause(blocking_clause(enc.vars, image));
      }
      found.push_back(*std::min_element(images.begin(), images.end(), lex_less));
    } else {
      session->add_clause(blocking_clause(enc.vars, g));
      found.push_back(g);
    }
  }
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

std::optional<std::map<std::pair<int, int>, int>> cell_backbone(const ZssEncoding& enc, const SatBackend& backend) {
  auto session = backend.open(enc.cnf);
  SolveResult r = session->solve();
  require_answer(r, backend);
  if (r.status == SolveStatus::Unsat) return std::nullopt;
  Grid g = verify_model(enc, *r.model);

  const int n = enc.vars.n;
  const int m = enc.vars.m;
  // Candidates keep the value of every model seen so far.
  std::vector<int> candidate(static_cast<std::size_t>(n * m), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) candidate[static_cast<std::size_t>(enc.vars.cell_var(i, j) - 1)] = g.at(i, j);

  std::map<std::pair<int, int>, int> forced;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int var = enc.vars.cell_var(i, j);
      const int value = candidate[static_cast<std::size_t>(var - 1)];
      if (value == 0) continue;
      const int flip[1] = {value == 1 ? -var : var};
      r = session->solve(flip);
      require_answer(r, backend);
      if (r.status == SolveStatus::Unsat) {
        forced[{i, j}] = value;
        continue;
      }
      const Grid other = verify_model(enc, *r.model);
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= m; ++b) {
          int& c = candidate[static_cast<std::size_t>(enc.vars.cell_var(a, b) - 1)];
          if (c != 0 && c != other.at(a, b)) c = 0;
        }
      }
    }
  }
  return forced;
}

BaseCaseResult verify_base_case(int n, const SatBackend& backend, const std::function<int(int)>& bound_fn) {
  if (n < 1) throw ArgumentError("base case needs n >= 1");
  BaseCaseResult out;
  out.n = n;
  out.bound = bound_fn(n);
  const ZssEncoding enc = encode_query(n, n, out.bound, true);
  GridOutcome o = solve_encoding(enc, backend);
  require_answer(o.result, backend);
  out.result = std::move(o.result);
  out.counterexample = std::move(o.grid);
  return out;
}

DescentResult min_disc_descent(int n, int m, const SatBackend& backend) {
  if (n < 1 || m < 1) throw ArgumentError("descent needs positive dimensions");
  DescentResult out;
  const Grid start = checkerboard(n, m);
  int bound = n * m;
  if (is_zero_sum_square_free(start) && !is_diagonal(start)) {
    bound = std::abs(discrepancy(start));
    out.witness = start;
    out.d = bound;
  }
  // Starting from a known witness, the first query can already ask for less.
  if (out.witness) bound -= 2;
  while (bound >= 0) {
    const ZssEncoding enc = encode_query(n, m, bound, true);
    GridOutcome o = solve_encoding(enc, backend);
    require_answer(o.result, backend);
    DescentStep step{bound, o.result.status, std::nullopt, o.result.stats.seconds};
    if (o.result.status == SolveStatus::Unsat) {
      out.steps.push_back(step);
      break;
    }
    const int found = std::abs(discrepancy(*o.grid));
    step.found_disc = found;
    out.steps.push_back(step);
    out.d = found;
    out.witness = std::move(o.grid);
    bound = found - 2;
  }
  return out;
}

}  // namespace zss

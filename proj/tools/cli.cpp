#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "render.hpp"
#include "zss/certificate.hpp"
#include "zss/constructions.hpp"
#include "zss/error.hpp"
#include "zss/matrix_io.hpp"
#include "zss/satgen.hpp"
#include "zss/search.hpp"
#include "zss/structure.hpp"

namespace zss::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fixed2(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

// Tab-separated by default; --human pads the columns instead.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, bool human) const {
    if (!human) {
      print_tsv(out, header_);
      for (const auto& r : rows_) print_tsv(out, r);
      return;
    }
    std::vector<std::size_t> width(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
      for (std::size_t k = 0; k < r.size() && k < width.size(); ++k) width[k] = std::max(width[k], r[k].size());
    };
    widen(header_);
    for (const auto& r : rows_) widen(r);
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        out << (k ? "  " : "") << std::left << std::setw(static_cast<int>(width[k])) << r[k];
      }
      out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  static void print_tsv(std::ostream& out, const std::vector<std::string>& r) {
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "\t" : "") << r[k];
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string square_text(const SquareRef& sq) {
  return "(" + std::to_string(sq.i) + "," + std::to_string(sq.j) + "," + std::to_string(sq.s) + ")";
}

Grid read_grid(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_matrix(text);
  }
  return read_matrix_file(path);
}

void write_grid(const Grid& g, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << format_matrix(g);
  } else {
    write_matrix_file(path, g);
  }
}

struct Context {
  RunConfig cfg;
  Streams io;
  bool human = false;
  bool store = true;

  std::unique_ptr<SatBackend> backend() const { return make_backend(cfg.solver_command); }
  BruteForceConfig brute() const { return {cfg.budget_cells, cfg.threads}; }
  CertificateStore certificates() const { return CertificateStore(cfg.results_dir); }
};

// ---------------------------------------------------------------- check

int cmd_check(Context& ctx, const std::string& path) {
  const Grid g = read_grid(path, ctx.io.in);
  const auto sq = find_zero_sum_square(g);
  const auto form = diagonal_form(g);
  std::ostream& out = ctx.io.out;
  out << "size=" << g.rows() << "x" << g.cols() << '\n';
  out << "disc=" << discrepancy(g) << ", ";
  if (sq) {
    out << "zero-sum square at " << square_text(*sq);
  } else {
    out << "zero-sum-square-free";
  }
  out << ", ";
  if (form) {
    out << "diagonal (flip_h=" << form->flip_h << ", flip_v=" << form->flip_v << ", t=" << form->t << ")";
  } else {
    out << "non-diagonal";
  }
  out << '\n';
  return sq ? kNegative : kOk;
}

// ------------------------------------------------------------ construct

int cmd_construct(Context& ctx, const std::string& kind, const std::vector<int>& dims, const std::string& output) {
  Grid g(1, 1);
  auto need = [&](std::size_t count, const char* usage) {
    if (dims.size() != count) throw ArgumentError(std::string("usage: construct ") + usage);
  };
  if (kind == "tdiag") {
    need(3, "tdiag ROWS COLS T");
    if (dims[0] < 1 || dims[1] < 1) throw ArgumentError("dimensions must be positive");
    g = make_t_diagonal(dims[0], dims[1], dims[2]);
  } else if (kind == "checkerboard") {
    need(2, "checkerboard ROWS COLS");
    if (dims[0] < 1 || dims[1] < 1) throw ArgumentError("dimensions must be positive");
    g = checkerboard(dims[0], dims[1]);
  } else if (kind == "figure5") {
    if (!dims.empty() && dims != std::vector<int>{8, 8}) throw ArgumentError("figure5 is fixed at 8x8");
    g = figure5_grid();
  } else {
    throw ArgumentError("unknown construction '" + kind + "' (tdiag, checkerboard, figure5)");
  }
  write_grid(g, output, ctx.io.out);
  return kOk;
}

// --------------------------------------------------------------- search

struct SearchArgs {
  int n = 0;
  int m = 0;
  bool min_disc = false;
  bool enumerate = false;
  std::optional<int> bound;
  bool nondiagonal = false;
  bool force_sat = false;
};

void store_all(Context& ctx, const std::vector<Certificate>& certs) {
  if (!ctx.store) return;
  CertificateStore store = ctx.certificates();
  for (const Certificate& c : certs) store.save(c);
}

int cmd_search(Context& ctx, const SearchArgs& a) {
  if (a.n < 1 || a.m < 1) throw ArgumentError("dimensions must be positive");
  if (a.min_disc == a.enumerate) throw ArgumentError("choose exactly one of --min-disc and --enumerate");
  if (a.enumerate && !a.bound) throw ArgumentError("--enumerate needs --bound D");
  if (a.bound && *a.bound < 0) throw ArgumentError("--bound must be non-negative");
  const SymmetryGroup group = SymmetryGroup::reflections_negation();
  const bool brute = !a.force_sat && a.n * a.m <= ctx.cfg.budget_cells && a.m <= Grid::kWordBits;
  const auto start = Clock::now();

  std::vector<Certificate> certs;
  std::optional<int> f;
  if (a.min_disc) {
    if (brute) {
      MinDiscResult r = min_discrepancy(a.n, a.m, true, group, ctx.brute());
      f = r.d;
      certs = std::move(r.witnesses);
    } else {
      const auto backend = ctx.backend();
      const DescentResult r = min_disc_descent(a.n, a.m, *backend);
      f = r.d;
      if (r.d) {
        const ZssEncoding enc = encode_query(a.n, a.m, *r.d, true);
        EnumerateOptions opt;
        opt.orbit_blocking = group;
        const QueryParams params{a.n, a.m, *r.d, true, group};
        for (const Grid& g : enumerate_models(enc, *backend, opt)) {
          certs.push_back(Certificate::make(g, Producer::Sat, params));
        }
        std::sort(certs.begin(), certs.end(),
                  [](const Certificate& x, const Certificate& y) { return x.canonical_key < y.canonical_key; });
        if (ctx.store) {
          ctx.certificates().save_cnf(std::to_string(a.n) + "x" + std::to_string(a.m) + "-d" + std::to_string(*r.d) +
                                          "-nondiagonal",
                                      enc.cnf);
        }
      }
    }
    store_all(ctx, certs);
    Table t({"n", "m", "f", "classes", "producer", "seconds"});
    t.add({std::to_string(a.n), std::to_string(a.m), f ? std::to_string(*f) : "none", std::to_string(certs.size()),
           brute ? "BRUTE_FORCE" : "SAT", fixed2(seconds_since(start))});
    t.print(ctx.io.out, ctx.human);
    return kOk;
  }

  if (brute) {
    certs = enumerate_zssf({a.n, a.m, a.bound, a.nondiagonal, group}, ctx.brute());
  } else {
    const auto backend = ctx.backend();
    const ZssEncoding enc = encode_query(a.n, a.m, a.bound, a.nondiagonal);
    EnumerateOptions opt;
    opt.orbit_blocking = group;
    const QueryParams params{a.n, a.m, a.bound, a.nondiagonal, group};
    for (const Grid& g : enumerate_models(enc, *backend, opt)) certs.push_back(Certificate::make(g, Producer::Sat, params));
    std::sort(certs.begin(), certs.end(),
              [](const Certificate& x, const Certificate& y) { return x.canonical_key < y.canonical_key; });
  }
  store_all(ctx, certs);
  Table t({"n", "m", "bound", "nondiagonal", "classes", "producer", "seconds"});
  t.add({std::to_string(a.n), std::to_string(a.m), std::to_string(*a.bound), a.nondiagonal ? "yes" : "no",
         std::to_string(certs.size()), brute ? "BRUTE_FORCE" : "SAT", fixed2(seconds_since(start))});
  t.print(ctx.io.out, ctx.human);
  return certs.empty() ? kNegative : kOk;
}

// --------------------------------------------------------------- verify

int verify_theorem(Context& ctx, int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) throw ArgumentError("need 1 <= --n-min <= --n-max");
  const auto backend = ctx.backend();
  std::vector<int> ns;
  for (int n = n_min; n <= n_max; ++n) ns.push_back(n);

  // Independent instances; results are printed in n order.
  std::vector<std::pair<BaseCaseResult, double>> results(ns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < ns.size(); k = next++) {
      const auto t0 = Clock::now();
      results[k].first = verify_base_case(ns[k], *backend);
      results[k].second = seconds_since(t0);
    }
  };
  const int pool = std::max(1, std::min(ctx.cfg.threads, static_cast<int>(ns.size())));
  std::vector<std::future<void>> jobs;
  for (int t = 0; t < pool; ++t) jobs.push_back(std::async(std::launch::async, worker));
  for (auto& j : jobs) j.get();

  Table t({"n", "bound", "status", "expected", "seconds"});
  bool ok = true;
  for (const auto& [r, secs] : results) {
    const bool excluded = r.n <= 4;
    const SolveStatus expected = excluded ? SolveStatus::Sat : SolveStatus::Unsat;
    if (r.result.status != expected) ok = false;
    t.add({std::to_string(r.n), std::to_string(r.bound), std::string(to_string(r.result.status)),
           std::string(to_string(expected)), fixed2(secs)});
    if (r.counterexample && !excluded) {
      ctx.io.err << "counterexample for n=" << r.n << ":\n" << format_matrix(*r.counterexample);
      if (ctx.store) {
        ctx.certificates().save(Certificate::make(*r.counterexample, Producer::Sat,
                                                  {r.n, r.n, r.bound, true, SymmetryGroup::reflections_negation()}));
      }
    }
  }
  t.print(ctx.io.out, ctx.human);
  ctx.io.out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kNegative;
}

int verify_claim5(Context& ctx, int lo, int hi) {
  const Claim5Report report = zss::verify_claim5(lo, hi);
  ctx.io.out << report.table();
  ctx.io.out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kOk : kNegative;
}

struct ForcedCase {
  int n, p, q, s, t_prime;
};

ForcedCase random_forced_case(std::mt19937_64& rng, int n_min, int n_max) {
  for (;;) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int n = pick(n_min, n_max);
    if (n < 4) continue;
    const int s = pick(3, n - 1);
    const int tp = pick(2, 2 * s - 3);
    const int p = pick(1, n - s);
    const int q = pick(1, n - s);
    if (tp + p + q - 2 <= n) return {n, p, q, s, tp};
  }
}

int verify_lemma1(Context& ctx, int count, int n_max) {
  if (count < 1) throw ArgumentError("--fuzz needs a positive count");
  if (n_max < 4) throw ArgumentError("--n-max must be at least 4");
  std::mt19937_64 rng(ctx.cfg.seed);
  const auto backend = ctx.backend();
  Table t({"case", "n", "p", "q", "s", "t'", "t", "lemma", "oracle", "completions", "status"});
  int failures = 0;
  for (int k = 1; k <= count; ++k) {
    const ForcedCase c = random_forced_case(rng, 4, n_max);
    const auto entries = lemma1_forced_entries(c.n, c.p, c.q, c.s, c.t_prime);
    std::vector<FixedCell> fixed;
    const Grid sub = make_t_diagonal(c.s + 1, c.s + 1, c.t_prime);
    for (int i = 1; i <= c.s + 1; ++i)
      for (int j = 1; j <= c.s + 1; ++j) fixed.push_back({c.p + i - 1, c.q + j - 1, sub.at(i, j)});
    const ForcedOracle oracle = forced_entry_oracle(c.n, fixed, *backend, ctx.brute());

    std::string status = "ok";
    if (!oracle.has_completion) {
      status = "vacuous";
    } else {
      for (const ForcedEntry& e : entries) {
        const auto it = oracle.forced.find({e.i, e.j});
        if (it == oracle.forced.end() || it->second != e.value) {
          status = "FAIL at (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
          break;
        }
      }
      if (status == "ok" && oracle.method == ForcedOracle::Method::BruteForce) {
        // Direct re-check on every completion, independent of the intersection.
        enumerate_completions(
            c.n, c.n, fixed,
            [&](const Grid& g) {
              for (const ForcedEntry& e : entries) {
                if (g.at(e.i, e.j) != e.value) {
                  status = "FAIL in completion at (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
                  return false;
                }
              }
              return true;
            },
            std::nullopt, ctx.brute());
      }
    }
    if (status.rfind("FAIL", 0) == 0) ++failures;
    t.add({std::to_string(k), std::to_string(c.n), std::to_string(c.p), std::to_string(c.q), std::to_string(c.s),
           std::to_string(c.t_prime), std::to_string(c.t_prime + c.p + c.q - 2), std::to_string(entries.size()),
           std::to_string(oracle.forced.size()),
           oracle.completions ? std::to_string(*oracle.completions) : std::string("-"), status});
  }
  t.print(ctx.io.out, ctx.human);
  ctx.io.out << (failures == 0 ? "PASS" : "FAIL") << " failures=" << failures << '\n';
  return failures == 0 ? kOk : kNegative;
}

// Grids with independently biased quadrants, so that corner blocks of
// opposite sign (and hence the sliding step) actually occur.
Grid random_quadrant_grid(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double mode = unit(rng);
  double rho[4];
  for (double& r : rho) r = mode < 0.5 ? 0.5 : unit(rng);
  Grid g(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int quad = (i > n / 2 ? 2 : 0) + (j > n / 2 ? 1 : 0);
      if (unit(rng) < rho[quad]) g.set(i, j, 1);
    }
  }
  return g;
}

int verify_lemma3(Context& ctx, int count, int n_lo, int n_hi) {
  if (count < 1) throw ArgumentError("--fuzz needs a positive count");
  if (n_lo < 8 || n_hi < n_lo) throw ArgumentError("need 8 <= --n-min <= --n-max");
  std::mt19937_64 rng(ctx.cfg.seed);
  Table t({"n", "grids", "corner", "slid", "failures"});
  int failures = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    int corner = 0;
    int slid = 0;
    int bad = 0;
    for (int k = 0; k < count;) {
      const Grid g = random_quadrant_grid(rng, n);
      if (4 * std::abs(discrepancy(g)) > n * n) continue;
      ++k;
      const BalancedWindow w = find_balanced_submatrix(g);
      const int d = discrepancy(subgrid(g, w.p, w.p + w.size - 1, w.q, w.q + w.size - 1));
      const bool size_ok = 2 * w.size >= n - 1 && 2 * w.size <= n + 1;
      if (!size_ok || d != w.disc || 4 * std::abs(d) > w.size * w.size) ++bad;
      const int far = n - w.size + 1;
      const bool at_corner = (w.p == 1 || w.p == far) && (w.q == 1 || w.q == far);
      ++(at_corner ? corner : slid);
    }
    failures += bad;
    t.add({std::to_string(n), std::to_string(count), std::to_string(corner), std::to_string(slid), std::to_string(bad)});
  }
  t.print(ctx.io.out, ctx.human);
  ctx.io.out << (failures == 0 ? "PASS" : "FAIL") << " failures=" << failures << '\n';
  return failures == 0 ? kOk : kNegative;
}

int verify_obs2(Context& ctx, int count, int n_max) {
  if (count < 0) throw ArgumentError("--fuzz must be non-negative");
  std::mt19937_64 rng(ctx.cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int failures = 0;
  long long violations = 0;
  // Random grids: every reported witness must be a genuine zero-sum square.
  for (int k = 0; k < count; ++k) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const double rho = unit(rng);
    Grid g(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i == j || unit(rng) < rho) g.set(i, j, 1);
    for (const Observation2Violation& v : observation2_check(g)) {
      ++violations;
      if (square_sum(g, v.witness) != 0 || g.at(v.i, v.j) != -1 || g.at(v.j, v.i) != -1) ++failures;
    }
    if (is_zero_sum_square_free(g) && !observation2_check(g).empty()) ++failures;
  }
  Table t({"n", "zssf_grids", "violations"});
  const auto backend = ctx.backend();
  for (int n = 1; n <= n_max; ++n) {
    std::vector<FixedCell> diag;
    for (int i = 1; i <= n; ++i) diag.push_back({i, i, 1});
    const ZssEncoding enc = fix_cells(encode_zssf(n, n), diag);
    EnumerateOptions opt;
    opt.strategy = EnumerationStrategy::Split;
    const auto grids = enumerate_models(enc, *backend, opt);
    std::size_t bad = 0;
    for (const Grid& g : grids) bad += observation2_check(g).size();
    failures += static_cast<int>(bad);
    t.add({std::to_string(n), std::to_string(grids.size()), std::to_string(bad)});
  }
  t.print(ctx.io.out, ctx.human);
  ctx.io.out << "random grids=" << count << " witnessed violations=" << violations << '\n';
  ctx.io.out << (failures == 0 ? "PASS" : "FAIL") << " failures=" << failures << '\n';
  return failures == 0 ? kOk : kNegative;
}

// --------------------------------------------------------------- render

int cmd_render(Context& ctx, const std::string& path, const std::string& format, bool color) {
  const Grid g = read_grid(path, ctx.io.in);
  if (format == "ascii") {
    ctx.io.out << render_ascii(g, color);
  } else if (format == "svg") {
    ctx.io.out << render_svg(g);
  } else {
    throw ArgumentError("unknown format '" + format + "' (ascii, svg)");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io, const EnvLookup& env) {
  CLI::App app{"Zero-sum square free {-1,+1} grids: checks, constructions, searches and verification"};
  app.name("zss");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> solver;
  std::optional<std::string> results_dir;
  std::optional<int> threads;
  std::optional<int> budget;
  std::optional<unsigned long long> seed;
  bool human = false;
  bool no_store = false;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--solver", solver, "external DIMACS solver command ({cnf} is replaced by the file path)");
  app.add_option("--results-dir", results_dir, "certificate store directory");
  app.add_option("--threads", threads, "worker threads");
  app.add_option("--budget-cells", budget, "largest free-cell count for brute force");
  app.add_option("--seed", seed, "seed for fuzz commands");
  app.add_flag("--human", human, "aligned tables instead of TSV");
  app.add_flag("--no-store", no_store, "do not write certificates");

  std::string check_path;
  auto* check = app.add_subcommand("check", "report discrepancy, zero-sum squares and diagonality");
  check->add_option("matrix", check_path, "matrix file, or - for stdin")->required();

  std::string kind;
  std::vector<int> dims;
  std::string output;
  auto* construct = app.add_subcommand("construct", "emit tdiag ROWS COLS T, checkerboard ROWS COLS, or figure5");
  construct->add_option("kind", kind, "tdiag, checkerboard or figure5")->required();
  construct->add_option("dims", dims, "dimensions (and t for tdiag)");
  construct->add_option("-o,--output", output, "output file (default stdout)");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "least discrepancy or class enumeration");
  search->add_option("n", sa.n)->required();
  search->add_option("m", sa.m)->required();
  search->add_flag("--min-disc", sa.min_disc, "least |disc| over non-diagonal zero-sum square free grids");
  search->add_flag("--enumerate", sa.enumerate, "enumerate symmetry classes");
  search->add_option("--bound", sa.bound, "|disc| bound for --enumerate");
  search->add_flag("--nondiagonal", sa.nondiagonal, "only non-diagonal grids (always on for --min-disc)");
  search->add_flag("--sat", sa.force_sat, "use the SAT route even within the brute-force budget");

  auto* verify = app.add_subcommand("verify", "re-check results");
  verify->require_subcommand(1);
  verify->fallthrough();
  int n_min = 5;
  int n_max = 10;
  auto* theorem = verify->add_subcommand("theorem", "no non-diagonal grid with |disc| <= n^2/4 for n in range");
  theorem->add_option("--n-min", n_min);
  theorem->add_option("--n-max", n_max)->required();
  std::vector<int> range;
  auto* claim5 = verify->add_subcommand("claim5", "numeric range check of the t inequality");
  claim5->add_option("--range", range, "N_LO N_HI")->required()->expected(2);
  int fuzz = 50;
  int lemma_n_max = 7;
  auto* lemma1 = verify->add_subcommand("lemma1", "forced entries against the completion oracle");
  lemma1->add_option("--fuzz", fuzz);
  lemma1->add_option("--n-max", lemma_n_max);
  int l3_lo = 8;
  int l3_hi = 13;
  int l3_fuzz = 10000;
  auto* lemma3 = verify->add_subcommand("lemma3", "balanced window finder on random grids");
  lemma3->add_option("--fuzz", l3_fuzz);
  lemma3->add_option("--n-min", l3_lo);
  lemma3->add_option("--n-max", l3_hi);
  int o2_fuzz = 1000;
  int o2_n_max = 7;
  auto* obs2 = verify->add_subcommand("obs2", "diagonal-pair observation");
  obs2->add_option("--fuzz", o2_fuzz);
  obs2->add_option("--n-max", o2_n_max);

  std::string render_path;
  std::string format = "ascii";
  bool color = false;
  auto* render = app.add_subcommand("render", "draw a matrix file");
  render->add_option("matrix", render_path)->required();
  render->add_option("--format", format, "ascii or svg");
  render->add_flag("--color", color, "ANSI colors for ascii");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Context ctx{RunConfig{}, io};
    if (!config_path.empty()) apply_config_file(ctx.cfg, config_path);
    apply_env(ctx.cfg, env);
    if (solver) ctx.cfg.solver_command = *solver;
    if (results_dir) ctx.cfg.results_dir = *results_dir;
    if (threads) ctx.cfg.threads = *threads;
    if (budget) ctx.cfg.budget_cells = *budget;
    if (seed) ctx.cfg.seed = *seed;
    ctx.cfg.validate();
    ctx.human = human;
    ctx.store = !no_store;

    if (check->parsed()) return cmd_check(ctx, check_path);
    if (construct->parsed()) return cmd_construct(ctx, kind, dims, output);
    if (search->parsed()) return cmd_search(ctx, sa);
    if (render->parsed()) return cmd_render(ctx, render_path, format, color);
    if (theorem->parsed()) return verify_theorem(ctx, n_min, n_max);
    if (claim5->parsed()) return verify_claim5(ctx, range[0], range[1]);
    if (lemma1->parsed()) return verify_lemma1(ctx, fuzz, lemma_n_max);
    if (lemma3->parsed()) return verify_lemma3(ctx, l3_fuzz, l3_lo, l3_hi);
    if (obs2->parsed()) return verify_obs2(ctx, o2_fuzz, o2_n_max);
    io.err << app.help();
    return kUsage;
  } catch (const ParseError& e) {
    io.err << "parse error";
    if (e.line() > 0) io.err << " at line " << e.line();
    if (e.column() > 0) io.err << ", column " << e.column();
    io.err << ": " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundsError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const EnvironmentError& e) {
    io.err << "environment error: " << e.what() << '\n';
    return kEnvironment;
  } catch (const IntegrityError& e) {
    io.err << "integrity error: " << e.what() << '\n';
    return kEnvironment;
  } catch (const InternalError& e) {
    io.err << "internal error: " << e.what() << '\n';
    return kEnvironment;
  }
}

}  // namespace zss::cli

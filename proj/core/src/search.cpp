#include "zss/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "zss/error.hpp"
#include "zss/satgen.hpp"

namespace zss {

namespace {

// Row-major backtracking over the cells of an n x m grid. A cell is checked
// against every square it completes as the bottom-right corner, so a partial
// assignment is cut the moment any fully assigned square sums to zero.
class Backtracker {
 public:
  Backtracker(int n, int m, std::vector<int> fixed, std::atomic<int>* bound)
      : n_(n), m_(m), fixed_(std::move(fixed)), bound_(bound), rows_(static_cast<std::size_t>(n), 0) {
    const int cells = n * m;
    fixed_sum_after_.assign(static_cast<std::size_t>(cells) + 1, 0);
    free_after_.assign(static_cast<std::size_t>(cells) + 1, 0);
    for (int k = cells - 1; k >= 0; --k) {
      const int f = fixed_[static_cast<std::size_t>(k)];
      fixed_sum_after_[static_cast<std::size_t>(k)] = fixed_sum_after_[static_cast<std::size_t>(k) + 1] + f;
      free_after_[static_cast<std::size_t>(k)] = free_after_[static_cast<std::size_t>(k) + 1] + (f == 0 ? 1 : 0);
    }
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    stop_ = false;
    descend(0, 0, leaf);
  }

 private:
  bool corner(int i, int j) const { return (rows_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1u; }

  bool completes_zero_square(int i, int j) const {
    const bool d = corner(i, j);
    for (int s = 1; s < std::min(i, j); ++s) {
      const int plus = corner(i - s, j - s) + corner(i - s, j) + corner(i, j - s) + d;
      if (plus == 2) return true;
    }
    return false;
  }

  bool within_bound(int next, int sum) const {
    if (bound_ == nullptr) return true;
    const int c = sum + fixed_sum_after_[static_cast<std::size_t>(next)];
    const int r = free_after_[static_cast<std::size_t>(next)];
    int least;
    if (c - r > 0) {
      least = c - r;
    } else if (c + r < 0) {
      least = -(c + r);
    } else {
      least = std::abs(c - r) % 2;
    }
    return least <= bound_->load(std::memory_order_relaxed);
  }

  Grid snapshot() const {
    Grid g(n_, m_);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= m_; ++j)
        if (corner(i, j)) g.set(i, j, 1);
    return g;
  }

  template <class Leaf>
  void descend(int k, int sum, Leaf& leaf) {
    if (stop_) return;
    if (k == n_ * m_) {
      if (!leaf(snapshot())) stop_ = true;
      return;
    }
    const int i = k / m_ + 1;
    const int j = k % m_ + 1;
    const int f = fixed_[static_cast<std::size_t>(k)];
    std::uint64_t& row = rows_[static_cast<std::size_t>(i - 1)];
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    for (int value : {-1, 1}) {
      if (f != 0 && f != value) continue;
      if (value == 1) {
        row |= bit;
      } else {
        row &= ~bit;
      }
      if (!completes_zero_square(i, j) && within_bound(k + 1, sum + value)) descend(k + 1, sum + value, leaf);
      if (stop_) break;
    }
    row &= ~bit;
  }

  int n_;
  int m_;
  std::vector<int> fixed_;
  std::atomic<int>* bound_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> fixed_sum_after_;
  std::vector<int> free_after_;
  bool stop_ = false;
};

std::vector<int> fixed_vector(int n, int m, std::span<const FixedCell> fixed) {
  if (n < 1 || m < 1) throw ArgumentError("grid dimensions must be positive");
  if (m > Grid::kWordBits) throw ArgumentError("brute force supports at most 64 columns");
  std::vector<int> out(static_cast<std::size_t>(n * m), 0);
  for (const FixedCell& fc : fixed) {
    if (fc.i < 1 || fc.i > n || fc.j < 1 || fc.j > m) {
      throw ArgumentError("fixed cell (" + std::to_string(fc.i) + "," + std::to_string(fc.j) + ") outside grid");
    }
    if (fc.value != 1 && fc.value != -1) throw ArgumentError("fixed cell value must be -1 or +1");
    int& slot = out[static_cast<std::size_t>((fc.i - 1) * m + fc.j - 1)];
    if (slot != 0 && slot != fc.value) {
      throw ArgumentError("contradictory fixed values at (" + std::to_string(fc.i) + "," + std::to_string(fc.j) + ")");
    }
    slot = fc.value;
  }
  return out;
}

int count_free(const std::vector<int>& fixed) {
  return static_cast<int>(std::count(fixed.begin(), fixed.end(), 0));
}

void check_budget(int free_cells, const BruteForceConfig& config) {
  if (free_cells > config.budget_cells) {
    throw BudgetError("brute force refused: " + std::to_string(free_cells) + " free cells exceed the budget of " +
                      std::to_string(config.budget_cells) + "; use the SAT route instead");
  }
}

// Splits the search on the first few free cells. Jobs are listed in the
// order the sequential search would visit them.
std::vector<std::vector<int>> split_jobs(const std::vector<int>& fixed, int threads) {
  std::vector<std::vector<int>> jobs{fixed};
  if (threads <= 1) return jobs;
  int depth = 0;
  while ((1 << depth) < 4 * threads) ++depth;
  for (std::size_t k = 0; k < fixed.size() && depth > 0; ++k) {
    if (fixed[k] != 0) continue;
    std::vector<std::vector<int>> next;
    for (const auto& job : jobs) {
      for (int value : {-1, 1}) {
        next.push_back(job);
        next.back()[k] = value;
      }
    }
    jobs = std::move(next);
    --depth;
  }
  return jobs;
}

// Runs one leaf collector per job on a small pool; results stay per job so
// the merged order does not depend on scheduling.
template <class Result, class MakeLeaf>
std::vector<Result> run_jobs(int n, int m, const std::vector<std::vector<int>>& jobs, int threads,
                             std::atomic<int>* bound, MakeLeaf make_leaf) {
  std::vector<Result> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      Backtracker bt(n, m, jobs[k], bound);
      auto leaf = make_leaf(results[k]);
      bt.run(leaf);
    }
  };
  const int pool = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::thread> ts;
    for (int t = 0; t < pool; ++t) ts.emplace_back(worker);
    for (auto& t : ts) t.join();
  }
  return results;
}

bool key_less(const Certificate& a, const Certificate& b) { return a.canonical_key < b.canonical_key; }

}  // namespace

std::uint64_t enumerate_completions(int n, int m, std::span<const FixedCell> fixed,
                                    const std::function<bool(const Grid&)>& visit, std::optional<int> max_abs_disc,
                                    const BruteForceConfig& config) {
  std::vector<int> cells = fixed_vector(n, m, fixed);
  check_budget(count_free(cells), config);
  std::atomic<int> bound{max_abs_disc.value_or(std::numeric_limits<int>::max())};
  std::atomic<int>* bound_ptr = max_abs_disc ? &bound : nullptr;

  if (config.threads <= 1) {
    std::uint64_t count = 0;
    Backtracker bt(n, m, std::move(cells), bound_ptr);
    bt.run([&](const Grid& g) {
      ++count;
      return visit(g);
    });
    return count;
  }
  const auto jobs = split_jobs(cells, config.threads);
  auto per_job = run_jobs<std::vector<Grid>>(n, m, jobs, config.threads, bound_ptr, [](std::vector<Grid>& out) {
    return [&out](const Grid& g) {
      out.push_back(g);
      return true;
    };
  });
  std::uint64_t count = 0;
  for (const auto& grids : per_job) {
    for (const Grid& g : grids) {
      ++count;
      if (!visit(g)) return count;
    }
  }
  return count;
}

std::vector<Certificate> enumerate_zssf(const EnumerateQuery& q, const BruteForceConfig& config) {
  if (q.max_abs_disc && *q.max_abs_disc < 0) throw ArgumentError("discrepancy bound must be non-negative");
  std::vector<int> cells = fixed_vector(q.n, q.m, {});
  check_budget(count_free(cells), config);
  group_elements(q.group, q.n, q.m);  // validates transpose against the shape
  // Canonical grids start with -1 whenever negation is in the group.
  if (q.group.use_negation) cells[0] = -1;

  const QueryParams params{q.n, q.m, q.max_abs_disc, q.nondiagonal_only, q.group};
  std::atomic<int> bound{q.max_abs_disc.value_or(std::numeric_limits<int>::max())};
  std::atomic<int>* bound_ptr = q.max_abs_disc ? &bound : nullptr;
  const auto jobs = split_jobs(cells, config.threads);
  auto per_job = run_jobs<std::vector<Certificate>>(
      q.n, q.m, jobs, config.threads, bound_ptr, [&](std::vector<Certificate>& out) {
        return [&out, &q, &params](const Grid& g) {
          if (q.nondiagonal_only && is_diagonal(g)) return true;
          if (!(canonicalize(g, q.group) == g)) return true;
          out.push_back(Certificate::make(g, Producer::BruteForce, params));
          return true;
        };
      });
  std::vector<Certificate> all;
  for (auto& certs : per_job) std::move(certs.begin(), certs.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), key_less);
  return all;
}

MinDiscResult min_discrepancy(int n, int m, bool nondiagonal_only, const SymmetryGroup& group,
                              const BruteForceConfig& config) {
  std::vector<int> cells = fixed_vector(n, m, {});
  check_budget(count_free(cells), config);
  group_elements(group, n, m);
  if (group.use_negation) cells[0] = -1;

  std::atomic<int> best{std::numeric_limits<int>::max()};
  const QueryParams params{n, m, std::nullopt, nondiagonal_only, group};
  const auto jobs = split_jobs(cells, config.threads);
  auto per_job = run_jobs<std::vector<Certificate>>(n, m, jobs, config.threads, &best, [&](std::vector<Certificate>& out) {
    return [&out, &best, &group, &params, nondiagonal_only](const Grid& g) {
      if (nondiagonal_only && is_diagonal(g)) return true;
      const int d = std::abs(discrepancy(g));
      int current = best.load();
      while (d < current && !best.compare_exchange_weak(current, d)) {
      }
      if (d <= best.load() && canonicalize(g, group) == g) {
        out.push_back(Certificate::make(g, Producer::BruteForce, params));
      }
      return true;
    };
  });

  MinDiscResult result;
  if (best.load() == std::numeric_limits<int>::max()) return result;
  result.d = best.load();
  for (auto& certs : per_job) {
    for (Certificate& c : certs) {
      if (std::abs(c.disc) == *result.d) result.witnesses.push_back(std::move(c));
    }
  }
  std::sort(result.witnesses.begin(), result.witnesses.end(), key_less);
  for (Certificate& c : result.witnesses) c.params.bound = result.d;
  return result;
}

ForcedOracle forced_entry_oracle(int n, std::span<const FixedCell> fixed, const SatBackend& backend,
                                 const BruteForceConfig& config) {
  const std::vector<int> cells = fixed_vector(n, n, fixed);
  ForcedOracle out;
  if (count_free(cells) <= config.budget_cells) {
    out.method = ForcedOracle::Method::BruteForce;
    std::optional<Grid> meet;  // entries agreeing across completions so far
    std::vector<bool> agree(static_cast<std::size_t>(n * n), true);
    const std::uint64_t count = enumerate_completions(
        n, n, fixed,
        [&](const Grid& g) {
          if (!meet) {
            meet = g;
            return true;
          }
          for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
              if (g.plus_unchecked(i, j) != meet->plus_unchecked(i, j)) agree[static_cast<std::size_t>((i - 1) * n + j - 1)] = false;
          return true;
        },
        std::nullopt, config);
    out.completions = count;
    out.has_completion = meet.has_value();
    if (meet) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (agree[static_cast<std::size_t>((i - 1) * n + j - 1)]) out.forced[{i, j}] = meet->at(i, j);
    }
    return out;
  }
  out.method = ForcedOracle::Method::SatBackbone;
  ZssEncoding enc = fix_cells(encode_zssf(n, n), fixed);
  auto backbone = cell_backbone(enc, backend);
  out.has_completion = backbone.has_value();
  if (backbone) out.forced = std::move(*backbone);
  return out;
}

}  // namespace zss

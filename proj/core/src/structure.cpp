#include "zss/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "zss/error.hpp"

namespace zss {

std::string_view to_string(Region r) {
  switch (r) {
    case Region::DiagBlock:
      return "DIAG_BLOCK";
    case Region::Cond2:
      return "COND2";
    case Region::Cond3:
      return "COND3";
    case Region::Cond4:
      return "COND4";
  }
  return "?";
}

std::vector<ForcedEntry> lemma1_forced_entries(int n, int p, int q, int s, int t_prime) {
  const auto fail = [&](const std::string& why) {
    throw PreconditionError("lemma hypothesis violated (n=" + std::to_string(n) + " p=" + std::to_string(p) +
                            " q=" + std::to_string(q) + " s=" + std::to_string(s) +
                            " t'=" + std::to_string(t_prime) + "): " + why);
  };
  if (n < 1 || s < 1 || p < 1 || q < 1 || p + s > n || q + s > n) fail("submatrix does not fit");
  if (t_prime < 2 || t_prime > 2 * s - 3) fail("need 2 <= t' <= 2s - 3");
  const int t = t_prime + p + q - 2;
  if (t > n) fail("need t = t' + p + q - 2 <= n");

  const int reach = t + t / 2;
  const int block = std::min(reach, n);
  std::map<std::pair<int, int>, ForcedEntry> cells;
  const auto force = [&](int i, int j, int value, Region region) {
    if (i < 1 || j < 1 || i > n || j > n) return;
    auto [it, inserted] = cells.try_emplace({i, j}, ForcedEntry{i, j, value, region});
    if (!inserted && it->second.value != value) {
      throw InternalError("conflicting forced values at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  };

  for (int i = 1; i <= block; ++i)
    for (int j = 1; j <= block; ++j) force(i, j, i + j <= t + 1 ? 1 : -1, Region::DiagBlock);

  // Beyond the block every determined entry carries the far-corner value.
  constexpr int kFar = -1;
  const int last = std::min(reach + t - 2, n);
  for (int j = reach + 1; j <= last; ++j) {
    for (int i = std::max(1, j - t + 1); i <= reach; ++i) {
      force(i, j, kFar, Region::Cond2);
      force(j, i, kFar, Region::Cond2);
    }
    const int top = t / 2 - (j - reach - 1) / 2;
    for (int i = 1; i <= top; ++i) {
      force(i, j, kFar, Region::Cond3);
      force(j, i, kFar, Region::Cond3);
    }
    force(j, j, kFar, Region::Cond4);
  }

  std::vector<ForcedEntry> out;
  out.reserve(cells.size());
  for (const auto& [key, e] : cells) out.push_back(e);
  return out;
}

std::vector<Observation2Violation> observation2_check(const Grid& g) {
  if (!g.is_square()) throw ArgumentError("observation check needs a square grid");
  const int n = g.rows();
  for (int i = 1; i <= n; ++i) {
    if (!g.is_plus(i, i)) throw PreconditionError("diagonal entry a(" + std::to_string(i) + "," + std::to_string(i) + ") is -1");
  }
  std::vector<Observation2Violation> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!g.is_plus(i, j) && !g.is_plus(j, i)) out.push_back({i, j, SquareRef{i, i, j - i}});
  return out;
}

namespace {

int window_disc(const Grid& g, int p, int q, int w) {
  int plus = 0;
  for (int i = p; i < p + w; ++i)
    for (int j = q; j < q + w; ++j) plus += g.plus_unchecked(i, j) ? 1 : 0;
  return 2 * plus - w * w;
}

bool balanced(int disc, int w) { return 4 * std::abs(disc) <= w * w; }

int column_sum(const Grid& g, int p, int j, int w) {
  int sum = 0;
  for (int i = p; i < p + w; ++i) sum += g.plus_unchecked(i, j) ? 1 : -1;
  return sum;
}

int row_sum(const Grid& g, int i, int q, int w) {
  int sum = 0;
  for (int j = q; j < q + w; ++j) sum += g.plus_unchecked(i, j) ? 1 : -1;
  return sum;
}

// Slides a w x w window from one corner block to the adjacent one along a
// band. Returns the first balanced window.
std::optional<BalancedWindow> slide(const Grid& g, int w, bool horizontal, int band) {
  const int n = g.rows();
  int p = horizontal ? band : 1;
  int q = horizontal ? 1 : band;
  int disc = window_disc(g, p, q, w);
  if (balanced(disc, w)) return BalancedWindow{p, q, w, disc};
  // k is the leading index of the current window; each step drops line k
  // and picks up line k + w.
  for (int k = 1; k + w <= n; ++k) {
    const int prev = disc;
    if (horizontal) {
      disc = prev - column_sum(g, p, k, w) + column_sum(g, p, k + w, w);
      q = k + 1;
    } else {
      disc = prev - row_sum(g, k, q, w) + row_sum(g, k + w, q, w);
      p = k + 1;
    }
    if (std::abs(disc - prev) > 2 * w) throw InternalError("sliding window step exceeded 2w");
    if (balanced(disc, w)) return BalancedWindow{p, q, w, disc};
  }
  return std::nullopt;
}

}  // namespace

BalancedWindow find_balanced_submatrix(const Grid& g) {
  if (!g.is_square()) throw ArgumentError("balanced window search needs a square grid");
  const int n = g.rows();
  if (n < 8) throw ArgumentError("balanced window search needs n >= 8, got " + std::to_string(n));
  const int total = discrepancy(g);
  if (4 * std::abs(total) > n * n) {
    throw ArgumentError("balanced window search needs |disc| <= n^2/4, got disc=" + std::to_string(total));
  }

  const int small = n / 2;
  const int large = (n + 1) / 2;
  std::vector<int> sizes{small};
  if (large != small) sizes.push_back(large);

  for (int w : sizes) {
    const int far = n - w + 1;
    const std::pair<int, int> corners[4] = {{1, 1}, {1, far}, {far, 1}, {far, far}};
    for (const auto& [p, q] : corners) {
      const int d = window_disc(g, p, q, w);
      if (balanced(d, w)) return BalancedWindow{p, q, w, d};
    }
  }

  for (int w : sizes) {
    const int far = n - w + 1;
    const int d1 = window_disc(g, 1, 1, w);
    const int d2 = window_disc(g, 1, far, w);
    const int d3 = window_disc(g, far, 1, w);
    const int d4 = window_disc(g, far, far, w);
    const auto opposite = [](int a, int b) { return (a > 0 && b < 0) || (a < 0 && b > 0); };
    // (A1,A2) top band, (A3,A4) bottom band, (A1,A3) left band, (A2,A4) right band.
    struct Pair {
      bool differ;
      bool horizontal;
      int band;
    };
    const Pair pairs[4] = {{opposite(d1, d2), true, 1},
                           {opposite(d3, d4), true, far},
                           {opposite(d1, d3), false, 1},
                           {opposite(d2, d4), false, far}};
    for (const Pair& pr : pairs) {
      if (!pr.differ) continue;
      if (auto win = slide(g, w, pr.horizontal, pr.band)) return *win;
      throw InternalError("sliding between opposite-sign corner blocks found no balanced window");
    }
  }
  throw InternalError("no balanced corner block and no opposite-sign corner pair");
}

int min_t_bound(int n_prime) {
  if (n_prime < 1) throw ArgumentError("n' must be positive");
  // Least t with (2t + 1)^2 >= 3 n'^2 + 1.
  const long long target = 3LL * n_prime * n_prime + 1;
  long long t = 0;
  while ((2 * t + 1) * (2 * t + 1) < target) ++t;
  return static_cast<int>(t);
}

bool Claim5Report::passed() const {
  return std::none_of(rows.begin(), rows.end(), [](const Claim5Row& r) { return r.in_hypothesis && !r.ok(); });
}

std::string Claim5Report::table() const {
  std::ostringstream out;
  out << "n\tt_min\tt_max\tstatus\n";
  for (const Claim5Row& r : rows) {
    out << r.n << '\t' << r.t_min << '\t' << r.t_max << '\t';
    if (r.ok()) {
      out << "ok";
    } else {
      out << (r.in_hypothesis ? "FAIL" : "fail(out-of-hypothesis)") << " t=";
      for (std::size_t k = 0; k < r.failing_t.size(); ++k) out << (k ? "," : "") << r.failing_t[k];
    }
    out << '\n';
  }
  return out.str();
}

Claim5Report verify_claim5(int n_lo, int n_hi) {
  if (n_lo < 5) throw ArgumentError("range must start at n >= 5");
  if (n_hi < n_lo) throw ArgumentError("empty range");
  Claim5Report report;
  for (int n = n_lo; n <= n_hi; ++n) {
    Claim5Row row;
    row.n = n;
    row.in_hypothesis = n >= kClaim5HypothesisMin;
    row.t_max = 2 * n / 3;
    row.t_min = row.t_max + 1;
    for (int np = n / 2; np <= (n + 1) / 2; ++np) {  // ceil((n-1)/2) = floor(n/2)
      const int lo = min_t_bound(np);
      row.t_min = std::min(row.t_min, lo);
      for (int t = lo; t <= row.t_max; ++t) {
        if (2 * t + t / 2 - 2 < n - 1 && std::find(row.failing_t.begin(), row.failing_t.end(), t) == row.failing_t.end()) {
          row.failing_t.push_back(t);
        }
      }
    }
    std::sort(row.failing_t.begin(), row.failing_t.end());
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace zss

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracle.hpp"
#include "zss/error.hpp"
#include "zss/search.hpp"
#include "zss/solver.hpp"
#include "zss/structure.hpp"

using namespace zss;

namespace {

std::vector<FixedCell> diagonal_block(int p, int q, int s, int t_prime) {
  std::vector<FixedCell> out;
  for (int a = 1; a <= s + 1; ++a)
    for (int b = 1; b <= s + 1; ++b) out.push_back({p + a - 1, q + b - 1, a + b <= t_prime + 1 ? 1 : -1});
  return out;
}

// '+', '-' or '.' per cell.
std::vector<std::string> pattern(int n, const std::vector<ForcedEntry>& entries) {
  std::vector<std::string> rows(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(n), '.'));
  for (const auto& e : entries) rows[e.i - 1][e.j - 1] = e.value > 0 ? '+' : '-';
  return rows;
}

struct Hypothesis {
  int n, p, q, s, t_prime;
};

Hypothesis random_hypothesis(std::mt19937_64& rng, int n_min, int n_max) {
  for (;;) {
    Hypothesis h{};
    h.n = n_min + static_cast<int>(rng() % (n_max - n_min + 1));
    if (h.n < 4) continue;
    h.s = 3 + static_cast<int>(rng() % (h.n - 3));
    if (h.s > h.n - 1) continue;
    h.t_prime = 2 + static_cast<int>(rng() % (2 * h.s - 4));
    h.p = 1 + static_cast<int>(rng() % (h.n - h.s));
    h.q = 1 + static_cast<int>(rng() % (h.n - h.s));
    if (h.t_prime + h.p + h.q - 2 <= h.n) return h;
  }
}

}  // namespace

TEST(ForcedEntries, FullBlockWhenItCoversTheGrid) {
  const auto entries = lemma1_forced_entries(6, 1, 1, 5, 4);
  ASSERT_EQ(entries.size(), 36u);
  for (const auto& e : entries) {
    EXPECT_EQ(e.region, Region::DiagBlock);
    EXPECT_EQ(e.value, e.i + e.j <= 5 ? 1 : -1);
  }
}

TEST(ForcedEntries, GoldenPatternEleven) {
  // t' = 3 block at (2, 2): t = 5, the block N spans 7 x 7.
  const std::vector<std::string> want = {
      "+++++-----.", "++++-----..", "+++----....", "++------...", "+--------..", "----------.",
      "----------.", "--.-----...", "--..---.-..", "-....--..-.", "...........",
  };
  EXPECT_EQ(pattern(11, lemma1_forced_entries(11, 2, 2, 3, 3)), want);
}

TEST(ForcedEntries, RegionsAndOrdering) {
  const auto entries = lemma1_forced_entries(11, 2, 2, 3, 3);
  std::map<Region, int> count;
  for (std::size_t k = 1; k < entries.size(); ++k) {
    EXPECT_LT(std::pair(entries[k - 1].i, entries[k - 1].j), std::pair(entries[k].i, entries[k].j));
  }
  for (const auto& e : entries) {
    count[e.region]++;
    if (e.region != Region::DiagBlock) {
      EXPECT_EQ(e.value, -1);
    }
    if (e.region == Region::Cond4) {
      EXPECT_EQ(e.i, e.j);
    }
  }
  EXPECT_EQ(count[Region::DiagBlock], 49);
  EXPECT_GT(count[Region::Cond2], 0);
  EXPECT_GT(count[Region::Cond3], 0);
  EXPECT_GT(count[Region::Cond4], 0);
}

TEST(ForcedEntries, Preconditions) {
  EXPECT_THROW(lemma1_forced_entries(11, 2, 2, 2, 2), PreconditionError);  // t' > 2s - 3
  EXPECT_THROW(lemma1_forced_entries(11, 2, 2, 3, 1), PreconditionError);
  EXPECT_THROW(lemma1_forced_entries(11, 2, 2, 3, 4), PreconditionError);
  EXPECT_THROW(lemma1_forced_entries(5, 3, 3, 3, 3), PreconditionError);  // block does not fit
  EXPECT_THROW(lemma1_forced_entries(6, 3, 4, 3, 3), PreconditionError);  // t > n
}

TEST(ForcedEntries, SubsetOfBackboneNine) {
  const InternalBackend backend;
  const auto fixed = diagonal_block(2, 2, 3, 3);
  const ForcedOracle oracle = forced_entry_oracle(9, fixed, backend);
  ASSERT_TRUE(oracle.has_completion);
  EXPECT_EQ(oracle.method, ForcedOracle::Method::SatBackbone);
  for (const auto& e : lemma1_forced_entries(9, 2, 2, 3, 3)) {
    const auto it = oracle.forced.find({e.i, e.j});
    ASSERT_NE(it, oracle.forced.end()) << e.i << "," << e.j;
    EXPECT_EQ(it->second, e.value) << e.i << "," << e.j;
  }
}

TEST(ForcedEntries, SubsetOfBackboneEleven) {
  const InternalBackend backend;
  const ForcedOracle oracle = forced_entry_oracle(11, diagonal_block(2, 2, 3, 3), backend);
  ASSERT_TRUE(oracle.has_completion);
  for (const auto& e : lemma1_forced_entries(11, 2, 2, 3, 3)) {
    const auto it = oracle.forced.find({e.i, e.j});
    ASSERT_NE(it, oracle.forced.end()) << e.i << "," << e.j;
    EXPECT_EQ(it->second, e.value) << e.i << "," << e.j;
  }
}

TEST(ForcedEntries, SoundOnEveryCompletion) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 25; ++k) {
    const Hypothesis h = random_hypothesis(rng, 5, 6);
    const auto entries = lemma1_forced_entries(h.n, h.p, h.q, h.s, h.t_prime);
    std::uint64_t bad = 0;
    enumerate_completions(h.n, h.n, diagonal_block(h.p, h.q, h.s, h.t_prime), [&](const Grid& g) {
      for (const auto& e : entries) bad += g.at(e.i, e.j) != e.value;
      EXPECT_TRUE(oracle::zssf(oracle::to_mat(g)));
      return true;
    });
    EXPECT_EQ(bad, 0u) << "n=" << h.n << " p=" << h.p << " q=" << h.q << " s=" << h.s << " t'=" << h.t_prime;
  }
}

TEST(DiagonalPairs, Examples) {
  EXPECT_TRUE(observation2_check(Grid(5, 5, 1)).empty());
  Grid g(3, 3, 1);
  g.set(1, 3, -1);
  g.set(3, 1, -1);
  const auto v = observation2_check(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].i, 1);
  EXPECT_EQ(v[0].j, 3);
  EXPECT_EQ(v[0].witness, (SquareRef{1, 1, 2}));
  EXPECT_EQ(square_sum(g, v[0].witness), 0);
  Grid h(4, 4, 1);
  h.set(3, 3, -1);
  try {
    observation2_check(h);
    ADD_FAILURE();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
  }
  EXPECT_THROW(observation2_check(Grid(3, 4, 1)), ArgumentError);
}

TEST(DiagonalPairs, WitnessesAlwaysSumToZero) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 2000; ++k) {
    const int n = 2 + static_cast<int>(rng() % 10);
    Grid g = oracle::random_grid(rng, n, n);
    for (int i = 1; i <= n; ++i) g.set(i, i, 1);
    const auto v = observation2_check(g);
    std::size_t want = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) want += g.at(i, j) == -1 && g.at(j, i) == -1;
    EXPECT_EQ(v.size(), want);
    for (const auto& x : v) EXPECT_EQ(square_sum(g, x.witness), 0);
  }
}

TEST(DiagonalPairs, HoldsOnAllSmallFreeGrids) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<FixedCell> diag;
    for (int i = 1; i <= n; ++i) diag.push_back({i, i, 1});
    enumerate_completions(n, n, diag, [&](const Grid& g) {
      EXPECT_TRUE(observation2_check(g).empty()) << oracle::text(oracle::to_mat(g));
      return true;
    });
  }
}

TEST(BalancedWindow, ColumnAlternating) {
  Grid g(8, 8);
  for (int i = 1; i <= 8; ++i)
    for (int j = 2; j <= 8; j += 2) g.set(i, j, 1);
  const BalancedWindow w = find_balanced_submatrix(g);
  EXPECT_EQ(w.size, 4);
  EXPECT_EQ(w.disc, 0);
}

TEST(BalancedWindow, Preconditions) {
  EXPECT_THROW(find_balanced_submatrix(checkerboard(9, 9)), ArgumentError);
  EXPECT_THROW(find_balanced_submatrix(Grid(7, 7)), ArgumentError);
  EXPECT_THROW(find_balanced_submatrix(Grid(8, 9)), ArgumentError);
  EXPECT_THROW(find_balanced_submatrix(Grid(8, 8, 1)), ArgumentError);
}

TEST(BalancedWindow, SlidingPathIsExercised) {
  // Top-left and top-right blocks opposite signs, every corner block unbalanced.
  Grid g(8, 8);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      if ((j <= 4) == (i <= 4)) g.set(i, j, 1);
  ASSERT_EQ(discrepancy(g), 0);
  const BalancedWindow w = find_balanced_submatrix(g);
  const Grid sub = subgrid(g, w.p, w.p + w.size - 1, w.q, w.q + w.size - 1);
  EXPECT_EQ(discrepancy(sub), w.disc);
  EXPECT_LE(4 * std::abs(w.disc), w.size * w.size);
  EXPECT_FALSE((w.p == 1 || w.p + w.size - 1 == 8) && (w.q == 1 || w.q + w.size - 1 == 8));
}

TEST(BalancedWindow, RandomNineByNine) {
  std::mt19937_64 rng(77);
  int done = 0;
  while (done < 10000) {
    const Grid g = oracle::random_grid(rng, 9, 9);
    const int d = oracle::disc(oracle::to_mat(g));
    if (std::abs(d) > 20) continue;
    ++done;
    const BalancedWindow w = find_balanced_submatrix(g);
    ASSERT_TRUE(w.size == 4 || w.size == 5);
    ASSERT_GE(w.p, 1);
    ASSERT_GE(w.q, 1);
    ASSERT_LE(w.p + w.size - 1, 9);
    ASSERT_LE(w.q + w.size - 1, 9);
    int sum = 0;
    for (int i = w.p; i < w.p + w.size; ++i)
      for (int j = w.q; j < w.q + w.size; ++j) sum += g.at(i, j);
    ASSERT_EQ(sum, w.disc);
    ASSERT_LE(4 * std::abs(sum), w.size * w.size);
  }
}

TEST(BalancedWindow, SkewedGridsAllSizes) {
  std::mt19937_64 rng(78);
  for (int n = 8; n <= 16; ++n) {
    for (int k = 0; k < 1500; ++k) {
      // Bias each quadrant separately so corner blocks disagree in sign.
      Grid g(n, n);
      const double bias[4] = {0.1 + 0.8 * (rng() % 100) / 100.0, 0.1 + 0.8 * (rng() % 100) / 100.0,
                              0.1 + 0.8 * (rng() % 100) / 100.0, 0.1 + 0.8 * (rng() % 100) / 100.0};
      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (u(rng) < bias[(i * 2 > n) * 2 + (j * 2 > n)]) g.set(i, j, 1);
      if (4 * std::abs(discrepancy(g)) > n * n) continue;
      const BalancedWindow w = find_balanced_submatrix(g);
      ASSERT_GE(2 * w.size, n - 1);
      ASSERT_LE(2 * w.size, n + 1);
      const int sum = oracle::disc(oracle::to_mat(subgrid(g, w.p, w.p + w.size - 1, w.q, w.q + w.size - 1)));
      ASSERT_EQ(sum, w.disc);
      ASSERT_LE(4 * std::abs(sum), w.size * w.size);
    }
  }
}

TEST(MinTBound, Examples) {
  EXPECT_EQ(min_t_bound(1), 1);
  EXPECT_EQ(min_t_bound(15), 13);
}

TEST(MinTBound, ExactBracketAndMonotone) {
  int prev = 0;
  for (long long n = 1; n <= 20000; ++n) {
    const long long t = min_t_bound(static_cast<int>(n));
    const long long rhs = 3 * n * n + 1;
    EXPECT_GE((2 * t + 1) * (2 * t + 1), rhs) << n;
    EXPECT_LT((2 * t - 1) * (2 * t - 1), rhs) << n;
    EXPECT_GE(t, prev);
    prev = static_cast<int>(t);
    if (n < 2000) {
      const long double x = (std::sqrt(static_cast<long double>(rhs)) - 1) / 2;
      const long long approx = static_cast<long long>(std::ceil(x - 1e-12L));
      EXPECT_EQ(t, approx) << n;
    }
  }
}

TEST(TInequality, InHypothesisRanges) {
  EXPECT_TRUE(verify_claim5(30, 46).passed());
  EXPECT_TRUE(verify_claim5(47, 200).passed());
  const Claim5Report r = verify_claim5(30, 200);
  EXPECT_EQ(r.rows.size(), 171u);
  for (const auto& row : r.rows) EXPECT_TRUE(row.ok()) << row.n;
}

TEST(TInequality, IndependentRecheck) {
  for (int n = 5; n <= 300; ++n) {
    bool fails = false;
    for (int np = (n - 1 + 1) / 2; np <= (n + 1) / 2; ++np) {
      int t0 = 0;
      while ((2 * t0 + 1) * (2 * t0 + 1) < 3 * np * np + 1) ++t0;
      for (int t = t0; t <= 2 * n / 3; ++t) fails |= 2 * t + t / 2 - 2 < n - 1;
    }
    const Claim5Report r = verify_claim5(n, n);
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(!r.rows[0].ok(), fails) << n;
    EXPECT_EQ(r.rows[0].in_hypothesis, n >= 30);
  }
}

TEST(TInequality, OutOfHypothesisIsReportOnly) {
  const Claim5Report r = verify_claim5(5, 29);
  EXPECT_EQ(r.rows.size(), 25u);
  EXPECT_TRUE(r.passed());
  const std::string table = r.table();
  EXPECT_EQ(table.rfind("n\tt_min\tt_max\tstatus\n", 0), 0u);
  EXPECT_THROW(verify_claim5(4, 10), ArgumentError);
  EXPECT_THROW(verify_claim5(10, 9), ArgumentError);
}

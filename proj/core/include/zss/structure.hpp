#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zss/grid.hpp"

namespace zss {

/// Which clause of the diagonal-extension lemma determines an entry.
enum class Region { DiagBlock, Cond2, Cond3, Cond4 };

std::string_view to_string(Region r);

struct ForcedEntry {
  int i = 1;
  int j = 1;
  int value = 1;
  Region region = Region::DiagBlock;
};

/// Entries of an n x n zero-sum square free grid that are determined once
/// its consecutive submatrix M[p:p+s, q:q+s] is t'-diagonal.
///
/// With t = t' + p + q - 2 and K = t + floor(t/2):
///  - M[1:min(K,n), 1:min(K,n)] is t-diagonal (DiagBlock);
///  - for K < j <= min(K + t - 2, n), both (i, j) and (j, i) take the value
///    of the block's far corner (-1) when j - t < i <= K (Cond2),
///    i <= floor(t/2) - floor((j - K - 1)/2) (Cond3), or i = j (Cond4).
///
/// Entries are clipped to the grid and returned sorted by (i, j), one per
/// cell. Throws PreconditionError unless 2 <= t' <= 2s - 3, t <= n and the
/// submatrix fits.
std::vector<ForcedEntry> lemma1_forced_entries(int n, int p, int q, int s, int t_prime);

struct Observation2Violation {
  int i = 1;  // i < j
  int j = 1;
  SquareRef witness;  // (i, i, j - i), sums to zero
};

/// Pairs i < j with a(i,j) = a(j,i) = -1 in a square grid whose diagonal is
/// all +1. Throws PreconditionError naming the first index with a(i,i) = -1,
/// ArgumentError for a non-square grid.
std::vector<Observation2Violation> observation2_check(const Grid& g);

/// A consecutive size x size window with top-left corner (p, q).
struct BalancedWindow {
  int p = 1;
  int q = 1;
  int size = 1;
  int disc = 0;
};

/// For a square grid with n >= 8 and |disc| <= n^2/4, a window of size
/// n' in [(n-1)/2, (n+1)/2] with |disc| <= n'^2/4.
///
/// Tries the four corner blocks of size floor(n/2) (odd n: (n-1)/2), then
/// the four overlapping corner blocks of size (n+1)/2, in index order. If
/// none qualifies, slides a window between the first pair of adjacent
/// corner blocks with opposite signs and returns the first balanced one.
/// Throws ArgumentError on a precondition violation and InternalError if no
/// window is found.
BalancedWindow find_balanced_submatrix(const Grid& g);

/// Least integer t with t >= (sqrt(3 n'^2 + 1) - 1) / 2, in exact integer
/// arithmetic.
int min_t_bound(int n_prime);

struct Claim5Row {
  int n = 0;
  int t_min = 0;
  int t_max = 0;
  std::vector<int> failing_t;
  bool in_hypothesis = false;  // n >= 30
  bool ok() const { return failing_t.empty(); }
};

struct Claim5Report {
  std::vector<Claim5Row> rows;
  /// No failures among rows with n >= 30.
  bool passed() const;
  /// Tab-separated table: n, t_min, t_max, status.
  std::string table() const;
};

inline constexpr int kClaim5HypothesisMin = 30;

/// For each n in [n_lo, n_hi], each n' in [ceil((n-1)/2), floor((n+1)/2)]
/// and each t in [min_t_bound(n'), floor(2n/3)], checks
/// 2t + floor(t/2) - 2 >= n - 1. Throws ArgumentError if n_lo < 5 or the
/// range is empty.
Claim5Report verify_claim5(int n_lo, int n_hi);

}  // namespace zss

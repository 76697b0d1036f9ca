#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zss {

/// A rows x cols matrix with entries in {-1, +1}.
///
/// Entries are addressed 1-based as a(i, j), row i from the top and column j
/// from the left. Storage is bit-packed per row (bit set <=> +1), so
/// discrepancy is a popcount and square scans run word-parallel.
class Grid {
 public:
  static constexpr int kWordBits = 64;

  /// A grid filled with `fill` (must be -1 or +1).
  Grid(int rows, int cols, int fill = -1);

  /// Row-major values, each -1 or +1.
  static Grid from_values(int rows, int cols, std::span<const int> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int cells() const { return rows_ * cols_; }
  bool is_square() const { return rows_ == cols_; }

  /// Bounds-checked entry access; returns -1 or +1.
  int at(int i, int j) const;
  bool is_plus(int i, int j) const;
  void set(int i, int j, int value);

  /// Unchecked access for inner loops (1-based).
  bool plus_unchecked(int i, int j) const {
    const std::size_t bit = static_cast<std::size_t>(j - 1);
    return (row_data(i)[bit / kWordBits] >> (bit % kWordBits)) & 1u;
  }

  /// Packed words of row i (1-based); bit (j-1) is column j.
  std::span<const std::uint64_t> row_bits(int i) const {
    return {row_data(i), static_cast<std::size_t>(words_per_row_)};
  }
  int words_per_row() const { return words_per_row_; }

  /// Number of +1 entries.
  int count_plus() const;

  /// Row-major sequence of -1/+1 values.
  std::vector<int> values() const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
  }

  /// Row-major lexicographic order with -1 < +1; only defined for equal shapes.
  friend std::strong_ordering lex_compare(const Grid& a, const Grid& b);

 private:
  const std::uint64_t* row_data(int i) const {
    return words_.data() + static_cast<std::size_t>(i - 1) * words_per_row_;
  }
  std::uint64_t* row_data(int i) {
    return words_.data() + static_cast<std::size_t>(i - 1) * words_per_row_;
  }
  void check_index(int i, int j) const;

  int rows_;
  int cols_;
  int words_per_row_;
  std::vector<std::uint64_t> words_;
};

/// The 2x2 square with corners (i, j), (i, j+s), (i+s, j), (i+s, j+s).
///
/// Stride is at least 1; a stride-0 "square" is a single entry counted four
/// times and can never sum to zero.
struct SquareRef {
  int i = 1;
  int j = 1;
  int s = 1;

  friend auto operator<=>(const SquareRef&, const SquareRef&) = default;
};

bool square_fits(const Grid& g, const SquareRef& sq);

/// Sum of the four corners, in {-4, -2, 0, 2, 4}. Throws BoundsError if the
/// square does not fit.
int square_sum(const Grid& g, const SquareRef& sq);

/// First zero-sum square in (s, i, j) ascending order, if any.
std::optional<SquareRef> find_zero_sum_square(const Grid& g);

inline bool is_zero_sum_square_free(const Grid& g) {
  return !find_zero_sum_square(g).has_value();
}

/// Number of squares of an rows x cols grid: sum over s of (rows-s)(cols-s).
long long count_squares(int rows, int cols);

/// Sum of all entries.
int discrepancy(const Grid& g);

/// +1 iff i + j <= t + 1. Requires 0 <= t <= rows + cols - 1.
Grid make_t_diagonal(int rows, int cols, int t);

/// -1 iff i and j are both odd.
Grid checkerboard(int rows, int cols);

/// Witness that a grid becomes t-diagonal after the indicated reflections.
struct DiagonalForm {
  bool flip_h = false;
  bool flip_v = false;
  int t = 0;

  friend auto operator<=>(const DiagonalForm&, const DiagonalForm&) = default;
};

/// Least witness by (flip_h, flip_v, t), or nullopt if the grid is not diagonal.
std::optional<DiagonalForm> diagonal_form(const Grid& g);

inline bool is_diagonal(const Grid& g) { return diagonal_form(g).has_value(); }

/// Mirror left-right: column j goes to column cols + 1 - j.
Grid reflect_h(const Grid& g);
/// Mirror top-bottom: row i goes to row rows + 1 - i.
Grid reflect_v(const Grid& g);
Grid transpose(const Grid& g);
Grid negate(const Grid& g);

/// Consecutive submatrix rows p..r, columns q..s (inclusive, 1-based).
Grid subgrid(const Grid& g, int p, int r, int q, int s);

}  // namespace zss

#include "zss/grid.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "zss/error.hpp"

namespace zss {

namespace {

int words_for(int cols) { return (cols + Grid::kWordBits - 1) / Grid::kWordBits; }

// 64 bits of a packed row starting at bit `pos`; bits past the row are zero.
std::uint64_t extract(std::span<const std::uint64_t> row, int pos) {
  const auto word = static_cast<std::size_t>(pos / Grid::kWordBits);
  const int off = pos % Grid::kWordBits;
  if (word >= row.size()) return 0;
  std::uint64_t v = row[word] >> off;
  if (off != 0 && word + 1 < row.size()) v |= row[word + 1] << (Grid::kWordBits - off);
  return v;
}

std::uint64_t low_mask(int bits) {
  return bits >= Grid::kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Lanes where exactly two of a, b, c, d are set.
std::uint64_t exactly_two(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return ((a ^ b) & (c ^ d)) | (a & b & ~(c | d)) | (c & d & ~(a | b));
}

}  // namespace

Grid::Grid(int rows, int cols, int fill)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)) {
  if (rows < 1 || cols < 1) {
    throw ArgumentError("grid dimensions must be positive, got " + std::to_string(rows) + "x" +
                        std::to_string(cols));
  }
  if (fill != -1 && fill != 1) throw ArgumentError("grid entries must be -1 or +1");
  words_.assign(static_cast<std::size_t>(rows) * words_per_row_, 0);
  if (fill == 1) {
    for (int i = 1; i <= rows; ++i) {
      std::uint64_t* row = row_data(i);
      for (int w = 0; w < words_per_row_; ++w) {
        row[w] = low_mask(std::min(kWordBits, cols - w * kWordBits));
      }
    }
  }
}

Grid Grid::from_values(int rows, int cols, std::span<const int> values) {
  Grid g(rows, cols);
  if (values.size() != static_cast<std::size_t>(rows) * cols) {
    throw ArgumentError("expected " + std::to_string(rows * cols) + " values, got " +
                        std::to_string(values.size()));
  }
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) g.set(i, j, values[static_cast<std::size_t>(i - 1) * cols + j - 1]);
  return g;
}

void Grid::check_index(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw BoundsError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                      std::to_string(rows_) + "x" + std::to_string(cols_) + " grid");
  }
}

int Grid::at(int i, int j) const { return is_plus(i, j) ? 1 : -1; }

bool Grid::is_plus(int i, int j) const {
  check_index(i, j);
  return plus_unchecked(i, j);
}

void Grid::set(int i, int j, int value) {
  check_index(i, j);
  if (value != -1 && value != 1) throw ArgumentError("grid entries must be -1 or +1");
  const auto bit = static_cast<std::size_t>(j - 1);
  std::uint64_t& w = row_data(i)[bit / kWordBits];
  const std::uint64_t m = std::uint64_t{1} << (bit % kWordBits);
  w = value == 1 ? (w | m) : (w & ~m);
}

int Grid::count_plus() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::vector<int> Grid::values() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cells()));
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) out.push_back(plus_unchecked(i, j) ? 1 : -1);
  return out;
}

std::strong_ordering lex_compare(const Grid& a, const Grid& b) {
  for (int i = 1; i <= a.rows_; ++i) {
    const auto ra = a.row_bits(i);
    const auto rb = b.row_bits(i);
    for (std::size_t w = 0; w < ra.size(); ++w) {
      const std::uint64_t diff = ra[w] ^ rb[w];
      if (diff == 0) continue;
      // Lowest differing bit is the leftmost differing column.
      const int bit = std::countr_zero(diff);
      return ((ra[w] >> bit) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

bool square_fits(const Grid& g, const SquareRef& sq) {
  return sq.s >= 1 && sq.i >= 1 && sq.j >= 1 && sq.i + sq.s <= g.rows() && sq.j + sq.s <= g.cols();
}

int square_sum(const Grid& g, const SquareRef& sq) {
  if (!square_fits(g, sq)) {
    throw BoundsError("square (" + std::to_string(sq.i) + "," + std::to_string(sq.j) + "," +
                      std::to_string(sq.s) + ") does not fit a " + std::to_string(g.rows()) + "x" +
                      std::to_string(g.cols()) + " grid");
  }
  return g.at(sq.i, sq.j) + g.at(sq.i, sq.j + sq.s) + g.at(sq.i + sq.s, sq.j) +
         g.at(sq.i + sq.s, sq.j + sq.s);
}

std::optional<SquareRef> find_zero_sum_square(const Grid& g) {
  const int max_s = std::min(g.rows(), g.cols()) - 1;
  for (int s = 1; s <= max_s; ++s) {
    const int span = g.cols() - s;  // valid left columns are 1..span
    for (int i = 1; i + s <= g.rows(); ++i) {
      const auto top = g.row_bits(i);
      const auto bottom = g.row_bits(i + s);
      for (int base = 0; base < span; base += Grid::kWordBits) {
        const std::uint64_t mask = low_mask(std::min(Grid::kWordBits, span - base));
        const std::uint64_t hit = exactly_two(extract(top, base), extract(top, base + s),
                                              extract(bottom, base), extract(bottom, base + s)) &
                                  mask;
        if (hit != 0) return SquareRef{i, base + std::countr_zero(hit) + 1, s};
      }
    }
  }
  return std::nullopt;
}

long long count_squares(int rows, int cols) {
  long long total = 0;
  for (int s = 1; s < std::min(rows, cols); ++s) total += static_cast<long long>(rows - s) * (cols - s);
  return total;
}

int discrepancy(const Grid& g) { return 2 * g.count_plus() - g.cells(); }

Grid make_t_diagonal(int rows, int cols, int t) {
  if (t < 0 || t > rows + cols - 1) {
    throw ArgumentError("t-diagonal requires 0 <= t <= rows + cols - 1, got t=" + std::to_string(t));
  }
  Grid g(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= std::min(cols, t + 1 - i); ++j) g.set(i, j, 1);
  return g;
}

Grid checkerboard(int rows, int cols) {
  Grid g(rows, cols, 1);
  for (int i = 1; i <= rows; i += 2)
    for (int j = 1; j <= cols; j += 2) g.set(i, j, -1);
  return g;
}

std::optional<DiagonalForm> diagonal_form(const Grid& g) {
  // The +1 count of a t-diagonal grid is strictly increasing in t, so the
  // popcount pins down the only candidate t; reflections preserve popcount.
  const int plus = g.count_plus();
  int t = 0;
  int count = 0;
  while (count < plus) {
    ++t;
    // cells with i + j == t + 1
    const int lo = std::max(1, t + 1 - g.cols());
    const int hi = std::min(g.rows(), t);
    count += std::max(0, hi - lo + 1);
  }
  if (count != plus) return std::nullopt;
  const Grid target = make_t_diagonal(g.rows(), g.cols(), t);
  for (bool flip_h : {false, true}) {
    for (bool flip_v : {false, true}) {
      Grid h = flip_h ? reflect_h(g) : g;
      if (flip_v) h = reflect_v(h);
      if (h == target) return DiagonalForm{flip_h, flip_v, t};
    }
  }
  return std::nullopt;
}

Grid reflect_h(const Grid& g) {
  Grid out(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      if (g.plus_unchecked(i, j)) out.set(i, g.cols() + 1 - j, 1);
  return out;
}

Grid reflect_v(const Grid& g) {
  Grid out(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      if (g.plus_unchecked(i, j)) out.set(g.rows() + 1 - i, j, 1);
  return out;
}

Grid transpose(const Grid& g) {
  Grid out(g.cols(), g.rows());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      if (g.plus_unchecked(i, j)) out.set(j, i, 1);
  return out;
}

Grid negate(const Grid& g) {
  Grid out(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      if (!g.plus_unchecked(i, j)) out.set(i, j, 1);
  return out;
}

Grid subgrid(const Grid& g, int p, int r, int q, int s) {
  if (p < 1 || p > r || r > g.rows() || q < 1 || q > s || s > g.cols()) {
    throw ArgumentError("submatrix [" + std::to_string(p) + ":" + std::to_string(r) + ", " +
                        std::to_string(q) + ":" + std::to_string(s) + "] invalid for " +
                        std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " grid");
  }
  Grid out(r - p + 1, s - q + 1);
  for (int i = p; i <= r; ++i)
    for (int j = q; j <= s; ++j)
      if (g.plus_unchecked(i, j)) out.set(i - p + 1, j - q + 1, 1);
  return out;
}

}  // namespace zss

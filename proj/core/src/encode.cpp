#include "zss/encode.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "zss/error.hpp"

namespace zss {

ZssEncoding encode_zssf(int n, int m) {
  if (n < 1 || m < 1) throw ArgumentError("encoding dimensions must be positive");
  ZssEncoding enc;
  enc.vars = VarMap{n, m};
  enc.cnf.num_vars = n * m;
  enc.cnf.comments.push_back("zss encoding v" + std::to_string(kEncodingVersion) + " n=" +
                             std::to_string(n) + " m=" + std::to_string(m));
  enc.cnf.comments.push_back("zero-sum square free");
  enc.constraints.zssf = true;
  const VarMap& v = enc.vars;
  for (int s = 1; s < std::min(n, m); ++s) {
    for (int i = 1; i + s <= n; ++i) {
      for (int j = 1; j + s <= m; ++j) {
        const int corner[4] = {v.cell_var(i, j), v.cell_var(i, j + s), v.cell_var(i + s, j),
                               v.cell_var(i + s, j + s)};
        for (int a = 0; a < 4; ++a) {
          for (int b = a + 1; b < 4; ++b) {
            Clause c(4);
            for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(k)] = (k == a || k == b) ? -corner[k] : corner[k];
            enc.cnf.add_clause(std::move(c));
          }
        }
      }
    }
  }
  return enc;
}

void add_at_most(CnfFormula& f, std::span<const int> x, int k) {
  const int n = static_cast<int>(x.size());
  if (k >= n) return;
  if (k < 0) throw ArgumentError("cardinality bound below zero");
  if (k == 0) {
    for (int lit : x) f.add_clause({-lit});
    return;
  }
  // reg[i][j]: at least j+1 of x[0..i] are true (only the implication
  // direction is encoded, which is all at-most-k needs).
  std::vector<std::vector<int>> reg(static_cast<std::size_t>(n - 1), std::vector<int>(static_cast<std::size_t>(k)));
  for (auto& row : reg)
    for (int& r : row) r = f.new_var();
  auto R = [&](int i, int j) { return reg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  f.add_clause({-x[0], R(0, 0)});
  for (int j = 1; j < k; ++j) f.add_clause({-R(0, j)});
  for (int i = 1; i < n - 1; ++i) {
    f.add_clause({-x[static_cast<std::size_t>(i)], R(i, 0)});
    f.add_clause({-R(i - 1, 0), R(i, 0)});
    for (int j = 1; j < k; ++j) {
      f.add_clause({-x[static_cast<std::size_t>(i)], -R(i - 1, j - 1), R(i, j)});
      f.add_clause({-R(i - 1, j), R(i, j)});
    }
    f.add_clause({-x[static_cast<std::size_t>(i)], -R(i - 1, k - 1)});
  }
  f.add_clause({-x[static_cast<std::size_t>(n - 1)], -R(n - 2, k - 1)});
}

void add_cardinality(CnfFormula& f, std::span<const int> lits, int lo, int hi) {
  const int n = static_cast<int>(lits.size());
  if (lo > hi || hi < 0 || lo > n) throw ArgumentError("infeasible cardinality window");
  add_at_most(f, lits, hi);
  if (lo > 0) {
    std::vector<int> negated(lits.begin(), lits.end());
    for (int& l : negated) l = -l;
    add_at_most(f, negated, n - lo);
  }
}

ZssEncoding add_disc_bound(ZssEncoding enc, int d) {
  if (d < 0) throw ArgumentError("discrepancy bound must be non-negative, got " + std::to_string(d));
  const int cells = enc.vars.cell_count();
  const int bound = std::min(d, cells);
  std::vector<int> lits(static_cast<std::size_t>(cells));
  for (int k = 0; k < cells; ++k) lits[static_cast<std::size_t>(k)] = k + 1;
  // |2k - cells| <= d  <=>  ceil((cells - d)/2) <= k <= floor((cells + d)/2)
  const int lo = (cells - bound + 1) / 2;
  const int hi = (cells + bound) / 2;
  if (lo > hi) {
    // d below the parity of cells: no grid qualifies.
    enc.cnf.add_clause({1});
    enc.cnf.add_clause({-1});
  } else {
    add_cardinality(enc.cnf, lits, lo, hi);
  }
  enc.cnf.comments.push_back("|disc| <= " + std::to_string(d));
  enc.constraints.disc_bound = enc.constraints.disc_bound ? std::min(*enc.constraints.disc_bound, d) : d;
  return enc;
}

std::vector<Grid> distinct_diagonal_grids(int n, int m) {
  std::vector<Grid> out;
  for (int t = 0; t <= n + m - 1; ++t) {
    const Grid base = make_t_diagonal(n, m, t);
    for (bool h : {false, true}) {
      for (bool v : {false, true}) {
        Grid g = h ? reflect_h(base) : base;
        if (v) g = reflect_v(g);
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

std::vector<int> cell_literals(const VarMap& vars, const Grid& g) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(vars.cell_count()));
  for (int i = 1; i <= vars.n; ++i)
    for (int j = 1; j <= vars.m; ++j) out.push_back(g.is_plus(i, j) ? vars.cell_var(i, j) : -vars.cell_var(i, j));
  return out;
}

Clause blocking_clause(const VarMap& vars, const Grid& g) {
  if (g.rows() != vars.n || g.cols() != vars.m) throw ArgumentError("grid shape does not match encoding");
  Clause c = cell_literals(vars, g);
  for (int& l : c) l = -l;
  return c;
}

ZssEncoding add_nondiagonal(ZssEncoding enc) {
  const auto diagonals = distinct_diagonal_grids(enc.vars.n, enc.vars.m);
  for (const Grid& g : diagonals) enc.cnf.add_clause(blocking_clause(enc.vars, g));
  enc.cnf.comments.push_back("non-diagonal (" + std::to_string(diagonals.size()) + " blocked grids)");
  enc.constraints.nondiagonal = true;
  return enc;
}

ZssEncoding fix_cells(ZssEncoding enc, std::span<const FixedCell> cells) {
  for (const FixedCell& fc : cells) {
    if (fc.i < 1 || fc.i > enc.vars.n || fc.j < 1 || fc.j > enc.vars.m) {
      throw ArgumentError("fixed cell (" + std::to_string(fc.i) + "," + std::to_string(fc.j) + ") outside grid");
    }
    if (fc.value != 1 && fc.value != -1) throw ArgumentError("fixed cell value must be -1 or +1");
    for (const FixedCell& prev : enc.constraints.fixed) {
      if (prev.i == fc.i && prev.j == fc.j && prev.value != fc.value) {
        throw ArgumentError("contradictory fixed values at (" + std::to_string(fc.i) + "," +
                            std::to_string(fc.j) + ")");
      }
    }
    const int v = enc.vars.cell_var(fc.i, fc.j);
    enc.cnf.add_clause({fc.value == 1 ? v : -v});
    enc.constraints.fixed.push_back(fc);
  }
  if (!cells.empty()) enc.cnf.comments.push_back(std::to_string(cells.size()) + " fixed cells");
  return enc;
}

ZssEncoding encode_query(int n, int m, std::optional<int> disc_bound, bool nondiagonal) {
  ZssEncoding enc = encode_zssf(n, m);
  if (disc_bound) enc = add_disc_bound(std::move(enc), *disc_bound);
  if (nondiagonal) enc = add_nondiagonal(std::move(enc));
  return enc;
}

Grid decode_grid(const VarMap& vars, const std::vector<bool>& model) {
  if (model.size() < static_cast<std::size_t>(vars.cell_count()) + 1) {
    throw IntegrityError("model shorter than the cell variable range");
  }
  Grid g(vars.n, vars.m);
  for (int i = 1; i <= vars.n; ++i)
    for (int j = 1; j <= vars.m; ++j)
      if (model[static_cast<std::size_t>(vars.cell_var(i, j))]) g.set(i, j, 1);
  return g;
}

std::vector<std::string> constraint_violations(const EncodedConstraints& c, const Grid& g) {
  std::vector<std::string> out;
  if (c.zssf) {
    if (auto sq = find_zero_sum_square(g)) {
      out.push_back("zero-sum square at (" + std::to_string(sq->i) + "," + std::to_string(sq->j) + "," +
                    std::to_string(sq->s) + ")");
    }
  }
  if (c.disc_bound && std::abs(discrepancy(g)) > *c.disc_bound) {
    out.push_back("discrepancy " + std::to_string(discrepancy(g)) + " exceeds bound " + std::to_string(*c.disc_bound));
  }
  if (c.nondiagonal && is_diagonal(g)) out.push_back("grid is diagonal");
  for (const FixedCell& fc : c.fixed) {
    if (g.at(fc.i, fc.j) != fc.value) {
      out.push_back("fixed cell (" + std::to_string(fc.i) + "," + std::to_string(fc.j) + ") differs");
    }
  }
  return out;
}

Grid verify_model(const ZssEncoding& enc, const std::vector<bool>& model) {
  if (!enc.cnf.satisfied_by(model)) throw IntegrityError("solver model falsifies a clause of the formula");
  Grid g = decode_grid(enc.vars, model);
  const auto bad = constraint_violations(enc.constraints, g);
  if (!bad.empty()) throw IntegrityError("decoded grid violates encoded constraint: " + bad.front());
  return g;
}

}  // namespace zss

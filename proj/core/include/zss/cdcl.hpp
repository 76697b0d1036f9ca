#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace zss::sat {

enum class Status { Sat, Unsat, Unknown };

/// Negative values mean "no limit".
struct Limits {
  std::int64_t max_conflicts = -1;
  double max_seconds = -1.0;
};

struct CdclStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learned = 0;
  std::uint64_t reductions = 0;
};

/// Conflict-driven clause learning solver over DIMACS-style literals
/// (variable v >= 1, literal +v or -v).
///
/// Clauses may be added between solve() calls; learned clauses are kept, so
/// repeated solving with blocking clauses is incremental. A solve under
/// assumptions that returns Unsat leaves the clause set usable.
class Cdcl {
 public:
  Cdcl() = default;
  explicit Cdcl(int num_vars) { reserve_vars(num_vars); }

  int num_vars() const { return static_cast<int>(assigns_.size()); }
  void reserve_vars(int n);

  /// Returns false once the clause set is unsatisfiable at the root.
  bool add_clause(std::span<const int> lits);
  bool add_clause(std::initializer_list<int> lits) {
    return add_clause(std::span<const int>(lits.begin(), lits.size()));
  }

  Status solve(std::span<const int> assumptions = {}, const Limits& limits = {});

  /// Model value of a variable after a Sat answer.
  bool model_value(int var) const { return model_[static_cast<std::size_t>(var - 1)]; }
  /// Model indexed by variable; entry 0 unused.
  std::vector<bool> model() const;

  const CdclStats& stats() const { return stats_; }
  bool okay() const { return ok_; }

 private:
  using Lit = std::uint32_t;
  using CRef = std::uint32_t;
  static constexpr CRef kNoReason = 0xffffffffu;
  static constexpr Lit kUndefLit = 0xffffffffu;

  struct Watch {
    CRef cref;
    Lit blocker;
    bool binary;
  };

  // Clause layout in the arena: size, flags (bit0 learnt, bit1 deleted,
  // bits 2.. lbd), activity bits, then the literals.
  static constexpr std::uint32_t kHeader = 3;
  std::uint32_t& csize(CRef c) { return arena_[c]; }
  std::uint32_t csize(CRef c) const { return arena_[c]; }
  bool learnt(CRef c) const { return arena_[c + 1] & 1u; }
  bool deleted(CRef c) const { return arena_[c + 1] & 2u; }
  void mark_deleted(CRef c) { arena_[c + 1] |= 2u; }
  std::uint32_t lbd(CRef c) const { return arena_[c + 1] >> 2; }
  void set_lbd(CRef c, std::uint32_t v) { arena_[c + 1] = (arena_[c + 1] & 3u) | (v << 2); }
  float activity(CRef c) const { return std::bit_cast<float>(arena_[c + 2]); }
  void set_activity(CRef c, float a) { arena_[c + 2] = std::bit_cast<std::uint32_t>(a); }
  Lit* lits(CRef c) { return reinterpret_cast<Lit*>(&arena_[c + kHeader]); }
  const Lit* lits(CRef c) const { return reinterpret_cast<const Lit*>(&arena_[c + kHeader]); }

  static Lit make_lit(int dimacs) {
    return dimacs > 0 ? static_cast<Lit>(2 * (dimacs - 1)) : static_cast<Lit>(2 * (-dimacs - 1) + 1);
  }
  static std::uint32_t var(Lit l) { return l >> 1; }
  static Lit neg(Lit l) { return l ^ 1u; }
  // +1 true, -1 false, 0 unassigned
  std::int8_t value(Lit l) const {
    const std::int8_t v = assigns_[var(l)];
    return (l & 1u) ? static_cast<std::int8_t>(-v) : v;
  }

  CRef alloc_clause(std::span<const Lit> lits, bool is_learnt, std::uint32_t lbd_value);
  void attach(CRef c);
  void enqueue(Lit l, CRef reason);
  CRef propagate();
  void analyze(CRef confl, std::vector<Lit>& out, int& out_level, std::uint32_t& out_lbd);
  bool redundant(Lit p, std::uint32_t abstract_levels);
  void backtrack(int level);
  Lit pick_branch();
  void reduce_db();
  void collect_garbage();
  void simplify_root();
  int level() const { return static_cast<int>(trail_lim_.size()); }
  std::uint32_t abstract_level(std::uint32_t v) const { return 1u << (level_[v] & 31); }

  // variable order heap
  void heap_insert(std::uint32_t v);
  void heap_up(std::size_t pos);
  void heap_down(std::size_t pos);
  std::uint32_t heap_pop();
  bool heap_less(std::uint32_t a, std::uint32_t b) const { return activity_[a] > activity_[b]; }
  void bump_var(std::uint32_t v);
  void bump_clause(CRef c);

  bool ok_ = true;
  std::vector<std::uint32_t> arena_;
  std::vector<CRef> originals_;
  std::vector<CRef> learnts_;
  std::uint64_t wasted_ = 0;
  std::vector<std::vector<Watch>> watches_;

  std::vector<std::int8_t> assigns_;
  std::vector<int> level_;
  std::vector<CRef> reason_;
  std::vector<bool> phase_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  std::vector<std::uint32_t> heap_;
  std::vector<int> heap_pos_;

  std::vector<std::uint8_t> seen_;
  std::vector<std::uint64_t> level_stamp_;
  std::uint64_t stamp_ = 0;
  std::vector<Lit> analyze_stack_;
  std::vector<Lit> analyze_toclear_;

  std::size_t root_simplified_at_ = 0;
  std::uint64_t next_reduce_ = 2000;
  std::uint64_t reduce_count_ = 0;

  std::vector<bool> model_;
  CdclStats stats_;
};

}  // namespace zss::sat

#include "zss/cdcl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace zss::sat {

namespace {

constexpr double kVarDecay = 0.95;
constexpr double kClauseDecay = 0.999;
constexpr double kRestartMargin = 1.25;
constexpr std::uint64_t kRestartMinConflicts = 50;
constexpr std::uint64_t kReduceIncrement = 300;

// Exponential moving average with bias correction for the warm-up phase.
struct Ema {
  explicit Ema(double alpha) : alpha_(alpha) {}
  void update(double x) {
    ++count_;
    const double a = std::max(alpha_, 1.0 / static_cast<double>(count_));
    value_ += a * (x - value_);
  }
  double value() const { return value_; }
  std::uint64_t count() const { return count_; }

 private:
  double alpha_;
  double value_ = 0.0;
  std::uint64_t count_ = 0;
};

}  // namespace

void Cdcl::reserve_vars(int n) {
  const auto want = static_cast<std::size_t>(std::max(n, 0));
  if (want <= assigns_.size()) return;
  const std::size_t old = assigns_.size();
  assigns_.resize(want, 0);
  level_.resize(want, 0);
  reason_.resize(want, kNoReason);
  phase_.resize(want, false);
  activity_.resize(want, 0.0);
  seen_.resize(want, 0);
  heap_pos_.resize(want, -1);
  level_stamp_.resize(want + 1, 0);
  watches_.resize(2 * want);
  for (std::size_t v = old; v < want; ++v) heap_insert(static_cast<std::uint32_t>(v));
}

Cdcl::CRef Cdcl::alloc_clause(std::span<const Lit> ls, bool is_learnt, std::uint32_t lbd_value) {
  if (arena_.size() + kHeader + ls.size() >= kNoReason) throw std::length_error("clause arena full");
  const auto c = static_cast<CRef>(arena_.size());
  arena_.push_back(static_cast<std::uint32_t>(ls.size()));
  arena_.push_back((is_learnt ? 1u : 0u) | (lbd_value << 2));
  arena_.push_back(std::bit_cast<std::uint32_t>(0.0f));
  arena_.insert(arena_.end(), ls.begin(), ls.end());
  return c;
}

void Cdcl::attach(CRef c) {
  const Lit* l = lits(c);
  const bool bin = csize(c) == 2;
  watches_[l[0]].push_back({c, l[1], bin});
  watches_[l[1]].push_back({c, l[0], bin});
}

bool Cdcl::add_clause(std::span<const int> input) {
  if (!ok_) return false;
  backtrack(0);
  std::vector<Lit> ls;
  ls.reserve(input.size());
  for (int d : input) {
    if (d == 0) throw std::invalid_argument("literal 0 is not allowed inside a clause");
    reserve_vars(std::abs(d));
    ls.push_back(make_lit(d));
  }
  std::sort(ls.begin(), ls.end());
  std::vector<Lit> kept;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    const Lit l = ls[k];
    if (k > 0 && l == ls[k - 1]) continue;
    if (k > 0 && l == neg(ls[k - 1])) return true;  // tautology
    const std::int8_t v = value(l);
    if (v > 0) return true;
    if (v < 0) continue;
    kept.push_back(l);
  }
  if (kept.empty()) {
    ok_ = false;
    return false;
  }
  if (kept.size() == 1) {
    enqueue(kept[0], kNoReason);
    if (propagate() != kNoReason) ok_ = false;
    return ok_;
  }
  const CRef c = alloc_clause(kept, false, 0);
  originals_.push_back(c);
  attach(c);
  return true;
}

void Cdcl::enqueue(Lit l, CRef reason) {
  const std::uint32_t v = var(l);
  assigns_[v] = (l & 1u) ? -1 : 1;
  level_[v] = level();
  reason_[v] = reason;
  trail_.push_back(l);
}

Cdcl::CRef Cdcl::propagate() {
  CRef confl = kNoReason;
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    const Lit false_lit = neg(p);
    std::vector<Watch>& ws = watches_[false_lit];
    ++stats_.propagations;
    std::size_t i = 0;
    std::size_t j = 0;
    const std::size_t end = ws.size();
    while (i < end) {
      const Watch w = ws[i++];
      const std::int8_t bv = value(w.blocker);
      if (bv > 0) {
        ws[j++] = w;
        continue;
      }
      if (w.binary) {
        ws[j++] = w;
        if (bv < 0) {
          confl = w.cref;
          while (i < end) ws[j++] = ws[i++];
        } else {
          Lit* c = lits(w.cref);
          if (c[0] != w.blocker) std::swap(c[0], c[1]);
          enqueue(w.blocker, w.cref);
        }
        continue;
      }
      Lit* c = lits(w.cref);
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      const Lit first = c[0];
      if (first != w.blocker && value(first) > 0) {
        ws[j++] = {w.cref, first, false};
        continue;
      }
      const std::uint32_t sz = csize(w.cref);
      bool moved = false;
      for (std::uint32_t k = 2; k < sz; ++k) {
        if (value(c[k]) >= 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back({w.cref, first, false});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = {w.cref, first, false};
      if (value(first) < 0) {
        confl = w.cref;
        while (i < end) ws[j++] = ws[i++];
      } else {
        enqueue(first, w.cref);
      }
    }
    ws.resize(j);
    if (confl != kNoReason) {
      qhead_ = trail_.size();
      return confl;
    }
  }
  return kNoReason;
}

void Cdcl::bump_var(std::uint32_t v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0) heap_up(static_cast<std::size_t>(heap_pos_[v]));
}

void Cdcl::bump_clause(CRef c) {
  const float a = activity(c) + static_cast<float>(clause_inc_);
  set_activity(c, a);
  if (a > 1e20f) {
    for (CRef l : learnts_) set_activity(l, activity(l) * 1e-20f);
    clause_inc_ *= 1e-20;
  }
}

void Cdcl::analyze(CRef confl, std::vector<Lit>& out, int& out_level, std::uint32_t& out_lbd) {
  out.clear();
  out.push_back(kUndefLit);
  int path = 0;
  Lit p = kUndefLit;
  std::size_t index = trail_.size();
  CRef c = confl;
  for (;;) {
    if (learnt(c)) {
      bump_clause(c);
      // Tighten the glue of clauses that keep participating.
      if (lbd(c) > 2) {
        ++stamp_;
        std::uint32_t n = 0;
        const Lit* ls = lits(c);
        for (std::uint32_t k = 0; k < csize(c); ++k) {
          const int lv = level_[var(ls[k])];
          if (level_stamp_[static_cast<std::size_t>(lv)] != stamp_) {
            level_stamp_[static_cast<std::size_t>(lv)] = stamp_;
            ++n;
          }
        }
        if (n + 1 < lbd(c)) set_lbd(c, n);
      }
    }
    const Lit* ls = lits(c);
    for (std::uint32_t k = (p == kUndefLit ? 0 : 1); k < csize(c); ++k) {
      const Lit q = ls[k];
      const std::uint32_t v = var(q);
      if (seen_[v] || level_[v] == 0) continue;
      bump_var(v);
      seen_[v] = 1;
      if (level_[v] >= level()) {
        ++path;
      } else {
        out.push_back(q);
      }
    }
    do {
      --index;
    } while (!seen_[var(trail_[index])]);
    p = trail_[index];
    c = reason_[var(p)];
    seen_[var(p)] = 0;
    if (--path == 0) break;
  }
  out[0] = neg(p);

  // Recursive minimization: drop literals implied by the rest of the clause.
  analyze_toclear_.assign(out.begin(), out.end());
  std::uint32_t abstract = 0;
  for (std::size_t k = 1; k < out.size(); ++k) abstract |= abstract_level(var(out[k]));
  std::size_t keep = 1;
  for (std::size_t k = 1; k < out.size(); ++k) {
    const std::uint32_t v = var(out[k]);
    if (reason_[v] == kNoReason || !redundant(out[k], abstract)) out[keep++] = out[k];
  }
  out.resize(keep);
  for (Lit l : analyze_toclear_) seen_[var(l)] = 0;

  if (out.size() == 1) {
    out_level = 0;
  } else {
    std::size_t max_k = 1;
    for (std::size_t k = 2; k < out.size(); ++k)
      if (level_[var(out[k])] > level_[var(out[max_k])]) max_k = k;
    std::swap(out[1], out[max_k]);
    out_level = level_[var(out[1])];
  }

  ++stamp_;
  out_lbd = 0;
  for (Lit l : out) {
    const auto lv = static_cast<std::size_t>(level_[var(l)]);
    if (level_stamp_[lv] != stamp_) {
      level_stamp_[lv] = stamp_;
      ++out_lbd;
    }
  }
}

bool Cdcl::redundant(Lit p, std::uint32_t abstract_levels) {
  analyze_stack_.clear();
  analyze_stack_.push_back(p);
  const std::size_t top = analyze_toclear_.size();
  while (!analyze_stack_.empty()) {
    const Lit q = analyze_stack_.back();
    analyze_stack_.pop_back();
    const CRef c = reason_[var(q)];
    const Lit* ls = lits(c);
    for (std::uint32_t k = 1; k < csize(c); ++k) {
      const Lit l = ls[k];
      const std::uint32_t v = var(l);
      if (seen_[v] || level_[v] == 0) continue;
      if (reason_[v] != kNoReason && (abstract_level(v) & abstract_levels) != 0) {
        seen_[v] = 1;
        analyze_stack_.push_back(l);
        analyze_toclear_.push_back(l);
      } else {
        for (std::size_t k2 = top; k2 < analyze_toclear_.size(); ++k2)
          seen_[var(analyze_toclear_[k2])] = 0;
        analyze_toclear_.resize(top);
        return false;
      }
    }
  }
  return true;
}

void Cdcl::backtrack(int target) {
  if (level() <= target) return;
  const auto stop = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(target)]);
  for (std::size_t k = trail_.size(); k-- > stop;) {
    const std::uint32_t v = var(trail_[k]);
    assigns_[v] = 0;
    reason_[v] = kNoReason;
    phase_[v] = (trail_[k] & 1u) == 0;
    if (heap_pos_[v] < 0) heap_insert(v);
  }
  trail_.resize(stop);
  trail_lim_.resize(static_cast<std::size_t>(target));
  qhead_ = trail_.size();
}

Cdcl::Lit Cdcl::pick_branch() {
  while (!heap_.empty()) {
    const std::uint32_t v = heap_pop();
    if (assigns_[v] == 0) return static_cast<Lit>(2 * v + (phase_[v] ? 0u : 1u));
  }
  return kUndefLit;
}

void Cdcl::heap_insert(std::uint32_t v) {
  heap_pos_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_.size() - 1);
}

void Cdcl::heap_up(std::size_t pos) {
  const std::uint32_t v = heap_[pos];
  while (pos > 0) {
    const std::size_t parent = (pos - 1) / 2;
    if (!heap_less(v, heap_[parent])) break;
    heap_[pos] = heap_[parent];
    heap_pos_[heap_[pos]] = static_cast<int>(pos);
    pos = parent;
  }
  heap_[pos] = v;
  heap_pos_[v] = static_cast<int>(pos);
}

void Cdcl::heap_down(std::size_t pos) {
  const std::uint32_t v = heap_[pos];
  const std::size_t n = heap_.size();
  for (;;) {
    std::size_t child = 2 * pos + 1;
    if (child >= n) break;
    if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
    if (!heap_less(heap_[child], v)) break;
    heap_[pos] = heap_[child];
    heap_pos_[heap_[pos]] = static_cast<int>(pos);
    pos = child;
  }
  heap_[pos] = v;
  heap_pos_[v] = static_cast<int>(pos);
}

std::uint32_t Cdcl::heap_pop() {
  const std::uint32_t top = heap_.front();
  heap_pos_[top] = -1;
  const std::uint32_t last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return top;
}

void Cdcl::reduce_db() {
  ++stats_.reductions;
  std::vector<CRef> candidates;
  std::vector<CRef> kept;
  for (CRef c : learnts_) {
    if (deleted(c)) continue;
    const Lit first = lits(c)[0];
    const bool locked = reason_[var(first)] == c && value(first) > 0;
    if (lbd(c) <= 2 || locked) {
      kept.push_back(c);
    } else {
      candidates.push_back(c);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [this](CRef a, CRef b) {
    if (lbd(a) != lbd(b)) return lbd(a) > lbd(b);
    return activity(a) < activity(b);
  });
  const std::size_t drop = candidates.size() / 2;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (k < drop) {
      mark_deleted(candidates[k]);
      wasted_ += kHeader + csize(candidates[k]);
    } else {
      kept.push_back(candidates[k]);
    }
  }
  learnts_ = std::move(kept);
  collect_garbage();
}

void Cdcl::simplify_root() {
  // Reasons of root assignments are never inspected again.
  for (Lit l : trail_) reason_[var(l)] = kNoReason;
  for (std::vector<CRef>* list : {&originals_, &learnts_}) {
    std::vector<CRef> kept;
    for (CRef c : *list) {
      if (deleted(c)) continue;
      Lit* ls = lits(c);
      const std::uint32_t sz = csize(c);
      bool sat = false;
      std::uint32_t out = 0;
      for (std::uint32_t k = 0; k < sz; ++k) {
        const std::int8_t v = value(ls[k]);
        if (v > 0) {
          sat = true;
          break;
        }
        if (v == 0) ls[out++] = ls[k];
      }
      if (sat) {
        mark_deleted(c);
        wasted_ += kHeader + sz;
        continue;
      }
      // Propagation reached a fixpoint, so at least two literals remain free.
      wasted_ += sz - out;
      csize(c) = out;
      kept.push_back(c);
    }
    *list = std::move(kept);
  }
  root_simplified_at_ = trail_.size();
  collect_garbage();
}

void Cdcl::collect_garbage() {
  std::vector<std::uint32_t> fresh;
  fresh.reserve(arena_.size() - std::min<std::size_t>(wasted_, arena_.size()));
  auto move_list = [&](std::vector<CRef>& list) {
    for (CRef& c : list) {
      const auto nc = static_cast<CRef>(fresh.size());
      const std::uint32_t sz = csize(c);
      fresh.insert(fresh.end(), arena_.begin() + c, arena_.begin() + c + kHeader + sz);
      arena_[c + 2] = nc;  // forwarding address; the old copy is discarded
      c = nc;
    }
  };
  // Reasons are remapped through the forwarding address written by move_list,
  // so capture them before the activity slot is overwritten.
  std::vector<std::pair<std::uint32_t, CRef>> reasons;
  for (Lit l : trail_) {
    const std::uint32_t v = var(l);
    if (reason_[v] != kNoReason) reasons.emplace_back(v, reason_[v]);
  }
  move_list(originals_);
  move_list(learnts_);
  for (auto& [v, c] : reasons) reason_[v] = arena_[c + 2];
  arena_ = std::move(fresh);
  wasted_ = 0;
  for (auto& ws : watches_) ws.clear();
  for (CRef c : originals_) attach(c);
  for (CRef c : learnts_) attach(c);
}

Status Cdcl::solve(std::span<const int> assumptions, const Limits& limits) {
  model_.clear();
  if (!ok_) return Status::Unsat;
  backtrack(0);
  std::vector<Lit> assume;
  for (int d : assumptions) {
    reserve_vars(std::abs(d));
    assume.push_back(make_lit(d));
  }
  if (propagate() != kNoReason) {
    ok_ = false;
    return Status::Unsat;
  }

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::uint64_t conflicts_at_start = stats_.conflicts;
  Ema fast(1.0 / 32.0);
  Ema slow(1.0 / 4096.0);
  std::uint64_t since_restart = 0;
  std::vector<Lit> learnt_clause;

  for (;;) {
    const CRef confl = propagate();
    if (confl != kNoReason) {
      ++stats_.conflicts;
      ++since_restart;
      if (level() == 0) {
        ok_ = false;
        return Status::Unsat;
      }
      int bt = 0;
      std::uint32_t glue = 0;
      analyze(confl, learnt_clause, bt, glue);
      backtrack(bt);
      if (learnt_clause.size() == 1) {
        enqueue(learnt_clause[0], kNoReason);
      } else {
        const CRef c = alloc_clause(learnt_clause, true, glue);
        learnts_.push_back(c);
        attach(c);
        bump_clause(c);
        enqueue(learnt_clause[0], c);
      }
      ++stats_.learned;
      var_inc_ /= kVarDecay;
      clause_inc_ /= kClauseDecay;
      fast.update(glue);
      slow.update(glue);

      const std::uint64_t used = stats_.conflicts - conflicts_at_start;
      if (limits.max_conflicts >= 0 && used >= static_cast<std::uint64_t>(limits.max_conflicts)) {
        backtrack(0);
        return Status::Unknown;
      }
      if (limits.max_seconds >= 0 && (used & 255u) == 0) {
        const std::chrono::duration<double> el = Clock::now() - start;
        if (el.count() > limits.max_seconds) {
          backtrack(0);
          return Status::Unknown;
        }
      }
      continue;
    }

    if (since_restart >= kRestartMinConflicts && fast.value() > kRestartMargin * slow.value()) {
      since_restart = 0;
      ++stats_.restarts;
      backtrack(0);
    }
    if (level() == 0 && trail_.size() > root_simplified_at_) simplify_root();
    if (stats_.conflicts >= next_reduce_) {
      ++reduce_count_;
      next_reduce_ = stats_.conflicts + 2000 + kReduceIncrement * reduce_count_;
      reduce_db();
    }

    Lit next = kUndefLit;
    while (static_cast<std::size_t>(level()) < assume.size()) {
      const Lit a = assume[static_cast<std::size_t>(level())];
      const std::int8_t v = value(a);
      if (v > 0) {
        trail_lim_.push_back(static_cast<int>(trail_.size()));
      } else if (v < 0) {
        backtrack(0);
        return Status::Unsat;
      } else {
        next = a;
        break;
      }
    }
    if (next == kUndefLit) {
      next = pick_branch();
      if (next == kUndefLit) {
        model_.resize(assigns_.size());
        for (std::size_t v = 0; v < assigns_.size(); ++v) model_[v] = assigns_[v] > 0;
        backtrack(0);
        return Status::Sat;
      }
      ++stats_.decisions;
    }
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, kNoReason);
  }
}

std::vector<bool> Cdcl::model() const {
  std::vector<bool> out(model_.size() + 1, false);
  for (std::size_t v = 0; v < model_.size(); ++v) out[v + 1] = model_[v];
  return out;
}

}  // namespace zss::sat

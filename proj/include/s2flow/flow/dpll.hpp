#pragma once

/**
 * @file dpll.hpp
 * @brief Complete DPLL solver: two-watched-literal unit propagation,
 * chronological backtracking, no clause learning.
 *
 * Branching picks a literal from the shortest clause that is not yet
 * satisfied (fail-first) and tries to satisfy that clause first. Every
 * reported model is checked against the original clauses before it is
 * returned.
 */

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "s2flow/errors.hpp"
#include "s2flow/flow/cnf.hpp"

namespace s2flow {

struct SatStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
};

struct SatResult {
  bool satisfiable = false;
  /// model[v] for v in 1..num_vars; empty when unsatisfiable.
  std::vector<bool> model;
  SatStats stats;
};

class DpllSolver {
 public:
  explicit DpllSolver(const CnfFormula& f) : original_(&f) {
    f.validate();
    n_ = f.num_vars;
    value_.assign(static_cast<std::size_t>(n_) + 1, 0);
    watches_.resize(2 * (static_cast<std::size_t>(n_) + 1));
    for (const auto& raw : f.clauses) {
      std::vector<int> c;
      bool tautology = false;
      for (int lit : raw) {
        bool dup = false;
        for (int x : c) {
          if (x == lit) dup = true;
          if (x == -lit) tautology = true;
        }
        if (!dup) c.push_back(lit);
      }
      if (tautology) continue;
      if (c.empty()) trivially_unsat_ = true;
      if (c.size() == 1) {
        units_.push_back(c[0]);
        continue;
      }
      watches_[code(c[0])].push_back(clauses_.size());
      watches_[code(c[1])].push_back(clauses_.size());
      clauses_.push_back(std::move(c));
    }
  }

  SatResult solve() {
    SatResult res;
    if (trivially_unsat_) return res;
    for (int u : units_) {
      int v = lit_value(u);
      if (v == -1) return res;
      if (v == 0) assign(u);
    }
    for (;;) {
      if (!propagate()) {
        ++stats_.conflicts;
        if (!backtrack()) {
          res.stats = stats_;
          return res;
        }
        continue;
      }
      int lit = pick_branch_literal();
      if (lit == 0) break;
      ++stats_.decisions;
      levels_.push_back({trail_.size(), lit, false});
      assign(lit);
    }
    res.satisfiable = true;
    res.model.assign(static_cast<std::size_t>(n_) + 1, false);
    for (int v = 1; v <= n_; ++v) res.model[static_cast<std::size_t>(v)] = value_[static_cast<std::size_t>(v)] > 0;
    if (!original_->satisfied_by(res.model)) throw std::logic_error("DpllSolver: model fails self-verification");
    res.stats = stats_;
    return res;
  }

 private:
  struct Level {
    std::size_t trail_pos;
    int decision;
    bool flipped;
  };

  static std::size_t code(int lit) { return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit < 0 ? 1 : 0); }

  int lit_value(int lit) const {
    int v = value_[static_cast<std::size_t>(std::abs(lit))];
    return lit > 0 ? v : -v;
  }

  void assign(int lit) {
    value_[static_cast<std::size_t>(std::abs(lit))] = static_cast<std::int8_t>(lit > 0 ? 1 : -1);
    trail_.push_back(lit);
  }

  bool propagate() {
    while (qhead_ < trail_.size()) {
      int falsified = -trail_[qhead_++];
      auto& ws = watches_[code(falsified)];
      std::size_t keep = 0;
      bool conflict = false;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        std::size_t ci = ws[i];
        if (conflict) {
          ws[keep++] = ci;
          continue;
        }
        auto& c = clauses_[ci];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (lit_value(c[0]) == 1) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t j = 2; j < c.size(); ++j) {
          if (lit_value(c[j]) != -1) {
            std::swap(c[1], c[j]);
            watches_[code(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (lit_value(c[0]) == 0) {
          ++stats_.propagations;
          assign(c[0]);
        } else {
          conflict = true;
        }
      }
      ws.resize(keep);
      if (conflict) return false;
    }
    return true;
  }

  /// Undo to the most recent unflipped decision and take its other branch.
  bool backtrack() {
    while (!levels_.empty()) {
      Level lv = levels_.back();
      levels_.pop_back();
      for (std::size_t i = lv.trail_pos; i < trail_.size(); ++i)
        value_[static_cast<std::size_t>(std::abs(trail_[i]))] = 0;
      trail_.resize(lv.trail_pos);
      qhead_ = lv.trail_pos;
      if (!lv.flipped) {
        levels_.push_back({trail_.size(), -lv.decision, true});
        assign(-lv.decision);
        return true;
      }
    }
    return false;
  }

  int pick_branch_literal() const {
    int best = 0;
    std::size_t best_len = 0;
    for (const auto& c : clauses_) {
      std::size_t open = 0;
      int first_open = 0;
      bool sat = false;
      for (int lit : c) {
        int v = lit_value(lit);
        if (v == 1) {
          sat = true;
          break;
        }
        if (v == 0) {
          if (!first_open) first_open = lit;
          ++open;
        }
      }
      if (sat || open == 0) continue;
      if (!best || open < best_len) {
        best = first_open;
        best_len = open;
        if (open <= 2) break;
      }
    }
    if (best) return best;
    for (int v = 1; v <= n_; ++v)
      if (value_[static_cast<std::size_t>(v)] == 0) return v;
    return 0;
  }

  const CnfFormula* original_;
  int n_ = 0;
  bool trivially_unsat_ = false;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> units_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<std::int8_t> value_;
  std::vector<int> trail_;
  std::vector<Level> levels_;
  std::size_t qhead_ = 0;
  SatStats stats_;
};

inline SatResult sat_solve(const CnfFormula& f) { return DpllSolver(f).solve(); }

}  // namespace s2flow

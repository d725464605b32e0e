#pragma once

/**
 * @file backtrack.hpp
 * @brief Direct search over representative values, independent of the CNF
 * route.
 *
 * Domains are bitmasks over value slots. Assigning a rep propagates through
 * its triples: with two values fixed the third is forced, with one fixed the
 * other two are pruned to mutually supported values.
 *
 * Branching uses dom/wdeg: every triple carries a weight that grows each
 * time it wipes out a domain, and the next rep minimizes domain size over the
 * weight of its still-open triples. Weights steer the search onto the hard
 * part of an unsatisfiable instance. Since every constraint is homogeneous,
 * negating a solution gives a solution, so the first decision only tries the
 * positive half of its domain.
 *
 * The same engine decides the integer-bounded problem (values +-1..+-k,
 * sums equal to 0) and the modular one (residues 1..m-1, sums = 0 mod m).
 */

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "s2flow/errors.hpp"
#include "s2flow/flow/encode.hpp"
#include "s2flow/flow/instance.hpp"

namespace s2flow {

/// Values +-1..+-k; a signed sum must be exactly 0.
struct BoundedValues {
  int k;

  int slots() const { return 2 * k; }
  int value(int slot) const { return slot_value(k, slot); }
  /// Slot holding the integer x, if x is an allowed value.
  std::optional<int> slot_of(long x) const {
    if (x == 0 || x > k || x < -k) return std::nullopt;
    return value_slot(k, static_cast<int>(x));
  }
  long contribution(int sign, int slot) const { return static_cast<long>(sign) * value(slot); }
  /// Value v such that sign * v + rest is zero.
  long solve_for(int sign, long rest) const { return -static_cast<long>(sign) * rest; }
  bool positive_half(int slot) const { return value(slot) > 0; }
};

/// Residues 1..m-1 modulo m; a signed sum must vanish mod m.
struct ModularValues {
  int m;

  int slots() const { return m - 1; }
  int value(int slot) const { return slot + 1; }
  std::optional<int> slot_of(long x) const {
    long r = ((x % m) + m) % m;
    if (r == 0) return std::nullopt;
    return static_cast<int>(r - 1);
  }
  long contribution(int sign, int slot) const { return (static_cast<long>(sign) * value(slot) % m + m) % m; }
  long solve_for(int sign, long rest) const { return -static_cast<long>(sign) * rest; }
  bool positive_half(int slot) const { return 2 * value(slot) <= m; }
};

struct BacktrackStats {
  std::uint64_t nodes = 0;
};

template <class Values>
class BacktrackSolver {
 public:
  BacktrackSolver(std::size_t num_reps, const std::vector<OrientedTriple>& triples, Values values)
      : num_reps_(num_reps), triples_(&triples), values_(values), incident_(num_reps) {
    if (values_.slots() < 1 || values_.slots() > 32) throw DomainError("BacktrackSolver: value domain must have 1..32 slots");
    for (std::size_t t = 0; t < triples.size(); ++t)
      for (const auto& sr : triples[t]) {
        if (sr.rep >= num_reps) throw DomainError("BacktrackSolver: triple references an unknown rep");
        incident_[sr.rep].push_back(t);
      }
    full_ = values_.slots() == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << values_.slots()) - 1);
    for (int slot = 0; slot < values_.slots(); ++slot)
      if (values_.positive_half(slot)) half_ |= std::uint32_t{1} << slot;
    weight_.assign(triples.size(), 1);
  }

  /// Slot per rep for a solution, or nullopt.
  std::optional<std::vector<int>> solve() {
    State s;
    s.domain.assign(num_reps_, full_);
    s.slot.assign(num_reps_, -1);
    std::vector<std::size_t> queue;
    for (std::size_t t = 0; t < triples_->size(); ++t)
      if (!revise(s, t, queue)) return std::nullopt;
    if (!settle(s, queue)) return std::nullopt;
    if (search(s)) return result_;
    return std::nullopt;
  }

  const BacktrackStats& stats() const { return stats_; }

 private:
  struct State {
    std::vector<std::uint32_t> domain;
    std::vector<int> slot;
  };

  // Prune the domains of triple t's reps to supported values; reps whose
  // domain shrinks are queued. False on a wipe-out.
  bool revise(State& s, std::size_t t, std::vector<std::size_t>& queue) {
    const auto& tr = (*triples_)[t];
    for (int target = 0; target < 3; ++target) {
      const auto& a = tr[static_cast<std::size_t>(target)];
      const auto& b = tr[static_cast<std::size_t>((target + 1) % 3)];
      const auto& c = tr[static_cast<std::size_t>((target + 2) % 3)];
      std::uint32_t supported = 0;
      for (std::uint32_t db = s.domain[b.rep]; db; db &= db - 1) {
        int sb = std::countr_zero(db);
        for (std::uint32_t dc = s.domain[c.rep]; dc; dc &= dc - 1) {
          int sc = std::countr_zero(dc);
          long rest = values_.contribution(b.sign, sb) + values_.contribution(c.sign, sc);
          if (auto sa = values_.slot_of(values_.solve_for(a.sign, rest))) supported |= std::uint32_t{1} << *sa;
        }
      }
      std::uint32_t nd = s.domain[a.rep] & supported;
      if (nd == 0) {
        ++weight_[t];
        return false;
      }
      if (nd != s.domain[a.rep]) {
        s.domain[a.rep] = nd;
        queue.push_back(a.rep);
      }
    }
    return true;
  }

  bool settle(State& s, std::vector<std::size_t>& queue) {
    while (!queue.empty()) {
      std::size_t r = queue.back();
      queue.pop_back();
      for (auto t : incident_[r])
        if (!revise(s, t, queue)) return false;
    }
    return true;
  }

  bool search(State& s) {
    ++stats_.nodes;
    std::size_t best = num_reps_;
    double best_score = 0;
    for (std::size_t r = 0; r < num_reps_; ++r) {
      int size = std::popcount(s.domain[r]);
      if (size <= 1) continue;
      std::uint64_t wdeg = 1;
      for (auto t : incident_[r])
        for (const auto& sr : (*triples_)[t])
          if (sr.rep != r && std::popcount(s.domain[sr.rep]) > 1) {
            wdeg += weight_[t];
            break;
          }
      double score = static_cast<double>(size) / static_cast<double>(wdeg);
      if (best == num_reps_ || score < best_score) {
        best = r;
        best_score = score;
      }
    }
    if (best == num_reps_) {
      result_.assign(num_reps_, 0);
      for (std::size_t r = 0; r < num_reps_; ++r) result_[r] = std::countr_zero(s.domain[r]);
      return true;
    }
    std::uint32_t options = s.domain[best];
    if (!symmetry_broken_) {
      // The domain is still closed under negation here: nothing is fixed yet.
      symmetry_broken_ = true;
      options &= half_;
    }
    for (std::uint32_t d = options; d; d &= d - 1) {
      State next = s;
      next.domain[best] = d & (~d + 1);
      std::vector<std::size_t> queue{best};
      if (settle(next, queue) && search(next)) return true;
    }
    return false;
  }

  std::size_t num_reps_;
  const std::vector<OrientedTriple>* triples_;
  Values values_;
  std::vector<std::vector<std::size_t>> incident_;
  std::uint32_t full_ = 0;
  std::uint32_t half_ = 0;
  std::vector<std::uint64_t> weight_;
  bool symmetry_broken_ = false;
  std::vector<int> result_;
  BacktrackStats stats_;
};

/// Integer-bounded labeling by direct search; must agree with sat_solve.
inline std::optional<Labeling> backtrack_search(const FlowInstance& inst, BacktrackStats* stats = nullptr) {
  inst.validate();
  if (inst.k > 16) throw DomainError("backtrack_search: k > 16 is not supported");
  BacktrackSolver<BoundedValues> solver(inst.num_reps, inst.triples, BoundedValues{inst.k});
  auto slots = solver.solve();
  if (stats) *stats = solver.stats();
  if (!slots) return std::nullopt;
  Labeling l;
  for (int s : *slots) l.values.push_back(slot_value(inst.k, s));
  auto check = verify_labeling(l, inst);
  if (!check.ok) throw std::logic_error("backtrack_search: produced an invalid labeling: " + check.violations.front());
  return l;
}

/// Labeling with residues in 1..modulus-1 and signed triple sums = 0 mod modulus.
struct ModLabeling {
  int modulus = 2;
  std::vector<int> residues;
};

inline bool verify_mod_labeling(const ModLabeling& l, const FlowInstance& shape) {
  if (l.residues.size() != shape.num_reps) return false;
  for (int r : l.residues)
    if (r < 1 || r >= l.modulus) return false;
  for (const auto& t : shape.triples) {
    long sum = 0;
    for (const auto& sr : t) sum += static_cast<long>(sr.sign) * l.residues[sr.rep];
    if (((sum % l.modulus) + l.modulus) % l.modulus != 0) return false;
  }
  return true;
}

/// Uses the reps and triples of `shape`; its value bound is ignored.
inline std::optional<ModLabeling> mod_backtrack_search(const FlowInstance& shape, int modulus) {
  if (modulus < 2 || modulus > 33) throw DomainError("mod_backtrack_search: modulus must be in 2..33");
  BacktrackSolver<ModularValues> solver(shape.num_reps, shape.triples, ModularValues{modulus});
  auto slots = solver.solve();
  if (!slots) return std::nullopt;
  ModLabeling l{modulus, {}};
  for (int s : *slots) l.residues.push_back(s + 1);
  if (!verify_mod_labeling(l, shape)) throw std::logic_error("mod_backtrack_search: produced an invalid labeling");
  return l;
}

}  // namespace s2flow

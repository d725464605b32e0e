#pragma once

// Greedy shrinking of an unsatisfiable configuration.
//
// Works on the antipodal quotient. Degrees are counted per representative
// (a pair {p, -p} is one flow edge), and a triple is dropped when at least two
// of its representatives occur in no other triple. Each triple, in order, is
// tentatively removed together with the degree cleanup it triggers; the
// removal is kept when the remaining instance is still unsatisfiable.

#include <algorithm>
#include <vector>

#include "s2flow/constructions/pruning.hpp"
#include "s2flow/errors.hpp"
#include "s2flow/flow/backtrack.hpp"
#include "s2flow/flow/dpll.hpp"
#include "s2flow/flow/encode.hpp"
#include "s2flow/quotient/antipodal.hpp"

namespace s2flow {

enum class DecisionEngine { Sat, Backtrack };

/// Instance restricted to the given triples, reps renumbered by first use
/// in ascending rep order.
inline FlowInstance sub_instance(const AntipodalQuotient& q, const std::vector<std::size_t>& triples, int k) {
  std::vector<std::size_t> reps;
  for (auto t : triples)
    for (const auto& sr : q.oriented_triples[t]) reps.push_back(sr.rep);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  FlowInstance inst;
  inst.num_reps = reps.size();
  inst.k = k;
  for (auto t : triples) {
    OrientedTriple ot = q.oriented_triples[t];
    for (auto& sr : ot) sr.rep = static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), sr.rep) - reps.begin());
    inst.triples.push_back(ot);
  }
  return inst;
}

inline bool is_satisfiable(const FlowInstance& inst, DecisionEngine engine) {
  if (engine == DecisionEngine::Backtrack) return backtrack_search(inst).has_value();
  return sat_solve(encode_nzk(inst)).satisfiable;
}

/// Degree cleanup at representative level over a list of triple indices.
inline std::vector<std::size_t> rep_degree_prune(const AntipodalQuotient& q, std::vector<std::size_t> triples) {
  while (true) {
    std::vector<std::size_t> deg(q.num_reps(), 0);
    for (auto t : triples)
      for (const auto& sr : q.oriented_triples[t]) ++deg[sr.rep];
    std::vector<std::size_t> kept;
    for (auto t : triples) {
      int ones = 0;
      for (const auto& sr : q.oriented_triples[t]) ones += deg[sr.rep] == 1;
      if (ones < 2) kept.push_back(t);
    }
    if (kept.size() == triples.size()) return triples;
    triples = std::move(kept);
  }
}

template <class S>
std::pair<PointSet<S>, PruneReport> unsat_preserving_prune(const PointSet<S>& ps, int k,
                                                           DecisionEngine engine = DecisionEngine::Backtrack,
                                                           const GeometryConfig& cfg = {}) {
  AntipodalQuotient q = quotient_antipodal(ps, cfg);
  std::vector<std::size_t> all(ps.triples.size());
  for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
  if (is_satisfiable(sub_instance(q, all, k), engine))
    throw DomainError("unsat_preserving_prune: the instance is satisfiable with value bound " + std::to_string(k));

  auto points_of = [&](const std::vector<std::size_t>& triples) {
    std::vector<bool> keep(ps.points.size(), false);
    for (auto t : triples)
      for (const auto& sr : q.oriented_triples[t]) keep[q.representatives[sr.rep]] = true;
    // both members of every touched pair
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (keep[q.representatives[q.orientation[i].rep]]) keep[i] = true;
    return keep;
  };
  auto count = [](const std::vector<bool>& v) { return static_cast<std::size_t>(std::count(v.begin(), v.end(), true)); };

  PruneReport report;
  std::size_t cur_points = ps.points.size();
  auto record = [&](const std::vector<std::size_t>& before, const std::vector<std::size_t>& after) {
    std::size_t pts = count(points_of(after));
    if (before.size() != after.size() || pts != cur_points) report.rounds.push_back({cur_points - pts, before.size() - after.size()});
    cur_points = pts;
  };

  std::vector<std::size_t> cur = rep_degree_prune(q, all);
  record(all, cur);
  for (std::size_t t = 0; t < ps.triples.size(); ++t) {
    if (!std::binary_search(cur.begin(), cur.end(), t)) continue;
    std::vector<std::size_t> cand;
    for (auto u : cur)
      if (u != t) cand.push_back(u);
    cand = rep_degree_prune(q, std::move(cand));
    if (!is_satisfiable(sub_instance(q, cand, k), engine)) {
      record(cur, cand);
      cur = std::move(cand);
    }
  }

  std::vector<Triple> triples;
  for (auto t : cur) triples.push_back(ps.triples[t]);
  auto keep = points_of(cur);
  report.final_points = count(keep);
  report.final_triples = triples.size();
  return {restrict_point_set(ps, keep, triples), report};
}

}  // namespace s2flow

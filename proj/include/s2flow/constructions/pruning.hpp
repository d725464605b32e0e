#pragma once

// Degree pruning and connected components of point sets.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "s2flow/errors.hpp"
#include "s2flow/geometry/sphere.hpp"

namespace s2flow {

struct PruneRound {
  std::size_t points_removed = 0;
  std::size_t triples_removed = 0;
};

struct PruneReport {
  std::vector<PruneRound> rounds;
  std::size_t final_points = 0;
  std::size_t final_triples = 0;
};

/// Sub-point-set keeping the flagged points (original order) and the given
/// triples, re-indexed. Every kept triple must only use kept points.
template <class S>
PointSet<S> restrict_point_set(const PointSet<S>& ps, const std::vector<bool>& keep_point,
                               const std::vector<Triple>& triples) {
  std::vector<std::size_t> new_index(ps.points.size(), ps.points.size());
  PointSet<S> out;
  for (std::size_t i = 0; i < ps.points.size(); ++i)
    if (keep_point[i]) {
      new_index[i] = out.points.size();
      out.points.push_back(ps.points[i]);
    }
  for (const auto& t : triples) {
    Triple nt{};
    for (std::size_t m = 0; m < 3; ++m) {
      if (new_index[t[m]] == ps.points.size()) throw std::logic_error("restrict_point_set: triple uses a dropped point");
      nt[m] = new_index[t[m]];
    }
    out.triples.push_back(nt);
  }
  return out;
}

/// Repeatedly removes every triple with at least two members of incidence
/// degree 1, then every point of degree 0, until nothing changes.
template <class S>
std::pair<PointSet<S>, PruneReport> prune_low_degree(const PointSet<S>& ps) {
  PruneReport report;
  std::vector<bool> alive(ps.points.size(), true);
  std::vector<Triple> triples = ps.triples;
  std::size_t alive_count = ps.points.size();
  while (true) {
    auto deg = incidence_degrees(ps.points.size(), triples);
    std::vector<Triple> kept;
    for (const auto& t : triples) {
      int ones = (deg[t[0]] == 1) + (deg[t[1]] == 1) + (deg[t[2]] == 1);
      if (ones < 2) kept.push_back(t);
    }
    PruneRound round;
    round.triples_removed = triples.size() - kept.size();
    triples = std::move(kept);
    deg = incidence_degrees(ps.points.size(), triples);
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (alive[i] && deg[i] == 0) {
        alive[i] = false;
        ++round.points_removed;
      }
    alive_count -= round.points_removed;
    if (round.points_removed == 0 && round.triples_removed == 0) break;
    report.rounds.push_back(round);
  }
  report.final_points = alive_count;
  report.final_triples = triples.size();
  return {restrict_point_set(ps, alive, triples), report};
}

/// Component label per point (smallest point index in the component).
inline std::vector<std::size_t> component_labels(std::size_t num_points, const std::vector<Triple>& triples) {
  std::vector<std::size_t> parent(num_points);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& t : triples) {
    unite(t[0], t[1]);
    unite(t[1], t[2]);
  }
  std::vector<std::size_t> label(num_points);
  for (std::size_t i = 0; i < num_points; ++i) label[i] = find(i);
  return label;
}

template <class S>
PointSet<S> component_with_label(const PointSet<S>& ps, const std::vector<std::size_t>& label, std::size_t which) {
  std::vector<bool> keep(ps.points.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = label[i] == which;
  std::vector<Triple> triples;
  for (const auto& t : ps.triples)
    if (keep[t[0]]) triples.push_back(t);
  return restrict_point_set(ps, keep, triples);
}

/// Points reachable from seed through shared triples, with their triples.
template <class S>
PointSet<S> connected_component(const PointSet<S>& ps, std::size_t seed) {
  if (seed >= ps.points.size()) throw DomainError("connected_component: seed out of range");
  auto label = component_labels(ps.points.size(), ps.triples);
  return component_with_label(ps, label, label[seed]);
}

/// The component with the most points; ties go to the one containing the
/// smallest point index. Empty input gives an empty set.
template <class S>
PointSet<S> largest_component(const PointSet<S>& ps) {
  if (ps.points.empty()) return {};
  auto label = component_labels(ps.points.size(), ps.triples);
  std::vector<std::size_t> size(ps.points.size(), 0);
  for (auto l : label) ++size[l];
  std::size_t best = 0;
  for (std::size_t l = 0; l < size.size(); ++l)
    if (size[l] > size[best]) best = l;
  return component_with_label(ps, label, best);
}

/// Component sizes as (points, triples), largest first.
inline std::vector<std::pair<std::size_t, std::size_t>> component_sizes(std::size_t num_points,
                                                                       const std::vector<Triple>& triples) {
  auto label = component_labels(num_points, triples);
  std::vector<std::pair<std::size_t, std::size_t>> acc(num_points, {0, 0});
  for (auto l : label) ++acc[l].first;
  for (const auto& t : triples) ++acc[label[t[0]]].second;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t l = 0; l < num_points; ++l)
    if (label[l] == l) out.push_back(acc[l]);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

}  // namespace s2flow

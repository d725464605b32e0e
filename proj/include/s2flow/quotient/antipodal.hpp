#pragma once

/**
 * @file antipodal.hpp
 * @brief Antipodal quotient of a point set.
 *
 * Each antipodal pair {p, -p} is represented by the member whose first
 * nonzero coordinate is positive. Representatives are numbered in order of
 * first appearance of their pair in the point list. Every triple of the point
 * set becomes one oriented triple over representatives; a triple and its
 * antipodal mirror are kept as two oriented triples and grouped into one
 * triple class.
 */

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "s2flow/errors.hpp"
#include "s2flow/flow/instance.hpp"
#include "s2flow/geometry/sphere.hpp"

namespace s2flow {

struct AntipodalQuotient {
  /// Point index of each representative.
  std::vector<std::size_t> representatives;
  /// Per point: point = sign * representative.
  std::vector<SignedRep> orientation;
  /// One per triple of the source point set, same order.
  std::vector<OrientedTriple> oriented_triples;
  /// Groups of oriented-triple indices that are antipodal mirrors.
  std::vector<std::vector<std::size_t>> triple_classes;
  /// Triple index -> class id.
  std::vector<std::size_t> class_of;

  std::size_t num_reps() const { return representatives.size(); }

  FlowInstance flow_instance(int k, bool dedup_antipodal_triples = false) const {
    FlowInstance inst{num_reps(), oriented_triples, k};
    return dedup_antipodal_triples ? inst.without_antipodal_mirrors() : inst;
  }

  /// Reps touched by the given triple classes, ascending.
  std::vector<std::size_t> reps_of_classes(const std::vector<std::size_t>& classes) const {
    std::vector<std::size_t> out;
    for (auto c : classes)
      for (auto t : triple_classes[c])
        for (const auto& sr : oriented_triples[t]) out.push_back(sr.rep);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

/// +1 if the first non-(near-)zero coordinate is positive, -1 if negative,
/// 0 for the origin.
template <class S>
int leading_sign(const Vec3<S>& p, const GeometryConfig& cfg) {
  for (std::size_t i = 0; i < 3; ++i) {
    int s = tolerant_sign(p[i], cfg);
    if (s != 0) return s;
  }
  return 0;
}

template <class S>
AntipodalQuotient quotient_antipodal(const PointSet<S>& ps, const GeometryConfig& cfg = {}) {
  AntipodalQuotient q;
  const auto n = ps.points.size();
  PointIndex<S> index(ps.points, cfg);
  q.orientation.assign(n, SignedRep{n, 0});
  for (std::size_t i = 0; i < n; ++i) {
    if (q.orientation[i].sign != 0) continue;
    auto j = index.find(-ps.points[i]);
    if (!j)
      throw DomainError("quotient_antipodal: point " + std::to_string(i) + " has no antipode in the set");
    if (*j == i) throw DomainError("quotient_antipodal: point " + std::to_string(i) + " is its own antipode");
    int s = leading_sign(ps.points[i], cfg);
    std::size_t rep_point = s > 0 ? i : *j;
    std::size_t rep = q.representatives.size();
    q.representatives.push_back(rep_point);
    q.orientation[rep_point] = {rep, 1};
    q.orientation[rep_point == i ? *j : i] = {rep, -1};
  }
  std::map<std::vector<std::pair<std::size_t, int>>, std::size_t> class_key;
  for (std::size_t t = 0; t < ps.triples.size(); ++t) {
    const auto& tr = ps.triples[t];
    OrientedTriple ot{q.orientation[tr[0]], q.orientation[tr[1]], q.orientation[tr[2]]};
    if (ot[0].rep == ot[1].rep || ot[1].rep == ot[2].rep || ot[0].rep == ot[2].rep)
      throw DomainError("quotient_antipodal: triple " + std::to_string(t) + " contains an antipodal pair");
    q.oriented_triples.push_back(ot);
    // A class is the rep set with signs normalized so the smallest rep is +.
    std::vector<std::pair<std::size_t, int>> key;
    for (const auto& sr : ot) key.emplace_back(sr.rep, sr.sign);
    std::sort(key.begin(), key.end());
    if (key.front().second < 0)
      for (auto& kv : key) kv.second = -kv.second;
    auto [it, inserted] = class_key.emplace(key, q.triple_classes.size());
    if (inserted) q.triple_classes.emplace_back();
    q.triple_classes[it->second].push_back(t);
    q.class_of.push_back(it->second);
  }
  return q;
}

}  // namespace s2flow

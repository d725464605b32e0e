#pragma once

// Exact-versus-approximate agreement, and the full second-counterexample
// pipeline built on it.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "s2flow/constructions/ce2.hpp"
#include "s2flow/constructions/unsat_prune.hpp"
#include "s2flow/errors.hpp"
#include "s2flow/exact/quartic_field.hpp"
#include "s2flow/geometry/sphere.hpp"

namespace s2flow {

struct CrosscheckResult {
  bool ok = false;
  /// exact point index -> approximate point index (when ok)
  std::vector<std::size_t> point_map;
  std::string message;
};

/// The two sets match when every exact point lands within `tolerance` of
/// exactly one approximate point, the map is a bijection, and it carries the
/// triple set onto the triple set.
template <class S>
CrosscheckResult combinatorially_equal(const PointSet<S>& exact, const PointSet<double>& approx,
                                       double tolerance = 1e-9) {
  CrosscheckResult r;
  if (exact.points.size() != approx.points.size() || exact.triples.size() != approx.triples.size()) {
    r.message = "sizes differ: " + std::to_string(exact.points.size()) + "/" + std::to_string(exact.triples.size()) +
                " vs " + std::to_string(approx.points.size()) + "/" + std::to_string(approx.triples.size());
    return r;
  }
  GeometryConfig cfg;
  cfg.epsilon = tolerance;
  PointIndex<double> index(approx.points, cfg);
  std::vector<bool> hit(approx.points.size(), false);
  for (std::size_t i = 0; i < exact.points.size(); ++i) {
    auto d = to_doubles(exact.points[i]);
    auto matches = index.find_all(Vec3<double>{d[0], d[1], d[2]});
    if (matches.size() != 1 || hit[matches.front()]) {
      r.message = "point " + std::to_string(i) + " has " + std::to_string(matches.size()) + " approximate matches";
      r.point_map.clear();
      return r;
    }
    hit[matches.front()] = true;
    r.point_map.push_back(matches.front());
  }
  std::vector<Triple> mapped, expected = approx.triples;
  for (const auto& t : exact.triples) {
    Triple m{r.point_map[t[0]], r.point_map[t[1]], r.point_map[t[2]]};
    std::sort(m.begin(), m.end());
    mapped.push_back(m);
  }
  for (auto& t : expected) std::sort(t.begin(), t.end());
  std::sort(mapped.begin(), mapped.end());
  std::sort(expected.begin(), expected.end());
  if (mapped != expected) {
    r.message = "triple sets differ under the point correspondence";
    r.point_map.clear();
    return r;
  }
  r.ok = true;
  return r;
}

/// Rewrites F2(sqrt2) coordinates as F2 elements; throws NotInField if
/// some coordinate has a nonzero sqrt2 part.
inline PointSet<FieldElement> lower_to_base_field(const PointSet<F2Sqrt2>& ps) {
  PointSet<FieldElement> out;
  out.triples = ps.triples;
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    Vec3<FieldElement> p;
    for (std::size_t a = 0; a < 3; ++a) {
      const auto& v = ps.points[i][a];
      if (!v.in_base()) throw NotInField("lower_to_base_field: point " + std::to_string(i) + " needs sqrt(2)");
      p[a] = v.rational_part();
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

struct Ce2Pipeline {
  Ce2Search<double> approx;
  Ce2Search<F2Sqrt2> exact;
  CrosscheckResult pruned_match;
  CrosscheckResult component_match;
  /// Locally minimal unsatisfiable subset of the component, over F2.
  PointSet<FieldElement> final_set;
  PruneReport unsat_report;
};

/// Approximate search, exact search, agreement check, then the
/// unsatisfiability-preserving prune at value bound k.
inline Ce2Pipeline run_ce2_pipeline(const Ce2Params& params = {}, int k = 4,
                                    DecisionEngine engine = DecisionEngine::Backtrack, const GeometryConfig& cfg = {}) {
  Ce2Pipeline out;
  out.approx = ce2_search(FloatArithmetic{}, params, cfg);
  ExtensionArithmetic ext(fields::f2());
  out.exact = ce2_search(ext, params, cfg);
  out.pruned_match = combinatorially_equal(out.exact.pruned, out.approx.pruned);
  out.component_match = combinatorially_equal(out.exact.component, out.approx.component);
  if (!out.pruned_match.ok || !out.component_match.ok)
    throw StructureError("run_ce2_pipeline: exact and approximate searches disagree: " +
                         (out.pruned_match.ok ? out.component_match.message : out.pruned_match.message));
  PointSet<F2Sqrt2> minimal;
  std::tie(minimal, out.unsat_report) = unsat_preserving_prune(out.exact.component, k, engine, cfg);
  out.final_set = lower_to_base_field(minimal);
  return out;
}

}  // namespace s2flow

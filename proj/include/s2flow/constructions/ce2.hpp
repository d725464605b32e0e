#pragma once

// Second counterexample: a search over coordinates built from square roots.
//
// Candidates are c_rat = |w1 sqrt(v1) + w2 sqrt(v2)| / 2 and
// c_sqrt = sqrt(c_rat) for w1 in 0..w, w2 in -w..w, kept when <= 1.
// Every coordinate triple with squares summing to 1 is expanded by all
// permutations and sign patterns.
//
// For the default parameters the c_sqrt branch yields 1/sqrt(2) and
// sqrt((sqrt3 - 1)/2), which lie in F2(sqrt2) but not in F2, and the 126-point
// component depends on them. The exact search therefore runs over F2(sqrt2).
// sqrt(sqrt3 / 2) is outside that field too; it is reported and dropped.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "s2flow/constructions/pruning.hpp"
#include "s2flow/errors.hpp"
#include "s2flow/geometry/sphere.hpp"

namespace s2flow {

struct Ce2Params {
  int v1 = 1;
  int v2 = 3;
  int w = 2;

  void validate() const {
    if (v1 < 1 || v2 < 1 || w < 1) throw DomainError("Ce2Params: v1, v2 and w must be positive integers");
  }
};

template <class S>
struct Ce2Candidates {
  /// Ascending, distinct.
  std::vector<S> values;
  /// Candidates that could not be represented exactly.
  std::vector<std::string> diagnostics;
};

template <class Ctx>
Ce2Candidates<typename Ctx::scalar> ce2_candidate_coords(const Ctx& ctx, const Ce2Params& params = {},
                                                         const GeometryConfig& cfg = {}) {
  using S = typename Ctx::scalar;
  params.validate();
  auto root = [&](int v) {
    auto r = ctx.sqrt(ctx.from_rational(v));
    if (!r) throw NotInField("ce2_candidate_coords: sqrt(" + std::to_string(v) + ") is not in " + ctx.field_tag());
    return *r;
  };
  const S r1 = root(params.v1), r2 = root(params.v2);
  const S one = ctx.from_rational(1);

  Ce2Candidates<S> out;
  auto add = [&](const S& v) {
    if (tolerant_sign(v - one, cfg) > 0) return;
    for (const auto& o : out.values)
      if (near_equal(o, v, cfg)) return;
    out.values.push_back(v);
  };
  for (int w1 = 0; w1 <= params.w; ++w1)
    for (int w2 = -params.w; w2 <= params.w; ++w2) {
      S c = (ctx.from_rational(w1) * r1 + ctx.from_rational(w2) * r2) / ctx.from_rational(2);
      if (sign(c) < 0) c = -c;
      if (tolerant_sign(c - one, cfg) > 0) continue;
      add(c);
      if (auto s = ctx.sqrt(c)) {
        add(*s);
      } else {
        std::ostringstream msg;
        msg << "c_sqrt for (w1, w2) = (" << w1 << ", " << w2 << ") ~ " << std::sqrt(to_double(c)) << " is not in "
            << ctx.field_tag() << "; dropped";
        out.diagnostics.push_back(msg.str());
      }
    }
  std::sort(out.values.begin(), out.values.end(), [](const S& a, const S& b) { return sign(a - b) < 0; });
  return out;
}

/// All coordinate triples c1 <= c2 <= c3 (by position in coords) with
/// c1^2 + c2^2 + c3^2 = 1, each expanded by the 6 permutations and 8 sign
/// patterns, deduplicated keeping first occurrences.
template <class S>
std::vector<Vec3<S>> ce2_generate_points(const std::vector<S>& coords, const GeometryConfig& cfg = {}) {
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const S one = constant<S>(Rational(1));
  std::vector<Vec3<S>> raw;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i; j < coords.size(); ++j)
      for (std::size_t k = j; k < coords.size(); ++k) {
        const S base[3] = {coords[i], coords[j], coords[k]};
        if (!near_equal(base[0] * base[0] + base[1] * base[1] + base[2] * base[2], one, cfg)) continue;
        for (const auto& perm : kPerms)
          for (int signs = 0; signs < 8; ++signs) {
            Vec3<S> p;
            for (int a = 0; a < 3; ++a) {
              const S& v = base[perm[a]];
              p[static_cast<std::size_t>(a)] = (signs >> (2 - a)) & 1 ? -v : v;
            }
            if (!is_on_sphere(p, cfg)) throw StructureError("ce2_generate_points: generated point is off the sphere");
            raw.push_back(std::move(p));
          }
      }
  return dedup_points(raw, cfg).points;
}

template <class S>
struct Ce2Search {
  Ce2Candidates<S> candidates;
  /// Generated points with all their zero-sum triples.
  PointSet<S> generated;
  PointSet<S> pruned;
  PruneReport prune_report;
  /// Largest connected component of the pruned set.
  PointSet<S> component;
};

template <class Ctx>
Ce2Search<typename Ctx::scalar> ce2_search(const Ctx& ctx, const Ce2Params& params = {}, const GeometryConfig& cfg = {}) {
  Ce2Search<typename Ctx::scalar> out;
  out.candidates = ce2_candidate_coords(ctx, params, cfg);
  out.generated.points = ce2_generate_points(out.candidates.values, cfg);
  out.generated.triples = find_zero_sum_triples(out.generated.points, cfg);
  std::tie(out.pruned, out.prune_report) = prune_low_degree(out.generated);
  out.component = largest_component(out.pruned);
  return out;
}

}  // namespace s2flow

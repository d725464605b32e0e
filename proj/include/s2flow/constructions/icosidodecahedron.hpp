#pragma once

// The icosidodecahedron: cyclic (= even) permutations of (0, 0, +-1) and
// (+-(phi-1)/2, +-1/2, +-phi/2). 30 points, 20 zero-sum triples, every point
// in exactly two of them.

#include <string>
#include <vector>

#include "s2flow/errors.hpp"
#include "s2flow/geometry/sphere.hpp"

namespace s2flow {

template <class Ctx>
typename Ctx::scalar golden_ratio(const Ctx& ctx) {
  auto root5 = ctx.sqrt(ctx.from_rational(5));
  if (!root5) throw NotInField("golden_ratio: sqrt(5) is not in " + ctx.field_tag());
  return (ctx.from_rational(1) + *root5) / ctx.from_rational(2);
}

template <class Ctx>
PointSet<typename Ctx::scalar> build_icosidodecahedron(const Ctx& ctx, const GeometryConfig& cfg = {}) {
  using S = typename Ctx::scalar;
  cfg.validate();
  const S phi = golden_ratio(ctx);
  const S half = ctx.from_rational(Rational(1, 2));
  const S zero = ctx.from_rational(0), one = ctx.from_rational(1);

  std::vector<Vec3<S>> base{{zero, zero, one}, {zero, zero, -one}};
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1})
        base.push_back({ctx.from_rational(sx) * (phi - one) * half, ctx.from_rational(sy) * half,
                        ctx.from_rational(sz) * phi * half});

  std::vector<Vec3<S>> raw;
  for (const auto& p : base)
    for (std::size_t r = 0; r < 3; ++r) raw.push_back({p[(3 - r) % 3], p[(4 - r) % 3], p[(5 - r) % 3]});

  PointSet<S> ps;
  ps.points = dedup_points(raw, cfg).points;
  ps.triples = find_zero_sum_triples(ps.points, cfg);

  if (ps.points.size() != 30 || ps.triples.size() != 20)
    throw StructureError("build_icosidodecahedron: expected 30 points / 20 triples, got " +
                         std::to_string(ps.points.size()) + " / " + std::to_string(ps.triples.size()));
  for (auto d : incidence_degrees(ps.points.size(), ps.triples))
    if (d != 2) throw StructureError("build_icosidodecahedron: a point lies in " + std::to_string(d) + " triples");
  for (const auto& p : ps.points)
    if (!is_on_sphere(p, cfg)) throw StructureError("build_icosidodecahedron: point off the unit sphere");
  return ps;
}

/// The six great decagons, each as its ascending member indices, in order of
/// discovery over adjacent pairs (i < j, dot = cos(pi/5) = phi/2).
template <class Ctx>
std::vector<std::vector<std::size_t>> great_decagons(const Ctx& ctx, const PointSet<typename Ctx::scalar>& icosi,
                                                     const GeometryConfig& cfg = {}) {
  using S = typename Ctx::scalar;
  const S cos_pi_5 = golden_ratio(ctx) / ctx.from_rational(2);
  std::vector<std::vector<std::size_t>> out;
  const auto& pts = icosi.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!spherical_distance_is(pts[i], pts[j], cos_pi_5, cfg)) continue;
      Vec3<S> normal = cross(pts[i], pts[j]);
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < pts.size(); ++k)
        if (near_zero(dot(pts[k], normal), cfg)) members.push_back(k);
      bool known = false;
      for (const auto& d : out) known = known || d == members;
      if (!known) out.push_back(std::move(members));
    }
  return out;
}

}  // namespace s2flow

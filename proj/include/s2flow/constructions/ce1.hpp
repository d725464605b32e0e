#pragma once

// First counterexample: the icosidodecahedron expanded by intersecting the
// height -1/2 small circles around pairs of points at spherical distance
// 2 pi / 5. Such pairs are two steps apart on one of the six great decagons.
// Taking the ten pairs of a single decagon yields 20 new points, i.e. the
// 50-point / 40-triple configuration. Taking all 60 pairs at once would add
// 120 points, so the decagon is a parameter.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "s2flow/constructions/icosidodecahedron.hpp"
#include "s2flow/errors.hpp"
#include "s2flow/exact/quartic_field.hpp"
#include "s2flow/geometry/sphere.hpp"

namespace s2flow {

struct Ce1Options {
  /// Index into great_decagons(), 0..5.
  std::size_t decagon = 0;
};

/// Unordered pairs (i < j) of icosidodecahedron points with
/// <p_i, p_j> = cos(2 pi / 5) = (sqrt 5 - 1) / 4.
template <class Ctx>
std::vector<std::array<std::size_t, 2>> two_fifths_pairs(const Ctx& ctx, const PointSet<typename Ctx::scalar>& icosi,
                                                         const GeometryConfig& cfg = {}) {
  using S = typename Ctx::scalar;
  const S target = (golden_ratio(ctx) - ctx.from_rational(1)) / ctx.from_rational(2);
  std::vector<std::array<std::size_t, 2>> out;
  for (std::size_t i = 0; i < icosi.points.size(); ++i)
    for (std::size_t j = i + 1; j < icosi.points.size(); ++j)
      if (spherical_distance_is(icosi.points[i], icosi.points[j], target, cfg)) out.push_back({i, j});
  return out;
}

template <class Ctx>
PointSet<typename Ctx::scalar> build_ce1(const Ctx& ctx, const Ce1Options& opt = {}, const GeometryConfig& cfg = {}) {
  using S = typename Ctx::scalar;
  PointSet<S> icosi = build_icosidodecahedron(ctx, cfg);
  auto decagons = great_decagons(ctx, icosi, cfg);
  if (decagons.size() != 6) throw StructureError("build_ce1: expected 6 great decagons, found " + std::to_string(decagons.size()));
  if (opt.decagon >= decagons.size()) throw DomainError("build_ce1: decagon index must be in 0..5");
  const auto& members = decagons[opt.decagon];

  std::vector<bool> on_decagon(icosi.points.size(), false);
  for (auto m : members) on_decagon[m] = true;

  std::vector<Vec3<S>> raw = icosi.points;
  for (const auto& [i, j] : two_fifths_pairs(ctx, icosi, cfg)) {
    if (!on_decagon[i] || !on_decagon[j]) continue;
    for (auto& x : small_circle_intersection(ctx, icosi.points[i], icosi.points[j], Rational(-1, 2), cfg))
      raw.push_back(std::move(x));
  }

  PointSet<S> ps;
  ps.points = dedup_points(raw, cfg).points;
  ps.triples = find_zero_sum_triples(ps.points, cfg);

  if (ps.points.size() != 50 || ps.triples.size() != 40)
    throw StructureError("build_ce1: expected 50 points / 40 triples, got " + std::to_string(ps.points.size()) + " / " +
                         std::to_string(ps.triples.size()));
  PointIndex<S> index(ps.points, cfg);
  for (const auto& p : ps.points) {
    if (!is_on_sphere(p, cfg)) throw StructureError("build_ce1: point off the unit sphere");
    if (!index.find(-p)) throw StructureError("build_ce1: point set is not closed under antipodes");
  }
  return ps;
}

/// Coefficients (a, b, c, d) with 2 * v = a + b phi + c x + d y, where
/// x = 2 / 5^(1/4) and y = x phi. Needs v in F1; nullopt when some
/// coefficient is not an integer.
inline std::optional<std::array<Rational, 4>> golden_basis_coordinates(const FieldElement& v) {
  if (v.field() != nullptr && v.field()->tag() != "F1")
    throw DomainError("golden_basis_coordinates: element is not in F1");
  // With t = 5^(1/4): phi = (1 + t^2)/2, x = 2 t^3 / 5, y = t + t^3 / 5.
  const auto& e = v.coeffs();
  Rational e0 = 2 * e[0], e1 = 2 * e[1], e2 = 2 * e[2], e3 = 2 * e[3];
  Rational b = 2 * e2;
  Rational a = e0 - e2;
  Rational d = e1;
  Rational c = (5 * e3 - d) / Rational(2);
  std::array<Rational, 4> out{a, b, c, d};
  for (const auto& r : out)
    if (!r.is_integer()) return std::nullopt;
  return out;
}

}  // namespace s2flow

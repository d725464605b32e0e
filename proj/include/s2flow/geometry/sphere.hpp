#pragma once

/**
 * @file sphere.hpp
 * @brief Points on the unit sphere, zero-sum triples and small circles.
 *
 * Everything here is a template over the scalar type: an exact scalar
 * (FieldElement, F2Sqrt2) gives the exact pipeline, double gives the
 * epsilon pipeline. Both share the same code path; only near_equal and
 * near_zero change meaning.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "s2flow/errors.hpp"
#include "s2flow/geometry/scalar.hpp"

namespace s2flow {

template <class S>
struct Vec3 {
  std::array<S, 3> c{};

  Vec3() = default;
  Vec3(S x, S y, S z) : c{std::move(x), std::move(y), std::move(z)} {}

  const S& operator[](std::size_t i) const { return c[i]; }
  S& operator[](std::size_t i) { return c[i]; }

  Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
  friend Vec3 operator*(const S& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.c == b.c; }
};

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class S>
std::array<double, 3> to_doubles(const Vec3<S>& p) {
  return {to_double(p[0]), to_double(p[1]), to_double(p[2])};
}

template <class S>
bool near_equal(const Vec3<S>& a, const Vec3<S>& b, const GeometryConfig& cfg) {
  return near_equal(a[0], b[0], cfg) && near_equal(a[1], b[1], cfg) && near_equal(a[2], b[2], cfg);
}

template <class S>
bool is_on_sphere(const Vec3<S>& p, const GeometryConfig& cfg) {
  return near_equal(dot(p, p), constant<S>(1), cfg);
}

/// Sorted index triple i < j < k.
using Triple = std::array<std::size_t, 3>;

template <class S>
struct PointSet {
  std::vector<Vec3<S>> points;
  std::vector<Triple> triples;

  std::size_t size() const { return points.size(); }
};

/// Lexicographic order on coordinate representations, for map keys.
template <class S>
struct Vec3ReprLess {
  bool operator()(const Vec3<S>& a, const Vec3<S>& b) const {
    for (std::size_t i = 0; i < 3; ++i) {
      if (repr_less(a[i], b[i])) return true;
      if (repr_less(b[i], a[i])) return false;
    }
    return false;
  }
};

/// Number of stored triples each point belongs to.
inline std::vector<std::size_t> incidence_degrees(std::size_t num_points, const std::vector<Triple>& triples) {
  std::vector<std::size_t> deg(num_points, 0);
  for (const auto& t : triples)
    for (auto v : t) ++deg[v];
  return deg;
}

template <class S>
Vec3<S> antipode(const Vec3<S>& p) {
  return -p;
}

/// Lookup of points by coordinates: exact map for exact scalars, an
/// x-sorted window scan for doubles.
template <class S>
class PointIndex {
 public:
  PointIndex(const std::vector<Vec3<S>>& points, const GeometryConfig& cfg) : points_(&points), cfg_(cfg) {
    if constexpr (is_exact_scalar_v<S>) {
      for (std::size_t i = 0; i < points.size(); ++i) exact_.emplace(points[i], i);
    } else {
      order_.resize(points.size());
      std::iota(order_.begin(), order_.end(), std::size_t{0});
      std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
        return points[a][0] < points[b][0] || (points[a][0] == points[b][0] && a < b);
      });
    }
  }

  /// All indices whose point matches p (at most one in exact mode), ascending.
  std::vector<std::size_t> find_all(const Vec3<S>& p) const {
    std::vector<std::size_t> out;
    if constexpr (is_exact_scalar_v<S>) {
      auto it = exact_.find(p);
      if (it != exact_.end()) out.push_back(it->second);
    } else {
      const auto& pts = *points_;
      auto lo = std::lower_bound(order_.begin(), order_.end(), p[0] - cfg_.epsilon,
                                 [&](std::size_t i, double x) { return pts[i][0] < x; });
      for (auto it = lo; it != order_.end() && pts[*it][0] <= p[0] + cfg_.epsilon; ++it)
        if (near_equal(pts[*it], p, cfg_)) out.push_back(*it);
      std::sort(out.begin(), out.end());
    }
    return out;
  }

  std::optional<std::size_t> find(const Vec3<S>& p) const {
    auto all = find_all(p);
    if (all.empty()) return std::nullopt;
    return all.front();
  }

 private:
  const std::vector<Vec3<S>>* points_;
  GeometryConfig cfg_;
  std::map<Vec3<S>, std::size_t, Vec3ReprLess<S>> exact_;
  std::vector<std::size_t> order_;
};

/// All unordered {i, j, k} with p_i + p_j + p_k = 0, sorted ascending.
/// Pairs are enumerated and the third point is looked up as -(p_i + p_j).
template <class S>
std::vector<Triple> find_zero_sum_triples(const std::vector<Vec3<S>>& points, const GeometryConfig& cfg) {
  PointIndex<S> index(points, cfg);
  std::vector<Triple> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      for (auto k : index.find_all(-(points[i] + points[j])))
        if (k > j) out.push_back({i, j, k});
  std::sort(out.begin(), out.end());
  return out;
}

/// Pairwise dot products all equal -1/2. For unit vectors this is
/// equivalent to a + b + c = 0.
template <class S>
bool is_equidistant_great_circle(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c, const GeometryConfig& cfg) {
  const S half = constant<S>(Rational(-1, 2));
  return near_equal(dot(a, b), half, cfg) && near_equal(dot(b, c), half, cfg) && near_equal(dot(a, c), half, cfg);
}

template <class S>
bool spherical_distance_is(const Vec3<S>& p, const Vec3<S>& q, const S& target_cos, const GeometryConfig& cfg) {
  return near_equal(dot(p, q), target_cos, cfg);
}

/// Unit vectors x with <x, p> = <x, q> = height. The solutions lie on the
/// line alpha (p + q) + gamma (p x q), alpha = height / (1 + <p, q>).
/// Exact contexts must be able to take the square root for gamma; if they
/// cannot, NotInField is thrown rather than falling back to floats.
template <class Ctx>
std::vector<Vec3<typename Ctx::scalar>> small_circle_intersection(const Ctx& ctx, const Vec3<typename Ctx::scalar>& p,
                                                                  const Vec3<typename Ctx::scalar>& q,
                                                                  const Rational& height, const GeometryConfig& cfg) {
  using S = typename Ctx::scalar;
  Vec3<S> n = cross(p, q);
  if (near_zero(n[0], cfg) && near_zero(n[1], cfg) && near_zero(n[2], cfg))
    throw DegenerateConfiguration("small_circle_intersection: centres are equal or antipodal");
  S one = ctx.from_rational(1);
  S alpha = ctx.from_rational(height) / (one + dot(p, q));
  S gamma_sq = (one - ctx.from_rational(2) * alpha * alpha * (one + dot(p, q))) / dot(n, n);
  Vec3<S> base = alpha * (p + q);
  int s = tolerant_sign(gamma_sq, cfg);
  if (s < 0) return {};
  if (s == 0) return {base};
  auto gamma = ctx.sqrt(gamma_sq);
  if (!gamma) throw NotInField("small_circle_intersection: intersection coordinates leave the field " + ctx.field_tag());
  return {base + *gamma * n, base - *gamma * n};
}

template <class S>
struct DedupResult {
  std::vector<Vec3<S>> points;
  /// raw index -> index in points
  std::vector<std::size_t> index_of;
  /// Near-miss warnings (approximate mode only).
  std::vector<std::string> diagnostics;
};

template <class S>
double chebyshev_distance(const Vec3<S>& a, const Vec3<S>& b) {
  auto x = to_doubles(a), y = to_doubles(b);
  return std::max({std::abs(x[0] - y[0]), std::abs(x[1] - y[1]), std::abs(x[2] - y[2])});
}

/// Merges equal points (exact) or points within epsilon, closed
/// transitively (approximate). Each class is represented by its first-seen
/// member and classes keep first-seen order.
template <class S>
DedupResult<S> dedup_points(const std::vector<Vec3<S>>& raw, const GeometryConfig& cfg) {
  DedupResult<S> out;
  out.index_of.resize(raw.size());
  if constexpr (is_exact_scalar_v<S>) {
    std::map<Vec3<S>, std::size_t, Vec3ReprLess<S>> first;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto [it, inserted] = first.emplace(raw[i], out.points.size());
      if (inserted) out.points.push_back(raw[i]);
      out.index_of[i] = it->second;
    }
  } else {
    std::vector<std::size_t> parent(raw.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw[a][0] < raw[b][0]; });
    const double warn = 10 * cfg.epsilon;
    for (std::size_t a = 0; a < order.size(); ++a) {
      for (std::size_t b = a + 1; b < order.size() && raw[order[b]][0] - raw[order[a]][0] <= warn; ++b) {
        std::size_t i = order[a], j = order[b];
        double d = chebyshev_distance(raw[i], raw[j]);
        if (d <= cfg.epsilon) {
          auto ri = find(i), rj = find(j);
          // root is always the smallest raw index of its class
          if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
        } else if (d < warn) {
          std::ostringstream msg;
          msg << "points " << std::min(i, j) << " and " << std::max(i, j) << " are " << d
              << " apart: outside epsilon but within 10*epsilon";
          out.diagnostics.push_back(msg.str());
        }
      }
    }
    std::vector<std::size_t> slot(raw.size(), raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto r = find(i);
      if (slot[r] == raw.size()) {
        slot[r] = out.points.size();
        out.points.push_back(raw[r]);
      }
      out.index_of[i] = slot[r];
    }
    std::sort(out.diagnostics.begin(), out.diagnostics.end());
  }
  return out;
}

}  // namespace s2flow

#pragma once

// Static SVG drawing of a point set: orthographic projection, each triple
// drawn as its great circle (front half solid, back half dashed), optional
// witness values next to the points.

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "s2flow/io/verify.hpp"

namespace s2flow {

struct SvgOptions {
  int size = 720;
  /// View rotation: about z, then about x (radians).
  double yaw = 0.41;
  double pitch = -0.52;
};

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

struct View {
  double cy, sy, cp, sp;
  explicit View(const SvgOptions& o) : cy(std::cos(o.yaw)), sy(std::sin(o.yaw)), cp(std::cos(o.pitch)), sp(std::sin(o.pitch)) {}
  std::array<double, 3> operator()(const std::array<double, 3>& p) const {
    double x = cy * p[0] - sy * p[1], y = sy * p[0] + cy * p[1], z = p[2];
    return {x, cp * y - sp * z, sp * y + cp * z};
  }
};

inline std::array<double, 3> normalized(std::array<double, 3> v) {
  double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace detail

/// A labeling, if given, must verify against the document's quotient;
/// otherwise DomainError is thrown and nothing is produced.
inline std::string render_svg(const PointSetDocument& d, const std::optional<Labeling>& witness = std::nullopt,
                              int witness_bound = 0, const VerifyOptions& vopt = {}, const SvgOptions& opt = {}) {
  std::vector<int> point_value;
  if (witness) {
    auto q = document_quotient(d, vopt);
    auto check = verify_labeling(*witness, q.flow_instance(witness_bound));
    if (!check.ok) throw DomainError("render_svg: witness does not verify: " + check.violations.front());
    for (std::size_t i = 0; i < d.size(); ++i)
      point_value.push_back(q.orientation[i].sign * witness->values[q.orientation[i].rep]);
  }

  const detail::View view(opt);
  const double half = opt.size / 2.0, scale = opt.size * 0.42;
  auto sx = [&](double x) { return detail::fmt(half + scale * x); };
  auto sy = [&](double y) { return detail::fmt(half - scale * y); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size << "\" height=\"" << opt.size
    << "\" viewBox=\"0 0 " << opt.size << " " << opt.size << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<circle cx=\"" << detail::fmt(half) << "\" cy=\"" << detail::fmt(half) << "\" r=\"" << detail::fmt(scale)
    << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  for (std::size_t t = 0; t < d.triples.size(); ++t) {
    const auto& a = d.shadow[d.triples[t][0]];
    const auto& b = d.shadow[d.triples[t][1]];
    auto u = detail::normalized({a[0], a[1], a[2]});
    auto n = detail::normalized({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
    std::array<double, 3> v{n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};
    // Sample the circle and cut it into runs on the same side of the view.
    std::vector<std::pair<bool, std::vector<std::array<double, 3>>>> runs;
    for (int deg = 0; deg <= 360; deg += 3) {
      double th = deg * M_PI / 180.0;
      std::array<double, 3> c{std::cos(th) * u[0] + std::sin(th) * v[0], std::cos(th) * u[1] + std::sin(th) * v[1],
                              std::cos(th) * u[2] + std::sin(th) * v[2]};
      auto p = view(c);
      bool front = p[2] >= 0;
      if (runs.empty() || runs.back().first != front) {
        if (!runs.empty()) runs.back().second.push_back(p);
        runs.push_back({front, {}});
      }
      runs.back().second.push_back(p);
    }
    const char* colour = kPalette[t % (sizeof kPalette / sizeof *kPalette)];
    for (const auto& [front, pts] : runs) {
      if (pts.size() < 2) continue;
      s << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << (front ? "1.4" : "0.7") << "\""
        << (front ? "" : " stroke-dasharray=\"3 3\" stroke-opacity=\"0.5\"") << " points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) s << (i ? " " : "") << sx(pts[i][0]) << "," << sy(pts[i][1]);
      s << "\"/>\n";
    }
  }

  for (std::size_t i = 0; i < d.size(); ++i) {
    auto p = view({d.shadow[i][0], d.shadow[i][1], d.shadow[i][2]});
    bool front = p[2] >= 0;
    s << "<circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\"" << (front ? "4" : "3")
      << "\" fill=\"" << (front ? "black" : "white") << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (!point_value.empty() && front)
      s << "<text x=\"" << detail::fmt(half + scale * p[0] + 6) << "\" y=\"" << detail::fmt(half - scale * p[1] - 6)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << point_value[i] << "</text>\n";
  }
  s << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << d.construction << ": " << d.size()
    << " points, " << d.triples.size() << " triples, radius " << rational_text(d.radius);
  if (!point_value.empty()) s << ", values up to " << witness_bound;
  s << "</text>\n</svg>\n";
  return s.str();
}

}  // namespace s2flow

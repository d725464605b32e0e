#pragma once

/**
 * @file document.hpp
 * @brief JSON point-set documents.
 *
 * Layout:
 *
 *     {
 *       "schema_version": 1,
 *       "field": "F1" | "F2" | "float",
 *       "radius": "1" | "2",
 *       "construction": {"name": "...", "params": {...}},
 *       "points": [{"exact": ["c0,c1,c2,c3", x3], "float": [x, y, z]}, ...],
 *       "triples": [[i, j, k], ...]
 *     }
 *
 * Coordinates in the file are scaled by the radius; in memory they are
 * always on the unit sphere. An exact coordinate is the coefficient list of
 * c0 + c1 t + c2 t^2 + c3 t^3 in the named field. Float documents carry no
 * "exact" entries. Every float shadow must lie within 1e-12 of its exact
 * coordinate.
 */

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "s2flow/errors.hpp"
#include "s2flow/exact/quartic_field.hpp"
#include "s2flow/geometry/sphere.hpp"

namespace s2flow {

inline constexpr int kSchemaVersion = 1;
inline constexpr double kShadowTolerance = 1e-12;

struct PointSetDocument {
  int schema_version = kSchemaVersion;
  /// "F1", "F2" or "float".
  std::string field = "float";
  Rational radius{1};
  std::string construction;
  nlohmann::json params = nlohmann::json::object();
  /// Unit-sphere exact points; empty for float documents.
  std::vector<Vec3<FieldElement>> exact;
  /// Unit-sphere float points (one per point, always present).
  std::vector<Vec3<double>> shadow;
  std::vector<Triple> triples;

  bool is_exact() const { return field != "float"; }
  std::size_t size() const { return shadow.size(); }

  PointSet<FieldElement> exact_point_set() const {
    if (!is_exact()) throw DomainError("PointSetDocument: '" + construction + "' has no exact coordinates");
    return {exact, triples};
  }
  PointSet<double> float_point_set() const { return {shadow, triples}; }

  friend bool operator==(const PointSetDocument&, const PointSetDocument&) = default;
};

inline std::string rational_text(const Rational& r) { return r.is_integer() ? r.num().get_str() : r.str(); }

inline PointSetDocument make_document(const PointSet<FieldElement>& ps, const std::string& construction,
                                      nlohmann::json params = nlohmann::json::object(), Rational radius = 1) {
  PointSetDocument d;
  if (ps.points.empty()) throw DomainError("make_document: an exact document needs at least one point");
  const QuarticField* f = nullptr;
  for (const auto& p : ps.points)
    for (std::size_t a = 0; a < 3; ++a)
      if (p[a].field()) f = p[a].field();
  if (!f) throw DomainError("make_document: cannot tell which field the points live in");
  d.field = f->tag();
  d.radius = std::move(radius);
  d.construction = construction;
  d.params = std::move(params);
  for (const auto& p : ps.points) {
    Vec3<FieldElement> q;
    for (std::size_t a = 0; a < 3; ++a) q[a] = p[a].field() ? p[a] : FieldElement(*f, p[a].coeffs());
    d.exact.push_back(q);
    auto x = to_doubles(q);
    d.shadow.push_back({x[0], x[1], x[2]});
  }
  d.triples = ps.triples;
  return d;
}

inline PointSetDocument make_document(const PointSet<double>& ps, const std::string& construction,
                                      nlohmann::json params = nlohmann::json::object(), Rational radius = 1) {
  PointSetDocument d;
  d.radius = std::move(radius);
  d.construction = construction;
  d.params = std::move(params);
  d.shadow = ps.points;
  d.triples = ps.triples;
  return d;
}

inline void check_radius(const Rational& r) {
  if (r != Rational(1) && r != Rational(2)) throw ParseError("PointSetDocument: radius must be 1 or 2");
}

inline nlohmann::json to_json(const PointSetDocument& d) {
  check_radius(d.radius);
  nlohmann::json j;
  j["schema_version"] = d.schema_version;
  j["field"] = d.field;
  j["radius"] = rational_text(d.radius);
  j["construction"] = {{"name", d.construction}, {"params", d.params}};
  auto& pts = j["points"] = nlohmann::json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    nlohmann::json p;
    if (d.is_exact()) {
      auto& ex = p["exact"] = nlohmann::json::array();
      for (std::size_t a = 0; a < 3; ++a) ex.push_back((d.exact[i][a] * d.radius).serialize());
    }
    const double r = d.radius.to_double();
    p["float"] = {d.shadow[i][0] * r, d.shadow[i][1] * r, d.shadow[i][2] * r};
    pts.push_back(std::move(p));
  }
  auto& tr = j["triples"] = nlohmann::json::array();
  for (const auto& t : d.triples) tr.push_back({t[0], t[1], t[2]});
  return j;
}

inline std::string serialize_document(const PointSetDocument& d) { return to_json(d).dump(1) + "\n"; }

inline PointSetDocument document_from_json(const nlohmann::json& j) {
  try {
    PointSetDocument d;
    d.schema_version = j.at("schema_version").get<int>();
    if (d.schema_version != kSchemaVersion)
      throw ParseError("PointSetDocument: unsupported schema_version " + std::to_string(d.schema_version));
    d.field = j.at("field").get<std::string>();
    const QuarticField* f = nullptr;
    if (d.is_exact()) {
      f = fields::by_tag(d.field);
      if (!f) throw ParseError("PointSetDocument: unknown field '" + d.field + "'");
    }
    d.radius = Rational::parse(j.at("radius").get<std::string>());
    check_radius(d.radius);
    const double r = d.radius.to_double();
    d.construction = j.at("construction").at("name").get<std::string>();
    d.params = j.at("construction").value("params", nlohmann::json::object());
    for (const auto& p : j.at("points")) {
      auto fl = p.at("float");
      if (fl.size() != 3) throw ParseError("PointSetDocument: a float point needs 3 coordinates");
      Vec3<double> s{fl[0].get<double>() / r, fl[1].get<double>() / r, fl[2].get<double>() / r};
      if (f) {
        auto ex = p.at("exact");
        if (ex.size() != 3) throw ParseError("PointSetDocument: an exact point needs 3 coordinates");
        Vec3<FieldElement> e;
        for (std::size_t a = 0; a < 3; ++a) {
          e[a] = FieldElement::parse(*f, ex[a].get<std::string>()) / d.radius;
          if (std::abs(to_double(e[a]) - s[a]) * r > kShadowTolerance)
            throw ParseError("PointSetDocument: float shadow of point " + std::to_string(d.shadow.size()) +
                             " is not within 1e-12 of its exact coordinate");
        }
        d.exact.push_back(std::move(e));
      } else if (p.contains("exact")) {
        throw ParseError("PointSetDocument: float documents must not carry exact coordinates");
      }
      d.shadow.push_back(s);
    }
    for (const auto& t : j.at("triples")) {
      if (t.size() != 3) throw ParseError("PointSetDocument: a triple needs 3 indices");
      Triple tr{t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<std::size_t>()};
      for (auto i : tr)
        if (i >= d.shadow.size()) throw ParseError("PointSetDocument: triple index " + std::to_string(i) + " out of range");
      d.triples.push_back(tr);
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("PointSetDocument: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("PointSetDocument: ") + e.what());
  }
}

inline PointSetDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("PointSetDocument: invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

inline PointSetDocument load_document(const std::string& path) { return parse_document(read_text_file(path)); }

inline void save_document(const std::string& path, const PointSetDocument& d) {
  write_text_file(path, serialize_document(d));
}

}  // namespace s2flow

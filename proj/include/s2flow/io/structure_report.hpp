#pragma once

// Graph and edge-orbit report for the icosidodecahedron family.

#include <sstream>
#include <string>
#include <vector>

#include "s2flow/io/verify.hpp"
#include "s2flow/quotient/graph.hpp"

namespace s2flow {

struct StructureReport {
  std::string instance;
  std::size_t reps = 0;
  std::size_t triple_classes = 0;
  /// Empty when the instance has no claimed cubic structure.
  std::string notice;
  std::optional<bool> petersen;
  std::optional<bool> moebius;
  std::optional<EdgeOrbitPartition> orbits;
};

inline nlohmann::json graph_json(const QuotientGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"rep", e.via_rep}});
  return {{"vertices", g.class_ids}, {"edges", edges}};
}

inline StructureReport structure_report(const PointSetDocument& d, const VerifyOptions& opt = {}) {
  StructureReport r;
  r.instance = d.construction;
  auto q = document_quotient(d, opt);
  r.reps = q.num_reps();
  r.triple_classes = q.triple_classes.size();
  try {
    if (d.construction == "icosi") {
      std::vector<std::size_t> all(q.triple_classes.size());
      for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
      r.petersen = is_isomorphic_to(extract_cubic_graph(q, all), ReferenceGraph::Petersen);
    } else if (d.construction == "ce1") {
      auto p = classify_edge_orbits_ce1(q, 30);
      r.petersen = is_isomorphic_to(p.old_graph, ReferenceGraph::Petersen);
      r.moebius = is_isomorphic_to(p.new_graph, ReferenceGraph::MoebiusLadder10);
      r.orbits = std::move(p);
    } else {
      r.notice = "graph extraction skipped: no cubic quotient structure is claimed for '" + d.construction + "'";
    }
  } catch (const StructureError& e) {
    throw StructureError("report for '" + d.construction + "': " + e.what());
  }
  return r;
}

inline std::string structure_summary(const StructureReport& r) {
  if (!r.notice.empty()) return r.notice;
  std::ostringstream s;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (r.petersen) s << "Petersen: " << yn(*r.petersen);
  if (r.moebius) s << "; Möbius ladder M10: " << yn(*r.moebius);
  if (r.orbits)
    s << "; orbits " << r.orbits->petersen_only.size() << "/" << r.orbits->new_orbits.size() << "/"
      << r.orbits->shared.size();
  return s.str();
}

inline std::string structure_text(const StructureReport& r) {
  std::ostringstream s;
  s << "instance: " << r.instance << "\n"
    << "representatives: " << r.reps << "\n"
    << "triple classes: " << r.triple_classes << "\n";
  if (r.orbits) {
    const auto& o = *r.orbits;
    s << "old classes: " << o.old_classes.size() << ", new classes: " << o.new_classes.size() << "\n"
      << "shared orbit is a perfect matching: old graph " << (o.shared_matches_old ? "yes" : "no") << ", new graph "
      << (o.shared_matches_new ? "yes" : "no") << "\n";
  }
  s << structure_summary(r) << "\n";
  return s.str();
}

inline nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["representatives"] = r.reps;
  j["triple_classes"] = r.triple_classes;
  if (!r.notice.empty()) j["notice"] = r.notice;
  if (r.petersen) j["petersen"] = *r.petersen;
  if (r.moebius) j["moebius_ladder_10"] = *r.moebius;
  if (r.orbits) {
    const auto& o = *r.orbits;
    j["orbits"] = {{"petersen_only", o.petersen_only},
                   {"new", o.new_orbits},
                   {"shared", o.shared},
                   {"shared_perfect_matching_old", o.shared_matches_old},
                   {"shared_perfect_matching_new", o.shared_matches_new}};
    j["old_graph"] = graph_json(o.old_graph);
    j["new_graph"] = graph_json(o.new_graph);
  }
  j["summary"] = structure_summary(r);
  return j;
}

}  // namespace s2flow

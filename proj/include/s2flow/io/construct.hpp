#pragma once

// Named constructions as documents.

#include <string>

#include "s2flow/constructions/ce1.hpp"
#include "s2flow/constructions/crosscheck.hpp"
#include "s2flow/io/document.hpp"

namespace s2flow {

enum class Mode { Exact, Float, Both };

inline Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "float") return Mode::Float;
  if (s == "both") return Mode::Both;
  throw DomainError("mode must be exact, float or both (got '" + s + "')");
}

struct ConstructOptions {
  Mode mode = Mode::Both;
  GeometryConfig geometry;
  /// Radius written to the file; 0 picks the construction's default.
  int radius = 0;
  Ce1Options ce1;
  Ce2Params ce2;
  /// "final" (pruned to an unsatisfiable core) or "component" (the largest
  /// degree-pruned component, which needs sqrt 2 and is written as floats).
  std::string ce2_stage = "final";
  int ce2_prune_bound = 4;
};

inline void require_match(const CrosscheckResult& r, const std::string& what) {
  if (!r.ok) throw StructureError(what + ": exact and float constructions disagree: " + r.message);
}

inline PointSetDocument construct_document(const std::string& name, const ConstructOptions& opt = {}) {
  const auto& cfg = opt.geometry;
  cfg.validate();
  auto radius_or = [&](int fallback) {
    int r = opt.radius ? opt.radius : fallback;
    if (r != 1 && r != 2) throw DomainError("radius must be 1 or 2");
    return Rational(r);
  };
  if (name == "icosi") {
    nlohmann::json params = nlohmann::json::object();
    if (opt.mode == Mode::Float) return make_document(build_icosidodecahedron(FloatArithmetic{}, cfg), name, params, radius_or(1));
    auto exact = build_icosidodecahedron(FieldArithmetic(fields::f1()), cfg);
    if (opt.mode == Mode::Both) require_match(combinatorially_equal(exact, build_icosidodecahedron(FloatArithmetic{}, cfg)), name);
    return make_document(exact, name, params, radius_or(1));
  }
  if (name == "ce1") {
    nlohmann::json params = {{"decagon", opt.ce1.decagon}};
    if (opt.mode == Mode::Float) return make_document(build_ce1(FloatArithmetic{}, opt.ce1, cfg), name, params, radius_or(2));
    auto exact = build_ce1(FieldArithmetic(fields::f1()), opt.ce1, cfg);
    if (opt.mode == Mode::Both) require_match(combinatorially_equal(exact, build_ce1(FloatArithmetic{}, opt.ce1, cfg)), name);
    return make_document(exact, name, params, radius_or(2));
  }
  if (name == "ce2") {
    nlohmann::json params = {{"v1", opt.ce2.v1}, {"v2", opt.ce2.v2}, {"w", opt.ce2.w}, {"stage", opt.ce2_stage}};
    if (opt.ce2_stage == "component") {
      auto s = ce2_search(FloatArithmetic{}, opt.ce2, cfg);
      if (opt.mode != Mode::Float)
        require_match(combinatorially_equal(ce2_search(ExtensionArithmetic(fields::f2()), opt.ce2, cfg).component, s.component),
                      name);
      return make_document(s.component, name, params, radius_or(1));
    }
    if (opt.ce2_stage != "final") throw DomainError("ce2 stage must be 'final' or 'component'");
    params["prune_bound"] = opt.ce2_prune_bound;
    if (opt.mode == Mode::Float) {
      auto s = ce2_search(FloatArithmetic{}, opt.ce2, cfg);
      auto final_set = unsat_preserving_prune(s.component, opt.ce2_prune_bound, DecisionEngine::Backtrack, cfg).first;
      return make_document(final_set, name, params, radius_or(1));
    }
    // run_ce2_pipeline always runs both searches and checks them against each other.
    auto p = run_ce2_pipeline(opt.ce2, opt.ce2_prune_bound, DecisionEngine::Backtrack, cfg);
    return make_document(p.final_set, name, params, radius_or(1));
  }
  throw DomainError("unknown construction '" + name + "' (expected icosi, ce1 or ce2)");
}

}  // namespace s2flow

#pragma once

// Document -> quotient -> CNF -> decisions, plus witness files.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "s2flow/flow/backtrack.hpp"
#include "s2flow/flow/dpll.hpp"
#include "s2flow/flow/encode.hpp"
#include "s2flow/flow/minimum.hpp"
#include "s2flow/io/construct.hpp"
#include "s2flow/io/document.hpp"
#include "s2flow/quotient/antipodal.hpp"

namespace s2flow {

enum class Engine { Sat, Backtrack, Both };

inline Engine parse_engine(const std::string& s) {
  if (s == "sat") return Engine::Sat;
  if (s == "backtrack") return Engine::Backtrack;
  if (s == "both") return Engine::Both;
  throw DomainError("engine must be sat, backtrack or both (got '" + s + "')");
}

struct VerifyOptions {
  Mode mode = Mode::Both;
  GeometryConfig geometry;
  bool dedup_antipodal_triples = false;
};

/// Quotient of a document. Exact documents use exact coordinates; in
/// mode "both" the float quotient must come out identical.
inline AntipodalQuotient document_quotient(const PointSetDocument& d, const VerifyOptions& opt = {}) {
  if (!d.is_exact() || opt.mode == Mode::Float) return quotient_antipodal(d.float_point_set(), opt.geometry);
  auto q = quotient_antipodal(d.exact_point_set(), opt.geometry);
  if (opt.mode == Mode::Both) {
    auto qf = quotient_antipodal(d.float_point_set(), opt.geometry);
    if (qf.representatives != q.representatives || qf.oriented_triples != q.oriented_triples)
      throw StructureError("document_quotient: exact and float quotients differ");
  }
  return q;
}

struct RunReport {
  std::string instance;
  std::size_t points = 0, triples = 0, reps = 0, vars = 0, clauses = 0;
  int k = 0;
  /// "SAT" or "UNSAT".
  std::string decision;
  std::optional<bool> sat_result, backtrack_result;
  std::optional<Labeling> witness;
  bool oracle_agreement = true;
  double wall_seconds = 0;

  bool satisfiable() const { return decision == "SAT"; }
  bool verified() const { return oracle_agreement; }
};

inline RunReport run_verify(const PointSetDocument& d, int k, Engine engine, const VerifyOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.instance = d.construction;
  r.k = k;
  r.points = d.size();
  r.triples = d.triples.size();
  auto q = document_quotient(d, opt);
  r.reps = q.num_reps();
  FlowInstance inst = q.flow_instance(k, opt.dedup_antipodal_triples);
  CnfFormula f = encode_nzk(inst);
  r.vars = static_cast<std::size_t>(f.num_vars);
  r.clauses = f.clauses.size();
  if (engine != Engine::Backtrack) {
    auto res = sat_solve(f);
    r.sat_result = res.satisfiable;
    if (res.satisfiable) r.witness = decode_witness(res.model, inst);
  }
  if (engine != Engine::Sat) {
    auto l = backtrack_search(inst);
    r.backtrack_result = l.has_value();
    if (l && !r.witness) r.witness = std::move(l);
  }
  if (r.sat_result && r.backtrack_result) r.oracle_agreement = *r.sat_result == *r.backtrack_result;
  bool sat = r.sat_result ? *r.sat_result : *r.backtrack_result;
  r.decision = sat ? "SAT" : "UNSAT";
  if (r.witness) {
    auto check = verify_labeling(*r.witness, inst);
    if (!check.ok) throw std::logic_error("run_verify: witness failed verification: " + check.violations.front());
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["counts"] = {{"points", r.points}, {"triples", r.triples}, {"reps", r.reps}, {"vars", r.vars}, {"clauses", r.clauses}};
  j["k"] = r.k;
  j["decision"] = r.decision;
  nlohmann::json engines = nlohmann::json::object();
  if (r.sat_result) engines["sat"] = *r.sat_result ? "SAT" : "UNSAT";
  if (r.backtrack_result) engines["backtrack"] = *r.backtrack_result ? "SAT" : "UNSAT";
  j["engines"] = engines;
  j["oracle_agreement"] = r.oracle_agreement;
  j["status"] = r.verified() ? "VERIFIED" : "DISAGREEMENT";
  j["witness"] = r.witness ? nlohmann::json(r.witness->values) : nlohmann::json(nullptr);
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

/// Witness file: values per representative, plus the point index of each
/// representative so a witness cannot silently be applied to another set.
inline nlohmann::json witness_to_json(const Labeling& l, const AntipodalQuotient& q, int k, const std::string& instance) {
  return {{"schema_version", kSchemaVersion},
          {"instance", instance},
          {"k", k},
          {"representatives", q.representatives},
          {"values", l.values}};
}

inline Labeling witness_from_json(const nlohmann::json& j, const AntipodalQuotient& q) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw ParseError("witness: unsupported schema_version");
    auto reps = j.at("representatives").get<std::vector<std::size_t>>();
    if (reps != q.representatives) throw ParseError("witness: representatives do not match the point set");
    Labeling l;
    l.values = j.at("values").get<std::vector<int>>();
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
}

inline int witness_bound(const nlohmann::json& j) {
  try {
    return j.at("k").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
}

struct FlowComparison {
  std::optional<int> min_bound;
  std::optional<int> min_modulus;
  /// min_modulus == min_bound + 1, or both absent.
  bool agree = false;
};

/// Smallest value bound up to k_max and smallest modulus up to k_max + 1.
inline FlowComparison compare_flow_minima(const FlowInstance& shape, int k_max) {
  FlowComparison c;
  c.min_bound = min_flow_number(shape, k_max).bound;
  c.min_modulus = min_mod_flow_number(shape, k_max + 1).modulus;
  if (c.min_bound && c.min_modulus) c.agree = *c.min_modulus == *c.min_bound + 1;
  else c.agree = !c.min_bound && !c.min_modulus;
  return c;
}

}  // namespace s2flow

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "s2flow/io/construct.hpp"
#include "s2flow/io/structure_report.hpp"
#include "s2flow/io/verify.hpp"

using namespace s2flow;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  explicit Checker(Outcome& o) : o_(o) {}
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      o_.ok = false;
      o_.detail += (o_.detail.empty() ? "" : "; ") + what;
    }
  }

 private:
  Outcome& o_;
};

const FieldArithmetic& f1() {
  static FieldArithmetic ctx(fields::f1());
  return ctx;
}

const Ce2Pipeline& ce2() {
  static const Ce2Pipeline p = run_ce2_pipeline();
  return p;
}

std::string counts(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

int brute_zero_sum(int k) {
  int z = 0;
  for (int a = -k; a <= k; ++a)
    for (int b = -k; b <= k; ++b)
      for (int c = -k; c <= k; ++c) z += a && b && c && a + b + c == 0;
  return z;
}

bool brute_force_bounded(const FlowInstance& inst) {
  std::vector<int> vals(inst.num_reps, -inst.k);
  auto next = [&] {
    for (auto& v : vals) {
      v = v == -1 ? 1 : v + 1;
      if (v <= inst.k) return true;
      v = -inst.k;
    }
    return false;
  };
  do {
    bool ok = true;
    for (const auto& t : inst.triples)
      ok = ok && t[0].sign * vals[t[0].rep] + t[1].sign * vals[t[1].rep] + t[2].sign * vals[t[2].rep] == 0;
    if (ok) return true;
  } while (next());
  return false;
}

Outcome criterion_1(Checker& c) {
  auto ps = build_icosidodecahedron(f1());
  c.expect(ps.size() == 30 && ps.triples.size() == 20, "counts " + counts(ps.size(), ps.triples.size()));
  for (auto d : incidence_degrees(ps.size(), ps.triples)) c.expect(d == 2, "a point has degree " + std::to_string(d));
  return {};
}

Outcome criterion_2(Checker& c) {
  auto q = quotient_antipodal(build_icosidodecahedron(f1()));
  std::vector<std::size_t> all(q.triple_classes.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  c.expect(is_isomorphic_to(extract_cubic_graph(q, all), ReferenceGraph::Petersen), "not Petersen");
  return {};
}

Outcome criterion_3(Checker& c) {
  auto q = quotient_antipodal(build_icosidodecahedron(f1()));
  c.expect(!sat_solve(encode_nzk(q.flow_instance(3))).satisfiable, "k=3 SAT by DPLL");
  c.expect(!backtrack_search(q.flow_instance(3)), "k=3 SAT by backtracking");
  auto res = sat_solve(encode_nzk(q.flow_instance(4)));
  c.expect(res.satisfiable, "k=4 UNSAT");
  if (res.satisfiable) c.expect(verify_labeling(decode_witness(res.model, q.flow_instance(4)), q.flow_instance(4)).ok, "bad witness");
  return {};
}

Outcome criterion_4(Checker& c) {
  auto ps = build_ce1(f1());
  auto q = quotient_antipodal(ps);
  c.expect(ps.size() == 50 && ps.triples.size() == 40, "counts " + counts(ps.size(), ps.triples.size()));
  c.expect(q.num_reps() == 25, "reps " + std::to_string(q.num_reps()));
  return {};
}

Outcome criterion_5(Checker& c) {
  auto f = encode_nzk(quotient_antipodal(build_ce1(f1())).flow_instance(4));
  c.expect(f.num_vars == 200 && f.clauses.size() == 19765, "sizes " + counts(f.num_vars, f.clauses.size()));
  auto text = f.to_dimacs();
  c.expect(text.substr(0, text.find('\n') + 1) == "p cnf 200 19765\n", "DIMACS header");
  return {};
}

Outcome criterion_6(Checker& c) {
  auto q = quotient_antipodal(build_ce1(f1()));
  c.expect(!sat_solve(encode_nzk(q.flow_instance(4))).satisfiable, "k=4 SAT by DPLL");
  c.expect(!backtrack_search(q.flow_instance(4)), "k=4 SAT by backtracking");
  auto res = sat_solve(encode_nzk(q.flow_instance(5)));
  c.expect(res.satisfiable, "k=5 UNSAT");
  if (res.satisfiable) c.expect(verify_labeling(decode_witness(res.model, q.flow_instance(5)), q.flow_instance(5)).ok, "bad witness");
  return {};
}

Outcome criterion_7(Checker& c) {
  auto p = classify_edge_orbits_ce1(quotient_antipodal(build_ce1(f1())));
  c.expect(is_isomorphic_to(p.new_graph, ReferenceGraph::MoebiusLadder10), "new graph is not M10");
  c.expect(p.petersen_only.size() == 10 && p.new_orbits.size() == 10 && p.shared.size() == 5, "orbit sizes");
  c.expect(p.shared_matches_old && p.shared_matches_new, "shared orbit is not a perfect matching in both graphs");
  return {};
}

Outcome criterion_8(Checker& c) {
  const double s3 = std::sqrt(3.0);
  const double published[] = {0, (2 - s3) / 2, (s3 - 1) / 2, 0.5, std::sqrt(s3 - 1), s3 / 2, 1};
  const auto& p = ce2();
  for (double v : published) {
    int hits = 0;
    for (const auto& x : p.exact.candidates.values) hits += std::abs(to_double(x) - v) < 1e-12;
    for (double x : p.approx.candidates.values) hits += std::abs(x - v) < 1e-12;
    c.expect(hits == 2, "published value " + std::to_string(v) + " missing");
  }
  c.expect(p.exact.component.size() == 126 && p.exact.component.triples.size() == 108,
           "component " + counts(p.exact.component.size(), p.exact.component.triples.size()));
  c.expect(p.component_match.ok, "exact and float components differ");
  return {};
}

Outcome criterion_9(Checker& c) {
  const auto& fs = ce2().final_set;
  c.expect(fs.size() == 36 && fs.triples.size() == 13, "final set " + counts(fs.size(), fs.triples.size()));
  auto q = quotient_antipodal(fs);
  auto f4 = encode_nzk(q.flow_instance(4));
  auto f5 = encode_nzk(q.flow_instance(5));
  c.expect(f4.num_vars == 144 && f4.clauses.size() == 6710, "k=4 sizes " + counts(f4.num_vars, f4.clauses.size()));
  c.expect(f5.num_vars == 180 && f5.clauses.size() == 13048, "k=5 sizes " + counts(f5.num_vars, f5.clauses.size()));
  c.expect(!sat_solve(f4).satisfiable && !backtrack_search(q.flow_instance(4)), "k=4 SAT");
  auto res = sat_solve(f5);
  c.expect(res.satisfiable, "k=5 UNSAT");
  if (res.satisfiable) c.expect(verify_labeling(decode_witness(res.model, q.flow_instance(5)), q.flow_instance(5)).ok, "bad witness");
  return {};
}

Outcome criterion_10(Checker& c) {
  c.expect(brute_zero_sum(4) == 36 && brute_zero_sum(5) == 60, "Z4/Z5");
  c.expect(count_zero_sum_values(4) == 36 && count_zero_sum_values(5) == 60, "library Z4/Z5");
  auto closed = [](long p, long t, int k, long z) { return p * (1 + 2 * k * (2 * k - 1) / 2) + t * (8L * k * k * k - z); };
  c.expect(closed(25, 40, 4, brute_zero_sum(4)) == 19765, "19765");
  c.expect(closed(18, 13, 4, brute_zero_sum(4)) == 6710, "6710");
  c.expect(closed(18, 13, 5, brute_zero_sum(5)) == 13048, "13048");
  return {};
}

Outcome criterion_11(Checker& c) {
  std::mt19937 rng(2024);
  std::normal_distribution<double> n;
  auto unit = [&] {
    Vec3<double> v{n(rng), n(rng), n(rng)};
    return (1 / std::sqrt(dot(v, v))) * v;
  };
  GeometryConfig tight;
  tight.epsilon = 1e-9;
  int mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    Vec3<double> a = unit(), b, d;
    if (i % 2) {
      auto m = cross(a, unit());
      m = (1 / std::sqrt(dot(m, m))) * m;
      b = -0.5 * a + (std::sqrt(3.0) / 2) * cross(m, a);
      d = -(a + b);
    } else {
      b = unit();
      d = unit();
    }
    auto s = a + b + d;
    bool zero = near_zero(s[0], tight) && near_zero(s[1], tight) && near_zero(s[2], tight);
    mismatches += zero != is_equidistant_great_circle(a, b, d, tight);
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " zero-sum/dot mismatches");

  std::uniform_int_distribution<int> reps(3, 6), cnt(1, 7), bound(1, 3), sg(0, 1);
  int disagreements = 0;
  for (int trial = 0; trial < 100; ++trial) {
    FlowInstance inst;
    inst.num_reps = static_cast<std::size_t>(reps(rng));
    inst.k = bound(rng);
    std::uniform_int_distribution<std::size_t> pick(0, inst.num_reps - 1);
    for (int t = cnt(rng); t > 0; --t) {
      std::size_t x = pick(rng), y, z;
      do y = pick(rng);
      while (y == x);
      do z = pick(rng);
      while (z == x || z == y);
      inst.triples.push_back({SignedRep{x, sg(rng) ? 1 : -1}, SignedRep{y, sg(rng) ? 1 : -1}, SignedRep{z, sg(rng) ? 1 : -1}});
    }
    bool want = brute_force_bounded(inst);
    disagreements += sat_solve(encode_nzk(inst)).satisfiable != want;
    disagreements += backtrack_search(inst).has_value() != want;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " solver/oracle disagreements");

  GeometryConfig cfg;
  c.expect(combinatorially_equal(build_icosidodecahedron(f1(), cfg), build_icosidodecahedron(FloatArithmetic{}, cfg)).ok,
           "icosi exact/float");
  c.expect(combinatorially_equal(build_ce1(f1(), {}, cfg), build_ce1(FloatArithmetic{}, {}, cfg)).ok, "ce1 exact/float");
  c.expect(ce2().pruned_match.ok && ce2().component_match.ok, "ce2 exact/float");
  return {};
}

Outcome criterion_12(Checker& c) {
  for (const char* name : {"icosi", "ce1", "ce2"}) {
    auto d = construct_document(name);
    auto cmp = compare_flow_minima(document_quotient(d).flow_instance(1), 6);
    c.expect(cmp.agree && cmp.min_bound, std::string(name) + " minima differ");
  }
  return {};
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "icosidodecahedron: 30 points, 20 triples, every point in 2 triples", 1, criterion_1},
      {2, "icosidodecahedron quotient graph is the Petersen graph", 1, criterion_2},
      {3, "icosidodecahedron: k=3 UNSAT, k=4 SAT with a verified witness", 2, criterion_3},
      {4, "ce1: 50 points, 40 triples, 25 representatives", 5, criterion_4},
      {5, "ce1 encoding at k=4: 200 variables, 19765 clauses, DIMACS header", 5, criterion_5},
      {6, "ce1: k=4 UNSAT by both engines, k=5 SAT with a verified witness", 10, criterion_6},
      {7, "ce1 structure: Moebius ladder M10, orbits 10/10/5, shared perfect matching", 5, criterion_7},
      {8, "ce2: published coordinate values present, 126-point / 108-triple component", 60, criterion_8},
      {9, "ce2 final set: 36/13, 144/6710 UNSAT at k=4, 180/13048 SAT at k=5", 60, criterion_9},
      {10, "zero-sum counts Z4=36, Z5=60 reproduce the three clause totals", 1, criterion_10},
      {11, "property suite: zero-sum vs dot, solver vs brute force, exact vs float", 60, criterion_11},
      {12, "integer-bound and modular minima agree on all three instances", 30, criterion_12},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Outcome o;
    Checker c(o);
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.budget_seconds) c.expect(false, "took " + std::to_string(secs) + " s");
    std::printf("%s [%2d] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", cr.id, cr.title, secs, o.ok ? "" : ": ",
                o.detail.c_str());
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}

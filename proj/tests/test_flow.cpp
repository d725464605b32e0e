#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "s2flow/constructions/ce1.hpp"
#include "s2flow/constructions/crosscheck.hpp"
#include "s2flow/constructions/icosidodecahedron.hpp"
#include "s2flow/flow/backtrack.hpp"
#include "s2flow/flow/dpll.hpp"
#include "s2flow/flow/encode.hpp"
#include "s2flow/flow/minimum.hpp"
#include "s2flow/quotient/antipodal.hpp"

using namespace s2flow;

namespace {

FlowInstance icosi_instance(int k) {
  return quotient_antipodal(build_icosidodecahedron(FieldArithmetic(fields::f1()))).flow_instance(k);
}

FlowInstance ce1_instance(int k) { return quotient_antipodal(build_ce1(FieldArithmetic(fields::f1()))).flow_instance(k); }

FlowInstance ce2_instance(int k) {
  static const auto final_set = run_ce2_pipeline().final_set;
  return quotient_antipodal(final_set).flow_instance(k);
}

FlowInstance random_instance(std::mt19937& rng) {
  std::uniform_int_distribution<int> reps(3, 6), count(1, 7), sgn(0, 1), bound(1, 3);
  FlowInstance inst;
  inst.num_reps = static_cast<std::size_t>(reps(rng));
  inst.k = bound(rng);
  int n = count(rng);
  std::uniform_int_distribution<std::size_t> pick(0, inst.num_reps - 1);
  for (int t = 0; t < n; ++t) {
    OrientedTriple tr;
    std::size_t a = pick(rng), b, c;
    do b = pick(rng);
    while (b == a);
    do c = pick(rng);
    while (c == a || c == b);
    tr = {SignedRep{a, sgn(rng) ? 1 : -1}, SignedRep{b, sgn(rng) ? 1 : -1}, SignedRep{c, sgn(rng) ? 1 : -1}};
    inst.triples.push_back(tr);
  }
  return inst;
}

// Exhaustive search over all labelings with values in `domain`.
template <class Ok>
bool brute_force(std::size_t n, const std::vector<int>& domain, Ok ok) {
  std::vector<std::size_t> idx(n, 0);
  std::vector<int> vals(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) vals[i] = domain[idx[i]];
    if (ok(vals)) return true;
    std::size_t i = 0;
    while (i < n && ++idx[i] == domain.size()) idx[i++] = 0;
    if (i == n) return false;
  }
}

bool brute_force_bounded(const FlowInstance& inst) {
  std::vector<int> domain;
  for (int v = -inst.k; v <= inst.k; ++v)
    if (v) domain.push_back(v);
  return brute_force(inst.num_reps, domain, [&](const std::vector<int>& vals) {
    for (const auto& t : inst.triples)
      if (t[0].sign * vals[t[0].rep] + t[1].sign * vals[t[1].rep] + t[2].sign * vals[t[2].rep] != 0) return false;
    return true;
  });
}

bool brute_force_mod(const FlowInstance& inst, int m) {
  std::vector<int> domain;
  for (int v = 1; v < m; ++v) domain.push_back(v);
  return brute_force(inst.num_reps, domain, [&](const std::vector<int>& vals) {
    for (const auto& t : inst.triples) {
      int s = t[0].sign * vals[t[0].rep] + t[1].sign * vals[t[1].rep] + t[2].sign * vals[t[2].rep];
      if (((s % m) + m) % m) return false;
    }
    return true;
  });
}

}  // namespace

TEST(ZeroSumCount, EnumerationOracle) {
  // independent count: nested loops over signed values
  auto count = [](int k) {
    int z = 0;
    for (int a = -k; a <= k; ++a)
      for (int b = -k; b <= k; ++b)
        for (int c = -k; c <= k; ++c) z += a && b && c && a + b + c == 0;
    return z;
  };
  for (int k = 1; k <= 7; ++k) EXPECT_EQ(count_zero_sum_values(k), count(k)) << k;
  EXPECT_EQ(count_zero_sum_values(4), 36);
  EXPECT_EQ(count_zero_sum_values(5), 60);
  EXPECT_THROW(count_zero_sum_values(0), DomainError);
}

TEST(ZeroSumCount, ClosedFormReproducesPublishedTotals) {
  EXPECT_EQ(expected_clause_count(25, 40, 4), 19765);
  EXPECT_EQ(expected_clause_count(18, 13, 4), 6710);
  EXPECT_EQ(expected_clause_count(18, 13, 5), 13048);
}

TEST(Encoding, SizesOfTheBundledInstances) {
  auto a = encode_nzk(icosi_instance(4));
  EXPECT_EQ(a.num_vars, 120);
  EXPECT_EQ(a.clauses.size(), 9955U);
  auto b = encode_nzk(ce1_instance(4));
  EXPECT_EQ(b.num_vars, 200);
  EXPECT_EQ(b.clauses.size(), 19765U);
  EXPECT_EQ(b.to_dimacs().substr(0, b.to_dimacs().find('\n')), "p cnf 200 19765");
  auto c = encode_nzk(ce2_instance(4));
  EXPECT_EQ(c.num_vars, 144);
  EXPECT_EQ(c.clauses.size(), 6710U);
  auto d = encode_nzk(ce2_instance(5));
  EXPECT_EQ(d.num_vars, 180);
  EXPECT_EQ(d.clauses.size(), 13048U);
}

TEST(Encoding, VariableLayout) {
  EXPECT_EQ(nzk_variable(4, 0, 0), 1);
  EXPECT_EQ(nzk_variable(4, 2, 3), 2 * 8 + 3 + 1);
  for (int k = 1; k <= 5; ++k)
    for (int s = 0; s < 2 * k; ++s) {
      EXPECT_EQ(value_slot(k, slot_value(k, s)), s);
      EXPECT_NE(slot_value(k, s), 0);
    }
  EXPECT_EQ(slot_value(4, 0), -4);
  EXPECT_EQ(slot_value(4, 7), 4);
}

TEST(Encoding, DimacsIsDeterministicAndRoundTrips) {
  auto f = encode_nzk(ce1_instance(4));
  auto text = f.to_dimacs();
  EXPECT_EQ(text, encode_nzk(ce1_instance(4)).to_dimacs());
  std::istringstream in("c comment\n" + text);
  auto g = parse_dimacs(in);
  EXPECT_EQ(g.num_vars, f.num_vars);
  EXPECT_EQ(g.clauses, f.clauses);
}

TEST(Encoding, DimacsParserRejectsMalformedInput) {
  std::istringstream no_header("1 2 0\n");
  EXPECT_THROW(parse_dimacs(no_header), ParseError);
  std::istringstream wrong_count("p cnf 2 2\n1 2 0\n");
  EXPECT_THROW(parse_dimacs(wrong_count), ParseError);
  std::istringstream unterminated("p cnf 2 1\n1 2\n");
  EXPECT_THROW(parse_dimacs(unterminated), ParseError);
  std::istringstream out_of_range("p cnf 2 1\n3 0\n");
  EXPECT_THROW(parse_dimacs(out_of_range), DomainError);
}

TEST(Encoding, RejectsInvalidInstances) {
  FlowInstance bad{2, {{SignedRep{0, 1}, SignedRep{1, 1}, SignedRep{1, -1}}}, 2};
  EXPECT_THROW(encode_nzk(bad), DomainError);
  FlowInstance range{2, {{SignedRep{0, 1}, SignedRep{1, 1}, SignedRep{2, 1}}}, 2};
  EXPECT_THROW(encode_nzk(range), DomainError);
  FlowInstance zero_k{3, {}, 0};
  EXPECT_THROW(encode_nzk(zero_k), DomainError);
}

TEST(Decision, BundledInstances) {
  EXPECT_FALSE(sat_solve(encode_nzk(icosi_instance(3))).satisfiable);
  EXPECT_FALSE(backtrack_search(icosi_instance(3)));
  auto sat = sat_solve(encode_nzk(icosi_instance(4)));
  ASSERT_TRUE(sat.satisfiable);
  EXPECT_TRUE(verify_labeling(decode_witness(sat.model, icosi_instance(4)), icosi_instance(4)).ok);

  EXPECT_FALSE(sat_solve(encode_nzk(ce1_instance(4))).satisfiable);
  EXPECT_FALSE(backtrack_search(ce1_instance(4)));
  auto five = sat_solve(encode_nzk(ce1_instance(5)));
  ASSERT_TRUE(five.satisfiable);
  EXPECT_TRUE(encode_nzk(ce1_instance(5)).satisfied_by(five.model));
  auto bt = backtrack_search(ce1_instance(5));
  ASSERT_TRUE(bt);
  EXPECT_TRUE(verify_labeling(*bt, ce1_instance(5)).ok);

  EXPECT_FALSE(sat_solve(encode_nzk(ce2_instance(4))).satisfiable);
  EXPECT_TRUE(sat_solve(encode_nzk(ce2_instance(5))).satisfiable);
}

TEST(Decision, SolversAgreeWithBruteForce) {
  std::mt19937 rng(424242);
  int sat_count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_instance(rng);
    bool expected = brute_force_bounded(inst);
    auto s = sat_solve(encode_nzk(inst));
    auto b = backtrack_search(inst);
    EXPECT_EQ(s.satisfiable, expected) << "trial " << trial;
    EXPECT_EQ(b.has_value(), expected) << "trial " << trial;
    if (s.satisfiable) EXPECT_TRUE(verify_labeling(decode_witness(s.model, inst), inst).ok);
    if (b) EXPECT_TRUE(verify_labeling(*b, inst).ok);
    sat_count += expected;
  }
  // the generator should exercise both outcomes
  EXPECT_GT(sat_count, 10);
  EXPECT_LT(sat_count, 90);
}

TEST(Decision, ModularSearchAgreesWithBruteForce) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_instance(rng);
    int m = 2 + trial % 4;
    auto l = mod_backtrack_search(inst, m);
    EXPECT_EQ(l.has_value(), brute_force_mod(inst, m)) << "trial " << trial;
    if (l) EXPECT_TRUE(verify_mod_labeling(*l, inst));
  }
  EXPECT_THROW(mod_backtrack_search(icosi_instance(1), 1), DomainError);
}

TEST(Decision, MirrorDedupKeepsDecisions) {
  auto q = quotient_antipodal(build_icosidodecahedron(FieldArithmetic(fields::f1())));
  auto full = q.flow_instance(3), half = q.flow_instance(3, true);
  EXPECT_EQ(full.triples.size(), 20U);
  EXPECT_EQ(half.triples.size(), 10U);
  EXPECT_EQ(sat_solve(encode_nzk(full)).satisfiable, sat_solve(encode_nzk(half)).satisfiable);
  EXPECT_EQ(sat_solve(encode_nzk(full.with_bound(4))).satisfiable, sat_solve(encode_nzk(half.with_bound(4))).satisfiable);
  auto c = quotient_antipodal(build_ce1(FieldArithmetic(fields::f1())));
  EXPECT_FALSE(backtrack_search(c.flow_instance(4, true)));
  EXPECT_TRUE(backtrack_search(c.flow_instance(5, true)));
}

TEST(Labeling, VerifierReportsEveryViolation) {
  FlowInstance inst{3, {{SignedRep{0, 1}, SignedRep{1, 1}, SignedRep{2, -1}}}, 2};
  EXPECT_TRUE(verify_labeling({{1, 1, 2}}, inst).ok);
  EXPECT_TRUE(verify_labeling(Labeling{{1, 1, 2}}.negated(), inst).ok);
  auto bad = verify_labeling({{0, 3, 1}}, inst);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.violations.size(), 3U);
  EXPECT_FALSE(verify_labeling({{1, 1}}, inst).ok);
}

TEST(Minimum, IntegerAndModularMinimaAgree) {
  struct Case {
    FlowInstance shape;
    int bound, modulus;
  };
  for (const auto& c : {Case{icosi_instance(1), 4, 5}, Case{ce1_instance(1), 5, 6}, Case{ce2_instance(1), 5, 6}}) {
    auto b = min_flow_number(c.shape, 6);
    auto m = min_mod_flow_number(c.shape, 7);
    ASSERT_TRUE(b.bound);
    ASSERT_TRUE(m.modulus);
    EXPECT_EQ(*b.bound, c.bound);
    EXPECT_EQ(*m.modulus, c.modulus);
    EXPECT_EQ(*b.bound + 1, *m.modulus);
    EXPECT_TRUE(verify_labeling(*b.witness, c.shape.with_bound(*b.bound)).ok);
    EXPECT_TRUE(verify_mod_labeling(*m.witness, c.shape));
  }
  EXPECT_FALSE(min_flow_number(icosi_instance(1), 3).bound);
  EXPECT_THROW(min_flow_number(icosi_instance(1), 0), DomainError);
}

#pragma once

/**
 * @file encode.hpp
 * @brief CNF encoding of the bounded nowhere-zero labeling problem.
 *
 * Variable numbering: rep r (0-based) and value slot j (0-based) map to
 * r * 2k + j + 1, where slot j indexes the ordered value list
 * (-k, ..., -1, 1, ..., k).
 *
 * Clause order:
 *   1. for each rep, ascending: the at-least-one clause (slots ascending),
 *      then the pairwise at-most-one clauses (a < b, lexicographic);
 *   2. for each triple, ascending: one blocking clause
 *      (-x(r1,j1) -x(r2,j2) -x(r3,j3)) for every (j1, j2, j3), in
 *      lexicographic order, whose signed value sum is nonzero.
 *
 * Clause count: P (1 + C(2k, 2)) + T ((2k)^3 - Z_k), with Z_k the number of
 * ordered zero-sum value triples.
 */

#include <cstdint>

#include "s2flow/flow/cnf.hpp"
#include "s2flow/flow/instance.hpp"

namespace s2flow {

/// Value held by slot j for bound k.
inline int slot_value(int k, int slot) { return slot < k ? slot - k : slot - k + 1; }

/// Slot holding value v for bound k (v nonzero, |v| <= k).
inline int value_slot(int k, int v) { return v < 0 ? v + k : v + k - 1; }

inline int nzk_variable(int k, std::size_t rep, int slot) { return static_cast<int>(rep) * 2 * k + slot + 1; }

/// #{(a, b, c) in ({+-1..+-k})^3 : a + b + c = 0}, by enumeration.
inline std::int64_t count_zero_sum_values(int k) {
  if (k < 1) throw DomainError("count_zero_sum_values: k must be >= 1");
  std::int64_t count = 0;
  for (int a = 0; a < 2 * k; ++a)
    for (int b = 0; b < 2 * k; ++b)
      for (int c = 0; c < 2 * k; ++c)
        if (slot_value(k, a) + slot_value(k, b) + slot_value(k, c) == 0) ++count;
  return count;
}

inline std::int64_t expected_clause_count(std::int64_t reps, std::int64_t triples, int k) {
  std::int64_t n = 2 * k;
  return reps * (1 + n * (n - 1) / 2) + triples * (n * n * n - count_zero_sum_values(k));
}

inline CnfFormula encode_nzk(const FlowInstance& inst) {
  inst.validate();
  const int k = inst.k;
  const int n = 2 * k;
  CnfFormula f;
  f.num_vars = static_cast<int>(inst.num_reps) * n;
  for (std::size_t r = 0; r < inst.num_reps; ++r) {
    std::vector<int> alo;
    for (int j = 0; j < n; ++j) alo.push_back(nzk_variable(k, r, j));
    f.clauses.push_back(std::move(alo));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) f.clauses.push_back({-nzk_variable(k, r, a), -nzk_variable(k, r, b)});
  }
  const std::int64_t per_triple = static_cast<std::int64_t>(n) * n * n - count_zero_sum_values(k);
  for (const auto& t : inst.triples) {
    std::int64_t emitted = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int sum = t[0].sign * slot_value(k, a) + t[1].sign * slot_value(k, b) + t[2].sign * slot_value(k, c);
          if (sum == 0) continue;
          f.clauses.push_back(
              {-nzk_variable(k, t[0].rep, a), -nzk_variable(k, t[1].rep, b), -nzk_variable(k, t[2].rep, c)});
          ++emitted;
        }
    // Negating one sign permutes the solution set, so the count is sign-free.
    if (emitted != per_triple) throw EncodingError("encode_nzk: blocking-clause count depends on orientation signs");
  }
  if (static_cast<std::int64_t>(f.clauses.size()) !=
      expected_clause_count(static_cast<std::int64_t>(inst.num_reps), static_cast<std::int64_t>(inst.triples.size()), k))
    throw EncodingError("encode_nzk: clause count disagrees with the closed form");
  return f;
}

/// Reads the labeling out of a satisfying model of encode_nzk(inst).
inline Labeling decode_witness(const std::vector<bool>& model, const FlowInstance& inst) {
  const int k = inst.k;
  Labeling l;
  l.values.resize(inst.num_reps, 0);
  for (std::size_t r = 0; r < inst.num_reps; ++r) {
    int hits = 0;
    for (int j = 0; j < 2 * k; ++j) {
      auto v = static_cast<std::size_t>(nzk_variable(k, r, j));
      if (v < model.size() && model[v]) {
        ++hits;
        l.values[r] = slot_value(k, j);
      }
    }
    if (hits != 1)
      throw EncodingError("decode_witness: rep " + std::to_string(r) + " has " + std::to_string(hits) +
                          " true value slots");
  }
  auto check = verify_labeling(l, inst);
  if (!check.ok) throw EncodingError("decode_witness: decoded labeling fails: " + check.violations.front());
  return l;
}

}  // namespace s2flow

#pragma once

// Smallest value bound (SAT route) and smallest modulus (backtracking route).
//
// Conventions: a bound k means values +-1..+-k, i.e. a nowhere-zero
// (k+1)-flow; a modulus m means a nowhere-zero mod-m flow. The two minima
// "agree" when min_modulus == min_bound + 1.

#include <optional>

#include "s2flow/flow/backtrack.hpp"
#include "s2flow/flow/dpll.hpp"
#include "s2flow/flow/encode.hpp"

namespace s2flow {

struct FlowMinimum {
  std::optional<int> bound;
  std::optional<Labeling> witness;
};

inline FlowMinimum min_flow_number(const FlowInstance& shape, int k_max) {
  if (k_max < 1) throw DomainError("min_flow_number: k_max must be >= 1");
  for (int k = 1; k <= k_max; ++k) {
    FlowInstance inst = shape.with_bound(k);
    auto res = sat_solve(encode_nzk(inst));
    if (res.satisfiable) return {k, decode_witness(res.model, inst)};
  }
  return {};
}

struct ModFlowMinimum {
  std::optional<int> modulus;
  std::optional<ModLabeling> witness;
};

inline ModFlowMinimum min_mod_flow_number(const FlowInstance& shape, int k_max) {
  if (k_max < 2) throw DomainError("min_mod_flow_number: k_max must be >= 2");
  for (int m = 2; m <= k_max; ++m)
    if (auto l = mod_backtrack_search(shape, m)) return {m, std::move(l)};
  return {};
}

}  // namespace s2flow

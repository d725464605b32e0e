#pragma once

// Labeling model over antipodal-pair representatives.
//
// A label q on the sphere with q(-p) = -q(p) is determined by its values on
// one representative per antipodal pair. A point p = s * rep contributes
// s * q(rep) to any triple containing it, so every great-circle triple turns
// into one linear constraint s1 q(r1) + s2 q(r2) + s3 q(r3) = 0.
//
// `k` is the value bound: labels range over {-k..-1, 1..k}. In flow
// terminology that is a nowhere-zero (k+1)-flow, so k = 4 is the "nz5"
// question.

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "s2flow/errors.hpp"

namespace s2flow {

struct SignedRep {
  std::size_t rep = 0;
  int sign = 1;

  friend bool operator==(const SignedRep&, const SignedRep&) = default;
};

using OrientedTriple = std::array<SignedRep, 3>;

struct FlowInstance {
  std::size_t num_reps = 0;
  std::vector<OrientedTriple> triples;
  int k = 4;

  void validate() const {
    if (k < 1) throw DomainError("FlowInstance: value bound k must be >= 1");
    for (std::size_t t = 0; t < triples.size(); ++t) {
      const auto& tr = triples[t];
      for (std::size_t i = 0; i < 3; ++i) {
        if (tr[i].rep >= num_reps)
          throw DomainError("FlowInstance: triple " + std::to_string(t) + " references rep " +
                            std::to_string(tr[i].rep) + " out of range");
        if (tr[i].sign != 1 && tr[i].sign != -1)
          throw DomainError("FlowInstance: orientation signs must be +1 or -1");
        for (std::size_t j = i + 1; j < 3; ++j)
          if (tr[i].rep == tr[j].rep)
            throw DomainError("FlowInstance: triple " + std::to_string(t) + " uses rep " + std::to_string(tr[i].rep) +
                              " twice");
      }
    }
  }

  FlowInstance with_bound(int bound) const {
    FlowInstance out = *this;
    out.k = bound;
    return out;
  }

  /// Drops every triple whose negation (same reps, all signs flipped)
  /// appeared earlier. Its constraint is the negated equation, hence implied.
  FlowInstance without_antipodal_mirrors() const {
    FlowInstance out = *this;
    out.triples.clear();
    for (const auto& t : triples) {
      bool mirrored = false;
      for (const auto& u : out.triples) {
        bool all = true;
        for (const auto& a : t) {
          bool hit = false;
          for (const auto& b : u) hit = hit || (a.rep == b.rep && a.sign == -b.sign);
          all = all && hit;
        }
        if (all) {
          mirrored = true;
          break;
        }
      }
      if (!mirrored) out.triples.push_back(t);
    }
    return out;
  }
};

struct Labeling {
  /// values[rep] in {-k..-1, 1..k}
  std::vector<int> values;

  Labeling negated() const {
    Labeling out = *this;
    for (auto& v : out.values) v = -v;
    return out;
  }
};

struct LabelingCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks every value and every triple; reports all violations.
inline LabelingCheck verify_labeling(const Labeling& l, const FlowInstance& inst) {
  LabelingCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.violations.push_back(std::move(msg));
  };
  if (l.values.size() != inst.num_reps)
    fail("labeling has " + std::to_string(l.values.size()) + " values for " + std::to_string(inst.num_reps) + " reps");
  for (std::size_t r = 0; r < l.values.size(); ++r) {
    int v = l.values[r];
    if (v == 0) fail("rep " + std::to_string(r) + " has value 0");
    else if (v > inst.k || v < -inst.k)
      fail("rep " + std::to_string(r) + " has value " + std::to_string(v) + " outside [-k, k]");
  }
  for (std::size_t t = 0; t < inst.triples.size(); ++t) {
    long sum = 0;
    bool in_range = true;
    for (const auto& sr : inst.triples[t]) {
      if (sr.rep >= l.values.size()) {
        in_range = false;
        break;
      }
      sum += sr.sign * l.values[sr.rep];
    }
    if (!in_range) fail("triple " + std::to_string(t) + " references a rep without a value");
    else if (sum != 0) fail("triple " + std::to_string(t) + " sums to " + std::to_string(sum));
  }
  return out;
}

}  // namespace s2flow

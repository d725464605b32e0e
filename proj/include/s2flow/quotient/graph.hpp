#pragma once

/**
 * @file graph.hpp
 * @brief Cubic graphs read off a triple sub-collection, small-graph
 * isomorphism, and the reference graphs.
 *
 * Vertices are triple classes; two classes are joined by an edge for every
 * representative they share. Inside the chosen sub-collection each touched
 * representative must lie in exactly two classes.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "s2flow/errors.hpp"
#include "s2flow/quotient/antipodal.hpp"

namespace s2flow {

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t via_rep = 0;
};

struct QuotientGraph {
  /// Vertex i is triple class class_ids[i].
  std::vector<std::size_t> class_ids;
  std::vector<GraphEdge> edges;

  std::size_t num_vertices() const { return class_ids.size(); }
  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(class_ids.size(), 0);
    for (const auto& e : edges) {
      ++d[e.u];
      ++d[e.v];
    }
    return d;
  }
};

inline QuotientGraph extract_cubic_graph(const AntipodalQuotient& q, const std::vector<std::size_t>& triple_subset) {
  QuotientGraph g;
  std::map<std::size_t, std::size_t> vertex_of;
  for (auto c : triple_subset) {
    if (c >= q.triple_classes.size()) throw DomainError("extract_cubic_graph: unknown triple class " + std::to_string(c));
    if (vertex_of.emplace(c, g.class_ids.size()).second) g.class_ids.push_back(c);
  }
  std::map<std::size_t, std::vector<std::size_t>> classes_of_rep;
  for (std::size_t vtx = 0; vtx < g.class_ids.size(); ++vtx) {
    const auto& members = q.triple_classes[g.class_ids[vtx]];
    for (const auto& sr : q.oriented_triples[members.front()]) classes_of_rep[sr.rep].push_back(vtx);
  }
  for (const auto& [rep, vs] : classes_of_rep) {
    if (vs.size() != 2)
      throw StructureError("extract_cubic_graph: rep " + std::to_string(rep) + " lies in " + std::to_string(vs.size()) +
                           " triple classes of the subset (expected 2)");
    g.edges.push_back({vs[0], vs[1], rep});
  }
  for (const auto& e : g.edges)
    if (e.u == e.v) throw StructureError("extract_cubic_graph: self-loop via rep " + std::to_string(e.via_rep));
  auto deg = g.degrees();
  for (std::size_t vtx = 0; vtx < deg.size(); ++vtx)
    if (deg[vtx] != 3)
      throw StructureError("extract_cubic_graph: vertex for class " + std::to_string(g.class_ids[vtx]) + " has degree " +
                           std::to_string(deg[vtx]));
  return g;
}

/// Simple undirected graph on at most 64 vertices, adjacency as bitmasks.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0) : adj_(n, 0) {
    if (n > 64) throw DomainError("SimpleGraph: at most 64 vertices");
  }

  static SimpleGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static SimpleGraph from_quotient_graph(const QuotientGraph& qg) {
    SimpleGraph g(qg.num_vertices());
    for (const auto& e : qg.edges) {
      if (g.has_edge(e.u, e.v)) throw StructureError("SimpleGraph: parallel edges are not simple");
      g.add_edge(e.u, e.v);
    }
    return g;
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v || u >= adj_.size() || v >= adj_.size()) throw DomainError("SimpleGraph: bad edge");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  std::size_t size() const { return adj_.size(); }
  bool has_edge(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1U; }
  std::uint64_t neighbours(std::size_t u) const { return adj_[u]; }
  int degree(std::size_t u) const { return std::popcount(adj_[u]); }
  std::size_t edge_count() const {
    std::size_t s = 0;
    for (auto a : adj_) s += static_cast<std::size_t>(std::popcount(a));
    return s / 2;
  }

  /// Same graph with vertex v renamed perm[v].
  SimpleGraph relabeled(const std::vector<std::size_t>& perm) const {
    SimpleGraph g(size());
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = u + 1; v < size(); ++v)
        if (has_edge(u, v)) g.add_edge(perm[u], perm[v]);
    return g;
  }

  /// Length of a shortest cycle; 0 for a forest.
  std::size_t girth() const {
    std::size_t best = 0;
    for (std::size_t s = 0; s < size(); ++s) {
      std::vector<long> dist(size(), -1), parent(size(), -1);
      std::vector<std::size_t> queue{s};
      dist[s] = 0;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        auto u = queue[h];
        for (std::uint64_t nb = adj_[u]; nb; nb &= nb - 1) {
          auto v = static_cast<std::size_t>(std::countr_zero(nb));
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            parent[v] = static_cast<long>(u);
            queue.push_back(v);
          } else if (parent[u] != static_cast<long>(v)) {
            auto len = static_cast<std::size_t>(dist[u] + dist[v] + 1);
            if (!best || len < best) best = len;
          }
        }
      }
    }
    return best;
  }

 private:
  std::vector<std::uint64_t> adj_;
};

/// Backtracking isomorphism test with degree and girth pruning.
inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (std::size_t i = 0; i < n; ++i) {
    da.push_back(a.degree(i));
    db.push_back(b.degree(i));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db || a.girth() != b.girth()) return false;

  std::vector<long> map(n, -1);
  std::uint64_t used = 0;
  // Assign a's vertices in BFS-ish order so adjacency checks bite early.
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (std::uint64_t nb = a.neighbours(order[h]); nb; nb &= nb - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(nb));
        if (!seen[v]) {
          seen[v] = true;
          order.push_back(v);
        }
      }
  }
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    std::size_t u = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if ((used >> cand) & 1U || a.degree(u) != b.degree(cand)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t w = order[d];
        ok = a.has_edge(u, w) == b.has_edge(cand, static_cast<std::size_t>(map[w]));
      }
      if (!ok) continue;
      map[u] = static_cast<long>(cand);
      used |= std::uint64_t{1} << cand;
      if (self(self, depth + 1)) return true;
      used &= ~(std::uint64_t{1} << cand);
      map[u] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

enum class ReferenceGraph { Petersen, MoebiusLadder10 };

/// Petersen graph: outer cycle 0-1-2-3-4, spokes i-(i+5), inner pentagram
/// 5-7-9-6-8.
inline SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

/// Moebius ladder on n (even) vertices: cycle 0..n-1 plus diameters i-(i+n/2).
inline SimpleGraph moebius_ladder(std::size_t n = 10) {
  if (n < 4 || n % 2) throw DomainError("moebius_ladder: need an even number of vertices >= 4");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  for (std::size_t i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
  return g;
}

inline SimpleGraph reference_graph(ReferenceGraph r) {
  return r == ReferenceGraph::Petersen ? petersen_graph() : moebius_ladder(10);
}

inline bool is_isomorphic_to(const QuotientGraph& g, ReferenceGraph r) {
  if (g.num_vertices() > 12) throw DomainError("is_isomorphic_to: graphs above 12 vertices are not supported");
  auto edges_unique = [&] {
    std::set<std::pair<std::size_t, std::size_t>> s;
    for (const auto& e : g.edges)
      if (!s.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
    return true;
  };
  if (!edges_unique()) return false;
  return are_isomorphic(SimpleGraph::from_quotient_graph(g), reference_graph(r));
}

/// True iff the edges routed via the given reps cover every vertex exactly once.
inline bool is_perfect_matching(const QuotientGraph& g, const std::vector<std::size_t>& reps) {
  std::vector<int> hit(g.num_vertices(), 0);
  std::set<std::size_t> wanted(reps.begin(), reps.end());
  std::size_t count = 0;
  for (const auto& e : g.edges) {
    if (!wanted.count(e.via_rep)) continue;
    ++hit[e.u];
    ++hit[e.v];
    ++count;
  }
  if (count != wanted.size()) return false;
  return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

struct EdgeOrbitPartition {
  std::vector<std::size_t> petersen_only;
  std::vector<std::size_t> new_orbits;
  std::vector<std::size_t> shared;
  std::vector<std::size_t> old_classes;
  std::vector<std::size_t> new_classes;
  QuotientGraph old_graph;
  QuotientGraph new_graph;
  bool shared_matches_old = false;
  bool shared_matches_new = false;
};

/// Classes made only of the first `old_point_count` points are "old"
/// (icosidodecahedron); all others are "new".
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_old_new_classes(
    const AntipodalQuotient& q, std::size_t old_point_count) {
  std::vector<std::size_t> old_c, new_c;
  for (std::size_t c = 0; c < q.triple_classes.size(); ++c) {
    bool old = true;
    for (const auto& sr : q.oriented_triples[q.triple_classes[c].front()])
      old = old && q.representatives[sr.rep] < old_point_count;
    (old ? old_c : new_c).push_back(c);
  }
  return {old_c, new_c};
}

/// Splits the expanded construction's reps into edge orbits seen only by the
/// old (icosidodecahedron) classes, only by the new ones, or by both.
inline EdgeOrbitPartition classify_edge_orbits_ce1(const AntipodalQuotient& q, std::size_t old_point_count = 30) {
  EdgeOrbitPartition p;
  std::tie(p.old_classes, p.new_classes) = split_old_new_classes(q, old_point_count);
  auto old_reps = q.reps_of_classes(p.old_classes);
  auto new_reps = q.reps_of_classes(p.new_classes);
  std::set_difference(old_reps.begin(), old_reps.end(), new_reps.begin(), new_reps.end(),
                      std::back_inserter(p.petersen_only));
  std::set_difference(new_reps.begin(), new_reps.end(), old_reps.begin(), old_reps.end(),
                      std::back_inserter(p.new_orbits));
  std::set_intersection(old_reps.begin(), old_reps.end(), new_reps.begin(), new_reps.end(),
                        std::back_inserter(p.shared));
  if (p.petersen_only.size() != 10 || p.new_orbits.size() != 10 || p.shared.size() != 5)
    throw StructureError("classify_edge_orbits_ce1: partition sizes (" + std::to_string(p.petersen_only.size()) + ", " +
                         std::to_string(p.new_orbits.size()) + ", " + std::to_string(p.shared.size()) +
                         ") differ from (10, 10, 5)");
  p.old_graph = extract_cubic_graph(q, p.old_classes);
  p.new_graph = extract_cubic_graph(q, p.new_classes);
  p.shared_matches_old = is_perfect_matching(p.old_graph, p.shared);
  p.shared_matches_new = is_perfect_matching(p.new_graph, p.shared);
  return p;
}

}  // namespace s2flow

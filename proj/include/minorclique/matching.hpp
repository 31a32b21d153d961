#pragma once
// Maximum matching, used for the missing-matching parameter x(H) of a
// forbidden minor and for pairing dominating pairs in the dense
// hadwiger construction. Backed by the Boost implementation of
// Edmonds' blossom algorithm in its checked variant, which verifies
// maximality via the Berge criterion before returning.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "minorclique/graph.hpp"

namespace minorclique {

struct Matching {
  std::vector<Edge> edges;  // (u,v) with u < v, sorted
  int size() const { return static_cast<int>(edges.size()); }
};

inline Matching maximum_matching(const Graph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  int n = g.vertex_count();
  if (n == 0) return {};
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  std::vector<BoostGraph::vertex_descriptor> mate(n);
  bool ok = boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0]);
  if (!ok)
    throw std::logic_error("maximum_matching: matching failed verification");
  Matching m;
  auto null_v = boost::graph_traits<BoostGraph>::null_vertex();
  for (int v = 0; v < n; ++v) {
    if (mate[v] == null_v) continue;
    int u = static_cast<int>(mate[v]);
    if (v < u) m.edges.emplace_back(v, u);
  }
  for (auto [u, v] : m.edges)
    if (!g.adjacent(u, v))
      throw std::logic_error("maximum_matching: edge not in graph");
  return m;
}

// x(H): maximum matching size of the complement. The shape-theoretic
// parameter of a forbidden minor; 0 <= x(H) <= |V(H)|/2 always.
inline int missing_matching_size(const Graph& h) {
  return maximum_matching(h.complement()).size();
}

}  // namespace minorclique

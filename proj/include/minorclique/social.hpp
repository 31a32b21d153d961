#pragma once
// Social graphs: graphs in which contracting any edge does not
// increase the clique census. The dense-regime structure results all
// flow through the per-vertex clique fractions alpha_v:
//
//   alpha* = (2 - sqrt(2))/2 - 1/1000, irrational, approx 0.29189.
//   A vertex is bad if alpha_v < alpha*, good otherwise.
//
// The threshold comparison is exact integer arithmetic: with
// alpha_v = p/q, s = 1000p + q and r = 1000q,
//   alpha_v < alpha*  iff  r - s > 0  and  4(r-s)^2 > 2r^2.
// No floating point is consulted anywhere in a decision.
//
// For a social graph: at most 300*Delta^2 bad vertices; every
// independent set I has a member with alpha_v <= 1/(|I|+1); and after
// removing bad vertices and non-neighbors of bad vertices, every
// surviving vertex has missing degree at most 1 (so all but at most
// 600*Delta^3 vertices do). The last claim holds with no size
// threshold, which is why verify_structure treats any violation on a
// certified-social graph as impossible.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minorclique/clique.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/numeric.hpp"

namespace minorclique {

inline constexpr double kAlphaStarApprox = 0.2918932188134524;

// Exact test for p/q < (2 - sqrt(2))/2 - 1/1000, q > 0.
inline bool below_alpha_star(const BigInt& p, const BigInt& q) {
  BigInt s = 1000 * p + q;
  BigInt r = 1000 * q;
  BigInt d = r - s;
  return d > 0 && 4 * d * d > 2 * r * r;
}

inline std::vector<int> bad_vertices(const Graph& g) {
  detail::RawCensus rc = detail::raw_census(g);
  std::vector<int> bad;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (below_alpha_star(u128_to_bigint(rc.per_vertex[v]),
                         u128_to_bigint(rc.total)))
      bad.push_back(v);
  return bad;
}

struct SocialReport {
  bool is_social = false;
  std::optional<Edge> violating_edge;  // first edge whose contraction helps
  std::vector<int> bad_vertices;
  double alpha_star = kAlphaStarApprox;  // display only; tests are exact
  std::vector<int> structure_violations;  // v in V' with missing degree >= 2
};

namespace detail {

inline SocialReport analyze_social(const Graph& g) {
  int n = g.vertex_count();
  if (n > 12) throw std::domain_error("is_social: guard is n <= 12");
  SocialReport rep;
  BigInt base = clique_count(g);
  rep.is_social = true;
  for (auto [u, v] : g.edges()) {  // lexicographic; first violation wins
    if (clique_count(g.contracted(u, v)) > base) {
      rep.is_social = false;
      rep.violating_edge = Edge{u, v};
      break;
    }
  }
  rep.bad_vertices = minorclique::bad_vertices(g);
  // V' = vertices neither bad nor non-adjacent to some bad vertex
  std::uint64_t bad_mask = 0;
  for (int v : rep.bad_vertices) bad_mask |= bit(v);
  std::uint64_t vprime = 0;
  for (int v = 0; v < n; ++v) {
    if (bad_mask >> v & 1) continue;
    if ((bad_mask & ~g.row(v)) != 0) continue;  // misses a bad vertex
    vprime |= bit(v);
  }
  for (std::uint64_t m = vprime; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if (g.missing_degree(v) >= 2) rep.structure_violations.push_back(v);
  }
  if (rep.is_social) {
    long delta = g.max_missing_degree();
    long outside = n - std::popcount(vprime);
    if (static_cast<long>(rep.bad_vertices.size()) > 300 * delta * delta)
      throw std::logic_error("social graph exceeds 300*Delta^2 bad vertices");
    if (outside > 600 * delta * delta * delta)
      throw std::logic_error("social graph exceeds 600*Delta^3 exclusions");
    if (!rep.structure_violations.empty())
      throw std::logic_error(
          "social graph has a V' vertex of missing degree >= 2");
  }
  return rep;
}

}  // namespace detail

inline SocialReport is_social(const Graph& g) {
  return detail::analyze_social(g);
}

inline SocialReport verify_structure(const Graph& g) {
  return detail::analyze_social(g);
}

// Every independent set I must contain a vertex with
// alpha_v <= 1/(|I|+1); checked exactly as (|I|+1) * p_min <= total.
inline bool verify_independent_fraction(const Graph& g) {
  int n = g.vertex_count();
  if (n > 10)
    throw std::domain_error("verify_independent_fraction: guard is n <= 10");
  detail::RawCensus rc = detail::raw_census(g);
  std::uint64_t top = n == 0 ? 1 : std::uint64_t{1} << n;
  for (std::uint64_t set = 1; set < top; ++set) {
    bool independent = true;
    unsigned __int128 min_p = rc.total;
    for (std::uint64_t m = set; m && independent; m &= m - 1) {
      int v = std::countr_zero(m);
      if (g.row(v) & set) independent = false;
      min_p = std::min(min_p, rc.per_vertex[v]);
    }
    if (!independent) continue;
    unsigned k = static_cast<unsigned>(std::popcount(set));
    if (min_p * (k + 1) > rc.total) return false;
  }
  return true;
}

enum class SearchMode { Exhaustive, Greedy };

struct ContractionOptimum {
  Graph graph;
  BigInt count;
  SearchMode mode = SearchMode::Exhaustive;
};

namespace detail {

// Contraction minors of G correspond exactly to partitions of V(G)
// into connected parts; the quotient joins two parts iff some edge
// crosses. Enumerated by restricted-growth strings, so each partition
// appears once.
template <typename Fn>
void for_each_connected_partition(const Graph& g, Fn&& fn) {
  int n = g.vertex_count();
  std::vector<std::uint64_t> blocks;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (std::uint64_t b : blocks)
        if (!mask_connected(g, b)) return;
      fn(blocks);
      return;
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      blocks[k] |= bit(v);
      self(self, v + 1);
      blocks[k] &= ~bit(v);
    }
    blocks.push_back(bit(v));
    self(self, v + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
}

inline Graph quotient(const Graph& g, const std::vector<std::uint64_t>& blocks) {
  int k = static_cast<int>(blocks.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (mask_neighborhood(g, blocks[i]) & blocks[j]) edges.emplace_back(i, j);
  return Graph(k, edges);
}

}  // namespace detail

// The contraction minor with the most cliques. Exhaustive over all
// connected partitions for n <= 8 (deletions never help); greedy
// hill-climbing by best single contraction beyond that, labeled
// Greedy. Ties keep the earlier candidate, so a social graph comes
// back unchanged.
inline ContractionOptimum best_contraction_minor(const Graph& g) {
  ContractionOptimum best{g, clique_count(g), SearchMode::Exhaustive};
  if (g.vertex_count() <= 8) {
    detail::for_each_connected_partition(
        g, [&](const std::vector<std::uint64_t>& blocks) {
          Graph q = detail::quotient(g, blocks);
          BigInt c = clique_count(q);
          if (c > best.count) {
            best.graph = q;
            best.count = c;
          }
        });
    return best;
  }
  best.mode = SearchMode::Greedy;
  for (;;) {
    std::optional<Graph> next;
    BigInt next_count = best.count;
    for (auto [u, v] : best.graph.edges()) {
      Graph cand = best.graph.contracted(u, v);
      BigInt c = clique_count(cand);
      if (c > next_count) {
        next = cand;
        next_count = c;
      }
    }
    if (!next) break;
    best.graph = *next;
    best.count = next_count;
  }
  return best;
}

}  // namespace minorclique

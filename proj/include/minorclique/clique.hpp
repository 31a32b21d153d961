#pragma once
// Clique census. c(G) counts all cliques of G including the empty one,
// so c(G) >= 1 always and c(K_n) = 2^n. Alongside the total we track
// omega and, for every vertex, the exact fraction of cliques containing
// it -- the alpha_v that the social-graph analysis thresholds against.
//
// The census peels vertices in min-degree order (ties to the lowest
// index): each nonempty clique is charged to the first of its vertices
// that gets peeled, and the cliques charged to v are enumerated by a
// branch-and-count walk of v's still-unpeeled neighborhood. Counts stay
// in unsigned 128-bit during the walk (total <= 2^64 at the n <= 64
// guard) and convert to BigInt at the boundary.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minorclique/graph.hpp"
#include "minorclique/numeric.hpp"

namespace minorclique {

struct CliqueCensus {
  BigInt total;                     // includes the empty clique
  int omega = 0;                    // clique number
  std::vector<Rational> fractions;  // alpha_v, reduced
};

namespace detail {

struct RawCensus {
  unsigned __int128 total = 0;
  std::array<unsigned __int128, 64> per_vertex{};
  int omega = 0;
  std::uint64_t omega_witness = 0;
};

class CensusWalk {
 public:
  explicit CensusWalk(const Graph& g) : g_(g) {}

  RawCensus run() {
    int n = g_.vertex_count();
    if (n > 64) throw std::domain_error("clique_census: guard is n <= 64");
    RawCensus rc;
    rc.total = 1;  // the empty clique
    out_ = &rc;
    std::uint64_t remaining = g_.all_vertices();
    while (remaining) {
      int v = peel_pick(remaining);
      remaining &= ~bit(v);
      unsigned __int128 sub = grow(g_.row(v) & remaining, bit(v), 1);
      rc.per_vertex[v] += sub;
      rc.total += sub;
    }
    return rc;
  }

 private:
  // Min-degree vertex of the induced remainder, lowest index on ties.
  int peel_pick(std::uint64_t remaining) const {
    int best = -1, best_deg = 65;
    for (std::uint64_t m = remaining; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int deg = std::popcount(g_.row(v) & remaining);
      if (deg < best_deg) {
        best = v;
        best_deg = deg;
      }
    }
    return best;
  }

  // Counts the cliques extending the current stack by vertices from
  // cands (all adjacent to the whole stack); includes the stack itself.
  // The return value is exactly the number of cliques containing the
  // vertex pushed last, which is how per-vertex counts accumulate.
  unsigned __int128 grow(std::uint64_t cands, std::uint64_t stack, int depth) {
    if (depth > out_->omega) {
      out_->omega = depth;
      out_->omega_witness = stack;
    }
    unsigned __int128 here = 1;
    for (std::uint64_t rest = cands; rest;) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      unsigned __int128 sub = grow(rest & g_.row(w), stack | bit(w), depth + 1);
      out_->per_vertex[w] += sub;
      here += sub;
    }
    return here;
  }

  const Graph& g_;
  RawCensus* out_ = nullptr;
};

inline RawCensus raw_census(const Graph& g) { return CensusWalk(g).run(); }

}  // namespace detail

inline CliqueCensus clique_census(const Graph& g) {
  detail::RawCensus rc = detail::raw_census(g);
  CliqueCensus out;
  out.total = u128_to_bigint(rc.total);
  out.omega = rc.omega;
  out.fractions.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    out.fractions.emplace_back(u128_to_bigint(rc.per_vertex[v]), out.total);
  return out;
}

// Census total only; skips the rational conversions.
inline BigInt clique_count(const Graph& g) {
  return u128_to_bigint(detail::raw_census(g).total);
}

// A maximum clique as a vertex mask (empty mask for the empty graph).
inline std::uint64_t maximum_clique(const Graph& g) {
  return detail::raw_census(g).omega_witness;
}

// Independent oracle: tests every vertex subset. Exponential, n <= 20.
inline BigInt count_cliques_naive(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) throw std::domain_error("count_cliques_naive: guard is n <= 20");
  std::array<std::uint64_t, 20> rows{};
  for (int v = 0; v < n; ++v) rows[v] = g.row(v);
  std::uint64_t count = 0;
  std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < top; ++s) {
    bool clique = true;
    for (std::uint64_t m = s; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((rows[v] & s) != (s ^ bit(v))) {
        clique = false;
        break;
      }
    }
    count += clique;
  }
  return BigInt(count);
}

// ---- peeling trace ----

enum class PeelReason { MinDegreeDelete, Selected, NonNeighborDelete };

struct PeelStep {
  int vertex;
  int size_before;  // vertices present when the step fires
  PeelReason reason;
};

struct PeelingTrace {
  std::vector<PeelStep> steps;
};

// Replays the peeling process against a fixed target clique K. At each
// step of the surviving graph S:
//   - if no K-vertex survives, plain min-degree deletion;
//   - otherwise let v1 be the lowest-index surviving K-vertex of
//     minimum degree among surviving K-vertices. Any outside vertex of
//     strictly smaller degree is deleted first (min-degree rule);
//     if none exists, v1 is selected into the clique and its surviving
//     non-neighbors are deleted in increasing index order.
// Every step removes exactly one vertex, so sizes strictly decrease.
inline PeelingTrace peeling_trace(const Graph& g,
                                  const std::vector<int>& clique) {
  int n = g.vertex_count();
  if (n > 64) throw std::domain_error("peeling_trace: guard is n <= 64");
  std::uint64_t kmask = 0;
  for (int v : clique) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("peeling_trace: vertex out of range");
    kmask |= bit(v);
  }
  if (static_cast<std::size_t>(std::popcount(kmask)) != clique.size())
    throw std::invalid_argument("peeling_trace: repeated clique vertex");
  for (int u : clique)
    for (int v : clique)
      if (u < v && !g.adjacent(u, v))
        throw std::invalid_argument("peeling_trace: target set is not a clique");

  PeelingTrace trace;
  std::uint64_t live = g.all_vertices();
  auto deg = [&](int v) { return std::popcount(g.row(v) & live); };
  auto min_degree_vertex = [&](std::uint64_t set) {
    int best = -1, best_deg = 65;
    for (std::uint64_t m = set; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = deg(v);
      if (d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    return best;
  };
  while (live) {
    int size = std::popcount(live);
    std::uint64_t klive = live & kmask;
    if (klive == 0) {
      int v = min_degree_vertex(live);
      trace.steps.push_back({v, size, PeelReason::MinDegreeDelete});
      live &= ~bit(v);
      continue;
    }
    int v1 = min_degree_vertex(klive);
    int d1 = deg(v1);
    // outside vertex strictly below the clique's min degree goes first
    int outside = -1, outside_deg = d1;
    for (std::uint64_t m = live & ~kmask; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = deg(v);
      if (d < outside_deg) {
        outside = v;
        outside_deg = d;
      }
    }
    if (outside >= 0) {
      trace.steps.push_back({outside, size, PeelReason::MinDegreeDelete});
      live &= ~bit(outside);
      continue;
    }
    trace.steps.push_back({v1, size, PeelReason::Selected});
    live &= ~bit(v1);
    std::uint64_t nonnbrs = live & ~g.row(v1);
    for (std::uint64_t m = nonnbrs; m; m &= m - 1) {
      int v = std::countr_zero(m);
      trace.steps.push_back({v, std::popcount(live), PeelReason::NonNeighborDelete});
      live &= ~bit(v);
    }
  }
  return trace;
}

}  // namespace minorclique

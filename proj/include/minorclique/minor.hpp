#pragma once
// Minor containment by explicit branch-set models. A model of H in G
// assigns each H-vertex a nonempty connected branch set, pairwise
// disjoint, with an edge between branch sets for every edge of H.
//
// find_minor_model is a backtracking search over branch-set
// assignments: H-vertices in decreasing degree order, candidate sets
// enumerated by increasing size. A step budget turns an unfinished
// search into Indeterminate, which is a distinct outcome -- it is
// never reported as absence. Within the default guards (|V(H)| <= 8,
// |V(G)| <= 12) the search runs exhaustively, so Absent there is a
// proof of non-containment.
//
// hadwiger_exact searches upward from omega, testing complete minors
// K_{omega+1}, K_{omega+2}, ... until one is absent. It deliberately
// makes no use of the (n+omega)/2 bound, so it can serve as the
// independent side of tests of that bound.
//
// hadwiger_dense is the constructive dense-regime routine: a maximum
// clique taken as singleton branch sets plus a maximum matching of
// dominating pairs on the rest. Under its precondition it achieves
// floor((n+omega)/2) exactly, so any shortfall is a logic error.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minorclique/clique.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/matching.hpp"

namespace minorclique {

struct MinorModel {
  // branch_sets[i] is the vertex mask assigned to H-vertex i.
  std::vector<std::uint64_t> branch_sets;
};

enum class MinorStatus { Found, Absent, Indeterminate };

struct MinorResult {
  MinorStatus status = MinorStatus::Absent;
  MinorModel model;  // populated iff status == Found
  std::uint64_t steps = 0;
};

struct MinorSearchOptions {
  // 0 = unlimited. Unset picks unlimited within the small-instance
  // guards and 100M steps beyond them.
  std::optional<std::uint64_t> step_budget;
};

inline bool validate_minor_model(const Graph& g, const Graph& h,
                                 const MinorModel& model) {
  int hn = h.vertex_count();
  if (static_cast<int>(model.branch_sets.size()) != hn) return false;
  if (!g.fits_word()) return false;
  std::uint64_t used = 0;
  for (std::uint64_t s : model.branch_sets) {
    if (s == 0 || (s & ~g.all_vertices()) != 0) return false;
    if (s & used) return false;  // overlap
    used |= s;
    if (!detail::mask_connected(g, s)) return false;
  }
  for (auto [u, v] : h.edges())
    if ((detail::mask_neighborhood(g, model.branch_sets[u]) &
         model.branch_sets[v]) == 0)
      return false;
  return true;
}

namespace detail {

class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h, std::uint64_t budget)
      : g_(g), h_(h), budget_(budget) {}

  MinorResult run() {
    MinorResult res;
    int gn = g_.vertex_count(), hn = h_.vertex_count();
    if (hn == 0) {
      res.status = MinorStatus::Found;
      return res;
    }
    if (hn > gn || h_.edge_count() > g_.edge_count()) {
      res.status = MinorStatus::Absent;  // minors never gain vertices or edges
      return res;
    }
    order_.resize(hn);
    for (int i = 0; i < hn; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return h_.degree(a) > h_.degree(b); });
    complete_h_ = h_.edge_count() == static_cast<long>(hn) * (hn - 1) / 2;
    req_.assign(hn, 0);
    for (int i = 0; i < hn; ++i)
      for (int j = 0; j < i; ++j)
        if (h_.adjacent(order_[i], order_[j])) req_[i] |= bit(j);
    branch_.assign(hn, 0);
    nbr_.assign(hn, 0);
    avail_ = g_.all_vertices();
    bool found = place(0);
    res.steps = steps_;
    if (found) {
      res.status = MinorStatus::Found;
      res.model.branch_sets.resize(hn);
      for (int i = 0; i < hn; ++i)
        res.model.branch_sets[order_[i]] = branch_[i];
    } else {
      res.status = out_of_budget_ ? MinorStatus::Indeterminate
                                  : MinorStatus::Absent;
    }
    return res;
  }

 private:
  bool place(int i) {
    int hn = h_.vertex_count();
    if (i == hn) return true;
    ++steps_;
    if (budget_ && steps_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    int slack = std::popcount(avail_) - (hn - i);
    if (slack < 0) return false;
    // every already-placed H-neighbor must still be reachable
    std::uint64_t touch_all = avail_;
    for (std::uint64_t m = req_[i]; m; m &= m - 1) {
      std::uint64_t reach = avail_ & nbr_[std::countr_zero(m)];
      if (reach == 0) return false;
      touch_all &= reach;
    }
    // For complete H all branch sets are interchangeable; forcing
    // their minimum vertices to increase kills the k! symmetry.
    std::uint64_t floor_mask = ~std::uint64_t{0};
    if (complete_h_ && i > 0) {
      int prev_min = std::countr_zero(branch_[i - 1]);
      floor_mask = (prev_min >= 63) ? 0 : ~(bit(prev_min + 1) - 1);
    }
    // singletons first: must touch every placed neighbor by themselves
    for (std::uint64_t m = touch_all & floor_mask; m; m &= m - 1) {
      if (try_set(i, bit(std::countr_zero(m)))) return true;
      if (out_of_budget_) return false;
    }
    // larger sets, by size then lexicographically
    std::vector<int> verts;
    for (std::uint64_t m = avail_ & floor_mask; m; m &= m - 1)
      verts.push_back(std::countr_zero(m));
    int vn = static_cast<int>(verts.size());
    for (int size = 2; size <= slack + 1 && size <= vn; ++size) {
      std::vector<int> pick(size);
      if (combos(i, verts, pick, 0, 0, size)) return true;
      if (out_of_budget_) return false;
    }
    return false;
  }

  bool combos(int i, const std::vector<int>& verts, std::vector<int>& pick,
              int depth, int start, int size) {
    if (depth == size) {
      std::uint64_t mask = 0;
      for (int v : pick) mask |= bit(v);
      if (!mask_connected(g_, mask)) return false;
      for (std::uint64_t m = req_[i]; m; m &= m - 1)
        if ((mask & nbr_[std::countr_zero(m)]) == 0) return false;
      return try_set(i, mask);
    }
    for (int k = start; k <= static_cast<int>(verts.size()) - (size - depth);
         ++k) {
      pick[depth] = verts[k];
      if (combos(i, verts, pick, depth + 1, k + 1, size)) return true;
      if (out_of_budget_) return false;
    }
    return false;
  }

  bool try_set(int i, std::uint64_t mask) {
    ++steps_;
    if (budget_ && steps_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    branch_[i] = mask;
    nbr_[i] = mask_neighborhood(g_, mask);
    avail_ &= ~mask;
    bool found = place(i + 1);
    avail_ |= mask;
    return found;
  }

  const Graph& g_;
  const Graph& h_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  bool out_of_budget_ = false;
  bool complete_h_ = false;
  std::vector<int> order_;            // H vertices, decreasing degree
  std::vector<std::uint64_t> req_;    // earlier positions adjacent in H
  std::vector<std::uint64_t> branch_; // by position
  std::vector<std::uint64_t> nbr_;    // neighbor union of each placed set
  std::uint64_t avail_ = 0;
};

}  // namespace detail

inline MinorResult find_minor_model(const Graph& g, const Graph& h,
                                    const MinorSearchOptions& opts = {}) {
  if (!g.fits_word())
    throw std::domain_error("find_minor_model: host exceeds 64 vertices");
  std::uint64_t budget;
  if (opts.step_budget) {
    budget = *opts.step_budget;
  } else {
    bool small = h.vertex_count() <= 8 && g.vertex_count() <= 12;
    budget = small ? 0 : 100'000'000;
  }
  MinorResult res = detail::MinorSearch(g, h, budget).run();
  if (res.status == MinorStatus::Found &&
      !validate_minor_model(g, h, res.model))
    throw std::logic_error("find_minor_model: produced an invalid model");
  return res;
}

inline Graph complete_graph(int n) {
  Graph empty(n);
  return empty.complement();
}

struct HadwigerResult {
  int number = 0;
  MinorModel model;  // a model of K_number
};

// Largest k with a K_k minor, by upward search from omega. The maximum
// clique provides the K_omega witness; each k beyond it is settled by
// an exhaustive minor search. Guard n <= 12.
inline HadwigerResult hadwiger_exact(const Graph& g) {
  int n = g.vertex_count();
  if (n > 12) throw std::domain_error("hadwiger_exact: guard is n <= 12");
  HadwigerResult res;
  if (n == 0) return res;
  std::uint64_t base = maximum_clique(g);
  res.number = std::popcount(base);
  for (std::uint64_t m = base; m; m &= m - 1)
    res.model.branch_sets.push_back(bit(std::countr_zero(m)));
  for (int k = res.number + 1; k <= n; ++k) {
    MinorResult r =
        find_minor_model(g, complete_graph(k), {.step_budget = std::uint64_t{0}});
    if (r.status != MinorStatus::Found) break;
    res.number = k;
    res.model = r.model;
  }
  return res;
}

// Adjacency in the dominating-pair graph: u~v iff uv is an edge of G
// and N[u] u N[v] covers every vertex. Guard n <= 64.
inline Graph dominating_pair_graph(const Graph& g) {
  if (!g.fits_word())
    throw std::domain_error("dominating_pair_graph: graph exceeds 64 vertices");
  std::uint64_t all = g.all_vertices();
  std::vector<Edge> pairs;
  for (auto [u, v] : g.edges())
    if ((g.row(u) | g.row(v) | bit(u) | bit(v)) == all) pairs.emplace_back(u, v);
  return Graph(g.vertex_count(), pairs);
}

// Dense-regime constructive hadwiger witness. Precondition:
// n >= omega + 2*Delta^2 + 2 with Delta the maximum missing degree.
// Takes a maximum clique as singleton branch sets and pairs up all the
// remaining vertices along dominating pairs; under the precondition
// the pairing is perfect and the resulting complete minor has exactly
// floor((n+omega)/2) branch sets, which is optimal.
inline HadwigerResult hadwiger_dense(const Graph& g) {
  int n = g.vertex_count();
  if (!g.fits_word())
    throw std::domain_error("hadwiger_dense: graph exceeds 64 vertices");
  detail::RawCensus rc = detail::raw_census(g);
  int omega = rc.omega;
  int delta = g.max_missing_degree();
  if (n < omega + 2 * delta * delta + 2)
    throw std::invalid_argument(
        "hadwiger_dense: precondition n >= omega + 2*Delta^2 + 2 fails");
  std::uint64_t clique = rc.omega_witness;
  std::uint64_t rest = g.all_vertices() & ~clique;
  std::vector<int> rest_verts;
  for (std::uint64_t m = rest; m; m &= m - 1)
    rest_verts.push_back(std::countr_zero(m));
  Graph aux = dominating_pair_graph(g).induced(rest_verts);
  Matching matching = maximum_matching(aux);
  int rest_n = static_cast<int>(rest_verts.size());
  if (matching.size() < rest_n / 2)
    throw std::logic_error(
        "hadwiger_dense: dominating pairs admit no near-perfect matching");
  HadwigerResult res;
  for (std::uint64_t m = clique; m; m &= m - 1)
    res.model.branch_sets.push_back(bit(std::countr_zero(m)));
  for (auto [i, j] : matching.edges)
    res.model.branch_sets.push_back(bit(rest_verts[i]) | bit(rest_verts[j]));
  res.number = static_cast<int>(res.model.branch_sets.size());
  if (res.number != (n + omega) / 2)
    throw std::logic_error("hadwiger_dense: size disagrees with (n+omega)/2");
  if (!validate_minor_model(g, complete_graph(res.number), res.model))
    throw std::logic_error("hadwiger_dense: constructed model is invalid");
  return res;
}

}  // namespace minorclique

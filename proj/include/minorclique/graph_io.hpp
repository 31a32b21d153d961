#pragma once
// Serialization and enumeration.
//
// Edge-list format (bit-exact, the interchange default):
//   line 1: "n m"          -- vertex and edge counts
//   then m lines "u v"     -- one edge each, 0 <= u < v < n
// Single spaces, LF line endings, edges sorted lexicographically.
//
// graph6 is McKay's format: 6-bit groups offset by 63, columns in
// colexicographic pair order. Parsing is strict: bad characters,
// truncation and nonzero padding are all errors.
//
// Labeled enumeration walks all 2^(n(n-1)/2) graphs by edge mask.
// Pair i of the mask is the i-th pair in colex order
// (0,1),(0,2),(1,2),(0,3),... -- the same order graph6 uses.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorclique/graph.hpp"

namespace minorclique {

enum class GraphFormat { EdgeList, Graph6 };

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Colex index of the pair (u,v), u < v.
inline int pair_index(int u, int v) { return v * (v - 1) / 2 + u; }

inline Graph from_edge_mask(int n, std::uint64_t mask) {
  if (n < 0) throw std::invalid_argument("from_edge_mask: negative n");
  if (pair_count(n) > 63)
    throw std::domain_error("from_edge_mask: guard is n <= 11");
  std::vector<Edge> edges;
  int i = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++i)
      if (mask >> i & 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::uint64_t edge_mask(const Graph& g) {
  int n = g.vertex_count();
  if (pair_count(n) > 63)
    throw std::invalid_argument("edge_mask: graph too large");
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << pair_index(u, v);
  return mask;
}

// Calls fn(Graph) for every labeled graph on n vertices.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  if (n < 0 || n > 7)
    throw std::domain_error("for_each_labeled_graph: guard is n <= 7");
  std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    fn(from_edge_mask(n, mask));
}

// Smallest edge mask over all vertex relabelings; isomorphic graphs and
// only those share it. Exhaustive over n! permutations, so n <= 8.
inline std::uint64_t canonical_edge_mask(const Graph& g) {
  int n = g.vertex_count();
  if (n > 8) throw std::domain_error("canonical_edge_mask: guard is n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto edges = g.edges();
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (auto [u, v] : edges) {
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      mask |= std::uint64_t{1} << pair_index(a, b);
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

// ---- edge-list format ----

inline std::string serialize_edge_list(const Graph& g) {
  auto edges = g.edges();
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace detail {

// One "u v" style line: exactly two base-10 numbers, one space.
inline std::pair<long, long> parse_int_pair(const std::string& line,
                                            int lineno) {
  auto fail = [&](const std::string& what) -> std::pair<long, long> {
    throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                ": " + what);
  };
  std::size_t i = 0;
  auto number = [&]() -> long {
    std::size_t start = i;
    while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
    if (i == start) fail("expected a number at offset " + std::to_string(i));
    if (i - start > 9) fail("number too large");
    return std::stol(line.substr(start, i - start));
  };
  long a = number();
  if (i >= line.size() || line[i] != ' ')
    fail("expected single space at offset " + std::to_string(i));
  ++i;
  long b = number();
  if (i != line.size())
    fail("trailing characters at offset " + std::to_string(i));
  return {a, b};
}

}  // namespace detail

inline Graph parse_edge_list(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(pos));
      pos = text.size();
    } else {
      lines.push_back(text.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw std::invalid_argument("edge list: empty input");
  auto [n, m] = detail::parse_int_pair(lines[0], 1);
  if (static_cast<long>(lines.size()) != m + 1)
    throw std::invalid_argument(
        "edge list: header declares " + std::to_string(m) + " edges but " +
        std::to_string(lines.size() - 1) + " lines follow");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    auto [u, v] = detail::parse_int_pair(lines[i + 1], static_cast<int>(i + 2));
    if (u >= v)
      throw std::invalid_argument("edge list line " + std::to_string(i + 2) +
                                  ": edges must have u < v");
    if (v >= n)
      throw std::invalid_argument("edge list line " + std::to_string(i + 2) +
                                  ": endpoint " + std::to_string(v) +
                                  " out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::invalid_argument("edge list: duplicate edge (" +
                                  std::to_string(sorted[i].first) + "," +
                                  std::to_string(sorted[i].second) + ")");
  return Graph(static_cast<int>(n), edges);
}

// ---- graph6 ----

inline std::string serialize_graph6(const Graph& g) {
  long n = g.vertex_count();
  if (n > 258047) throw std::invalid_argument("graph6: graph too large");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    out += static_cast<char>(63 + (n >> 12 & 63));
    out += static_cast<char>(63 + (n >> 6 & 63));
    out += static_cast<char>(63 + (n & 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

inline Graph parse_graph6(const std::string& text) {
  auto fail = [](const std::string& what) -> int {
    throw std::invalid_argument("graph6: " + what);
  };
  std::size_t i = 0;
  auto sextet = [&]() -> int {
    if (i >= text.size()) fail("truncated at offset " + std::to_string(i));
    char c = text[i++];
    if (c < 63 || c > 126)
      fail("invalid character at offset " + std::to_string(i - 1));
    return c - 63;
  };
  long n;
  if (i < text.size() && text[i] == '~') {
    ++i;
    n = sextet();
    n = n << 6 | sextet();
    n = n << 6 | sextet();
  } else {
    n = sextet();
  }
  std::vector<Edge> edges;
  int acc = 0, have = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (have == 0) {
        acc = sextet();
        have = 6;
      }
      if (acc >> (have - 1) & 1) edges.emplace_back(u, v);
      --have;
    }
  if (have > 0 && (acc & ((1 << have) - 1)) != 0) fail("nonzero padding bits");
  if (i != text.size())
    fail("trailing characters at offset " + std::to_string(i));
  return Graph(static_cast<int>(n), edges);
}

inline std::string serialize_graph(const Graph& g, GraphFormat fmt) {
  return fmt == GraphFormat::EdgeList ? serialize_edge_list(g)
                                      : serialize_graph6(g);
}

inline Graph parse_graph(const std::string& text, GraphFormat fmt) {
  if (fmt == GraphFormat::EdgeList) return parse_edge_list(text);
  std::string t = text;
  while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
  return parse_graph6(t);
}

}  // namespace minorclique

#pragma once
// Finite simple undirected graphs as packed bit-adjacency rows.
// Vertices are 0-based ints. A graph is immutable once constructed;
// every operation returns a new graph.
//
// Graphs with at most 64 vertices store one word per row, and that
// single-word layout is what all search kernels (clique census, minor
// search, hadwiger) assume -- they refuse anything larger. Multi-word
// rows exist only so the structural operations (union, complement,
// induced subgraph) can realize the big disjoint-union constructions,
// which run to a few thousand vertices.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorclique {

using Edge = std::pair<int, int>;

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n), words_(std::max(1, (n + 63) / 64)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  // Graph with exactly the given edges; duplicate edges collapse.
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("Graph: edge endpoint out of range: (" +
                                    std::to_string(u) + "," +
                                    std::to_string(v) + ")");
      if (u == v)
        throw std::invalid_argument("Graph: self-loop at vertex " +
                                    std::to_string(u));
      link(u, v);
    }
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return n_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[idx(u, v / 64)] >> (v % 64) & 1;
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(rows_[idx(v, w)]);
    return d;
  }

  int missing_degree(int v) const { return n_ - 1 - degree(v); }

  // Largest missing degree, the Delta of the dense regime. 0 if n <= 1.
  int max_missing_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, missing_degree(v));
    return m;
  }

  long edge_count() const {
    long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (u != v && adjacent(v, u)) out.push_back(u);
    return out;
  }

  // Edges as (u,v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  bool fits_word() const { return n_ <= 64; }

  // Neighbor mask of v. Single-word graphs only.
  std::uint64_t row(int v) const {
    check_word("row");
    check_vertex(v);
    return rows_[static_cast<std::size_t>(v) * words_];
  }

  // Mask of all vertices. Single-word graphs only.
  std::uint64_t all_vertices() const {
    check_word("all_vertices");
    return n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
  }

  Graph complement() const {
    Graph out(n_);
    for (int v = 0; v < n_; ++v)
      for (int w = 0; w < words_; ++w)
        out.rows_[idx(v, w)] = ~rows_[idx(v, w)] & word_mask(w);
    for (int v = 0; v < n_; ++v)
      out.rows_[idx(v, v / 64)] &= ~(std::uint64_t{1} << (v % 64));
    return out;
  }

  // Contracts the edge (u,v). The merged vertex keeps index min(u,v);
  // max(u,v) is removed and every index above it shifts down by one.
  Graph contracted(int u, int v) const {
    if (!adjacent(u, v))
      throw std::invalid_argument("contracted: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") is not an edge");
    int keep = std::min(u, v), drop = std::max(u, v);
    Graph out(n_ - 1);
    for (auto [x, y] : edges()) {
      int a = (x == drop) ? keep : x;
      int b = (y == drop) ? keep : y;
      if (a == b) continue;  // the contracted edge itself
      out.link(a > drop ? a - 1 : a, b > drop ? b - 1 : b);
    }
    return out;
  }

  // Subgraph induced by the listed vertices, which must be distinct.
  // Vertex i of the result is keep[i].
  Graph induced(std::span<const int> keep) const {
    std::vector<char> seen(n_, 0);
    for (int v : keep) {
      check_vertex(v);
      if (seen[v])
        throw std::invalid_argument("induced: duplicate vertex " +
                                    std::to_string(v));
      seen[v] = 1;
    }
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j]))
          out.link(static_cast<int>(i), static_cast<int>(j));
    return out;
  }

  // Mask form of induced(); kept vertices in increasing order.
  Graph induced_mask(std::uint64_t keep) const {
    check_word("induced_mask");
    std::vector<int> verts;
    for (std::uint64_t m = keep & all_vertices(); m; m &= m - 1)
      verts.push_back(std::countr_zero(m));
    return induced(verts);
  }

  static Graph disjoint_union(std::span<const Graph> parts) {
    long total = 0;
    for (const Graph& p : parts) total += p.vertex_count();
    Graph out(static_cast<int>(total));
    int offset = 0;
    for (const Graph& p : parts) {
      for (auto [u, v] : p.edges()) out.link(u + offset, v + offset);
      offset += p.vertex_count();
    }
    return out;
  }

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t idx(int v, int w) const {
    return static_cast<std::size_t>(v) * words_ + w;
  }

  std::uint64_t word_mask(int w) const {
    int lo = w * 64;
    int cnt = std::min(64, n_ - lo);
    if (cnt <= 0) return 0;
    return cnt == 64 ? ~std::uint64_t{0} : bit(cnt) - 1;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }

  void check_word(const char* op) const {
    if (n_ > 64)
      throw std::domain_error(std::string(op) +
                              ": graph exceeds 64 vertices (n=" +
                              std::to_string(n_) + ")");
  }

  void link(int u, int v) {
    rows_[idx(u, v / 64)] |= std::uint64_t{1} << (v % 64);
    rows_[idx(v, u / 64)] |= std::uint64_t{1} << (u % 64);
  }

  int n_ = 0;
  int words_ = 1;
  std::vector<std::uint64_t> rows_;
};

// Shape parameters of a complement-of-matching graph K(a,b):
// 2a+b vertices, a non-edges forming a perfect matching on the first
// 2a vertices, everything else adjacent.
struct ShapeParams {
  long a = 0;
  long b = 0;
  long size() const { return 2 * a + b; }
  bool operator==(const ShapeParams&) const = default;
};

// K(a,b): vertices 2i and 2i+1 are the i-th non-adjacent pair for
// i < a; the last b vertices are adjacent to everything else.
inline Graph complement_of_matching(const ShapeParams& shape) {
  if (shape.a < 0 || shape.b < 0)
    throw std::invalid_argument("complement_of_matching: negative parameter");
  int n = static_cast<int>(shape.size());
  std::vector<Edge> matching;
  for (long i = 0; i < shape.a; ++i)
    matching.emplace_back(static_cast<int>(2 * i), static_cast<int>(2 * i + 1));
  return Graph(n, matching).complement();
}

inline bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

namespace detail {

// Connectivity of a vertex subset in a single-word graph.
inline bool mask_connected(const Graph& g, std::uint64_t set) {
  if (set == 0) return false;
  std::uint64_t comp = set & (~set + 1);  // lowest bit
  for (;;) {
    std::uint64_t grow = comp;
    for (std::uint64_t m = comp; m; m &= m - 1)
      grow |= g.row(std::countr_zero(m)) & set;
    if (grow == comp) break;
    comp = grow;
  }
  return comp == set;
}

// Union of neighbor masks over a vertex subset.
inline std::uint64_t mask_neighborhood(const Graph& g, std::uint64_t set) {
  std::uint64_t out = 0;
  for (std::uint64_t m = set; m; m &= m - 1)
    out |= g.row(std::countr_zero(m));
  return out;
}

}  // namespace detail

}  // namespace minorclique

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdobs {

// Bitset over vertex indices; bit v set means vertex v is in the set.
using VertexSet = std::uint32_t;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }
inline VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

// Expands a VertexSet into ascending vertex indices.
std::vector<int> set_to_vertices(VertexSet s);

class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Undirected simple graph on at most 18 vertices, one adjacency bitset row
// per vertex. Rows at indices >= vertex_count() stay zero, so default value
// equality is structural equality of labelled graphs.
class Graph {
 public:
  static constexpr int kMaxVertices = 18;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::out_of_range("vertex count out of range");
  }

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return n_ == 0 ? 0u : (vertex_bit(n_) - 1u); }
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
  }
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return set_contains(adj_[u], v);
  }
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
  }
  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};

  friend Graph from_graph6(std::string_view line);
  friend Graph delete_vertex(const Graph& g, int v);
  friend Graph delete_edge(const Graph& g, int u, int v);
  friend Graph contract_edge(const Graph& g, int u, int v);
  friend Graph extend(const Graph& g, VertexSet a);
  friend Graph induced_subgraph(const Graph& g, VertexSet keep);
};

// graph6 codec for n <= 18. One graph per ASCII line: byte 63+n, then the
// upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2),
// x(0,3), ... packed big-endian into 6-bit groups, each group offset by 63,
// with zero padding in the last group.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Returns G - v with the remaining vertices relabelled contiguously,
// preserving their relative order.
Graph delete_vertex(const Graph& g, int v);

Graph delete_edge(const Graph& g, int u, int v);

// Simple-graph contraction of the edge uv: the merged vertex takes
// min(u,v)'s index, parallel edges collapse, loops are discarded.
Graph contract_edge(const Graph& g, int u, int v);

// Appends a new vertex at index g.vertex_count() adjacent exactly to a.
Graph extend(const Graph& g, VertexSet a);

// Connected components as vertex sets, ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g);

// Components of the subgraph induced by `within`, in original labels.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

// Induced subgraph on `keep`, relabelled contiguously (order-preserving).
Graph induced_subgraph(const Graph& g, VertexSet keep);

// (vertex, degree) with minimum degree, ties broken by lowest index.
std::pair<int, int> min_degree(const Graph& g);

bool is_connected(const Graph& g);

// Edge list as (u, v) pairs with u < v, lexicographically ordered.
std::vector<std::pair<int, int>> edges(const Graph& g);

}  // namespace tdobs

#include "tdobs/graph.hpp"

#include <algorithm>

namespace tdobs {

std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Graph from_graph6(std::string_view line) {
  if (line.empty()) throw Graph6ParseError("empty graph6 line", 0);
  const unsigned char head = static_cast<unsigned char>(line[0]);
  if (head == 126)
    throw Graph6ParseError("graph order 63 or larger exceeds capacity 18", 0);
  if (head < 63 || head > 125)
    throw Graph6ParseError("invalid graph6 order byte", 0);
  const int n = head - 63;
  if (n > Graph::kMaxVertices)
    throw Graph6ParseError(
        "graph order " + std::to_string(n) + " exceeds capacity 18", 0);

  const int bits = n * (n - 1) / 2;
  const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != 1 + groups)
    throw Graph6ParseError("malformed line length: expected " +
                               std::to_string(1 + groups) + " bytes, got " +
                               std::to_string(line.size()),
                           std::min(line.size(), 1 + groups));

  Graph g(n);
  int bit_index = 0;
  for (std::size_t t = 0; t < groups; ++t) {
    const unsigned char c = static_cast<unsigned char>(line[1 + t]);
    if (c < 63 || c > 126)
      throw Graph6ParseError("adjacency byte out of range", 1 + t);
    const unsigned group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      const bool bit = (group >> b) & 1u;
      if (bit_index >= bits) {
        if (bit) throw Graph6ParseError("nonzero padding bits", 1 + t);
        continue;
      }
      if (bit) {
        // column order: bit_index runs over (i, j) with j = 1..n-1, i < j
        int j = 1, acc = 0;
        while (acc + j <= bit_index) acc += j, ++j;
        const int i = bit_index - acc;
        g.adj_[i] |= vertex_bit(j);
        g.adj_[j] |= vertex_bit(i);
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  unsigned group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::out_of_range("vertex index out of range");
  Graph out(g.vertex_count() - 1);
  const VertexSet low_mask = vertex_bit(v) - 1u;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    const VertexSet row = g.adj_[u] & ~vertex_bit(v);
    out.adj_[u - (u > v)] = (row & low_mask) | ((row >> (v + 1)) << v);
  }
  return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("cannot delete a non-edge");
  Graph out = g;
  out.adj_[u] &= ~vertex_bit(v);
  out.adj_[v] &= ~vertex_bit(u);
  return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("cannot contract a non-edge");
  const int keep = std::min(u, v);
  const int drop = std::max(u, v);
  Graph tmp = g;
  const VertexSet merged =
      (g.adj_[u] | g.adj_[v]) & ~(vertex_bit(u) | vertex_bit(v));
  tmp.adj_[keep] = merged;
  for (int y = 0; y < g.vertex_count(); ++y) {
    if (y == keep) continue;
    if (set_contains(merged, y))
      tmp.adj_[y] |= vertex_bit(keep);
    else
      tmp.adj_[y] &= ~vertex_bit(keep);
  }
  return delete_vertex(tmp, drop);
}

Graph extend(const Graph& g, VertexSet a) {
  if (g.vertex_count() >= Graph::kMaxVertices)
    throw std::length_error("graph capacity exceeded");
  if (a & ~g.vertices())
    throw std::out_of_range("extension set contains invalid vertices");
  Graph out = g;
  const int v = g.vertex_count();
  out.n_ = v + 1;
  out.adj_[v] = a;
  VertexSet rest = a;
  while (rest) {
    out.adj_[std::countr_zero(rest)] |= vertex_bit(v);
    rest &= rest - 1;
  }
  return out;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  if (within & ~g.vertices())
    throw std::out_of_range("vertex set not contained in graph");
  std::vector<VertexSet> out;
  VertexSet remaining = within;
  while (remaining) {
    VertexSet comp = vertex_bit(std::countr_zero(remaining));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      VertexSet f = frontier;
      while (f) {
        next |= g.neighbors(std::countr_zero(f));
        f &= f - 1;
      }
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (keep & ~g.vertices())
    throw std::out_of_range("vertex set not contained in graph");
  Graph out(set_size(keep));
  const std::vector<int> verts = set_to_vertices(keep);
  for (std::size_t p = 0; p < verts.size(); ++p) {
    VertexSet row = g.adj_[verts[p]] & keep;
    while (row) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      const auto it = std::lower_bound(verts.begin(), verts.end(), w);
      out.adj_[p] |= vertex_bit(static_cast<int>(it - verts.begin()));
    }
  }
  return out;
}

std::pair<int, int> min_degree(const Graph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("min_degree of the empty graph");
  int best_v = 0;
  int best_d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d < best_d) {
      best_d = d;
      best_v = v;
    }
  }
  return {best_v, best_d};
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return components(g).size() == 1;
}

std::vector<std::pair<int, int>> edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edge_count());
  for (int u = 0; u < g.vertex_count(); ++u) {
    VertexSet row = g.neighbors(u) >> (u + 1);
    while (row) {
      out.emplace_back(u, u + 1 + std::countr_zero(row));
      row &= row - 1;
    }
  }
  return out;
}

}  // namespace tdobs

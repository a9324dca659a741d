#pragma once

#include <algorithm>
#include <vector>

#include "tdobs/canon.hpp"
#include "tdobs/graph.hpp"
#include "tdobs/treedepth.hpp"

namespace tdobs {

// All i-vertex graphs of treedepth <= k, one sorted canonical form per
// isomorphism class.
struct LevelSet {
  int k = 0;
  int i = 0;
  std::vector<CanonicalForm> members;

  bool contains(const CanonicalForm& form) const {
    return std::binary_search(members.begin(), members.end(), form);
  }
};

// LevelSet(k, 1) = {K_1}.
LevelSet initial_level(int k);

// Single-vertex extensions of g in which the new vertex has minimum degree.
// Subsets A are visited by increasing size, then in lexicographic order of
// their sorted index sequences; sizes above min_degree(g)+1 are skipped
// outright and the degree condition is checked on each survivor.
template <typename Fn>
void for_each_candidate_extension(const Graph& g, Fn fn) {
  const int n = g.vertex_count();
  if (n >= Graph::kMaxVertices)
    throw std::length_error("graph capacity exceeded");
  if (n == 0) {
    fn(extend(g, 0));
    return;
  }
  const int cap = std::min(min_degree(g).second + 1, n);
  for (int size = 0; size <= cap; ++size) {
    VertexSet a = size == 0 ? 0u : vertex_bit(size) - 1u;
    const VertexSet end = vertex_bit(n);
    for (;;) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        ok = g.degree(u) + (set_contains(a, u) ? 1 : 0) >= size;
      if (ok) fn(extend(g, a));
      if (size == 0) break;
      // Gosper's hack: next subset of the same size
      const VertexSet c = a & (0u - a);
      const VertexSet r = a + c;
      a = (((r ^ a) >> 2) / c) | r;
      if (a >= end) break;
    }
  }
}

std::vector<Graph> candidate_extensions(const Graph& g);

struct EnumOptions {
  int workers = 1;
  CanonOptions canon;
};

// LevelSet(k, i+1) from LevelSet(k, i): canonical forms of exactly those
// candidate extensions with treedepth <= k, deduplicated and sorted.
LevelSet next_level(const LevelSet& prev, const TreedepthSolver& solver,
                    const EnumOptions& opts = {});

}  // namespace tdobs

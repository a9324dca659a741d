#include "tdobs/oracle.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "tdobs/parallel.hpp"

namespace tdobs {
namespace oracle {

int treedepth(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  const std::vector<VertexSet> comps = components(g);
  if (comps.size() > 1) {
    int value = 0;
    for (const VertexSet comp : comps)
      value = std::max(value, treedepth(induced_subgraph(g, comp)));
    return value;
  }
  if (n == 1) return 1;
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < n; ++v)
    best = std::min(best, treedepth(delete_vertex(g, v)));
  return 1 + best;
}

std::vector<CanonicalForm> all_classes(int n, const CanonOptions& canon,
                                       int workers) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("class enumeration is limited to 1..7 vertices");
  const int bits = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << bits;

  // fixed edge order for mask bits: (0,1), (0,2), ..., (n-2, n-1)
  std::vector<std::pair<int, int>> edge_order;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edge_order.emplace_back(u, v);

  std::unordered_set<CanonicalForm> classes;
  std::mutex mutex;
  const std::uint64_t chunk = 4096;
  const std::uint64_t num_chunks = (total + chunk - 1) / chunk;
  parallel_for_index(num_chunks, workers, [&](std::size_t chunk_idx) {
    std::unordered_set<CanonicalForm> local;
    const std::uint64_t begin = chunk_idx * chunk;
    const std::uint64_t end = std::min(begin + chunk, total);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      Graph g(n);
      for (int b = 0; b < bits; ++b)
        if ((mask >> b) & 1u)
          g.add_edge(edge_order[b].first, edge_order[b].second);
      local.insert(canonical_form(g, canon));
    }
    std::lock_guard lock(mutex);
    classes.merge(local);
  });

  std::vector<CanonicalForm> out(classes.begin(), classes.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalForm> level_from_definition(
    int k, const std::vector<CanonicalForm>& classes) {
  std::vector<CanonicalForm> out;
  for (const CanonicalForm& form : classes)
    if (treedepth(from_graph6(form.line)) <= k) out.push_back(form);
  return out;
}

ObstructionsFromDefinition obstructions_from_definition(
    int k, const std::vector<CanonicalForm>& classes) {
  ObstructionsFromDefinition out;
  for (const CanonicalForm& form : classes) {
    const Graph g = from_graph6(form.line);
    if (treedepth(g) != k + 1) continue;
    const int n = g.vertex_count();

    bool induced_minimal = true;
    for (VertexSet s = 1; s < g.vertices() && induced_minimal; ++s)
      induced_minimal = treedepth(induced_subgraph(g, s)) <= k;
    if (!induced_minimal) continue;
    out.induced.push_back(form);

    bool subgraph_minimal = true;
    for (const auto& [u, v] : edges(g)) {
      if (treedepth(delete_edge(g, u, v)) > k) {
        subgraph_minimal = false;
        break;
      }
    }
    for (int v = 0; v < n && subgraph_minimal; ++v)
      subgraph_minimal = treedepth(delete_vertex(g, v)) <= k;
    if (!subgraph_minimal) continue;
    out.subgraph.push_back(form);

    bool minor_minimal = true;
    for (const auto& [u, v] : edges(g)) {
      if (treedepth(contract_edge(g, u, v)) > k) {
        minor_minimal = false;
        break;
      }
    }
    if (minor_minimal) out.minor.push_back(form);
  }
  return out;
}

}  // namespace oracle
}  // namespace tdobs

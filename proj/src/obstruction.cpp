#include "tdobs/obstruction.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "tdobs/parallel.hpp"

namespace tdobs {

std::vector<CanonicalForm> induced_obstructions(const LevelSet& prev_level,
                                                const TreedepthSolver& solver,
                                                const ObstructionOptions& opts) {
  if (prev_level.i >= Graph::kMaxVertices)
    throw std::length_error("graph capacity exceeded");
  const int k = prev_level.k;
  const int n = prev_level.i + 1;

  std::unordered_set<CanonicalForm> vetted;
  std::unordered_set<CanonicalForm> accepted;
  std::mutex mutex;

  parallel_for_index(prev_level.members.size(), opts.workers,
                     [&](std::size_t idx) {
    const Graph parent = from_graph6(prev_level.members[idx].line);
    for_each_candidate_extension(parent, [&](const Graph& cand) {
      // an obstruction is connected: a vertex outside a component of
      // maximum treedepth could be deleted without lowering it
      if (!is_connected(cand)) return;
      if (solver.td_at_most(cand, k)) return;
      CanonicalForm form = canonical_form(cand, opts.canon);
      {
        std::lock_guard lock(mutex);
        if (!vetted.insert(form).second) return;
      }
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        const Graph rest = delete_vertex(cand, v);
        if (opts.mode == MembershipMode::kLookup)
          ok = prev_level.contains(canonical_form(rest, opts.canon));
        else
          ok = solver.td_at_most(rest, k);
      }
      if (!ok) return;
      std::lock_guard lock(mutex);
      accepted.insert(std::move(form));
    });
  });

  std::vector<CanonicalForm> out(accepted.begin(), accepted.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalForm> subgraph_filter(
    const std::vector<CanonicalForm>& induced, const CanonOptions& canon) {
  std::vector<CanonicalForm> out;
  for (const CanonicalForm& form : induced) {
    const Graph g = from_graph6(form.line);
    bool minimal = true;
    for (const auto& [u, v] : edges(g)) {
      const CanonicalForm reduced = canonical_form(delete_edge(g, u, v), canon);
      if (std::binary_search(induced.begin(), induced.end(), reduced)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(form);
  }
  return out;
}

std::vector<CanonicalForm> minor_filter(
    const std::vector<CanonicalForm>& subgraph,
    const std::vector<CanonicalForm>& induced_prev,
    const CanonOptions& canon) {
  std::vector<CanonicalForm> out;
  for (const CanonicalForm& form : subgraph) {
    const Graph g = from_graph6(form.line);
    bool minimal = true;
    for (const auto& [u, v] : edges(g)) {
      const CanonicalForm contracted =
          canonical_form(contract_edge(g, u, v), canon);
      if (std::binary_search(induced_prev.begin(), induced_prev.end(),
                             contracted)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(form);
  }
  return out;
}

}  // namespace tdobs

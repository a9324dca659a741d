#include "tdobs/enumeration.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "tdobs/parallel.hpp"

namespace tdobs {

LevelSet initial_level(int k) {
  if (k < 1) throw std::invalid_argument("treedepth bound must be at least 1");
  LevelSet level;
  level.k = k;
  level.i = 1;
  level.members.push_back(canonical_form(Graph(1)));
  return level;
}

std::vector<Graph> candidate_extensions(const Graph& g) {
  std::vector<Graph> out;
  for_each_candidate_extension(g, [&out](const Graph& h) { out.push_back(h); });
  return out;
}

LevelSet next_level(const LevelSet& prev, const TreedepthSolver& solver,
                    const EnumOptions& opts) {
  if (prev.i >= Graph::kMaxVertices)
    throw std::length_error("graph capacity exceeded");
  const int k = prev.k;

  std::unordered_set<CanonicalForm> accepted;
  std::mutex mutex;
  parallel_for_index(prev.members.size(), opts.workers, [&](std::size_t idx) {
    const Graph parent = from_graph6(prev.members[idx].line);
    for_each_candidate_extension(parent, [&](const Graph& cand) {
      CanonicalForm form = canonical_form(cand, opts.canon);
      {
        std::lock_guard lock(mutex);
        if (accepted.contains(form)) return;
      }
      if (!solver.td_at_most(cand, k)) return;
      std::lock_guard lock(mutex);
      accepted.insert(std::move(form));
    });
  });

  LevelSet next;
  next.k = k;
  next.i = prev.i + 1;
  next.members.assign(accepted.begin(), accepted.end());
  std::sort(next.members.begin(), next.members.end());
  return next;
}

}  // namespace tdobs

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "tdobs/canon.hpp"
#include "tdobs/graph.hpp"

namespace tdobs {

// Rooted forest over a graph's vertices: parent[v] is v's parent, -1 marks
// roots. Serves as a treedepth certificate when every edge of the graph
// joins an ancestor-descendant pair.
struct EliminationForest {
  std::vector<int> parent;

  std::vector<int> roots() const;
  // Height in vertices; a single vertex has height 1, the empty forest 0.
  int height() const;
};

struct TreedepthResult {
  int value = 0;
  EliminationForest certificate;
};

// True iff f is an acyclic rooted forest spanning V(g) whose ancestor
// relation covers every edge of g. Out-of-range parent indices are an error.
bool verify_forest(const Graph& g, const EliminationForest& f);

// Valid lower bound on td(g): max of a greedy clique bound and the
// logarithmic bound from a heuristically found long path.
int lower_bound(const Graph& g);

struct SolverOptions {
  bool memo_enabled = true;
  // entry cap; the whole table resets when an insert would exceed it
  std::size_t memo_capacity = std::size_t{1} << 21;
};

// Exact treedepth by branch and bound over vertex deletions, with
// memoization keyed by the canonical form of each connected subproblem.
// Thread-safe: the memo is sharded and results do not depend on
// interleaving or on the cache being enabled.
class TreedepthSolver {
 public:
  TreedepthSolver() = default;
  explicit TreedepthSolver(const SolverOptions& opts) : opts_(opts) {}

  TreedepthResult treedepth(const Graph& g) const;
  bool td_at_most(const Graph& g, int k) const;

  std::size_t memo_size() const { return entries_.load(); }
  void clear_memo() const;

 private:
  struct Bounds {
    std::int8_t lb;
    std::int8_t ub;
  };
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, Bounds> map;
  };
  static constexpr std::size_t kShards = 64;

  // Exact value when td(g) <= budget, otherwise a valid lower bound > budget.
  int solve(const Graph& g, int budget) const;
  int solve_connected(const Graph& g, int budget) const;
  int assign_subtree(const Graph& g, VertexSet verts, int parent,
                     EliminationForest& forest) const;

  bool memo_get(const std::string& key, Bounds& out) const;
  void memo_update(const std::string& key, Bounds value) const;

  SolverOptions opts_;
  mutable std::array<Shard, kShards> shards_;
  mutable std::atomic<std::size_t> entries_{0};
};

}  // namespace tdobs

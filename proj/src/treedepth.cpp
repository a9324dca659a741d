#include "tdobs/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace tdobs {

namespace {

const CanonOptions kMemoCanon{CanonMode::kSearch, 6, true};

int greedy_clique_bound(const Graph& g) {
  int best = g.vertex_count() > 0 ? 1 : 0;
  for (int start = 0; start < g.vertex_count(); ++start) {
    int size = 1;
    VertexSet cand = g.neighbors(start);
    while (cand) {
      int pick = -1, pick_score = -1;
      VertexSet rest = cand;
      while (rest) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        const int score = std::popcount(g.neighbors(u) & cand);
        if (score > pick_score) {
          pick_score = score;
          pick = u;
        }
      }
      ++size;
      cand &= g.neighbors(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

// Greedy long simple path; the returned vertex count m certifies
// td >= ceil(log2(m + 1)).
int greedy_path_vertices(const Graph& g) {
  int best = g.vertex_count() > 0 ? 1 : 0;
  for (int start = 0; start < g.vertex_count(); ++start) {
    VertexSet visited = vertex_bit(start);
    int cur = start;
    int length = 1;
    for (;;) {
      VertexSet options = g.neighbors(cur) & ~visited;
      if (!options) break;
      int pick = -1, pick_score = -1;
      while (options) {
        const int u = std::countr_zero(options);
        options &= options - 1;
        const int score = std::popcount(g.neighbors(u) & ~visited);
        if (score > pick_score) {
          pick_score = score;
          pick = u;
        }
      }
      visited |= vertex_bit(pick);
      cur = pick;
      ++length;
    }
    best = std::max(best, length);
  }
  return best;
}

// 1 + max over components after repeatedly deleting a max-degree vertex.
int greedy_height(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return n;
  if (g.edge_count() == 0) return 1;
  int pick = 0, pick_deg = -1;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d > pick_deg) {
      pick_deg = d;
      pick = v;
    }
  }
  int sub = 0;
  for (const VertexSet comp :
       components_within(g, g.vertices() & ~vertex_bit(pick)))
    sub = std::max(sub, greedy_height(induced_subgraph(g, comp)));
  return 1 + sub;
}

bool is_complete(const Graph& g) {
  const int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

std::vector<int> EliminationForest::roots() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (parent[v] < 0) out.push_back(static_cast<int>(v));
  return out;
}

int EliminationForest::height() const {
  const int n = static_cast<int>(parent.size());
  int best = 0;
  for (int v = 0; v < n; ++v) {
    int depth = 0;
    int cur = v;
    while (cur >= 0) {
      ++depth;
      if (depth > n) throw std::invalid_argument("parent relation has a cycle");
      cur = parent[cur];
    }
    best = std::max(best, depth);
  }
  return best;
}

bool verify_forest(const Graph& g, const EliminationForest& f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.parent.size()) != n) return false;
  for (int v = 0; v < n; ++v)
    if (f.parent[v] >= n || f.parent[v] < -1)
      throw std::out_of_range("parent index out of range");
  // acyclicity plus ancestor sets, walking each vertex to its root
  std::vector<VertexSet> ancestors(n, 0);
  for (int v = 0; v < n; ++v) {
    int steps = 0;
    int cur = f.parent[v];
    while (cur >= 0) {
      if (++steps > n) return false;  // cycle
      ancestors[v] |= vertex_bit(cur);
      cur = f.parent[cur];
    }
  }
  for (const auto& [u, v] : edges(g))
    if (!set_contains(ancestors[u], v) && !set_contains(ancestors[v], u))
      return false;
  return true;
}

int lower_bound(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const int clique = greedy_clique_bound(g);
  const int path = std::bit_width(
      static_cast<unsigned>(greedy_path_vertices(g)));
  return std::max({1, clique, path});
}

bool TreedepthSolver::memo_get(const std::string& key, Bounds& out) const {
  Shard& shard = shards_[std::hash<std::string>{}(key) % kShards];
  std::lock_guard lock(shard.mutex);
  const auto it = shard.map.find(key);
  if (it == shard.map.end()) return false;
  out = it->second;
  return true;
}

void TreedepthSolver::memo_update(const std::string& key, Bounds value) const {
  Shard& shard = shards_[std::hash<std::string>{}(key) % kShards];
  {
    std::lock_guard lock(shard.mutex);
    const auto it = shard.map.find(key);
    if (it != shard.map.end()) {
      it->second.lb = std::max(it->second.lb, value.lb);
      it->second.ub = std::min(it->second.ub, value.ub);
      return;
    }
    if (entries_.load(std::memory_order_relaxed) < opts_.memo_capacity) {
      shard.map.emplace(key, value);
      entries_.fetch_add(1, std::memory_order_relaxed);
      return;
    }
  }
  // capacity reached: whole-table reset, then insert fresh
  clear_memo();
  std::lock_guard lock(shard.mutex);
  if (shard.map.emplace(key, value).second)
    entries_.fetch_add(1, std::memory_order_relaxed);
}

void TreedepthSolver::clear_memo() const {
  for (std::size_t i = 0; i < kShards; ++i) {
    std::lock_guard lock(shards_[i].mutex);
    entries_.fetch_sub(shards_[i].map.size(), std::memory_order_relaxed);
    shards_[i].map.clear();
  }
}

int TreedepthSolver::solve(const Graph& g, int budget) const {
  int value = 0;
  for (const VertexSet comp : components(g)) {
    const int t = solve_connected(induced_subgraph(g, comp), budget);
    if (t > budget) return t;
    value = std::max(value, t);
  }
  return value;
}

int TreedepthSolver::solve_connected(const Graph& g, int budget) const {
  const int n = g.vertex_count();
  if (n <= 2) return n;
  if (n == 3) return g.edge_count() == 3 ? 3 : 2;
  if (is_complete(g)) return n;

  const int lb0 = lower_bound(g);
  if (lb0 > budget) return lb0;

  Bounds bounds{static_cast<std::int8_t>(lb0),
                static_cast<std::int8_t>(greedy_height(g))};
  if (bounds.lb == bounds.ub) return bounds.lb;

  std::string key;
  if (opts_.memo_enabled) {
    key = canonical_form(g, kMemoCanon).line;
    Bounds cached;
    if (memo_get(key, cached)) {
      bounds.lb = std::max(bounds.lb, cached.lb);
      bounds.ub = std::min(bounds.ub, cached.ub);
      if (bounds.lb == bounds.ub) return bounds.lb;
      if (bounds.lb > budget) return bounds.lb;
    }
  }

  // branch on deleted vertex, highest degree first
  std::array<int, Graph::kMaxVertices> order{};
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.begin() + n, [&g](int a, int b) {
    const int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });

  int best = std::min(budget + 1, static_cast<int>(bounds.ub));
  int min_fail = std::numeric_limits<int>::max();
  for (int idx = 0; idx < n; ++idx) {
    const int v = order[idx];
    const int child_budget = best - 2;
    int sub_val = 0;
    bool feasible = true;
    for (const VertexSet comp :
         components_within(g, g.vertices() & ~vertex_bit(v))) {
      const int t = solve_connected(induced_subgraph(g, comp), child_budget);
      sub_val = std::max(sub_val, t);
      if (t > child_budget) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      best = 1 + sub_val;
      if (best <= bounds.lb) break;
    } else {
      min_fail = std::min(min_fail, 1 + sub_val);
    }
  }

  if (best <= budget) {
    if (opts_.memo_enabled)
      memo_update(key, {static_cast<std::int8_t>(best),
                        static_cast<std::int8_t>(best)});
    return best;
  }
  int fail_lb = static_cast<int>(bounds.lb);
  if (min_fail != std::numeric_limits<int>::max())
    fail_lb = std::max(fail_lb, min_fail);
  fail_lb = std::max(fail_lb, budget + 1);
  if (opts_.memo_enabled)
    memo_update(key, {static_cast<std::int8_t>(fail_lb), bounds.ub});
  return fail_lb;
}

int TreedepthSolver::assign_subtree(const Graph& g, VertexSet verts,
                                    int parent,
                                    EliminationForest& forest) const {
  if (std::has_single_bit(verts)) {
    forest.parent[std::countr_zero(verts)] = parent;
    return 1;
  }
  const Graph sub = induced_subgraph(g, verts);
  const int value = solve(sub, sub.vertex_count());
  const std::vector<int> verts_list = set_to_vertices(verts);
  int root = -1;
  for (std::size_t p = 0; p < verts_list.size(); ++p) {
    const Graph rest = delete_vertex(sub, static_cast<int>(p));
    if (solve(rest, value - 1) <= value - 1) {
      root = verts_list[p];
      break;
    }
  }
  forest.parent[root] = parent;
  for (const VertexSet comp : components_within(g, verts & ~vertex_bit(root)))
    assign_subtree(g, comp, root, forest);
  return value;
}

TreedepthResult TreedepthSolver::treedepth(const Graph& g) const {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("treedepth of the empty graph is undefined");
  TreedepthResult result;
  result.certificate.parent.assign(g.vertex_count(), -1);
  for (const VertexSet comp : components(g))
    result.value = std::max(
        result.value, assign_subtree(g, comp, -1, result.certificate));
  return result;
}

bool TreedepthSolver::td_at_most(const Graph& g, int k) const {
  if (k < 0) return false;
  if (g.vertex_count() == 0) return true;
  if (k == 0) return false;
  return solve(g, k) <= k;
}

}  // namespace tdobs

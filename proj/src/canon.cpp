#include "tdobs/canon.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace tdobs {

namespace {

constexpr int kMaxN = Graph::kMaxVertices;
// 1 order byte + ceil(18*17/2 / 6) = 26 adjacency bytes
constexpr std::size_t kMaxLine = 27;

// Encodes the graph relabelled by pos (pos[v] = new index of v) straight
// into out; returns the line length.
std::size_t encode_permuted(const Graph& g, const int* pos, char* out) {
  const int n = g.vertex_count();
  int inv[kMaxN];
  for (int v = 0; v < n; ++v) inv[pos[v]] = v;
  std::size_t len = 0;
  out[len++] = static_cast<char>(63 + n);
  unsigned group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (set_contains(g.neighbors(inv[i]), inv[j]) ? 1u : 0u);
      if (++filled == 6) {
        out[len++] = static_cast<char>(63 + group);
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out[len++] = static_cast<char>(63 + (group << (6 - filled)));
  return len;
}

void check_partition(const Graph& g, const Partition& p) {
  VertexSet seen = 0;
  for (const VertexSet cell : p.cells) {
    if (cell == 0) throw std::invalid_argument("partition has an empty cell");
    if (cell & seen) throw std::invalid_argument("partition cells overlap");
    seen |= cell;
  }
  if (seen != g.vertices())
    throw std::invalid_argument("partition does not cover the vertex set");
}

// One full splitting pass: every cell is split by the vector of neighbor
// counts against all current cells; sub-cells appear in ascending signature
// order. Repeating to a fixpoint yields the coarsest equitable refinement.
bool refine_pass(const Graph& g, std::vector<VertexSet>& cells) {
  const std::size_t num_cells = cells.size();
  std::vector<VertexSet> next;
  next.reserve(num_cells + 2);
  bool changed = false;

  using Signature = std::array<std::uint8_t, kMaxN>;
  for (const VertexSet cell : cells) {
    if (std::has_single_bit(cell)) {
      next.push_back(cell);
      continue;
    }
    // group vertices of this cell by signature
    std::vector<std::pair<Signature, VertexSet>> groups;
    VertexSet rest = cell;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      Signature sig{};
      for (std::size_t c = 0; c < num_cells; ++c)
        sig[c] = static_cast<std::uint8_t>(
            std::popcount(g.neighbors(v) & cells[c]));
      bool found = false;
      for (auto& [key, members] : groups) {
        if (key == sig) {
          members |= vertex_bit(v);
          found = true;
          break;
        }
      }
      if (!found) groups.emplace_back(sig, vertex_bit(v));
    }
    if (groups.size() > 1) changed = true;
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, members] : groups) next.push_back(members);
  }
  cells.swap(next);
  return changed;
}

void refine_to_equitable(const Graph& g, std::vector<VertexSet>& cells) {
  while (refine_pass(g, cells)) {
  }
}

struct CanonSearch {
  static constexpr std::size_t kMaxGenerators = 128;

  const Graph& g;
  int n;
  bool pruning;

  char best[kMaxLine];
  char first[kMaxLine];
  std::size_t len = 0;
  bool have_best = false;
  bool have_first = false;
  std::array<int, kMaxN> best_pos{};
  std::array<int, kMaxN> first_pos{};
  // discovered automorphism generators, as vertex maps
  std::vector<std::array<int, kMaxN>> generators;
  std::array<int, kMaxN> prefix{};  // individualized vertices, by depth

  explicit CanonSearch(const Graph& graph, bool automorphism_pruning)
      : g(graph), n(graph.vertex_count()), pruning(automorphism_pruning) {}

  void add_automorphism(const std::array<int, kMaxN>& a_pos,
                        const std::array<int, kMaxN>& b_pos) {
    if (generators.size() >= kMaxGenerators) return;
    int a_inv[kMaxN];
    for (int v = 0; v < n; ++v) a_inv[a_pos[v]] = v;
    std::array<int, kMaxN> gamma{};
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      gamma[v] = a_inv[b_pos[v]];
      identity = identity && gamma[v] == v;
    }
    if (identity) return;
    for (const auto& existing : generators)
      if (existing == gamma) return;
    generators.push_back(gamma);
  }

  void leaf(const std::vector<VertexSet>& cells) {
    std::array<int, kMaxN> pos{};
    for (std::size_t idx = 0; idx < cells.size(); ++idx)
      pos[std::countr_zero(cells[idx])] = static_cast<int>(idx);
    char buf[kMaxLine];
    len = encode_permuted(g, pos.data(), buf);
    if (!have_first) {
      std::memcpy(first, buf, len);
      first_pos = pos;
      have_first = true;
    } else if (pruning) {
      if (std::memcmp(buf, first, len) == 0)
        add_automorphism(first_pos, pos);
      else if (have_best && std::memcmp(buf, best, len) == 0)
        add_automorphism(best_pos, pos);
    }
    if (!have_best || std::memcmp(buf, best, len) < 0) {
      std::memcpy(best, buf, len);
      best_pos = pos;
      have_best = true;
    }
  }

  // Orbit partition of the subgroup generated by the discovered
  // automorphisms that fix prefix[0..depth) pointwise.
  std::array<int, kMaxN> stabilizer_orbits(int depth) const {
    std::array<int, kMaxN> parent{};
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&parent](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& gamma : generators) {
      bool fixes_prefix = true;
      for (int d = 0; d < depth && fixes_prefix; ++d)
        fixes_prefix = gamma[prefix[d]] == prefix[d];
      if (!fixes_prefix) continue;
      for (int v = 0; v < n; ++v) parent[find(v)] = find(gamma[v]);
    }
    for (int v = 0; v < n; ++v) parent[v] = find(v);
    return parent;
  }

  void descend(std::vector<VertexSet> cells, int depth) {
    refine_to_equitable(g, cells);
    // target cell: first smallest non-singleton
    int target = -1;
    int target_size = kMaxN + 1;
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      const int sz = std::popcount(cells[idx]);
      if (sz >= 2 && sz < target_size) {
        target = static_cast<int>(idx);
        target_size = sz;
      }
    }
    if (target < 0) {
      leaf(cells);
      return;
    }
    std::vector<int> explored;
    VertexSet rest = cells[target];
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (pruning && !explored.empty()) {
        // skip v when an automorphism fixing the current prefix maps an
        // already explored sibling onto it
        const std::array<int, kMaxN> orbit = stabilizer_orbits(depth);
        bool duplicate = false;
        for (const int u : explored)
          if (orbit[u] == orbit[v]) {
            duplicate = true;
            break;
          }
        if (duplicate) continue;
      }
      explored.push_back(v);
      prefix[depth] = v;
      std::vector<VertexSet> child = cells;
      child[target] = vertex_bit(v);
      child.insert(child.begin() + target + 1, cells[target] & ~vertex_bit(v));
      descend(std::move(child), depth + 1);
    }
  }

  std::string run() {
    std::vector<VertexSet> cells{g.vertices()};
    descend(std::move(cells), 0);
    return std::string(best, len);
  }
};

std::string brute_force_form(const Graph& g) {
  const int n = g.vertex_count();
  std::array<int, kMaxN> perm{};
  for (int i = 0; i < n; ++i) perm[i] = i;
  char best[kMaxLine];
  char buf[kMaxLine];
  std::size_t len = encode_permuted(g, perm.data(), best);
  while (std::next_permutation(perm.begin(), perm.begin() + n)) {
    encode_permuted(g, perm.data(), buf);
    if (std::memcmp(buf, best, len) < 0) std::memcpy(best, buf, len);
  }
  return std::string(best, len);
}

}  // namespace

Partition unit_partition(const Graph& g) {
  Partition p;
  if (g.vertex_count() > 0) p.cells.push_back(g.vertices());
  return p;
}

Partition refine(const Graph& g, const Partition& p) {
  check_partition(g, p);
  Partition out = p;
  refine_to_equitable(g, out.cells);
  return out;
}

CanonicalForm canonical_form(const Graph& g, const CanonOptions& opts) {
  if (opts.brute_force_cutoff < 0 || opts.brute_force_cutoff > 9)
    throw std::invalid_argument("brute-force cutoff must be in [0, 9]");
  const int n = g.vertex_count();
  if (n <= 1) return {to_graph6(g)};
  bool brute = false;
  switch (opts.mode) {
    case CanonMode::kAuto:
      brute = n <= opts.brute_force_cutoff;
      break;
    case CanonMode::kBruteForce:
      if (n > 9)
        throw std::invalid_argument(
            "brute-force canonization is limited to 9 vertices");
      brute = true;
      break;
    case CanonMode::kSearch:
      brute = false;
      break;
  }
  if (brute) return {brute_force_form(g)};
  CanonSearch search(g, opts.automorphism_pruning);
  return {search.run()};
}

bool are_isomorphic(const Graph& g, const Graph& h, const CanonOptions& opts) {
  if (g.vertex_count() != h.vertex_count()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  return canonical_form(g, opts) == canonical_form(h, opts);
}

}  // namespace tdobs

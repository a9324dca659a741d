#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tdobs/graph.hpp"

namespace tdobs {

// Canonical graph6 line of a canonically relabelled graph. Two graphs get
// equal forms iff they are isomorphic.
struct CanonicalForm {
  std::string line;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Ordered partition of a graph's vertex set; cell order is significant.
struct Partition {
  std::vector<VertexSet> cells;
};

Partition unit_partition(const Graph& g);

// Coarsest equitable partition finer than p: in the result, all vertices of
// a cell have the same number of neighbors in every cell. Deterministic in
// the input cell order; new cells are ordered by ascending neighbor-count
// signature.
Partition refine(const Graph& g, const Partition& p);

enum class CanonMode {
  kAuto,        // exhaustive permutations up to the cutoff, search above
  kBruteForce,  // exhaustive permutations (n <= 9 only)
  kSearch,      // refinement + individualization search
};

struct CanonOptions {
  CanonMode mode = CanonMode::kAuto;
  int brute_force_cutoff = 6;
  bool automorphism_pruning = true;
};

CanonicalForm canonical_form(const Graph& g, const CanonOptions& opts = {});

bool are_isomorphic(const Graph& g, const Graph& h,
                    const CanonOptions& opts = {});

}  // namespace tdobs

template <>
struct std::hash<tdobs::CanonicalForm> {
  std::size_t operator()(const tdobs::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.line);
  }
};

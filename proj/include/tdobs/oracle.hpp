#pragma once

#include <vector>

#include "tdobs/canon.hpp"
#include "tdobs/graph.hpp"

namespace tdobs {
namespace oracle {

// Plain treedepth recursion: max over components, 1 + min over vertex
// deletions for connected graphs. No memoization, no pruning. Exponential;
// intended for graphs on at most 7 or so vertices.
int treedepth(const Graph& g);

// Canonical forms of all isomorphism classes of n-vertex graphs, obtained
// by exhausting all labelled graphs. Feasible for n <= 7.
std::vector<CanonicalForm> all_classes(int n, const CanonOptions& canon = {},
                                       int workers = 1);

// Level set G_k^(i) from first principles: every i-vertex class whose
// representative has treedepth <= k.
std::vector<CanonicalForm> level_from_definition(
    int k, const std::vector<CanonicalForm>& classes);

struct ObstructionsFromDefinition {
  std::vector<CanonicalForm> induced;
  std::vector<CanonicalForm> subgraph;
  std::vector<CanonicalForm> minor;
};

// Obstruction sets from the definitions. Induced minimality checks every
// proper induced subgraph explicitly; subgraph and minor minimality check
// the maximal proper subgraphs/minors (single deletions and contractions),
// which covers the rest because treedepth is monotone under both relations.
ObstructionsFromDefinition obstructions_from_definition(
    int k, const std::vector<CanonicalForm>& classes);

}  // namespace oracle
}  // namespace tdobs

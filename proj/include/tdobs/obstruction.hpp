#pragma once

#include <vector>

#include "tdobs/canon.hpp"
#include "tdobs/enumeration.hpp"
#include "tdobs/graph.hpp"
#include "tdobs/treedepth.hpp"

namespace tdobs {

// How the per-vertex condition td(G - v) <= k is verified: by membership
// lookup in the previous level set, or by running the solver again.
enum class MembershipMode { kLookup, kRecompute };

struct ObstructionOptions {
  MembershipMode mode = MembershipMode::kLookup;
  int workers = 1;
  CanonOptions canon;
};

// The three n-vertex obstruction sets for treedepth <= k, sorted canonical
// forms with minor <= subgraph <= induced as subsets.
struct ObstructionSets {
  int k = 0;
  int n = 0;
  std::vector<CanonicalForm> induced;
  std::vector<CanonicalForm> subgraph;
  std::vector<CanonicalForm> minor;
};

// All n-vertex graphs G with td(G) = k+1 and td(G - v) <= k for every v,
// where n = prev_level.i + 1 and k = prev_level.k. Candidates are the
// minimum-degree extensions of prev_level's members.
std::vector<CanonicalForm> induced_obstructions(const LevelSet& prev_level,
                                                const TreedepthSolver& solver,
                                                const ObstructionOptions& opts);

// Keeps exactly the members none of whose single-edge deletions is
// isomorphic to another member; these are the subgraph-minimal ones.
std::vector<CanonicalForm> subgraph_filter(
    const std::vector<CanonicalForm>& induced, const CanonOptions& canon = {});

// Keeps exactly the members none of whose single-edge contractions is
// isomorphic to a member of the (n-1)-vertex induced set; these are the
// minor-minimal ones.
std::vector<CanonicalForm> minor_filter(
    const std::vector<CanonicalForm>& subgraph,
    const std::vector<CanonicalForm>& induced_prev,
    const CanonOptions& canon = {});

}  // namespace tdobs

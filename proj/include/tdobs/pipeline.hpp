#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "tdobs/obstruction.hpp"
#include "tdobs/storage.hpp"

namespace tdobs {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int k = 1;
  int n_max = 2;
  std::filesystem::path out_dir;
  MembershipMode mode = MembershipMode::kLookup;
  int workers = 1;
  int canon_cutoff = 6;
  bool resume = false;
  bool memo_enabled = true;
  std::size_t memo_capacity = std::size_t{1} << 21;
  std::ostream* progress = nullptr;  // optional human-readable log

  void validate() const;
  CanonOptions canon() const { return {CanonMode::kAuto, canon_cutoff, true}; }
};

struct RunManifest {
  std::string tool;
  std::string version;
  int k = 0;
  int canon_cutoff = 0;
  // keyed "level_3", "obs_induced_5", ...
  struct Stage {
    std::uint64_t count = 0;
    std::string digest;
    std::string completed_at;
  };
  std::map<std::string, Stage> stages;
};

RunManifest load_manifest(const std::filesystem::path& out, int k);
void save_manifest(const std::filesystem::path& out, const RunManifest& m);

// Computes and persists level sets 1..n_max-1. With resume set, stages whose
// file digest matches their sidecar are skipped; a mismatch is an error
// naming the stage.
RunManifest run_levels(const RunConfig& cfg);

// Computes and persists the three obstruction sets for each n in
// [k+1, n_max] plus obs_summary.tsv. Requires completed levels.
RunManifest run_obstructions(const RunConfig& cfg);

struct OracleReport {
  struct Entry {
    std::string name;
    std::vector<std::string> missing;  // oracle has it, pipeline output lacks it
    std::vector<std::string> extra;    // pipeline output has it, oracle lacks it
    std::string note;                  // e.g. unreadable file
  };
  std::vector<Entry> entries;
  std::size_t total_discrepancies() const;
  std::string to_string() const;
};

// Recomputes level or obstruction sets for orders up to n_limit (<= 7) by
// exhaustive enumeration of labelled graphs plus definitional minimality
// tests, and diffs them against the files under cfg.out_dir.
OracleReport oracle_check(const RunConfig& cfg, const std::string& scope,
                          int n_limit);

}  // namespace tdobs

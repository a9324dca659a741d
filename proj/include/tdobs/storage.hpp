#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tdobs/canon.hpp"

namespace tdobs {

class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace io {

std::string fnv1a64_hex(std::string_view bytes);
std::string digest_file(const std::filesystem::path& path);

// Writes one line per form, newline-terminated, via a temp file and rename.
void write_forms(const std::filesystem::path& path,
                 const std::vector<CanonicalForm>& forms);
std::vector<CanonicalForm> read_forms(const std::filesystem::path& path);

// Sidecar describing one persisted stage output.
struct StageMeta {
  std::string kind;  // "level", "obs_induced", "obs_subgraph", "obs_minor"
  int k = 0;
  int index = 0;  // level i, or obstruction order n
  std::uint64_t count = 0;
  std::string digest;
  int canon_cutoff = 0;
};

void write_meta(const std::filesystem::path& path, const StageMeta& meta);
std::optional<StageMeta> read_meta(const std::filesystem::path& path);

std::filesystem::path run_dir(const std::filesystem::path& out, int k);
std::filesystem::path level_path(const std::filesystem::path& out, int k, int i);
std::filesystem::path obstruction_path(const std::filesystem::path& out, int k,
                                       const std::string& kind, int n);
std::filesystem::path meta_path(std::filesystem::path file);

}  // namespace io
}  // namespace tdobs

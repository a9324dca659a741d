#include "tdobs/storage.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tdobs {
namespace io {

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

static std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IntegrityError("cannot open " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return std::move(out).str();
}

std::string digest_file(const std::filesystem::path& path) {
  return fnv1a64_hex(read_file(path));
}

static void write_file_atomic(const std::filesystem::path& path,
                              std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IntegrityError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IntegrityError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_forms(const std::filesystem::path& path,
                 const std::vector<CanonicalForm>& forms) {
  std::string contents;
  for (const CanonicalForm& form : forms) {
    contents += form.line;
    contents += '\n';
  }
  write_file_atomic(path, contents);
}

std::vector<CanonicalForm> read_forms(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IntegrityError("cannot open " + path.string());
  std::vector<CanonicalForm> forms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    forms.push_back({line});
  }
  return forms;
}

void write_meta(const std::filesystem::path& path, const StageMeta& meta) {
  nlohmann::json j{
      {"kind", meta.kind},           {"k", meta.k},
      {"index", meta.index},         {"count", meta.count},
      {"digest", meta.digest},       {"canon_cutoff", meta.canon_cutoff},
      {"format", 1},
  };
  write_file_atomic(path, j.dump(2) + "\n");
}

std::optional<StageMeta> read_meta(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    StageMeta meta;
    meta.kind = j.at("kind").get<std::string>();
    meta.k = j.at("k").get<int>();
    meta.index = j.at("index").get<int>();
    meta.count = j.at("count").get<std::uint64_t>();
    meta.digest = j.at("digest").get<std::string>();
    meta.canon_cutoff = j.at("canon_cutoff").get<int>();
    return meta;
  } catch (const nlohmann::json::exception&) {
    throw IntegrityError("malformed meta file " + path.string());
  }
}

std::filesystem::path run_dir(const std::filesystem::path& out, int k) {
  return out / ("k" + std::to_string(k));
}

std::filesystem::path level_path(const std::filesystem::path& out, int k,
                                 int i) {
  return run_dir(out, k) / ("level_" + std::to_string(i) + ".g6");
}

std::filesystem::path obstruction_path(const std::filesystem::path& out, int k,
                                       const std::string& kind, int n) {
  return run_dir(out, k) / ("obs_" + kind + "_n" + std::to_string(n) + ".g6");
}

std::filesystem::path meta_path(std::filesystem::path file) {
  file.replace_extension(".meta");
  return file;
}

}  // namespace io
}  // namespace tdobs

#include "tdobs/pipeline.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tdobs/oracle.hpp"

namespace tdobs {

namespace {

constexpr const char* kToolName = "tdobs";
constexpr const char* kToolVersion = "0.1.0";

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path manifest_path(const std::filesystem::path& out, int k) {
  return io::run_dir(out, k) / "manifest.json";
}

// Checks file + sidecar integrity for a completed stage; returns the meta if
// the stage is intact, nullopt if it was never produced. A produced but
// corrupt stage throws.
std::optional<io::StageMeta> stage_state(const std::filesystem::path& file,
                                         const std::string& stage_name,
                                         const RunConfig& cfg,
                                         const std::string& expected_kind,
                                         int expected_index) {
  const std::filesystem::path meta_file = io::meta_path(file);
  const bool have_file = std::filesystem::exists(file);
  const bool have_meta = std::filesystem::exists(meta_file);
  if (!have_file && !have_meta) return std::nullopt;
  if (!have_file || !have_meta)
    throw IntegrityError("stage " + stage_name +
                         " is incomplete (missing file or sidecar)");
  const auto meta = io::read_meta(meta_file);
  if (!meta) return std::nullopt;
  if (meta->kind != expected_kind || meta->k != cfg.k ||
      meta->index != expected_index)
    throw IntegrityError("stage " + stage_name + " sidecar does not match");
  if (meta->canon_cutoff != cfg.canon_cutoff)
    throw IntegrityError(
        "stage " + stage_name + " was produced with canonical cutoff " +
        std::to_string(meta->canon_cutoff) + ", current run uses " +
        std::to_string(cfg.canon_cutoff));
  if (io::digest_file(file) != meta->digest)
    throw IntegrityError("stage " + stage_name + " is corrupt: digest mismatch");
  return meta;
}

void persist_stage(const std::filesystem::path& file,
                   const std::vector<CanonicalForm>& forms,
                   const std::string& kind, int index, const RunConfig& cfg,
                   RunManifest& manifest, const std::string& stage_name) {
  io::write_forms(file, forms);
  io::StageMeta meta;
  meta.kind = kind;
  meta.k = cfg.k;
  meta.index = index;
  meta.count = forms.size();
  meta.digest = io::digest_file(file);
  meta.canon_cutoff = cfg.canon_cutoff;
  io::write_meta(io::meta_path(file), meta);
  manifest.stages[stage_name] = {meta.count, meta.digest, timestamp_utc()};
  save_manifest(cfg.out_dir, manifest);
}

std::vector<CanonicalForm> load_stage(const std::filesystem::path& file,
                                      const std::string& stage_name,
                                      const RunConfig& cfg,
                                      const std::string& expected_kind,
                                      int expected_index) {
  const auto meta =
      stage_state(file, stage_name, cfg, expected_kind, expected_index);
  if (!meta)
    throw IntegrityError("stage " + stage_name + " is missing; run levels first");
  return io::read_forms(file);
}

void log(const RunConfig& cfg, const std::string& message) {
  if (cfg.progress) *cfg.progress << message << std::endl;
}

}  // namespace

void RunConfig::validate() const {
  if (k < 1) throw UsageError("k must be at least 1");
  if (n_max < k + 1)
    throw UsageError("n-max must be at least k+1 (the smallest obstruction)");
  if (n_max > Graph::kMaxVertices)
    throw UsageError("n-max must be at most 18");
  if (workers < 1) throw UsageError("workers must be at least 1");
  if (canon_cutoff < 0 || canon_cutoff > 9)
    throw UsageError("canonical cutoff must be in [0, 9]");
  if (out_dir.empty()) throw UsageError("output directory is required");
}

RunManifest load_manifest(const std::filesystem::path& out, int k) {
  RunManifest m;
  m.tool = kToolName;
  m.version = kToolVersion;
  m.k = k;
  std::ifstream in(manifest_path(out, k));
  if (!in) return m;
  try {
    nlohmann::json j;
    in >> j;
    m.canon_cutoff = j.value("canon_cutoff", 0);
    for (const auto& [name, stage] : j.at("stages").items())
      m.stages[name] = {stage.at("count").get<std::uint64_t>(),
                        stage.at("digest").get<std::string>(),
                        stage.at("completed_at").get<std::string>()};
  } catch (const nlohmann::json::exception&) {
    throw IntegrityError("malformed manifest " + manifest_path(out, k).string());
  }
  return m;
}

void save_manifest(const std::filesystem::path& out, const RunManifest& m) {
  nlohmann::json stages = nlohmann::json::object();
  for (const auto& [name, stage] : m.stages)
    stages[name] = {{"count", stage.count},
                    {"digest", stage.digest},
                    {"completed_at", stage.completed_at}};
  const nlohmann::json j{{"tool", m.tool},
                         {"version", m.version},
                         {"k", m.k},
                         {"canon_cutoff", m.canon_cutoff},
                         {"stages", stages}};
  std::ofstream outf(manifest_path(out, m.k), std::ios::trunc);
  if (!outf)
    throw IntegrityError("cannot write " + manifest_path(out, m.k).string());
  outf << j.dump(2) << "\n";
}

RunManifest run_levels(const RunConfig& cfg) {
  cfg.validate();
  std::filesystem::create_directories(io::run_dir(cfg.out_dir, cfg.k));
  RunManifest manifest =
      cfg.resume ? load_manifest(cfg.out_dir, cfg.k) : RunManifest{};
  manifest.tool = kToolName;
  manifest.version = kToolVersion;
  manifest.k = cfg.k;
  manifest.canon_cutoff = cfg.canon_cutoff;

  const TreedepthSolver solver({cfg.memo_enabled, cfg.memo_capacity});
  EnumOptions enum_opts;
  enum_opts.workers = cfg.workers;
  enum_opts.canon = cfg.canon();

  LevelSet prev;
  bool prev_loaded = false;
  for (int i = 1; i < cfg.n_max; ++i) {
    const std::string stage_name = "level_" + std::to_string(i);
    const std::filesystem::path file = io::level_path(cfg.out_dir, cfg.k, i);
    if (cfg.resume) {
      const auto meta = stage_state(file, stage_name, cfg, "level", i);
      if (meta) {
        log(cfg, stage_name + ": already complete (" +
                     std::to_string(meta->count) + " graphs)");
        prev_loaded = false;
        continue;
      }
    }
    const auto start = std::chrono::steady_clock::now();
    LevelSet level;
    if (i == 1) {
      level = initial_level(cfg.k);
    } else {
      if (!prev_loaded) {
        prev.k = cfg.k;
        prev.i = i - 1;
        prev.members =
            load_stage(io::level_path(cfg.out_dir, cfg.k, i - 1),
                       "level_" + std::to_string(i - 1), cfg, "level", i - 1);
      }
      level = next_level(prev, solver, enum_opts);
    }
    persist_stage(file, level.members, "level", i, cfg, manifest, stage_name);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    log(cfg, stage_name + ": " + std::to_string(level.members.size()) +
                 " graphs (" + std::to_string(ms) + " ms)");
    prev = std::move(level);
    prev_loaded = true;
  }
  return manifest;
}

RunManifest run_obstructions(const RunConfig& cfg) {
  cfg.validate();
  std::filesystem::create_directories(io::run_dir(cfg.out_dir, cfg.k));
  RunManifest manifest =
      cfg.resume ? load_manifest(cfg.out_dir, cfg.k) : RunManifest{};
  manifest.tool = kToolName;
  manifest.version = kToolVersion;
  manifest.k = cfg.k;
  manifest.canon_cutoff = cfg.canon_cutoff;

  // all required levels must be intact before any work starts
  for (int i = cfg.k; i < cfg.n_max; ++i) {
    const std::string stage_name = "level_" + std::to_string(i);
    const auto meta = stage_state(io::level_path(cfg.out_dir, cfg.k, i),
                                  stage_name, cfg, "level", i);
    if (!meta)
      throw IntegrityError("level " + std::to_string(i) +
                           " is missing; run levels first");
  }

  const TreedepthSolver solver({cfg.memo_enabled, cfg.memo_capacity});
  ObstructionOptions obs_opts;
  obs_opts.mode = cfg.mode;
  obs_opts.workers = cfg.workers;
  obs_opts.canon = cfg.canon();

  struct Row {
    std::uint64_t induced, subgraph, minor;
  };
  std::map<int, Row> rows;

  std::vector<CanonicalForm> induced_prev;  // obs_induced for n-1
  for (int n = cfg.k + 1; n <= cfg.n_max; ++n) {
    const std::string suffix = std::to_string(n);
    const std::array<std::string, 3> kinds{"induced", "subgraph", "minor"};
    bool all_present = cfg.resume;
    if (cfg.resume) {
      for (const std::string& kind : kinds) {
        const auto meta = stage_state(
            io::obstruction_path(cfg.out_dir, cfg.k, kind, n),
            "obs_" + kind + "_" + suffix, cfg, "obs_" + kind, n);
        if (!meta) all_present = false;
      }
    }
    if (all_present) {
      ObstructionSets loaded;
      loaded.induced = io::read_forms(
          io::obstruction_path(cfg.out_dir, cfg.k, "induced", n));
      rows[n] = {loaded.induced.size(),
                 io::read_forms(
                     io::obstruction_path(cfg.out_dir, cfg.k, "subgraph", n))
                     .size(),
                 io::read_forms(
                     io::obstruction_path(cfg.out_dir, cfg.k, "minor", n))
                     .size()};
      induced_prev = std::move(loaded.induced);
      log(cfg, "obs n=" + suffix + ": already complete");
      continue;
    }

    const auto start = std::chrono::steady_clock::now();
    LevelSet prev_level;
    prev_level.k = cfg.k;
    prev_level.i = n - 1;
    prev_level.members =
        load_stage(io::level_path(cfg.out_dir, cfg.k, n - 1),
                   "level_" + std::to_string(n - 1), cfg, "level", n - 1);

    ObstructionSets sets;
    sets.k = cfg.k;
    sets.n = n;
    sets.induced = induced_obstructions(prev_level, solver, obs_opts);
    sets.subgraph = subgraph_filter(sets.induced, obs_opts.canon);
    sets.minor = minor_filter(sets.subgraph, induced_prev, obs_opts.canon);

    persist_stage(io::obstruction_path(cfg.out_dir, cfg.k, "induced", n),
                  sets.induced, "obs_induced", n, cfg, manifest,
                  "obs_induced_" + suffix);
    persist_stage(io::obstruction_path(cfg.out_dir, cfg.k, "subgraph", n),
                  sets.subgraph, "obs_subgraph", n, cfg, manifest,
                  "obs_subgraph_" + suffix);
    persist_stage(io::obstruction_path(cfg.out_dir, cfg.k, "minor", n),
                  sets.minor, "obs_minor", n, cfg, manifest,
                  "obs_minor_" + suffix);
    rows[n] = {sets.induced.size(), sets.subgraph.size(), sets.minor.size()};
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    log(cfg, "obs n=" + suffix + ": " + std::to_string(sets.induced.size()) +
                 " / " + std::to_string(sets.subgraph.size()) + " / " +
                 std::to_string(sets.minor.size()) + " (" +
                 std::to_string(ms) + " ms)");
    induced_prev = std::move(sets.induced);
  }

  // summary table, one row per n plus totals
  std::ostringstream tsv;
  tsv << "k\tn\tinduced\tsubgraph\tminor\n";
  Row total{0, 0, 0};
  for (const auto& [n, row] : rows) {
    tsv << cfg.k << '\t' << n << '\t' << row.induced << '\t' << row.subgraph
        << '\t' << row.minor << '\n';
    total.induced += row.induced;
    total.subgraph += row.subgraph;
    total.minor += row.minor;
  }
  tsv << cfg.k << "\ttotal\t" << total.induced << '\t' << total.subgraph
      << '\t' << total.minor << '\n';
  const std::filesystem::path summary =
      io::run_dir(cfg.out_dir, cfg.k) / "obs_summary.tsv";
  {
    std::ofstream out(summary, std::ios::trunc | std::ios::binary);
    if (!out) throw IntegrityError("cannot write " + summary.string());
    out << tsv.str();
  }
  log(cfg, "totals: " + std::to_string(total.induced) + " / " +
               std::to_string(total.subgraph) + " / " +
               std::to_string(total.minor));
  return manifest;
}

std::size_t OracleReport::total_discrepancies() const {
  std::size_t total = 0;
  for (const Entry& e : entries)
    total += e.missing.size() + e.extra.size() + (e.note.empty() ? 0 : 1);
  return total;
}

std::string OracleReport::to_string() const {
  std::ostringstream out;
  for (const Entry& e : entries) {
    if (e.missing.empty() && e.extra.empty() && e.note.empty()) {
      out << e.name << ": ok\n";
      continue;
    }
    out << e.name << ":";
    if (!e.note.empty()) out << ' ' << e.note;
    out << '\n';
    for (const std::string& line : e.missing) out << "  missing " << line << '\n';
    for (const std::string& line : e.extra) out << "  extra " << line << '\n';
  }
  out << "discrepancies: " << total_discrepancies() << '\n';
  return std::move(out).str();
}

namespace {

void diff_lists(const std::vector<CanonicalForm>& expected,
                const std::filesystem::path& file, OracleReport::Entry& entry) {
  if (!std::filesystem::exists(file)) {
    entry.note = "output file missing";
    return;
  }
  std::vector<CanonicalForm> actual = io::read_forms(file);
  std::sort(actual.begin(), actual.end());
  std::size_t i = 0, j = 0;
  while (i < expected.size() || j < actual.size()) {
    if (j == actual.size() ||
        (i < expected.size() && expected[i] < actual[j])) {
      entry.missing.push_back(expected[i].line);
      ++i;
    } else if (i == expected.size() || actual[j] < expected[i]) {
      entry.extra.push_back(actual[j].line);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
}

}  // namespace

OracleReport oracle_check(const RunConfig& cfg, const std::string& scope,
                          int n_limit) {
  cfg.validate();
  if (scope != "levels" && scope != "obstructions")
    throw UsageError("scope must be 'levels' or 'obstructions'");
  if (n_limit < 1 || n_limit > 7)
    throw UsageError("the exhaustive oracle is limited to n <= 7");

  OracleReport report;
  if (scope == "levels") {
    for (int i = 1; i <= std::min(n_limit, cfg.n_max - 1); ++i) {
      OracleReport::Entry entry;
      entry.name = "level_" + std::to_string(i);
      const auto classes = oracle::all_classes(i, cfg.canon(), cfg.workers);
      diff_lists(oracle::level_from_definition(cfg.k, classes),
                 io::level_path(cfg.out_dir, cfg.k, i), entry);
      report.entries.push_back(std::move(entry));
    }
    return report;
  }
  for (int n = cfg.k + 1; n <= std::min(n_limit, cfg.n_max); ++n) {
    const auto classes = oracle::all_classes(n, cfg.canon(), cfg.workers);
    const auto sets = oracle::obstructions_from_definition(cfg.k, classes);
    const std::array<std::pair<std::string, const std::vector<CanonicalForm>*>,
                     3>
        kinds{{{"induced", &sets.induced},
               {"subgraph", &sets.subgraph},
               {"minor", &sets.minor}}};
    for (const auto& [kind, expected] : kinds) {
      OracleReport::Entry entry;
      entry.name = "obs_" + kind + "_n" + std::to_string(n);
      diff_lists(*expected,
                 io::obstruction_path(cfg.out_dir, cfg.k, kind, n), entry);
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace tdobs

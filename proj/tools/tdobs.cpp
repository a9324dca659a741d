// tdobs: exact treedepth with certificates, level-by-level enumeration of
// bounded-treedepth graphs, and obstruction-set computation.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tdobs/oracle.hpp"
#include "tdobs/pipeline.hpp"

namespace {

using namespace tdobs;

int default_workers() {
  if (const char* env = std::getenv("TDOBS_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--k", cfg.k, "treedepth bound")->required();
  cmd->add_option("--n-max", cfg.n_max, "largest vertex count")->required();
  cmd->add_option("--out", cfg.out_dir, "output directory")->required();
  cmd->add_option("--workers", cfg.workers, "worker threads");
  cmd->add_option("--canon-cutoff", cfg.canon_cutoff,
                  "order up to which canonical forms use exhaustive "
                  "permutations");
  cmd->add_option("--memo-cap", cfg.memo_capacity,
                  "solver memo entry cap (table resets on overflow)");
  cmd->add_flag("--no-memo",
                [&cfg](std::int64_t) { cfg.memo_enabled = false; },
                "disable the solver memo table");
}

int cmd_levels(RunConfig cfg) {
  cfg.progress = &std::cout;
  run_levels(cfg);
  return 0;
}

int cmd_obstructions(RunConfig cfg) {
  cfg.progress = &std::cout;
  run_obstructions(cfg);
  return 0;
}

int cmd_td(bool certificate) {
  const TreedepthSolver solver;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = from_graph6(line);
    } catch (const Graph6ParseError& e) {
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      return 2;
    }
    const TreedepthResult result = solver.treedepth(g);
    std::cout << line << '\t' << result.value;
    if (certificate) {
      std::cout << '\t';
      for (std::size_t v = 0; v < result.certificate.parent.size(); ++v) {
        if (v > 0) std::cout << ',';
        std::cout << result.certificate.parent[v];
      }
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_canon(const CanonOptions& opts) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      std::cout << canonical_form(from_graph6(line), opts).line << '\n';
    } catch (const Graph6ParseError& e) {
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      return 2;
    }
  }
  return 0;
}

int cmd_oracle(RunConfig cfg, const std::string& scope, int n_limit) {
  const OracleReport report = oracle_check(cfg, scope, n_limit);
  std::cout << report.to_string();
  return 0;
}

int cmd_diff(const std::string& left, const std::string& right,
             bool canonicalize, const CanonOptions& opts) {
  auto load = [&](const std::string& path) {
    std::vector<CanonicalForm> forms = io::read_forms(path);
    if (canonicalize)
      for (CanonicalForm& f : forms)
        f = canonical_form(from_graph6(f.line), opts);
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
  };
  const auto a = load(left);
  const auto b = load(right);
  std::size_t i = 0, j = 0, diffs = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      std::cout << "< " << a[i++].line << '\n';
      ++diffs;
    } else if (i == a.size() || b[j] < a[i]) {
      std::cout << "> " << b[j++].line << '\n';
      ++diffs;
    } else {
      ++i;
      ++j;
    }
  }
  std::cout << "differences: " << diffs << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact treedepth and obstruction-set pipeline"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tdobs 0.1.0");

  RunConfig levels_cfg;
  levels_cfg.workers = default_workers();
  auto* levels = app.add_subcommand(
      "levels", "enumerate all graphs of treedepth <= k, level by level");
  add_run_options(levels, levels_cfg);
  levels->add_flag("--resume", levels_cfg.resume,
                   "skip stages whose output file digest matches");

  RunConfig obs_cfg;
  obs_cfg.workers = default_workers();
  auto* obstructions = app.add_subcommand(
      "obstructions", "compute induced/subgraph/minor obstruction sets");
  add_run_options(obstructions, obs_cfg);
  obstructions->add_flag("--resume", obs_cfg.resume,
                         "skip stages whose output file digest matches");
  std::string mode = "lookup";
  obstructions
      ->add_option("--mode", mode,
                   "verify deletions by level lookup or by recomputing "
                   "treedepth")
      ->check(CLI::IsMember({"lookup", "recompute"}));

  auto* td = app.add_subcommand(
      "td", "read graph6 lines on stdin, write 'graph6 TAB treedepth'");
  bool certificate = false;
  td->add_flag("--certificate", certificate,
               "append the elimination forest as a parent array");

  auto* canon = app.add_subcommand(
      "canon", "read graph6 lines on stdin, write canonical graph6 lines");
  CanonOptions canon_opts;
  std::string canon_mode = "auto";
  canon->add_option("--cutoff", canon_opts.brute_force_cutoff,
                    "order up to which exhaustive permutations are used");
  canon->add_option("--mode", canon_mode, "auto, brute, or search")
      ->check(CLI::IsMember({"auto", "brute", "search"}));
  bool no_pruning = false;
  canon->add_flag("--no-automorphism-pruning", no_pruning,
                  "explore all search leaves");

  RunConfig oracle_cfg;
  oracle_cfg.workers = default_workers();
  auto* oracle = app.add_subcommand(
      "oracle",
      "recompute small sets by exhaustive enumeration and diff against "
      "pipeline outputs");
  oracle->add_option("--k", oracle_cfg.k, "treedepth bound")->required();
  std::string scope;
  oracle->add_option("--scope", scope, "levels or obstructions")
      ->required()
      ->check(CLI::IsMember({"levels", "obstructions"}));
  int n_limit = 6;
  oracle->add_option("--n-limit", n_limit, "largest order to recompute (<= 7)")
      ->required();
  oracle->add_option("--out", oracle_cfg.out_dir, "output directory to check")
      ->required();
  oracle->add_option("--workers", oracle_cfg.workers, "worker threads");
  oracle->add_option("--canon-cutoff", oracle_cfg.canon_cutoff,
                     "must match the checked run");

  auto* diff = app.add_subcommand(
      "diff", "set difference of two graph6 files, line by line");
  std::string diff_left, diff_right;
  bool diff_canon = false;
  diff->add_option("--left", diff_left, "graph6 file")->required();
  diff->add_option("--right", diff_right, "graph6 file")->required();
  diff->add_flag("--canonicalize", diff_canon,
                 "canonicalize both sides before comparing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*levels) return cmd_levels(levels_cfg);
    if (*obstructions) {
      obs_cfg.mode = mode == "recompute" ? MembershipMode::kRecompute
                                         : MembershipMode::kLookup;
      return cmd_obstructions(obs_cfg);
    }
    if (*td) return cmd_td(certificate);
    if (*canon) {
      canon_opts.automorphism_pruning = !no_pruning;
      canon_opts.mode = canon_mode == "brute"    ? CanonMode::kBruteForce
                        : canon_mode == "search" ? CanonMode::kSearch
                                                 : CanonMode::kAuto;
      return cmd_canon(canon_opts);
    }
    if (*oracle) {
      oracle_cfg.n_max = Graph::kMaxVertices;  // only bounds the check range
      return cmd_oracle(oracle_cfg, scope, n_limit);
    }
    if (*diff) return cmd_diff(diff_left, diff_right, diff_canon, canon_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IntegrityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Graph6ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

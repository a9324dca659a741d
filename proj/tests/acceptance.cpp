// Acceptance suite: drives the tdobs binary and the library through the
// full k=3 reproduction, the k=4 desk-scale run, the exhaustive oracles,
// and the determinism guarantees. Prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "tdobs/enumeration.hpp"
#include "tdobs/obstruction.hpp"
#include "tdobs/oracle.hpp"
#include "tdobs/pipeline.hpp"

namespace fs = std::filesystem;
using namespace tdobs;

namespace {

std::string g_tdobs;  // path to the CLI binary
fs::path g_work;      // scratch directory
int g_failures = 0;

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) {
    result.output = "popen failed";
    return result;
  }
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
    result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

CommandResult tdobs_cli(const std::string& args) {
  return run_command(g_tdobs + " " + args);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<unreadable " + path.string() + ">";
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

bool expect(bool condition, const std::string& context) {
  if (!condition) std::cout << "  check failed: " << context << std::endl;
  return condition;
}

std::vector<std::string> output_files(int k, int n_max) {
  std::vector<std::string> names;
  for (int i = 1; i < n_max; ++i)
    names.push_back("level_" + std::to_string(i) + ".g6");
  for (int n = k + 1; n <= n_max; ++n)
    for (const std::string kind : {"induced", "subgraph", "minor"})
      names.push_back("obs_" + kind + "_n" + std::to_string(n) + ".g6");
  names.push_back("obs_summary.tsv");
  return names;
}

bool run_pipeline(const fs::path& dir, int k, int n_max, int workers,
                  const std::string& mode = "lookup") {
  const std::string base = " --k " + std::to_string(k) + " --n-max " +
                           std::to_string(n_max) + " --out " + dir.string() +
                           " --workers " + std::to_string(workers);
  const CommandResult levels = tdobs_cli("levels" + base);
  if (!expect(levels.exit_code == 0, "levels exit code\n" + levels.output))
    return false;
  const CommandResult obs =
      tdobs_cli("obstructions" + base + " --mode " + mode);
  return expect(obs.exit_code == 0, "obstructions exit code\n" + obs.output);
}

// summary rows keyed by the n column ("4", "total", ...)
std::map<std::string, std::array<long, 3>> parse_summary(const fs::path& dir,
                                                         int k) {
  std::map<std::string, std::array<long, 3>> rows;
  std::ifstream in(io::run_dir(dir, k) / "obs_summary.tsv");
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string kk, n;
    std::array<long, 3> counts{};
    fields >> kk >> n >> counts[0] >> counts[1] >> counts[2];
    rows[n] = counts;
  }
  return rows;
}

bool same_outputs(const fs::path& a, const fs::path& b, int k, int n_max) {
  bool same = true;
  for (const std::string& name : output_files(k, n_max)) {
    const std::string left = slurp(io::run_dir(a, k) / name);
    const std::string right = slurp(io::run_dir(b, k) / name);
    same = expect(left == right, name + " differs between " + a.string() +
                                     " and " + b.string()) &&
           same;
  }
  return same;
}

// Simulates a run interrupted after intermediate stages: completes the
// stages, removes a suffix of their outputs, and finishes under --resume.
bool run_pipeline_with_resume_cycle(const fs::path& dir, int k, int n_max,
                                    int workers) {
  const std::string base = " --k " + std::to_string(k) + " --n-max " +
                           std::to_string(n_max) + " --out " + dir.string() +
                           " --workers " + std::to_string(workers);
  if (!expect(tdobs_cli("levels" + base).exit_code == 0,
              "levels (pre-interrupt)"))
    return false;
  for (int i = (n_max + 1) / 2; i < n_max; ++i) {
    fs::remove(io::level_path(dir, k, i));
    fs::remove(io::meta_path(io::level_path(dir, k, i)));
  }
  if (!expect(tdobs_cli("levels" + base + " --resume").exit_code == 0,
              "levels --resume"))
    return false;
  if (!expect(tdobs_cli("obstructions" + base).exit_code == 0,
              "obstructions (pre-interrupt)"))
    return false;
  for (int n = (k + 1 + n_max) / 2; n <= n_max; ++n)
    for (const std::string kind : {"induced", "subgraph", "minor"}) {
      fs::remove(io::obstruction_path(dir, k, kind, n));
      fs::remove(io::meta_path(io::obstruction_path(dir, k, kind, n)));
    }
  return expect(tdobs_cli("obstructions" + base + " --resume").exit_code == 0,
                "obstructions --resume");
}

void criterion_1_and_2() {
  const fs::path dir = g_work / "k3_w4";
  bool ok = run_pipeline(dir, 3, 10, 4);
  std::map<std::string, std::array<long, 3>> rows;
  if (ok) {
    rows = parse_summary(dir, 3);
    ok = expect(rows.count("total") == 1, "summary has a total row") &&
         expect(rows["total"] == std::array<long, 3>{30, 14, 12},
                "totals are 30/14/12") &&
         expect(rows["9"] == std::array<long, 3>{0, 0, 0},
                "no obstructions at n=9") &&
         expect(rows["10"] == std::array<long, 3>{0, 0, 0},
                "no obstructions at n=10");
  }
  report(1, ok,
         "k=3 totals |induced|=30, |subgraph|=14, |minor|=12, empty at the "
         "top orders");

  // criterion 2: exactly one more induced obstruction than the previously
  // published 29. The union of the per-n files is the artifact's record of
  // all 30; the diff subcommand reports set differences against any prior
  // list by canonical graph6 line.
  std::vector<CanonicalForm> all_induced;
  for (int n = 4; n <= 10; ++n) {
    const auto forms =
        io::read_forms(io::obstruction_path(dir, 3, "induced", n));
    all_induced.insert(all_induced.end(), forms.begin(), forms.end());
  }
  std::sort(all_induced.begin(), all_induced.end());
  bool ok2 =
      expect(all_induced.size() == 30, "union of induced sets has 30 members");
  if (ok2) {
    const fs::path full_list = g_work / "k3_induced_all.g6";
    io::write_forms(full_list, all_induced);
    std::cout << "  the 30 induced obstructions (canonical graph6):"
              << std::endl;
    for (const CanonicalForm& f : all_induced)
      std::cout << "    " << f.line << std::endl;
    // exercise the reporting path with a 29-line prior list
    std::vector<CanonicalForm> prior(all_induced.begin(),
                                     all_induced.end() - 1);
    const fs::path prior_list = g_work / "k3_prior_29.g6";
    io::write_forms(prior_list, prior);
    const CommandResult diff = tdobs_cli("diff --left " + full_list.string() +
                                         " --right " + prior_list.string());
    ok2 = expect(diff.exit_code == 0, "diff exit code") &&
          expect(diff.output.find("< " + all_induced.back().line) !=
                     std::string::npos,
                 "diff reports the extra graph by canonical line") &&
          expect(diff.output.find("differences: 1") != std::string::npos,
                 "diff counts exactly one difference");
  }
  report(2, ok2,
         "the induced count exceeds the prior 29 by exactly one; the full "
         "set is recorded and set differences are reported per line");
}

void criterion_3() {
  bool ok = true;
  for (int k = 1; k <= 2 && ok; ++k) {
    const fs::path dir = g_work / ("oracle_k" + std::to_string(k));
    // n-max 7 so that the 6-vertex level is produced as well
    ok = run_pipeline(dir, k, 7, 2);
    if (!ok) break;
    for (const std::string scope : {"levels", "obstructions"}) {
      const CommandResult check =
          tdobs_cli("oracle --scope " + scope + " --k " + std::to_string(k) +
                    " --n-limit 6 --out " + dir.string() + " --workers 2");
      ok = expect(check.exit_code == 0, "oracle exit code") &&
           expect(check.output.find("discrepancies: 0") != std::string::npos,
                  "empty diff for k=" + std::to_string(k) + " " + scope +
                      "\n" + check.output) &&
           ok;
    }
  }
  report(3, ok,
         "k<=2, n<=6: levels and all three obstruction sets match the "
         "definitional oracle");
}

void criterion_4() {
  bool ok = true;
  const TreedepthSolver solver;
  std::map<int, LevelSet> levels;  // one running level chain per k
  for (int i = 1; i <= 7; ++i) {
    const auto classes = oracle::all_classes(i, {}, 4);
    for (int k = 1; k <= 4; ++k) {
      LevelSet& level = levels[k];
      if (i == 1)
        level = initial_level(k);
      else
        level = next_level(level, solver, {4, {}});
      ok = expect(level.members == oracle::level_from_definition(k, classes),
                  "level (k=" + std::to_string(k) + ", i=" +
                      std::to_string(i) + ") equals the exhaustive set") &&
           ok;
    }
  }
  report(4, ok, "enumeration is complete for k<=4, i<=7");
}

void criterion_5() {
  bool ok = true;
  const TreedepthSolver solver;
  long connected = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const CanonicalForm& form : oracle::all_classes(n, {}, 4)) {
      const Graph g = from_graph6(form.line);
      if (!is_connected(g)) continue;
      ++connected;
      const TreedepthResult result = solver.treedepth(g);
      ok = expect(result.value == oracle::treedepth(g),
                  "solver value matches the plain recursion on " + form.line) &&
           expect(verify_forest(g, result.certificate),
                  "certificate verifies on " + form.line) &&
           expect(result.certificate.height() == result.value,
                  "certificate height equals the value on " + form.line) &&
           ok;
      if (!ok) break;
    }
  }
  report(5, ok,
         "solver agrees with the unpruned recursion on all " +
             std::to_string(connected) +
             " connected graphs with n<=7, certificates verify");
}

void criterion_6() {
  bool ok = true;
  for (int n = 1; n <= 6 && ok; ++n) {
    test::for_each_labelled_graph(n, [&ok](const Graph& g) {
      if (!ok) return;
      ok = canonical_form(g).line == test::lexmin_form(g);
    });
    if (!ok) std::cout << "  lexmin mismatch at n=" << n << std::endl;
  }
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 10000 && ok; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 18);
    const Graph g =
        test::random_graph(rng, n, 0.05 + 0.9 * (trial % 11) / 10.0);
    const Graph h = test::relabel(g, test::random_permutation(rng, n));
    ok = expect(canonical_form(g) == canonical_form(h),
                "permutation invariance at trial " + std::to_string(trial));
  }
  report(6, ok,
         "canonical forms are the lexicographic minimum for n<=6 and "
         "permutation-invariant on 10000 random pairs up to n=18");
}

void criterion_7(const fs::path& lookup_dir) {
  bool ok = run_pipeline(lookup_dir, 4, 10, 4);

  // recompute mode over the same levels, then byte-compare everything
  const fs::path recompute_dir = g_work / "k4_recompute";
  if (ok) {
    fs::create_directories(recompute_dir);
    fs::copy(lookup_dir, recompute_dir, fs::copy_options::recursive);
    for (int n = 5; n <= 10; ++n)
      for (const std::string kind : {"induced", "subgraph", "minor"}) {
        fs::remove(io::obstruction_path(recompute_dir, 4, kind, n));
        fs::remove(
            io::meta_path(io::obstruction_path(recompute_dir, 4, kind, n)));
      }
    const CommandResult obs =
        tdobs_cli("obstructions --k 4 --n-max 10 --out " +
                  recompute_dir.string() + " --workers 4 --mode recompute");
    ok = expect(obs.exit_code == 0,
                "recompute mode exit code\n" + obs.output) &&
         same_outputs(lookup_dir, recompute_dir, 4, 10) && ok;
  }

  // chain and membership certificates on every induced member
  const TreedepthSolver solver;
  if (ok) {
    for (int n = 5; n <= 10 && ok; ++n) {
      const auto induced =
          io::read_forms(io::obstruction_path(lookup_dir, 4, "induced", n));
      const auto subgraph =
          io::read_forms(io::obstruction_path(lookup_dir, 4, "subgraph", n));
      const auto minor =
          io::read_forms(io::obstruction_path(lookup_dir, 4, "minor", n));
      ok = expect(std::includes(induced.begin(), induced.end(),
                                subgraph.begin(), subgraph.end()),
                  "subgraph set within induced set at n=" +
                      std::to_string(n)) &&
           expect(std::includes(subgraph.begin(), subgraph.end(),
                                minor.begin(), minor.end()),
                  "minor set within subgraph set at n=" + std::to_string(n));
      for (const CanonicalForm& form : induced) {
        const Graph g = from_graph6(form.line);
        bool member = solver.treedepth(g).value == 5;
        for (int v = 0; v < g.vertex_count() && member; ++v)
          member = solver.td_at_most(delete_vertex(g, v), 4);
        if (!expect(member, "membership certificate for " + form.line)) {
          ok = false;
          break;
        }
      }
    }
  }

  // --n-max 16 is accepted; without levels it stops at the integrity gate
  const fs::path large_dir = g_work / "k4_large_flag";
  const CommandResult large = tdobs_cli(
      "obstructions --k 4 --n-max 16 --out " + large_dir.string());
  ok = expect(large.exit_code == 2 &&
                  large.output.find("run levels first") != std::string::npos,
              "--n-max 16 passes validation and stops on missing levels") &&
       ok;

  report(7, ok,
         "k=4 desk-scale run completes; chain and membership certificates "
         "hold; lookup and recompute outputs are byte-identical; --n-max 16 "
         "is accepted");
}

void criterion_8(const fs::path& k3_w4, const fs::path& k4_w4) {
  bool ok = true;

  const fs::path k3_w1 = g_work / "k3_w1";
  ok = run_pipeline(k3_w1, 3, 10, 1) && same_outputs(k3_w4, k3_w1, 3, 10) && ok;
  const fs::path k3_resume = g_work / "k3_resume";
  ok = run_pipeline_with_resume_cycle(k3_resume, 3, 10, 4) &&
       same_outputs(k3_w4, k3_resume, 3, 10) && ok;

  const fs::path k4_w1 = g_work / "k4_w1";
  ok = run_pipeline(k4_w1, 4, 10, 1) && same_outputs(k4_w4, k4_w1, 4, 10) && ok;
  const fs::path k4_resume = g_work / "k4_resume";
  ok = run_pipeline_with_resume_cycle(k4_resume, 4, 10, 4) &&
       same_outputs(k4_w4, k4_resume, 4, 10) && ok;

  report(8, ok,
         "k=3 and k=4 outputs are byte-identical across workers {1,4} and "
         "across an interrupt/resume cycle");
}

}  // namespace

int main(int argc, char** argv) {
  for (int a = 1; a + 1 < argc; a += 2) {
    const std::string flag = argv[a];
    if (flag == "--tdobs") g_tdobs = argv[a + 1];
    if (flag == "--work") g_work = argv[a + 1];
  }
  if (g_tdobs.empty()) {
    std::cerr << "usage: acceptance --tdobs <path-to-binary> [--work <dir>]"
              << std::endl;
    return 2;
  }
  if (g_work.empty()) g_work = fs::temp_directory_path() / "tdobs_acceptance";
  fs::remove_all(g_work);
  fs::create_directories(g_work);

  criterion_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  const fs::path k4_dir = g_work / "k4_lookup";
  criterion_7(k4_dir);
  criterion_8(g_work / "k3_w4", k4_dir);

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
    fs::remove_all(g_work);
    return 0;
  }
  std::cout << "acceptance: " << g_failures
            << " criterion(s) failed; outputs kept in " << g_work << std::endl;
  return 1;
}

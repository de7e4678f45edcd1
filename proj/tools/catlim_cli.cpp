// Command-line front end. Links only the C API; the JSON header is used
// purely to inspect report statuses for the exit code.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "catlim.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool strict = false;
  std::uint64_t budget = 0;
};

struct EnginePtr {
  clm_engine* e = nullptr;
  EnginePtr() : e(clm_engine_new()) {}
  ~EnginePtr() { clm_engine_free(e); }
};

struct StringPtr {
  char* s = nullptr;
  ~StringPtr() { clm_string_free(s); }
};

// 0 all pass, 1 any fail, 2 when --strict and anything was skipped.
int exit_code_of(const ordered_json& reports, bool strict) {
  int code = 0;
  auto consider = [&](const ordered_json& r) {
    std::string status = r.value("status", "");
    if (status == "fail") code = code < 1 ? 1 : code;
    if (status == "skipped" && strict) code = 2;
  };
  if (reports.is_array())
    for (const auto& r : reports) consider(r);
  else
    consider(reports);
  return code;
}

int emit(const char* reports_json, const Options& opt, double elapsed_seconds) {
  ordered_json parsed;
  try {
    parsed = ordered_json::parse(reports_json);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: engine returned unreadable output: %s\n", e.what());
    return 2;
  }
  if (opt.json) {
    std::fputs(reports_json, stdout);
  } else {
    StringPtr text;
    if (clm_report_render_text(reports_json, &text.s) != CLM_OK) {
      std::fprintf(stderr, "error: could not render report\n");
      return 2;
    }
    std::fputs(text.s, stdout);
    std::printf("elapsed: %.3f s\n", elapsed_seconds);
  }
  return exit_code_of(parsed, opt.strict);
}

int run_check_command(const Options& opt, const std::string& id, const ordered_json& params) {
  EnginePtr eng;
  if (!eng.e) {
    std::fprintf(stderr, "error: engine creation failed\n");
    return 2;
  }
  if (opt.budget > 0 &&
      clm_engine_set_enumeration_budget(eng.e, opt.budget) != CLM_OK) {
    std::fprintf(stderr, "error: %s\n", clm_engine_last_error(eng.e));
    return 2;
  }
  auto start = std::chrono::steady_clock::now();
  StringPtr out;
  clm_status st = clm_run_check(eng.e, id.c_str(), params.dump().c_str(), &out.s);
  auto stop = std::chrono::steady_clock::now();
  if (st != CLM_OK) {
    std::fprintf(stderr, "error: %s\n", clm_engine_last_error(eng.e));
    return 2;
  }
  return emit(out.s, opt, std::chrono::duration<double>(stop - start).count());
}

int run_limit_command(const Options& opt, const std::string& path) {
  EnginePtr eng;
  if (!eng.e) {
    std::fprintf(stderr, "error: engine creation failed\n");
    return 2;
  }
  if (opt.budget > 0 &&
      clm_engine_set_enumeration_budget(eng.e, opt.budget) != CLM_OK) {
    std::fprintf(stderr, "error: %s\n", clm_engine_last_error(eng.e));
    return 2;
  }
  clm_diagram* d = nullptr;
  auto start = std::chrono::steady_clock::now();
  if (clm_diagram_load_file(eng.e, path.c_str(), &d) != CLM_OK) {
    std::fprintf(stderr, "error: %s\n", clm_engine_last_error(eng.e));
    return 2;
  }
  StringPtr out;
  clm_status st = clm_limit_report(eng.e, d, &out.s);
  auto stop = std::chrono::steady_clock::now();
  clm_diagram_free(d);
  if (st != CLM_OK) {
    std::fprintf(stderr, "error: %s\n", clm_engine_last_error(eng.e));
    return 2;
  }
  return emit(out.s, opt, std::chrono::duration<double>(stop - start).count());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catlim: finite-scale limit and codensity verification"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit reports as a JSON array (byte-stable)");
  app.add_flag("--strict", opt.strict, "treat skipped (budget-bound) checks as errors");
  app.add_option("--budget", opt.budget, "enumeration step budget override");

  std::string limit_file;
  CLI::App* limit = app.add_subcommand("limit", "compute the limit of a diagram file");
  limit->add_option("file", limit_file, "diagram JSON file")->required();

  CLI::App* check = app.add_subcommand("check", "run a named verification");
  check->require_subcommand(1);

  int p38_size = 3;
  CLI::App* prop38 = check->add_subcommand("prop38", "density diagram limit for an n-point set");
  prop38->add_option("--size", p38_size, "set size n (3..6)")->capture_default_str();

  int set3_count = 500;
  std::uint64_t set3_seed = 0;
  CLI::App* set3 = check->add_subcommand("set3", "reduction verdict vs brute force on a random corpus");
  set3->add_option("--count", set3_count, "number of diagrams")->capture_default_str();
  set3->add_option("--seed", set3_seed, "base seed")->capture_default_str();

  int gh_size = 5;
  CLI::App* gh = check->add_subcommand("galvin-horn", "coherent choices vs principal ultrafilters");
  gh->add_option("--size", gh_size, "ground set size (0..5)")->capture_default_str();

  int pl_size = 4;
  CLI::App* pl = check->add_subcommand("partition-limit", "partition-quotient diagram limit");
  pl->add_option("--size", pl_size, "ground set size (0..5)")->capture_default_str();

  int ddm_q = 2, ddm_maxdim = 3;
  std::uint64_t ddm_seed = 1;
  CLI::App* ddm = check->add_subcommand("dd-monad", "double-dualization monad laws and rescalings");
  ddm->add_option("--q", ddm_q, "field modulus (2, 3, 5)")->capture_default_str();
  ddm->add_option("--max-dim", ddm_maxdim, "largest dimension checked")->capture_default_str();
  ddm->add_option("--seed", ddm_seed, "sampling seed for large hom-sets")->capture_default_str();

  int l42_q = 2, l42_dim = 2;
  CLI::App* l42 = check->add_subcommand("lemma42", "coherent choices over linear quotients");
  l42->add_option("--q", l42_q, "field modulus (2, 3, 5)")->capture_default_str();
  l42->add_option("--dim", l42_dim, "space dimension")->capture_default_str();

  int l45_q = 2, l45_maxdim = 2;
  std::string l45_functor = "id";
  CLI::App* l45 = check->add_subcommand("lemma45", "exhaustive naturality scan");
  l45->add_option("--q", l45_q, "field modulus (2, 3, 5)")->capture_default_str();
  l45->add_option("--max-dim", l45_maxdim, "largest dimension in the scan (0..2)")
      ->capture_default_str();
  l45->add_option("--functor", l45_functor, "source functor: id or dd")
      ->check(CLI::IsMember({"id", "dd"}))
      ->capture_default_str();

  int p43_q = 2, p43_n = 3;
  CLI::App* p43 = check->add_subcommand("prop43", "coordinate-subspace diagram limit");
  p43->add_option("--q", p43_q, "field modulus (2, 3, 5)")->capture_default_str();
  p43->add_option("--n", p43_n, "space dimension (2..4)")->capture_default_str();

  CLI::App* all = check->add_subcommand("all", "run the full deterministic grid");

  CLI::App* codensity = app.add_subcommand("codensity", "codensity value of one object");
  codensity->require_subcommand(1);

  int cs_size = 3, cs_pm = 3;
  CLI::App* cset = codensity->add_subcommand("set", "finite-set codensity value");
  cset->add_option("--size", cs_size, "object size (0..4)")->capture_default_str();
  cset->add_option("--probe-max", cs_pm, "largest probe size (1..3)")->capture_default_str();

  int cv_q = 2, cv_dim = 2, cv_pm = 2;
  CLI::App* cvec = codensity->add_subcommand("vec", "finite-space codensity value");
  cvec->add_option("--q", cv_q, "field modulus (2, 3, 5)")->capture_default_str();
  cvec->add_option("--dim", cv_dim, "space dimension (0..3)")->capture_default_str();
  cvec->add_option("--probe-max", cv_pm, "largest probe dimension (0..3)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (limit->parsed()) return run_limit_command(opt, limit_file);

  if (check->parsed()) {
    if (prop38->parsed()) return run_check_command(opt, "prop38", {{"size", p38_size}});
    if (set3->parsed())
      return run_check_command(opt, "set3", {{"count", set3_count}, {"seed", set3_seed}});
    if (gh->parsed()) return run_check_command(opt, "galvin-horn", {{"size", gh_size}});
    if (pl->parsed()) return run_check_command(opt, "partition-limit", {{"size", pl_size}});
    if (ddm->parsed())
      return run_check_command(
          opt, "dd-monad", {{"q", ddm_q}, {"max_dim", ddm_maxdim}, {"seed", ddm_seed}});
    if (l42->parsed())
      return run_check_command(opt, "lemma42", {{"q", l42_q}, {"dim", l42_dim}});
    if (l45->parsed())
      return run_check_command(
          opt, "lemma45", {{"q", l45_q}, {"max_dim", l45_maxdim}, {"functor", l45_functor}});
    if (p43->parsed()) return run_check_command(opt, "prop43", {{"q", p43_q}, {"n", p43_n}});
    if (all->parsed()) return run_check_command(opt, "all", ordered_json::object());
  }

  if (codensity->parsed()) {
    if (cset->parsed())
      return run_check_command(opt, "codensity-set",
                               {{"size", cs_size}, {"probe_max", cs_pm}});
    if (cvec->parsed())
      return run_check_command(opt, "codensity-vec",
                               {{"q", cv_q}, {"dim", cv_dim}, {"probe_max", cv_pm}});
  }

  std::fprintf(stderr, "error: no command\n");
  return 2;
}

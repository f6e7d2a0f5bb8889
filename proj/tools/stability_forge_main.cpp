// Batch CLI over the stability library: runs job files, validates them, and
// checks the built-in corpus against its golden reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabforge/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw stabforge::Error("cannot open job file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Overrides {
  std::optional<long> m_cap;
  std::optional<long> budget;
  std::optional<std::string> fd_slope;
};

// Precedence: built-in default < STABILITY_FORGE_BUDGET < job options < flags.
void apply_overrides(stabforge::JobSpec& job, const Overrides& ov, bool job_sets_budget) {
  if (!job_sets_budget) {
    if (const char* env = std::getenv("STABILITY_FORGE_BUDGET")) {
      long v = std::strtol(env, nullptr, 10);
      if (v > 0) {
        job.options.budget.max_pairs = v;
        job.options.budget.max_terms = 10 * v;
      }
    }
  }
  if (ov.m_cap) job.options.m_cap = *ov.m_cap;
  if (ov.budget) {
    job.options.budget.max_pairs = *ov.budget;
    job.options.budget.max_terms = 10 * *ov.budget;
  }
  if (ov.fd_slope) job.options.fd_slope = stabforge::rational_from_string(*ov.fd_slope);
}

int run_job(const std::string& path, const Overrides& ov) {
  std::string text;
  stabforge::JobSpec job;
  try {
    text = read_file(path);
    job = stabforge::parse_jobspec(text);
    bool job_sets_budget = text.find("\"budget\"") != std::string::npos;
    apply_overrides(job, ov, job_sets_budget);
  } catch (const stabforge::Error& e) {
    std::cerr << stabforge::error_json("cli-runner", e.what(), path);
    return kExitInput;
  }
  try {
    std::cout << stabforge::run(job);
    return kExitOk;
  } catch (const stabforge::BudgetExhaustedError& e) {
    std::cerr << stabforge::error_json("groebner-engine", e.what(), path);
    return kExitBudget;
  } catch (const stabforge::Error& e) {
    std::cerr << stabforge::error_json("cli-runner", e.what(), path);
    return kExitInput;
  }
}

int validate_job(const std::string& path) {
  try {
    stabforge::JobSpec job = stabforge::parse_jobspec(read_file(path));
    auto diags = stabforge::validate(job);
    nlohmann::ordered_json out;
    out["diagnostics"] = nlohmann::ordered_json::array();
    for (const auto& d : diags)
      out["diagnostics"].push_back({{"severity", d.severity}, {"message", d.message}});
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  } catch (const stabforge::Error& e) {
    std::cerr << stabforge::error_json("cli-runner", e.what(), path);
    return kExitInput;
  }
}

int corpus_list() {
  for (const auto& entry : stabforge::corpus())
    std::cout << entry.name << ": " << entry.description << "\n";
  return kExitOk;
}

int corpus_run_all() {
  auto mismatches = stabforge::corpus_run_all();
  if (mismatches.empty()) {
    std::cout << "corpus: all " << stabforge::corpus().size() << " entries match their goldens\n";
    return kExitOk;
  }
  for (const auto& m : mismatches)
    std::cout << "MISMATCH " << m.entry << " at " << m.field << ": expected " << m.expected
              << ", got " << m.actual << "\n";
  return kExitInput;
}

int corpus_emit(const std::string& name) {
  for (const auto& entry : stabforge::corpus()) {
    if (entry.name != name) continue;
    try {
      std::cout << stabforge::run(entry.job);
      return kExitOk;
    } catch (const stabforge::Error& e) {
      std::cerr << stabforge::error_json("cli-runner", e.what(), name);
      return kExitInput;
    }
  }
  std::cerr << stabforge::error_json("cli-runner", "unknown corpus entry", name);
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stability-forge: exact GIT stability invariants of projective varieties"};
  app.require_subcommand(1);

  Overrides ov;
  std::string job_path;

  auto* run_cmd = app.add_subcommand("run", "run a job file and print the JSON report");
  run_cmd->add_option("job", job_path, "path to a JobSpec JSON file")->required();
  run_cmd->add_option("--m-cap", ov.m_cap, "interpolation cap on m");
  run_cmd->add_option("--budget", ov.budget, "Groebner pair budget (terms cap = 10x)");
  run_cmd->add_option("--fd-slope", ov.fd_slope, "slope of f_D as a rational \"p/q\"");

  std::string validate_path;
  auto* val_cmd = app.add_subcommand("validate", "pre-flight diagnostics for a job file");
  val_cmd->add_option("job", validate_path, "path to a JobSpec JSON file")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in corpus with golden reports");
  std::string emit_name;
  auto* list_cmd = corpus_cmd->add_subcommand("list", "list corpus entries");
  auto* all_cmd = corpus_cmd->add_subcommand("run-all", "recompute and compare all goldens");
  auto* emit_cmd = corpus_cmd->add_subcommand("emit", "print the current report for one entry");
  emit_cmd->add_option("name", emit_name, "corpus entry name")->required();
  corpus_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (run_cmd->parsed()) return run_job(job_path, ov);
  if (val_cmd->parsed()) return validate_job(validate_path);
  if (corpus_cmd->parsed()) {
    if (list_cmd->parsed()) return corpus_list();
    if (all_cmd->parsed()) return corpus_run_all();
    if (emit_cmd->parsed()) return corpus_emit(emit_name);
  }
  return kExitInput;
}

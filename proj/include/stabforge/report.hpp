#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabforge/chow.hpp"
#include "stabforge/hypersurface.hpp"

namespace stabforge {

enum class Task { hilbert, weights, futaki, lu, chow, constants, report };

std::string task_name(Task t);
std::optional<Task> task_from_name(const std::string& name);

struct JobOptions {
  long m_cap = 40;
  Budget budget;
  Rational fd_slope = Rational(0);  // mu(lambda, f_D) stays an input parameter
};

struct JobSpec {
  int variables = 0;
  std::vector<std::string> generators;
  std::vector<long> weight;
  std::vector<Task> tasks;  // canonicalized: sorted, deduplicated
  JobOptions options;
};

struct Diagnostic {
  std::string severity;  // "warning" | "error"
  std::string message;
};

// Traceless projection of a weight vector, rescaled to integers.
// normalized = scale * (w - shift * 1); lambda-covariant outputs are
// divided back by `scale`.
struct WeightNormalization {
  OnePSG normalized;
  Rational scale;  // positive
  Rational shift;
  bool changed = false;
};

WeightNormalization normalize_weight(const std::vector<long>& raw);

// Strict JSON -> JobSpec (schema in docs/jobspec.schema.json). Throws Error.
JobSpec parse_jobspec(const std::string& json_text);

// Pre-flight checks; never throws. Error-severity diagnostics make run() refuse.
std::vector<Diagnostic> validate(const JobSpec& job);

// Executes the requested tasks and serializes the StabilityReport with
// fixed key order and "p/q" rational formatting; identical jobs produce
// identical bytes. Throws Error (input) or BudgetExhaustedError.
std::string run(const JobSpec& job);

// Structured error object for the CLI (module, message, input fragment).
std::string error_json(const std::string& module, const std::string& message,
                       const std::string& fragment);

struct CorpusEntry {
  std::string name;
  std::string description;
  JobSpec job;
  std::string golden;  // frozen report bytes
};

const std::vector<CorpusEntry>& corpus();

struct CorpusMismatch {
  std::string entry;
  std::string field;  // JSON pointer of the first differing field
  std::string expected;
  std::string actual;
};

// Recomputes every corpus entry and compares against its golden bytes.
std::vector<CorpusMismatch> corpus_run_all();

// Field-level comparison of two report documents (exposed for tests).
std::vector<CorpusMismatch> compare_reports(const std::string& entry, const std::string& golden,
                                            const std::string& actual);

}  // namespace stabforge

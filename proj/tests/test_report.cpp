#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "stabforge/report.hpp"

using namespace stabforge;
using ordered_json = nlohmann::ordered_json;

namespace {

JobSpec conic_job(std::vector<Task> tasks, std::vector<long> w = {1, -1, 0}) {
  JobSpec job;
  job.variables = 3;
  job.generators = {"x0*x2 - x1^2"};
  job.weight = std::move(w);
  job.tasks = std::move(tasks);
  std::sort(job.tasks.begin(), job.tasks.end());
  return job;
}

}  // namespace

TEST_CASE("conic futaki+lu report carries the frozen values") {
  std::string out = run(conic_job({Task::futaki, Task::lu}));
  ordered_json j = ordered_json::parse(out);
  CHECK(j["F1"] == "3/8");
  CHECK(j["hypersurface"]["lu_slope"] == "3/2");
  CHECK(j["hypersurface"]["mu_lambda_f"] == "1");
  CHECK(j["hypersurface"]["refined_futaki"] == "3/2");
  CHECK(j["hypersurface"]["multiplicity_free"] == true);
  CHECK_FALSE(j.contains("hilbert"));
  CHECK_FALSE(j.contains("verdicts"));
}

TEST_CASE("twisted cubic hilbert task") {
  JobSpec job;
  job.variables = 4;
  job.generators = {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"};
  job.weight = {0, 0, 0, 0};
  job.tasks = {Task::hilbert};
  ordered_json j = ordered_json::parse(run(job));
  CHECK(j["hilbert"]["P"] == "3*m + 1");
  CHECK(j["hilbert"]["n"] == 1);
  CHECK(j["hilbert"]["d"] == 3);
  CHECK(j["hilbert"]["mu"] == "2/3");
}

TEST_CASE("empty task list is an input error") {
  JobSpec job = conic_job({});
  auto diags = validate(job);
  bool saw_error = false;
  for (const auto& d : diags) saw_error |= d.severity == "error";
  CHECK(saw_error);
  CHECK_THROWS_AS(run(job), Error);
}

TEST_CASE("validate reports non-traceless weights with the applied rescale") {
  JobSpec job = conic_job({Task::futaki}, {1, 0, 0});
  auto diags = validate(job);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].severity == "warning");
  CHECK(diags[0].message.find("[2,-1,-1]") != std::string::npos);
  CHECK(diags[0].message.find("divided by 3") != std::string::npos);

  WeightNormalization norm = normalize_weight({1, 0, 0});
  CHECK(norm.normalized == OnePSG({2, -1, -1}));
  CHECK(norm.scale == Rational(3));
  CHECK(norm.shift == make_rational(1, 3));
}

TEST_CASE("lambda-covariant outputs are divided back by the rescale factor") {
  // w = (1,0,0) normalizes to (2,-1,-1) with scale 3; F1(2,-1,-1)/3 must be
  // reported. Independent check: F1 is shift-invariant, so F1(1,0,0) as a
  // rational-weight limit equals F1(3,0,0)/3 = F1(2,-1,-1)/3.
  ordered_json with_normalization =
      ordered_json::parse(run(conic_job({Task::futaki}, {1, 0, 0})));
  ordered_json traceless = ordered_json::parse(run(conic_job({Task::futaki}, {2, -1, -1})));
  Rational scaled = rational_from_string(with_normalization["F1"].get<std::string>());
  Rational plain = rational_from_string(traceless["F1"].get<std::string>());
  CHECK(scaled == plain / Rational(3));
}

TEST_CASE("validate flags non-homogeneous generators and trivial ideals") {
  JobSpec job = conic_job({Task::hilbert});
  job.generators = {"x0 + x1^2"};
  auto diags = validate(job);
  REQUIRE_FALSE(diags.empty());
  CHECK(diags[0].severity == "error");
  CHECK(diags[0].message.find("non-homogeneous generator at index 0") != std::string::npos);

  JobSpec homog = conic_job({Task::hilbert});
  CHECK(validate(homog).empty());

  JobSpec trivial = conic_job({Task::hilbert});
  trivial.generators = {"0"};
  auto tdiags = validate(trivial);
  REQUIRE(tdiags.size() == 1);
  CHECK(tdiags[0].severity == "warning");
  CHECK(tdiags[0].message.find("trivial") != std::string::npos);
}

TEST_CASE("byte determinism within a process") {
  JobSpec job = conic_job({Task::report});
  CHECK(run(job) == run(job));
}

TEST_CASE("task order does not change the output bytes") {
  std::string a = run(conic_job({Task::futaki, Task::lu, Task::hilbert}));
  std::string b = run(conic_job({Task::hilbert, Task::lu, Task::futaki}));
  CHECK(a == b);
}

TEST_CASE("jobspec JSON parsing is strict") {
  CHECK_THROWS_AS(parse_jobspec("not json"), Error);
  CHECK_THROWS_AS(parse_jobspec("{\"variables\": 3}"), Error);
  CHECK_THROWS_AS(parse_jobspec(R"({"variables": 3, "generators": [], "weight": [],
                                    "tasks": [], "surprise": 1})"),
                  Error);
  CHECK_THROWS_AS(parse_jobspec(R"({"variables": 3, "generators": [], "weight": [0,0,0],
                                    "tasks": ["nope"]})"),
                  Error);
  JobSpec ok = parse_jobspec(R"({"variables": 3, "generators": ["x0*x2 - x1^2"],
                                 "weight": [1,-1,0], "tasks": ["futaki","futaki","lu"],
                                 "options": {"m_cap": 30, "budget": 5000, "fd_slope": "1/2"}})");
  CHECK(ok.tasks == std::vector<Task>{Task::futaki, Task::lu});
  CHECK(ok.options.m_cap == 30);
  CHECK(ok.options.budget.max_pairs == 5000);
  CHECK(ok.options.fd_slope == make_rational(1, 2));
}

TEST_CASE("every rational in the output round-trips through the parser") {
  ordered_json j = ordered_json::parse(run(conic_job({Task::report})));
  std::function<void(const ordered_json&)> walk = [&](const ordered_json& node) {
    if (node.is_object() || node.is_array()) {
      for (const auto& child : node) walk(child);
      return;
    }
    if (!node.is_string()) return;
    std::string s = node.get<std::string>();
    if (s.empty() || (!std::isdigit(static_cast<unsigned char>(s[0])) && s[0] != '-')) return;
    if (s.find_first_not_of("-0123456789/") != std::string::npos) return;
    Rational q = rational_from_string(s);
    CHECK(to_string(q) == s);
  };
  walk(j);
}

TEST_CASE("corpus goldens match recomputation") {
  auto mismatches = corpus_run_all();
  for (const auto& m : mismatches)
    MESSAGE(m.entry, " at ", m.field, ": expected ", m.expected, " got ", m.actual);
  CHECK(mismatches.empty());
}

TEST_CASE("tampered goldens are reported field by field") {
  const CorpusEntry& entry = corpus().front();
  std::string actual = run(entry.job);
  std::string tampered = actual;
  auto pos = tampered.find("\"3/8\"");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 5, "\"7/8\"");
  auto diffs = compare_reports(entry.name, tampered, actual);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].field == "/F1");
  CHECK(diffs[0].expected == "\"7/8\"");
  CHECK(diffs[0].actual == "\"3/8\"");
}

TEST_CASE("corpus list is nonempty with descriptions") {
  REQUIRE_FALSE(corpus().empty());
  for (const auto& e : corpus()) {
    CHECK_FALSE(e.name.empty());
    CHECK_FALSE(e.description.empty());
  }
}

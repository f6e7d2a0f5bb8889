#include "stabforge/report.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace stabforge {

using ordered_json = nlohmann::ordered_json;

std::string task_name(Task t) {
  switch (t) {
    case Task::hilbert: return "hilbert";
    case Task::weights: return "weights";
    case Task::futaki: return "futaki";
    case Task::lu: return "lu";
    case Task::chow: return "chow";
    case Task::constants: return "constants";
    case Task::report: return "report";
  }
  return "?";
}

std::optional<Task> task_from_name(const std::string& name) {
  for (Task t : {Task::hilbert, Task::weights, Task::futaki, Task::lu, Task::chow,
                 Task::constants, Task::report})
    if (task_name(t) == name) return t;
  return std::nullopt;
}

WeightNormalization normalize_weight(const std::vector<long>& raw) {
  const long nv = static_cast<long>(raw.size());
  long trace = std::accumulate(raw.begin(), raw.end(), 0L);
  if (trace == 0) {
    return WeightNormalization{OnePSG(raw), Rational(1), Rational(0), false};
  }
  Rational shift = make_rational(trace, nv);
  std::vector<long> v(raw.size());
  long g = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    v[i] = nv * raw[i] - trace;
    g = std::gcd(g, std::abs(v[i]));
  }
  if (g == 0) {
    // w is a multiple of (1,...,1): trivial traceless projection.
    return WeightNormalization{OnePSG(std::vector<long>(raw.size(), 0)), Rational(1), shift, true};
  }
  for (auto& x : v) x /= g;
  Rational scale = make_rational(nv, g);
  return WeightNormalization{OnePSG(std::move(v)), scale, shift, true};
}

namespace {

std::string fragment_of(const ordered_json& j) {
  std::string s = j.dump();
  if (s.size() > 120) s = s.substr(0, 117) + "...";
  return s;
}

long expect_integer(const ordered_json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw Error("expected an integer for " + what + ", got " + fragment_of(j));
  return j.get<long>();
}

}  // namespace

JobSpec parse_jobspec(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("job file must be a JSON object");
  static const std::vector<std::string> allowed{"variables", "generators", "weight", "tasks",
                                                "options"};
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error("unknown job key \"" + key + "\"");
  for (const auto& key : {"variables", "generators", "weight", "tasks"})
    if (!j.contains(key)) throw Error(std::string("missing job key \"") + key + "\"");

  JobSpec job;
  job.variables = static_cast<int>(expect_integer(j["variables"], "variables"));
  if (job.variables < 1 || job.variables > 12)
    throw Error("variables must be between 1 and 12");

  if (!j["generators"].is_array()) throw Error("generators must be an array of strings");
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw Error("generators must be an array of strings");
    job.generators.push_back(g.get<std::string>());
  }

  if (!j["weight"].is_array()) throw Error("weight must be an array of integers");
  for (const auto& w : j["weight"]) job.weight.push_back(expect_integer(w, "weight entry"));

  if (!j["tasks"].is_array()) throw Error("tasks must be an array of task names");
  for (const auto& t : j["tasks"]) {
    if (!t.is_string()) throw Error("tasks must be an array of task names");
    auto task = task_from_name(t.get<std::string>());
    if (!task) throw Error("unknown task \"" + t.get<std::string>() + "\"");
    job.tasks.push_back(*task);
  }
  std::sort(job.tasks.begin(), job.tasks.end());
  job.tasks.erase(std::unique(job.tasks.begin(), job.tasks.end()), job.tasks.end());

  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) throw Error("options must be an object");
    static const std::vector<std::string> opt_keys{"m_cap", "budget", "fd_slope"};
    for (const auto& [key, value] : o.items())
      if (std::find(opt_keys.begin(), opt_keys.end(), key) == opt_keys.end())
        throw Error("unknown option \"" + key + "\"");
    if (o.contains("m_cap")) {
      job.options.m_cap = expect_integer(o["m_cap"], "m_cap");
      if (job.options.m_cap < 8 || job.options.m_cap > 200)
        throw Error("m_cap must be between 8 and 200");
    }
    if (o.contains("budget")) {
      const auto& b = o["budget"];
      if (b.is_number_integer()) {
        long v = b.get<long>();
        if (v < 1) throw Error("budget must be positive");
        job.options.budget.max_pairs = v;
        job.options.budget.max_terms = 10 * v;
      } else if (b.is_object()) {
        for (const auto& [key, value] : b.items()) {
          if (key == "max_pairs")
            job.options.budget.max_pairs = expect_integer(value, "max_pairs");
          else if (key == "max_terms")
            job.options.budget.max_terms = expect_integer(value, "max_terms");
          else
            throw Error("unknown budget key \"" + key + "\"");
        }
      } else {
        throw Error("budget must be an integer or {max_pairs, max_terms}");
      }
    }
    if (o.contains("fd_slope")) {
      if (!o["fd_slope"].is_string()) throw Error("fd_slope must be a rational string \"p/q\"");
      job.options.fd_slope = rational_from_string(o["fd_slope"].get<std::string>());
    }
  }
  return job;
}

std::vector<Diagnostic> validate(const JobSpec& job) {
  std::vector<Diagnostic> diags;
  if (job.tasks.empty()) diags.push_back({"error", "tasks must be nonempty"});
  if (static_cast<int>(job.weight.size()) != job.variables)
    diags.push_back({"error", "weight length " + std::to_string(job.weight.size()) +
                                  " does not match variables " + std::to_string(job.variables)});
  bool all_zero = true;
  for (std::size_t i = 0; i < job.generators.size(); ++i) {
    try {
      Polynomial g = parse_polynomial(job.generators[i], job.variables);
      if (!g.is_zero()) all_zero = false;
      if (!g.is_homogeneous())
        diags.push_back({"error", "non-homogeneous generator at index " + std::to_string(i)});
      else if (!g.is_zero() && g.degree() == 0)
        diags.push_back({"error", "constant generator at index " + std::to_string(i) +
                                      " cuts out the empty scheme"});
    } catch (const Error& e) {
      all_zero = false;
      diags.push_back({"error", "generator at index " + std::to_string(i) +
                                    " does not parse: " + e.what()});
    }
  }
  if (all_zero && !job.generators.empty())
    diags.push_back({"warning", "trivial (zero) ideal: every generator is 0"});
  if (static_cast<int>(job.weight.size()) == job.variables) {
    WeightNormalization norm = normalize_weight(job.weight);
    if (norm.changed) {
      std::string w = "[";
      for (std::size_t i = 0; i < norm.normalized.weights.size(); ++i)
        w += (i ? "," : "") + std::to_string(norm.normalized.weights[i]);
      w += "]";
      diags.push_back({"warning", "non-traceless weight: shift by -" + to_string(norm.shift) +
                                      " is non-integral in general, rescaled to " + w +
                                      "; lambda-covariant outputs are divided by " +
                                      to_string(norm.scale)});
    }
  }
  return diags;
}

namespace {

ordered_json diag_json(const std::vector<Diagnostic>& diags) {
  ordered_json arr = ordered_json::array();
  for (const auto& d : diags) arr.push_back({{"severity", d.severity}, {"message", d.message}});
  return arr;
}

ordered_json job_echo(const JobSpec& job, const WeightNormalization& norm,
                      const std::vector<Polynomial>& gens) {
  ordered_json j;
  j["variables"] = job.variables;
  ordered_json gen = ordered_json::array();
  for (const auto& g : gens) gen.push_back(to_string(g));
  j["generators"] = gen;
  j["weight"] = job.weight;
  if (norm.changed) {
    j["weight_normalized"] = norm.normalized.weights;
    j["weight_scale"] = to_string(norm.scale);
    j["weight_shift"] = to_string(norm.shift);
  }
  ordered_json tasks = ordered_json::array();
  for (Task t : job.tasks) tasks.push_back(task_name(t));
  j["tasks"] = tasks;
  j["options"] = {{"m_cap", job.options.m_cap},
                  {"budget",
                   {{"max_pairs", job.options.budget.max_pairs},
                    {"max_terms", job.options.budget.max_terms}}},
                  {"fd_slope", to_string(job.options.fd_slope)}};
  return j;
}

bool has_task(const JobSpec& job, Task t) {
  if (std::find(job.tasks.begin(), job.tasks.end(), Task::report) != job.tasks.end()) return true;
  return std::find(job.tasks.begin(), job.tasks.end(), t) != job.tasks.end();
}

}  // namespace

std::string run(const JobSpec& job) {
  std::vector<Diagnostic> diags = validate(job);
  for (const auto& d : diags)
    if (d.severity == "error") throw Error(d.message);

  const int nv = job.variables;
  std::vector<Polynomial> gens;
  for (const auto& text : job.generators) gens.push_back(parse_polynomial(text, nv));
  Ideal ideal(nv, gens);
  WeightNormalization norm = normalize_weight(job.weight);
  const OnePSG& w = norm.normalized;
  const Rational& k = norm.scale;  // divide lambda-covariant outputs by this
  const long m_cap = job.options.m_cap;
  const Budget& budget = job.options.budget;
  const bool want_report =
      std::find(job.tasks.begin(), job.tasks.end(), Task::report) != job.tasks.end();

  ordered_json out;
  out["job"] = job_echo(job, norm, gens);

  std::optional<HilbertData> hilbert;
  auto need_hilbert = [&]() -> const HilbertData& {
    if (!hilbert) hilbert = hilbert_polynomial(ideal, m_cap, budget);
    return *hilbert;
  };
  std::optional<WeightPolynomial> weightpoly;
  auto need_weights = [&]() -> const WeightPolynomial& {
    if (!weightpoly) weightpoly = weight_polynomial(ideal, w, m_cap, budget);
    return *weightpoly;
  };

  if (has_task(job, Task::hilbert)) {
    const HilbertData& hd = need_hilbert();
    out["hilbert"] = {{"P", to_string(hd.P)},
                      {"claimed_from", hd.P.claimed_from},
                      {"n", hd.n},
                      {"d", hd.d.get_si()},
                      {"b_top", to_string(hd.b_top)},
                      {"b_sub", to_string(hd.b_sub)},
                      {"mu", to_string(hd.mu)}};
  }

  if (has_task(job, Task::weights)) {
    const WeightPolynomial& wp = need_weights();
    out["weightpoly"] = {{"W", to_string(wp.W)},
                         {"claimed_from", wp.W.claimed_from},
                         {"a_top", to_string(wp.a_top)},
                         {"a_sub", to_string(wp.a_sub)}};
  }

  if (has_task(job, Task::futaki)) {
    const HilbertData& hd = need_hilbert();
    const WeightPolynomial& wp = need_weights();
    Rational f1 = Rational(factorial(hd.n)) / (Rational(2) * Rational(hd.d)) *
                  (Rational(2) * wp.a_sub - hd.mu * wp.a_top);
    out["F1"] = to_string(f1 / k);
  }

  bool is_hypersurface = ideal.generators().size() == 1;
  if (has_task(job, Task::lu)) {
    if (!is_hypersurface) {
      if (std::find(job.tasks.begin(), job.tasks.end(), Task::lu) != job.tasks.end())
        throw Error("lu task requires a single-generator (hypersurface) ideal");
      diags.push_back({"warning", "hypersurface block skipped: ideal is not principal"});
    } else {
      HypersurfaceProblem hp(ideal.generators()[0], w);
      ordered_json block;
      block["mu_lambda_f"] = to_string(Rational(hypersurface_slope(hp)) / k);
      block["lu_slope"] = to_string(lu_slope(hp) / k);
      const HilbertData& hd = need_hilbert();
      block["refined_futaki"] = to_string(
          refined_futaki(hp.d, hp.n, hd.mu, Rational(hypersurface_slope(hp)), job.options.fd_slope) /
          k);
      bool mfree = is_multiplicity_free(hp.f, w, budget, m_cap);
      block["multiplicity_free"] = mfree;
      if (mfree)
        block["mabuchi_coefficient"] =
            to_string(mabuchi_coefficient(hp, job.options.fd_slope, m_cap, budget) / k);
      else
        diags.push_back(
            {"warning", "mabuchi coefficient unavailable: degeneration has multiple fibers"});
      out["hypersurface"] = block;
    }
  }

  if (has_task(job, Task::chow) || has_task(job, Task::constants)) {
    ordered_json block;
    const HilbertData& hd = need_hilbert();
    const int N = nv - 1;
    if (has_task(job, Task::chow)) {
      if (hd.n == 1) {
        Rational g_arith = Rational(1) - hd.P.eval(0);
        if (g_arith.get_den() != 1 || g_arith < 0) throw Error("arithmetic genus is not a nonnegative integer");
        long g = g_arith.get_num().get_si();
        Bidegree bd = bidegree_curve(hd.d.get_si(), g);
        block["genus"] = g;
        block["bidegree"] = {{"d1", bd.d1}, {"d2", bd.d2}};
        diags.push_back({"warning",
                         "bidegree uses arithmetic genus 1 - P(0); equal to the geometric genus "
                         "only for smooth curves (caller asserts smoothness)"});
      } else {
        diags.push_back({"warning", "bidegree skipped: defined for curves (n = 1) only"});
      }
    }
    if (has_task(job, Task::constants)) {
      if (hd.n < N) {
        InvariantBundle ib = stability_constants(hd.d.get_si(), hd.n, N, hd.mu);
        block["D"] = ib.D.get_si();
        block["beta"] = ib.beta.get_si();
        block["nu1"] = to_string(ib.nu1);
        block["nu2"] = to_string(ib.nu2);
        block["volume_singular_divisor"] =
            to_string(singular_divisor_volume(ib.d, ib.n, ib.D, ib.beta, ib.mu));
      } else {
        diags.push_back({"warning", "constants skipped: need n < N"});
      }
    }
    if (!block.empty()) out["chow"] = block;
  }

  if (want_report) {
    const HilbertData& hd = need_hilbert();
    Rational slope_rx;
    if (is_hypersurface) {
      HypersurfaceProblem hp(ideal.generators()[0], w);
      slope_rx = Rational(hypersurface_slope(hp)) / k;
    } else {
      slope_rx = chow_slope_via_hilbert(need_weights(), hd.n) / k;
    }
    ChowVerdict v = double_chow_verdict(hd.d.get_si(), hd.n, hd.mu, slope_rx,
                                        job.options.fd_slope);
    ordered_json verdicts = ordered_json::array();
    verdicts.push_back(
        {{"lambda", job.weight},
         {"slope_RX", to_string(slope_rx)},
         {"slope_fD", to_string(job.options.fd_slope)},
         {"margin", to_string(v.margin)},
         {"witness",
          v.verdict == Verdict::stable_witness ? "stable-witness" : "not-stable-witness"},
         {"note", v.note}});
    out["verdicts"] = verdicts;
  }

  out["diagnostics"] = diag_json(diags);
  return out.dump(2) + "\n";
}

std::string error_json(const std::string& module, const std::string& message,
                       const std::string& fragment) {
  ordered_json j;
  j["error"] = {{"module", module}, {"message", message}, {"input", fragment}};
  return j.dump(2) + "\n";
}

namespace {

void first_difference(const ordered_json& a, const ordered_json& b, const std::string& path,
                      std::vector<CorpusMismatch>& out, const std::string& entry) {
  if (!out.empty()) return;
  if (a.type() != b.type()) {
    out.push_back({entry, path.empty() ? "/" : path, a.dump(), b.dump()});
    return;
  }
  if (a.is_object()) {
    for (const auto& [key, value] : a.items()) {
      if (!b.contains(key)) {
        out.push_back({entry, path + "/" + key, value.dump(), "(missing)"});
        return;
      }
      first_difference(value, b.at(key), path + "/" + key, out, entry);
      if (!out.empty()) return;
    }
    for (const auto& [key, value] : b.items())
      if (!a.contains(key)) {
        out.push_back({entry, path + "/" + key, "(missing)", value.dump()});
        return;
      }
    return;
  }
  if (a.is_array()) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      first_difference(a[i], b[i], path + "/" + std::to_string(i), out, entry);
      if (!out.empty()) return;
    }
    if (a.size() != b.size())
      out.push_back({entry, path, "array of " + std::to_string(a.size()),
                     "array of " + std::to_string(b.size())});
    return;
  }
  if (a != b) out.push_back({entry, path.empty() ? "/" : path, a.dump(), b.dump()});
}

}  // namespace

std::vector<CorpusMismatch> compare_reports(const std::string& entry, const std::string& golden,
                                            const std::string& actual) {
  std::vector<CorpusMismatch> out;
  if (golden == actual) return out;
  ordered_json g, a;
  try {
    g = ordered_json::parse(golden);
    a = ordered_json::parse(actual);
  } catch (const std::exception&) {
    out.push_back({entry, "/", "(unparsable golden or report)", "(see bytes)"});
    return out;
  }
  first_difference(g, a, "", out, entry);
  if (out.empty()) out.push_back({entry, "/", "(byte difference in formatting)", "(bytes differ)"});
  return out;
}

std::vector<CorpusMismatch> corpus_run_all() {
  std::vector<CorpusMismatch> out;
  for (const auto& entry : corpus()) {
    std::string actual = run(entry.job);
    auto diffs = compare_reports(entry.name, entry.golden, actual);
    out.insert(out.end(), diffs.begin(), diffs.end());
  }
  return out;
}

}  // namespace stabforge

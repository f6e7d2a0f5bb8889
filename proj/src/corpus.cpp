#include "stabforge/report.hpp"

#include "corpus_golden.hpp"

namespace stabforge {

namespace {

JobSpec make_job(int vars, std::vector<std::string> gens, std::vector<long> weight) {
  JobSpec job;
  job.variables = vars;
  job.generators = std::move(gens);
  job.weight = std::move(weight);
  job.tasks = {Task::report};
  return job;
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> entries;
  entries.push_back({"conic-e1",
                     "smooth plane conic, multiplicity-free degeneration to two lines",
                     make_job(3, {"x0*x2 - x1^2"}, {1, -1, 0}),
                     std::string(kGoldenConicE1)});
  entries.push_back({"conic-e2",
                     "smooth plane conic degenerating to a double line (multiple fiber)",
                     make_job(3, {"x0*x2 - x1^2"}, {1, 1, -2}),
                     std::string(kGoldenConicE2)});
  entries.push_back({"conic-e3",
                     "smooth plane conic under a weight that fixes the initial form (tie)",
                     make_job(3, {"x0*x2 - x1^2"}, {1, 0, -1}),
                     std::string(kGoldenConicE3)});
  entries.push_back({"twisted-cubic-torus",
                     "twisted cubic under its own torus direction (fixed cycle)",
                     make_job(4, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"},
                              {3, 1, -1, -3}),
                     std::string(kGoldenTwistedTorus)});
  entries.push_back({"twisted-cubic-degen",
                     "twisted cubic degenerating under (1,0,0,-1)",
                     make_job(4, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"},
                              {1, 0, 0, -1}),
                     std::string(kGoldenTwistedDegen)});
  entries.push_back({"fermat-cubic-surface",
                     "Fermat cubic surface in P^3 degenerating to three planes",
                     make_job(4, {"x0^3 + x1^3 + x2^3 + x3^3"}, {1, 1, -1, -1}),
                     std::string(kGoldenFermat)});
  entries.push_back({"nodal-plane-cubic",
                     "nodal plane cubic whose initial form is a triple line",
                     make_job(3, {"x1^2*x2 - x0^3 - x0^2*x2"}, {1, 0, -1}),
                     std::string(kGoldenNodalCubic)});
  return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

}  // namespace stabforge

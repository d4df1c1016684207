#include "nnn/verify.hpp"

#include <string>

#include "nnn/error.hpp"

namespace nnn {

ExistenceVerdicts expected_verdicts(const GroupSpec& g) {
  const int n = g.n();
  ExistenceVerdicts v;
  if (g.is_cyclic()) {
    v.normal_non_ci_digraph = n % 8 == 0;
    v.normal_non_ci_graph = n % 8 == 0 && n != 8;
    return v;
  }
  v.nnn_digraph = v.nnn_graph = n % 2 == 0 && n >= 6 && n != 8;
  v.normal_non_ci_digraph = v.normal_non_ci_graph = n % 2 == 0 && n != 2 && n != 4;
  return v;
}

GroupCheck check_group(const GroupSpec& g, bool reduce, unsigned jobs,
                       std::function<void(std::size_t, std::size_t)> progress) {
  SweepOptions opts;
  opts.reduce = reduce;
  opts.jobs = jobs;
  opts.progress = std::move(progress);
  const std::vector<Classification> records = sweep(g, opts);

  GroupCheck check;
  check.group = g;
  check.reduced = reduce;
  check.summary = summarize(records);
  check.expected = expected_verdicts(g);
  check.observed.nnn_digraph = check.summary.nnn > 0;
  check.observed.nnn_graph = check.summary.nnn_graphs > 0;
  check.observed.normal_non_ci_digraph = check.summary.normal_non_ci > 0;
  check.observed.normal_non_ci_graph = check.summary.normal_non_ci_graphs > 0;
  check.passed = check.observed == check.expected;
  if (!check.passed) {
    for (const Classification& r : records) {
      const bool bad_nnn = r.nnn && (r.graph ? !check.expected.nnn_graph : !check.expected.nnn_digraph);
      const bool bad_ci = r.normal && r.ci == CiVerdict::No &&
                          (r.graph ? !check.expected.normal_non_ci_graph
                                   : !check.expected.normal_non_ci_digraph);
      if (bad_nnn || bad_ci) {
        check.counterexample = r;
        break;
      }
    }
  }
  return check;
}

VerifyReport verify_theorem(int theorem, int max_n, unsigned jobs,
                            std::function<void(const GroupSpec&, std::size_t, std::size_t)> progress) {
  VerifyReport report;
  report.theorem = theorem;
  report.max_n = max_n;
  std::vector<std::pair<GroupSpec, bool>> plan;
  if (theorem == 1) {
    if (max_n < 1 || max_n > kMaxExhaustiveOrder)
      throw CapExceeded("theorem 1 verification supports 1 <= max-n <= 16");
    for (int n = 1; n <= max_n; ++n) plan.emplace_back(GroupSpec::cyclic(n), n > kCyclicExhaustiveMax);
  } else if (theorem == 2) {
    if (max_n < 2 || 2 * max_n > kMaxExhaustiveOrder)
      throw CapExceeded("theorem 2 verification supports 2 <= max-n <= 8");
    for (int n = 2; n <= max_n; ++n)
      plan.emplace_back(GroupSpec::dihedral(n), n > kDihedralExhaustiveMax);
  } else {
    throw InvalidArgument("theorem must be 1 or 2");
  }

  report.passed = true;
  for (const auto& [g, reduce] : plan) {
    std::function<void(std::size_t, std::size_t)> step;
    if (progress) step = [&, g = g](std::size_t done, std::size_t total) { progress(g, done, total); };
    report.groups.push_back(check_group(g, reduce, jobs, step));
    report.passed = report.passed && report.groups.back().passed;
  }
  return report;
}

}  // namespace nnn

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nnn/sweep.hpp"

namespace nnn {

/// Existence verdicts a sweep over one group is checked against.
struct ExistenceVerdicts {
  bool nnn_digraph = false;
  bool nnn_graph = false;
  bool normal_non_ci_digraph = false;
  bool normal_non_ci_graph = false;

  friend bool operator==(const ExistenceVerdicts&, const ExistenceVerdicts&) = default;
};

/// Known answers. Cyclic: never NNN; a normal non-CI digraph exists iff
/// 8 | n, a normal non-CI graph iff 8 | n and n != 8. Dihedral D_2n: NNN
/// digraphs and graphs exist iff n >= 6 is even and n != 8; normal non-CI
/// digraphs and graphs exist iff n is even and n not in {2, 4}.
ExistenceVerdicts expected_verdicts(const GroupSpec& g);

struct GroupCheck {
  GroupSpec group = GroupSpec::cyclic(1);
  bool reduced = false;
  SweepSummary summary;
  ExistenceVerdicts expected;
  ExistenceVerdicts observed;
  bool passed = false;
  std::optional<Classification> counterexample;  // first record contradicting the table
};

struct VerifyReport {
  int theorem = 0;
  int max_n = 0;
  std::vector<GroupCheck> groups;
  bool passed = false;
};

// Cyclic sweeps are exhaustive up to this order and orbit-reduced above it;
// dihedral ones up to n = 7.
inline constexpr int kCyclicExhaustiveMax = 12;
inline constexpr int kDihedralExhaustiveMax = 7;

/// Theorem 1: cyclic groups C_1 .. C_max_n (max_n <= 16). Theorem 2:
/// dihedral groups D_4 .. D_(2 max_n) (max_n <= 8).
VerifyReport verify_theorem(int theorem, int max_n, unsigned jobs = 1,
                            std::function<void(const GroupSpec&, std::size_t, std::size_t)>
                                progress = {});

GroupCheck check_group(const GroupSpec& g, bool reduce, unsigned jobs,
                       std::function<void(std::size_t, std::size_t)> progress = {});

}  // namespace nnn

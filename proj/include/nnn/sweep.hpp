#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nnn/classifier.hpp"
#include "nnn/group.hpp"

namespace nnn {

enum class SweepMode { Digraph, Graph };

// Exhaustive sweeps enumerate 2^(|G|-1) sets; reduced ones still scan them.
inline constexpr int kMaxExhaustiveOrder = 16;
inline constexpr int kMaxReducedOrder = 20;

struct SweepOptions {
  SweepMode mode = SweepMode::Digraph;
  bool reduce = false;  // one representative per Aut(G)-orbit of connection sets
  unsigned jobs = 1;
  ClassifyOptions classify;
  // Called from worker threads; must be thread-safe.
  std::function<void(const Analysis&)> inspect;
  // Called with (done, total), serialized by the sweep.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Connection sets as bit masks over element codes (bit c set iff code c is
/// in S), ascending. The identity bit is never set.
std::vector<std::uint64_t> connection_masks(const GroupSpec& g, SweepMode mode, bool reduce);

ElemSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(const ElemSet& s);

/// Classifies every connection set (or orbit representative); output order
/// follows connection_masks and does not depend on `jobs`.
std::vector<Classification> sweep(const GroupSpec& g, const SweepOptions& opts);

struct SweepSummary {
  std::size_t records = 0;
  std::size_t connected = 0;
  std::size_t graphs = 0;
  std::size_t normal = 0;
  std::size_t nnn = 0;
  std::size_t nnn_graphs = 0;
  std::size_t ci = 0;
  std::size_t non_ci = 0;
  std::size_t ci_skipped = 0;
  std::size_t normal_non_ci = 0;
  std::size_t normal_non_ci_graphs = 0;
};

SweepSummary summarize(std::span<const Classification> records);

}  // namespace nnn

#include "nnn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "nnn/error.hpp"

namespace nnn {

ElemSet mask_to_set(std::uint64_t mask) {
  ElemSet s;
  for (std::uint32_t c : vertices_of(mask)) s.push_back(GroupElem{c});
  return s;
}

std::uint64_t set_to_mask(const ElemSet& s) {
  std::uint64_t m = 0;
  for (GroupElem x : s) m |= bit(x.code);
  return m;
}

std::vector<std::uint64_t> connection_masks(const GroupSpec& g, SweepMode mode, bool reduce) {
  const int order = g.order();
  const int limit = reduce ? kMaxReducedOrder : kMaxExhaustiveOrder;
  if (order > limit)
    throw CapExceeded((reduce ? "reduced" : "exhaustive") + std::string(" sweeps support |G| <= ") +
                      std::to_string(limit) + "; got " + g.name());

  std::vector<std::uint32_t> inv(order);
  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(order); ++c)
    inv[c] = inverse(g, GroupElem{c}).code;
  std::vector<std::vector<Point>> auts;
  if (reduce)
    for (const GroupAut& a : aut_group(g))
      if (!a.is_identity()) auts.push_back(a.perm().images());

  auto image = [&](std::uint64_t m, const std::vector<Point>& map) {
    std::uint64_t out = 0;
    for (; m; m &= m - 1) out |= bit(map[std::countr_zero(m)]);
    return out;
  };

  std::vector<std::uint64_t> out;
  const std::uint64_t count = std::uint64_t{1} << (order - 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t m = i << 1;
    if (mode == SweepMode::Graph && image(m, inv) != m) continue;
    if (reduce && std::any_of(auts.begin(), auts.end(),
                              [&](const auto& map) { return image(m, map) < m; }))
      continue;
    out.push_back(m);
  }
  return out;
}

std::vector<Classification> sweep(const GroupSpec& g, const SweepOptions& opts) {
  const std::vector<std::uint64_t> masks = connection_masks(g, opts.mode, opts.reduce);
  std::vector<Classification> results(masks.size());
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex progress_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= masks.size()) return;
      try {
        Analysis an = analyze(g, mask_to_set(masks[i]), opts.classify);
        if (opts.inspect) opts.inspect(an);
        results[i] = std::move(an.record);
      } catch (...) {
        std::lock_guard lock(progress_mutex);
        if (!failure) failure = std::current_exception();
        next.store(masks.size());
        return;
      }
      std::lock_guard lock(progress_mutex);
      ++done;
      if (opts.progress) opts.progress(done, masks.size());
    }
  };

  const unsigned jobs = std::max(1u, static_cast<unsigned>(std::min<std::size_t>(opts.jobs, masks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

SweepSummary summarize(std::span<const Classification> records) {
  SweepSummary s;
  for (const Classification& r : records) {
    ++s.records;
    s.connected += r.connected;
    s.graphs += r.graph;
    s.normal += r.normal;
    s.nnn += r.nnn;
    s.nnn_graphs += r.nnn && r.graph;
    s.ci += r.ci == CiVerdict::Yes;
    s.non_ci += r.ci == CiVerdict::No;
    s.ci_skipped += r.ci == CiVerdict::Skipped;
    s.normal_non_ci += r.normal && r.ci == CiVerdict::No;
    s.normal_non_ci_graphs += r.normal && r.graph && r.ci == CiVerdict::No;
  }
  return s;
}

}  // namespace nnn

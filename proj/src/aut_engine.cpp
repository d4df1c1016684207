#include "nnn/aut_engine.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>

#include "nnn/error.hpp"

namespace nnn {
namespace {

using Cells = std::vector<VertexMask>;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct Refined {
  Cells cells;
  std::uint64_t trace = 0;
};

// Splits every cell by every splitter until a full pass changes nothing. The
// trace hashes each split so that nodes related by an automorphism agree.
Refined refine_cells(const Digraph& g, Cells cells) {
  std::uint64_t trace = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sig;  // (signature, vertex)
  Cells next;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t si = 0; si < cells.size(); ++si) {
      const VertexMask splitter = cells[si];
      next.clear();
      bool split_any = false;
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const VertexMask cell = cells[ci];
        if (std::has_single_bit(cell)) {
          next.push_back(cell);
          continue;
        }
        sig.clear();
        for (VertexMask m = cell; m; m &= m - 1) {
          const auto v = static_cast<std::uint32_t>(std::countr_zero(m));
          const auto out = static_cast<std::uint32_t>(std::popcount(g.out(v) & splitter));
          const auto in = static_cast<std::uint32_t>(std::popcount(g.in(v) & splitter));
          sig.emplace_back((out << 8) | in, v);
        }
        std::sort(sig.begin(), sig.end());
        if (sig.front().first == sig.back().first) {
          next.push_back(cell);
          continue;
        }
        split_any = true;
        trace = mix(trace, (si << 16) | ci);
        VertexMask piece = 0;
        for (std::size_t k = 0; k < sig.size(); ++k) {
          piece |= bit(sig[k].second);
          if (k + 1 == sig.size() || sig[k + 1].first != sig[k].first) {
            trace = mix(trace, (std::uint64_t{sig[k].first} << 8) | std::popcount(piece));
            next.push_back(piece);
            piece = 0;
          }
        }
      }
      if (split_any) {
        cells.swap(next);
        changed = true;
      }
    }
  }
  trace = mix(trace, cells.size());
  return {std::move(cells), trace};
}

Cells individualize(const Cells& cells, std::size_t target, std::uint32_t v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != target) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back(bit(v));
    out.push_back(cells[i] & ~bit(v));
  }
  return out;
}

std::optional<std::size_t> first_nonsingleton(const Cells& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!std::has_single_bit(cells[i])) return i;
  return std::nullopt;
}

VertexMask orbit_mask(std::span<const Perm> gens, std::uint32_t point) {
  VertexMask seen = bit(point);
  std::vector<std::uint32_t> queue{point};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const Perm& g : gens) {
      const std::uint32_t y = g[queue[head]];
      if (!(seen & bit(y))) {
        seen |= bit(y);
        queue.push_back(y);
      }
    }
  return seen;
}

class Search {
 public:
  Search(const Digraph& g, std::vector<Perm> known) : g_(g), gens_(std::move(known)) {}

  AutResult run() {
    build_first_path();
    const std::size_t levels = base_.size();
    std::vector<std::uint64_t> orbit_sizes(levels, 1);
    for (std::size_t i = levels; i-- > 0;) {
      std::vector<Perm> stab;
      for (const Perm& p : gens_)
        if (fixes_prefix(p, i)) stab.push_back(p);
      VertexMask orbit = orbit_mask(stab, base_[i]);
      for (std::uint32_t w : vertices_of(path_[i].cells[targets_[i]])) {
        if (orbit & bit(w)) continue;
        if (auto found = search_below(path_[i].cells, i, w)) {
          gens_.push_back(*found);
          stab.push_back(std::move(*found));
          orbit = orbit_mask(stab, base_[i]);
        }
      }
      orbit_sizes[i] = static_cast<std::uint64_t>(std::popcount(orbit));
    }

    AutResult result;
    result.order = 1;
    for (std::uint64_t s : orbit_sizes) result.order *= s;
    result.generators = std::move(gens_);
    result.base = base_;
    result.orbit_sizes = std::move(orbit_sizes);
    return result;
  }

 private:
  void build_first_path() {
    Refined node = refine_cells(g_, Cells{all_vertices()});
    while (true) {
      path_.push_back(node);
      auto target = first_nonsingleton(node.cells);
      if (!target) break;
      const auto b = static_cast<std::uint32_t>(std::countr_zero(node.cells[*target]));
      targets_.push_back(*target);
      base_.push_back(b);
      node = refine_cells(g_, individualize(node.cells, *target, b));
    }
    for (VertexMask cell : path_.back().cells)
      leaf_.push_back(static_cast<std::uint32_t>(std::countr_zero(cell)));
  }

  VertexMask all_vertices() const {
    return g_.size() == 64 ? ~VertexMask{0} : (bit(g_.size()) - 1);
  }

  bool fixes_prefix(const Perm& p, std::size_t len) const {
    for (std::size_t j = 0; j < len; ++j)
      if (p[base_[j]] != base_[j]) return false;
    return true;
  }

  // Looks for an automorphism mapping the first path's node at depth
  // `level + 1` onto the node reached by individualizing w instead of
  // base_[level].
  std::optional<Perm> search_below(const Cells& cells, std::size_t level, std::uint32_t w) {
    Refined node = refine_cells(g_, individualize(cells, targets_[level], w));
    const Refined& ref = path_[level + 1];
    if (node.trace != ref.trace || node.cells.size() != ref.cells.size()) return std::nullopt;
    for (std::size_t k = 0; k < node.cells.size(); ++k)
      if (std::popcount(node.cells[k]) != std::popcount(ref.cells[k])) return std::nullopt;

    if (level + 1 == targets_.size()) {
      std::vector<Point> images(g_.size());
      for (std::size_t k = 0; k < leaf_.size(); ++k)
        images[leaf_[k]] = static_cast<Point>(std::countr_zero(node.cells[k]));
      Perm candidate(std::move(images));
      if (g_.is_automorphism(candidate)) return candidate;
      return std::nullopt;
    }
    for (std::uint32_t u : vertices_of(node.cells[targets_[level + 1]]))
      if (auto found = search_below(node.cells, level + 1, u)) return found;
    return std::nullopt;
  }

  const Digraph& g_;
  std::vector<Perm> gens_;
  std::vector<Refined> path_;
  std::vector<std::size_t> targets_;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint32_t> leaf_;
};

}  // namespace

Partition Partition::unit(std::size_t vertices) {
  if (vertices == 0 || vertices > kMaxVertices)
    throw InvalidArgument("partition size must be in 1..64");
  return Partition(vertices, {vertices == 64 ? ~VertexMask{0} : bit(vertices) - 1});
}

Partition::Partition(std::size_t vertices, std::vector<VertexMask> cells)
    : vertices_(vertices), cells_(std::move(cells)) {
  if (vertices_ == 0 || vertices_ > kMaxVertices)
    throw InvalidArgument("partition size must be in 1..64");
  VertexMask seen = 0;
  for (VertexMask c : cells_) {
    if (c == 0) throw InvalidArgument("partition has an empty cell");
    if (seen & c) throw InvalidArgument("partition cells overlap");
    seen |= c;
  }
  const VertexMask all = vertices_ == 64 ? ~VertexMask{0} : bit(vertices_) - 1;
  if (seen != all) throw InvalidArgument("partition cells do not cover the vertex set");
}

Partition refine(const Digraph& g, const Partition& p) {
  if (p.vertices() != g.size()) throw InvalidArgument("refine: partition size mismatch");
  return Partition(g.size(), refine_cells(g, p.cells()).cells);
}

AutResult automorphism_group(const Digraph& g, std::span<const Perm> known) {
  std::vector<Perm> seeds;
  for (const Perm& p : known) {
    if (!g.is_automorphism(p)) throw InvalidArgument("seed permutation is not an automorphism");
    if (!p.is_identity()) seeds.push_back(p);
  }
  return Search(g, std::move(seeds)).run();
}

AutResult automorphism_group(const CayleyDigraph& cay) {
  return automorphism_group(cay.digraph(), right_regular(cay.group()).generators());
}

AutResult brute_force_aut(const Digraph& g) {
  if (g.size() > 8) throw CapExceeded("brute_force_aut is limited to 8 vertices");
  std::vector<Point> images(g.size());
  std::iota(images.begin(), images.end(), Point{0});
  AutResult result;
  do {
    Perm p(images);
    if (g.is_automorphism(p)) result.generators.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  result.order = result.generators.size();
  return result;
}

std::optional<std::vector<Perm>> enumerate_elements(const AutResult& aut, std::size_t degree,
                                                    std::size_t cap) {
  if (aut.order > cap) return std::nullopt;
  if (aut.base.empty() && aut.order != 1) {
    // No base recorded (brute-force results): fall back to product closure.
    ClosureResult r = closure(aut.generators, cap, degree);
    if (r.overflow) return std::nullopt;
    return std::move(r.elements);
  }
  std::vector<Perm> level_elems{Perm::identity(degree)};
  for (std::size_t i = aut.base.size(); i-- > 0;) {
    // Transversal of the basic orbit of base[i] under the generators fixing
    // base[0..i-1].
    std::vector<Perm> stab;
    for (const Perm& p : aut.generators) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = p[aut.base[j]] == aut.base[j];
      if (fixes) stab.push_back(p);
    }
    std::vector<Perm> transversal{Perm::identity(degree)};
    std::vector<bool> reached(degree, false);
    reached[aut.base[i]] = true;
    for (std::size_t head = 0; head < transversal.size(); ++head)
      for (const Perm& s : stab) {
        Perm next = transversal[head] * s;
        if (!reached[next[aut.base[i]]]) {
          reached[next[aut.base[i]]] = true;
          transversal.push_back(std::move(next));
        }
      }
    if (transversal.size() != aut.orbit_sizes[i])
      throw InternalError("basic orbit length disagrees with the search");
    std::vector<Perm> next_elems;
    next_elems.reserve(level_elems.size() * transversal.size());
    for (const Perm& h : level_elems)
      for (const Perm& t : transversal) next_elems.push_back(h * t);
    level_elems = std::move(next_elems);
  }
  std::sort(level_elems.begin(), level_elems.end());
  return level_elems;
}

PermGroup to_perm_group(const AutResult& aut, std::size_t degree, std::size_t cap) {
  if (auto elems = enumerate_elements(aut, degree, cap))
    return PermGroup(degree, aut.generators, std::move(*elems));
  return PermGroup(degree, aut.generators);
}

}  // namespace nnn

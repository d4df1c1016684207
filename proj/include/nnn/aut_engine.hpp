#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nnn/cayley.hpp"
#include "nnn/count.hpp"
#include "nnn/digraph.hpp"
#include "nnn/perm.hpp"

namespace nnn {

/// Ordered partition of the vertex set; each cell is a vertex mask.
class Partition {
 public:
  static Partition unit(std::size_t vertices);
  /// Cells must be nonempty, disjoint, and cover {0, ..., vertices-1}.
  Partition(std::size_t vertices, std::vector<VertexMask> cells);

  std::size_t vertices() const { return vertices_; }
  const std::vector<VertexMask>& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }
  std::vector<std::uint32_t> cell(std::size_t i) const { return vertices_of(cells_[i]); }
  bool is_discrete() const { return cells_.size() == vertices_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t vertices_ = 0;
  std::vector<VertexMask> cells_;
};

/// Coarsest equitable refinement: every vertex of a cell has the same number
/// of out- and in-neighbours in every cell. A cell splits into pieces ordered
/// by ascending (out-count, in-count) signature, placed where the cell was.
Partition refine(const Digraph& g, const Partition& p);

struct AutResult {
  std::vector<Perm> generators;
  BigCount order;
  std::vector<std::uint32_t> base;         // individualized vertices along the first path
  std::vector<std::uint64_t> orbit_sizes;  // basic orbit lengths, one per base point
};

/// Full automorphism group of a digraph on at most 64 vertices. `known`
/// automorphisms seed the generator list and prune the search.
AutResult automorphism_group(const Digraph& g, std::span<const Perm> known = {});

/// Seeds the search with R(G).
AutResult automorphism_group(const CayleyDigraph& cay);

/// Checks all n! permutations; generators are every automorphism. n <= 8.
AutResult brute_force_aut(const Digraph& g);

/// Elements of the group as products of basic transversals along the search
/// base, sorted. Returns nullopt when the order exceeds `cap`.
std::optional<std::vector<Perm>> enumerate_elements(const AutResult& aut, std::size_t degree,
                                                    std::size_t cap = kDefaultElementCap);

/// The result as a permutation group; elements are prefilled when they fit
/// under `cap`.
PermGroup to_perm_group(const AutResult& aut, std::size_t degree,
                        std::size_t cap = kDefaultElementCap);

}  // namespace nnn

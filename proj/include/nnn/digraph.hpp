#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nnn/perm.hpp"

namespace nnn {

inline constexpr std::size_t kMaxVertices = 64;

using VertexMask = std::uint64_t;

/// A digraph on at most 64 vertices with out- and in-neighbourhoods stored as
/// bit rows.
class Digraph {
 public:
  explicit Digraph(std::size_t vertices);

  std::size_t size() const { return out_.size(); }
  void add_arc(std::size_t u, std::size_t v);
  bool has_arc(std::size_t u, std::size_t v) const { return (out_[u] >> v) & 1u; }
  VertexMask out(std::size_t v) const { return out_[v]; }
  VertexMask in(std::size_t v) const { return in_[v]; }

  std::size_t arc_count() const;
  bool is_symmetric() const;
  bool is_weakly_connected() const;
  bool is_automorphism(const Perm& p) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<VertexMask> out_;
  std::vector<VertexMask> in_;
};

inline VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

/// Vertices of a mask in ascending order.
std::vector<std::uint32_t> vertices_of(VertexMask m);

}  // namespace nnn
